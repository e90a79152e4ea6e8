"""The Riccati system and its first integral.

With y = -x (x - eps) w'/w the linear equation becomes a planar polynomial
vector field.  Each basis function gives an invariant curve y = rho_i(x), and
the first integral I^{eps+} = kappa (w2/w3)(y - rho2)/(y - rho3) is constant
along trajectories.
"""

import math

from hypconfluence import (BranchedPoint, Params, first_integral_eval, lens_point, rho_eval,
                           singular_points)
from hypconfluence.paths import transport_riccati

p = Params(0.3, 0.7, BranchedPoint(0.05, math.pi / 6))
e = p.eps_value

# %% singular points and the quotient of eigenvalues at each
for sp in singular_points(p):
    x, y = sp.location
    print(f"({x:.4f}, {y:.4f}): eigenvalue quotient {sp.eigen_quotient:.6f}")

# %% invariant curves through (0, 1) and (eps, 0)
print(f"\nrho2(0) = {rho_eval(p, 2, 0).value:.3e}, rho3(eps) = {rho_eval(p, 3, e).value:.3e}")

# %% the first integral along trajectories in real time from the lens midpoint
x0 = lens_point(p, 0.5).value()
for y0 in (0.3, 0.5 + 0.2j, -1.0):
    I0 = first_integral_eval(p, "+", (x0, y0)).value
    print(f"\ny(0) = {y0}: I = {I0:.6e}")
    for t1 in (0.5, 1.0, 2.0):
        r = transport_riccati(p, (x0, y0), t_span=(0, t1))
        x, y = r.final_state
        I = first_integral_eval(p, "+", (x, y)).value
        print(f"  t = {t1}: (x, y) = ({complex(x):.4f}, {complex(y):.4f}), |I/I0 - 1| = {abs(I / I0 - 1):.1e}")
