"""Unfolded Stokes multipliers and their limits as eps -> 0.

For eps in the sector S+ the multipliers lambda+(eps), mu+(eps) come from
the connection coefficients of the bases w1..w4.  Their product does not
depend on eps, and each one tends to the Stokes multiplier of the confluent
equation at eps = 0.
"""

import cmath
import math

from hypconfluence import (Params, BranchedPoint, product_L, product_L_closed,
                           stokes_limits, unfolded_multipliers)

a, b = 0.3 + 0.1j, 0.7 - 0.2j

# %% limits at eps = 0
lim = stokes_limits(a, b)
lam0, mu0 = lim.lam, lim.mu
print(f"lambda(0) = {lam0:.10f}")
print(f"mu(0)     = {mu0:.10f}")

# %% approach along the bisector of S+: the errors shrink linearly in |eps|
print(f"\n{'|eps|':>8} {'|lambda+ - lambda|':>20} {'|mu+ - mu|':>14}")
for k in range(1, 7):
    p = Params(a, b, BranchedPoint(10.0 ** -k, math.pi / 4))
    s = unfolded_multipliers(p, "+")
    print(f"{10.0 ** -k:8.0e} {abs(s.lam - lam0):20.3e} {abs(s.mu - mu0):14.3e}")

# %% the product lambda mu is the same for every eps, in both sectors
L = product_L_closed(a, b)
print(f"\nclosed form -(1-e^(-2 pi i a))(1-e^(-2 pi i b)) = {L:.12f}")
for sign, arg in (("+", 0.4), ("-", math.pi + 0.4)):
    for r in (0.1, 0.01, 0.001):
        p = Params(a, b, BranchedPoint(r, arg))
        print(f"  sector {sign}, eps = {cmath.rect(r, arg):.4g}: residual {abs(product_L(p, sign) - L):.1e}")
