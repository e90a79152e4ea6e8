"""Borel sums of the confluent solutions and their Stokes jumps.

At eps = 0 the formal solution 2F0(a, b; -x) is Borel summable in every
direction except the Stokes line; the lateral sums g+ and g- differ by the
Stokes multiplier times the small exponential solution.  The ratio H^{eps+}
of basis functions converges to the corresponding ratio H0 of Borel sums.
"""

import math

from hypconfluence import (BranchedPoint, H0_eval, H_eps, Params, g_closed_form,
                           laplace_sum, stokes_jump_g, stokes_limits)

a, b = 0.3 + 0.1j, 0.7 - 0.2j

# %% Laplace quadrature of the Borel transform against the 1F1 closed form
for x in (0.05, 0.2 + 0.1j, 0.5j):
    q = laplace_sum(a, b, x)
    c = g_closed_form(a, b, x).value
    print(f"x = {x}: quadrature {q.value:.12f}, closed form {c:.12f}")

# %% Euler's series: sum (-1)^n n! x^n, summed to e^{1/x} E1(1/x)/x
print(f"\nEuler series at x = 0.1: {g_closed_form(1, 1, 0.1).value.real:.10f}")

# %% the jump across the Stokes line arg x = -pi
lam = stokes_limits(a, b).lam
x = BranchedPoint(0.05, -math.pi - 0.2)
jump = stokes_jump_g(a, b, x)
print(f"\nlambda = {lam:.6f}")
print(f"g+ - g- at x = 0.05 e^(-i(pi+0.2)): {jump:.6e} (exponentially small in 1/|x|)")

# %% H^{eps+} -> H0 as eps shrinks along the bisector
x = 0.2 + 0.05j
h0 = H0_eval(a, b, x).value
print(f"\nH0({x}) = {h0:.10f}")
for k in range(7):
    r = 1e-2 * 2.0 ** -k
    p = Params(a, b, BranchedPoint(r, math.pi / 4))
    h = H_eps(p, "+", x).value
    print(f"  |eps| = {r:.2e}: |H^eps+ - H0| = {abs(h - h0):.3e}")
