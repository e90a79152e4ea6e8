"""Monodromy of the unfolded equation: closed form against ODE transport.

The equation x(x - eps) w'' + (1 - eps + (a+b+1) x) w' + ab w = 0 has regular
singular points at 0 and eps.  The monodromy matrices of the basis
B+ = (kappa+ w2, w3) are written with Gamma functions; the oracle continues
the same basis along circles with a multiprecision Taylor integrator.
"""

import time

from hypconfluence import BranchedPoint, Params, monodromy_matrix
from hypconfluence.paths import monodromy_via_integration, working_dps

p = Params(0.3 + 0.1j, 0.6, BranchedPoint(0.05, 0.3))
print(f"a = {p.a}, b = {p.b}, eps = {p.eps_value:.4f}")
print(f"working precision: {working_dps(p)} digits\n")

for around in ("0", "eps"):
    ana = monodromy_matrix(p, "+", around)
    t0 = time.perf_counter()
    num = monodromy_via_integration(p, "+", around)
    dt = time.perf_counter() - t0
    print(f"loop around {around}:")
    for name in ("m11", "m12", "m21", "m22"):
        print(f"  {name}: closed form {getattr(ana, name):.6e}   transport {getattr(num, name):.6e}")
    print(f"  max entry error {num.max_abs_diff(ana, ana):.1e} ({dt:.1f} s)\n")

# the diagonal entries are the local exponential factors; their size
# e^{2 pi |Im 1/eps|} is why the transport runs in extended precision
