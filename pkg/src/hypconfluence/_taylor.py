"""Power-series (Taylor) continuation for second-order linear ODEs

    P(z) w'' + Q(z) w' + R w = 0,   P quadratic, Q linear, R constant.

Re-expanding at each centre gives a three-term recurrence for the Taylor
coefficients, so one step costs O(N) operations.  Arithmetic is duck typed:
the same code runs on Python complex numbers or on multiprecision
(mpmath or gmpy2) complex values.
"""

from __future__ import annotations

from .core import StepUnderflow


class LinearODE:
    def __init__(self, P, Q, R, singular_points):
        # P = (P0, P1, P2), Q = (Q0, Q1), R = R0 in the global variable z
        self.P = P
        self.Q = Q
        self.R = R
        self.singular_points = list(singular_points)

    def local(self, z0):
        P0, P1, P2 = self.P
        Q0, Q1 = self.Q
        p0 = P0 + (P1 + P2 * z0) * z0
        p1 = P1 + 2 * P2 * z0
        q0 = Q0 + Q1 * z0
        return p0, p1, P2, q0, Q1, self.R

    def distance(self, z):
        return min(abs(z - s) for s in self.singular_points)


def taylor_step(ode, z0, states, h, tol, max_terms=20000):
    """Advance each (w, w') in ``states`` from z0 to z0 + h.

    Returns (new_states, error_bound), the bound relative to each state.
    ``h`` must lie well inside the disk of convergence at z0.
    """
    p0, p1, p2, q0, q1, r0 = ode.local(z0)
    m = len(states)
    cprev = [s[0] for s in states]      # c_n
    ccur = [s[1] for s in states]       # c_{n+1}
    hp = h                              # h^{n+1}
    wsum = [s[0] + s[1] * h for s in states]
    dsum = [s[1] for s in states]
    small = 0
    n = 0
    err = 0
    # each state is judged against its own size: the solutions transported
    # together can differ by many orders of magnitude
    scales = [max(abs(s[0]), abs(s[1]) * abs(h)) for s in states]
    if max(scales) == 0:
        return [(s[0], s[1]) for s in states], 0
    while True:
        # coefficient of t^n in the ODE gives c_{n+2}
        A = (p1 * n + q0) * (n + 1)
        B = (p2 * n + q1) * n - p2 * n + r0
        D = p0 * ((n + 2) * (n + 1))
        nxt = [-(A * ccur[k] + B * cprev[k]) / D for k in range(m)]
        hn = hp * h                     # h^{n+2}
        worst = 0
        for k in range(m):
            t = nxt[k] * hn
            wsum[k] += t
            dsum[k] += (n + 2) * nxt[k] * hp
            ref = max(abs(wsum[k]), scales[k]) if scales[k] else 1
            r = abs(t) * (n + 2) / ref
            if r > worst:
                worst = r
        cprev, ccur, hp = ccur, nxt, hn
        n += 1
        if worst <= tol:
            small += 1
            if small >= 4:
                err = worst
                break
        else:
            small = 0
        if n > max_terms:
            raise StepUnderflow("Taylor series failed to converge within the step")
    # re-scale the derivative accumulator: dsum holds sum n c_n h^{n-1}
    return list(zip(wsum, dsum)), err


def transport_polyline(ode, points, states, tol, ratio=0.5, min_step=1e-14):
    """Continue solutions along the polyline ``points`` (first point = start).

    Returns (states, accumulated_error_bound, number_of_steps).
    """
    z = points[0]
    err = 0
    steps = 0
    for target in points[1:]:
        while True:
            d = ode.distance(z)
            hmax = ratio * d
            delta = target - z
            dist = abs(delta)
            if dist == 0:
                break
            if hmax < min_step:
                raise StepUnderflow("path comes too close to a singular point")
            if dist <= hmax:
                h = delta
            else:
                h = delta * (hmax / dist)
            states, e = taylor_step(ode, z, states, h, tol)
            err += e
            steps += 1
            if dist <= hmax:
                z = target
                break
            z = z + h
    return states, err, steps
