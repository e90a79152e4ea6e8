"""Transport of solutions along complex paths.

Two engines are available for the linear equation

    x (x - eps) w'' + (1 - eps + (a + b + 1) x) w' + a b w = 0:

* ``dop853``: scipy's adaptive 8th-order Dormand-Prince pair on the complex
  first-order system, in double precision (default);
* ``taylor``: power-series re-expansion (see ``_taylor``), either in double
  precision or in mpmath arithmetic with ``dps`` digits.

Monodromy around a singular point multiplies the solutions by factors of
size up to e^{pi |Im 1/eps|}, so double precision cannot resolve the
subdominant solution for small |eps|; ``monodromy_via_integration`` therefore
uses the multiprecision Taylor engine with a working precision sized from
that exponential dichotomy.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import gmpy2
import mpmath
import numpy as np
from scipy.integrate import solve_ivp

from ._taylor import LinearODE, transport_polyline
from .bases import lens_point
from .core import (BranchedPoint, ContinuationFailure, IllConditionedBasis,
                   StepUnderflow)
from .stokes import Mat2, PathSpec

PI = math.pi


@dataclass(frozen=True)
class TransportResult:
    """Final state of a transport; ``error_estimate`` is relative to its size."""

    final_state: tuple
    error_estimate: float
    end_point: complex | None = None
    chart: str = "y"
    pole_crossings: int = 0


def _center_value(p, center):
    return 0j if center == "0" else p.eps_value


def path_points(p, path, n_per_turn=64):
    """Sample a PathSpec (or pass through a polyline) as a list of complex points."""
    if isinstance(path, PathSpec):
        c = _center_value(p, path.center)
        base = path.base_point.value()
        n = max(2, int(math.ceil(abs(path.turn_angle) / (2 * PI) * n_per_turn)))
        return [c + (base - c) * cmath.exp(1j * path.turn_angle * k / n) for k in range(n + 1)]
    return [complex(z) for z in path]


def _check_clearance(p, pts):
    e = p.eps_value
    tol = 0.1 * abs(e)
    # test the polyline finely; chords of the sampled arcs are short
    for z0, z1 in zip(pts[:-1], pts[1:]):
        for s in (0.0, 0.25, 0.5, 0.75, 1.0):
            z = z0 + s * (z1 - z0)
            if min(abs(z), abs(z - e)) < tol:
                raise StepUnderflow("path passes within 0.1|eps| of a singular point")


def _linear_ode(p, ctx=None):
    a, b = p.a, p.b
    e = p.eps_value
    if ctx is not None:
        a, b, e = ctx.mpc(a), ctx.mpc(b), ctx.mpc(e)
    return LinearODE((0 * e, -e, 1 + 0 * e), (1 - e, a + b + 1), a * b, (0 * e, e))


def _to_gmpy(z):
    # exact: mantissa and exponent of each mpmath component
    z = mpmath.mpc(z)
    parts = []
    for v in (z.real, z.imag):
        sign, man, exp, _ = v._mpf_
        m = gmpy2.mul_2exp(gmpy2.mpfr(man), exp) if man else gmpy2.mpfr(0)
        parts.append(-m if sign else m)
    return gmpy2.mpc(*parts)


def _from_gmpy(z):
    re, im = (mpmath.mpf(tuple(int(t) for t in v.as_mantissa_exp())) for v in (z.real, z.imag))
    return mpmath.mpc(re, im)


def _mp_transport(ode, pts, states, dps):
    """transport_polyline at ``dps`` digits on mpmath input and output.

    The arithmetic runs on gmpy2 numbers (same values, several times faster
    than mpmath's Python-level complex arithmetic).
    """
    prec = mpmath.mp.prec + 16
    with gmpy2.context(gmpy2.get_context(), precision=prec):
        fast = LinearODE(tuple(_to_gmpy(v) for v in ode.P), tuple(_to_gmpy(v) for v in ode.Q),
                         _to_gmpy(ode.R), [_to_gmpy(v) for v in ode.singular_points])
        st, err, steps = transport_polyline(fast, [_to_gmpy(z) for z in pts],
                                            [tuple(_to_gmpy(v) for v in s) for s in states],
                                            gmpy2.mpfr(10) ** (-dps))
        back = [tuple(_from_gmpy(v) for v in s) for s in st]
    return back, float(err), steps


def _rhs_linear(p):
    a, b = p.a, p.b
    e = p.eps_value
    ab = a * b
    s1 = a + b + 1

    def second(x, w, dw):
        return -((1 - e + s1 * x) * dw + ab * w) / (x * (x - e))
    return second


def _dop853_arc(p, path, states, rtol, atol):
    second = _rhs_linear(p)
    c = _center_value(p, path.center)
    r0 = path.base_point.value() - c

    def f(theta, y):
        x = c + r0 * cmath.exp(1j * theta)
        dx = 1j * r0 * cmath.exp(1j * theta)
        out = np.empty_like(y)
        for k in range(0, len(y), 2):
            w, dw = y[k], y[k + 1]
            out[k] = dw * dx
            out[k + 1] = second(x, w, dw) * dx
        return out

    y0 = np.array([v for s in states for v in s], dtype=complex)
    if path.turn_angle == 0:
        return y0
    sol = solve_ivp(f, (0.0, path.turn_angle), y0, method="DOP853", rtol=rtol, atol=atol)
    if not sol.success:
        raise ContinuationFailure(sol.message)
    return sol.y[:, -1]


def _dop853_polyline(p, pts, states, rtol, atol):
    second = _rhs_linear(p)
    y = np.array([v for s in states for v in s], dtype=complex)
    for z0, z1 in zip(pts[:-1], pts[1:]):
        d = z1 - z0
        if d == 0:
            continue

        def f(t, y, z0=z0, d=d):
            x = z0 + t * d
            out = np.empty_like(y)
            for k in range(0, len(y), 2):
                out[k] = y[k + 1] * d
                out[k + 1] = second(x, y[k], y[k + 1]) * d
            return out

        sol = solve_ivp(f, (0.0, 1.0), y, method="DOP853", rtol=rtol, atol=atol)
        if not sol.success:
            raise ContinuationFailure(sol.message)
        y = sol.y[:, -1]
    return y


def transport_linear(p, path, initial, method="dop853", rtol=1e-12, dps=None,
                     estimate_error=True):
    """Continue (w, w') along ``path`` (a PathSpec or a polyline of points).

    ``initial`` is one pair (w, w') or a list of pairs transported together.
    """
    multi = isinstance(initial, list)
    states = initial if multi else [initial]
    pts = path_points(p, path)
    if len(pts) > 1:
        _check_clearance(p, pts)
    end = pts[-1]
    if len(pts) < 2 or all(z == pts[0] for z in pts):
        final = [tuple(complex(v) for v in s) for s in states]
        return TransportResult(final if multi else final[0], 0.0, end)
    if method == "dop853":
        scale = max(abs(complex(v)) for s in states for v in s) or 1.0
        atol = 1e-15 * scale

        def run(rt):
            if isinstance(path, PathSpec):
                return _dop853_arc(p, path, states, rt, atol)
            return _dop853_polyline(p, pts, states, rt, atol)

        y = run(rtol)
        err = 0.0
        if estimate_error:
            # relative difference to a run at a looser tolerance
            y2 = run(min(rtol * 30, 1e-6))
            err = float(np.max(np.abs(y - y2)) / max(np.max(np.abs(y)), 1e-300))
        final = [(complex(y[2 * k]), complex(y[2 * k + 1])) for k in range(len(states))]
    elif method == "taylor":
        if dps is None:
            ode = _linear_ode(p)
            st, err, _ = transport_polyline(ode, pts, [tuple(complex(v) for v in s) for s in states], 1e-16)
            final = [(complex(w), complex(dw)) for w, dw in st]
            err = float(err) + 1e-15
        else:
            with mpmath.workdps(dps):
                ode = _linear_ode(p, mpmath)
                mpts = [mpmath.mpc(z) for z in pts]
                mst = [tuple(mpmath.mpc(v) for v in s) for s in states]
                st, err, _ = _mp_transport(ode, mpts, mst, dps)
                final = [(complex(w), complex(dw)) for w, dw in st]
                err = float(err)
    else:
        raise ValueError(f"unknown method {method!r}")
    return TransportResult(final if multi else final[0], err, end)


# ------------------------------------------------------------- monodromy

def working_dps(p, extra=30):
    """Digits needed to resolve both solutions over half/full turns.

    Besides the growth over a full turn, the seeds of the two basis functions
    may differ in size by |kappa| ~ e^{pi |Im 1/eps|} |eps|^{Re(1-a-b)}; both
    must be resolved relative to the larger one.
    """
    ie = p.inv_eps
    spread = 2 * PI * abs(ie.imag) + abs(ie.real) * math.log(4) + 2 * PI * abs((p.a + p.b).imag)
    spread += PI * abs(ie.imag) + abs((1 - p.a - p.b).real * math.log(p.eps.modulus))
    return int(extra + spread / math.log(10))


def _mp_basis_seeds(p, sign, t, dps, e=None):
    """(f, f') for the ordered basis at the lens point x = t*eps, in mpmath.

    ``e`` optionally gives eps as an mpmath number (its lift still comes from
    p.eps.argument).
    """
    mp = mpmath
    with mp.workdps(dps):
        a, b = mp.mpc(p.a), mp.mpc(p.b)
        # eps must be bit-identical to the one in the ODE coefficients, or the
        # seeds solve a perturbed equation and the subdominant solution is lost
        if e is None:
            e = mp.mpc(p.eps_value)
        le = mp.log(e)
        le += 2j * mp.pi * round((p.eps.argument - float(le.imag)) / (2 * PI))
        ie = 1 / e
        X = mp.mpc(t)
        x = X * e
        s = 1 - ie - a - b
        sg = 1 if sign == "+" else -1
        lk = (1 - a - b) * le + sg * 1j * mp.pi * (a + b - 1 + ie)
        kap = mp.exp(lk)
        # prefactor X^{1/eps} (1-X)^s and its log-derivative in x
        pref = mp.exp(ie * mp.log(X) + s * mp.log(1 - X))
        dlp = ie * (ie / X - s / (1 - X))
        if sign == "+":
            c2 = 1 + ie
            F = mp.hyp2f1(1 - a, 1 - b, c2, X)
            dF = ie * (1 - a) * (1 - b) / c2 * mp.hyp2f1(2 - a, 2 - b, c2 + 1, X)
            f1 = (kap * pref * F, kap * pref * (dlp * F + dF))
            c3 = a + b + ie
            G = mp.hyp2f1(a, b, c3, 1 - X)
            dG = -ie * a * b / c3 * mp.hyp2f1(a + 1, b + 1, c3 + 1, 1 - X)
            f2 = (G, dG)
        else:
            c4 = 2 - ie - a - b
            F = mp.hyp2f1(1 - a, 1 - b, c4, 1 - X)
            dF = -ie * (1 - a) * (1 - b) / c4 * mp.hyp2f1(2 - a, 2 - b, c4 + 1, 1 - X)
            f1 = (kap * pref * F, kap * pref * (dlp * F + dF))
            c1 = 1 - ie
            G = mp.hyp2f1(a, b, c1, X)
            dG = ie * a * b / c1 * mp.hyp2f1(a + 1, b + 1, c1 + 1, X)
            f2 = (G, dG)
        return [f1, f2], x


def _mp_arc(p, center, base, turn, n_per_turn=64):
    mp = mpmath
    c = mp.mpc(0) if center == "0" else mp.mpc(p.eps_value)
    n = max(2, int(math.ceil(abs(turn) / (2 * PI) * n_per_turn)))
    r0 = base - c
    frac = mp.mpf(turn / PI)
    return [c + r0 * mp.expjpi(frac * k / n) for k in range(n + 1)]


def continue_basis_pair(p, sign, x=None, around="0", turn=PI, dps=None, t=0.5,
                        with_derivatives=False):
    """Continue the ordered basis of B^{sign} from the lens point t*eps by an
    arc of angle ``turn`` around ``around``; returns the end values."""
    if dps is None:
        dps = working_dps(p)
    if x is not None:
        t = complex(x.value() / p.eps_value) if isinstance(x, BranchedPoint) else complex(x) / p.eps_value
        if abs(t.imag) > 1e-12:
            raise ContinuationFailure("the starting point must lie on the segment (0, eps)")
        t = t.real
    with mpmath.workdps(dps):
        seeds, base = _mp_basis_seeds(p, sign, t, dps)
        pts = _mp_arc(p, "0" if around in ("0", 0) else "eps", base, turn)
        ode = _linear_ode(p, mpmath)
        st, err, _ = _mp_transport(ode, pts, seeds, dps)
        if with_derivatives:
            return [(complex(w), complex(dw)) for w, dw in st]
        return [w for w, _ in st]


def monodromy_via_integration(p, sign, around, dps=None, t=0.5):
    """Monodromy matrix of the ordered basis of B^{sign} by numerical transport.

    The basis is seeded at x = t*eps (t = 1/2: the midpoint of the segment
    joining the singular points), continued by +pi and -pi around the chosen
    singular point, and M is obtained from Y(+pi) = M Y(-pi), where the rows of
    Y are (f, f') for the two basis functions.
    """
    if dps is None:
        dps = working_dps(p)
    around = "0" if around in ("0", 0) else "eps"
    mp = mpmath
    with mp.workdps(dps):
        seeds, base = _mp_basis_seeds(p, sign, t, dps)
        (f, df), (g, dg) = seeds
        w = f * dg - df * g
        norm = abs(f) * abs(dg) + abs(df) * abs(g)
        if norm == 0 or abs(w) < 1e-12 * norm:
            raise IllConditionedBasis("basis Wronskian (relative) below 1e-12 at the base point")
        ode = _linear_ode(p, mp)
        Y = {}
        for turn in (PI, -PI):
            pts = _mp_arc(p, around, base, turn)
            st, err, _ = _mp_transport(ode, pts, seeds, dps)
            Y[turn] = mp.matrix([[st[0][0], st[0][1]], [st[1][0], st[1][1]]])
        M = Y[PI] * mp.inverse(Y[-PI])
        loop = PathSpec(lens_point(p, t), around, 2 * PI)
        return Mat2(complex(M[0, 0]), complex(M[0, 1]), complex(M[1, 0]), complex(M[1, 1]),
                    "B_plus" if sign == "+" else "B_minus", loop)


def monodromy_universal_via_integration(a, b, sqrt_eps, around, dps=None, t=0.5):
    """Monodromy of the universal equation (x^2 - eps) w'' + (-1 + (a+b+1) x) w' + ab w = 0.

    The basis B+ of the standard family with parameter eps~ (see
    ``riccati.universal_map``) is pulled back by x = -sqrt(eps) + 2 sqrt(eps) x~/eps~,
    seeded at x~ = t eps~ and transported in the x-plane around -sqrt(eps)
    (``around='0'``) or +sqrt(eps) (``around='eps'``).
    """
    from .riccati import universal_params

    sq = sqrt_eps if isinstance(sqrt_eps, BranchedPoint) else BranchedPoint.from_complex(sqrt_eps)
    pt = universal_params(a, b, sq)
    if dps is None:
        dps = working_dps(pt)
    around = "0" if around in ("0", 0) else "eps"
    mp = mpmath
    with mp.workdps(dps):
        A, B = mp.mpc(a), mp.mpc(b)
        r = mp.mpc(sq.value())
        et = -2 * r / (1 - (1 - A - B) * r)
        seeds, xt = _mp_basis_seeds(pt, "+", t, dps, e=et)
        jac = et / (2 * r)                     # dx~/dx
        seeds = [(w, dw * jac) for w, dw in seeds]
        base = -r + 2 * r * xt / et
        ode = LinearODE((-r * r, 0 * r, 1 + 0 * r), (mp.mpc(-1), A + B + 1), A * B, (-r, r))
        center = -r if around == "0" else r
        frac_pts = 64
        Y = {}
        for sgn in (1, -1):
            pts = [center + (base - center) * mp.expjpi(mp.mpf(sgn) * k / frac_pts)
                   for k in range(frac_pts + 1)]
            st, _, _ = _mp_transport(ode, pts, seeds, dps)
            Y[sgn] = mp.matrix([[st[0][0], st[0][1]], [st[1][0], st[1][1]]])
        M = Y[1] * mp.inverse(Y[-1])
        return Mat2(complex(M[0, 0]), complex(M[0, 1]), complex(M[1, 0]), complex(M[1, 1]),
                    "B_plus_universal", None)


# ------------------------------------------------------------- Riccati

def riccati_field_xy(p, x, y):
    a, b = p.a, p.b
    e = p.eps_value
    q = x * (x - e)
    return q, a * b * q + (-1 + (1 - a - b) * x) * y + y * y


def _riccati_v_field(p, x, v):
    # v = 1/y:  v' = -ab q v^2 - (-1 + (1-a-b) x) v - 1
    a, b = p.a, p.b
    e = p.eps_value
    q = x * (x - e)
    return q, -a * b * q * v * v - (-1 + (1 - a - b) * x) * v - 1


CHART_SWITCH = 1e6


def transport_riccati(p, initial, t_span=None, x_path=None, rtol=1e-13, atol=1e-15):
    """Integrate the Riccati system from ``initial`` = (x, y).

    Either in (real) time over ``t_span`` = (t0, t1), or, with ``x_path`` (a
    polyline in the x-plane starting at initial x), in the x-parametrised form
    dy/dx = ydot/xdot.  The chart switches to v = 1/y when |y| exceeds 1e6.
    """
    x0, y0 = complex(initial[0]), complex(initial[1])
    if x_path is not None:
        return _riccati_x(p, x0, y0, [complex(z) for z in x_path], rtol, atol)
    if t_span is None:
        raise ValueError("give t_span or x_path")
    t0, t1 = float(t_span[0]), float(t_span[1])
    chart = "y"
    state = np.array([x0, y0], dtype=complex)
    crossings = 0
    t = t0
    while t != t1:
        if chart == "y":
            def f(t, s):
                return np.array(riccati_field_xy(p, s[0], s[1]), dtype=complex)

            def ev(t, s):
                return abs(s[1]) - CHART_SWITCH
        else:
            def f(t, s):
                return np.array(_riccati_v_field(p, s[0], s[1]), dtype=complex)

            def ev(t, s):
                return abs(s[1]) - CHART_SWITCH
        ev.terminal = True
        ev.direction = 1
        sol = solve_ivp(f, (t, t1), state, method="DOP853", rtol=rtol, atol=atol, events=ev)
        if sol.status == -1:
            raise ContinuationFailure(sol.message)
        state = sol.y[:, -1].copy()
        t = sol.t[-1]
        if sol.status == 1:
            state[1] = 1 / state[1]
            if chart == "y":
                # one more excursion through the neighbourhood of y = infinity
                crossings += 1
            chart = "v" if chart == "y" else "y"
    x, w = state
    y = w if chart == "y" else (1 / w if w != 0 else complex(math.inf))
    return TransportResult((complex(x), complex(y)), 0.0, complex(x), chart, crossings)


def _riccati_x(p, x0, y0, pts, rtol, atol):
    if abs(pts[0] - x0) > 1e-14 * (1 + abs(x0)):
        raise ValueError("x_path must start at the initial x")
    a, b = p.a, p.b
    e = p.eps_value
    chart = "y"
    w = y0
    crossings = 0
    for z0, z1 in zip(pts[:-1], pts[1:]):
        d = z1 - z0
        s = 0.0
        while s < 1.0:
            if chart == "y":
                def f(t, u, z0=z0, d=d):
                    x = z0 + t * d
                    q = x * (x - e)
                    y = u[0]
                    return np.array([(a * b * q + (-1 + (1 - a - b) * x) * y + y * y) / q * d])
            else:
                def f(t, u, z0=z0, d=d):
                    x = z0 + t * d
                    q = x * (x - e)
                    v = u[0]
                    return np.array([(-a * b * q * v * v - (-1 + (1 - a - b) * x) * v - 1) / q * d])

            def ev(t, u):
                return abs(u[0]) - CHART_SWITCH
            ev.terminal = True
            ev.direction = 1
            sol = solve_ivp(f, (s, 1.0), np.array([w], dtype=complex), method="DOP853",
                            rtol=rtol, atol=atol, events=ev)
            if sol.status == -1:
                raise ContinuationFailure(sol.message)
            w = complex(sol.y[0, -1])
            s = float(sol.t[-1])
            if sol.status == 1:
                w = 1 / w
                chart = "v" if chart == "y" else "y"
                crossings += 1
    y = w if chart == "y" else (1 / w if w != 0 else complex(math.inf))
    return TransportResult((pts[-1], y), 0.0, pts[-1], chart, crossings // 2)


__all__ = [
    "TransportResult", "transport_linear", "monodromy_via_integration",
    "continue_basis_pair", "transport_riccati", "working_dps", "path_points",
    "monodromy_universal_via_integration",
]
