"""Gauss 2F1, Kummer 1F1 and truncated 2F0 with analytic continuation.

Branch conventions
------------------
``f21`` returns the principal branch, cut along [1, oo).  On the cut itself
the value is the limit from below (Im z -> 0-), which is the side selected
by ``cmath.phase(1 - z) = +pi``.  Other sheets are reached by passing a
BranchedPoint for 1 - z: its argument, compared to the principal one, gives
the number k of counter-clockwise turns around z = 1 taken from the
principal sheet without crossing (-oo, 0].
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath

from ._taylor import LinearODE, transport_polyline
from .core import (BranchedPoint, ExtrapolationUnstable, ParameterDegenerate,
                   PoleError, SeriesUnreachable)
from .special import gamma_ratio, is_nonpositive_integer, log_gamma_ratio, loggamma

DIRECT_RADIUS = 0.8
DEGENERACY_TOL = 1e-3
MAX_TERMS = 100000
_EPS = 1e-16
LOG_SCALE_LIMIT = 600.0


@dataclass(frozen=True)
class SeriesEval:
    value: complex
    truncation_bound: float = 0.0
    terms_used: int = 0


def _near_integer(z, tol=DEGENERACY_TOL):
    z = complex(z)
    return abs(z.imag) <= tol and abs(z.real - round(z.real)) <= tol


def _nonpos_int(z):
    """Exact non-positive integer as an int, else None."""
    z = complex(z)
    if z.imag == 0 and z.real <= 0 and z.real == int(z.real):
        return int(z.real)
    return None


def _hump_end(*params):
    # terms may shrink and then regrow near n = -Re(p) (a tiny factor p + n);
    # the tail is only judged beyond that index, and only while the term
    # ratio is below one (it decreases from there on)
    return max([0.0] + [-complex(p).real for p in params]) + 2


def _series21(a, b, c, z):
    """Direct Gauss series; terminates exactly for polynomial cases.

    When the partial sums cancel (terms much larger than the sum) the series
    is re-summed in multiprecision with enough extra digits.
    """
    term = 1 + 0j
    s = 1 + 0j
    big = 1.0
    small = 0
    n = 0
    n_min = _hump_end(a, b, c)
    while True:
        r = (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        term *= r
        n += 1
        s += term
        big = max(big, abs(term))
        if term == 0:
            break
        if abs(term) <= _EPS * abs(s) and n > n_min and abs(r) < 1:
            small += 1
            if small >= 10:
                break
        else:
            small = 0
        if n > MAX_TERMS:
            raise SeriesUnreachable(f"2F1 series did not converge at z={z}")
    lost = math.log10(big / abs(s)) if s != 0 else 300
    if lost > 3:
        v, n = _series21_mp(a, b, c, z, 20 + int(lost))
        return SeriesEval(v, 1e-16 * abs(v), n)
    if term == 0:
        return SeriesEval(s, n * _EPS * big, n)
    return SeriesEval(s, 10 * abs(term) + n * _EPS * big, n)


def _series21_mp(a, b, c, z, dps):
    with mpmath.workdps(dps):
        a, b, c, z = (mpmath.mpc(v) for v in (a, b, c, z))
        term = mpmath.mpc(1)
        s = mpmath.mpc(1)
        n = 0
        tol = mpmath.mpf(10) ** (-dps)
        small = 0
        n_min = _hump_end(complex(a), complex(b), complex(c))
        while small < 10:
            r = (a + n) * (b + n) / ((c + n) * (n + 1)) * z
            term *= r
            n += 1
            s += term
            if term == 0:
                break
            if abs(term) <= tol * abs(s) and n > n_min and abs(r) < 1:
                small += 1
            else:
                small = 0
            if n > MAX_TERMS:
                raise SeriesUnreachable(f"2F1 series did not converge at z={z}")
        return complex(s), n


def _polynomial21(a, b, c, z, m):
    term = 1 + 0j
    s = 1 + 0j
    for n in range(m):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        s += term
    return SeriesEval(s, 0.0, m + 1)


@lru_cache(maxsize=4096)
def _coef(num, den):
    return gamma_ratio(num, den)


def _principal_logs(z, side):
    """log(1-z) and log(-z) for the principal branch (cut side ``side``)."""
    w = 1 - z
    if z.imag == 0 and z.real > 1:
        l1 = complex(math.log(z.real - 1), -side * math.pi)
    else:
        l1 = cmath.log(w)
    if z.imag == 0 and z.real > 0:
        # -z on the negative axis: same side rule as 1 - z
        lm = complex(math.log(z.real), -side * math.pi)
    else:
        lm = cmath.log(-z)
    return l1, lm


def _route_pfaff(a, b, c, z, side):
    w = z / (z - 1)
    l1, _ = _principal_logs(z, side)
    s = _series21(a, c - b, c, w)
    f = cmath.exp(-a * l1)
    return SeriesEval(f * s.value, abs(f) * s.truncation_bound, s.terms_used)


def _route_one_minus(a, b, c, z, side):
    w = 1 - z
    l1, _ = _principal_logs(z, side)
    A = _coef((c, c - a - b), (c - a, c - b))
    B = _coef((c, a + b - c), (a, b))
    s1 = _series21(a, b, a + b - c + 1, w)
    s2 = _series21(c - a, c - b, c - a - b + 1, w)
    f = cmath.exp((c - a - b) * l1)
    return _combine(A, s1, B * f, s2)


def _route_inverse(a, b, c, z, side):
    w = 1 / z
    _, lm = _principal_logs(z, side)
    C1 = _coef((c, b - a), (b, c - a))
    C2 = _coef((c, a - b), (a, c - b))
    s1 = _series21(a, a - c + 1, a - b + 1, w)
    s2 = _series21(b, b - c + 1, b - a + 1, w)
    f1 = cmath.exp(-a * lm)
    f2 = cmath.exp(-b * lm)
    return _combine(C1 * f1, s1, C2 * f2, s2)


def _route_inverse_one_minus(a, b, c, z, side):
    w = 1 / (1 - z)
    l1, _ = _principal_logs(z, side)
    C1 = _coef((c, b - a), (b, c - a))
    C2 = _coef((c, a - b), (a, c - b))
    s1 = _series21(a, c - b, a - b + 1, w)
    s2 = _series21(b, c - a, b - a + 1, w)
    f1 = cmath.exp(-a * l1)
    f2 = cmath.exp(-b * l1)
    return _combine(C1 * f1, s1, C2 * f2, s2)


def _combine(p1, s1, p2, s2):
    # two-term connection formula; rounding from cancellation enters the bound
    t1 = p1 * s1.value
    t2 = p2 * s2.value
    v = t1 + t2
    err = (abs(p1) * s1.truncation_bound + abs(p2) * s2.truncation_bound
           + 4e-16 * (abs(t1) + abs(t2)))
    return SeriesEval(v, err, s1.terms_used + s2.terms_used)


_ROUTES = {
    "pfaff": (_route_pfaff, lambda z: z / (z - 1), lambda a, b, c: False),
    "1-z": (_route_one_minus, lambda z: 1 - z, lambda a, b, c: _near_integer(c - a - b)),
    "1/z": (_route_inverse, lambda z: 1 / z, lambda a, b, c: _near_integer(a - b)),
    "1/(1-z)": (_route_inverse_one_minus, lambda z: 1 / (1 - z), lambda a, b, c: _near_integer(a - b)),
}


def _gauss_ode(a, b, c):
    # z(1-z) F'' + (c - (a+b+1) z) F' - ab F = 0
    return LinearODE((0, 1, -1), (c, -(a + b + 1)), -a * b, (0, 1))


def _ode_fallback(a, b, c, z, side):
    """Taylor-series continuation of the Gauss equation from |z0| = 1/2."""
    if abs(z.imag) < 0.5 and z.real > 0.6:
        s = z.imag if z.imag != 0 else -side
        waypoint = complex(1.0, 0.5 if s > 0 else -0.5)
        z0 = 0.5 * waypoint / abs(waypoint)
        pts = [z0, waypoint, z]
    else:
        z0 = 0.5 * z / abs(z)
        pts = [z0, z]
    f0 = _series21(a, b, c, z0)
    d0 = _series21(a + 1, b + 1, c + 1, z0)
    df0 = a * b / c * d0.value
    (st,), err, steps = transport_polyline(_gauss_ode(a, b, c), pts, [(f0.value, df0)], 1e-15)
    return SeriesEval(st[0], err + f0.truncation_bound + 1e-14 * abs(st[0]), steps)


def _f21_principal(a, b, c, z, side=-1, route=None):
    if z == 0:
        return SeriesEval(1 + 0j, 0.0, 1)
    for p in (a, b):
        m = _nonpos_int(p)
        if m is not None:
            return _polynomial21(a, b, c, z, -m)
    if a == c:
        return _closed_power(b, z, side)
    if b == c:
        return _closed_power(a, z, side)
    if z == 1:
        # Gauss summation, convergent for Re(c - a - b) > 0
        if (c - a - b).real <= 0:
            raise ValueError("2F1 diverges at z = 1 unless Re(c - a - b) > 0")
        v = cmath.exp(loggamma(c) + loggamma(c - a - b) - loggamma(c - a) - loggamma(c - b))
        return SeriesEval(v, 1e-14 * abs(v), 1)
    if route is None:
        if abs(z) <= DIRECT_RADIUS:
            return _series21(a, b, c, z)
        best = None
        for name, (_, wmap, degenerate) in _ROUTES.items():
            if degenerate(a, b, c):
                continue
            w = abs(wmap(z))
            if best is None or w < best[0]:
                best = (w, name)
        if best is None or best[0] > DIRECT_RADIUS:
            return _ode_fallback(a, b, c, z, side)
        r = _ROUTES[best[1]][0](a, b, c, z, side)
        if r.truncation_bound > 1e-12 * abs(r.value):
            # heavy cancellation between the two connection terms
            alt = _ode_fallback(a, b, c, z, side)
            if alt.truncation_bound < r.truncation_bound:
                return alt
        return r
    if route == "direct":
        return _series21(a, b, c, z)
    if route == "ode":
        return _ode_fallback(a, b, c, z, side)
    return _ROUTES[route][0](a, b, c, z, side)


def _closed_power(a, z, side):
    # 2F1(a, b; b; z) = (1 - z)^(-a)
    l1, _ = _principal_logs(z, side)
    return SeriesEval(cmath.exp(-a * l1), 0.0, 1)


def _log_expm1(w):
    # log(e^w - 1) without overflow
    if w.real > 0:
        return w + cmath.log(1 - cmath.exp(-w))
    return cmath.log(cmath.exp(w) - 1)


def _sheet_term(a, b, c, z, k):
    """F_k - F_0 for k turns around z = 1 (non-degenerate c - a - b), as
    (log scale, value, bound) with the term equal to exp(scale) * value."""
    e = c - a - b
    l1 = cmath.log(1 - z)
    lt = _log_expm1(2j * math.pi * k * e) + log_gamma_ratio((c, a + b - c), (a, b)) + e * l1
    if abs(z) > 1:
        # Pfaff: F(c-a, c-b; e+1; 1-z) = z^(a-c) F(c-a, 1-a; e+1; 1 - 1/z);
        # the power is kept in the scale (it under/overflows for large c)
        s = _f21_principal(c - a, 1 - a, e + 1, 1 - 1 / z)
        lt += (a - c) * cmath.log(z)
    else:
        s = _f21_principal(c - a, c - b, e + 1, 1 - z)
    return lt, s.value, s.truncation_bound


def _sheet_value(a, b, c, z, k, side):
    """F on the sheet reached after k turns around z = 1, as (scale, SeriesEval)."""
    f0 = _f21_principal(a, b, c, z, side)
    if k == 0:
        return 0j, f0
    if z.imag == 0 and z.real <= 0:
        # on (-oo, 0] the k-th sheet has a cut; approach from ``side``
        z = complex(z.real, 1e-300 * side)
    lt, tv, tb = _sheet_term(a, b, c, z, k)
    if lt.real > LOG_SCALE_LIMIT:
        g = cmath.exp(-lt)
        return lt, SeriesEval(tv + f0.value * g, tb + f0.truncation_bound * abs(g), f0.terms_used)
    g = cmath.exp(lt)
    return 0j, SeriesEval(f0.value + g * tv, f0.truncation_bound + abs(g) * tb, f0.terms_used)


def f21(a, b, c, z, one_minus_z=None):
    """Gauss hypergeometric function 2F1(a, b; c; z).

    ``z`` may be complex or a BranchedPoint (its argument is irrelevant, the
    function being analytic at 0).  ``one_minus_z`` optionally fixes the sheet
    through the lifted argument of 1 - z.  When ``z`` is on (-oo, 0] and a
    non-principal sheet is requested, the side of approach is the sign of the
    argument of ``z`` (positive: from above).
    """
    scale, r = f21_scaled(a, b, c, z, one_minus_z)
    if scale == 0:
        return r
    f = cmath.exp(scale)
    return SeriesEval(f * r.value, abs(f) * r.truncation_bound, r.terms_used)


def f21_scaled(a, b, c, z, one_minus_z=None):
    """Like ``f21`` but returns (log_scale, SeriesEval) with
    2F1 = exp(log_scale) * value; non-principal sheets can be far beyond the
    double-precision range when c - a - b is large."""
    a, b, c = complex(a), complex(b), complex(c)
    side = -1
    if isinstance(z, BranchedPoint):
        zb = z
        z = zb.value()
        if zb.argument > 0:
            side = 1
    else:
        z = complex(z)
    if is_nonpositive_integer(c):
        m = [_nonpos_int(p) for p in (a, b)]
        if not any(v is not None and v > c.real for v in m):
            raise PoleError(f"c = {c} is a non-positive integer")
    k = 0
    if one_minus_z is not None:
        w = one_minus_z.value()
        if abs(w - (1 - z)) > 1e-10 * (1 + abs(z)):
            raise ValueError("one_minus_z does not match 1 - z")
        if z.imag == 0 and z.real > 1:
            # on the cut: arg(1 - z) = pi is the principal (from below) value
            base = math.pi
        else:
            base = cmath.phase(1 - z)
        # on the cut, arg -pi (from above) is the sheet k = -1 seen from below
        k = round((one_minus_z.argument - base) / (2 * math.pi))
    if k == 0 or z == 0 or any(_nonpos_int(p) is not None for p in (a, b)):
        return 0j, _f21_principal(a, b, c, z)
    if _near_integer(c - a - b):
        # common scale taken from the first perturbed evaluation
        ref = _sheet_value(a + 1e-4, b, c, z, k, side)[0]

        def fun(h):
            sc, r = _sheet_value(a + h, b, c, z, k, side)
            return r.value * cmath.exp(sc - ref)
        return ref, _richardson_symmetric(fun, 1e-4)
    return _sheet_value(a, b, c, z, k, side)


def _richardson_symmetric(fun, h0, tol=1e-4):
    def S(h):
        return 0.5 * (fun(h) + fun(-h))

    s0, s1, s2 = S(h0), S(h0 / 2), S(h0 / 4)
    r1 = (4 * s1 - s0) / 3
    r2 = (4 * s2 - s1) / 3
    diff = abs(r1 - r2)
    if diff > tol * max(abs(r1), 1e-300) and diff > 1e-12:
        raise ExtrapolationUnstable(f"extrapolants disagree by {diff:.3e}")
    return SeriesEval(r1, diff, 0)


def f21_degenerate_limit(a, b, c, z, h0=1e-5):
    """2F1 for b - a in Z, as the limit of the 1/z connection formula.

    The perturbed values F(a +- h) are averaged (central in h, so the error is
    O(h^2)) and Richardson-extrapolated over h in {h0, h0/2}; a second
    extrapolant from {h0/2, h0/4} is used to detect instability.
    """
    a, b, c = complex(a), complex(b), complex(c)
    if isinstance(z, BranchedPoint):
        z = z.value()
    z = complex(z)
    if z == 0:
        return SeriesEval(1 + 0j, 0.0, 1)
    if not _near_integer(b - a, 1e-9):
        raise ParameterDegenerate("f21_degenerate_limit expects b - a to be an integer")
    route = None
    if abs(z) > 1:
        if abs(1 / z) <= 0.9:
            route = "1/z"
        elif abs(1 / (1 - z)) <= 0.9:
            route = "1/(1-z)"

    def fun(h):
        return _f21_principal(a + h, b, c, z, route=route).value

    return _richardson_symmetric(fun, h0)


# ---------------------------------------------------------------- 1F1

def _series11(a, c, z):
    term = 1 + 0j
    s = 1 + 0j
    small = 0
    n = 0
    biggest = 1.0
    n_min = _hump_end(a, c)
    while True:
        r = (a + n) / ((c + n) * (n + 1)) * z
        term *= r
        n += 1
        s += term
        at = abs(term)
        biggest = max(biggest, at)
        if term == 0:
            break
        if at <= _EPS * abs(s) and n > n_min and abs(r) < 1:
            small += 1
            if small >= 10:
                break
        else:
            small = 0
        if n > MAX_TERMS:
            raise SeriesUnreachable("1F1 series did not converge")
    return s, 10 * at, n, biggest


def _series11_mp(a, c, z, dps, raw=False):
    with mpmath.workdps(dps):
        a, c, z = mpmath.mpc(a), mpmath.mpc(c), mpmath.mpc(z)
        term = mpmath.mpc(1)
        s = mpmath.mpc(1)
        n = 0
        tol = mpmath.mpf(10) ** (-dps)
        small = 0
        n_min = _hump_end(complex(a), complex(c))
        while small < 10:
            r = (a + n) / ((c + n) * (n + 1)) * z
            term *= r
            n += 1
            s += term
            if abs(term) <= tol * abs(s) and n > n_min and abs(r) < 1:
                small += 1
            else:
                small = 0
        if raw:
            return s, n
        return complex(s), n


def _asymptotic11(a, c, z):
    # large |z| with Re z >= 0; both series optimally truncated
    lz = cmath.log(z)
    lmz = cmath.log(-z)
    def tail(p, q, w):
        t = 1 + 0j
        s = 1 + 0j
        prev = math.inf
        n = 0
        while n < 500:
            t = t * (p + n) * (q + n) / ((n + 1) * w)
            at = abs(t)
            if at > prev or at < 1e-17 * abs(s):
                break
            s += t
            prev = at
            n += 1
        return s, prev, n
    s1, e1, n1 = tail(c - a, 1 - a, z)
    s2, e2, n2 = tail(a, a - c + 1, -z)
    l1 = loggamma(c) + z + (a - c) * lz
    p1 = cmath.exp(l1) * (0 if is_nonpositive_integer(a) else cmath.exp(-loggamma(a)))
    if is_nonpositive_integer(c - a):
        p2 = 0j
    else:
        p2 = cmath.exp(loggamma(c) - loggamma(c - a) - a * lmz)
    v = p1 * s1 + p2 * s2
    return SeriesEval(v, abs(p1) * e1 + abs(p2) * e2, n1 + n2)


def f11(a, c, z):
    """Kummer function 1F1(a; c; z)."""
    a, c, z = complex(a), complex(c), complex(z)
    if is_nonpositive_integer(c):
        m = _nonpos_int(a)
        if m is None or m <= c.real:
            raise PoleError(f"c = {c} is a non-positive integer")
    if z == 0:
        return SeriesEval(1 + 0j, 0.0, 1)
    m = _nonpos_int(a)
    if m is not None:
        term = 1 + 0j
        s = 1 + 0j
        for n in range(-m):
            term *= (a + n) / ((c + n) * (n + 1)) * z
            s += term
        return SeriesEval(s, 0.0, -m + 1)
    if z.real < 0:
        r = f11(c - a, c, -z)
        f = cmath.exp(z)
        return SeriesEval(f * r.value, abs(f) * r.truncation_bound, r.terms_used)
    if abs(z) >= 60 + 5 * (abs(a) + abs(c)):
        return _asymptotic11(a, c, z)
    # a-priori cancellation: terms reach ~e^{|z|} while the sum is ~e^{Re z}
    lost = (abs(z) - z.real + (abs(a) + abs(c) + 1) * math.log1p(abs(z))) / math.log(10)
    if lost > 4:
        v, n = _series11_mp(a, c, z, 20 + int(lost))
        return SeriesEval(v, 1e-16 * abs(v), n)
    s, bound, n, _ = _series11(a, c, z)
    return SeriesEval(s, bound + 1e-16 * abs(s), n)


# ---------------------------------------------------------------- 2F0

def f20_truncated(a, b, z, N=None):
    """Partial sum of the (divergent) series 2F0(a, b;; z).

    With ``N`` given, sums the terms n = 0..N.  Otherwise truncates at the
    first least term (inclusive).  ``truncation_bound`` is the modulus of the
    first omitted term.
    """
    a, b, z = complex(a), complex(b), complex(z)
    terms = [1 + 0j]
    if N is not None:
        t = 1 + 0j
        for n in range(N + 1):
            t = t * (a + n) * (b + n) / (n + 1) * z
            terms.append(t)
        return SeriesEval(sum(terms[:N + 1]), abs(terms[N + 1]), N + 1)
    t = 1 + 0j
    best = 0
    n = 0
    while n < 10000:
        t = t * (a + n) * (b + n) / (n + 1) * z
        n += 1
        terms.append(t)
        if t == 0:
            return SeriesEval(sum(terms), 0.0, n)
        if abs(t) < abs(terms[best]):
            best = n
        elif n - best > 3 and abs(t) > abs(terms[best]):
            break
    return SeriesEval(sum(terms[:best + 1]), abs(terms[best + 1]), best + 1)
