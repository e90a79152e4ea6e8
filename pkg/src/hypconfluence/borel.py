"""Borel sums of the confluent series g^ = 2F0(a, b; -x) and h^ = 2F0(1-a, 1-b; x).

Closed form used for the sums (1F1 decomposition):

    G_{a,b}(x) = Gamma(b-a)/Gamma(b) x^{-a} 1F1(a; a+1-b; 1/x)
               + Gamma(a-b)/Gamma(a) x^{-b} 1F1(b; b+1-a; 1/x)

is the continuation of g along the lifted argument of x.  The lateral sums
are G restricted to argument windows of length 2 pi:

    g  : (-pi, pi]        g+ : (-pi/2, 3pi/2]      g- : (-3pi/2, pi/2]

and h^{tag}(x) = G_{1-a,1-b}(x e^{-i pi}) with the same windows applied to
arg(x) - pi, i.e. h on (0, 2pi], h+ on (pi/2, 5pi/2], h- on (-pi/2, 3pi/2].
Finally k^{tag}(x) = e^{1/x} x^{1-a-b} h^{tag}(x), the power using the lift
stored in x.
"""

from __future__ import annotations

import cmath
import enum
import math

import mpmath
from scipy import integrate

from .core import (EvalResult, OnCut, QuadratureNonconvergent,
                   SingularDirection, as_branched)
from .hypergeometric import _series11_mp, f11, f21
from .special import gamma_ratio, is_nonpositive_integer

PI = math.pi


class LateralTag(enum.Enum):
    NONE = "none"
    PLUS = "plus"
    MINUS = "minus"

    @classmethod
    def coerce(cls, tag):
        if isinstance(tag, cls):
            return tag
        if tag in (None, "", "none"):
            return cls.NONE
        if tag in ("+", "plus"):
            return cls.PLUS
        if tag in ("-", "minus"):
            return cls.MINUS
        raise ValueError(f"unknown lateral tag {tag!r}")


_G_WINDOW = {LateralTag.NONE: -PI, LateralTag.PLUS: -PI / 2, LateralTag.MINUS: -3 * PI / 2}


def _to_window(arg, lo):
    """Shift arg by a multiple of 2 pi into (lo, lo + 2 pi]."""
    t = arg - 2 * PI * math.floor((arg - lo) / (2 * PI))
    if t <= lo:
        t += 2 * PI
    return t


def borel_transform(a, b, xi):
    """Borel transform of 2F0(a, b; -x):  2F1(a, b; 1; -xi)."""
    xi = complex(xi)
    r = f21(a, b, 1, -xi)
    return EvalResult(r.value, r.truncation_bound)


def laplace_sum(a, b, x, direction=None):
    """(1/x) int_0^{oo e^{i theta}} e^{-xi/x} 2F1(a, b; 1; -xi) d xi by quadrature.

    ``direction`` defaults to arg(x), for which the kernel does not oscillate.
    """
    a, b = complex(a), complex(b)
    x = as_branched(x)
    xv = x.value()
    theta = x.argument if direction is None else float(direction)
    if abs((theta - PI + PI) % (2 * PI) - PI) < 0.1:
        raise SingularDirection("direction too close to the singular ray arg xi = pi")
    u = cmath.exp(1j * theta)
    sigma = u / xv
    if sigma.real <= 0:
        raise SingularDirection("Re(e^{i theta}/x) must be positive")
    if a == 0 or b == 0:
        return EvalResult(1 + 0j, 0.0)
    p = max(0.0, -a.real, -b.real)
    big = 40.0 / sigma.real
    for _ in range(3):
        big = (40.0 + p * math.log1p(big)) / sigma.real

    def integrand(t):
        return cmath.exp(-sigma * t) * f21(a, b, 1, -u * t).value

    # split at a few break points so the adaptive rule sees the scale 1/Re(sigma)
    edges = [0.0] + [big * f for f in (0.05, 0.2, 0.5)] + [big]
    total = 0j
    err = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        val, e = integrate.quad(integrand, lo, hi, complex_func=True,
                                epsabs=1e-15, epsrel=1e-13, limit=400)
        total += val
        err += abs(e)
    value = sigma * total
    # tail estimate with |B| <= C (1 + t)^p, C ~ |B(big)|
    tail = abs(f21(a, b, 1, -u * big).value) * math.exp(-sigma.real * big) * abs(sigma) / sigma.real
    err = err * abs(sigma) + tail
    if not err <= 1e-9 * (1 + abs(value)):
        raise QuadratureNonconvergent(f"estimated error {err:.3e}")
    return EvalResult(value, err)


def _G_double(a, b, lx, z):
    c1 = gamma_ratio((b - a,), (b,))
    c2 = gamma_ratio((a - b,), (a,))
    t1 = c1 * cmath.exp(-a * lx) * f11(a, a + 1 - b, z).value if c1 != 0 else 0j
    t2 = c2 * cmath.exp(-b * lx) * f11(b, b + 1 - a, z).value if c2 != 0 else 0j
    v = t1 + t2
    return v, 1e-15 * (abs(t1) + abs(t2)) + 1e-15 * abs(v)


def _G_mp(a, b, lx, dps):
    with mpmath.workdps(dps):
        A, B, LX = mpmath.mpc(a), mpmath.mpc(b), mpmath.mpc(lx)
        Z = mpmath.exp(-LX)
        t1 = mpmath.rgamma(B) * mpmath.gamma(B - A) * mpmath.exp(-A * LX)
        t2 = mpmath.rgamma(A) * mpmath.gamma(A - B) * mpmath.exp(-B * LX)
        s1 = _series11_mp(A, A + 1 - B, Z, dps, raw=True)[0] if t1 != 0 else 0
        s2 = _series11_mp(B, B + 1 - A, Z, dps, raw=True)[0] if t2 != 0 else 0
        return complex(t1 * s1 + t2 * s2)


def _G_nondegenerate(a, b, lx):
    z = cmath.exp(-lx)
    # the two terms are each ~e^{Re(1/x)}; recompute with guard digits if they cancel
    if z.real > 6:
        v = _G_mp(a, b, lx, 20 + int(z.real / math.log(10)))
        return v, 1e-15 * abs(v)
    return _G_double(a, b, lx, z)


def _polynomial_g(a, b, xv):
    # 2F0(a, b; -x) when a or b is a non-positive integer
    m = int(-a.real) if is_nonpositive_integer(a) else int(-b.real)
    t = 1 + 0j
    s = 1 + 0j
    for n in range(m):
        t *= (a + n) * (b + n) / (n + 1) * (-xv)
        s += t
    return s


def _G(a, b, lx, degenerate_h=1e-4):
    """G_{a,b} at the point with logarithm lx."""
    if is_nonpositive_integer(a) or is_nonpositive_integer(b):
        return _polynomial_g(a, b, cmath.exp(lx)), 0.0
    d = a - b
    if abs(d.imag) < 1e-3 and abs(d.real - round(d.real)) < 1e-3:
        # a - b (nearly) integer: symmetric Richardson in a -> a +- h
        def S(h):
            return 0.5 * (_G_nondegenerate(a + h, b, lx)[0] + _G_nondegenerate(a - h, b, lx)[0])
        h = degenerate_h
        s0, s1, s2 = S(h), S(h / 2), S(h / 4)
        r1 = (4 * s1 - s0) / 3
        r2 = (4 * s2 - s1) / 3
        return r2, abs(r1 - r2)
    return _G_nondegenerate(a, b, lx)


def g_closed_form(a, b, x, tag=LateralTag.NONE):
    """Lateral Borel sum g, g+ or g- of 2F0(a, b; -x) at the point x."""
    a, b = complex(a), complex(b)
    x = as_branched(x)
    tag = LateralTag.coerce(tag)
    arg = _to_window(x.argument, _G_WINDOW[tag])
    v, e = _G(a, b, complex(math.log(x.modulus), arg))
    return EvalResult(v, e)


def h_k_closed_form(a, b, x, tag=LateralTag.NONE, want="h"):
    """Lateral Borel sums h^{tag} of 2F0(1-a, 1-b; x), or k^{tag} = e^{1/x} x^{1-a-b} h^{tag}."""
    a, b = complex(a), complex(b)
    x = as_branched(x)
    tag = LateralTag.coerce(tag)
    arg = _to_window(x.argument - PI, _G_WINDOW[tag])
    h, e = _G(1 - a, 1 - b, complex(math.log(x.modulus), arg))
    if want == "h":
        return EvalResult(h, e)
    if want != "k":
        raise ValueError("want must be 'h' or 'k'")
    lk = 1 / x.value() + (1 - a - b) * x.log()
    f = cmath.exp(lk)
    return EvalResult(f * h, abs(f) * e)


def log_k(a, b, x, tag=LateralTag.NONE):
    """(log of the prefactor, h) so that k = exp(prefactor) * h; avoids overflow."""
    a, b = complex(a), complex(b)
    x = as_branched(x)
    tag = LateralTag.coerce(tag)
    arg = _to_window(x.argument - PI, _G_WINDOW[tag])
    h, e = _G(1 - a, 1 - b, complex(math.log(x.modulus), arg))
    return 1 / x.value() + (1 - a - b) * x.log(), h, e


def H0_eval(a, b, x, side="primary"):
    """H0 = k+/g (Re x > 0) or k/g- (Re x < 0);  H0' = k-/g (Re x > 0) or k/g+ (Re x < 0)."""
    a, b = complex(a), complex(b)
    x = as_branched(x)
    re = x.value().real
    if re == 0:
        raise OnCut("H0 is evaluated on Re x > 0 or Re x < 0")
    T = LateralTag
    if side == "primary":
        ktag, gtag = (T.PLUS, T.NONE) if re > 0 else (T.NONE, T.MINUS)
    elif side == "primed":
        ktag, gtag = (T.MINUS, T.NONE) if re > 0 else (T.NONE, T.PLUS)
    else:
        raise ValueError("side must be 'primary' or 'primed'")
    lk, h, eh = log_k(a, b, x, ktag)
    g = g_closed_form(a, b, x, gtag)
    num = h
    den = g.value
    if abs(den) < 1e-300:
        return EvalResult(den * cmath.exp(-lk) / num, 0.0, True)
    q = num / den
    if q == 0:
        return EvalResult(0j, 0.0)
    lq = lk + cmath.log(q)
    if lq.real > 700:
        return EvalResult(cmath.exp(-lq), 0.0, True)
    v = cmath.exp(lq)
    err = abs(v) * (eh / max(abs(h), 1e-300) + g.error / abs(den))
    return EvalResult(v, err)


def stokes_jump_g(a, b, x):
    """g+(x e^{2 pi i}) - g-(x) for arg x in (-3pi/2, -pi/2)."""
    x = as_branched(x)
    return (g_closed_form(a, b, x.rotate(2 * PI), LateralTag.PLUS).value
            - g_closed_form(a, b, x, LateralTag.MINUS).value)


def stokes_jump_k(a, b, x):
    """k+(x) - e^{2 pi i (1-a-b)} k-(x e^{-2 pi i})."""
    x = as_branched(x)
    a, b = complex(a), complex(b)
    kp = h_k_closed_form(a, b, x, LateralTag.PLUS, "k").value
    km = h_k_closed_form(a, b, x.rotate(-2 * PI), LateralTag.MINUS, "k").value
    return kp - cmath.exp(2j * PI * (1 - a - b)) * km


__all__ = [
    "LateralTag", "borel_transform", "laplace_sum", "g_closed_form",
    "h_k_closed_form", "H0_eval", "stokes_jump_g", "stokes_jump_k", "log_k",
]
