"""Complex Gamma function, Pochhammer symbols and branch-tracked powers."""

from __future__ import annotations

import cmath
import math

from .core import BranchedPoint, PoleError

# Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficients).
_LANCZOS_G = 607 / 128
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)
_LOG_SQRT_2PI = 0.5 * math.log(2 * math.pi)
_LOG_PI = math.log(math.pi)

# B_{2k} / (2k (2k-1)) for the Stirling series
_STIRLING = tuple(
    b / ((2 * k) * (2 * k - 1))
    for k, b in enumerate(
        (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6,
         -3617 / 510, 43867 / 798, -174611 / 330),
        start=1,
    )
)
_STIRLING_MIN = 15.0


def is_nonpositive_integer(z, tol=0.0):
    """True when z lies within ``tol`` of {0, -1, -2, ...}."""
    z = complex(z)
    if abs(z.imag) > tol:
        return False
    n = round(z.real)
    return n <= 0 and abs(z.real - n) <= tol


def distance_to_nonpositive_integers(z):
    z = complex(z)
    n = min(round(z.real), 0)
    return abs(z - n)


def _lanczos(z):
    # Gamma(z) for Re z >= 1/2
    z = z - 1
    a = _LANCZOS_C[0]
    for k in range(1, len(_LANCZOS_C)):
        a += _LANCZOS_C[k] / (z + k)
    t = z + _LANCZOS_G + 0.5
    return cmath.exp((z + 0.5) * cmath.log(t) - t + _LOG_SQRT_2PI) * a


def gamma(z):
    """Complex Gamma function."""
    z = complex(z)
    if is_nonpositive_integer(z):
        raise PoleError(f"Gamma has a pole at {z}")
    if abs(z) > 100:
        try:
            return cmath.exp(loggamma(z))
        except OverflowError:
            return complex(math.inf, 0.0)
    if z.real < 0.5:
        return math.pi / (cmath.sin(math.pi * z) * _lanczos(1 - z))
    return _lanczos(z)


def reciprocal_gamma(z):
    """1/Gamma(z); exactly 0 at the poles of Gamma."""
    z = complex(z)
    if is_nonpositive_integer(z):
        return 0j
    if abs(z) > 100:
        try:
            return cmath.exp(-loggamma(z))
        except OverflowError:
            return complex(math.inf, 0.0)
    if z.real < 0.5:
        return cmath.sin(math.pi * z) * _lanczos(1 - z) / math.pi
    return 1.0 / _lanczos(z)


def log_sin_pi(z):
    """A logarithm of sin(pi z) that does not overflow for large |Im z|."""
    z = complex(z)
    if abs(z.imag) < 15:
        return cmath.log(cmath.sin(math.pi * z))
    if z.imag > 0:
        # sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z})
        return -1j * math.pi * z + cmath.log(0.5j) + cmath.log(1 - cmath.exp(2j * math.pi * z))
    return 1j * math.pi * z + cmath.log(-0.5j) + cmath.log(1 - cmath.exp(-2j * math.pi * z))


def _stirling(z):
    zi = 1.0 / z
    zi2 = zi * zi
    s = 0j
    p = zi
    for c in _STIRLING:
        s += c * p
        p *= zi2
    return (z - 0.5) * cmath.log(z) - z + _LOG_SQRT_2PI + s


def loggamma(z):
    """A logarithm of Gamma(z), accurate in the real part and modulo 2*pi*i.

    Stirling series after an upward shift, reflection for Re z < 1/2.
    """
    z = complex(z)
    if is_nonpositive_integer(z):
        raise PoleError(f"Gamma has a pole at {z}")
    if z.real < 0.5:
        return _LOG_PI - log_sin_pi(z) - loggamma(1 - z)
    n = 0
    p = 1 + 0j
    while abs(z + n) < _STIRLING_MIN:
        p *= z + n
        n += 1
    if n:
        return _stirling(z + n) - cmath.log(p)
    return _stirling(z)


def gamma_ratio(num, den):
    """prod Gamma(num) / prod Gamma(den), evaluated through logGamma.

    Any pole in ``den`` gives an exact 0; a pole in ``num`` raises PoleError.
    """
    for z in den:
        if is_nonpositive_integer(z):
            for w in num:
                if is_nonpositive_integer(w):
                    raise PoleError("0/0 in Gamma ratio")
            return 0j
    s = 0j
    for z in num:
        s += loggamma(z)
    for z in den:
        s -= loggamma(z)
    return cmath.exp(s)


def log_gamma_ratio(num, den):
    """sum logGamma(num) - sum logGamma(den); raises on any pole."""
    s = 0j
    for z in num:
        s += loggamma(z)
    for z in den:
        s -= loggamma(z)
    return s


def pochhammer(a, n):
    """Rising factorial (a)_n."""
    n = int(n)
    if n < 0:
        raise ValueError("n must be a natural number")
    p = 1 + 0j
    a = complex(a)
    for k in range(n):
        p *= a + k
    return p


def branched_pow(x, alpha):
    """x**alpha using the stored argument of the BranchedPoint ``x``."""
    if not isinstance(x, BranchedPoint):
        raise TypeError("branched_pow expects a BranchedPoint")
    return cmath.exp(complex(alpha) * x.log())


def branched_log(x):
    return x.log()
