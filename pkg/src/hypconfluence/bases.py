"""Sectors, local bases w1..w4, connection coefficients and H^{eps+-}.

The equation is

    x (x - eps) w'' + (1 - eps + (a + b + 1) x) w' + a b w = 0,

with X = x/eps.  The local solutions are

    w1 = F(a, b; 1 - 1/eps; X)
    w2 = X^{1/eps} (1 - X)^{s} F(1 - a, 1 - b; 1 + 1/eps; X)
    w3 = F(a, b; a + b + 1/eps; 1 - X)
    w4 = X^{1/eps} (1 - X)^{s} F(1 - a, 1 - b; 2 - 1/eps - a - b; 1 - X)

where s = 1 - 1/eps - a - b and F = 2F1.  All powers are taken through the
lifted arguments of X and 1 - X.  The argument of X is arg(x) - arg(eps), so
the lift stored in ``x`` carries the winding around x = 0; the lift of 1 - X
is passed explicitly (default: principal near the lens, see
:func:`default_one_minus_lift`).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .core import (BasisInvalid, BranchedPoint, CoefficientPole, EvalResult,
                   IndeterminateZeroOverZero, OutOfDisk, SingularTransform,
                   as_branched)
from .hypergeometric import f21_scaled
from .special import (distance_to_nonpositive_integers, gamma_ratio,
                      is_nonpositive_integer)

VALIDITY_TOL = 1e-9
DEFAULT_GAMMA = 2 * math.pi / 5
PI = math.pi


@dataclass(frozen=True)
class SectorConfig:
    gamma_opening: float = DEFAULT_GAMMA
    radius: float | None = None

    def __post_init__(self):
        if not 0 < self.gamma_opening < PI / 2:
            raise ValueError("gamma_opening must lie in (0, pi/2)")
        if self.radius is None:
            object.__setattr__(self, "radius", min(0.1, self.gamma_opening / (4 * PI)))
        if not self.radius > 0:
            raise ValueError("radius must be positive")

    def interval(self, sign):
        g = self.gamma_opening
        if sign == "+":
            return (-PI + g, PI - g)
        return (g, 2 * PI - g)


@dataclass(frozen=True)
class Params:
    """The triple (a, b, eps); ``eps`` carries its lifted argument."""

    a: complex
    b: complex
    eps: BranchedPoint
    inv_eps: complex = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))
        if not isinstance(self.eps, BranchedPoint):
            object.__setattr__(self, "eps", as_branched(self.eps))
        object.__setattr__(self, "inv_eps", 1.0 / self.eps.value())

    @classmethod
    def create(cls, a, b, eps, sign="+"):
        """Build Params from a complex eps, lifting arg(eps) into the sector
        interval of ``sign``: (-pi, pi] for '+' and (0, 2 pi] for '-'."""
        if isinstance(eps, BranchedPoint):
            return cls(a, b, eps)
        eps = complex(eps)
        if sign == "+":
            e = BranchedPoint.from_complex(eps)
        else:
            e = BranchedPoint.from_complex(eps, near=PI)
        return cls(a, b, e)

    @property
    def eps_value(self):
        return self.eps.value()

    def validity(self):
        """Validity flags for w1..w4 (Gamma-argument distance 1e-9)."""
        ie = self.inv_eps
        a, b = self.a, self.b
        args = {"w1": 1 - ie, "w2": 1 + ie, "w3": a + b + ie, "w4": 2 - ie - a - b}
        return {k: distance_to_nonpositive_integers(v) > VALIDITY_TOL for k, v in args.items()}

    def with_eps(self, eps):
        return Params(self.a, self.b, eps)


def sector_classify(eps, cfg=None):
    """Return the set of sector tags ({'S_plus', 'S_minus'}) containing eps."""
    cfg = cfg or SectorConfig()
    eps = as_branched(eps)
    if eps.modulus >= cfg.radius:
        raise OutOfDisk(f"|eps| = {eps.modulus} >= r = {cfg.radius}")
    out = set()
    for sign, tag in (("+", "S_plus"), ("-", "S_minus")):
        lo, hi = cfg.interval(sign)
        # membership of the point eps (its argument taken modulo 2 pi)
        t = lo + (eps.argument - lo) % (2 * PI)
        if lo < t < hi:
            out.add(tag)
    return out


def check_sign(p, sign):
    """Loose sector check on the lifted argument (the gamma -> 0 limit)."""
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    t = p.eps.argument
    if sign == "+" and not -PI <= t <= PI:
        raise ValueError(f"arg eps = {t} is not in the closure of S+")
    if sign == "-" and not 0 <= t <= 2 * PI:
        raise ValueError(f"arg eps = {t} is not in the closure of S-")


def log_kappa(p, sign):
    """log kappa^{+-} = (1-a-b) log eps +- pi i (a + b - 1 + 1/eps)."""
    s = 1 if sign == "+" else -1
    return (1 - p.a - p.b) * p.eps.log() + s * 1j * PI * (p.a + p.b - 1 + p.inv_eps)


def kappa(p, sign):
    check_sign(p, sign)
    return cmath.exp(log_kappa(p, sign))


def lens_point(p, t):
    """x = t*eps lifted with arg(x) = arg(eps) + Arg(t) (t near the segment (0, 1))."""
    t = complex(t)
    return BranchedPoint(abs(t) * p.eps.modulus, p.eps.argument + cmath.phase(t))


def _lift_x(p, x):
    if isinstance(x, BranchedPoint):
        return x
    return BranchedPoint.from_complex(complex(x), near=p.eps.argument)


def default_one_minus_lift(p, sign, x):
    """Lift of arg(1 - X) used when none is given.

    Inside |X| <= 1 the principal value is used (this covers the lens
    B(0,|eps|) & B(eps,|eps|) and the neighbourhood of x = 0).  Outside, the
    point is reached from the segment (0, eps) by passing on the far side of
    x = eps, turning with x:  arg(1 - X) = arg(x - eps) - arg(eps) +- pi, with
    arg(x - eps) = arg(x) + Arg(1 - eps/x); '+' for S+ and '-' for S-.
    """
    x = _lift_x(p, x)
    X = x.value() / p.eps_value
    if abs(X) <= 1:
        return cmath.phase(1 - X)
    s = 1 if sign == "+" else -1
    axe = x.argument + cmath.phase(1 - p.eps_value / x.value())
    return axe - p.eps.argument + s * PI


@dataclass
class _BasisParts:
    # w = exp(L) * S,  w' = exp(L) * (dL * S + dS)
    L: complex
    S: complex
    dL: complex
    dS: complex
    err: float


def _one_minus_point(X, arg1m):
    v = 1 - X.value()
    if v == 0:
        return None
    if arg1m is None:
        return BranchedPoint.from_complex(v)
    return BranchedPoint(abs(v), arg1m)


def basis_parts(p, which, x, arg_one_minus=None, derivative=True):
    """Log-scaled evaluation of a basis solution and its x-derivative."""
    flags = p.validity()
    if not flags[which]:
        raise BasisInvalid(f"{which} does not exist for these parameters")
    a, b, ie = p.a, p.b, p.inv_eps
    if not isinstance(x, BranchedPoint) and complex(x) == 0:
        return _basis_parts_at_zero(p, which, derivative)
    x = _lift_x(p, x)
    X = x.div(p.eps)
    Xv = X.value()
    OX = _one_minus_point(X, arg_one_minus)
    s = 1 - ie - a - b
    if which in ("w2", "w4"):
        if OX is None:
            raise BasisInvalid(f"{which} is singular at x = eps")
        L = ie * X.log() + s * OX.log()
        dL = ie * (ie / Xv - s / (1 - Xv))
    else:
        L, dL = 0j, 0j
    if which == "w1":
        c, ab, up, Z, W, dz = 1 - ie, (a, b), a * b, X, OX, ie
    elif which == "w2":
        c, ab, up, Z, W, dz = 1 + ie, (1 - a, 1 - b), (1 - a) * (1 - b), X, OX, ie
    elif which == "w3":
        c, ab, up, Z, W, dz = a + b + ie, (a, b), a * b, OX if OX is not None else 0j, X, -ie
    elif which == "w4":
        c, ab, up, Z, W, dz = 2 - ie - a - b, (1 - a, 1 - b), (1 - a) * (1 - b), OX, X, -ie
    else:
        raise ValueError(f"unknown basis function {which!r}")
    # F may live on a sheet far outside the double range: keep its scale in L
    sc, F = f21_scaled(ab[0], ab[1], c, Z, one_minus_z=W)
    L = L + sc
    dS = 0j
    if derivative:
        sd, G = f21_scaled(ab[0] + 1, ab[1] + 1, c + 1, Z, one_minus_z=W)
        dS = dz * up / c * G.value * cmath.exp(sd - sc)
    return _BasisParts(L, F.value, dL, dS, F.truncation_bound)


def _basis_parts_at_zero(p, which, derivative):
    # w1 and w3 are analytic at x = 0 (X = 0, 1 - X = 1 on the principal sheet)
    a, b, ie = p.a, p.b, p.inv_eps
    if which == "w1":
        c = 1 - ie
        dS = a * b / c * ie if derivative else 0j
        return _BasisParts(0j, 1 + 0j, 0j, dS, 0.0)
    if which == "w3":
        c = a + b + ie
        sc, F = f21_scaled(a, b, c, 1 + 0j)
        dS = 0j
        if derivative:
            sd, G = f21_scaled(a + 1, b + 1, c + 1, 1 + 0j)
            dS = -ie * a * b / c * G.value * cmath.exp(sd - sc)
        return _BasisParts(sc, F.value, 0j, dS, F.truncation_bound)
    raise BasisInvalid(f"{which} is branched at x = 0; pass a lifted point")


def basis_eval(p, which, x, arg_one_minus=None):
    """Value of w1..w4 at the lifted point x.

    ``x`` may be a BranchedPoint or a complex number (then lifted with
    arg(x) closest to arg(eps)).  ``arg_one_minus`` fixes the lift of
    1 - x/eps (default: principal).
    """
    bp = basis_parts(p, which, x, arg_one_minus, derivative=False)
    f = cmath.exp(bp.L)
    return EvalResult(f * bp.S, abs(f) * bp.err)


def basis_value_and_derivative(p, which, x, arg_one_minus=None):
    """(w, w') at x as complex numbers."""
    bp = basis_parts(p, which, x, arg_one_minus)
    f = cmath.exp(bp.L)
    return f * bp.S, f * (bp.dL * bp.S + bp.dS)


def _coefficient(num, den):
    # an exact pole in the denominator wins: the term is identically absent
    if any(is_nonpositive_integer(z) for z in den):
        return 0j
    if any(is_nonpositive_integer(z, VALIDITY_TOL) for z in num):
        raise CoefficientPole("connection coefficient has a pole; use the pole-free multipliers")
    return gamma_ratio(num, den)


def connection_coeffs(p, which):
    """(D, E) with w2 = D w3 + E w4, or (A, B) with w3 = A w1 + B w2."""
    a, b, ie = p.a, p.b, p.inv_eps
    if which == "w2_in_Beps":
        return (_coefficient((1 - ie - a - b, 1 + ie), (1 - a, 1 - b)),
                _coefficient((a + b - 1 + ie, 1 + ie), (a + ie, b + ie)))
    if which == "w3_in_B0":
        return (_coefficient((ie, a + b + ie), (b + ie, a + ie)),
                _coefficient((a + b + ie, -ie), (a, b)))
    raise ValueError(f"unknown connection {which!r}")


def _sphere_quotient(lognum, num, den, err=0.0):
    """exp(lognum) * num / den as a sphere-valued EvalResult."""
    if abs(den) < 1e-300:
        if abs(num) < 1e-300:
            raise IndeterminateZeroOverZero("0/0 in basis quotient")
        return EvalResult(den / num * cmath.exp(-lognum), 0.0, True)
    q = num / den
    if q == 0:
        return EvalResult(0j, err)
    lq = lognum + cmath.log(q)
    if lq.real > 700:
        return EvalResult(cmath.exp(-lq), 0.0, True)
    v = cmath.exp(lq)
    return EvalResult(v, err * abs(v / q) / abs(den) if den else 0.0)


def H_eps(p, sign, x, arg_one_minus=None):
    """H^{eps+} = kappa+ w2/w3 (sign '+') or H^{eps-} = kappa- w4/w1 (sign '-').

    Sphere valued: near a zero of the denominator the result carries the
    reciprocal flag.
    """
    check_sign(p, sign)
    if arg_one_minus is None:
        arg_one_minus = default_one_minus_lift(p, sign, x)
    i, j = ("w2", "w3") if sign == "+" else ("w4", "w1")
    ni = basis_parts(p, i, x, arg_one_minus, derivative=False)
    nj = basis_parts(p, j, x, arg_one_minus, derivative=False)
    lognum = log_kappa(p, sign) + ni.L - nj.L
    return _sphere_quotient(lognum, ni.S, nj.S, ni.err * abs(nj.S) + nj.err * abs(ni.S))


def lemma_symmetry(p, x=None, direction="+to-", arg_one_minus=None):
    """The involution (eps, x) -> (eps', x') exchanging w3 <-> w1 and w2 <-> w4.

    eps' = 1/(1 - 1/eps - a - b) = -eps/(1 + (a+b-1) eps) and
    x' = eps' (1 - x/eps).  ``direction`` '+to-' adds pi to the argument
    (S+ to S-), '-to+' subtracts it.  The lift of 1 - x'/eps' equals that of
    x/eps, i.e. arg(x) - arg(eps).
    """
    a, b = p.a, p.b
    e = p.eps_value
    den = 1 + (a + b - 1) * e
    if abs(den) < 1e-14 or abs(1 - p.inv_eps - a - b) < 1e-300:
        raise SingularTransform("eps' is not defined")
    shift = PI if direction == "+to-" else -PI
    eps2 = BranchedPoint(p.eps.modulus / abs(den), p.eps.argument + shift - cmath.phase(den))
    p2 = Params(a, b, eps2)
    if x is None:
        return p2, None
    x = _lift_x(p, x)
    OX = _one_minus_point(x.div(p.eps), arg_one_minus)
    if OX is None:
        raise SingularTransform("x = eps is mapped to x' = 0")
    x2 = BranchedPoint(eps2.modulus * OX.modulus, eps2.argument + OX.argument)
    return p2, x2
