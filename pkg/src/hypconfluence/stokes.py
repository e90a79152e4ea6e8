"""Stokes multipliers, their unfolded counterparts and monodromy matrices."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .bases import check_sign, lens_point
from .core import BranchedPoint
from .special import log_gamma_ratio, reciprocal_gamma

PI = math.pi
ZERO_TOL = 1e-12


@dataclass(frozen=True)
class StokesPair:
    lam: complex
    mu: complex

    @property
    def product(self):
        return self.lam * self.mu


@dataclass(frozen=True)
class PathSpec:
    """Continuation path: start at ``base_point`` and turn by ``turn_angle``
    around ``center`` ('0' or 'eps') along the circle through the base point."""

    base_point: BranchedPoint
    center: str
    turn_angle: float

    def __post_init__(self):
        if self.center not in ("0", "eps"):
            raise ValueError("center must be '0' or 'eps'")


@dataclass(frozen=True)
class Mat2:
    m11: complex
    m12: complex
    m21: complex
    m22: complex
    basis: str = ""
    loop: PathSpec | None = None

    def as_array(self):
        import numpy as np
        return np.array([[self.m11, self.m12], [self.m21, self.m22]], dtype=complex)

    @classmethod
    def from_array(cls, m, basis="", loop=None):
        return cls(complex(m[0][0]), complex(m[0][1]), complex(m[1][0]), complex(m[1][1]), basis, loop)

    def det(self):
        return self.m11 * self.m22 - self.m12 * self.m21

    def __matmul__(self, other):
        return Mat2(self.m11 * other.m11 + self.m12 * other.m21,
                    self.m11 * other.m12 + self.m12 * other.m22,
                    self.m21 * other.m11 + self.m22 * other.m21,
                    self.m21 * other.m12 + self.m22 * other.m22,
                    self.basis)

    def max_abs_diff(self, other, relative_to=None):
        """max |entry difference| / (1 + |reference entry|)."""
        ref = relative_to or self
        worst = 0.0
        for n in ("m11", "m12", "m21", "m22"):
            d = abs(getattr(self, n) - getattr(other, n)) / (1 + abs(getattr(ref, n)))
            worst = max(worst, d)
        return worst


def stokes_limits(a, b):
    """Stokes multipliers (lambda, mu) of g and k at eps = 0."""
    a, b = complex(a), complex(b)
    lam = -2j * PI * cmath.exp(1j * PI * (1 - a - b)) * reciprocal_gamma(a) * reciprocal_gamma(b)
    mu = -2j * PI * reciprocal_gamma(1 - a) * reciprocal_gamma(1 - b)
    return StokesPair(lam, mu)


def _ratio(num, den, log_extra):
    # exp(sum logGamma(num) - sum logGamma(den) + log_extra)
    return cmath.exp(log_gamma_ratio(num, den) + log_extra)


def unfolded_multipliers(p, sign, check=True):
    """lambda^{+-}(eps), mu^{+-}(eps) through logGamma differences (pole free in the sector).

    ``check=False`` skips the sector test (used for the universal unfolding,
    whose hypergeometric parameter lies outside the sectors).
    """
    if check:
        check_sign(p, sign)
    elif sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    a, b, ie = p.a, p.b, p.inv_eps
    le = p.eps.log()
    rab = reciprocal_gamma(a) * reciprocal_gamma(b)
    r1ab = reciprocal_gamma(1 - a) * reciprocal_gamma(1 - b)
    if sign == "+":
        lam = -2j * PI * cmath.exp(1j * PI * (1 - a - b)) * rab
        if lam != 0:
            lam *= _ratio((a + b + ie,), (1 + ie,), (a + b - 1) * le)
        mu = -2j * PI * r1ab
        if mu != 0:
            mu *= _ratio((1 + ie,), (a + b + ie,), (1 - a - b) * le)
    else:
        mu = -2j * PI * r1ab
        if mu != 0:
            mu *= _ratio((2 - ie - a - b,), (1 - ie,), (1 - a - b) * (le + 1j * PI))
        lam = -2j * PI * rab
        if lam != 0:
            lam *= _ratio((1 - ie,), (2 - ie - a - b,), (a + b - 1) * le)
    return StokesPair(lam, mu)


def product_L(p, sign):
    s = unfolded_multipliers(p, sign)
    return s.lam * s.mu


def product_L_closed(a, b):
    a, b = complex(a), complex(b)
    return -(1 - cmath.exp(-2j * PI * a)) * (1 - cmath.exp(-2j * PI * b))


def default_loop(p, around, turn=2 * PI):
    return PathSpec(lens_point(p, 0.5), "0" if around in ("0", 0) else "eps", turn)


def monodromy_matrix(p, sign, around, check=True):
    """Analytic monodromy matrix in B+ = (kappa+ w2, w3) or B- = (kappa- w4, w1).

    Convention: the column of continued functions equals M times the column
    of the original ones, f_{(delta, pi)} = M f_{(delta, -pi)}.
    """
    around = "0" if around in ("0", 0) else "eps"
    s = unfolded_multipliers(p, sign, check=check)
    a, b, ie = p.a, p.b, p.inv_eps
    e0 = cmath.exp(2j * PI * ie)
    ee = cmath.exp(2j * PI * (1 - a - b - ie))
    loop = default_loop(p, around)
    if sign == "+":
        if around == "0":
            return Mat2(e0, 0j, s.lam, 1 + 0j, "B_plus", loop)
        return Mat2(ee, s.mu, 0j, 1 + 0j, "B_plus", loop)
    if around == "eps":
        return Mat2(ee, 0j, s.lam, 1 + 0j, "B_minus", loop)
    return Mat2(e0, s.mu, 0j, 1 + 0j, "B_minus", loop)


@dataclass(frozen=True)
class LogTerms:
    w3_or_w1_obstructed: bool
    w2_or_w4_obstructed: bool


def log_terms_predicate(p, sign):
    """Which basis functions are forced to acquire logarithmic terms at eps = 0."""
    s = unfolded_multipliers(p, sign)
    return LogTerms(abs(s.lam) > ZERO_TOL, abs(s.mu) > ZERO_TOL)


def wild_continuous_split_check(p, sign, x=None, **transport_options):
    """Residuals of the monodromy relations of H^{eps+-} obtained by continuation.

    For sign '+':
      'H_tour_eps':  H_(eps,-pi) = e^{2 pi i (a+b-1+1/eps)} (H_(eps,pi) - mu+)
      'H_tour_0':    1/H_(0,pi)  = e^{-2 pi i/eps} (1/H_(0,-pi) + lambda+)
    For sign '-':
      'K_tour_eps':  H_(0,-pi)   = e^{-2 pi i/eps} (H_(0,pi) - mu-)
      'K_tour_0':    1/H_(eps,pi) = e^{2 pi i (a+b-1+1/eps)} (1/H_(eps,-pi) + lambda-)
    Each residual is |LHS - RHS| / (|LHS| + |RHS|).  The basis functions are
    continued from the lens point ``x`` by the path integrator.
    """
    from .paths import continue_basis_pair

    check_sign(p, sign)
    if x is None:
        x = lens_point(p, 0.5)
    s = unfolded_multipliers(p, sign)
    ie = p.inv_eps
    out = {}
    for around in ("0", "eps"):
        plus = continue_basis_pair(p, sign, x, around, PI, **transport_options)
        minus = continue_basis_pair(p, sign, x, around, -PI, **transport_options)
        # H = f1/f2 with (f1, f2) the basis pair (kappa-normalised first entry)
        Hp = plus[0] / plus[1]
        Hm = minus[0] / minus[1]
        if sign == "+":
            if around == "eps":
                lhs, rhs = Hm, _cexp(2j * PI * (p.a + p.b - 1 + ie)) * (Hp - s.mu)
                name = "H_tour_eps"
            else:
                lhs, rhs = 1 / Hp, _cexp(-2j * PI * ie) * (1 / Hm + s.lam)
                name = "H_tour_0"
        else:
            if around == "0":
                lhs, rhs = Hm, _cexp(-2j * PI * ie) * (Hp - s.mu)
                name = "K_tour_eps"
            else:
                lhs, rhs = 1 / Hp, _cexp(2j * PI * (p.a + p.b - 1 + ie)) * (1 / Hm + s.lam)
                name = "K_tour_0"
        out[name] = _relres(lhs, rhs)
    return out


def _cexp(z):
    return cmath.exp(z)


def _relres(lhs, rhs):
    lhs, rhs = complex(lhs), complex(rhs)
    den = abs(lhs) + abs(rhs)
    return 0.0 if den == 0 else abs(lhs - rhs) / den
