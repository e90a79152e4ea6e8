"""The Riccati system attached to the hypergeometric equation.

With y = -x (x - eps) w'/w the linear equation becomes

    x' = x (x - eps),
    y' = a b x (x - eps) + (-1 + (1 - a - b) x) y + y^2,

whose singular points are (0, 0), (eps, 0), (0, 1) and (eps, 1 + eps (a+b-1)).
Each basis solution w_i gives an invariant curve y = rho_i(x), and a pair
(w_i, w_j) gives the first integral

    I = kappa (w_i / w_j) (y - rho_i) / (y - rho_j).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .bases import (Params, _lift_x, _sphere_quotient, basis_parts, check_sign,
                    default_one_minus_lift, lens_point, log_kappa)
from .core import BasisZero, BranchedPoint, BranchDisagreement, EvalResult, as_branched
from .hypergeometric import f21_scaled
from .stokes import product_L_closed, unfolded_multipliers

PI = math.pi


@dataclass(frozen=True)
class SingularPointInfo:
    location: tuple
    eigen_quotient: complex
    eigenvalues: tuple


@dataclass(frozen=True)
class FirstIntegralSpec:
    sign: str
    pair: tuple

    @classmethod
    def for_sign(cls, sign):
        return cls(sign, (2, 3) if sign == "+" else (4, 1))


def riccati_field(p, state):
    x, y = complex(state[0]), complex(state[1])
    q = x * (x - p.eps_value)
    return q, p.a * p.b * q + (-1 + (1 - p.a - p.b) * x) * y + y * y


def jacobian(p, state):
    """Jacobian of the field; it is lower triangular (x' does not depend on y)."""
    x, y = complex(state[0]), complex(state[1])
    e = p.eps_value
    a, b = p.a, p.b
    return ((2 * x - e, 0j),
            (a * b * (2 * x - e) + (1 - a - b) * y, -1 + (1 - a - b) * x + 2 * y))


def singular_points(p):
    """The four singular points with the quotient (y-eigenvalue)/(x-eigenvalue)."""
    e = p.eps_value
    y1 = 1 + e * (p.a + p.b - 1)
    out = []
    for loc in ((0j, 0j), (e, 0j), (0j, 1 + 0j), (e, y1)):
        J = jacobian(p, loc)
        lx, ly = J[0][0], J[1][1]
        out.append(SingularPointInfo(loc, ly / lx, (lx, ly)))
    return out


def _which(which):
    if isinstance(which, str):
        which = int(which.lstrip("w"))
    if which not in (1, 2, 3, 4):
        raise ValueError("which must be 1, 2, 3 or 4")
    return which


def rho_eval(p, which, x, arg_one_minus=None):
    """rho_i(x) = -x (x - eps) w_i'(x) / w_i(x).

    rho_2 and rho_3 use the 2F1 quotients
        rho_2 = 1 + (a+b-1) x + x (1-X) (1-a)(1-b)/(1+1/eps) F(2-a,2-b;2+1/eps;X)/F(1-a,1-b;1+1/eps;X)
        rho_3 = x (X-1) ab/(a+b+1/eps) F(1+a,1+b;1+a+b+1/eps;1-X)/F(a,b;a+b+1/eps;1-X)
    (X = x/eps); rho_1 and rho_4 use the contiguous derivative of their 2F1.
    """
    which = _which(which)
    if not isinstance(x, BranchedPoint) and complex(x) == 0:
        # w1 and w2 / X^{1/eps} are analytic at 0 with y = -x(x-eps) w'/w -> 0, 1
        if which in (1, 2):
            return EvalResult(0j if which == 1 else 1 + 0j, 0.0)
        raise ValueError(f"rho_{which} has no limit at x = 0")
    x = _lift_x(p, x)
    a, b, ie = p.a, p.b, p.inv_eps
    xv = x.value()
    X = xv * ie
    if which in (2, 3):
        if 1 - X == 0:
            om = None
        elif arg_one_minus is None:
            om = BranchedPoint.from_complex(1 - X)
        else:
            om = BranchedPoint(abs(1 - X), arg_one_minus)
        if which == 2:
            c = 1 + ie
            s0, F0 = f21_scaled(1 - a, 1 - b, c, X, one_minus_z=om)
            s1, F1 = f21_scaled(2 - a, 2 - b, c + 1, X, one_minus_z=om)
            pre = 1 + (a + b - 1) * xv
            fac = xv * (1 - X) * (1 - a) * (1 - b) / c
        else:
            c = a + b + ie
            Xb = x.div(p.eps)
            Z = om if om is not None else 0j
            s0, F0 = f21_scaled(a, b, c, Z, one_minus_z=Xb)
            s1, F1 = f21_scaled(a + 1, b + 1, c + 1, Z, one_minus_z=Xb)
            pre = 0j
            fac = xv * (X - 1) * a * b / c
        if F0.value == 0:
            raise BasisZero(f"w{which} vanishes at x = {xv}")
        if fac == 0:
            return EvalResult(pre, 0.0)
        r = F1.value / F0.value * cmath.exp(s1 - s0)
        err = abs(fac * r) * (F0.truncation_bound / abs(F0.value)
                              + F1.truncation_bound / max(abs(F1.value), 1e-300))
        return EvalResult(pre + fac * r, err)
    bp = basis_parts(p, f"w{which}", x, arg_one_minus)
    if bp.S == 0:
        raise BasisZero(f"w{which} vanishes at x = {xv}")
    q = xv * (xv - p.eps_value)
    v = -q * (bp.dL + bp.dS / bp.S)
    return EvalResult(v, abs(q) * bp.err / abs(bp.S) * (1 + abs(bp.dS / bp.S)))


def first_integral_eval(p, sign, state, arg_one_minus=None):
    """I^{eps+-}(x, y) = kappa (w_i/w_j) (y - rho_i)/(y - rho_j), sphere valued.

    (i, j) = (2, 3) for '+', (4, 1) for '-'.  Written as
    kappa (y w_i + q w_i') / (y w_j + q w_j') with q = x (x - eps), which
    avoids dividing by w_i or w_j.
    """
    check_sign(p, sign)
    x, y = state
    x = _lift_x(p, x)
    y = complex(y)
    if arg_one_minus is None:
        arg_one_minus = default_one_minus_lift(p, sign, x)
    i, j = FirstIntegralSpec.for_sign(sign).pair
    xv = x.value()
    q = xv * (xv - p.eps_value)
    ni = basis_parts(p, f"w{i}", x, arg_one_minus)
    nj = basis_parts(p, f"w{j}", x, arg_one_minus)
    # w = e^L S, w' = e^L (dL S + dS)
    num = y * ni.S + q * (ni.dL * ni.S + ni.dS)
    den = y * nj.S + q * (nj.dL * nj.S + nj.dS)
    lognum = log_kappa(p, sign) + ni.L - nj.L
    err = ni.err * abs(den) + nj.err * abs(num)
    return _sphere_quotient(lognum, num, den, err)


def first_integral_monodromy_check(p, sign, y, x=None, **transport_options):
    """Residuals of the H-monodromy relations with H replaced by I(., y).

    The basis pairs (f, f') are continued from the lens point by +-pi around
    both singular points and I = (y f1 + q f1')/(y f2 + q f2') is formed at
    the end points; the relations are those of ``wild_continuous_split_check``.
    """
    from .paths import continue_basis_pair
    from .stokes import _relres

    check_sign(p, sign)
    if x is None:
        x = lens_point(p, 0.5)
    s = unfolded_multipliers(p, sign)
    ie = p.inv_eps
    e_eps = cmath.exp(2j * PI * (p.a + p.b - 1 + ie))
    e_0 = cmath.exp(-2j * PI * ie)
    y = complex(y)
    out = {}
    for around in ("0", "eps"):
        vals = {}
        for turn in (PI, -PI):
            (f1, d1), (f2, d2) = continue_basis_pair(p, sign, x, around, turn,
                                                     with_derivatives=True, **transport_options)
            c = 0j if around == "0" else p.eps_value
            base = x.value() if isinstance(x, BranchedPoint) else complex(x)
            xe = c + (base - c) * cmath.exp(1j * turn)
            q = xe * (xe - p.eps_value)
            vals[turn] = (y * f1 + q * d1) / (y * f2 + q * d2)
        Ip, Im = vals[PI], vals[-PI]
        if sign == "+":
            if around == "eps":
                out["I_tour_eps"] = _relres(Im, e_eps * (Ip - s.mu))
            else:
                out["I_tour_0"] = _relres(1 / Ip, e_0 * (1 / Im + s.lam))
        else:
            if around == "0":
                out["I_tour_eps"] = _relres(Im, e_0 * (Ip - s.mu))
            else:
                out["I_tour_0"] = _relres(1 / Ip, e_eps * (1 / Im + s.lam))
    return out


# ------------------------------------------------------------- universal unfolding

@dataclass(frozen=True)
class UniversalMap:
    c: complex
    kappa_universal: complex
    eps_tilde: BranchedPoint
    singular_points: tuple


def _eps_tilde(a, b, sqrt_eps):
    # 1/eps~ = 1 - c;  eps~ = -2 sqrt(eps) / (1 - (1-a-b) sqrt(eps))
    r = sqrt_eps.value()
    d = 1 - (1 - a - b) * r
    v = -2 * r / d
    return BranchedPoint(abs(v), sqrt_eps.argument + PI - cmath.phase(d))


def universal_map(a, b, sqrt_eps):
    """Data of the universal family x' = x^2 - eps for a chosen branch of sqrt(eps).

    Under x = -sqrt(eps) + 2 sqrt(eps) u the linear equation
        (x^2 - eps) w'' + (-1 + (a+b+1) x) w' + a b w = 0
    becomes the Gauss equation in u with c = 1/(2 sqrt(eps)) + (a+b+1)/2, i.e.
    the standard family with parameter eps~ = 1/(1 - c) and x~ = eps~ u.
    """
    a, b = complex(a), complex(b)
    s = as_branched(sqrt_eps)
    r = s.value()
    c = 1 / (2 * r) + (a + b + 1) / 2
    lk = (1 - a - b) * (math.log(2 * s.modulus) + 1j * s.argument) + 1j * PI * (1 / (2 * r) + (a + b + 1) / 2)
    return UniversalMap(c, cmath.exp(lk), _eps_tilde(a, b, s), (-r, r))


def universal_params(a, b, sqrt_eps):
    return Params(a, b, universal_map(a, b, sqrt_eps).eps_tilde)


def L_universal(a, b, eps, tol=1e-10):
    """L(eps) = lambda+ mu+ for the universal family, on both branches of sqrt(eps).

    ``eps`` is a BranchedPoint (or complex) with arg in (gamma, 4 pi - gamma);
    the branches use arg(eps)/2 and arg(eps)/2 + pi.  Returns the closed form
    -(1 - e^{-2 pi i a})(1 - e^{-2 pi i b}) after checking both branches.
    """
    a, b = complex(a), complex(b)
    e = as_branched(eps)
    closed = product_L_closed(a, b)
    for k in (0, 1):
        s = BranchedPoint(math.sqrt(e.modulus), e.argument / 2 + k * PI)
        pt = universal_params(a, b, s)
        m = unfolded_multipliers(pt, "+", check=False)
        v = m.lam * m.mu
        if abs(v - closed) > tol * (1 + abs(closed)):
            raise BranchDisagreement(f"branch {k}: {v} vs closed form {closed}")
    return closed


__all__ = [
    "SingularPointInfo", "FirstIntegralSpec", "UniversalMap", "riccati_field",
    "jacobian", "singular_points", "rho_eval", "first_integral_eval",
    "first_integral_monodromy_check", "universal_map", "universal_params",
    "L_universal",
]
