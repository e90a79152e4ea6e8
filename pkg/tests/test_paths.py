import cmath
import math

import pytest

from hypconfluence.bases import Params, basis_value_and_derivative, kappa, lens_point
from hypconfluence.core import BranchedPoint, StepUnderflow
from hypconfluence.paths import (monodromy_via_integration, transport_linear,
                                 transport_riccati)
from hypconfluence.riccati import first_integral_eval, rho_eval
from hypconfluence.stokes import PathSpec, monodromy_matrix

PI = math.pi
# moderate conditioning: 2 pi |Im 1/eps| stays small enough for double precision
P_MOD = Params(0.3 + 0.1j, 0.6, BranchedPoint(0.1, 0.3))


def _state(p, which, x):
    return basis_value_and_derivative(p, which, x)


def test_zero_length_path():
    s = (1.2 + 0.3j, -0.4j)
    r = transport_linear(P_MOD, [0.05 + 0.02j, 0.05 + 0.02j], s)
    assert r.final_state == s and r.error_estimate == 0


def test_trivial_loop():
    e = P_MOD.eps_value
    c = 4 * e
    base = BranchedPoint.from_complex(c + 0.5 * e)
    # a circle of radius |eps|/2 around 4 eps encloses no singular point
    path = [c + 0.5 * e * cmath.exp(2j * PI * k / 64) for k in range(65)]
    s = (1.0 + 0.5j, 0.3 - 2j)
    r = transport_linear(P_MOD, path, s)
    assert max(abs(r.final_state[i] - s[i]) for i in range(2)) <= 1e-10 * abs(s[1])
    del base


def test_eigen_loop_of_kappa_w2():
    p = P_MOD
    x = lens_point(p, 0.5)
    k = kappa(p, "+")
    w, dw = _state(p, "w2", x)
    s = (k * w, k * dw)
    r = transport_linear(p, PathSpec(x, "0", 2 * PI), s)
    f = cmath.exp(2j * PI / p.eps_value)
    assert abs(r.final_state[0] - f * s[0]) <= 1e-6 * abs(f * s[0])
    assert abs(r.final_state[1] - f * s[1]) <= 1e-6 * abs(f * s[1])


def test_clearance():
    p = P_MOD
    with pytest.raises(StepUnderflow):
        transport_linear(p, [0.5 * p.eps_value, 0.001 * p.eps_value], (1, 0))


def _far_path(p):
    e = p.eps_value
    # once around x = 0, then over to the far side of x = eps
    return [0.5 * e, 0.5 * e - 0.7j * e, -0.6 * e - 0.7j * e, -0.6 * e + 0.9j * e,
            1.6 * e + 0.9j * e, 1.6 * e]


def test_path_reversal():
    p = P_MOD
    x = lens_point(p, 0.5)
    s = _state(p, "w3", x)
    e = p.eps_value
    # a non-winding path: a loop would multiply part of the state by
    # |exp(2 pi i/eps)| ~ 1e8 and the return leg would have to cancel it
    path = [0.5 * e, 0.5 * e + 0.8j * e, 1.7 * e + 0.8j * e, 1.7 * e]
    fwd = transport_linear(p, path, s)
    back = transport_linear(p, path[::-1], fwd.final_state)
    assert max(abs(back.final_state[i] - s[i]) / abs(s[i]) for i in range(2)) <= 1e-9


@pytest.mark.parametrize("method", ["dop853", "taylor"])
def test_homotopy_invariance(method):
    p = P_MOD
    e = p.eps_value
    x = lens_point(p, 0.5)
    s = _state(p, "w2", x)
    p1 = [0.5 * e, 0.5 * e + 0.8j * e, 1.7 * e + 0.8j * e, 1.7 * e]
    p2 = [0.5 * e, 0.5 * e + 1.5j * e, 1.2 * e + 1.5j * e, 2.2 * e + 0.3j * e, 1.7 * e]
    r1 = transport_linear(p, p1, s, method=method)
    r2 = transport_linear(p, p2, s, method=method)
    assert max(abs(r1.final_state[i] - r2.final_state[i]) / abs(r1.final_state[i]) for i in range(2)) <= 1e-8


def test_methods_agree():
    p = P_MOD
    x = lens_point(p, 0.5)
    s = _state(p, "w3", x)
    path = _far_path(p)
    r1 = transport_linear(p, path, s)
    r2 = transport_linear(p, path, s, method="taylor", dps=30)
    assert max(abs(r1.final_state[i] - r2.final_state[i]) / abs(r2.final_state[i]) for i in range(2)) <= 1e-9
    assert r1.error_estimate <= 1e-8


def test_transport_is_linear():
    p = P_MOD
    x = lens_point(p, 0.5)
    s1 = _state(p, "w2", x)
    s2 = _state(p, "w3", x)
    al, be = 0.7 - 0.2j, -1.3 + 0.4j
    comb = (al * s1[0] + be * s2[0], al * s1[1] + be * s2[1])
    path = _far_path(p)
    r = transport_linear(p, path, [s1, s2, comb])
    f1, f2, fc = r.final_state
    for i in range(2):
        ref = al * f1[i] + be * f2[i]
        assert abs(fc[i] - ref) <= 1e-9 * max(abs(al * f1[i]), abs(be * f2[i]))


def test_transported_values_match_basis():
    # inside the lens the continued w3 must equal the evaluated one
    p = P_MOD
    e = p.eps_value
    x0 = lens_point(p, 0.5)
    x1 = lens_point(p, 0.3 + 0.4j)
    r = transport_linear(p, [0.5 * e, (0.3 + 0.4j) * e], _state(p, "w3", x0))
    w, dw = _state(p, "w3", x1)
    assert abs(r.final_state[0] - w) <= 1e-10 * abs(w)


def test_monodromy_oracle_and_composition():
    p = Params(0.3, 0.7, BranchedPoint(0.05, PI / 6))
    n0 = monodromy_via_integration(p, "+", "0")
    ne = monodromy_via_integration(p, "+", "eps")
    a0 = monodromy_matrix(p, "+", "0")
    ae = monodromy_matrix(p, "+", "eps")
    assert n0.max_abs_diff(a0, a0) <= 1e-6
    comp = n0 @ ne
    ref = a0 @ ae
    assert comp.max_abs_diff(ref, ref) <= 1e-6


def test_monodromy_convergent_case():
    p = Params(-1, 0.7, BranchedPoint(0.05, PI / 6))
    m = monodromy_via_integration(p, "+", "0")
    assert abs(m.m21) <= 1e-8 and abs(m.m12) <= 1e-8


def test_riccati_stationary_point():
    r = transport_riccati(P_MOD, (0j, 0j), t_span=(0, 3))
    assert r.final_state == (0j, 0j)


def test_riccati_stays_on_rho3():
    p = Params(0.3, 0.7, BranchedPoint(0.05, 1.4))
    e = p.eps_value
    x0 = 0.5 * e
    y0 = rho_eval(p, 3, lens_point(p, 0.5)).value
    pts = [x0 + (0.75 * e - x0) * k / 20 for k in range(21)]
    r = transport_riccati(p, (x0, y0), x_path=pts)
    x1, y1 = r.final_state
    ref = rho_eval(p, 3, lens_point(p, 0.75)).value
    assert abs(x1 - 0.75 * e) < 1e-15
    assert abs(abs(x1 - e) - 0.5 * abs(x0 - e)) < 1e-12
    assert abs(y1 - ref) <= 1e-8 * max(1, abs(ref))


def test_riccati_time_flow_on_rho2():
    p = P_MOD
    x0 = lens_point(p, 0.5)
    y0 = rho_eval(p, 2, x0).value
    r = transport_riccati(p, (x0.value(), y0), t_span=(0, 1))
    x1, y1 = r.final_state
    ref = rho_eval(p, 2, BranchedPoint.from_complex(x1, near=p.eps.argument)).value
    assert abs(y1 - ref) <= 1e-8 * max(1, abs(ref))


def test_riccati_first_integral_constant():
    p = Params(0.3, 0.7, BranchedPoint(0.05, 0))
    x0 = 0.5 * p.eps_value
    I0 = first_integral_eval(p, "+", (x0, 0.3)).value
    r = transport_riccati(p, (x0, 0.3), t_span=(0, 1))
    I1 = first_integral_eval(p, "+", r.final_state).value
    assert abs(I1 - I0) <= 1e-8 * abs(I0)


def test_riccati_through_a_pole():
    # real orbit: y' ~ y^2 - y blows up in finite time and returns from -infinity;
    # the 1/y chart carries it through
    p = Params(0.3, 0.7, BranchedPoint(0.05, 0))
    x0 = 0.5 * p.eps_value
    I0 = first_integral_eval(p, "+", (x0, 5.0)).value
    r = transport_riccati(p, (x0, 5.0), t_span=(0, 0.6))
    assert r.pole_crossings == 1
    I1 = first_integral_eval(p, "+", r.final_state).value
    assert abs(I1 - I0) <= 1e-8 * abs(I0)
