"""Acceptance criteria, one test (and one PASS/FAIL line) each."""

import cmath
import math
import time

import mpmath

from hypconfluence.bases import (H_eps, Params, SectorConfig, basis_eval, connection_coeffs,
                                 lemma_symmetry, lens_point)
from hypconfluence.borel import (H0_eval, g_closed_form, h_k_closed_form, laplace_sum,
                                 stokes_jump_g, stokes_jump_k)
from hypconfluence.core import BranchedPoint
from hypconfluence.paths import monodromy_via_integration, transport_riccati
from hypconfluence.riccati import (L_universal, first_integral_eval,
                                   first_integral_monodromy_check, rho_eval, riccati_field,
                                   singular_points)
from hypconfluence.stokes import (log_terms_predicate, monodromy_matrix, product_L,
                                  product_L_closed, stokes_limits, unfolded_multipliers)

PI = math.pi
GAMMA = SectorConfig().gamma_opening


def _ab(rng, scale=1.5):
    while True:
        a = complex(rng.uniform(-scale, scale), rng.uniform(-0.5, 0.5))
        b = complex(rng.uniform(-scale, scale), rng.uniform(-0.5, 0.5))
        if min(abs(a - round(a.real)), abs(b - round(b.real))) > 0.05:
            return a, b


def _eps(rng, sign, rmin, rmax):
    lo, hi = SectorConfig().interval(sign)
    r = math.exp(rng.uniform(math.log(rmin), math.log(rmax)))
    return BranchedPoint(r, rng.uniform(lo, hi))


def test_criterion_01_product_invariant(rng, report):
    worst = 0.0
    for _ in range(100):
        a = 3 * math.sqrt(rng.uniform()) * cmath.exp(1j * rng.uniform(-PI, PI))
        b = 3 * math.sqrt(rng.uniform()) * cmath.exp(1j * rng.uniform(-PI, PI))
        L = product_L_closed(a, b)
        for sign in ("+", "-"):
            for _ in range(20):
                p = Params(a, b, _eps(rng, sign, 1e-4, 0.1))
                worst = max(worst, abs(product_L(p, sign) - L) / (1 + abs(L)))
    ok = worst <= 1e-10
    report(1, "lambda mu = -(1-e^{-2 pi i a})(1-e^{-2 pi i b}), 100 (a,b) x 20 eps x 2 sectors", ok,
           f"max rel residual {worst:.2e} <= 1e-10")
    assert ok


def test_criterion_02_stokes_limits(rng, report):
    ok = True
    worst_final = 0.0
    for _ in range(10):
        a, b = _ab(rng)
        lim = stokes_limits(a, b)
        s = [unfolded_multipliers(Params(a, b, BranchedPoint(10.0 ** -k, PI / 4)), "+") for k in (1, 2, 3, 4)]
        dl = [abs(x.lam - lim.lam) for x in s]
        dm = [abs(x.mu - lim.mu) for x in s]
        mono = all(y < x for x, y in zip(dl, dl[1:])) and all(y < x for x, y in zip(dm, dm[1:]))
        final = max(dl[-1] / (1 + abs(lim.lam)), dm[-1] / (1 + abs(lim.mu)))
        worst_final = max(worst_final, final)
        ok = ok and mono and final <= 1e-3
    report(2, "lambda+(eps) -> lambda, mu+(eps) -> mu monotonically along eps = 10^-k e^{i pi/4}", ok,
           f"monotone for all 10 sets, final rel error {worst_final:.2e} <= 1e-3")
    assert ok


def test_criterion_03_monodromy_oracle(rng, report):
    t0 = time.perf_counter()
    worst = 0.0
    for sign in ("+", "-"):
        for _ in range(10):
            a, b = _ab(rng)
            p = Params(a, b, _eps(rng, sign, 0.03, 0.08))
            for around in ("0", "eps"):
                ana = monodromy_matrix(p, sign, around)
                num = monodromy_via_integration(p, sign, around)
                worst = max(worst, num.max_abs_diff(ana, ana))
    dt = time.perf_counter() - t0
    ok = worst <= 1e-6 and dt <= 60
    report(3, "analytic monodromy matrices vs ODE transport, 10 sets per sector", ok,
           f"max entry error {worst:.2e} <= 1e-6, {dt:.1f} s <= 60 s")
    assert ok


def test_criterion_04_connection_identities(rng, report):
    worst = 0.0
    for _ in range(20):
        a, b = _ab(rng)
        p = Params(a, b, _eps(rng, "+", 0.01, 0.08))
        D, E = connection_coeffs(p, "w2_in_Beps")
        A, B = connection_coeffs(p, "w3_in_B0")
        for t in (0.5, 0.3, 0.7, 0.5 + 0.3j, 0.45 - 0.25j):
            x = lens_point(p, t)
            w = {k: basis_eval(p, k, x).value for k in ("w1", "w2", "w3", "w4")}
            r1 = abs(w["w2"] - D * w["w3"] - E * w["w4"]) / max(abs(w["w2"]), abs(D * w["w3"]), abs(E * w["w4"]))
            r2 = abs(w["w3"] - A * w["w1"] - B * w["w2"]) / max(abs(w["w3"]), abs(A * w["w1"]), abs(B * w["w2"]))
            worst = max(worst, r1, r2)
    ok = worst <= 1e-9
    report(4, "w2 = D w3 + E w4 and w3 = A w1 + B w2 at 5 lens points, 20 sets", ok,
           f"max rel residual {worst:.2e} <= 1e-9")
    assert ok


def test_criterion_05_borel_double_route(rng, report):
    worst = 0.0
    for _ in range(50):
        a, b = _ab(rng)
        x = BranchedPoint(rng.uniform(0.05, 0.5), rng.uniform(-1.3, 1.3))
        g = g_closed_form(a, b, x).value
        q = laplace_sum(a, b, x).value
        worst = max(worst, abs(g - q) / (1 + abs(g)))
    euler = laplace_sum(1, 1, BranchedPoint(0.1, 0), direction=0).value
    euler_cf = g_closed_form(1, 1, BranchedPoint(0.1, 0)).value
    oracle = float(10 * mpmath.exp(10) * mpmath.e1(10))
    ok = worst <= 1e-8 and abs(euler - 0.915633) <= 1e-5 and abs(euler_cf - oracle) <= 1e-10
    report(5, "Borel sum: 1F1 closed form vs Laplace quadrature on 50 samples; Euler g(0.1)", ok,
           f"max rel diff {worst:.2e} <= 1e-8; g(0.1) = {euler.real:.7f} (E1 oracle {oracle:.7f})")
    assert ok


def test_criterion_06_stokes_jumps(rng, report):
    worst = 0.0
    for _ in range(20):
        a, b = _ab(rng)
        lim = stokes_limits(a, b)
        x = BranchedPoint(rng.uniform(0.1, 0.3), rng.uniform(-3 * PI / 2 + 0.2, -PI / 2 - 0.2))
        k = h_k_closed_form(a, b, x, "none", "k").value
        worst = max(worst, abs(stokes_jump_g(a, b, x) - lim.lam * k) / abs(lim.lam * k))
        x = BranchedPoint(rng.uniform(0.1, 0.3), rng.uniform(-PI / 2 + 0.2, PI / 2 - 0.2))
        g = g_closed_form(a, b, x).value
        worst = max(worst, abs(stokes_jump_k(a, b, x) - lim.mu * g) / abs(lim.mu * g))
    conv = max(abs(stokes_jump_g(-n, 0.37 + 0.1j, BranchedPoint(0.2, -PI))) for n in (1, 2, 3, 4))
    ok = worst <= 1e-6 and conv <= 1e-10
    report(6, "g and k Stokes jumps on 20 divergent samples; a in -N gives no g-jump", ok,
           f"max rel residual {worst:.2e} <= 1e-6; convergent jump {conv:.1e} <= 1e-10")
    assert ok


def test_criterion_07_h_limit(report):
    xs = (0.2, 0.15 + 0.05j, 0.3 - 0.1j, 0.1 + 0.1j, 0.25 - 0.02j)
    ok = True
    last = []
    for a, b in ((0.3, 0.7), (0.2 + 0.1j, 0.45)):
        for x in xs:
            h0 = H0_eval(a, b, x).value
            d = [abs(H_eps(Params(a, b, BranchedPoint(1e-2 * 2.0 ** -k, 0)), "+", x).value - h0) / abs(h0)
                 for k in range(5)]
            ok = ok and all(y < x_ for x_, y in zip(d, d[1:]))
            last.append(d[-1])
    report(7, "|H^{eps+}(x) - H0(x)| decreases along eps = 1e-2 2^-k at 5 points", ok,
           f"strictly decreasing at all points; final rel diff <= {max(last):.2e}")
    assert ok


def test_criterion_08_riccati(rng, report):
    drift = 0.0
    quot = 0.0
    anchors = 0.0
    imono = 0.0
    h = 1e-2
    for sign, e in (("+", BranchedPoint(0.05, 0)), ("+", BranchedPoint(0.05, PI / 6)),
                    ("-", BranchedPoint(0.05, 5 * PI / 6))):
        p = Params(0.3, 0.7, e)
        x0 = lens_point(p, 0.5).value()
        I0 = first_integral_eval(p, sign, (x0, 0.3)).value
        r = transport_riccati(p, (x0, 0.3), t_span=(0, 1))
        drift = max(drift, abs(first_integral_eval(p, sign, r.final_state).value - I0) / abs(I0))
        imono = max(imono, max(first_integral_monodromy_check(p, sign, 0.3).values()))
        if sign == "+":
            anchors = max(anchors, abs(rho_eval(p, 2, 0j).value - 1), abs(rho_eval(p, 3, e).value))
    for _ in range(50):
        a, b = _ab(rng)
        p = Params(a, b, _eps(rng, "+", 0.01, 0.08))
        for s in singular_points(p):
            x, y = s.location
            fx = (riccati_field(p, (x + h, y))[0] - riccati_field(p, (x - h, y))[0]) / (2 * h)
            fy = (riccati_field(p, (x, y + h))[1] - riccati_field(p, (x, y - h))[1]) / (2 * h)
            quot = max(quot, abs(fy / fx - s.eigen_quotient) / abs(s.eigen_quotient))
    ok = drift <= 1e-8 and quot <= 1e-10 and anchors <= 1e-12 and imono <= 1e-7
    report(8, "Riccati: first-integral drift, eigen-quotients, rho anchors, I-monodromy", ok,
           f"drift {drift:.1e} <= 1e-8; quotients {quot:.1e} <= 1e-10; "
           f"rho2(0)-1, rho3(eps) {anchors:.1e} <= 1e-12; I-monodromy {imono:.1e} <= 1e-7")
    assert ok


def test_criterion_09_universal(rng, report):
    from hypconfluence.riccati import universal_params
    worst = 0.0
    for _ in range(20):
        a, b = _ab(rng)
        e = BranchedPoint(rng.uniform(1e-4, 1e-2), rng.uniform(GAMMA, 4 * PI - GAMMA))
        closed = product_L_closed(a, b)
        L_universal(a, b, e)
        for k in (0, 1):
            s = BranchedPoint(math.sqrt(e.modulus), e.argument / 2 + k * PI)
            m = unfolded_multipliers(universal_params(a, b, s), "+", check=False)
            worst = max(worst, abs(m.lam * m.mu - closed) / (1 + abs(closed)))
    ok = worst <= 1e-10
    report(9, "L(eps) on both sqrt(eps) branches vs closed form, 20 eps", ok,
           f"max rel diff {worst:.2e} <= 1e-10")
    assert ok


def test_criterion_10_symmetry(rng, report):
    inv = 0.0
    ident = 0.0
    for _ in range(20):
        a, b = _ab(rng)
        p = Params(a, b, _eps(rng, "+", 0.01, 0.08))
        e = p.eps
        x = lens_point(p, rng.uniform(0.2, 0.8) + 1j * rng.uniform(-0.3, 0.3))
        p2, x2 = lemma_symmetry(p, x, "+to-")
        p3, x3 = lemma_symmetry(p2, x2, "-to+", arg_one_minus=x.argument - e.argument)
        inv = max(inv, abs(p3.eps_value - e.value()) / e.modulus, abs(x3.value() - x.value()) / x.modulus)
        w3 = basis_eval(p, "w3", x).value
        w1 = basis_eval(p2, "w1", x2, arg_one_minus=x.argument - e.argument).value
        ident = max(ident, abs(w3 - w1) / abs(w3))
    ok = inv <= 1e-12 and ident <= 1e-9
    report(10, "(eps, x) -> (eps', x') is an involution and w3(x, eps) = w1(x', eps')", ok,
           f"involution {inv:.1e} <= 1e-12; w3 = w1' {ident:.1e} <= 1e-9 on 20 samples")
    assert ok


def test_criterion_11_log_terms(rng, report):
    flags = []
    for _ in range(20):
        p = Params(0.3, 0.7, _eps(rng, "+", 1e-4, 0.1))
        t = log_terms_predicate(p, "+")
        flags.append(t.w3_or_w1_obstructed and t.w2_or_w4_obstructed)
    conv = log_terms_predicate(Params(-2, 0.7, BranchedPoint(0.02, 0.3)), "+").w3_or_w1_obstructed
    ok = all(flags) and not conv
    report(11, "logarithmic-terms predicate: (true, true) for (0.3, 0.7); first flag false for a = -2", ok,
           f"{sum(flags)}/20 samples (true, true); a = -2 first flag {conv}")
    assert ok
