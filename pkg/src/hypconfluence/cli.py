"""Command-line interface: parameter scans, verification reports, plot data.

    hypconfluence stokes   --a 0.5 --b 0.5 --eps-grid "logspace:-1:-4:4@0.785"
    hypconfluence verify   monodromy --seed 1
    hypconfluence plotdata stokes_limit_scan --a 0.3 --b 0.7

Exit status: 0 on success, 1 on a configuration error, 2 when a
verification identity fails.
"""

from __future__ import annotations

import argparse
import ast
import cmath
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from .bases import (DEFAULT_GAMMA, H_eps, Params, SectorConfig, basis_eval,
                    lemma_symmetry, lens_point, sector_classify)
from .borel import (H0_eval, g_closed_form, h_k_closed_form, laplace_sum,
                    stokes_jump_g, stokes_jump_k)
from .core import BranchedPoint, ConfigInvalid, HypConfluenceError, OutOfDisk
from .paths import (monodromy_universal_via_integration, monodromy_via_integration,
                    transport_riccati)
from .riccati import (L_universal, first_integral_eval, first_integral_monodromy_check,
                      rho_eval, singular_points, universal_params)
from .stokes import (monodromy_matrix, product_L_closed, stokes_limits,
                     unfolded_multipliers, wild_continuous_split_check)

PI = math.pi
SUITES = ("monodromy", "borel", "riccati", "symmetry", "universal")
PLOT_KINDS = ("h_limit_scan", "stokes_limit_scan", "riccati_portrait")


# ------------------------------------------------------------- config

@dataclass
class ScanConfig:
    a: list                      # polynomial coefficients of a(eps)
    b: list
    eps_grid: list = field(default_factory=list)   # BranchedPoints
    sector: str = "auto"
    gamma: float = DEFAULT_GAMMA
    fmt: str = "csv"
    seed: int = 0

    def a_of(self, e):
        return _poly(self.a, e)

    def b_of(self, e):
        return _poly(self.b, e)


def _poly(coefs, e):
    v = 0j
    for c in reversed(coefs):
        v = v * e + c
    return v


def parse_param(text):
    """'0.3', '0.2+0.1j' or a coefficient list '[0.3, 1]' meaning 0.3 + eps."""
    try:
        v = ast.literal_eval(text.strip())
    except (ValueError, SyntaxError):
        raise ConfigInvalid(f"cannot parse parameter {text!r}")
    if isinstance(v, (int, float, complex)):
        return [complex(v)]
    if isinstance(v, (list, tuple)) and v and all(isinstance(c, (int, float, complex)) for c in v):
        return [complex(c) for c in v]
    raise ConfigInvalid(f"cannot parse parameter {text!r}")


def _parse_point(text):
    text = text.strip()
    if "@" in text:
        m, t = text.split("@", 1)
        try:
            mod, arg = float(m), float(t)
        except ValueError:
            raise ConfigInvalid(f"bad grid point {text!r}")
        if not mod > 0:
            raise ConfigInvalid("grid moduli must be positive")
        return BranchedPoint(mod, arg)
    try:
        z = complex(text.replace("i", "j").replace(" ", ""))
    except ValueError:
        raise ConfigInvalid(f"bad grid point {text!r}")
    if z == 0:
        raise ConfigInvalid("eps = 0 is not allowed")
    return BranchedPoint.from_complex(z)


def parse_grid(text):
    """Comma-separated 'MOD@ARG' or complex entries, or
    'logspace:START:STOP:N@ARG' (moduli 10**START .. 10**STOP),
    or 'geom:R0:RATIO:N@ARG' (moduli R0 * RATIO**k)."""
    if text is None or not text.strip():
        return []
    out = []
    for item in text.split(","):
        item = item.strip()
        if item.startswith(("logspace:", "geom:")):
            body, _, arg = item.partition("@")
            parts = body.split(":")
            try:
                arg = float(arg) if arg else 0.0
                if parts[0] == "logspace":
                    mods = np.logspace(float(parts[1]), float(parts[2]), int(parts[3]))
                else:
                    mods = float(parts[1]) * float(parts[2]) ** np.arange(int(parts[3]))
            except (IndexError, ValueError):
                raise ConfigInvalid(f"bad grid generator {item!r}")
            out.extend(BranchedPoint(float(m), arg) for m in mods)
        elif item:
            out.append(_parse_point(item))
    return out


def _lift_into(eps, sign):
    lo = -PI if sign == "+" else 0.0
    t = eps.argument - 2 * PI * math.floor((eps.argument - lo) / (2 * PI))
    if t <= lo:
        t += 2 * PI
    return BranchedPoint(eps.modulus, t)


def resolve_sign(eps, cfg):
    """Sector sign of a grid point; raises ConfigInvalid if it is not in the requested sector.

    Only the angular condition is checked: scans are allowed to start at the
    (operational) disk radius r(gamma).
    """
    sc = SectorConfig(cfg.gamma, radius=math.inf)
    try:
        tags = sector_classify(eps, sc)
    except OutOfDisk as exc:
        raise ConfigInvalid(str(exc))
    if cfg.sector == "auto":
        if "S_plus" in tags:
            return "+"
        if "S_minus" in tags:
            return "-"
        raise ConfigInvalid(f"eps = {eps.value()} lies in no sector")
    want = "S_plus" if cfg.sector == "+" else "S_minus"
    if want not in tags:
        raise ConfigInvalid(f"eps = {eps.value()} is not in sector {cfg.sector}")
    return cfg.sector


# ------------------------------------------------------------- output

def _c(z):
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _fmt(v):
    return repr(float(v))


class Table:
    """Rows of named columns; complex columns expand to _re/_im in CSV."""

    def __init__(self, columns):
        self.columns = columns   # list of (name, kind) with kind in {'real', 'complex', 'str', 'int'}
        self.rows = []

    def add(self, *values):
        self.rows.append(values)

    def csv_text(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        head = []
        for name, kind in self.columns:
            head.extend([name + "_re", name + "_im"] if kind == "complex" else [name])
        w.writerow(head)
        for row in self.rows:
            out = []
            for (name, kind), v in zip(self.columns, row):
                if kind == "complex":
                    z = complex(v)
                    out.extend([_fmt(z.real), _fmt(z.imag)])
                elif kind == "real":
                    out.append(_fmt(v))
                else:
                    out.append(str(v))
            w.writerow(out)
        return buf.getvalue()

    def json_obj(self):
        rows = []
        for row in self.rows:
            d = {}
            for (name, kind), v in zip(self.columns, row):
                if kind == "complex":
                    d[name] = _c(v)
                elif kind == "real":
                    d[name] = float(v)
                elif kind == "int":
                    d[name] = int(v)
                else:
                    d[name] = v
            rows.append(d)
        return rows


def _emit(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _dump_json(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# ------------------------------------------------------------- stokes

def cmd_stokes(cfg):
    t = Table([("eps_modulus", "real"), ("eps_argument", "real"), ("sector", "str"),
               ("lambda", "complex"), ("mu", "complex"), ("L", "complex"),
               ("lambda_limit_err", "real"), ("mu_limit_err", "real")])
    for e in cfg.eps_grid:
        sign = resolve_sign(e, cfg)
        eps = _lift_into(e, sign)
        a, b = cfg.a_of(eps.value()), cfg.b_of(eps.value())
        p = Params(a, b, eps)
        s = unfolded_multipliers(p, sign)
        lim = stokes_limits(a, b)
        t.add(eps.modulus, eps.argument, sign, s.lam, s.mu, s.lam * s.mu,
              abs(s.lam - lim.lam), abs(s.mu - lim.mu))
    return t


# ------------------------------------------------------------- verify

def _check(results, name, residual, tol, **extra):
    r = {"identity": name, "residual": float(residual), "tolerance": float(tol),
         "pass": bool(residual <= tol)}
    r.update(extra)
    results.append(r)


def _random_ab(rng, n, scale=1.5):
    out = []
    while len(out) < n:
        a = complex(rng.uniform(-scale, scale), rng.uniform(-0.5, 0.5))
        b = complex(rng.uniform(-scale, scale), rng.uniform(-0.5, 0.5))
        # keep away from integers, where both series are polynomials
        if min(abs(a - round(a.real)), abs(b - round(b.real))) > 0.05:
            out.append((a, b))
    return out


def _random_eps(rng, sign, gamma=DEFAULT_GAMMA, rmax=0.08, rmin=0.03):
    lo = -PI + gamma if sign == "+" else gamma
    hi = PI - gamma if sign == "+" else 2 * PI - gamma
    return BranchedPoint(float(rng.uniform(rmin, rmax)), float(rng.uniform(lo, hi)))


DEFAULT_EPS = {"+": BranchedPoint(0.05, PI / 6), "-": BranchedPoint(0.05, 5 * PI / 6)}


def _suite_params(cfg, rng, n_random):
    sets = []
    fixed = cfg.a is not None
    for sign in ("+", "-"):
        e = DEFAULT_EPS[sign]
        if fixed:
            sets.append((cfg.a_of(e.value()), cfg.b_of(e.value()), e, sign))
        else:
            sets.append((0.3, 0.7, e, sign))
        for a, b in _random_ab(rng, n_random):
            e = _random_eps(rng, sign)
            if fixed:
                a, b = cfg.a_of(e.value()), cfg.b_of(e.value())
            sets.append((a, b, e, sign))
    return sets


def verify_monodromy(cfg, rng):
    res = []
    for a, b, e, sign in _suite_params(cfg, rng, 1):
        p = Params(a, b, e)
        tag = f"{sign} a={complex(a):.6g} b={complex(b):.6g} eps={e.modulus:.6g}@{e.argument:.6g}"
        mats = {}
        for around in ("0", "eps"):
            num = monodromy_via_integration(p, sign, around)
            ana = monodromy_matrix(p, sign, around)
            mats[around] = (num, ana)
            _check(res, f"monodromy_{around}[{tag}]", num.max_abs_diff(ana, ana), 1e-6)
        comp_num = mats["0"][0] @ mats["eps"][0]
        comp_ana = mats["0"][1] @ mats["eps"][1]
        _check(res, f"composition[{tag}]", comp_num.max_abs_diff(comp_ana, comp_ana), 1e-6)
        for k, v in wild_continuous_split_check(p, sign).items():
            _check(res, f"{k}[{tag}]", v, 1e-8)
    return res


def verify_borel(cfg, rng):
    res = []
    if cfg.a is not None:
        pairs = [(cfg.a_of(0), cfg.b_of(0))]
    else:
        pairs = [(0.3, 0.7)] + _random_ab(rng, 2)
    for a, b in pairs:
        tag = f"a={complex(a):.6g} b={complex(b):.6g}"
        lim = stokes_limits(a, b)
        # g+(x e^{2 pi i}) - g-(x) = lambda k(x),  arg x in (-3pi/2, -pi/2)
        x = BranchedPoint(0.15, -PI)
        jump = stokes_jump_g(a, b, x)
        expected = lim.lam * h_k_closed_form(a, b, x, "none", "k").value
        if lim.lam == 0:
            _check(res, f"g_stokes_jump[{tag}]", abs(jump), 1e-10, branch="lambda_zero")
        else:
            _check(res, f"g_stokes_jump[{tag}]", abs(jump - expected) / abs(expected), 1e-6,
                   branch="lambda_nonzero")
        # k+(x) - e^{2 pi i (1-a-b)} k-(x e^{-2 pi i}) = mu g(x),  arg x in (-pi/2, pi/2)
        xk = BranchedPoint(0.15, 0.3)
        kj = stokes_jump_k(a, b, xk)
        ke = lim.mu * g_closed_form(a, b, xk).value
        if lim.mu == 0:
            _check(res, f"k_stokes_jump[{tag}]", abs(kj), 1e-10, branch="mu_zero")
        else:
            _check(res, f"k_stokes_jump[{tag}]", abs(kj - ke) / abs(ke), 1e-6, branch="mu_nonzero")
        xl = BranchedPoint(0.12, 0.4)
        q = laplace_sum(a, b, xl)
        c = g_closed_form(a, b, xl).value
        _check(res, f"laplace_vs_closed_form[{tag}]", abs(q.value - c) / (1 + abs(c)), 1e-8)
    return res


def verify_riccati(cfg, rng):
    res = []
    for a, b, e, sign in _suite_params(cfg, rng, 1):
        p = Params(a, b, e)
        tag = f"{sign} a={complex(a):.6g} b={complex(b):.6g} eps={e.modulus:.6g}@{e.argument:.6g}"
        ev = e.value()
        expected = [1 / ev, 1 - 1 / ev - a - b, -1 / ev, -1 + 1 / ev + a + b]
        worst = 0.0
        for sp, q in zip(singular_points(p), expected):
            worst = max(worst, abs(sp.eigen_quotient - q) / abs(q))
        _check(res, f"eigen_quotients[{tag}]", worst, 1e-10)
        if sign == "+":
            _check(res, f"rho2_at_0[{tag}]", abs(rho_eval(p, 2, 0j).value - 1), 1e-12)
            _check(res, f"rho3_at_eps[{tag}]", abs(rho_eval(p, 3, BranchedPoint(e.modulus, e.argument)).value), 1e-12)
        x0 = lens_point(p, 0.5).value()
        y0 = 0.3
        I0 = first_integral_eval(p, sign, (x0, y0)).value
        tr = transport_riccati(p, (x0, y0), t_span=(0.0, 1.0))
        xe, ye = tr.final_state
        I1 = first_integral_eval(p, sign, (xe, ye)).value
        _check(res, f"first_integral_drift[{tag}]", abs(I1 - I0) / abs(I0), 1e-8)
        for k, v in first_integral_monodromy_check(p, sign, y0).items():
            _check(res, f"{k}[{tag}]", v, 1e-7)
    return res


def verify_symmetry(cfg, rng):
    res = []
    for a, b, e, sign in _suite_params(cfg, rng, 2):
        if sign != "+":
            continue
        p = Params(a, b, e)
        tag = f"a={complex(a):.6g} b={complex(b):.6g} eps={e.modulus:.6g}@{e.argument:.6g}"
        x = lens_point(p, 0.4 + 0.1j)
        p2, x2 = lemma_symmetry(p, x, "+to-")
        p3, x3 = lemma_symmetry(p2, x2, "-to+", arg_one_minus=x.argument - e.argument)
        inv = max(abs(p3.eps.value() - e.value()) / e.modulus, abs(x3.value() - x.value()) / x.modulus)
        _check(res, f"involution[{tag}]", inv, 1e-12)
        w3 = basis_eval(p, "w3", x).value
        w1 = basis_eval(p2, "w1", x2, arg_one_minus=x.argument - e.argument).value
        _check(res, f"w3_equals_w1_prime[{tag}]", abs(w3 - w1) / abs(w3), 1e-9)
        s1 = unfolded_multipliers(p, "+")
        s2 = unfolded_multipliers(p2, "-")
        L = product_L_closed(a, b)
        _check(res, f"product_symmetric[{tag}]", abs(s1.lam * s1.mu - s2.lam * s2.mu) / (1 + abs(L)), 1e-10)
    return res


def verify_universal(cfg, rng):
    res = []
    pairs = [(0.3, 0.7)] + _random_ab(rng, 2)
    if cfg.a is not None:
        pairs = [(cfg.a_of(0), cfg.b_of(0))]
    for a, b in pairs:
        eps = BranchedPoint(float(rng.uniform(0.003, 0.01)), float(rng.uniform(DEFAULT_GAMMA, 4 * PI - DEFAULT_GAMMA)))
        tag = f"a={complex(a):.6g} b={complex(b):.6g} eps={eps.modulus:.6g}@{eps.argument:.6g}"
        closed = product_L_closed(a, b)
        worst = 0.0
        for k in (0, 1):
            sq = BranchedPoint(math.sqrt(eps.modulus), eps.argument / 2 + k * PI)
            m = unfolded_multipliers(universal_params(a, b, sq), "+", check=False)
            worst = max(worst, abs(m.lam * m.mu - closed) / (1 + abs(closed)))
        _check(res, f"L_both_branches[{tag}]", worst, 1e-10)
        L_universal(a, b, eps)
        sq = BranchedPoint(math.sqrt(eps.modulus), eps.argument / 2)
        pt = universal_params(a, b, sq)
        for around in ("0", "eps"):
            num = monodromy_universal_via_integration(a, b, sq, around)
            ana = monodromy_matrix(pt, "+", around, check=False)
            _check(res, f"universal_monodromy_{around}[{tag}]", num.max_abs_diff(ana, ana), 1e-6)
    return res


VERIFY = {"monodromy": verify_monodromy, "borel": verify_borel, "riccati": verify_riccati,
          "symmetry": verify_symmetry, "universal": verify_universal}


def cmd_verify(suite, cfg):
    rng = np.random.default_rng(cfg.seed)
    names = SUITES if suite == "all" else (suite,)
    results = []
    for name in names:
        for r in VERIFY[name](cfg, rng):
            r["suite"] = name
            results.append(r)
    return {"suite": suite, "seed": cfg.seed, "results": results,
            "all_pass": all(r["pass"] for r in results)}


# ------------------------------------------------------------- plotdata

DEFAULT_X = (0.2, 0.15 + 0.05j, 0.3 - 0.1j, 0.1 + 0.1j, 0.25 - 0.02j)


def plot_h_limit(cfg, xs=DEFAULT_X):
    t = Table([("eps_modulus", "real"), ("eps_argument", "real"), ("x", "complex"),
               ("H_eps", "complex"), ("H0", "complex"), ("abs_diff", "real")])
    for e in cfg.eps_grid:
        sign = resolve_sign(e, cfg)
        if sign != "+":
            raise ConfigInvalid("h_limit_scan compares H^{eps+} with H0: use eps in S+")
        eps = _lift_into(e, "+")
        a, b = cfg.a_of(eps.value()), cfg.b_of(eps.value())
        p = Params(a, b, eps)
        for xv in xs:
            x = BranchedPoint.from_complex(xv)
            h = H_eps(p, "+", x)
            h0 = H0_eval(cfg.a_of(0), cfg.b_of(0), x)
            hv = h.value if not h.reciprocal else complex("inf")
            t.add(eps.modulus, eps.argument, xv, hv, h0.value, abs(hv - h0.value))
    return t


def plot_stokes_limit(cfg):
    t = Table([("eps_modulus", "real"), ("eps_argument", "real"), ("sector", "str"),
               ("lambda_eps", "complex"), ("mu_eps", "complex"),
               ("lambda", "complex"), ("mu", "complex"),
               ("lambda_err", "real"), ("mu_err", "real")])
    for e in cfg.eps_grid:
        sign = resolve_sign(e, cfg)
        eps = _lift_into(e, sign)
        a, b = cfg.a_of(eps.value()), cfg.b_of(eps.value())
        s = unfolded_multipliers(Params(a, b, eps), sign)
        lim = stokes_limits(a, b)
        t.add(eps.modulus, eps.argument, sign, s.lam, s.mu, lim.lam, lim.mu,
              abs(s.lam - lim.lam), abs(s.mu - lim.mu))
    return t


def plot_riccati_portrait(cfg, n_curve=41, n_traj=7, t_final=40.0, n_samples=41):
    """Invariant graphs y = rho_2, rho_3 on [0, eps] and trajectories started on x = eps/2."""
    t = Table([("curve", "str"), ("index", "int"), ("x", "complex"), ("y", "complex")])
    for e in cfg.eps_grid:
        sign = resolve_sign(e, cfg)
        eps = _lift_into(e, sign)
        ev = eps.value()
        p = Params(cfg.a_of(ev), cfg.b_of(ev), eps)
        for k in range(n_curve):
            s = k / (n_curve - 1)
            x = 0j if k == 0 else lens_point(p, s)
            t.add("rho2", k, s * ev, rho_eval(p, 2, x).value)
        for k in range(1, n_curve):
            s = k / (n_curve - 1)
            t.add("rho3", k, s * ev, rho_eval(p, 3, lens_point(p, s)).value)
        for j in range(n_traj):
            y0 = -0.5 + 2.0 * j / (n_traj - 1)
            state = (0.5 * ev, complex(y0))
            label = f"trajectory_{j}"
            t.add(label, 0, state[0], state[1])
            dt = t_final / (n_samples - 1)
            for k in range(1, n_samples):
                try:
                    state = transport_riccati(p, state, t_span=(0.0, dt)).final_state
                except HypConfluenceError:
                    break
                if not all(map(cmath.isfinite, state)):
                    break
                t.add(label, k, state[0], state[1])
    return t


PLOTS = {"h_limit_scan": plot_h_limit, "stokes_limit_scan": plot_stokes_limit,
         "riccati_portrait": plot_riccati_portrait}

DEFAULT_GRIDS = {
    "h_limit_scan": "geom:0.01:0.5:5@0",
    "stokes_limit_scan": "logspace:-1:-4:4@0.7853981633974483",
    "riccati_portrait": "0.05@0",
}


# ------------------------------------------------------------- entry point

class _Parser(argparse.ArgumentParser):
    # usage errors are configuration errors: status 1 (2 means a failed verification)
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--a", default=None, help="a, or coefficients of a(eps) as a list, e.g. '[0.3, 1]'")
    common.add_argument("--b", default=None, help="b, or coefficients of b(eps)")
    common.add_argument("--eps", action="append", default=None,
                        help="one eps value ('0.01+0.01j' or 'MOD@ARG'); may be repeated")
    common.add_argument("--eps-grid", default=None,
                        help="comma-separated points, 'logspace:S:E:N@ARG' or 'geom:R0:Q:N@ARG'")
    common.add_argument("--sector", choices=("+", "-", "auto"), default="auto")
    common.add_argument("--gamma", type=float, default=DEFAULT_GAMMA, help="sector opening gamma")
    common.add_argument("--format", choices=("csv", "json"), default=None, dest="fmt")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help="output file (default: stdout)")

    parser = _Parser(prog="hypconfluence", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("stokes", parents=[common], help="unfolded Stokes multipliers over an eps grid")
    v = sub.add_parser("verify", parents=[common], help="run an identity suite, JSON report")
    v.add_argument("suite", choices=SUITES + ("all",))
    pl = sub.add_parser("plotdata", parents=[common], help="CSV data behind the figures")
    pl.add_argument("kind", choices=PLOT_KINDS)
    return parser


def make_config(args, default_grid=None, need_ab=True):
    a = parse_param(args.a) if args.a is not None else None
    b = parse_param(args.b) if args.b is not None else None
    if need_ab and (a is None or b is None):
        raise ConfigInvalid("--a and --b are required")
    if (a is None) != (b is None):
        raise ConfigInvalid("give both --a and --b")
    if not 0 < args.gamma < PI / 2:
        raise ConfigInvalid("--gamma must lie in (0, pi/2)")
    grid = []
    if args.eps:
        grid.extend(_parse_point(t) for t in args.eps)
    if args.eps_grid is not None:
        grid.extend(parse_grid(args.eps_grid))
    elif not args.eps and default_grid:
        grid = parse_grid(default_grid)
    return ScanConfig(a, b, grid, args.sector, args.gamma, args.fmt or "csv", args.seed)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "stokes":
            cfg = make_config(args)
            t = cmd_stokes(cfg)
            text = t.csv_text() if cfg.fmt == "csv" else _dump_json(
                {"command": "stokes", "rows": t.json_obj()})
            _emit(text, args.out)
            return 0
        if args.command == "verify":
            if args.fmt == "csv":
                raise ConfigInvalid("verify reports are JSON only")
            cfg = make_config(args, need_ab=False)
            report = cmd_verify(args.suite, cfg)
            _emit(_dump_json(report), args.out)
            return 0 if report["all_pass"] else 2
        cfg = make_config(args, DEFAULT_GRIDS[args.kind])
        t = PLOTS[args.kind](cfg)
        text = t.csv_text() if cfg.fmt == "csv" else _dump_json(
            {"command": "plotdata", "kind": args.kind, "rows": t.json_obj()})
        _emit(text, args.out)
        return 0
    except ConfigInvalid as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
