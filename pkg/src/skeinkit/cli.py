"""Command line interface.

Exit codes: 0 success, 1 a checked assertion failed, 2 bad input,
3 a resource budget was exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import __version__
from .bounds import (adequate_degree_formulas, bmt_double_predictor,
                     crossing_number_criterion, double_crossing_bounds,
                     h_and_H, jones_diameter, span_envelope)
from .diagram import (adequacy, is_adequate, mirror, add_kink, parse_pd,
                      turaev_genus, whitehead_double)
from .errors import InputError, ResourceError, SkeinkitError
from .fixtures import check_record, load_fixtures
from .jones import DEFAULT_STRATEGY, STRATEGIES, colored_jones, compute
from .skein import bracket_state_sum, bracket_sweep, to_slice_program


class CheckFailed(Exception):
    """A report contains failed assertions."""


def _read_pd(source):
    if source in (None, "-"):
        text = sys.stdin.read()
        name = None
    else:
        try:
            with open(source) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc.strerror}") from None
        name = os.path.splitext(os.path.basename(source))[0]
    return parse_pd(text, name=name)


def _threads(args):
    if getattr(args, "threads", None):
        return args.threads
    env = os.environ.get("SKEINKIT_THREADS")
    return int(env) if env else 1


def _apply_budget(args):
    """Export the flag so worker processes see it; returns the previous value."""
    old = os.environ.get("SKEINKIT_WIDTH_BUDGET")
    if getattr(args, "width_budget", None):
        os.environ["SKEINKIT_WIDTH_BUDGET"] = str(args.width_budget)
    return old


def _restore_budget(old):
    if old is None:
        os.environ.pop("SKEINKIT_WIDTH_BUDGET", None)
    else:
        os.environ["SKEINKIT_WIDTH_BUDGET"] = old


def _q(q):
    return q.to_json()


# -- commands -------------------------------------------------------------


def cmd_invariants(d, n_max=3):
    ad = adequacy(d)
    return {
        "command": "invariants",
        "diagram": d.summary(),
        "adequacy": ad,
        "turaev_genus": turaev_genus(d),
        "H_table": [{"n": n, "H": h["H"], "h": str(h["h"])}
                    for n in range(0, n_max + 1) for h in [h_and_H(d, n)]],
        "strategy": "state_sum",
    }


def cmd_jones(d, n, strategy=DEFAULT_STRATEGY):
    j = compute(d, n, strategy)
    out = {"command": "jones", "diagram": d.summary()}
    out.update(j.to_json())
    out["t_poly"] = j.t_text()
    return out


def _eq_quadratics(d):
    f = adequate_degree_formulas(d.c_plus, d.c_minus, d.v_A, d.v_B)
    return f["bottom"], f["top"]


def double_diameter_chain(d, clasp_sign):
    """Slopes of the double predicted from an adequate zero-writhe companion."""
    bottom, top = _eq_quadratics(d)
    q = bottom.scale(Fraction(1, 4))          # d_+ of K
    q_star = top.scale(Fraction(-1, 4))       # d_+ of the mirror image
    plus = bmt_double_predictor(q, clasp_sign)
    plus_mirror = bmt_double_predictor(q_star, -clasp_sign)
    js = 4 * plus.a2
    js_star = -4 * plus_mirror.a2
    return plus, plus_mirror, js, js_star


def cmd_double(d, clasp_sign=-1, check_n=()):
    w = whitehead_double(d, clasp_sign)
    label = f"W{'+' if clasp_sign > 0 else '-'}({d.name or 'K'})"
    ad_k = adequacy(d)
    ad_w = adequacy(w)
    report = {
        "command": "double",
        "companion": d.summary(),
        "double": w.summary(),
        "double_pd": w.to_pd(),
        "double_adequacy": ad_w,
        "bounds": double_crossing_bounds(d.c, d.writhe) if is_adequate(d) else None,
        "strategy": "closed_form",
        "checks": {},
    }
    checks = report["checks"]
    companion_ok = ad_k["a_adequate"] and ad_k["b_adequate"] and d.writhe == 0
    if not companion_ok:
        report["verdict"] = (f"{label}: companion is not an adequate zero-writhe "
                             "diagram; only the crossing bounds apply")
        return report
    plus, plus_mirror, js, js_star = double_diameter_chain(d, clasp_sign)
    diameter = js - js_star
    report["predictor_d_plus"] = _q(plus)
    report["predictor_regime"] = "asymptotic"
    report["predictor_mirror_d_plus"] = _q(plus_mirror)
    report["diameter"] = str(diameter)
    checks["crossing_count"] = w.c == 4 * d.c + 2
    if clasp_sign < 0 and ad_w["b_adequate"]:
        exact = adequate_degree_formulas(w.c_plus, w.c_minus, w.v_A, w.v_B)["bottom"]
        checks["predictor_equals_exact_formula"] = exact.scale(Fraction(1, 4)) == plus
        report["exact_d_plus"] = _q(exact.scale(Fraction(1, 4)))
        direct = {}
        for n in check_n:
            j = compute(w, n)
            direct[str(n)] = {"d_plus": str(j.t_max_deg),
                              "predicted": str(exact(n) / 4)}
            checks[f"direct_n{n}"] = j.t_max_deg == exact(n) / 4
        if direct:
            report["direct"] = direct
            report["strategy"] = "closed_form+chebyshev"
    # zero-writhe adequate companion => the double is not adequate
    crit = crossing_number_criterion(w.c, diameter, adequate=False)
    report["criterion"] = crit
    if crit["determined"]:
        report["verdict"] = f"c({label}) = {crit['c_K']}, determined"
    else:
        report["verdict"] = f"c({label}) in ({crit['c_K'][0]}, {crit['c_K'][1]}]"
    return report


def cmd_diameter(d, mode=None, strategy=DEFAULT_STRATEGY):
    if mode is None:
        mode = "adequate_closed_form" if is_adequate(d) else "fit"
    rep = jones_diameter(d, mode, strategy=strategy)
    out = {"command": "diameter", "diagram": d.summary()}
    out.update(rep.to_json())
    out["strategy"] = "closed_form" if mode == "adequate_closed_form" else strategy
    return out


# -- verify ---------------------------------------------------------------


def _verify_record(rec, n_max):
    checks = {}

    def run(name, fn):
        try:
            checks[name] = "pass" if fn() else "fail"
        except SkeinkitError as exc:
            checks[name] = f"fail: {exc.code}: {exc}"

    try:
        d = check_record(rec)
        checks["declared_values"] = "pass"
    except SkeinkitError as exc:
        return {"name": rec.name, "checks": {"declared_values": f"fail: {exc}"}}

    if d.c <= 10:
        run("sweep_equals_state_sum",
            lambda: bracket_sweep(to_slice_program(d)) == bracket_state_sum(d))
    else:
        checks["sweep_equals_state_sum"] = "skipped: c > 10"
    ad = adequacy(d)
    g = turaev_genus(d)
    run("turaev_genus_zero_iff_alternating_count",
        lambda: (g == 0) == (ad["v_A"] + ad["v_B"] == d.c + 2))
    m = mirror(d)
    run("mirror_counts", lambda: m.v_A == d.v_B and m.c_plus == d.c_minus)
    if d.c <= 8:
        ns = range(2, n_max + 1)
        bottom, top = _eq_quadratics(d)
        env = span_envelope(d.c, g)
        js = {n: colored_jones(d, n) for n in ns}
        if rec.adequate:
            run("degree_formulas", lambda: all(
                4 * js[n].t_max_deg == bottom(n) and 4 * js[n].t_min_deg == top(n)
                for n in ns))
            run("span_equals_envelope", lambda: all(js[n].span == env(n) for n in ns))
        run("span_within_envelope", lambda: all(js[n].span <= env(n) for n in ns))
        run("strategies_agree", lambda: all(
            compute(d, n, "chebyshev").poly == js[n].poly for n in ns))
        run("mirror_duality", lambda: all(
            colored_jones(m, n).t_max_deg == -js[n].t_min_deg for n in ns))
        if d.c <= 6:
            run("framing_invariance", lambda: all(
                colored_jones(add_kink(d, s), n).poly == js[n].poly
                for s in (1, -1) for n in ns))
    if rec.adequate and d.writhe == 0 and d.c <= 10:
        def double_check():
            w = whitehead_double(d, -1)
            exact = adequate_degree_formulas(w.c_plus, w.c_minus, w.v_A, w.v_B)["bottom"]
            plus = double_diameter_chain(d, -1)[0]
            return (adequacy(w)["b_adequate"] and not is_adequate(w)
                    and exact.scale(Fraction(1, 4)) == plus)
        run("double_predictor_equals_exact_formula", double_check)
    return {"name": rec.name, "checks": checks}


def _verify_task(args):
    rec, n_max = args
    return _verify_record(rec, n_max)


def cmd_verify(path=None, n_max=3, threads=1):
    recs = load_fixtures(path, check=False)
    tasks = [(r, n_max) for r in recs]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(_verify_task, tasks))
    else:
        results = [_verify_task(t) for t in tasks]
    failed = sum(1 for r in results for v in r["checks"].values()
                 if v.startswith("fail"))
    return {"command": "verify", "fixtures": results, "failed": failed,
            "strategy": "sweep+state_sum+chebyshev", "passed": failed == 0}


# -- entry point ----------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="skeinkit", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    fmt = argparse.ArgumentParser(add_help=False)
    g = fmt.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true", help="compact JSON (default)")
    g.add_argument("--pretty", action="store_true", help="indented JSON")
    fmt.add_argument("--width-budget", type=int,
                     help="sweep row budget in pairs (default SKEINKIT_WIDTH_BUDGET or 12)")
    fmt.add_argument("--timing", action="store_true",
                     help="add wall-clock seconds to the report")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants", parents=[fmt], help="diagram invariants")
    s.add_argument("pd", nargs="?", help="PD file, '-' or omitted for stdin")
    s.add_argument("--n-max", type=int, default=3)

    s = sub.add_parser("jones", parents=[fmt], help="colored Jones polynomial")
    s.add_argument("pd", nargs="?")
    s.add_argument("--pd", dest="pd_opt")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--strategy", choices=STRATEGIES, default=DEFAULT_STRATEGY)

    s = sub.add_parser("double", parents=[fmt], help="Whitehead double pipeline")
    s.add_argument("pd", nargs="?")
    s.add_argument("--clasp", type=int, choices=(-1, 1), default=-1)
    s.add_argument("--check-n", type=int, action="append", default=[],
                   help="also compute d_+ of the double directly at this color")

    s = sub.add_parser("diameter", parents=[fmt], help="Jones slopes and diameter")
    s.add_argument("pd", nargs="?")
    s.add_argument("--mode", choices=("adequate_closed_form", "fit"))
    s.add_argument("--strategy", choices=STRATEGIES, default=DEFAULT_STRATEGY)

    s = sub.add_parser("verify", parents=[fmt], help="check the fixture table")
    s.add_argument("fixtures", nargs="?", help="CSV file (default: bundled)")
    s.add_argument("--n-max", type=int, default=3)
    s.add_argument("--threads", type=int)
    return p


def _dispatch(args):
    if args.command == "verify":
        return cmd_verify(args.fixtures, args.n_max, _threads(args))
    src = getattr(args, "pd_opt", None) or args.pd
    d = _read_pd(src)
    if args.command == "invariants":
        return cmd_invariants(d, args.n_max)
    if args.command == "jones":
        return cmd_jones(d, args.n, args.strategy)
    if args.command == "double":
        return cmd_double(d, args.clasp, args.check_n)
    return cmd_diameter(d, args.mode, args.strategy)


def _summary(report):
    if report["command"] == "verify":
        return (f"verify: {len(report['fixtures'])} fixtures, "
                f"{report['failed']} failed check(s)")
    if "verdict" in report:
        return report["verdict"]
    if report["command"] == "jones":
        return f"J(n={report['n']}): span {report['span']}"
    if report["command"] == "diameter":
        return f"diameter {report['diameter']} ({report['provenance']})"
    return f"{report['command']}: ok"


def _failed(report):
    if report["command"] == "verify":
        return not report["passed"]
    return not all(report.get("checks", {}).values())


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    old = _apply_budget(args)
    start = time.perf_counter()
    try:
        report = _dispatch(args)
    except InputError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 2
    except ResourceError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 3
    except SkeinkitError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 1
    finally:
        _restore_budget(old)
    if args.timing:
        report["seconds"] = round(time.perf_counter() - start, 3)
    if args.pretty:
        text = json.dumps(report, indent=2, sort_keys=True)
    else:
        text = json.dumps(report, sort_keys=True, separators=(",", ":"))
    print(text)
    print(_summary(report), file=sys.stderr)
    return 1 if _failed(report) else 0


if __name__ == "__main__":
    sys.exit(main())
