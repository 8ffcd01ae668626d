import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field

# Allow `from utils.<module> import ...` when run as `python app/seshadri_cli.py`
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from utils.bounds import bound_report, k3_lower_bound
from utils.checks import CHECKS, run_suite
from utils.errors import BoundsDidNotMeetError, InternalConsistencyError, PreconditionError
from utils.exactnum import approx, cmp_rat_root, format_rat
from utils.numlat import DivClass, RuledSurface, arithmetic_genus, h0, intersect, is_ample, is_nef
from utils.oracle import SearchParams, default_params, scroll_exact_value, upper_bound_very_general, verify_special_configuration
from utils.pdf_report import generate_suite_pdf
from utils.ratcurves import classify_smooth_rational, guaranteed_bound_rational_ruled
from utils.seshadri import (
    PointConfigSummary,
    SeshadriResult,
    TheoremTag,
    below_general_bound_witness,
    construct_any_q,
    scroll_example,
    seshadri_special,
)
from utils.tables import TABLES, build_table

logger = logging.getLogger("seshadri_cli")

# -----------------------------
# Paths
# -----------------------------
BASE_DIR = os.path.dirname(os.path.abspath(__file__))
EXPORT_ROOT = os.path.join(BASE_DIR, "..", "exports")

EXIT_OK = 0
EXIT_PRECONDITION = 1
EXIT_FAILED = 2


def get_run_export_dir(run_id: str) -> str:
    p = os.path.join(EXPORT_ROOT, run_id)
    os.makedirs(p, exist_ok=True)
    return p


@dataclass
class Output:
    payload: dict
    lines: list = field(default_factory=list)
    status: int = EXIT_OK


class _Parser(argparse.ArgumentParser):
    # usage errors are precondition errors (exit 1), not argparse's exit 2
    def error(self, message):
        raise PreconditionError(f"{self.prog}: {message}")


# -----------------------------
# Helpers
# -----------------------------
def _surface(args) -> RuledSurface:
    return RuledSurface(args.e)


def _bundle(args) -> DivClass:
    return DivClass(args.a, args.b)


def _approx_fields(args, out: Output, **values):
    if not args.approx:
        return
    approxed = {k: approx(v) for k, v in values.items()}
    out.payload["approx"] = approxed
    for k, v in approxed.items():
        out.lines.append(f"  {k} ~ {v} (approximation)")


def _search_params(args, S, L, r) -> SearchParams:
    base = default_params(S, L, r)
    return SearchParams(
        max_a=args.max_a or base.max_a,
        max_b=args.max_b or base.max_b,
        max_total_mult=args.max_mult or base.max_total_mult,
    )


def _seshadri_output(args, result: SeshadriResult) -> Output:
    out = Output(result.to_dict(), [str(result), f"  certificate: {result.certificate.to_dict()}"])
    _approx_fields(args, out, epsilon=result.value)
    return out


# -----------------------------
# Lattice commands
# -----------------------------
def cmd_intersect(args) -> Output:
    S = _surface(args)
    D1, D2 = DivClass(args.a1, args.b1), DivClass(args.a2, args.b2)
    value = intersect(S, D1, D2)
    return Output(
        {"e": S.e, "D1": D1.to_list(), "D2": D2.to_list(), "intersection": value},
        [f"({D1}).({D2}) = {value} on {S}"],
    )


def cmd_ample(args) -> Output:
    S, L = _surface(args), _bundle(args)
    ample, nef = is_ample(S, L), is_nef(S, L)
    return Output(
        {"e": S.e, "class": L.to_list(), "ample": ample, "nef": nef},
        [f"ample: {str(ample).lower()}", f"nef: {str(nef).lower()}"],
    )


def cmd_h0(args) -> Output:
    S, D = _surface(args), _bundle(args)
    value = h0(S, D)
    return Output({"e": S.e, "class": D.to_list(), "h0": value}, [f"h0 = {value}"])


def cmd_genus(args) -> Output:
    S, D = _surface(args), _bundle(args)
    value = arithmetic_genus(S, D)
    return Output({"e": S.e, "class": D.to_list(), "p_a": format_rat(value)}, [f"p_a = {format_rat(value)}"])


def cmd_classify(args) -> Output:
    S, D = _surface(args), _bundle(args)
    case = classify_smooth_rational(S, D)
    payload = {"e": S.e, "class": D.to_list()}
    payload.update(case.to_dict())
    return Output(payload, [f"case {case}"])


# -----------------------------
# Seshadri commands
# -----------------------------
def cmd_seshadri_exact(args) -> Output:
    S, L = _surface(args), _bundle(args)
    cfg = PointConfigSummary(args.r, args.t, args.s)
    return _seshadri_output(args, seshadri_special(S, L, cfg))


def cmd_seshadri_scroll(args) -> Output:
    inst = scroll_example(args.r)
    params = _search_params(args, inst.surface, inst.line_bundle, args.r)
    result = scroll_exact_value(args.r, params, n_jobs=args.jobs)
    out = _seshadri_output(args, result)
    out.payload["theorem"] = TheoremTag("scroll-family").to_dict()
    return out


def cmd_seshadri_anyq(args) -> Output:
    c = construct_any_q(args.a, args.t)
    payload = c.to_dict()
    payload["theorem"] = TheoremTag("any-value-construction").to_dict()
    out = Output(
        payload,
        [f"epsilon = {format_rat(c.value)}", f"  on {c.surface} with L = {c.line_bundle} at r = {c.r} points on one fibre"],
    )
    _approx_fields(args, out, epsilon=c.value)
    return out


# -----------------------------
# Bounds
# -----------------------------
def cmd_bounds(args) -> Output:
    gate = k3_lower_bound(args.Lsq, args.r) if args.k3 else None
    if gate is not None and args.r == 1:
        # the reference bounds start at r = 2; the K3 gate is defined from r = 1
        return Output({"Lsq": args.Lsq, "r": args.r, "k3": gate.to_dict()}, [f"k3: {gate}"])

    rep = bound_report(args.Lsq, args.r)
    payload = rep.to_dict()
    lines = [
        f"general bound {rep.general_bound}",
        f"ss bound      {rep.ss_bound}",
        f"max bound     {rep.max_bound}",
    ]

    Lsq, value, bound = below_general_bound_witness(args.r)
    if Lsq == args.Lsq:
        order = cmp_rat_root(value, bound)
        payload["witness"] = {"epsilon": format_rat(value), "ordering": order.symbol}
        lines.append(f"witness: {format_rat(value)} {order.symbol} {bound}")

    if gate is not None:
        payload["k3"] = gate.to_dict()
        lines.append(f"k3: {gate}")

    out = Output(payload, lines)
    _approx_fields(args, out, general_bound=rep.general_bound, ss_bound=rep.ss_bound, max_bound=rep.max_bound)
    return out


def cmd_guarantee(args) -> Output:
    S, L = _surface(args), _bundle(args)
    gate = guaranteed_bound_rational_ruled(S, L, args.r)
    payload = {"e": S.e, "L": L.to_list(), "r": args.r}
    payload.update(gate.to_dict())
    out = Output(payload, [str(gate)])
    if gate.guaranteed:
        _approx_fields(args, out, bound=gate.bound)
    return out


# -----------------------------
# Oracle
# -----------------------------
def cmd_oracle_search(args) -> Output:
    S, L = _surface(args), _bundle(args)
    params = _search_params(args, S, L, args.r)
    cert = upper_bound_very_general(S, L, args.r, params, n_jobs=args.jobs)
    payload = {"e": S.e, "L": L.to_list(), "r": args.r, "params": params.to_dict()}
    payload.update(cert.to_dict())
    out = Output(payload, [f"epsilon <= {format_rat(cert.value)}", f"  via {cert.cls} with mults {cert.mults}"])
    _approx_fields(args, out, upper_bound=cert.value)
    return out


def cmd_oracle_verify(args) -> Output:
    S, L = _surface(args), _bundle(args)
    cfg = PointConfigSummary(args.r, args.t, args.s)
    params = SearchParams(max_a=args.max_a or 12, max_b=args.max_b or 12 * S.e + 12)
    report = verify_special_configuration(S, L, cfg, params)
    lines = [
        f"{'PASS' if report.passed else 'FAIL'}: {report.checked} classes checked",
        f"  epsilon = {report.witnesses['epsilon']}, chain floor {report.witnesses['chain_floor']}",
    ]
    if "worst_ratio" in report.witnesses:
        lines.append(f"  worst ratio {report.witnesses['worst_ratio']} at {report.witnesses['worst_class']}")
    for c in report.counterexamples[:10]:
        lines.append(f"  violator {c}")
    return Output(report.to_dict(), lines, EXIT_OK if report.passed else EXIT_FAILED)


# -----------------------------
# Suite and tables
# -----------------------------
def cmd_verify_suite(args) -> Output:
    report = run_suite(args.only or None, n_jobs=args.jobs)
    payload = report.to_dict()
    lines = [f"run {report.run_id}"]
    for r in report.results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<32} {r.seconds:6.2f}s  {r.detail}")
    lines.append(f"{sum(r.passed for r in report.results)}/{len(report.results)} checks passed")

    if args.pdf is not None:
        path = args.pdf or os.path.join(get_run_export_dir(report.run_id), f"suite_{report.run_id}.pdf")
        generate_suite_pdf(report, path)
        payload["pdf"] = path
        lines.append(f"PDF: {path}")
    if args.json_out is not None:
        path = args.json_out or os.path.join(get_run_export_dir(report.run_id), f"suite_{report.run_id}.json")
        with open(path, "w", encoding="utf-8") as f:
            json.dump(report.to_dict(), f, indent=2)
        payload["json_out"] = path
        lines.append(f"JSON: {path}")

    return Output(payload, lines, EXIT_OK if report.passed else EXIT_FAILED)


def cmd_table(args) -> Output:
    df = build_table(args.name)
    payload = {"table": args.name, "rows": json.loads(df.to_json(orient="records"))}
    lines = [df.to_string(index=False)]
    if args.csv:
        df.to_csv(args.csv, index=False)
        payload["csv"] = args.csv
        lines.append(f"CSV: {args.csv}")
    return Output(payload, lines)


# -----------------------------
# Parser
# -----------------------------
def _common() -> argparse.ArgumentParser:
    # SUPPRESS keeps a flag given before the subcommand from being reset by the subparser
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="structured output")
    p.add_argument("--approx", action="store_true", default=argparse.SUPPRESS, help="also print decimal approximations")
    p.add_argument("-v", "--verbose", action="count", default=argparse.SUPPRESS)
    return p


def _add_surface_bundle(p):
    p.add_argument("e", type=int)
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)


def _add_caps(p):
    p.add_argument("--max-a", type=int, default=None)
    p.add_argument("--max-b", type=int, default=None)
    p.add_argument("--max-mult", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="seshadri", description="Exact Seshadri constants on ruled surfaces.")
    parser.add_argument("--json", action="store_true", help="structured output")
    parser.add_argument("--approx", action="store_true", help="also print decimal approximations")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("intersect", parents=[common], help="intersection number of two classes")
    p.add_argument("e", type=int)
    for name in ("a1", "b1", "a2", "b2"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_intersect)

    for name, func in (("ample", cmd_ample), ("h0", cmd_h0), ("genus", cmd_genus), ("classify", cmd_classify)):
        p = sub.add_parser(name, parents=[common])
        _add_surface_bundle(p)
        p.set_defaults(func=func)

    p = sub.add_parser("seshadri", parents=[common], help="exact constants")
    ses = p.add_subparsers(dest="mode", required=True)
    q = ses.add_parser("exact", parents=[common], help="r <= e points in special position")
    _add_surface_bundle(q)
    for name in ("r", "t", "s"):
        q.add_argument(name, type=int)
    q.set_defaults(func=cmd_seshadri_exact)
    q = ses.add_parser("scroll", parents=[common], help="the scroll family at r very general points")
    q.add_argument("r", type=int)
    _add_caps(q)
    q.set_defaults(func=cmd_seshadri_scroll)
    q = ses.add_parser("anyq", parents=[common], help="surface and points with constant a/t")
    q.add_argument("a", type=int)
    q.add_argument("t", type=int)
    q.set_defaults(func=cmd_seshadri_anyq)

    p = sub.add_parser("bounds", parents=[common], help="the three reference bounds")
    p.add_argument("Lsq", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--k3", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("guarantee", parents=[common], help="general bound gate on F_e")
    _add_surface_bundle(p)
    p.add_argument("r", type=int)
    p.set_defaults(func=cmd_guarantee)

    p = sub.add_parser("oracle", parents=[common], help="finite searches")
    orc = p.add_subparsers(dest="mode", required=True)
    q = orc.add_parser("search", parents=[common], help="upper bound at r very general points")
    _add_surface_bundle(q)
    q.add_argument("r", type=int)
    _add_caps(q)
    q.set_defaults(func=cmd_oracle_search)
    q = orc.add_parser("verify-thm31", aliases=["verify-special"], parents=[common], help="classwise check for r <= e")
    _add_surface_bundle(q)
    for name in ("r", "t", "s"):
        q.add_argument(name, type=int)
    q.add_argument("--max-a", type=int, default=None)
    q.add_argument("--max-b", type=int, default=None)
    q.set_defaults(func=cmd_oracle_verify)

    p = sub.add_parser("verify", parents=[common], help="reproduction suite")
    ver = p.add_subparsers(dest="mode", required=True)
    q = ver.add_parser("paper", aliases=["suite"], parents=[common], help="run every acceptance check")
    q.add_argument("--only", nargs="+", choices=list(CHECKS), default=None)
    q.add_argument("--pdf", nargs="?", const="", default=None, metavar="PATH")
    q.add_argument("--json-out", nargs="?", const="", default=None, metavar="PATH")
    q.add_argument("--jobs", type=int, default=1)
    q.set_defaults(func=cmd_verify_suite)

    p = sub.add_parser("table", parents=[common], help="parameter-family tables")
    p.add_argument("name", choices=list(TABLES))
    p.add_argument("--csv", default=None, metavar="PATH")
    p.set_defaults(func=cmd_table)

    return parser


def _configure_logging(verbose: int):
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except PreconditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION

    _configure_logging(args.verbose)
    try:
        out = args.func(args)
    except BoundsDidNotMeetError as e:
        print(f"bounds did not meet: {e}", file=sys.stderr)
        return EXIT_FAILED
    except PreconditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InternalConsistencyError as e:
        logger.error("internal consistency failure: %s", e)
        return EXIT_FAILED

    if args.json:
        print(json.dumps(out.payload, indent=2))
    else:
        for line in out.lines:
            print(line)
    return out.status


if __name__ == "__main__":
    sys.exit(main())
