import logging

import pandas as pd

from utils.bounds import bound_report
from utils.exactnum import APPROX_DIGITS, approx, format_rat
from utils.numlat import DivClass, RuledSurface, arithmetic_genus, h0, is_irreducible_candidate, self_intersection
from utils.ratcurves import classify_smooth_rational
from utils.seshadri import construct_any_q, scroll_example, seshadri_special, valid_configs

logger = logging.getLogger(__name__)


def scroll_family_table(r_min: int = 3, r_max: int = 12) -> pd.DataFrame:
    rows = []
    for r in range(r_min, r_max + 1):
        inst = scroll_example(r)
        report = bound_report(inst.Lsq, r)
        rows.append(
            {
                "r": r,
                "e": inst.surface.e,
                "L": str(inst.line_bundle),
                "L^2": inst.Lsq,
                "h0(L)": h0(inst.surface, inst.line_bundle),
                "epsilon": format_rat(inst.value),
                "general_bound": str(report.general_bound),
                "epsilon~": approx(inst.value, 6),
                "general_bound~": approx(report.general_bound, 6),
            }
        )
    return pd.DataFrame(rows)


def any_value_table(pairs=((1, 2), (3, 4), (5, 3), (7, 1))) -> pd.DataFrame:
    rows = []
    for a, t in pairs:
        c = construct_any_q(a, t)
        rows.append(
            {
                "a": a,
                "t": t,
                "e": c.surface.e,
                "L": str(c.line_bundle),
                "L^2": self_intersection(c.surface, c.line_bundle),
                "epsilon": format_rat(c.value),
            }
        )
    return pd.DataFrame(rows)


def bound_comparison_table(Lsq: int = 1, r_min: int = 2, r_max: int = 12, digits: int = APPROX_DIGITS) -> pd.DataFrame:
    """The three reference bounds side by side, exact and approximated."""
    rows = []
    for r in range(r_min, r_max + 1):
        rep = bound_report(Lsq, r)
        rows.append(
            {
                "r": r,
                "ss_bound": str(rep.ss_bound),
                "general_bound": str(rep.general_bound),
                "max_bound": str(rep.max_bound),
                "ss_bound~": approx(rep.ss_bound, digits),
                "general_bound~": approx(rep.general_bound, digits),
                "max_bound~": approx(rep.max_bound, digits),
            }
        )
    return pd.DataFrame(rows)


def classification_table(max_e: int = 2, max_mn: int = 4) -> pd.DataFrame:
    rows = []
    for e in range(0, max_e + 1):
        S = RuledSurface(e)
        for m in range(1, max_mn + 1):
            for n in range(0, max_mn + 1):
                D = DivClass(m, n)
                if not is_irreducible_candidate(S, D):
                    continue
                case = classify_smooth_rational(S, D)
                rows.append(
                    {
                        "e": e,
                        "class": str(D),
                        "D^2": self_intersection(S, D),
                        "p_a": str(arithmetic_genus(S, D)),
                        "case": str(case),
                    }
                )
    return pd.DataFrame(rows)


def special_grid_table(e: int = 3, a: int = 1) -> pd.DataFrame:
    """Exact constants for every (b, t, s) with r <= e on F_e."""
    S = RuledSurface(e)
    rows = []
    for b in range(a * e + 1, 3 * e + 4):
        L = DivClass(a, b)
        for r in range(1, e + 1):
            for cfg in valid_configs(r):
                result = seshadri_special(S, L, cfg)
                rows.append(
                    {
                        "L": str(L),
                        "r": r,
                        "t": cfg.t,
                        "s": cfg.s,
                        "epsilon": format_rat(result.value),
                        "curve": result.certificate.tag,
                    }
                )
    return pd.DataFrame(rows)


TABLES = {
    "scroll": scroll_family_table,
    "anyq": any_value_table,
    "bounds": bound_comparison_table,
    "classify": classification_table,
    "special": special_grid_table,
}


def build_table(name: str) -> pd.DataFrame:
    df = TABLES[name]()
    logger.debug("table %s: %d rows", name, len(df))
    return df
