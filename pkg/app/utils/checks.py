import logging
import time
import uuid
from dataclasses import dataclass, field
from datetime import datetime
from fractions import Fraction

import numpy as np
import pandas as pd

from utils.bounds import general_lower_bound, k3_lower_bound, max_bound
from utils.exactnum import Ordering, RootVal, cmp_rat_root, format_rat
from utils.numlat import DivClass, RuledSurface, arithmetic_genus, is_ample, is_irreducible_candidate, self_intersection
from utils.oracle import (
    SearchParams,
    scroll_exact_value,
    sweep_sum_square_inequality,
    upper_bound_very_general,
    verify_special_configuration,
)
from utils.ratcurves import (
    classify_smooth_rational,
    conic_case_holds,
    section_chain_holds,
    section_hodge_defect,
    seshadri_quadratic,
)
from utils.seshadri import (
    construct_any_q,
    plane_two_point_example,
    scroll_example,
    seshadri_special,
    special_value_formula,
    valid_configs,
)

logger = logging.getLogger(__name__)


@dataclass
class CheckResult:
    name: str
    title: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    data: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "title": self.title,
            "passed": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
            "data": self.data,
        }


@dataclass
class SuiteReport:
    run_id: str
    created_at: str
    results: list

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_frame(self) -> pd.DataFrame:
        rows = [
            {
                "check": r.name,
                "status": "PASS" if r.passed else "FAIL",
                "seconds": round(r.seconds, 2),
                "detail": r.detail,
            }
            for r in self.results
        ]
        return pd.DataFrame(rows, columns=["check", "status", "seconds", "detail"])

    def to_dict(self) -> dict:
        return {
            "run_id": self.run_id,
            "created_at": self.created_at,
            "passed": self.passed,
            "results": [r.to_dict() for r in self.results],
        }


# -----------------------------
# Individual checks
# -----------------------------
def check_scroll_family(r_min: int = 3, r_max: int = 12) -> CheckResult:
    failures = []
    for r in range(r_min, r_max + 1):
        inst = scroll_example(r)
        result = scroll_exact_value(r)
        if result.value != Fraction(r - 1, r):
            failures.append(f"r={r}: value {format_rat(result.value)}")
        if result.certificate.cls != inst.line_bundle or result.certificate.s != r:
            failures.append(f"r={r}: certificate {result.certificate.to_dict()}")
        if cmp_rat_root(result.value, general_lower_bound(inst.Lsq, r)) is not Ordering.LESS:
            failures.append(f"r={r}: not below the general bound")
    return CheckResult(
        "scroll-family",
        "Scroll family: epsilon = (r-1)/r below the general bound",
        not failures,
        "; ".join(failures) or f"r = {r_min}..{r_max} exact",
    )


def check_plane_two_points() -> CheckResult:
    inst = plane_two_point_example()
    bound = general_lower_bound(inst.Lsq, inst.r)
    order = cmp_rat_root(inst.value, bound)
    return CheckResult(
        "plane-two-points",
        "Plane, two points: 1/2 < sqrt(2/5)",
        order is Ordering.LESS and bound == RootVal(Fraction(2, 5)),
        f"{format_rat(inst.value)} {order.symbol} {bound}",
    )


def check_special_configurations(max_e: int = 6, max_a: int = 3) -> CheckResult:
    failures = []
    cases = 0
    for e in range(1, max_e + 1):
        S = RuledSurface(e)
        params = SearchParams(max_a=12, max_b=12 * e + 12)
        for r in range(1, e + 1):
            for a in range(1, max_a + 1):
                for b in range(a * e + 1, 3 * e + 4):
                    L = DivClass(a, b)
                    for cfg in valid_configs(r):
                        cases += 1
                        value = seshadri_special(S, L, cfg).value
                        if value != special_value_formula(S, L, cfg):
                            failures.append(f"e={e} L={L} cfg={cfg.to_dict()}: {value}")
                        report = verify_special_configuration(S, L, cfg, params)
                        if not report.passed:
                            failures.append(f"e={e} L={L} cfg={cfg.to_dict()}: {report.counterexamples[:3]}")
    return CheckResult(
        "special-configurations",
        "Points in special position, r <= e: min{a/t, (b-ae)/s}",
        not failures,
        "; ".join(failures[:5]) or f"{cases} configurations, zero violators",
        data={"cases": cases},
    )


def check_any_value_construction(pairs=((1, 2), (3, 4), (5, 3), (7, 1))) -> CheckResult:
    failures = []
    for a, t in pairs:
        c = construct_any_q(a, t)
        Lsq = self_intersection(c.surface, c.line_bundle)
        if c.value != Fraction(a, t):
            failures.append(f"(a,t)=({a},{t}): value {c.value}")
        if cmp_rat_root(a, max_bound(Lsq, c.r)) is Ordering.GREATER:
            failures.append(f"(a,t)=({a},{t}): sqrt(L^2/r) < a")
    return CheckResult(
        "any-value-construction",
        "Any positive rational a/t is a constant at special points",
        not failures,
        "; ".join(failures) or f"{len(pairs)} pairs exact",
    )


def check_rational_curve_classification(max_e: int = 5, max_mn: int = 25) -> CheckResult:
    mismatches = []
    checked = 0
    for e in range(0, max_e + 1):
        S = RuledSurface(e)
        for m in range(1, max_mn + 1):
            for n in range(1, max_mn + 1):
                D = DivClass(m, n)
                if not is_irreducible_candidate(S, D):
                    continue
                checked += 1
                case = classify_smooth_rational(S, D)
                if case.is_rational != (arithmetic_genus(S, D) == 0):
                    mismatches.append(f"e={e} {D}: {case}")
    return CheckResult(
        "rational-curve-classification",
        "Rational curve list agrees with arithmetic genus 0",
        not mismatches,
        "; ".join(mismatches[:5]) or f"{checked} classes, zero mismatches",
        data={"checked": checked},
    )


def check_sum_square_inequality(max_s: int = 8, max_m1: int = 12) -> CheckResult:
    report = sweep_sum_square_inequality(max_s, max_m1)
    found = [2, 2, 2] in report.witnesses.get("equality", [])
    return CheckResult(
        "sum-square-inequality",
        "Sum-of-squares multiplicity inequality, exhaustive",
        report.passed and found,
        f"{report.checked} applicable vectors, {len(report.counterexamples)} counterexamples, "
        f"equality witness (2,2,2) {'found' if found else 'missing'}",
        data=report.to_dict(),
    )


def check_section_proof_arithmetic() -> CheckResult:
    failures = []

    for e in range(0, 6):
        for b in range(0, 31):
            for n in range(0, 31):
                if section_hodge_defect(e, b, n) != (n - b) ** 2:
                    failures.append(f"defect e={e} b={b} n={n}")

    r = np.arange(4, 201, dtype=np.int64)
    q_low = -(r + 2) * 4 + r * (r + 3) * 2 - r * (r + 3)
    q_high = -(r + 2) * (r - 1) ** 2 + r * (r + 3) * (r - 1) - r * (r + 3)
    if (q_low < 0).any() or (q_high < 0).any():
        failures.append("Q(2) or Q(r-1) negative")
    for rr in range(4, 201):
        if any(seshadri_quadratic(rr, s) < 0 for s in range(2, rr)):
            failures.append(f"Q(s) < 0 at r={rr}")

    if not all(conic_case_holds(rr) for rr in range(5, 201)):
        failures.append("conic case inequality")

    for gap in range(2, 11):
        for Lsq in range(1, 21):
            for rr in range(Lsq + 5, Lsq + 206):
                if not section_chain_holds(gap, Lsq, rr):
                    failures.append(f"chain gap={gap} L^2={Lsq} r={rr}")

    return CheckResult(
        "section-proof-arithmetic",
        "Arithmetic behind the large-r guarantee on rational ruled surfaces",
        not failures,
        "; ".join(failures[:5]) or "identity, quadratic, conic and chain checks exact",
    )


def ample_bundles_small(max_e: int = 3, max_a: int = 2, max_b: int = 8, max_Lsq: int = 8):
    for e in range(0, max_e + 1):
        S = RuledSurface(e)
        for a in range(1, max_a + 1):
            for b in range(0, max_b + 1):
                L = DivClass(a, b)
                if is_ample(S, L) and self_intersection(S, L) <= max_Lsq:
                    yield S, L


def check_rational_ruled_consistency(n_jobs: int = 1) -> CheckResult:
    violations = []
    searches = 0
    for S, L in ample_bundles_small():
        Lsq = self_intersection(S, L)
        for r in range(Lsq + 5, Lsq + 11):
            searches += 1
            cert = upper_bound_very_general(S, L, r, n_jobs=n_jobs)
            if cmp_rat_root(cert.value, general_lower_bound(Lsq, r)) is Ordering.LESS:
                violations.append(f"e={S.e} L={L} r={r}: {cert.to_dict()}")
    return CheckResult(
        "rational-ruled-consistency",
        "Oracle upper bounds never undercut the guaranteed bound",
        not violations,
        "; ".join(violations[:5]) or f"{searches} searches, zero violations",
        data={"searches": searches},
    )


def check_hodge_index(max_e: int = 5, bound: int = 15) -> CheckResult:
    coeffs = np.arange(-bound, bound + 1, dtype=np.int64)
    Da, Db = np.meshgrid(coeffs, coeffs, indexing="ij")
    Da, Db = Da.ravel(), Db.ravel()
    violations = 0
    pairs = 0
    for e in range(0, max_e + 1):
        for a in range(1, bound + 1):
            for b in range(a * e + 1, bound + 1):
                LD = -a * Da * e + a * Db + Da * b
                LL = 2 * a * b - a * a * e
                DD = 2 * Da * Db - Da * Da * e
                lhs, rhs = LD * LD, LL * DD
                violations += int((lhs < rhs).sum())
                # equality only on multiples of L
                equal = lhs == rhs
                violations += int((equal & (a * Db != b * Da)).sum())
                pairs += Da.size
    return CheckResult(
        "hodge-index",
        "(L.D)^2 >= L^2 D^2 for ample L",
        violations == 0,
        f"{pairs} pairs, {violations} violations",
    )


def check_general_bound_arithmetic(top: int = 10 ** 4) -> CheckResult:
    r = np.arange(2, top + 1, dtype=np.int64)
    m = np.arange(2, top + 1, dtype=np.int64)
    seven_sixteenths = bool((16 * (r + 2) <= 7 * r * (r + 3)).all())
    two_fifths = bool((5 * (r + 2) <= 2 * r * (r + 3)).all())
    mult_bound = bool((5 * (m * m - m) >= 2 * m * m).all())
    return CheckResult(
        "general-bound-arithmetic",
        "Auxiliary inequalities behind the general bound",
        seven_sixteenths and two_fifths and mult_bound,
        f"<= 7/16: {seven_sixteenths}, <= 2/5: {two_fifths}, m^2-m >= 2m^2/5: {mult_bound}",
    )


def check_k3_gate(max_Lsq: int = 12, max_r: int = 20) -> CheckResult:
    failures = []
    for Lsq in range(2, max_Lsq + 1, 2):
        for r in range(1, max_r + 1):
            gate = k3_lower_bound(Lsq, r)
            if gate.guaranteed != (r >= max(Lsq, 2)):
                failures.append(f"L^2={Lsq} r={r}")
    return CheckResult(
        "k3-gate",
        "K3 surfaces: guarantee exactly when r >= max{L^2, 2}",
        not failures,
        ", ".join(failures) or "gate exact",
    )


# Registry in run order
CHECKS = {
    "scroll-family": check_scroll_family,
    "plane-two-points": check_plane_two_points,
    "special-configurations": check_special_configurations,
    "any-value-construction": check_any_value_construction,
    "rational-curve-classification": check_rational_curve_classification,
    "sum-square-inequality": check_sum_square_inequality,
    "section-proof-arithmetic": check_section_proof_arithmetic,
    "rational-ruled-consistency": check_rational_ruled_consistency,
    "hodge-index": check_hodge_index,
    "general-bound-arithmetic": check_general_bound_arithmetic,
    "k3-gate": check_k3_gate,
}


def run_suite(names=None, n_jobs: int = 1) -> SuiteReport:
    """
    Runs the named checks (all by default) and returns:
    - a SuiteReport with one CheckResult per check, timings included
    """
    names = list(names or CHECKS)
    results = []
    for name in names:
        fn = CHECKS[name]
        started = time.perf_counter()
        if name == "rational-ruled-consistency":
            result = fn(n_jobs=n_jobs)
        else:
            result = fn()
        result.seconds = time.perf_counter() - started
        logger.info("%s: %s in %.2fs", name, "pass" if result.passed else "FAIL", result.seconds)
        results.append(result)

    return SuiteReport(
        run_id=str(uuid.uuid4())[:8],
        created_at=datetime.now().isoformat(timespec="seconds"),
        results=results,
    )
