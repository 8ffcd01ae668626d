import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from joblib import Parallel, delayed

from utils.bounds import (
    MultVector,
    balanced_mults,
    mult_vectors_by_head,
    sum_square_inequality,
)
from utils.errors import BoundsDidNotMeetError, SearchSpaceError, require
from utils.exactnum import Ordering, RootVal, cmp_rat_root, format_rat, root_min
from utils.numlat import (
    C0,
    FIBRE,
    DivClass,
    RuledSurface,
    h0,
    intersect,
    is_irreducible_candidate,
    require_ample,
)
from utils.seshadri import (
    PointConfigSummary,
    ScrollDivisor,
    SeshadriResult,
    scroll_example,
    seshadri_special,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchParams:
    max_a: int
    max_b: int
    max_total_mult: int = 1

    def __post_init__(self):
        for name in ("max_a", "max_b", "max_total_mult"):
            v = getattr(self, name)
            require(isinstance(v, int) and not isinstance(v, bool) and v >= 1, f"{name} must be an integer >= 1, got {v!r}")

    def to_dict(self) -> dict:
        return {"max_a": self.max_a, "max_b": self.max_b, "max_total_mult": self.max_total_mult}


def default_params(S: RuledSurface, L: DivClass, r: int) -> SearchParams:
    max_a = max(3, L.a + 1)
    return SearchParams(
        max_a=max_a,
        max_b=4 * max(S.e, 1) * max_a + 4,
        max_total_mult=2 * r,
    )


@dataclass(frozen=True)
class UpperBoundCert:
    cls: DivClass
    mults: MultVector
    value: Fraction

    @property
    def sort_key(self):
        # total order: value, then (a, b), then the multiplicities
        return (self.value, self.cls.a, self.cls.b, self.mults.mults)

    def to_dict(self) -> dict:
        return {
            "class": self.cls.to_list(),
            "mults": list(self.mults.mults),
            "value": format_rat(self.value),
        }


@dataclass
class VerificationReport:
    name: str
    swept: dict
    checked: int = 0
    counterexamples: list = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "swept": self.swept,
            "checked": self.checked,
            "passed": self.passed,
            "counterexamples": self.counterexamples,
            "witnesses": self.witnesses,
        }


# -----------------------------
# Existence of divisors with prescribed multiplicities
# -----------------------------
def exists_divisor_with_mults(S: RuledSurface, D: DivClass, m: MultVector) -> bool:
    """
    Sufficient test: a member of |D| with multiplicity m_i at each of the
    points exists when h^0(D) exceeds the number of imposed conditions.
    """
    S.require_rational("exists_divisor_with_mults")
    return h0(S, D) > m.conditions


def _best_mults(sections: int, r: int, max_total: int) -> Optional[MultVector]:
    """
    Largest total (then lexicographically smallest vector) admissible for a
    class with `sections` sections. Balanced vectors minimise the condition
    count for a given total, and the count grows with the total.
    """
    best = None
    for total in range(1, max_total + 1):
        m = balanced_mults(total, r)
        if m.conditions >= sections:
            break
        best = m
    return best


def _search_row(S: RuledSurface, L: DivClass, r: int, a: int, params: SearchParams):
    best = None
    for b in range(0, params.max_b + 1):
        if a == 0 and b == 0:
            continue
        D = DivClass(a, b)
        sections = h0(S, D)
        if sections <= 1:
            continue
        m = _best_mults(sections, r, params.max_total_mult)
        if m is None:
            continue
        cert = UpperBoundCert(D, m, Fraction(intersect(S, L, D), m.total))
        if best is None or cert.sort_key < best.sort_key:
            best = cert
    return best


def upper_bound_very_general(
    S: RuledSurface,
    L: DivClass,
    r: int,
    params: Optional[SearchParams] = None,
    n_jobs: int = 1,
) -> UpperBoundCert:
    """
    Minimum of L.D / sum(m_i) over effective classes D within the caps and
    multiplicity vectors with at most r entries that |D| can realise at r
    very general points. Any such divisor bounds the constant from above.
    """
    S.require_rational("upper_bound_very_general")
    require_ample(S, L)
    require(isinstance(r, int) and r >= 1, f"r must be a positive integer, got {r!r}")
    params = params or default_params(S, L, r)

    logger.debug("upper bound search on %s, L=%s, r=%d, caps=%s", S, L, r, params.to_dict())
    rows = Parallel(n_jobs=n_jobs)(
        delayed(_search_row)(S, L, r, a, params) for a in range(params.max_a + 1)
    )
    certs = [c for c in rows if c is not None]
    if not certs:
        raise SearchSpaceError(f"no admissible divisor within caps {params.to_dict()}")
    return min(certs, key=lambda c: c.sort_key)


# -----------------------------
# Special configurations with r <= e
# -----------------------------
def verify_special_configuration(
    S: RuledSurface,
    L: DivClass,
    cfg: PointConfigSummary,
    params: SearchParams,
) -> VerificationReport:
    """
    Every irreducible class D = (alpha, beta) other than C0 and f has
    multiplicity at most alpha at each point, so (L.D)/(r*alpha) must not
    drop below the claimed constant.
    """
    result = seshadri_special(S, L, cfg)
    eps = result.value
    report = VerificationReport(
        name="special-configuration",
        swept={
            "e": S.e,
            "L": L.to_list(),
            "config": cfg.to_dict(),
            "max_a": params.max_a,
            "max_b": params.max_b,
        },
    )

    chain_floor = Fraction(L.a * S.e + 1, cfg.r)
    report.witnesses["epsilon"] = format_rat(eps)
    report.witnesses["chain_floor"] = format_rat(chain_floor)
    if chain_floor < eps:
        report.counterexamples.append({"chain_floor": format_rat(chain_floor), "epsilon": format_rat(eps)})

    worst = None
    for alpha in range(1, params.max_a + 1):
        for beta in range(0, params.max_b + 1):
            D = DivClass(alpha, beta)
            if D == C0 or D == FIBRE or not is_irreducible_candidate(S, D):
                continue
            report.checked += 1
            ratio = Fraction(intersect(S, L, D), cfg.r * alpha)
            if ratio < eps:
                report.counterexamples.append({"class": D.to_list(), "ratio": format_rat(ratio)})
            if worst is None or ratio < worst[0]:
                worst = (ratio, D)

    if worst is not None:
        report.witnesses["worst_ratio"] = format_rat(worst[0])
        report.witnesses["worst_class"] = worst[1].to_list()
    return report


# -----------------------------
# Exact value for the scroll family
# -----------------------------
def scroll_lower_bound(r: int, Lsq: int) -> RootVal:
    """
    The constant is L.C / s for a mult-one curve through s <= r points.
    s = 1 gives at least 1; otherwise C^2 >= s - 1 and the Hodge index
    theorem give at least sqrt(L^2 (s-1)) / s.
    """
    candidates = [RootVal(1)]
    candidates.extend(RootVal(Fraction(Lsq * (s - 1), s * s)) for s in range(2, r + 1))
    return root_min(candidates)


def scroll_exact_value(r: int, params: Optional[SearchParams] = None, n_jobs: int = 1) -> SeshadriResult:
    inst = scroll_example(r)
    S, L = inst.surface, inst.line_bundle
    cert = upper_bound_very_general(S, L, r, params, n_jobs=n_jobs)
    lower = scroll_lower_bound(r, inst.Lsq)

    logger.info("scroll r=%d: upper %s via %s, lower %s", r, cert.value, cert.cls, lower)
    if cmp_rat_root(cert.value, lower) is not Ordering.EQUAL:
        raise BoundsDidNotMeetError(
            f"scroll r={r}: upper bound {format_rat(cert.value)} and lower bound {lower} did not meet; "
            f"enlarge the search caps"
        )
    return SeshadriResult(
        cert.value,
        ScrollDivisor(cert.cls, cert.mults.s),
        {"r": r, "e": S.e, "L": L.to_list(), "mults": list(cert.mults.mults)},
    )


# -----------------------------
# Exhaustive sweep of the sum-of-squares inequality
# -----------------------------
def sweep_sum_square_inequality(max_s: int, max_m1: int) -> VerificationReport:
    require(max_s >= 2 and max_m1 >= 2, f"sweep needs max_s, max_m1 >= 2, got {max_s}, {max_m1}")
    report = VerificationReport(name="sum-square-inequality", swept={"max_s": max_s, "max_m1": max_m1})

    tightest = None
    equality = []
    for m in mult_vectors_by_head(max_s, max_m1):
        check = sum_square_inequality(m)
        if not check.applicable:
            continue
        report.checked += 1
        if not check.holds:
            report.counterexamples.append({"mults": list(m.mults), "lhs": format_rat(check.lhs), "rhs": check.rhs})
        if check.lhs == check.rhs:
            equality.append(list(m.mults))
        key = (check.ratio, m.s, m.mults)
        if tightest is None or key < tightest:
            tightest = key

    if tightest is not None:
        report.witnesses["tightest_mults"] = list(tightest[2])
        report.witnesses["tightest_ratio"] = format_rat(tightest[0])
    report.witnesses["equality"] = equality
    return report
