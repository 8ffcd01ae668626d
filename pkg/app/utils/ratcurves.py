from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from utils.bounds import Guarantee, general_lower_bound
from utils.errors import InternalConsistencyError, require
from utils.numlat import (
    C0,
    FIBRE,
    DivClass,
    RuledSurface,
    arithmetic_genus,
    h0,
    intersect,
    is_irreducible_candidate,
    require_ample,
    self_intersection,
)


# -----------------------------
# Smooth rational curve classes
# -----------------------------
class CurveTag(Enum):
    # serialized as the case numbers of the rational list
    C0 = "(1)"
    FIBRE = "(2)"
    SECTION_HIGH_DEGREE = "(3)"
    SECTION_MINIMAL = "(4)"
    E0_SECTION = "(5)"
    CONIC_E1 = "(6)"
    NOT_RATIONAL = "not-rational"
    NOT_IRREDUCIBLE = "not-irreducible"


RATIONAL_TAGS = frozenset(
    {
        CurveTag.C0,
        CurveTag.FIBRE,
        CurveTag.SECTION_HIGH_DEGREE,
        CurveTag.SECTION_MINIMAL,
        CurveTag.E0_SECTION,
        CurveTag.CONIC_E1,
    }
)

# Checked in order; the first match wins (C0 and f are handled before).
RATIONAL_CASES = [
    (CurveTag.SECTION_HIGH_DEGREE, lambda e, m, n: m == 1 and n > e),
    (CurveTag.SECTION_MINIMAL, lambda e, m, n: e > 0 and m == 1 and n == e),
    (CurveTag.E0_SECTION, lambda e, m, n: e == 0 and m >= 1 and n == 1),
    (CurveTag.CONIC_E1, lambda e, m, n: e == 1 and m == 2 and n == 2),
]


@dataclass(frozen=True)
class RationalCurveCase:
    tag: CurveTag
    genus: Optional[Fraction] = None

    @property
    def is_rational(self) -> bool:
        return self.tag in RATIONAL_TAGS

    def __str__(self):
        if self.tag is CurveTag.NOT_RATIONAL:
            return f"not-rational({self.genus})"
        return self.tag.value

    def to_dict(self) -> dict:
        return {
            "tag": self.tag.value,
            "rational": self.is_rational,
            "genus": str(self.genus) if self.genus is not None else None,
        }


def classify_smooth_rational(S: RuledSurface, D: DivClass) -> RationalCurveCase:
    """
    Which class of F_e carries a smooth rational curve. The explicit list
    decides; the arithmetic genus is only used to report non-rational classes.
    """
    S.require_rational("classify_smooth_rational")
    if D == C0:
        return RationalCurveCase(CurveTag.C0, Fraction(0))
    if D == FIBRE:
        return RationalCurveCase(CurveTag.FIBRE, Fraction(0))
    if not is_irreducible_candidate(S, D):
        return RationalCurveCase(CurveTag.NOT_IRREDUCIBLE)

    for tag, matches in RATIONAL_CASES:
        if matches(S.e, D.a, D.b):
            return RationalCurveCase(tag, Fraction(0))

    genus = arithmetic_genus(S, D)
    if genus < 1:
        raise InternalConsistencyError(f"{D} on {S} has genus {genus} but is missing from the rational list")
    return RationalCurveCase(CurveTag.NOT_RATIONAL, genus)


# -----------------------------
# Curves through r very general points with C^2 < r
# -----------------------------
@dataclass(frozen=True)
class RigidityCheck:
    rigid: bool
    reason: str = ""

    def __str__(self):
        return "rigid" if self.rigid else f"hypothesis-failed({self.reason})"

    def to_dict(self) -> dict:
        return {"rigid": self.rigid, "reason": self.reason}


def check_seshadri_curve_rigidity(S: RuledSurface, D: DivClass, r: int) -> RigidityCheck:
    """
    An irreducible curve through r very general points (h^0 >= r + 1) with
    C^2 < r must have C^2 = r - 1 and arithmetic genus 0.
    """
    S.require_rational("check_seshadri_curve_rigidity")
    require(isinstance(r, int) and r >= 1, f"r must be a positive integer, got {r!r}")

    if not is_irreducible_candidate(S, D):
        return RigidityCheck(False, f"{D} holds no irreducible curve on {S}")
    sections = h0(S, D)
    if sections < r + 1:
        return RigidityCheck(False, f"h0 = {sections} < r+1 = {r + 1}")
    Dsq = self_intersection(S, D)
    if Dsq >= r:
        return RigidityCheck(False, f"D^2 = {Dsq} >= r = {r}")

    genus = arithmetic_genus(S, D)
    if Dsq != r - 1 or genus != 0:
        raise InternalConsistencyError(f"{D} on {S} through {r} points has D^2 = {Dsq}, p_a = {genus}")
    return RigidityCheck(True)


def guaranteed_bound_rational_ruled(S: RuledSurface, L: DivClass, r: int) -> Guarantee:
    """On F_e the general bound holds outright once r >= L^2 + 5."""
    S.require_rational("guaranteed_bound_rational_ruled")
    require_ample(S, L)
    Lsq = self_intersection(S, L)
    threshold = Lsq + 5
    if r >= threshold:
        return Guarantee(general_lower_bound(Lsq, r), f"r >= L^2 + 5 = {threshold}")
    return Guarantee(None, f"r < L^2 + 5 = {threshold}")


# -----------------------------
# Arithmetic the guarantee rests on
# -----------------------------
def section_hodge_defect(e: int, b: int, n: int) -> int:
    """(L.C)^2 - L^2 C^2 for L = C0 + bf and C = C0 + nf; always (n - b)^2."""
    S = RuledSurface(e)
    L, C = DivClass(1, b), DivClass(1, n)
    return intersect(S, L, C) ** 2 - self_intersection(S, L) * self_intersection(S, C)


def seshadri_quadratic(r: int, s: int) -> int:
    """Q(s) = -(r+2)s^2 + r(r+3)s - r(r+3); Q(s) >= 0 means C^2/s^2 >= (r+2)/(r(r+3)) for C^2 = s - 1."""
    return -(r + 2) * s * s + r * (r + 3) * s - r * (r + 3)


def conic_case_holds(r: int) -> bool:
    """(4/5)^2 >= 3(r+2)/(r(r+3)): the conic 2C0 + 2f on F_1 never beats the bound for L = C0 + 2f."""
    return 16 * r * (r + 3) >= 25 * 3 * (r + 2)


def section_chain_holds(gap: int, Lsq: int, r: int) -> bool:
    """gap^2 (r+3) / L^2 >= 3."""
    return gap * gap * (r + 3) >= 3 * Lsq
