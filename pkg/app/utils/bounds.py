from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Optional

from utils.errors import InternalConsistencyError, PreconditionError, require
from utils.exactnum import Ordering, RootVal, root_cmp


# -----------------------------
# Multiplicity vectors
# -----------------------------
@dataclass(frozen=True)
class MultVector:
    """Multiplicities m_1 >= ... >= m_s > 0 of a curve at s of the points."""

    mults: tuple

    def __post_init__(self):
        mults = tuple(self.mults)
        if not mults:
            raise PreconditionError("a multiplicity vector needs at least one entry")
        for m in mults:
            if isinstance(m, bool) or not isinstance(m, int) or m < 1:
                raise PreconditionError(f"multiplicities must be positive integers, got {mults}")
        if any(x < y for x, y in zip(mults, mults[1:])):
            raise PreconditionError(f"multiplicities must be sorted non-increasing, got {mults}")
        object.__setattr__(self, "mults", mults)

    @classmethod
    def of(cls, *mults: int) -> "MultVector":
        return cls(tuple(sorted(mults, reverse=True)))

    @classmethod
    def ones(cls, s: int) -> "MultVector":
        return cls((1,) * s)

    def __len__(self):
        return len(self.mults)

    def __str__(self):
        return "(" + ",".join(str(m) for m in self.mults) + ")"

    @property
    def s(self) -> int:
        return len(self.mults)

    @property
    def m1(self) -> int:
        return self.mults[0]

    @property
    def ms(self) -> int:
        return self.mults[-1]

    @property
    def total(self) -> int:
        return sum(self.mults)

    @property
    def sum_squares(self) -> int:
        return sum(m * m for m in self.mults)

    @property
    def conditions(self) -> int:
        # a point of multiplicity m costs at most m(m+1)/2 linear conditions
        return sum(m * (m + 1) // 2 for m in self.mults)


def balanced_mults(total: int, parts: int) -> MultVector:
    """
    The most even split of total into at most `parts` positive entries.

    Among all vectors with this total and length <= parts it has the fewest
    conditions and is the lexicographically smallest.
    """
    require(total >= 1 and parts >= 1, f"balanced_mults needs total, parts >= 1, got {total}, {parts}")
    k = min(total, parts)
    q, rem = divmod(total, k)
    return MultVector((q + 1,) * rem + (q,) * (k - rem))


def enumerate_mult_vectors(max_len: int, max_total: int):
    """All non-increasing positive vectors of length <= max_len and sum <= max_total."""

    def rec(prefix, cap, budget):
        if prefix:
            yield MultVector(tuple(prefix))
        if len(prefix) == max_len:
            return
        for m in range(min(cap, budget), 0, -1):
            prefix.append(m)
            yield from rec(prefix, m, budget - m)
            prefix.pop()

    yield from rec([], max_total, max_total)


def mult_vectors_by_head(max_s: int, max_m1: int):
    """All non-increasing vectors with s <= max_s and m_1 <= max_m1."""
    for s in range(1, max_s + 1):
        for combo in combinations_with_replacement(range(max_m1, 0, -1), s):
            yield MultVector(combo)


# -----------------------------
# The three reference bounds
# -----------------------------
def _require_lsq_r(Lsq: int, r: int, min_r: int):
    require(isinstance(Lsq, int) and Lsq >= 1, f"L^2 must be a positive integer, got {Lsq!r}")
    require(isinstance(r, int) and r >= min_r, f"r must be an integer >= {min_r}, got {r!r}")


def max_bound(Lsq: int, r: int) -> RootVal:
    """sqrt(L^2 / r), the elementary upper bound at r points."""
    _require_lsq_r(Lsq, r, 1)
    return RootVal(Fraction(Lsq, r))


def general_lower_bound(Lsq: int, r: int) -> RootVal:
    """sqrt((r+2)/(r+3)) * sqrt(L^2/r); below it the constant comes from a mult-one curve."""
    _require_lsq_r(Lsq, r, 2)
    return RootVal(Fraction(r + 2, r + 3)).times_root(max_bound(Lsq, r))


def ss_fibration_bound(Lsq: int, r: int) -> RootVal:
    """sqrt((r-1)/r) * sqrt(L^2/r); below it the surface is fibred by Seshadri curves."""
    _require_lsq_r(Lsq, r, 2)
    return RootVal(Fraction(r - 1, r)).times_root(max_bound(Lsq, r))


@dataclass(frozen=True)
class BoundReport:
    Lsq: int
    r: int
    general_bound: RootVal
    ss_bound: RootVal
    max_bound: RootVal
    ordering: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "Lsq": self.Lsq,
            "r": self.r,
            "general_bound": str(self.general_bound),
            "ss_bound": str(self.ss_bound),
            "max_bound": str(self.max_bound),
            "ordering": {k: v.symbol for k, v in self.ordering.items()},
        }


def bound_report(Lsq: int, r: int) -> BoundReport:
    general = general_lower_bound(Lsq, r)
    ss = ss_fibration_bound(Lsq, r)
    top = max_bound(Lsq, r)
    ordering = {
        "general_vs_ss": root_cmp(general, ss),
        "general_vs_max": root_cmp(general, top),
        "ss_vs_max": root_cmp(ss, top),
    }
    # (r+2)/(r+3) > (r-1)/r  <=>  r^2 + 2r > r^2 + 2r - 3
    if ordering["general_vs_ss"] is not Ordering.GREATER:
        raise InternalConsistencyError(f"general bound {general} not above ss bound {ss}")
    return BoundReport(Lsq, r, general, ss, top, ordering)


# -----------------------------
# Self-intersection inequalities for curves at very general points
# -----------------------------
def xu_el_min_selfint(m: MultVector) -> int:
    """C^2 >= sum m_i^2 - m_s."""
    return m.sum_squares - m.ms


def xu_el_gon_min_selfint(m: MultVector, gon: int = 1) -> int:
    """C^2 >= sum m_i^2 - m_1 + gon, valid once m_1 >= 2."""
    require(m.m1 >= 2, f"the gonality refinement needs m_1 >= 2, got {m}")
    require(isinstance(gon, int) and gon >= 1, f"gonality must be a positive integer, got {gon!r}")
    return m.sum_squares - m.m1 + gon


@dataclass(frozen=True)
class SumSquareCheck:
    applicable: bool
    holds: Optional[bool] = None
    lhs: Optional[Fraction] = None
    rhs: Optional[int] = None

    @property
    def ratio(self) -> Optional[Fraction]:
        if not self.applicable:
            return None
        return self.lhs / self.rhs

    def __str__(self):
        if not self.applicable:
            return "not-applicable"
        return f"applicable(holds={str(self.holds).lower()})"


def sum_square_applies(m: MultVector) -> bool:
    if m.m1 < 2 or m.s == 1:
        return False
    return not (m.s == 2 and m.mults == (2, 2))


def sum_square_inequality(m: MultVector) -> SumSquareCheck:
    """
    ((s+3)s/(s+2)) * (sum m_i^2 - m_s) >= (sum m_i)^2, evaluated exactly
    where it is known to apply.
    """
    if not sum_square_applies(m):
        return SumSquareCheck(applicable=False)
    s = m.s
    lhs = Fraction((s + 3) * s, s + 2) * (m.sum_squares - m.ms)
    rhs = m.total ** 2
    return SumSquareCheck(applicable=True, holds=lhs >= rhs, lhs=lhs, rhs=rhs)


# -----------------------------
# Mult-one Seshadri curves
# -----------------------------
def seshadri_curve_constraint(s: int, Csq: int) -> bool:
    """A mult-one curve through s points computing a value below the general bound has C^2 < s."""
    require(isinstance(s, int) and s >= 1, f"s must be a positive integer, got {s!r}")
    return Csq < s


def mult_one_curve_ratio_floor(Lsq: int, r: int, s: int, Csq: int) -> RootVal:
    """
    Hodge-index floor sqrt(L^2 * C^2) / s of (L.C)/s for a mult-one curve
    through s points. Once C^2 >= s (and s <= r) it reaches sqrt(L^2/r).
    """
    require(Csq >= 0, f"Hodge floor needs C^2 >= 0, got {Csq}")
    require(1 <= s <= r, f"need 1 <= s <= r, got s={s}, r={r}")
    return RootVal(Fraction(Lsq * Csq, s * s))


# -----------------------------
# K3 surfaces
# -----------------------------
@dataclass(frozen=True)
class Guarantee:
    bound: Optional[RootVal]
    reason: str = ""

    @property
    def guaranteed(self) -> bool:
        return self.bound is not None

    def __str__(self):
        if self.bound is None:
            return f"no-guarantee ({self.reason})" if self.reason else "no-guarantee"
        return f"guaranteed({self.bound})"

    def to_dict(self) -> dict:
        return {
            "guaranteed": self.guaranteed,
            "bound": str(self.bound) if self.bound is not None else None,
            "reason": self.reason,
        }


def k3_lower_bound(Lsq: int, r: int) -> Guarantee:
    require(isinstance(Lsq, int) and Lsq >= 2, f"K3 L^2 must be an integer >= 2, got {Lsq!r}")
    require(Lsq % 2 == 0, f"self-intersections on a K3 surface are even, got L^2 = {Lsq}")
    require(isinstance(r, int) and r >= 1, f"r must be a positive integer, got {r!r}")
    threshold = max(Lsq, 2)
    if r >= threshold:
        return Guarantee(general_lower_bound(Lsq, r), f"r >= max(L^2, 2) = {threshold}")
    return Guarantee(None, f"r < max(L^2, 2) = {threshold}")


def k3_curve_dimension(Csq: int) -> int:
    """h^0 of an irreducible curve on a K3 surface: C^2/2 + 2."""
    require(Csq % 2 == 0 and Csq >= -2, f"K3 curve classes have even C^2 >= -2, got {Csq}")
    return Csq // 2 + 2


def k3_min_selfint_through(r: int) -> int:
    """An irreducible K3 curve through r very general points has h^0 >= r+1, so C^2 >= 2r - 2."""
    require(r >= 1, f"r must be positive, got {r}")
    return 2 * r - 2
