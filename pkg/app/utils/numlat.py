from dataclasses import dataclass
from fractions import Fraction

from utils.errors import PreconditionError


@dataclass(frozen=True)
class RuledSurface:
    """
    A ruled surface over a curve of genus base_genus with invariant e >= 0.

    Numerical classes live in the rank-2 lattice spanned by the normalized
    section C0 (C0^2 = -e) and a fibre f (f^2 = 0, C0.f = 1).
    """

    invariant_e: int
    base_genus: int = 0

    def __post_init__(self):
        for name in ("invariant_e", "base_genus"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise PreconditionError(f"{name} must be an integer, got {v!r}")
        if self.invariant_e < 0:
            raise PreconditionError(f"invariant e must be >= 0, got {self.invariant_e}")
        if self.base_genus < 0:
            raise PreconditionError(f"base genus must be >= 0, got {self.base_genus}")

    @property
    def e(self) -> int:
        return self.invariant_e

    @property
    def is_rational(self) -> bool:
        return self.base_genus == 0

    def require_rational(self, operation: str):
        if not self.is_rational:
            raise PreconditionError(
                f"{operation} is only available on rational ruled surfaces (base genus 0), "
                f"got base genus {self.base_genus}"
            )

    def __str__(self):
        if self.is_rational:
            return f"F_{self.e}"
        return f"X(e={self.e}, g={self.base_genus})"


@dataclass(frozen=True, order=True)
class DivClass:
    """Numerical class a*C0 + b*f."""

    a: int
    b: int

    def __post_init__(self):
        for name in ("a", "b"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise PreconditionError(f"class coefficient {name} must be an integer, got {v!r}")

    def __str__(self):
        sign = "+" if self.b >= 0 else "-"
        return f"{self.a}*C0{sign}{abs(self.b)}*f"

    def __add__(self, other: "DivClass") -> "DivClass":
        return DivClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "DivClass") -> "DivClass":
        return DivClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "DivClass":
        return DivClass(-self.a, -self.b)

    def __rmul__(self, k: int) -> "DivClass":
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        return DivClass(k * self.a, k * self.b)

    def to_list(self):
        return [self.a, self.b]


C0 = DivClass(1, 0)
FIBRE = DivClass(0, 1)


# -----------------------------
# Intersection pairing
# -----------------------------
def intersect(S: RuledSurface, D1: DivClass, D2: DivClass) -> int:
    return -D1.a * D2.a * S.e + D1.a * D2.b + D2.a * D1.b


def self_intersection(S: RuledSurface, D: DivClass) -> int:
    return intersect(S, D, D)


def canonical_class(S: RuledSurface) -> DivClass:
    S.require_rational("canonical_class")
    return DivClass(-2, -2 - S.e)


# -----------------------------
# Positivity criteria
# -----------------------------
def is_ample(S: RuledSurface, D: DivClass) -> bool:
    return D.a > 0 and D.b > D.a * S.e


def is_nef(S: RuledSurface, D: DivClass) -> bool:
    return D.a >= 0 and D.b >= D.a * S.e


def is_irreducible_candidate(S: RuledSurface, D: DivClass) -> bool:
    """
    Numerical necessary condition for D to hold an irreducible curve:
    D is C0 or f, or a > 0 and b > ae, or e > 0, a > 0 and b = ae.
    """
    if D == C0 or D == FIBRE:
        return True
    if D.a > 0 and D.b > D.a * S.e:
        return True
    return S.e > 0 and D.a > 0 and D.b == D.a * S.e


def require_ample(S: RuledSurface, L: DivClass):
    if not is_ample(S, L):
        raise PreconditionError(
            f"L = {L} is not ample on {S}: need a > 0 and b > a*e = {L.a * S.e}"
        )


# -----------------------------
# Cohomology counts (rational base only)
# -----------------------------
def h0(S: RuledSurface, D: DivClass) -> int:
    """
    Sections of O(aC0 + bf) on F_e: pushing down to P^1 splits it into
    O(b) + O(b - e) + ... + O(b - ae).
    """
    S.require_rational("h0")
    if D.a < 0:
        return 0
    return sum(max(0, D.b - k * S.e + 1) for k in range(D.a + 1))


def chi(S: RuledSurface, D: DivClass) -> Fraction:
    S.require_rational("chi")
    K = canonical_class(S)
    return 1 + Fraction(intersect(S, D, D) - intersect(S, K, D), 2)


def arithmetic_genus(S: RuledSurface, D: DivClass) -> Fraction:
    S.require_rational("arithmetic_genus")
    K = canonical_class(S)
    return 1 + Fraction(intersect(S, D, D) + intersect(S, K, D), 2)
