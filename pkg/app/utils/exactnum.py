import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import mpmath

from utils.errors import PreconditionError

# Every Seshadri value, bound and ratio is a Fraction; no float ever
# takes part in a comparison.
Rat = Fraction

APPROX_DIGITS = 12

_RAT_PATTERN = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @property
    def symbol(self) -> str:
        return {-1: "<", 0: "=", 1: ">"}[self.value]

    @classmethod
    def of_sign(cls, x: int) -> "Ordering":
        if x < 0:
            return cls.LESS
        if x > 0:
            return cls.GREATER
        return cls.EQUAL


def as_rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise PreconditionError(f"not an exact rational: {x!r}")
    if isinstance(x, str):
        return parse_rat(x)
    return Fraction(x)


def parse_rat(text: str) -> Fraction:
    m = _RAT_PATTERN.match(text or "")
    if not m:
        raise PreconditionError(f"malformed rational {text!r}; expected 'p' or 'p/q'")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise PreconditionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rat(q: Fraction) -> str:
    # Fraction already prints reduced "p/q", and "p" when q = 1
    return str(as_rat(q))


@dataclass(frozen=True)
class RootVal:
    """The nonnegative square root of an exact rational radicand."""

    radicand: Fraction

    def __post_init__(self):
        radicand = as_rat(self.radicand)
        if radicand < 0:
            raise PreconditionError(f"RootVal radicand must be >= 0, got {radicand}")
        object.__setattr__(self, "radicand", radicand)

    def __str__(self):
        return f"sqrt({format_rat(self.radicand)})"

    def times_root(self, other: "RootVal") -> "RootVal":
        return RootVal(self.radicand * other.radicand)


# -----------------------------
# Comparisons
# -----------------------------
def rat_cmp(a, b) -> Ordering:
    a, b = as_rat(a), as_rat(b)
    return Ordering.of_sign(a.numerator * b.denominator - b.numerator * a.denominator)


def cmp_rat_root(a, s: RootVal) -> Ordering:
    """Compare a rational with a root by squaring; a < 0 is below every root."""
    a = as_rat(a)
    if a < 0:
        return Ordering.LESS
    return rat_cmp(a * a, s.radicand)


def root_cmp(s1: RootVal, s2: RootVal) -> Ordering:
    return rat_cmp(s1.radicand, s2.radicand)


def root_min(roots) -> RootVal:
    roots = list(roots)
    if not roots:
        raise PreconditionError("root_min of an empty collection")
    best = roots[0]
    for s in roots[1:]:
        if root_cmp(s, best) is Ordering.LESS:
            best = s
    return best


# -----------------------------
# Display helpers (never used for decisions)
# -----------------------------
def approx(value, digits: int = APPROX_DIGITS) -> str:
    with mpmath.workdps(digits + 10):
        if isinstance(value, RootVal):
            x = mpmath.sqrt(mpmath.mpf(value.radicand.numerator) / value.radicand.denominator)
        else:
            q = as_rat(value)
            x = mpmath.mpf(q.numerator) / q.denominator
        return mpmath.nstr(x, digits)
