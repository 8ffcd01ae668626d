from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from utils.bounds import general_lower_bound, max_bound
from utils.errors import InternalConsistencyError, require
from utils.exactnum import Ordering, cmp_rat_root, format_rat
from utils.numlat import (
    FIBRE,
    C0,
    DivClass,
    RuledSurface,
    h0,
    intersect,
    is_ample,
    require_ample,
    self_intersection,
)


@dataclass(frozen=True)
class PointConfigSummary:
    """
    r distinct points, summarised by t (most points on one fibre) and
    s (points on C0). Coordinates are never represented.
    """

    r: int
    t: int
    s: int

    def __post_init__(self):
        r, t, s = self.r, self.t, self.s
        require(r >= 1, f"need r >= 1 points, got r={r}")
        require(1 <= t <= r, f"need 1 <= t <= r, got t={t}, r={r}")
        require(0 <= s <= r, f"need 0 <= s <= r, got s={s}, r={r}")
        # a fibre meets C0 once, so it carries at most one of the C0 points
        if s >= 1:
            require(t <= r - s + 1, f"t={t} points on one fibre is impossible with s={s} of r={r} on C0")

    def to_dict(self) -> dict:
        return {"r": self.r, "t": self.t, "s": self.s}


def valid_configs(r: int):
    """All admissible (t, s) summaries for r points."""
    for t in range(1, r + 1):
        for s in range(0, r + 1):
            if s >= 1 and t > r - s + 1:
                continue
            yield PointConfigSummary(r, t, s)


# -----------------------------
# Certificates
# -----------------------------
@dataclass(frozen=True)
class FibreCurve:
    t: int
    tag = "fibre"

    def to_dict(self) -> dict:
        return {"tag": self.tag, "t": self.t}


@dataclass(frozen=True)
class SectionC0:
    s: int
    tag = "section-c0"

    def to_dict(self) -> dict:
        return {"tag": self.tag, "s": self.s}


@dataclass(frozen=True)
class ScrollDivisor:
    cls: DivClass
    s: int
    tag = "scroll-divisor"

    def to_dict(self) -> dict:
        return {"tag": self.tag, "class": self.cls.to_list(), "s": self.s}


@dataclass(frozen=True)
class TheoremTag:
    name: str
    tag = "theorem"

    def to_dict(self) -> dict:
        return {"tag": self.tag, "name": self.name}


Certificate = Union[FibreCurve, SectionC0, ScrollDivisor, TheoremTag]


@dataclass(frozen=True)
class SeshadriResult:
    value: Fraction
    certificate: Certificate
    inputs: dict = field(default_factory=dict, compare=False)

    def __str__(self):
        return f"epsilon = {format_rat(self.value)}"

    def to_dict(self) -> dict:
        return {
            "value": format_rat(self.value),
            "certificate": self.certificate.to_dict(),
            "inputs": self.inputs,
        }


def _echo(S: RuledSurface, L: DivClass, **extra) -> dict:
    out = {"e": S.e, "base_genus": S.base_genus, "L": L.to_list()}
    out.update(extra)
    return out


# -----------------------------
# Points in special position, r <= e
# -----------------------------
def _require_small_r(S: RuledSurface, L: DivClass, r: int):
    require(S.e > 0, f"needs invariant e > 0, got e={S.e}")
    require(1 <= r <= S.e, f"needs 1 <= r <= e, got r={r}, e={S.e}")
    require_ample(S, L)


def seshadri_special(S: RuledSurface, L: DivClass, cfg: PointConfigSummary) -> SeshadriResult:
    """
    Exact constant at r <= e points with summary (t, s):
    min(L.f / t, L.C0 / s), or L.f / t when no point is on C0.
    A tie reports the fibre.
    """
    _require_small_r(S, L, cfg.r)
    inputs = _echo(S, L, config=cfg.to_dict())

    fibre_value = Fraction(intersect(S, L, FIBRE), cfg.t)
    if cfg.s == 0:
        return SeshadriResult(fibre_value, FibreCurve(cfg.t), inputs)

    section_value = Fraction(intersect(S, L, C0), cfg.s)
    if section_value < fibre_value:
        return SeshadriResult(section_value, SectionC0(cfg.s), inputs)
    return SeshadriResult(fibre_value, FibreCurve(cfg.t), inputs)


def seshadri_special_simplified(S: RuledSurface, L: DivClass, cfg: PointConfigSummary) -> SeshadriResult:
    """With b >= 2ae + 1 the fibre always wins: epsilon = L.f / t."""
    _require_small_r(S, L, cfg.r)
    require(L.b >= 2 * L.a * S.e + 1, f"needs b >= 2ae+1 = {2 * L.a * S.e + 1}, got b={L.b}")
    return SeshadriResult(
        Fraction(L.a, cfg.t),
        FibreCurve(cfg.t),
        _echo(S, L, config=cfg.to_dict()),
    )


@dataclass(frozen=True)
class AnyValueConstruction:
    surface: RuledSurface
    line_bundle: DivClass
    r: int
    config: PointConfigSummary
    value: Fraction

    def to_dict(self) -> dict:
        return {
            "e": self.surface.e,
            "L": self.line_bundle.to_list(),
            "r": self.r,
            "config": self.config.to_dict(),
            "value": format_rat(self.value),
        }


def construct_any_q(a: int, t: int) -> AnyValueConstruction:
    """A polarized ruled surface and r = t points with constant exactly a/t."""
    require(isinstance(a, int) and a >= 1, f"a must be a positive integer, got {a!r}")
    require(isinstance(t, int) and t >= 1, f"t must be a positive integer, got {t!r}")
    S = RuledSurface(t)
    L = DivClass(a, 2 * a * t + 1)
    cfg = PointConfigSummary(t, t, 0)
    value = seshadri_special_simplified(S, L, cfg).value

    # L^2 = 3a^2e + 2a, so sqrt(L^2/r) >= a: the small value is not caused by a small L^2
    if self_intersection(S, L) != 3 * a * a * t + 2 * a:
        raise InternalConsistencyError(f"unexpected L^2 for {L} on {S}")
    return AnyValueConstruction(S, L, t, cfg, value)


def submaximality_gap(S: RuledSurface, L: DivClass, r: int) -> Fraction:
    """L^2/r - (L.f)^2, positive for every ample L once r <= e."""
    return Fraction(self_intersection(S, L), r) - L.a * L.a


def seshadri_very_general_small_r(S: RuledSurface, L: DivClass, r: int) -> SeshadriResult:
    """At r <= e very general points no point is on C0 and no two share a fibre: epsilon = L.f."""
    _require_small_r(S, L, r)
    value = Fraction(intersect(S, L, FIBRE))
    if cmp_rat_root(value, max_bound(self_intersection(S, L), r)) is not Ordering.LESS:
        raise InternalConsistencyError(f"L.f = {value} is not submaximal for L = {L} on {S}, r = {r}")
    return SeshadriResult(value, FibreCurve(1), _echo(S, L, r=r, theorem="very-general-small-r"))


# -----------------------------
# Polarized surfaces below the general bound
# -----------------------------
@dataclass(frozen=True)
class ScrollInstance:
    surface: RuledSurface
    line_bundle: DivClass
    r: int
    value: Fraction

    @property
    def Lsq(self) -> int:
        return self_intersection(self.surface, self.line_bundle)

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "e": self.surface.e,
            "L": self.line_bundle.to_list(),
            "Lsq": self.Lsq,
            "value": format_rat(self.value),
        }


def scroll_example(r: int) -> ScrollInstance:
    """
    L = C0 + nf on F_e with r = 2n - e + 1 and n > e >= 0, taking the
    smallest invariant: e = 0 for odd r, e = 1 for even r. Then L^2 = r - 1,
    h^0(L) = r + 1 and epsilon(L, r) = (r-1)/r.
    """
    require(isinstance(r, int) and r >= 3, f"the scroll family needs r >= 3, got {r!r}")
    e = 1 if r % 2 == 0 else 0
    n = (r - 1 + e) // 2
    S = RuledSurface(e)
    L = DivClass(1, n)

    if not (n > e and is_ample(S, L)):
        raise InternalConsistencyError(f"scroll choice n={n}, e={e} is not ample")
    if self_intersection(S, L) != r - 1 or h0(S, L) != r + 1:
        raise InternalConsistencyError(f"scroll {L} on {S} has wrong L^2 or h^0 for r={r}")
    return ScrollInstance(S, L, r, Fraction(r - 1, r))


@dataclass(frozen=True)
class PlaneInstance:
    Lsq: int
    r: int
    value: Fraction


def plane_two_point_example() -> PlaneInstance:
    """O(1) on the projective plane at two points: the line through them gives 1/2."""
    return PlaneInstance(Lsq=1, r=2, value=Fraction(1, 2))


def below_general_bound_witness(r: int):
    """
    (L^2, value) of a polarized surface whose constant at r points sits
    strictly below the general bound.
    """
    require(isinstance(r, int) and r >= 2, f"needs r >= 2, got {r!r}")
    if r == 2:
        inst = plane_two_point_example()
        Lsq, value = inst.Lsq, inst.value
    else:
        inst = scroll_example(r)
        Lsq, value = inst.Lsq, inst.value
    bound = general_lower_bound(Lsq, r)
    if cmp_rat_root(value, bound) is not Ordering.LESS:
        raise InternalConsistencyError(f"witness value {value} not below {bound} at r={r}")
    return Lsq, value, bound


def special_value_formula(S: RuledSurface, L: DivClass, cfg: PointConfigSummary) -> Fraction:
    """min{a/t, (b - ae)/s} computed straight from coefficients."""
    fibre = Fraction(L.a, cfg.t)
    if cfg.s == 0:
        return fibre
    return min(fibre, Fraction(L.b - L.a * S.e, cfg.s))
