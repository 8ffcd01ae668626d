from fractions import Fraction

import pytest

from utils.bounds import general_lower_bound, max_bound
from utils.errors import PreconditionError
from utils.exactnum import Ordering, RootVal, cmp_rat_root
from utils.numlat import DivClass, RuledSurface, h0, self_intersection
from utils.seshadri import (
    FibreCurve,
    PointConfigSummary,
    SectionC0,
    below_general_bound_witness,
    construct_any_q,
    plane_two_point_example,
    scroll_example,
    seshadri_special,
    seshadri_special_simplified,
    seshadri_very_general_small_r,
    special_value_formula,
    submaximality_gap,
    valid_configs,
)


def test_config_validation():
    PointConfigSummary(3, 3, 0)
    PointConfigSummary(3, 2, 2)
    for r, t, s in [(0, 1, 0), (3, 0, 0), (3, 4, 0), (3, 1, 4), (3, 3, 2), (4, 3, 3)]:
        with pytest.raises(PreconditionError):
            PointConfigSummary(r, t, s)


def test_valid_configs_are_exactly_the_admissible_ones():
    configs = list(valid_configs(3))
    # s=0: 3, s=1: 3, s=2: 2, s=3: 1
    assert len(configs) == len(set(configs)) == 9
    assert PointConfigSummary(3, 1, 3) in configs
    assert all(c.t <= c.r - c.s + 1 for c in configs if c.s)


@pytest.mark.parametrize(
    "e, L, cfg, value, cert",
    [
        (3, (2, 7), (3, 2, 1), Fraction(1), FibreCurve(2)),
        (3, (2, 7), (2, 1, 0), Fraction(2), FibreCurve(1)),
        (4, (3, 25), (4, 4, 0), Fraction(3, 4), FibreCurve(4)),
        (3, (1, 4), (3, 1, 3), Fraction(1, 3), SectionC0(3)),
    ],
)
def test_seshadri_special(e, L, cfg, value, cert):
    result = seshadri_special(RuledSurface(e), DivClass(*L), PointConfigSummary(*cfg))
    assert result.value == value
    assert result.certificate == cert


def test_seshadri_special_preconditions():
    S = RuledSurface(2)
    with pytest.raises(PreconditionError):
        seshadri_special(S, DivClass(1, 3), PointConfigSummary(3, 1, 0))
    with pytest.raises(PreconditionError):
        seshadri_special(S, DivClass(1, 2), PointConfigSummary(1, 1, 0))
    with pytest.raises(PreconditionError):
        seshadri_special(RuledSurface(0), DivClass(1, 1), PointConfigSummary(1, 1, 0))


def test_special_agrees_with_closed_formula():
    for e in range(1, 5):
        S = RuledSurface(e)
        for a in range(1, 4):
            for b in range(a * e + 1, 3 * e + 4):
                L = DivClass(a, b)
                for r in range(1, e + 1):
                    for cfg in valid_configs(r):
                        assert seshadri_special(S, L, cfg).value == special_value_formula(S, L, cfg)


def test_special_value_is_submaximal():
    for e in range(1, 7):
        S = RuledSurface(e)
        for a in range(1, 4):
            for b in range(a * e + 1, 3 * e + 4):
                L = DivClass(a, b)
                Lsq = self_intersection(S, L)
                for r in range(1, e + 1):
                    for cfg in valid_configs(r):
                        value = seshadri_special(S, L, cfg).value
                        assert cmp_rat_root(value, max_bound(Lsq, r)) is Ordering.LESS, (e, a, b, cfg)


def test_simplified_matches_special_once_b_is_large():
    for e in range(1, 7):
        S = RuledSurface(e)
        for a in range(1, 4):
            for b in range(2 * a * e + 1, 2 * a * e + 8):
                L = DivClass(a, b)
                for r in range(1, e + 1):
                    for cfg in valid_configs(r):
                        assert seshadri_special_simplified(S, L, cfg) == seshadri_special(S, L, cfg), (e, a, b, cfg)


@pytest.mark.parametrize(
    "e, L, cfg, value",
    [(4, (3, 25), (4, 2, 1), Fraction(3, 2)), (1, (1, 3), (1, 1, 1), Fraction(1)), (2, (1, 5), (2, 2, 0), Fraction(1, 2))],
)
def test_seshadri_special_simplified(e, L, cfg, value):
    S, L, cfg = RuledSurface(e), DivClass(*L), PointConfigSummary(*cfg)
    assert seshadri_special_simplified(S, L, cfg).value == value == seshadri_special(S, L, cfg).value


def test_simplified_requires_large_b():
    with pytest.raises(PreconditionError):
        seshadri_special_simplified(RuledSurface(3), DivClass(2, 7), PointConfigSummary(2, 1, 0))


@pytest.mark.parametrize(
    "a, t, e, L",
    [(3, 4, 4, (3, 25)), (1, 1, 1, (1, 3)), (5, 3, 3, (5, 31))],
)
def test_construct_any_q(a, t, e, L):
    c = construct_any_q(a, t)
    assert c.surface == RuledSurface(e)
    assert c.line_bundle == DivClass(*L)
    assert c.value == Fraction(a, t)
    Lsq = self_intersection(c.surface, c.line_bundle)
    assert cmp_rat_root(c.value, max_bound(Lsq, c.r)) is Ordering.LESS


def test_construct_any_q_sqrt_bound():
    c = construct_any_q(5, 3)
    assert max_bound(self_intersection(c.surface, c.line_bundle), c.r) == RootVal(Fraction(235, 3))


@pytest.mark.parametrize(
    "e, L, r, value",
    [(3, (2, 7), 3, 2), (1, (1, 2), 1, 1), (5, (2, 11), 4, 2)],
)
def test_very_general_small_r(e, L, r, value):
    result = seshadri_very_general_small_r(RuledSurface(e), DivClass(*L), r)
    assert result.value == value
    assert result.certificate == FibreCurve(1)
    assert result.inputs["theorem"] == "very-general-small-r"


def test_submaximality_gap_positive_for_small_r():
    for e in range(1, 6):
        S = RuledSurface(e)
        for a in range(1, 4):
            for b in range(a * e + 1, a * e + 6):
                for r in range(1, e + 1):
                    assert submaximality_gap(S, DivClass(a, b), r) > 0


@pytest.mark.parametrize(
    "r, e, L, Lsq, value",
    [(5, 0, (1, 2), 4, Fraction(4, 5)), (6, 1, (1, 3), 5, Fraction(5, 6)), (3, 0, (1, 1), 2, Fraction(2, 3))],
)
def test_scroll_example(r, e, L, Lsq, value):
    inst = scroll_example(r)
    assert inst.surface == RuledSurface(e)
    assert inst.line_bundle == DivClass(*L)
    assert inst.Lsq == Lsq
    assert inst.value == value
    assert h0(inst.surface, inst.line_bundle) == r + 1


def test_scroll_needs_three_points():
    with pytest.raises(PreconditionError):
        scroll_example(2)


def test_below_general_bound_for_every_r():
    inst = plane_two_point_example()
    assert cmp_rat_root(inst.value, general_lower_bound(inst.Lsq, inst.r)) is Ordering.LESS
    for r in range(2, 201):
        Lsq, value, bound = below_general_bound_witness(r)
        assert cmp_rat_root(value, bound) is Ordering.LESS


def test_scroll_family_sits_strictly_below_general_bound():
    for r in range(3, 201):
        inst = scroll_example(r)
        assert inst.Lsq == r - 1
        # ((r-1)/r)^2 < (r+2)/(r+3) * (r-1)/r
        assert inst.value**2 < Fraction(r + 2, r + 3) * Fraction(r - 1, r)
        assert cmp_rat_root(inst.value, general_lower_bound(inst.Lsq, r)) is Ordering.LESS


def test_result_serialisation():
    result = seshadri_special(RuledSurface(3), DivClass(2, 7), PointConfigSummary(3, 2, 1))
    assert str(result) == "epsilon = 1"
    d = result.to_dict()
    assert d["value"] == "1"
    assert d["certificate"] == {"tag": "fibre", "t": 2}
    assert d["inputs"]["L"] == [2, 7]
