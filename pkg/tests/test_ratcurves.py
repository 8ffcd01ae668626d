from fractions import Fraction

import pytest

from utils.errors import PreconditionError
from utils.exactnum import RootVal
from utils.numlat import C0, FIBRE, DivClass, RuledSurface, arithmetic_genus, is_irreducible_candidate
from utils.ratcurves import (
    CurveTag,
    check_seshadri_curve_rigidity,
    classify_smooth_rational,
    conic_case_holds,
    guaranteed_bound_rational_ruled,
    section_chain_holds,
    section_hodge_defect,
    seshadri_quadratic,
)


@pytest.mark.parametrize(
    "e, cls, tag",
    [
        (1, (2, 2), CurveTag.CONIC_E1),
        (0, (4, 1), CurveTag.E0_SECTION),
        (2, (1, 0), CurveTag.C0),
        (5, (0, 1), CurveTag.FIBRE),
        (2, (1, 5), CurveTag.SECTION_HIGH_DEGREE),
        (3, (1, 3), CurveTag.SECTION_MINIMAL),
        (2, (1, 1), CurveTag.NOT_IRREDUCIBLE),
    ],
)
def test_classify_examples(e, cls, tag):
    assert classify_smooth_rational(RuledSurface(e), DivClass(*cls)).tag is tag


def test_classify_reports_genus_of_non_rational_classes():
    case = classify_smooth_rational(RuledSurface(1), DivClass(2, 3))
    assert case.tag is CurveTag.NOT_RATIONAL
    assert case.genus == 1
    assert str(case) == "not-rational(1)"
    assert str(classify_smooth_rational(RuledSurface(1), DivClass(2, 2))) == "(6)"


def test_case_tags_serialize_as_case_numbers():
    cases = [(2, (1, 0)), (2, (0, 1)), (2, (1, 5)), (3, (1, 3)), (0, (4, 1)), (1, (2, 2))]
    tags = [classify_smooth_rational(RuledSurface(e), DivClass(*cls)).to_dict()["tag"] for e, cls in cases]
    assert tags == ["(1)", "(2)", "(3)", "(4)", "(5)", "(6)"]
    assert classify_smooth_rational(RuledSurface(2), DivClass(1, 1)).to_dict()["tag"] == "not-irreducible"


def test_section_of_f0_is_tagged_by_first_matching_case():
    # (1,1) on F_0 is both a section of high degree and an e = 0 section
    assert classify_smooth_rational(RuledSurface(0), DivClass(1, 1)).tag is CurveTag.SECTION_HIGH_DEGREE


def test_classification_agrees_with_genus_zero():
    for e in range(0, 6):
        S = RuledSurface(e)
        for m in range(1, 26):
            for n in range(1, 26):
                D = DivClass(m, n)
                if is_irreducible_candidate(S, D):
                    case = classify_smooth_rational(S, D)
                    assert case.is_rational == (arithmetic_genus(S, D) == 0), (e, m, n)


def test_rigidity_examples():
    assert check_seshadri_curve_rigidity(RuledSurface(0), DivClass(1, 2), 5).rigid
    failed = check_seshadri_curve_rigidity(RuledSurface(0), DivClass(1, 1), 2)
    assert not failed.rigid and "D^2 = 2" in failed.reason
    assert check_seshadri_curve_rigidity(RuledSurface(2), FIBRE, 1).rigid
    assert not check_seshadri_curve_rigidity(RuledSurface(3), C0, 1).rigid


def test_rigidity_holds_across_the_grid():
    # every class passing the hypotheses must land on D^2 = r-1, p_a = 0
    for e in range(0, 4):
        S = RuledSurface(e)
        for a in range(0, 4):
            for b in range(0, 15):
                for r in range(1, 20):
                    check_seshadri_curve_rigidity(S, DivClass(a, b), r)


@pytest.mark.parametrize(
    "e, L, r, bound",
    [(1, (1, 2), 8, RootVal(Fraction(15, 44))), (1, (1, 2), 7, None), (0, (1, 1), 7, RootVal(Fraction(9, 35)))],
)
def test_guaranteed_bound(e, L, r, bound):
    gate = guaranteed_bound_rational_ruled(RuledSurface(e), DivClass(*L), r)
    assert gate.bound == bound


def test_guarantee_preconditions():
    with pytest.raises(PreconditionError):
        guaranteed_bound_rational_ruled(RuledSurface(1, base_genus=1), DivClass(1, 2), 10)
    with pytest.raises(PreconditionError):
        guaranteed_bound_rational_ruled(RuledSurface(1), DivClass(1, 1), 10)


def test_section_hodge_defect_identity():
    for e in range(0, 6):
        for b in range(0, 31):
            for n in range(0, 31):
                assert section_hodge_defect(e, b, n) == (n - b) ** 2


def test_proof_inequalities():
    for r in range(4, 201):
        assert all(seshadri_quadratic(r, s) >= 0 for s in range(2, r))
    assert seshadri_quadratic(3, 2) < 0
    assert all(conic_case_holds(r) for r in range(5, 201))
    assert not conic_case_holds(1)
    assert section_chain_holds(2, 20, 25)
    assert not section_chain_holds(1, 20, 25)
