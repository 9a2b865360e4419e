"""Index formulas, closed forms, totient/xi, Frobenius classification."""

from fractions import Fraction

import pytest

from seaweeds.formulas import (
    classify_frobenius,
    euler_phi,
    index_closed_form,
    index_combinatorial,
    xi,
)
from seaweeds.specs import AlgebraType, SeaweedSpec, enumerate_specs, parse_spec
from seaweeds.sweep import (
    forest_criterion_sweep,
    split_top_gcd_sweep,
    xi_tail2_sweep,
    xi_tail4_sweep,
)

PAPER_INDEX_FIXTURES = {
    "GL26:5|7|4|10/8|6|6|6": 3,
    "A5:4|1/2|1|2": 0,
    "A8:3|5/8": 0,
    "A8:4|4/8": 3,
    "C5:1|4/3": 0,
    "C14:7|7/11": 0,
    "B5:3|2/4": 0,
    "D5:1|4/2": 2,
    "D8:3|5/4": 1,
    "D9:4|3/3|3": 2,
    "D9:4|3|2/2|3|1": 1,
    "D8:5|3/5": 5,
    "D8:6|2/5": 0,
    "D9:3|6/6": 0,
    "D10:4|6/7": 0,
    "D10:6|4/7": 2,
    "D14:5|9/9": 0,
    "D22:9|13/17": 2,
}


@pytest.mark.parametrize("text, expected", sorted(PAPER_INDEX_FIXTURES.items()))
def test_index_fixtures(text, expected):
    assert index_combinatorial(parse_spec(text)).index == expected


def test_euler_phi():
    assert euler_phi(10) == 4
    assert euler_phi(11) == 10
    assert euler_phi(1) == 1
    assert euler_phi(12) == 4
    with pytest.raises(ValueError):
        euler_phi(0)


def test_xi_values():
    assert xi(10, 7) == Fraction(3, 10)
    assert xi(10, 9) == Fraction(9, 10)
    # 5**(phi(7)-1) = 5**5 = 3125 = 446*7 + 3
    assert xi(7, 5) == Fraction(3, 7)
    assert xi(11, 7) == Fraction(8, 11)


def test_xi_range_and_inverse():
    import math

    for n in range(2, 30):
        for d in range(1, n):
            value = xi(n, d)
            assert Fraction(0) <= value < 1
            if math.gcd(d, n) == 1:
                # d**(phi(n)-1) is d's inverse mod n when d is a unit.
                assert value == Fraction(pow(d, -1, n), n)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("A8:3|5/8", (0, "GCD_TWO_BLOCK")),
        ("A8:4|4/8", (3, "GCD_TWO_BLOCK")),
        ("A10:6|4/7|3", (0, "GCD_THREE_BLOCK")),
        ("A8:2|2|4/8", (1, "GCD_THREE_BLOCK")),
        ("C8:4|4/7", (0, "GCD_SPLIT_TOP")),
        ("C8:5|3/6", (0, "GCD_SPLIT_TOP")),
        ("C5:5/2|2", (0, "GCD_SPLIT_BOTTOM_1")),
        ("C5:5/2|1", (2, "GCD_SPLIT_BOTTOM_2")),
        ("C5:4/2", (2, "TWO_PART")),
        ("C4:2/2", (4, "TWO_PART")),
        ("B6:5/3", (1, "TWO_PART")),
        ("D8:5|3/5", (5, "TAIL_GAP_MATCH")),
        ("D3:2|1/2", (3, "TAIL_GAP_MATCH")),
        ("D9:4|3/4", (6, "CONFIG_II")),
        ("D8:4|4/6", (1, "CONFIG_I+GCD_SPLIT_TOP")),
        ("D6:4/2", (3, "CONFIG_I+TWO_PART")),
    ],
)
def test_closed_form_fixtures(text, expected):
    assert index_closed_form(parse_spec(text)) == expected


@pytest.mark.parametrize("text", ["C14:7|7/11", "A5:4|1/2|1|2", "A6:1|2|2|1/6", "D10:4|6/7", "D8:3|5/4"])
def test_closed_form_absent(text):
    # Four-part type-A tops have no gcd formula at all; the other shapes
    # simply fall outside every registered hypothesis.
    assert index_closed_form(parse_spec(text)) is None


def test_closed_form_agrees_with_meander_exhaustively():
    for algebra in AlgebraType:
        n_max = 6 if algebra.full_compositions_required else 6
        for n in range(1, n_max + 1):
            for spec in enumerate_specs(algebra, n):
                closed = index_closed_form(spec)
                if closed is not None:
                    assert closed[0] == index_combinatorial(spec).index, spec


@pytest.mark.parametrize(
    "text, frobenius, tag",
    [
        ("D10:4|6/7", True, "XI_TAIL2"),
        ("D10:6|4/7", False, "XI_TAIL2"),
        ("D14:5|9/9", True, "XI_TAIL4"),
        ("D22:9|13/17", False, "XI_TAIL4"),
        ("D9:3|6/6", True, "GCD3_PATH"),
        ("C8:4|4/7", True, "SPLIT_TOP_GCD_C1"),
        ("C8:5|3/6", True, "SPLIT_TOP_GCD_C2"),
        ("C8:7|1/5", True, "SPLIT_TOP_GCD_C3"),
        ("B5:3|2/4", True, "SPLIT_TOP_GCD_C1"),
        ("D8:6|2/5", True, "SHORT_TAIL_BLOCK"),
        ("D8:5|3/3", True, "SHORT_TAIL_BLOCK"),
        ("D9:6|3/4", False, "SHORT_TAIL_BLOCK"),
        ("D8:5|3/5", False, "TAIL_GAP_MATCH"),
        ("GL5:4|1/2|1|2", False, "GL_NEVER_FROBENIUS"),
        ("A5:4|1/2|1|2", True, "MEANDER_SINGLE_PATH"),
    ],
)
def test_classifier_fixtures(text, frobenius, tag):
    verdict = classify_frobenius(parse_spec(text))
    assert verdict.frobenius is frobenius
    assert verdict.justification == tag


def test_classifier_certificates():
    verdict = classify_frobenius(parse_spec("D10:4|6/7"))
    assert verdict.certificate["delta"] == 7
    assert verdict.certificate["xi"] == Fraction(3, 10)
    verdict = classify_frobenius(parse_spec("D10:6|4/7"))
    assert verdict.certificate["xi"] == Fraction(9, 10)
    verdict = classify_frobenius(parse_spec("D14:5|9/9"))
    assert verdict.certificate["xi"] == Fraction(3, 7)


def test_classifier_matches_index_exhaustively():
    for algebra in AlgebraType:
        n_max = 6 if algebra.full_compositions_required else 5
        for n in range(1, n_max + 1):
            for spec in enumerate_specs(algebra, n):
                verdict = classify_frobenius(spec)
                assert verdict.frobenius == (index_combinatorial(spec).index == 0), spec


def test_gl_index_is_a_index_plus_one():
    for n in range(1, 6):
        for spec in enumerate_specs(AlgebraType.A, n):
            gl = SeaweedSpec(AlgebraType.GL, n, spec.top, spec.bottom)
            assert index_combinatorial(gl).index == index_combinatorial(spec).index + 1


def test_split_top_gcd_sweep_clean():
    assert split_top_gcd_sweep(30) == []


def test_xi_sweeps_clean():
    assert xi_tail2_sweep(40) == []
    assert xi_tail4_sweep(44) == []


def test_forest_criterion():
    assert forest_criterion_sweep(AlgebraType.C, 6) == []
    assert forest_criterion_sweep(AlgebraType.D, 6) == []
