"""Admissible masks, bases, brackets and structure constants."""

import random

import pytest

from seaweeds.matrices import (
    JacobiError,
    admissible_mask,
    antitranspose,
    bracket,
    lie_from_structure_constants,
    parse_structure_constants,
    seaweed_basis,
    sparse,
)
from seaweeds.specs import AlgebraType, enumerate_specs, parse_spec


def test_antitranspose_identity():
    m = sparse(3, {(1, 1): 1, (2, 2): 1, (3, 3): 1})
    assert antitranspose(m) == m


def test_antitranspose_corner():
    m = sparse(2, {(1, 1): 1})
    assert antitranspose(m) == sparse(2, {(2, 2): 1})


def test_antitranspose_is_involutive():
    rng = random.Random(5)
    for _ in range(50):
        dim = rng.randint(1, 8)
        entries = {
            (rng.randint(1, dim), rng.randint(1, dim)): rng.randint(-9, 9)
            for _ in range(dim)
        }
        m = sparse(dim, entries)
        assert antitranspose(antitranspose(m)) == m


def test_bracket_sl2_relation():
    e12 = sparse(2, {(1, 2): 1})
    e21 = sparse(2, {(2, 1): 1})
    assert bracket(e12, e21) == sparse(2, {(1, 1): 1, (2, 2): -1})


def test_bracket_self_is_zero():
    x = sparse(3, {(1, 2): 2, (3, 1): -1})
    assert bracket(x, x) == sparse(3, {})


def test_bracket_jacobi_random():
    rng = random.Random(11)
    for _ in range(30):
        dim = rng.randint(2, 5)

        def rand():
            return sparse(
                dim,
                {
                    (rng.randint(1, dim), rng.randint(1, dim)): rng.randint(-4, 4)
                    for _ in range(3)
                },
            )

        x, y, z = rand(), rand(), rand()
        total = {}
        for m in (bracket(x, bracket(y, z)), bracket(z, bracket(x, y)), bracket(y, bracket(z, x))):
            for cell, v in m.entries.items():
                total[cell] = total.get(cell, 0) + v
        assert not any(total.values())


def test_mask_gl5_figure():
    mask = admissible_mask(parse_spec("GL5:4|1/2|1|2"))
    assert len(mask.cells) == 13
    # Star pattern of the defining matrix form: row 4 reaches every column.
    assert {(4, j) for j in range(1, 6)} <= mask.cells
    assert (5, 1) not in mask.cells


def test_mask_c5_figure():
    mask = admissible_mask(parse_spec("C5:1|4/3"))
    assert mask.dim == 10
    assert len(mask.cells) == 34
    for cell in [(1, 2), (1, 3), (5, 2), (4, 7), (9, 6), (8, 10), (10, 10)]:
        assert cell in mask.cells
    for cell in [(2, 1), (1, 4), (6, 5), (10, 1)]:
        assert cell not in mask.cells


def test_mask_gl_full():
    mask = admissible_mask(parse_spec("GL3:3/3"))
    assert len(mask.cells) == 9


def test_masks_are_antidiagonal_symmetric():
    for text in ("B5:3|2/4", "C5:1|4/3", "D5:1|4/2", "D9:4|3|2/2|3|1"):
        mask = admissible_mask(parse_spec(text))
        d = mask.dim
        assert {(d + 1 - j, d + 1 - i) for i, j in mask.cells} == mask.cells


@pytest.mark.parametrize(
    "text, dim",
    [
        ("A5:4|1/2|1|2", 12),
        ("GL5:4|1/2|1|2", 13),
        ("C1:/", 3),  # full sp(2)
        ("B5:3|2/4", 16),
    ],
)
def test_seaweed_dimensions(text, dim):
    assert seaweed_basis(parse_spec(text)).dimension == dim


def test_gl_dimension_formula_matches_mask():
    for n in range(1, 6):
        for spec in enumerate_specs(AlgebraType.GL, n):
            lie = seaweed_basis(spec)
            formula = (
                sum(a * (a + 1) // 2 for a in spec.top)
                + sum(b * (b + 1) // 2 for b in spec.bottom)
                - n
            )
            assert lie.dimension == formula == len(admissible_mask(spec).cells)
            # The traceless version drops exactly one diagonal direction.
            sl = seaweed_basis(parse_spec(str(spec).replace("GL", "A", 1)))
            assert sl.dimension == lie.dimension - 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_ambient_dimensions(n):
    assert seaweed_basis(parse_spec(f"B{n}:/")).dimension == n * (2 * n + 1)
    assert seaweed_basis(parse_spec(f"C{n}:/")).dimension == n * (2 * n + 1)
    assert seaweed_basis(parse_spec(f"D{n}:/")).dimension == n * (2 * n - 1)


def test_basis_supported_in_mask_and_closed():
    # closure is asserted during construction; here we recheck support.
    for text in ("C5:1|4/3", "B5:3|2/4", "D5:1|4/2", "A5:4|1/2|1|2"):
        spec = parse_spec(text)
        mask = admissible_mask(spec)
        lie = seaweed_basis(spec)
        for elt in lie.basis:
            assert set(elt.entries) <= set(mask.cells)
        for (i, j), coeffs in lie.brackets.items():
            assert all(k < lie.dimension for k in coeffs)


def test_structure_constant_antisymmetry():
    lie = seaweed_basis(parse_spec("C3:1|2/2"))
    for (i, j), coeffs in lie.brackets.items():
        flipped = lie.bracket_coeffs(j, i)
        assert flipped == {k: -v for k, v in coeffs.items()}


EPILOGUE_TEMPLATE = """
# four-dimensional family, bracket rows in e_i e_j -> e_k:coeff form
1 4 -> 1:-1
2 3 -> 1:-1
2 4 -> 3:-1
3 4 -> 3:-1{z_term}
"""


def epilogue_family(z: int):
    text = EPILOGUE_TEMPLATE.format(z_term=f",2:{z}" if z else "")
    return lie_from_structure_constants(parse_structure_constants(text))


def test_epilogue_family_is_valid():
    for z in (0, -2, 3):
        lie = epilogue_family(z)
        assert lie.dimension == 4


def test_heisenberg_table():
    lie = lie_from_structure_constants({(0, 1): {2: 1}})
    assert lie.dimension == 3
    assert lie.bracket_coeffs(1, 0) == {2: -1}


def test_jacobi_violation_reports_triple():
    bad = {(0, 1): {2: 1}, (0, 2): {0: 1}}
    with pytest.raises(JacobiError) as excinfo:
        lie_from_structure_constants(bad)
    assert excinfo.value.triple == (0, 1, 2)


def test_parse_structure_constants_rationals():
    table = parse_structure_constants("1 2 -> 1:1/2, 3:-2\n")
    from fractions import Fraction

    assert table == {(0, 1): {0: Fraction(1, 2), 2: Fraction(-2)}}
    with pytest.raises(ValueError):
        parse_structure_constants("1 2 3:1")
