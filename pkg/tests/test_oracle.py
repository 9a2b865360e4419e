"""Kirillov forms, exact ranks, index oracle, principal elements, spectra."""

import random
from fractions import Fraction

import pytest

from seaweeds.matrices import lie_from_structure_constants, seaweed_basis
from seaweeds.oracle import (
    NotFrobeniusError,
    NotFrobeniusFunctionalError,
    ad_spectrum,
    index_oracle,
    kernel_dimension,
    kirillov_matrix,
    principal_element,
    rank_exact,
)
from seaweeds.specs import parse_spec

SL2 = lie_from_structure_constants({(0, 2): {1: 1}, (1, 0): {0: 2}, (1, 2): {2: -2}})


def test_kirillov_zero_functional():
    lie = seaweed_basis(parse_spec("A4:2|2/1|3"))
    matrix = kirillov_matrix(lie, [0] * lie.dimension)
    assert all(all(v == 0 for v in row) for row in matrix)


def test_kirillov_abelian():
    abelian = lie_from_structure_constants({}, dimension=4)
    matrix = kirillov_matrix(abelian, [3, -1, 4, 1])
    assert all(all(v == 0 for v in row) for row in matrix)


def test_kirillov_sl2_dual_to_e():
    matrix = kirillov_matrix(SL2, [1, 0, 0])
    assert matrix == [[0, -2, 0], [2, 0, 0], [0, 0, 0]]
    assert rank_exact(matrix) == 2


def test_kirillov_is_skew():
    lie = seaweed_basis(parse_spec("C3:1|2/2"))
    rng = random.Random(3)
    for _ in range(5):
        f = [rng.randint(-100, 100) for _ in range(lie.dimension)]
        m = kirillov_matrix(lie, f)
        assert all(m[i][j] == -m[j][i] for i in range(len(m)) for j in range(len(m)))
        assert rank_exact(m) % 2 == 0


def test_rank_zero_and_identity():
    assert rank_exact([[0] * 4 for _ in range(4)]) == 0
    assert rank_exact([[1 if i == j else 0 for j in range(5)] for i in range(5)]) == 5
    assert rank_exact([]) == 0


def test_rank_of_random_products():
    # Independent oracle: a d x r times r x d product of full-rank random
    # integer factors has rank exactly r (checked by Fraction elimination).
    rng = random.Random(17)
    for _ in range(20):
        d = rng.randint(2, 7)
        r = rng.randint(1, d)
        left = [[rng.randint(-5, 5) for _ in range(r)] for _ in range(d)]
        right = [[rng.randint(-5, 5) for _ in range(d)] for _ in range(r)]
        product = [
            [sum(left[i][k] * right[k][j] for k in range(r)) for j in range(d)]
            for i in range(d)
        ]
        expected = _fraction_rank([row[:] for row in product])
        assert rank_exact(product) == expected
        assert expected <= r


def _fraction_rank(matrix):
    rows = [[Fraction(v) for v in row] for row in matrix]
    rank = 0
    for col in range(len(rows[0]) if rows else 0):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [v - factor * w for v, w in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def test_rank_matches_fraction_elimination_on_fuzz():
    rng = random.Random(23)
    for _ in range(40):
        nr, nc = rng.randint(1, 6), rng.randint(1, 6)
        matrix = [[rng.randint(-9, 9) for _ in range(nc)] for _ in range(nr)]
        assert rank_exact(matrix) == _fraction_rank(matrix)


def test_index_oracle_fixtures():
    assert index_oracle(seaweed_basis(parse_spec("A5:4|1/2|1|2"))) == 0
    assert index_oracle(seaweed_basis(parse_spec("D5:1|4/2"))) == 2
    for n in (1, 2, 3):
        assert index_oracle(seaweed_basis(parse_spec(f"GL{n}:{n}/{n}"))) == n


def test_index_oracle_deterministic():
    lie = seaweed_basis(parse_spec("C4:2|2/3"))
    first = index_oracle(lie, trials=5, seed=0)
    second = index_oracle(lie, trials=5, seed=0)
    assert first == second
    assert index_oracle(lie, trials=5, seed=12345) == first


def test_principal_element_requires_nondegenerate():
    lie = seaweed_basis(parse_spec("A4:2|2/1|3"))
    with pytest.raises(NotFrobeniusFunctionalError):
        principal_element(lie, [0] * lie.dimension)


def test_principal_element_residual():
    # the defining identity is rechecked inside principal_element
    lie = seaweed_basis(parse_spec("A4:2|2/1|3"))
    rng = random.Random(9)
    f = [rng.randint(-10**6, 10**6) for _ in range(lie.dimension)]
    coords = principal_element(lie, f)
    assert len(coords) == lie.dimension


def test_spectrum_a4_fixture():
    report = ad_spectrum(seaweed_basis(parse_spec("A4:2|2/1|3")))
    assert report.eigenvalues == {-1: 1, 0: 3, 1: 3, 2: 1}
    assert report.integral and report.unbroken and report.symmetric_about_half


def epilogue_family(z):
    table = {
        (0, 3): {0: -1},
        (1, 2): {0: -1},
        (1, 3): {2: -1},
        (2, 3): {2: -1, 1: z},
    }
    return lie_from_structure_constants({k: {i: v for i, v in c.items() if v} for k, c in table.items()})


def test_spectrum_epilogue_family():
    for z in range(-3, 4):
        report = ad_spectrum(epilogue_family(z))
        if z == 0:
            assert report.integral and report.eigenvalues == {0: 2, 1: 2}
        elif z == -2:
            assert report.integral and report.eigenvalues == {-1: 1, 0: 1, 1: 1, 2: 1}
            assert report.unbroken and report.symmetric_about_half
        else:
            assert not report.integral
            assert report.defect == 2
            assert report.eigenvalues == {0: 1, 1: 1}


def test_spectrum_rejects_non_frobenius():
    with pytest.raises(NotFrobeniusError):
        ad_spectrum(seaweed_basis(parse_spec("A8:4|4/8")))


def test_kernel_dimension_even_rank_defect():
    # skew forms have even rank, so kernel dimension has the parity of m
    lie = seaweed_basis(parse_spec("B3:2/1"))
    m = kirillov_matrix(lie, [7] * lie.dimension)
    assert (lie.dimension - kernel_dimension(m)) % 2 == 0
