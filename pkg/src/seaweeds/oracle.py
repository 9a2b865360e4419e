"""Exact linear-algebra oracle: Kirillov forms, ranks, principal elements.

The index of a Lie algebra is the minimum over linear functionals f of
the kernel dimension of the skew form f([x, y]).  Sampling integer
functionals with large coordinates and minimizing gives an upper bound
that is exact for generic samples; everything here is computed over the
integers and rationals, so the reported kernel dimensions carry no
numerical error at all.

Principal elements and their adjoint spectra (the obstruction test for
embedding a Frobenius algebra as a seaweed) are computed the same way:
integer eigenvalue multiplicities are kernel dimensions of exact shifted
matrices, never the output of a numerical eigensolver.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .matrices import LieData

FUNCTIONAL_BOUND = 10**6
DEFAULT_TRIALS = 5


class NotFrobeniusFunctionalError(ValueError):
    """The supplied functional's Kirillov form is degenerate."""


class NotFrobeniusError(ValueError):
    """No sampled functional was nondegenerate; the algebra has index > 0."""


@dataclass(frozen=True)
class SpectrumReport:
    """Integer eigenvalue multiplicities of ad applied to a principal element.

    ``integral`` records whether the multiplicities account for the whole
    dimension; when they do not, ``defect`` is the number of missing
    eigenvalues (non-integer or non-semisimple spectrum).
    """

    eigenvalues: dict[int, int]
    integral: bool
    unbroken: bool
    symmetric_about_half: bool
    defect: int


def kirillov_matrix(lie: LieData, f: Sequence[int | Fraction]) -> list[list[int | Fraction]]:
    """Matrix of the form (x, y) -> f([x, y]) on the basis; skew by construction."""
    m = lie.dimension
    if len(f) != m:
        raise ValueError(f"functional has length {len(f)}, expected {m}")
    matrix = [[0] * m for _ in range(m)]
    for (i, j), coeffs in lie.brackets.items():
        value = sum(f[k] * c for k, c in coeffs.items())
        matrix[i][j] = value
        matrix[j][i] = -value
    return matrix


def rank_exact(matrix: Sequence[Sequence[int | Fraction]]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination.

    Rows are scaled to integers first; every intermediate entry is a
    minor of the scaled matrix, so the single division per update is
    exact and the result carries no rounding at all.
    """
    rows = [_integer_row(row) for row in matrix]
    if not rows or not rows[0]:
        return 0
    ncols = len(rows[0])
    rank = 0
    prev = 1
    r = 0
    for c in range(ncols):
        pivot = None
        best = None
        for i in range(r, len(rows)):
            v = rows[i][c]
            if v and (best is None or abs(v) < best):
                pivot, best = i, abs(v)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        top = rows[r]
        for i in range(r + 1, len(rows)):
            row = rows[i]
            v = row[c]
            if v:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j] - v * top[j]) // prev
            elif p != prev:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j]) // prev
            row[c] = 0
        prev = p
        r += 1
        rank += 1
        if r == len(rows):
            break
    return rank


def _integer_row(row: Sequence[int | Fraction]) -> list[int]:
    if all(isinstance(v, int) for v in row):
        return list(row)
    scale = lcm(*(Fraction(v).denominator for v in row)) if row else 1
    return [int(Fraction(v) * scale) for v in row]


def kernel_dimension(matrix: Sequence[Sequence[int | Fraction]]) -> int:
    if not matrix:
        return 0
    return len(matrix[0]) - rank_exact(matrix)


def random_functional(rng: random.Random, dimension: int) -> list[int]:
    return [rng.randint(-FUNCTIONAL_BOUND, FUNCTIONAL_BOUND) for _ in range(dimension)]


def index_oracle(lie: LieData, trials: int = DEFAULT_TRIALS, seed: int = 0) -> int:
    """Min kernel dimension of the Kirillov form over seeded random functionals.

    This is an upper bound for the index that is sharp for generic
    samples; with coordinates up to 1e6 and the min over several trials,
    a non-generic result is vanishingly unlikely.  Deterministic for a
    given (trials, seed).
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if lie.dimension == 0:
        return 0
    rng = random.Random(seed)
    best = lie.dimension
    for _ in range(trials):
        f = random_functional(rng, lie.dimension)
        best = min(best, kernel_dimension(kirillov_matrix(lie, f)))
        if best == 0:
            break
    return best


def principal_element(lie: LieData, f: Sequence[int | Fraction]) -> list[Fraction]:
    """Solve f([F, x_j]) = f(x_j) for F in coordinates, exactly.

    Requires the Kirillov form of f to be nondegenerate; the residual of
    the returned solution is checked to vanish identically.
    """
    m = lie.dimension
    matrix = kirillov_matrix(lie, f)
    # F = sum c_i x_i with sum_i c_i B[i][j] = f_j, i.e. B^T c = f.
    system = [[Fraction(matrix[i][j]) for i in range(m)] + [Fraction(f[j])] for j in range(m)]
    solution = _solve(system, m)
    if solution is None:
        raise NotFrobeniusFunctionalError("Kirillov form is degenerate for this functional")
    for j in range(m):
        residual = sum(solution[i] * matrix[i][j] for i in range(m)) - f[j]
        assert residual == 0
    return solution


def _solve(aug: list[list[Fraction]], m: int) -> list[Fraction] | None:
    """Gauss-Jordan over Fractions on an augmented m x (m+1) system."""
    for col in range(m):
        pivot = next((r for r in range(col, m) if aug[r][col]), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(m):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [v - factor * w for v, w in zip(aug[r], aug[col])]
    return [aug[r][m] for r in range(m)]


def ad_matrix(lie: LieData, element: Sequence[int | Fraction]) -> list[list[Fraction]]:
    """Matrix of x -> [element, x] on the basis (columns indexed by x_j)."""
    m = lie.dimension
    out = [[Fraction(0)] * m for _ in range(m)]
    for j in range(m):
        for i, c_i in enumerate(element):
            if not c_i:
                continue
            for k, c in lie.bracket_coeffs(i, j).items():
                out[k][j] += c_i * c
    return out


def _spectrum_scan_order(lo: int, hi: int) -> list[int]:
    # Closest to one-half first: 0, 1, -1, 2, -2, ...
    return sorted(range(lo, hi + 1), key=lambda k: (abs(2 * k - 1), k))


def ad_spectrum(
    lie: LieData,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    window: tuple[int, int] | None = None,
) -> SpectrumReport:
    """Integer spectrum of ad(principal element) by exact kernel sweeps.

    The first sampled functional with nondegenerate Kirillov form is
    used; if none of the ``trials`` samples works the algebra is not
    Frobenius (for these samples) and NotFrobeniusError is raised.

    For each integer k in the window (default [-m, m+1]) the geometric
    multiplicity is the kernel dimension of ad(F) - k*I; the scan stops
    once the multiplicities account for the whole dimension.  A defect
    is reported, not raised: it signals eigenvalues outside the integers
    (the obstruction to realizing the algebra as a seaweed) or a
    non-semisimple ad(F).
    """
    m = lie.dimension
    rng = random.Random(seed)
    f = None
    for _ in range(max(trials, 1)):
        candidate = random_functional(rng, m)
        if kernel_dimension(kirillov_matrix(lie, candidate)) == 0:
            f = candidate
            break
    if m > 0 and f is None:
        raise NotFrobeniusError(f"no nondegenerate functional found in {trials} trials")

    if m == 0:
        return SpectrumReport({}, True, True, True, 0)

    principal = principal_element(lie, f)
    ad = ad_matrix(lie, principal)
    lo, hi = window if window is not None else (-m, m + 1)
    eigenvalues: dict[int, int] = {}
    total = 0
    for k in _spectrum_scan_order(lo, hi):
        shifted = [
            [ad[i][j] - (k if i == j else 0) for j in range(m)] for i in range(m)
        ]
        mult = kernel_dimension(shifted)
        if mult:
            eigenvalues[k] = mult
            total += mult
            if total == m:
                break

    support = sorted(eigenvalues)
    integral = total == m
    unbroken = bool(support) and support == list(range(support[0], support[-1] + 1))
    symmetric = all(
        eigenvalues.get(k, 0) == eigenvalues.get(1 - k, 0)
        for k in set(support) | {1 - k for k in support}
    )
    return SpectrumReport(
        eigenvalues=dict(sorted(eigenvalues.items())),
        integral=integral,
        unbroken=unbroken,
        symmetric_about_half=symmetric,
        defect=m - total,
    )
