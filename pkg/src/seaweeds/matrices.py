"""Matrix realizations: admissible masks, bases, brackets, structure constants.

Every family is realized inside square matrices with 1-based indices:
GL/A in size n, C/D in size 2n, B in size 2n+1.  The admissible mask is
the union of the lower triangle intersected with the top block diagonal
and the upper triangle intersected with the bottom block diagonal; for
B/C/D the block lists are palindromes around a middle block of size
2(n - sum) (plus one for B), so the mask is symmetric about the
antidiagonal.

The ambient algebras are cut out by antitranspose symmetries: B and D
matrices satisfy X = -antitranspose(X); C matrices satisfy it on the
diagonal blocks and the opposite sign on the off blocks.  The seaweed
basis keeps exactly the symmetric ambient basis elements all of whose
cells are admissible; every basis entry is an integer, so brackets and
structure constants are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .specs import AlgebraType, SeaweedSpec, require_valid

Cell = tuple[int, int]


@dataclass(frozen=True)
class SparseIntMatrix:
    dim: int
    entries: dict[Cell, int]

    def __post_init__(self):
        assert all(v != 0 for v in self.entries.values())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparseIntMatrix)
            and self.dim == other.dim
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.dim, frozenset(self.entries.items())))


def sparse(dim: int, entries: dict[Cell, int]) -> SparseIntMatrix:
    return SparseIntMatrix(dim, {c: v for c, v in entries.items() if v != 0})


def antitranspose(m: SparseIntMatrix) -> SparseIntMatrix:
    """Reflect across the antidiagonal: (i,j) -> (dim+1-j, dim+1-i)."""
    d = m.dim
    return sparse(d, {(d + 1 - j, d + 1 - i): v for (i, j), v in m.entries.items()})


def mat_mul(x: SparseIntMatrix, y: SparseIntMatrix) -> SparseIntMatrix:
    if x.dim != y.dim:
        raise ValueError("dimension mismatch")
    by_row: dict[int, list[tuple[int, int]]] = {}
    for (i, j), v in y.entries.items():
        by_row.setdefault(i, []).append((j, v))
    out: dict[Cell, int] = {}
    for (i, k), v in x.entries.items():
        for j, w in by_row.get(k, ()):
            cell = (i, j)
            out[cell] = out.get(cell, 0) + v * w
    return sparse(x.dim, out)


def bracket(x: SparseIntMatrix, y: SparseIntMatrix) -> SparseIntMatrix:
    """Matrix commutator xy - yx over exact integers."""
    if x.dim != y.dim:
        raise ValueError("dimension mismatch")
    out = dict(mat_mul(x, y).entries)
    for cell, v in mat_mul(y, x).entries.items():
        out[cell] = out.get(cell, 0) - v
    return sparse(x.dim, out)


@dataclass(frozen=True)
class AdmissibleMask:
    dim: int
    cells: frozenset[Cell]

    def __contains__(self, cell: Cell) -> bool:
        return cell in self.cells


def _block_ranges(sizes: list[int]) -> list[tuple[int, int]]:
    ranges = []
    start = 1
    for size in sizes:
        ranges.append((start, start + size - 1))
        start += size
    return ranges


def _symmetric_blocks(spec: SeaweedSpec, parts: tuple[int, ...]) -> list[int]:
    middle = 2 * (spec.n - sum(parts))
    if spec.algebra is AlgebraType.B:
        middle += 1
    sizes = list(parts)
    if middle:
        sizes.append(middle)
    sizes.extend(reversed(parts))
    return sizes


def matrix_dim(spec: SeaweedSpec) -> int:
    if spec.algebra.full_compositions_required:
        return spec.n
    if spec.algebra is AlgebraType.B:
        return 2 * spec.n + 1
    return 2 * spec.n


def admissible_mask(spec: SeaweedSpec) -> AdmissibleMask:
    """Union of top-blocks-within-lower and bottom-blocks-within-upper."""
    require_valid(spec)
    dim = matrix_dim(spec)
    if spec.algebra.full_compositions_required:
        top_sizes, bottom_sizes = list(spec.top), list(spec.bottom)
    else:
        top_sizes = _symmetric_blocks(spec, spec.top)
        bottom_sizes = _symmetric_blocks(spec, spec.bottom)
    cells: set[Cell] = set()
    for lo, hi in _block_ranges(top_sizes):
        for i in range(lo, hi + 1):
            for j in range(lo, i + 1):
                cells.add((i, j))
    for lo, hi in _block_ranges(bottom_sizes):
        for i in range(lo, hi + 1):
            for j in range(i, hi + 1):
                cells.add((i, j))
    if not spec.algebra.full_compositions_required:
        mirrored = {(dim + 1 - j, dim + 1 - i) for i, j in cells}
        assert mirrored == cells, "B/C/D masks must be antidiagonal-symmetric"
    return AdmissibleMask(dim, frozenset(cells))


@dataclass
class LieData:
    """Basis plus structure constants.

    ``brackets`` maps (i, j) with i < j to the coefficient vector of
    [x_i, x_j] over the basis; the (j, i) entry is implied by
    antisymmetry.  ``basis`` is None for abstract (structure-constant)
    input.
    """

    dimension: int
    brackets: dict[tuple[int, int], dict[int, int | Fraction]]
    basis: list[SparseIntMatrix] | None = None

    def bracket_coeffs(self, i: int, j: int) -> dict[int, int | Fraction]:
        if i == j:
            return {}
        if i < j:
            return self.brackets.get((i, j), {})
        return {k: -v for k, v in self.brackets.get((j, i), {}).items()}


class ClosureError(RuntimeError):
    """A bracket of basis elements left the basis span (construction bug)."""


class JacobiError(ValueError):
    def __init__(self, triple, residual):
        super().__init__(f"Jacobi identity fails on basis triple {triple}: {residual}")
        self.triple = triple


def seaweed_basis(spec: SeaweedSpec) -> LieData:
    """Generate the seaweed's basis and structure constants.

    The ambient standard basis is filtered by the admissible mask (an
    element is kept only if every cell it touches is admissible), then
    all pairwise brackets are reduced over the basis; failure to reduce
    exactly is fatal since it would mean the span is not a subalgebra.
    """
    require_valid(spec)
    mask = admissible_mask(spec)
    algebra = spec.algebra
    if algebra is AlgebraType.GL:
        basis = [sparse(mask.dim, {cell: 1}) for cell in sorted(mask.cells)]
    elif algebra is AlgebraType.A:
        basis = _sl_basis(mask)
    else:
        basis = _symmetric_basis(algebra, mask)
    return _lie_data_from_basis(spec, mask, basis)


def _sl_basis(mask: AdmissibleMask) -> list[SparseIntMatrix]:
    n = mask.dim
    basis = [
        sparse(n, {(i, j): 1})
        for i, j in sorted(mask.cells)
        if i != j
    ]
    basis.extend(sparse(n, {(i, i): 1, (n, n): -1}) for i in range(1, n))
    return basis


def _symmetric_basis(algebra: AlgebraType, mask: AdmissibleMask) -> list[SparseIntMatrix]:
    dim = mask.dim
    half = dim // 2
    basis = []
    for cell in sorted(mask.cells):
        i, j = cell
        partner = (dim + 1 - j, dim + 1 - i)
        if cell == partner:
            # Cell on the antidiagonal: free for C off blocks, forced zero
            # under X = -antitranspose(X) for B and D.
            if algebra is AlgebraType.C:
                basis.append(sparse(dim, {cell: 1}))
            continue
        if cell > partner:
            continue  # handled from the partner's side
        if partner not in mask.cells:
            continue
        if algebra is AlgebraType.C:
            diagonal_block = (i <= half) == (j <= half)
            sign = -1 if diagonal_block else 1
        else:
            sign = -1
        basis.append(sparse(dim, {cell: 1, partner: sign}))
    return basis


def _lie_data_from_basis(spec, mask, basis) -> LieData:
    owner: dict[Cell, tuple[int, int]] = {}
    for idx, elt in enumerate(basis):
        for cell, value in elt.entries.items():
            # Diagonal cells are shared between sl diagonal differences and
            # between B/C/D paired diagonals; off-diagonal cells are unique.
            if cell[0] != cell[1]:
                owner[cell] = (idx, value)

    n = mask.dim
    algebra = spec.algebra
    diag_index: dict[int, tuple[int, int]] = {}
    for idx, elt in enumerate(basis):
        for (i, j), value in elt.entries.items():
            if i == j:
                diag_index.setdefault(i, (idx, value))

    def decompose(m: SparseIntMatrix) -> dict[int, int]:
        coeffs: dict[int, int] = {}
        residual = dict(m.entries)
        for cell in [c for c in residual if c[0] != c[1]]:
            value = residual.get(cell)
            if not value:
                continue
            if cell not in owner:
                raise ClosureError(f"{spec}: bracket hits inadmissible cell {cell}")
            idx, unit = owner[cell]
            q, r = divmod(value, unit)
            if r:
                raise ClosureError(f"{spec}: non-integral coefficient at {cell}")
            coeffs[idx] = coeffs.get(idx, 0) + q
            for c2, v2 in basis[idx].entries.items():
                residual[c2] = residual.get(c2, 0) - q * v2
        if any(v for c, v in residual.items() if c[0] != c[1]):
            raise ClosureError(f"{spec}: off-diagonal residue not spanned")
        diag = {i: v for (i, j), v in residual.items() if i == j and v}
        if diag:
            if algebra is AlgebraType.GL:
                order = sorted(diag)
            elif algebra is AlgebraType.A:
                order = [i for i in sorted(diag) if i != n]
            else:
                order = [i for i in sorted(diag) if i <= n // 2]
            for i in order:
                if i not in diag_index:
                    raise ClosureError(f"{spec}: diagonal cell ({i},{i}) not spanned")
                idx, unit = diag_index[i]
                q, r = divmod(diag.get(i, 0), unit)
                if r:
                    raise ClosureError(f"{spec}: non-integral diagonal coefficient")
                if q:
                    coeffs[idx] = coeffs.get(idx, 0) + q
                    for (c1, c2), v2 in basis[idx].entries.items():
                        diag[c1] = diag.get(c1, 0) - q * v2
            if any(diag.values()):
                raise ClosureError(f"{spec}: diagonal residue {diag} not spanned")
        return {k: v for k, v in coeffs.items() if v}

    brackets: dict[tuple[int, int], dict[int, int]] = {}
    m = len(basis)
    for i in range(m):
        for j in range(i + 1, m):
            coeffs = decompose(bracket(basis[i], basis[j]))
            if coeffs:
                brackets[(i, j)] = coeffs
    return LieData(dimension=m, brackets=brackets, basis=basis)


def lie_from_structure_constants(
    table: dict[tuple[int, int], dict[int, int | Fraction]],
    dimension: int | None = None,
) -> LieData:
    """Abstract Lie algebra from a bracket table, validating Jacobi.

    Keys are 0-based pairs; (j, i) entries, when present, must be the
    negations of their (i, j) mates.  The dimension defaults to one more
    than the largest index seen.
    """
    seen = [k for pair in table for k in pair]
    seen.extend(k for coeffs in table.values() for k in coeffs)
    dim = dimension if dimension is not None else (max(seen) + 1 if seen else 0)
    brackets: dict[tuple[int, int], dict[int, int | Fraction]] = {}
    for (i, j), coeffs in table.items():
        if not coeffs or i == j:
            if i == j and any(coeffs.values()):
                raise ValueError(f"[x_{i}, x_{i}] must vanish")
            continue
        key, vec = ((i, j), coeffs) if i < j else ((j, i), {k: -v for k, v in coeffs.items()})
        if key in brackets:
            if brackets[key] != {k: v for k, v in vec.items() if v}:
                raise ValueError(f"bracket table is not antisymmetric at {key}")
        else:
            brackets[key] = {k: v for k, v in vec.items() if v}
    lie = LieData(dimension=dim, brackets=brackets, basis=None)
    _check_jacobi(lie)
    return lie


def _check_jacobi(lie: LieData) -> None:
    m = lie.dimension

    def ad(i: int, vec: dict[int, int | Fraction]) -> dict[int, int | Fraction]:
        out: dict[int, int | Fraction] = {}
        for k, coeff in vec.items():
            for l, c in lie.bracket_coeffs(i, k).items():
                out[l] = out.get(l, 0) + coeff * c
        return {k: v for k, v in out.items() if v}

    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                residual: dict[int, int | Fraction] = {}
                for term in (
                    ad(i, lie.bracket_coeffs(j, k)),
                    ad(k, lie.bracket_coeffs(i, j)),
                    ad(j, lie.bracket_coeffs(k, i)),
                ):
                    for l, v in term.items():
                        residual[l] = residual.get(l, 0) + v
                residual = {l: v for l, v in residual.items() if v}
                if residual:
                    raise JacobiError((i, j, k), residual)


def parse_structure_constants(text: str) -> dict[tuple[int, int], dict[int, Fraction]]:
    """Parse the bracket-table format: one line ``i j -> k:coeff[,k:coeff...]``.

    Indices are 1-based in the text (matching written bases e_1, e_2, ...)
    and 0-based in the returned table; coefficients are integers or p/q.
    Blank lines and '#' comments are ignored.
    """
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            head, tail = line.split("->")
            i_text, j_text = head.split()
            coeffs: dict[int, Fraction] = {}
            for piece in tail.strip().split(","):
                k_text, coeff_text = piece.split(":")
                coeffs[int(k_text) - 1] = Fraction(coeff_text.strip())
            table[(int(i_text) - 1, int(j_text) - 1)] = coeffs
        except (ValueError, IndexError) as exc:
            raise ValueError(f"bad structure-constant line {lineno}: {raw!r}") from exc
    return table
