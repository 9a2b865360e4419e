"""Meander graphs of seaweeds: construction, tails, component counts.

The meander of a seaweed places vertices 1..n on a line and, inside
each block of the top (resp. bottom) composition, joins the outermost
pair, then the next pair inward, and so on.  Every vertex therefore has
at most one top and one bottom edge, so connected components are simple
paths (isolated vertices count as degenerate paths) and simple cycles.

For B/C/D the compositions are partial: no edge reaches past the end of
its composition, and the vertices strictly between the two composition
ends form the *tail*.  Type D adjusts the tail by the parity rules of
configurations I/II/III.
"""

from __future__ import annotations

from dataclasses import dataclass

from .specs import AlgebraType, SeaweedSpec, require_valid

Edge = tuple[int, int]

TAIL_NONE = "NONE"
TAIL_I = "I"
TAIL_II = "II"
TAIL_III = "III"


@dataclass(frozen=True)
class Meander:
    n_vertices: int
    top_edges: frozenset[Edge]
    bottom_edges: frozenset[Edge]
    tail: tuple[int, ...]
    tail_config: str

    def degree(self, v: int) -> int:
        return sum(1 for e in self.top_edges if v in e) + sum(
            1 for e in self.bottom_edges if v in e
        )


@dataclass(frozen=True)
class Component:
    vertices: tuple[int, ...]
    kind: str  # "cycle" or "path"
    tail_count: int


@dataclass(frozen=True)
class ComponentSummary:
    """Component counts feeding the index formulas.

    ``tailed_paths`` counts the path components containing zero or two
    tail vertices; with an empty tail it equals ``paths``, which is why
    the B/C/D index formula restricts to the GL one.
    """

    cycles: int
    paths: int
    tailed_paths: int

    @property
    def total(self) -> int:
        return self.cycles + self.paths


def block_edges(parts: tuple[int, ...]) -> set[Edge]:
    """Nested arcs inside each block: a size-k block contributes k//2 edges."""
    edges: set[Edge] = set()
    start = 1
    for part in parts:
        end = start + part - 1
        lo, hi = start, end
        while lo < hi:
            edges.add((lo, hi))
            lo += 1
            hi -= 1
        start = end + 1
    return edges


def tail(spec: SeaweedSpec) -> tuple[tuple[int, ...], str]:
    """Tail vertex set and type-D configuration for a valid spec."""
    require_valid(spec)
    if spec.algebra.full_compositions_required:
        return (), TAIL_NONE
    r, s = sum(spec.top), sum(spec.bottom)
    tail_c = tuple(range(s + 1, r + 1))
    if spec.algebra is not AlgebraType.D:
        return tail_c, TAIL_NONE
    t = r - s
    if t % 2 == 0:
        return tail_c, TAIL_I
    if r < spec.n:
        return tail_c + (r + 1,), TAIL_II
    return tail_c[:-1], TAIL_III


def build_meander(spec: SeaweedSpec) -> Meander:
    require_valid(spec)
    tail_set, config = tail(spec)
    meander = Meander(
        n_vertices=spec.n,
        top_edges=frozenset(block_edges(spec.top)),
        bottom_edges=frozenset(block_edges(spec.bottom)),
        tail=tail_set,
        tail_config=config,
    )
    for v in tail_set:
        # Tail vertices sit past the shorter composition, so they carry at
        # most one arc; tail_count <= 2 per component relies on this.
        assert meander.degree(v) <= 1, f"tail vertex {v} has degree > 1 in {spec}"
    return meander


def components(meander: Meander) -> tuple[ComponentSummary, list[Component]]:
    """Decompose into paths and cycles, deterministically ordered.

    Paths are traversed from their lower-numbered endpoint, cycles from
    their minimum vertex; the returned list is sorted by first vertex.
    """
    top: dict[int, int] = {}
    bottom: dict[int, int] = {}
    for a, b in meander.top_edges:
        top[a], top[b] = b, a
    for a, b in meander.bottom_edges:
        bottom[a], bottom[b] = b, a

    tail_set = set(meander.tail)
    visited: set[int] = set()
    comps: list[Component] = []

    for v in range(1, meander.n_vertices + 1):
        if v in visited:
            continue
        block = _gather(v, top, bottom)
        visited.update(block)
        endpoints = sorted(u for u in block if ((u in top) + (u in bottom)) <= 1)
        if endpoints:
            order = _walk(endpoints[0], top, bottom)
            kind = "path"
        else:
            order = _walk(min(block), top, bottom, cycle=True)
            kind = "cycle"
        assert set(order) == block
        tail_count = sum(1 for u in order if u in tail_set)
        if kind == "cycle":
            assert tail_count == 0
        assert tail_count <= 2
        comps.append(Component(tuple(order), kind, tail_count))

    comps.sort(key=lambda c: c.vertices[0])
    cycles = sum(1 for c in comps if c.kind == "cycle")
    paths = len(comps) - cycles
    tailed = sum(1 for c in comps if c.kind == "path" and c.tail_count in (0, 2))
    return ComponentSummary(cycles, paths, tailed), comps


def _gather(v: int, top: dict[int, int], bottom: dict[int, int]) -> set[int]:
    block = {v}
    frontier = [v]
    while frontier:
        u = frontier.pop()
        for partner in (top.get(u), bottom.get(u)):
            if partner is not None and partner not in block:
                block.add(partner)
                frontier.append(partner)
    return block


def _walk(start: int, top: dict[int, int], bottom: dict[int, int], cycle: bool = False) -> list[int]:
    """Alternating top/bottom traversal from ``start``.

    Path endpoints have at most one edge, so the first step is forced;
    cycle vertices have both, and the walk starts along the top edge.
    """
    order = [start]
    if not cycle and start not in top and start not in bottom:
        return order
    use_top = start in top
    v = start
    while True:
        partner = (top if use_top else bottom)[v]
        if cycle and partner == start:
            return order
        order.append(partner)
        v = partner
        use_top = not use_top
        if not cycle and v not in (top if use_top else bottom):
            return order
