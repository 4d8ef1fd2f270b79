"""Finite multigraphs, their cycle and bond matroids, and signed incidence.

Loops and parallel edges are permitted: a loop is a one-edge cycle and a
parallel pair a two-edge cycle.  The bond matroid is constructed as the dual
of the cycle matroid and cross-checked against a direct minimal-cut
enumeration by the verification suites.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GroundTooLarge, ParseError
from .linalg import FieldSpec, Matrix
from .matroids import (
    DualMatroid,
    GroundSet,
    Matroid,
    bits,
    oracle_difference,
    submasks,
)
from .representation import VectorFamily, vector_matroid


@dataclass(frozen=True)
class MultiGraph:
    """Multigraph with edges indexed 0..m-1; endpoints may coincide."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("vertex count must be nonnegative")
        for u, v in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u},{v}) leaves the vertex range")

    @property
    def edge_count(self) -> int:
        return len(self.edges)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, v: int) -> int:
        p = self.parent
        while p[v] != v:
            p[v] = p[p[v]]
            v = p[v]
        return v

    def union(self, u: int, v: int) -> bool:
        """Merge the classes of u and v; False if they already coincide."""
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            return False
        self.parent[ru] = rv
        return True


class GraphicMatroid(Matroid):
    """Cycle matroid: an edge set is independent iff it contains no cycle."""

    def __init__(self, graph: MultiGraph):
        super().__init__(GroundSet(graph.edge_count))
        self.graph = graph

    def _indep(self, x: int) -> bool:
        uf = _UnionFind(self.graph.vertex_count)
        for e in bits(x):
            u, v = self.graph.edges[e]
            if u == v or not uf.union(u, v):
                return False
        return True


def cycle_matroid(graph: MultiGraph) -> GraphicMatroid:
    return GraphicMatroid(graph)


def bond_matroid(graph: MultiGraph) -> DualMatroid:
    """Dual of the cycle matroid; its circuits are the minimal edge cuts."""
    return cycle_matroid(graph).dual()


def component_count(graph: MultiGraph, edge_mask: int) -> int:
    uf = _UnionFind(graph.vertex_count)
    n = graph.vertex_count
    for e in bits(edge_mask):
        u, v = graph.edges[e]
        if u != v and uf.union(u, v):
            n -= 1
    return n


def minimal_edge_cuts(graph: MultiGraph) -> list[int]:
    """Minimal edge sets whose removal increases the component count,
    enumerated directly (independent of any matroid machinery)."""
    full = (1 << graph.edge_count) - 1
    base = component_count(graph, full)
    found: list[int] = []
    for s in sorted(submasks(full), key=lambda t: (t.bit_count(), t)):
        if s == 0 or any(c & ~s == 0 for c in found):
            continue
        if component_count(graph, full & ~s) > base:
            found.append(s)
    return sorted(found)


def signed_incidence(graph: MultiGraph, field: FieldSpec) -> VectorFamily:
    """Vertex-by-edge incidence with +1 at the lower endpoint and -1 at the
    higher; loops give zero columns.  Over GF(2) the signs collapse."""
    rows = graph.vertex_count
    cols = graph.edge_count
    grid = [[field.zero()] * cols for _ in range(rows)]
    for e, (u, v) in enumerate(graph.edges):
        if u == v:
            continue
        lo, hi = min(u, v), max(u, v)
        grid[lo][e] = field.coerce(1)
        grid[hi][e] = field.coerce(-1)
    matrix = Matrix(field, rows, cols, tuple(tuple(r) for r in grid))
    return VectorFamily(matrix, GroundSet(cols))


def verify_graphic_representable(graph: MultiGraph, field: FieldSpec) -> tuple[bool, int | None]:
    """Exhaustively compare the cycle matroid with the vector matroid of the
    signed incidence family; returns (identical, first differing subset)."""
    if graph.edge_count > 16:
        raise GroundTooLarge("representability sweep capped at 16 edges")
    diff = oracle_difference(
        cycle_matroid(graph), vector_matroid(signed_incidence(graph, field))
    )
    return diff is None, diff


# ---------------------------------------------------------------------------
# Graph text format
# ---------------------------------------------------------------------------

def parse_graph(text: str) -> MultiGraph:
    """Parse ``vertices <n>`` followed by ``edge <id> <u> <v>`` lines; edge
    ids must be distinct and contiguous from 0."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ParseError("empty graph file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "vertices":
        raise ParseError(f"expected 'vertices <n>' on line 1, got {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError:
        raise ParseError(f"bad vertex count {head[1]!r}") from None
    seen: dict[int, tuple[int, int]] = {}
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 4 or toks[0] != "edge":
            raise ParseError(f"expected 'edge <id> <u> <v>', got {ln!r}")
        try:
            eid, u, v = int(toks[1]), int(toks[2]), int(toks[3])
        except ValueError:
            raise ParseError(f"bad edge line {ln!r}") from None
        if eid in seen:
            raise ParseError(f"duplicate edge id {eid}")
        seen[eid] = (u, v)
    if sorted(seen) != list(range(len(seen))):
        raise ParseError("edge ids must be contiguous from 0")
    edges = tuple(seen[i] for i in range(len(seen)))
    try:
        return MultiGraph(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_graph(graph: MultiGraph) -> str:
    out = [f"vertices {graph.vertex_count}"]
    for i, (u, v) in enumerate(graph.edges):
        out.append(f"edge {i} {u} {v}")
    return "\n".join(out) + "\n"
