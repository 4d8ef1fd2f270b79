"""Deterministic corpus generation backed by a pinned 64-bit LCG.

The generator contract is part of the external interface so corpora are
reproducible across implementations: state advances as
``state = (state * 6364136223846793005 + 1442695040888963407) mod 2^64``
starting from the seed, and each draw returns the top 32 bits of the new
state.  Every stream below documents exactly how it consumes draws.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .graphs import MultiGraph
from .linalg import GF2, GF3, Matrix, Q
from .matroids import uniform_matroid
from .representation import VectorFamily

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
_MASK64 = (1 << 64) - 1

GENERATORS = (
    "explicit-uniform",
    "random-matrix-gf2",
    "random-matrix-gf3",
    "random-matrix-q",
    "random-graph",
)

_MATRIX_FIELDS = {
    "random-matrix-gf2": GF2,
    "random-matrix-gf3": GF3,
    "random-matrix-q": Q,
}

_MATRIX_PREFIX = {
    "random-matrix-gf2": "mgf2",
    "random-matrix-gf3": "mgf3",
    "random-matrix-q": "mq",
}

# graphs every corpus starts with (when they fit the ground cap): a triangle,
# a tree, and a gadget carrying one loop and one parallel pair
_FIXED_GRAPHS = (
    MultiGraph(3, ((0, 1), (1, 2), (0, 2))),
    MultiGraph(3, ((0, 1), (1, 2))),
    MultiGraph(3, ((0, 0), (0, 1), (0, 1), (1, 2))),
)


class Lcg:
    """The pinned linear congruential generator; draws are 32-bit."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def draw(self) -> int:
        self.state = (self.state * LCG_MULTIPLIER + LCG_INCREMENT) & _MASK64
        return self.state >> 32

    def below(self, bound: int) -> int:
        return self.draw() % bound


@dataclass(frozen=True)
class CorpusSpec:
    """What to generate; generation is a pure function of this value."""

    seed: int
    count: int
    max_ground: int = 8
    generators: tuple[str, ...] = GENERATORS

    def __post_init__(self) -> None:
        if self.count < 1:
            raise ValueError("count must be at least 1")
        if not 1 <= self.max_ground <= 10:
            raise ValueError("max_ground must be between 1 and 10")
        unknown = [g for g in self.generators if g not in GENERATORS]
        if unknown:
            raise ValueError(f"unknown generators: {', '.join(unknown)}")
        if not self.generators:
            raise ValueError("at least one generator is required")
        # canonical order, duplicates dropped
        object.__setattr__(
            self, "generators",
            tuple(g for g in GENERATORS if g in self.generators),
        )


@dataclass(frozen=True)
class Instance:
    instance_id: str
    kind: str  # "matroid" | "family" | "graph"
    value: object
    meta: tuple = ()


def _uniform_stream(spec: CorpusSpec) -> Iterator[Instance]:
    # all U_{r,n} for n up to the cap, smallest ground first; the empty
    # matroid U_{0,0} closes the stream
    for n in range(1, spec.max_ground + 1):
        for r in range(n + 1):
            yield Instance(f"uniform-r{r}-n{n}", "matroid", uniform_matroid(r, n), (r, n))
    yield Instance("uniform-r0-n0", "matroid", uniform_matroid(0, 0), (0, 0))


def _matrix_stream(name: str, spec: CorpusSpec) -> Iterator[Instance]:
    # instance i is cols x rows with cols = max_ground - (i mod max_ground)
    # and rows = ceil(cols / 2); entries are drawn row-major, one draw per
    # GF entry (reduced mod p), two draws per rational entry
    # (numerator = draw mod 11 - 5, denominator = draw mod 5 + 1)
    field = _MATRIX_FIELDS[name]
    rng = Lcg(spec.seed)
    i = 0
    while True:
        cols = spec.max_ground - (i % spec.max_ground)
        rows = (cols + 1) // 2
        grid = []
        for _ in range(rows):
            row = []
            for _ in range(cols):
                if field.is_prime_field:
                    row.append(rng.draw() % field.p)
                else:
                    num = rng.draw() % 11 - 5
                    den = rng.draw() % 5 + 1
                    row.append(Fraction(num, den))
            grid.append(tuple(row))
        matrix = Matrix(field, rows, cols, tuple(grid))
        yield Instance(
            f"{_MATRIX_PREFIX[name]}-{i:03d}", "family",
            VectorFamily.from_matrix(matrix),
        )
        i += 1


def _graph_stream(spec: CorpusSpec) -> Iterator[Instance]:
    # fixed gadgets that fit the ground cap come first, then random graphs:
    # vertices = 2 + draw mod 3, edges = 1 + draw mod cap, endpoints drawn
    # pairwise (loops and parallel edges arise naturally)
    cap = min(8, spec.max_ground)
    rng = Lcg(spec.seed)
    i = 0
    for g in _FIXED_GRAPHS:
        if g.edge_count <= cap:
            yield Instance(f"graph-{i:03d}", "graph", g)
            i += 1
    while True:
        nv = 2 + rng.below(3)
        ne = 1 + rng.below(cap)
        edges = tuple((rng.below(nv), rng.below(nv)) for _ in range(ne))
        yield Instance(f"graph-{i:03d}", "graph", MultiGraph(nv, edges))
        i += 1


def _make_stream(name: str, spec: CorpusSpec) -> Iterator[Instance]:
    if name == "explicit-uniform":
        return _uniform_stream(spec)
    if name in _MATRIX_FIELDS:
        return _matrix_stream(name, spec)
    if name == "random-graph":
        return _graph_stream(spec)
    raise ValueError(f"unknown generator {name}")


def generate_corpus(spec: CorpusSpec) -> list[Instance]:
    """Round-robin over the selected generators until ``count`` instances.

    Finite generators (the uniform family) simply drop out when exhausted;
    the result is deterministic in (seed, spec).
    """
    streams = [_make_stream(name, spec) for name in spec.generators]
    out: list[Instance] = []
    while streams and len(out) < spec.count:
        alive = []
        for stream in streams:
            if len(out) == spec.count:
                alive.append(stream)
                continue
            try:
                out.append(next(stream))
            except StopIteration:
                continue
            alive.append(stream)
        streams = alive
    return out
