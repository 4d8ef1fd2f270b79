"""Extensive monotone set operators, operator duality, and IE classification.

An operator maps subsets of a finite ground set to subsets, must contain its
argument (extensive) and preserve inclusion (monotone).  Explicit tables are
verified exhaustively at construction; matroid-backed and dual-constructed
operators evaluate lazily with memoization so larger linear backends stay
usable, and their laws are exercised by the verification suites instead.
"""

from __future__ import annotations

from itertools import product
from typing import Callable, Iterator, Sequence

from .errors import ElementOutOfRange, GroundTooLarge, InvalidOperator, ParseError
from .matroids import Matroid, bits, check_axioms, submasks

CHECK_LIMIT = 16


def span(m: Matroid, x: int) -> int:
    """Matroid closure: x plus every element on a circuit inside x + element."""
    if x & ~m.live:
        raise ElementOutOfRange("set leaves the ground set")
    out = x
    for o in m.circuits():
        d = o & ~x
        # o sits inside x + e exactly when o has a single element e outside x
        if d and d.bit_count() == 1:
            out |= d
    return out


class SpaceOperator:
    """A monotone extensive operator on the subsets of {0..n-1}."""

    def __init__(self, ground_size: int, eval_fn: Callable[[int], int], *, _verified: bool = False):
        self.ground_size = ground_size
        self.full = (1 << ground_size) - 1
        self._eval = eval_fn
        self._memo: dict[int, int] = {}
        if not _verified and ground_size <= CHECK_LIMIT:
            self.validate()

    def __call__(self, x: int) -> int:
        if x & ~self.full:
            raise ElementOutOfRange("set leaves the ground set")
        got = self._memo.get(x)
        if got is None:
            got = self._memo[x] = self._eval(x)
            if x & ~got:
                raise InvalidOperator(f"operator not extensive at mask {x}")
        return got

    @classmethod
    def from_table(cls, ground_size: int, table: Sequence[int]) -> "SpaceOperator":
        """Operator backed by a full 2^n table; verified exhaustively."""
        if ground_size > CHECK_LIMIT:
            raise GroundTooLarge(f"table operator limited to {CHECK_LIMIT} elements")
        if len(table) != 1 << ground_size:
            raise InvalidOperator(
                f"table has {len(table)} entries, expected {1 << ground_size}"
            )
        tab = tuple(table)
        op = cls(ground_size, lambda x: tab[x], _verified=True)
        op.validate()
        return op

    @classmethod
    def from_matroid(cls, m: Matroid) -> "SpaceOperator":
        """The closure operator of a matroid, evaluated lazily."""
        if m.live != m.ground.full_mask:
            raise ValueError("closure operators require a full ground set")
        return cls(m.ground.size, lambda x: span(m, x), _verified=True)

    def dual(self) -> "SpaceOperator":
        """The dual operator: X plus every x outside S(ground - (X + x))."""

        def ev(x: int) -> int:
            out = x
            for e in range(self.ground_size):
                eb = 1 << e
                if not eb & self(self.full & ~(x | eb)):
                    out |= eb
            return out

        return SpaceOperator(self.ground_size, ev, _verified=True)

    def table(self) -> tuple[int, ...]:
        if self.ground_size > CHECK_LIMIT:
            raise GroundTooLarge("table materialization capped at 2^16 entries")
        return tuple(self(x) for x in range(self.full + 1))

    def validate(self) -> None:
        """Exhaustive extensivity and monotonicity check (2^n evaluations)."""
        if self.ground_size > CHECK_LIMIT:
            raise GroundTooLarge(f"exhaustive check limited to {CHECK_LIMIT} elements")
        for x in range(self.full + 1):
            sx = self(x)
            if x & ~sx:
                raise InvalidOperator(f"not extensive at mask {x}")
            # single-bit steps suffice for monotonicity by transitivity
            for e in bits(self.full & ~x):
                if sx & ~self(x | (1 << e)):
                    raise InvalidOperator(f"not monotone between masks {x} and {x | (1 << e)}")


def operators_equal(a: SpaceOperator, b: SpaceOperator) -> bool:
    """Extensional equality over every subset."""
    if a.ground_size != b.ground_size:
        return False
    return all(a(x) == b(x) for x in range(a.full + 1))


def dual_operator(s: SpaceOperator) -> SpaceOperator:
    return s.dual()


def is_idempotent(s: SpaceOperator) -> bool:
    """Whether S(S(X)) == S(X) for every subset (exhaustive)."""
    if s.ground_size > CHECK_LIMIT:
        raise GroundTooLarge(f"idempotence check limited to {CHECK_LIMIT} elements")
    return all(s(s(x)) == s(x) for x in range(s.full + 1))


def is_exchange(s: SpaceOperator) -> bool:
    return is_idempotent(s.dual())


def is_ie(s: SpaceOperator) -> bool:
    return is_idempotent(s) and is_exchange(s)


# ---------------------------------------------------------------------------
# Search for an IE-operator that is no matroid closure
# ---------------------------------------------------------------------------

def matroid_closure_tables(ground_size: int) -> set[tuple[int, ...]]:
    """Closure tables of every matroid on the given ground set, obtained by
    enumerating all explicit independence families and keeping axiom passers."""
    full = (1 << ground_size) - 1
    tables: set[tuple[int, ...]] = set()
    nonempty = [s for s in range(1, full + 1)]
    for pick in range(1 << len(nonempty)):
        family = [0] + [s for i, s in enumerate(nonempty) if pick >> i & 1]
        if not check_axioms(ground_size, family).all_pass:
            continue
        fam = set(family)
        circuits = _family_circuits(full, fam)
        table = []
        for x in range(full + 1):
            out = x
            for o in circuits:
                d = o & ~x
                if d and d.bit_count() == 1:
                    out |= d
            table.append(out)
        tables.add(tuple(table))
    return tables


def _family_circuits(full: int, fam: set[int]) -> list[int]:
    found: list[int] = []
    for s in sorted(range(full + 1), key=lambda s: (s.bit_count(), s)):
        if s == 0 or any(c & ~s == 0 for c in found):
            continue
        if s not in fam:
            found.append(s)
    return sorted(found)


def extensive_monotone_tables(ground_size: int) -> Iterator[tuple[int, ...]]:
    """All extensive monotone tables on 2^n subsets, in a fixed order."""
    full = (1 << ground_size) - 1
    choices = []
    for x in range(full + 1):
        choices.append([x | extra for extra in submasks(full & ~x)])
    for table in product(*choices):
        ok = True
        for x in range(full + 1):
            for e in bits(full & ~x):
                if table[x] & ~table[x | (1 << e)]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield table


def find_non_matroidal_ie(ground_size: int = 3) -> SpaceOperator:
    """An IE-operator that equals the closure of no matroid on this ground.

    Exhausts all extensive monotone tables and all matroid closures; the
    ground size must stay tiny for that to be feasible.  Raises RuntimeError
    when the search comes up empty, reporting the exact counts: exhaustive
    enumeration shows that on grounds of size <= 4 every IE-operator is a
    matroid closure, so at that scale this search has no witness to find.
    """
    if ground_size > 4:
        raise GroundTooLarge("exhaustive IE search is only feasible for tiny grounds")
    matroidal = matroid_closure_tables(ground_size)
    ie_count = 0
    for table in extensive_monotone_tables(ground_size):
        op = SpaceOperator.from_table(ground_size, table)
        if is_ie(op):
            ie_count += 1
            if table not in matroidal:
                return op
    raise RuntimeError(
        f"all {ie_count} IE-operators on {ground_size} elements are matroid "
        f"closures ({len(matroidal)} matroids)"
    )


# ---------------------------------------------------------------------------
# Operator table text format
# ---------------------------------------------------------------------------

def parse_operator_table(text: str) -> SpaceOperator:
    """Parse ``ground <n>`` followed by 2^n ``map <in> <out>`` lines."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ParseError("empty operator file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "ground":
        raise ParseError(f"expected 'ground <n>' on line 1, got {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError:
        raise ParseError(f"bad ground size {head[1]!r}") from None
    if not 0 <= n <= CHECK_LIMIT:
        raise ParseError(f"operator ground size {n} outside 0..{CHECK_LIMIT}")
    size = 1 << n
    table: list[int | None] = [None] * size
    maps = lines[1:]
    if len(maps) != size:
        raise ParseError(f"expected {size} map lines, found {len(maps)}")
    for ln in maps:
        toks = ln.split()
        if len(toks) != 3 or toks[0] != "map":
            raise ParseError(f"expected 'map <in> <out>', got {ln!r}")
        try:
            src, dst = int(toks[1]), int(toks[2])
        except ValueError:
            raise ParseError(f"bad masks in {ln!r}") from None
        if not 0 <= src < size or not 0 <= dst < size:
            raise ParseError(f"mask out of range in {ln!r}")
        if table[src] is not None:
            raise ParseError(f"duplicate map entry for mask {src}")
        table[src] = dst
    try:
        return SpaceOperator.from_table(n, table)  # type: ignore[arg-type]
    except InvalidOperator as exc:
        raise ParseError(str(exc)) from None


def format_operator_table(s: SpaceOperator) -> str:
    out = [f"ground {s.ground_size}"]
    for x, y in enumerate(s.table()):
        out.append(f"map {x} {y}")
    return "\n".join(out) + "\n"
