"""Matroid kernel: independence oracles, axioms, circuits, bases, duality, minors.

Ground sets hold at most 32 elements identified with indices 0..n-1, and every
subset is an n-bit mask, so full power-set sweeps stay cheap and deterministic.
All set lists are emitted in ascending mask order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from . import linalg
from .errors import (
    ElementInBase,
    ElementNotInBase,
    ElementOutOfRange,
    ElementsNotInCircuit,
    NotABase,
    NotACircuit,
    NotAMatroid,
    NotAMinorCircuit,
    NotAPartition,
    ParseError,
)

MAX_GROUND = 32


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits, ascending."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def submasks(mask: int) -> list[int]:
    """All submasks of ``mask`` in ascending numeric order."""
    out = []
    s = mask
    while True:
        out.append(s)
        if s == 0:
            break
        s = (s - 1) & mask
    out.reverse()
    return out


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def format_set(mask: int) -> str:
    """Render a bitmask as comma-separated indices, ``-`` for the empty set."""
    if mask == 0:
        return "-"
    return ",".join(str(i) for i in bits(mask))


def parse_set(text: str) -> int:
    text = text.strip()
    if text == "-" or text == "":
        return 0
    try:
        return mask_of(int(tok) for tok in text.split(","))
    except ValueError:
        raise ParseError(f"bad element list {text!r}") from None


@dataclass(frozen=True)
class GroundSet:
    """Finite ground set; elements are the indices 0..size-1."""

    size: int
    names: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if not 0 <= self.size <= MAX_GROUND:
            raise ValueError(f"ground size {self.size} outside 0..{MAX_GROUND}")
        if self.names is not None:
            if len(self.names) != self.size:
                raise ValueError("name table length does not match ground size")
            if len(set(self.names)) != self.size:
                raise ValueError("element names must be distinct")

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1


def _as_ground(ground: GroundSet | int) -> GroundSet:
    return ground if isinstance(ground, GroundSet) else GroundSet(int(ground))


# ---------------------------------------------------------------------------
# Axioms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AxiomCheck:
    passed: bool
    witness: tuple[int, ...] | None = None


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of (I1)(I2)(I3)(IM) with a re-checkable witness per failure."""

    i1: AxiomCheck
    i2: AxiomCheck
    i3: AxiomCheck
    im: AxiomCheck

    @property
    def all_pass(self) -> bool:
        return self.i1.passed and self.i2.passed and self.i3.passed and self.im.passed

    def failed(self) -> list[str]:
        return [name for name in ("i1", "i2", "i3", "im") if not getattr(self, name).passed]


def check_axioms(ground: GroundSet | int, family: Iterable[int]) -> AxiomReport:
    """Check the independence axioms for an explicit family of bitmasks.

    i1: the empty set belongs to the family.
    i2: the family is closed under taking subsets.
    i3: every non-maximal member can be extended by an element of every
        maximal member.
    im: every interval {I' in family : I subset I' subset X} has a maximal
        element, found by direct search.  On a finite ground set this always
        succeeds, but the search is executed rather than assumed.
    """
    g = _as_ground(ground)
    full = g.full_mask
    fam = sorted(set(family))
    for s in fam:
        if s & ~full:
            raise ElementOutOfRange(
                f"set {format_set(s)} exceeds ground of size {g.size}"
            )
    fam_set = set(fam)

    i1 = AxiomCheck(0 in fam_set, None if 0 in fam_set else (0,))

    i2 = AxiomCheck(True)
    for s in fam:
        bad = next((s ^ (1 << e) for e in bits(s) if s ^ (1 << e) not in fam_set), None)
        if bad is not None:
            i2 = AxiomCheck(False, (s, bad))
            break

    # maximal members of the family under inclusion (no strict superset present)
    maximal = [s for s in fam if not any(t != s and s & ~t == 0 for t in fam)]
    max_set = set(maximal)

    i3 = AxiomCheck(True)
    for small in fam:
        if small in max_set:
            continue
        for big in maximal:
            if not any(small | (1 << e) in fam_set for e in bits(big & ~small)):
                i3 = AxiomCheck(False, (small, big))
                break
        if not i3.passed:
            break

    im = AxiomCheck(True)
    for small in fam:
        # members above `small`, largest first: the first one inside X is a
        # maximum-cardinality (hence maximal) element of the interval
        supers = sorted(
            (t for t in fam if t & small == small),
            key=lambda t: (-t.bit_count(), t),
        )
        for extra in submasks(full & ~small):
            x = small | extra
            for t in supers:
                if t & ~x == 0:
                    break
            else:
                im = AxiomCheck(False, (small, x))
                break
        if not im.passed:
            break

    return AxiomReport(i1, i2, i3, im)


# ---------------------------------------------------------------------------
# Matroids
# ---------------------------------------------------------------------------

class Position(NamedTuple):
    kind: str  # "circuit" or "cocircuit"
    witness: int


class Tameness(NamedTuple):
    max_intersection: int
    all_finite: bool


class Matroid:
    """A finite matroid presented by an independence oracle.

    ``ground`` fixes the ambient index space; ``live`` is the mask of elements
    actually present (a strict subset only for minors, which keep the parent's
    element labels).  Values are immutable after construction and the oracle
    is memoized.
    """

    def __init__(self, ground: GroundSet | int, live: int | None = None):
        self.ground = _as_ground(ground)
        self.live = self.ground.full_mask if live is None else live
        self._memo: dict[int, bool] = {}
        self._circuit_list: list[int] | None = None
        self._base_list: list[int] | None = None
        self._dual_obj: "DualMatroid" | None = None
        self._rank_val: int | None = None

    # -- backend hook -------------------------------------------------------

    def _indep(self, x: int) -> bool:
        raise NotImplementedError

    # -- oracle and derived data --------------------------------------------

    def is_independent(self, x: int) -> bool:
        if x & ~self.live:
            raise ElementOutOfRange(f"set {format_set(x)} leaves the ground set")
        got = self._memo.get(x)
        if got is None:
            got = self._memo[x] = self._indep(x)
        return got

    def rank_of(self, x: int) -> int:
        # greedy over ascending indices; exact because this is a matroid
        acc = 0
        for e in bits(x):
            if self.is_independent(acc | (1 << e)):
                acc |= 1 << e
        return acc.bit_count()

    def rank(self) -> int:
        if self._rank_val is None:
            self._rank_val = self.rank_of(self.live)
        return self._rank_val

    def oracle_table(self) -> dict[int, bool]:
        """Independence of every subset of the live ground, keyed by mask."""
        return {s: self.is_independent(s) for s in submasks(self.live)}

    def independent_sets(self) -> list[int]:
        return [s for s in submasks(self.live) if self.is_independent(s)]

    def circuits(self) -> list[int]:
        """Minimal dependent sets, each once, in ascending mask order.

        Runs over subsets in ascending cardinality, skipping any set that
        already contains a found circuit, so each layer exits early.
        """
        if self._circuit_list is None:
            found: list[int] = []
            layer = sorted(submasks(self.live), key=lambda s: (s.bit_count(), s))
            for s in layer:
                if s == 0 or any(c & ~s == 0 for c in found):
                    continue
                if not self.is_independent(s):
                    found.append(s)
            self._circuit_list = sorted(found)
        return list(self._circuit_list)

    def is_circuit(self, o: int) -> bool:
        if o & ~self.live or o == 0:
            return False
        if self.is_independent(o):
            return False
        return all(self.is_independent(o ^ (1 << e)) for e in bits(o))

    def bases(self) -> list[int]:
        """Maximal independent sets, ascending; asserted equicardinal."""
        if self._base_list is None:
            out = []
            for s in submasks(self.live):
                if self.is_independent(s) and not any(
                    self.is_independent(s | (1 << e)) for e in bits(self.live & ~s)
                ):
                    out.append(s)
            if not out:
                raise AssertionError("a matroid always has a base")
            k = out[0].bit_count()
            if any(b.bit_count() != k for b in out):
                raise AssertionError("bases of unequal cardinality")
            self._base_list = out
        return list(self._base_list)

    def is_base(self, b: int) -> bool:
        if b & ~self.live:
            return False
        return self.is_independent(b) and b.bit_count() == self.rank()

    # -- duality and minors ---------------------------------------------------

    def dual(self) -> "DualMatroid":
        if self._dual_obj is None:
            self._dual_obj = DualMatroid(self)
        return self._dual_obj

    def delete(self, deleted: int) -> "MinorMatroid":
        return MinorMatroid(self, 0, deleted)

    def contract(self, contracted: int) -> "MinorMatroid":
        return MinorMatroid(self, contracted, 0)

    def minor(self, contracted: int, deleted: int) -> "MinorMatroid":
        return MinorMatroid(self, contracted, deleted)

    def greedy_base_within(self, region: int, descending: bool = False) -> int:
        """Greedy base of the restriction to ``region`` (ascending indices
        unless ``descending``)."""
        order = sorted(bits(region), reverse=descending)
        acc = 0
        for e in order:
            if self.is_independent(acc | (1 << e)):
                acc |= 1 << e
        return acc

    # -- constructive lemma operations ---------------------------------------

    def fundamental_circuit(self, base: int, e: int) -> int:
        """The unique circuit contained in base + e and containing e."""
        self._require_base(base)
        eb = 1 << e
        if eb & ~self.live:
            raise ElementOutOfRange(f"element {e} outside the ground set")
        if eb & base:
            raise ElementInBase(f"element {e} lies in the base")
        x = base | eb
        # x holds exactly one circuit o, and x minus y is dependent iff y is
        # outside o; so o collects the y whose removal restores independence
        o = 0
        for y in bits(x):
            if self.is_independent(x ^ (1 << y)):
                o |= 1 << y
        return o

    def fundamental_cocircuit(self, base: int, f: int) -> int:
        """The unique cocircuit inside (ground - base) + f containing f."""
        self._require_base(base)
        fb = 1 << f
        if fb & ~self.live:
            raise ElementOutOfRange(f"element {f} outside the ground set")
        if not fb & base:
            raise ElementNotInBase(f"element {f} not in the base")
        return self.dual().fundamental_circuit(self.live & ~base, f)

    def cocircuit_through_pair(self, o: int, e: int, f: int) -> int:
        """A cocircuit b with o & b == {e, f}, built constructively.

        Extends o - e to a base B by lowest-index greedy search and returns
        the fundamental cocircuit of f with respect to B.
        """
        if not self.is_circuit(o):
            raise NotACircuit(f"{format_set(o)} is not a circuit")
        eb, fb = 1 << e, 1 << f
        if e == f or not (eb & o) or not (fb & o):
            raise ElementsNotInCircuit(f"need two distinct circuit elements, got {e}, {f}")
        acc = o ^ eb
        for y in bits(self.live & ~acc):
            if self.is_independent(acc | (1 << y)):
                acc |= 1 << y
        b = self.fundamental_cocircuit(acc, f)
        if o & b != eb | fb:
            raise AssertionError(
                f"cocircuit {format_set(b)} meets {format_set(o)} in "
                f"{format_set(o & b)}, expected {{{e},{f}}}"
            )
        return b

    def lift_circuit(self, contracted: int, deleted: int, minor_circuit: int) -> int:
        """A circuit o of this matroid with o' <= o <= o' + contracted,
        where o' is a circuit of the minor (contract ``contracted``, delete
        ``deleted``).

        Found as a minimal dependent subset of B + o' for a greedy base B of
        the restriction to the contracted part.
        """
        minor = self.minor(contracted, deleted)
        if not minor.is_circuit(minor_circuit):
            raise NotAMinorCircuit(
                f"{format_set(minor_circuit)} is not a circuit of the minor"
            )
        b = self.greedy_base_within(contracted)
        o = b | minor_circuit
        # single ascending pass: once a removal keeps the set dependent the
        # element is gone for good, and (I2) keeps later removals valid
        for y in bits(o):
            cand = o ^ (1 << y)
            if not self.is_independent(cand):
                o = cand
        if minor_circuit & ~o:
            raise AssertionError(
                f"lifted circuit {format_set(o)} misses part of {format_set(minor_circuit)}"
            )
        return o

    def position(self, c_side: int, x: int, d_side: int) -> Position:
        """Which side of the circuit/cocircuit dichotomy x falls on.

        Requires c_side + {x} + d_side to partition the ground set.  Both
        circuit lists are searched exhaustively and exactly one witness must
        exist; the dichotomy is asserted, not assumed.
        """
        xb = 1 << x
        if xb & ~self.live:
            raise ElementOutOfRange(f"element {x} outside the ground set")
        if (c_side | xb | d_side) != self.live or (c_side & d_side) or (xb & (c_side | d_side)):
            raise NotAPartition(
                f"{format_set(c_side)} / {x} / {format_set(d_side)} is not a partition"
            )
        o = next((c for c in self.circuits() if c & xb and not c & ~(c_side | xb)), None)
        b = next((c for c in self.dual().circuits() if c & xb and not c & ~(d_side | xb)), None)
        if (o is None) == (b is None):
            raise AssertionError(
                f"dichotomy violated at x={x}: circuit={o}, cocircuit={b}"
            )
        return Position("circuit", o) if o is not None else Position("cocircuit", b)

    def tameness(self) -> Tameness:
        """Largest circuit-cocircuit intersection (0 if either list is empty)."""
        cocircuits = self.dual().circuits()
        mx = max(
            ((o & b).bit_count() for o in self.circuits() for b in cocircuits),
            default=0,
        )
        return Tameness(mx, True)

    # -- helpers --------------------------------------------------------------

    def _require_base(self, b: int) -> None:
        if b & ~self.live:
            raise ElementOutOfRange(f"set {format_set(b)} leaves the ground set")
        if not self.is_base(b):
            raise NotABase(f"{format_set(b)} is not a base")


class ExplicitMatroid(Matroid):
    """Matroid given by the full list of independent sets.

    The family is validated against the axioms at construction; a family that
    fails them is rejected.
    """

    def __init__(self, ground: GroundSet | int, family: Iterable[int]):
        super().__init__(ground)
        fam = frozenset(family)
        report = check_axioms(self.ground, fam)
        if not report.all_pass:
            raise NotAMatroid(f"family violates {', '.join(report.failed())}")
        self.family = fam

    def _indep(self, x: int) -> bool:
        return x in self.family


class LinearMatroid(Matroid):
    """Columns of an exact matrix; X is independent iff the X-submatrix has a
    trivial kernel."""

    def __init__(self, matrix: linalg.Matrix, ground: GroundSet | int | None = None):
        ground = GroundSet(matrix.cols) if ground is None else _as_ground(ground)
        if ground.size != matrix.cols:
            raise ValueError("ground size must match the column count")
        super().__init__(ground)
        self.matrix = matrix

    def _indep(self, x: int) -> bool:
        cols = list(bits(x))
        if not cols:
            return True
        sub = self.matrix.submatrix_columns(cols)
        return linalg.rank(sub) == len(cols)


class DualMatroid(Matroid):
    """Dual matroid: X is independent iff the complement of X spans the inner
    matroid."""

    def __init__(self, inner: Matroid):
        super().__init__(inner.ground, inner.live)
        self.inner = inner

    def _indep(self, x: int) -> bool:
        return self.inner.rank_of(self.live & ~x) == self.inner.rank()


class MinorMatroid(Matroid):
    """Minor: contract ``contracted``, delete ``deleted``; labels preserved.

    X is independent iff X together with a fixed base of the restriction to
    the contracted part is independent in the parent.  The base is chosen by
    lowest-index greedy search, and every query is cross-checked against an
    alternate (reverse greedy) base: the answer must not depend on the choice.
    """

    def __init__(self, parent: Matroid, contracted: int = 0, deleted: int = 0):
        for m in (contracted, deleted):
            if m & ~parent.live:
                raise ElementOutOfRange(f"set {format_set(m)} leaves the ground set")
        if contracted & deleted:
            raise ValueError("contracted and deleted sets overlap")
        super().__init__(parent.ground, parent.live & ~(contracted | deleted))
        self.parent = parent
        self.contracted = contracted
        self.deleted = deleted
        self._base_lo = parent.greedy_base_within(contracted)
        self._base_hi = parent.greedy_base_within(contracted, descending=True)

    def _indep(self, x: int) -> bool:
        lo = self.parent.is_independent(x | self._base_lo)
        if self._base_hi != self._base_lo:
            hi = self.parent.is_independent(x | self._base_hi)
            if hi != lo:
                raise AssertionError("contraction oracle depends on the base choice")
        return lo


def uniform_matroid(r: int, n: int) -> ExplicitMatroid:
    """U_{r,n}: every set of at most r elements is independent."""
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    family = [s for s in range(1 << n) if s.bit_count() <= r]
    return ExplicitMatroid(n, family)


def oracle_difference(a: Matroid, b: Matroid) -> int | None:
    """First subset on which the two oracles disagree, or None."""
    if a.live != b.live:
        raise ValueError("matroids live on different ground sets")
    for s in submasks(a.live):
        if a.is_independent(s) != b.is_independent(s):
            return s
    return None


# ---------------------------------------------------------------------------
# Set-system text format
# ---------------------------------------------------------------------------

def parse_set_system(text: str) -> tuple[GroundSet, list[int]]:
    """Parse ``ground <n>`` followed by ``ind <i,j,...>`` lines (``ind -`` is
    the empty set)."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ParseError("empty set-system file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "ground":
        raise ParseError(f"expected 'ground <n>' on line 1, got {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError:
        raise ParseError(f"bad ground size {head[1]!r}") from None
    if not 0 <= n <= MAX_GROUND:
        raise ParseError(f"ground size {n} outside 0..{MAX_GROUND}")
    family = []
    for ln in lines[1:]:
        if not ln.startswith("ind"):
            raise ParseError(f"expected 'ind <elements>', got {ln!r}")
        mask = parse_set(ln[3:])
        if mask >> n:
            raise ParseError(f"set {ln[4:].strip()!r} exceeds ground of size {n}")
        family.append(mask)
    return GroundSet(n), family


def format_set_system(ground_size: int, family: Iterable[int]) -> str:
    out = [f"ground {ground_size}"]
    for s in sorted(set(family)):
        out.append(f"ind {format_set(s)}")
    return "\n".join(out) + "\n"
