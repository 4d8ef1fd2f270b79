"""Exact linear algebra over prime fields GF(p) and the rationals.

Scalars are plain ``int`` residues in ``[0, p)`` for GF(p) and
``fractions.Fraction`` for the rationals, so every computation is exact by
construction.  Row reduction uses no pivoting heuristics: the pivot is always
the first nonzero entry scanning top-to-bottom in the leftmost unresolved
column, which makes every result deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence, Union

from .errors import DimensionMismatch, ParseError, ZeroInverse

Scalar = Union[int, Fraction]


def _is_prime(p: int) -> bool:
    # trial division; fields stay tiny, so no need for anything cleverer
    if p < 2:
        return False
    for d in range(2, isqrt(p) + 1):
        if p % d == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """GF(p) for a prime p, or the rationals when ``p`` is None."""

    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"field order {self.p} is not prime")

    @classmethod
    def gf(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    @property
    def label(self) -> str:
        return "q" if self.p is None else f"gf{self.p}"

    def __str__(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"

    def zero(self) -> Scalar:
        return 0 if self.p is not None else Fraction(0)

    def one(self) -> Scalar:
        return 1 if self.p is not None else Fraction(1)

    def coerce(self, value: int | Fraction | str) -> Scalar:
        """Bring an integer, fraction, or literal like ``'2/3'`` into the field."""
        if self.p is not None:
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise ValueError(f"{value} is not an integer residue")
                value = value.numerator
            elif isinstance(value, str):
                value = int(value)
            return value % self.p
        return Fraction(value)

    def add(self, x: Scalar, y: Scalar) -> Scalar:
        return (x + y) % self.p if self.p is not None else x + y

    def sub(self, x: Scalar, y: Scalar) -> Scalar:
        return (x - y) % self.p if self.p is not None else x - y

    def mul(self, x: Scalar, y: Scalar) -> Scalar:
        return (x * y) % self.p if self.p is not None else x * y

    def neg(self, x: Scalar) -> Scalar:
        return (-x) % self.p if self.p is not None else -x

    def inv(self, x: Scalar) -> Scalar:
        if x == 0:
            raise ZeroInverse(f"0 has no inverse in {self}")
        if self.p is not None:
            return pow(x, -1, self.p)
        return 1 / Fraction(x)

    def format(self, x: Scalar) -> str:
        if self.p is not None:
            return str(x)
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


GF2 = FieldSpec.gf(2)
GF3 = FieldSpec.gf(3)
GF5 = FieldSpec.gf(5)
Q = FieldSpec.rationals()


@dataclass(frozen=True)
class Matrix:
    """Immutable row-major matrix with entries in a fixed field."""

    field: FieldSpec
    rows: int
    cols: int
    entries: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatch(
                f"entry grid does not match shape {self.rows}x{self.cols}"
            )

    @classmethod
    def from_rows(
        cls, field: FieldSpec, rows: Iterable[Iterable[int | Fraction | str]], cols: int | None = None
    ) -> "Matrix":
        grid = tuple(tuple(field.coerce(v) for v in row) for row in rows)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        return cls(field, len(grid), cols, grid)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        z = field.zero()
        return cls(field, rows, cols, tuple(tuple(z for _ in range(cols)) for _ in range(rows)))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        return cls(field, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    def column(self, j: int) -> tuple[Scalar, ...]:
        return tuple(row[j] for row in self.entries)

    def submatrix_columns(self, cols: Sequence[int]) -> "Matrix":
        grid = tuple(tuple(row[j] for j in cols) for row in self.entries)
        return Matrix(self.field, self.rows, len(cols), grid)

    def mat_vec(self, v: Sequence[Scalar]) -> tuple[Scalar, ...]:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector length {len(v)} != cols {self.cols}")
        f = self.field
        out = []
        for row in self.entries:
            acc = f.zero()
            for a, c in zip(row, v):
                acc = f.add(acc, f.mul(a, c))
            out.append(acc)
        return tuple(out)


def rref(a: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and the pivot columns, left to right.

    The row space is preserved; pivots are scaled to 1 and cleared above and
    below.  Pivot choice is the first nonzero entry in the leftmost unresolved
    column, so the output is unique given the input.
    """
    f = a.field
    m = [list(row) for row in a.entries]
    pivots: list[int] = []
    pr = 0
    for pc in range(a.cols):
        hit = None
        for r in range(pr, a.rows):
            if m[r][pc] != 0:
                hit = r
                break
        if hit is None:
            continue
        m[pr], m[hit] = m[hit], m[pr]
        scale = f.inv(m[pr][pc])
        m[pr] = [f.mul(scale, v) for v in m[pr]]
        for r in range(a.rows):
            if r != pr and m[r][pc] != 0:
                c = m[r][pc]
                m[r] = [f.sub(v, f.mul(c, w)) for v, w in zip(m[r], m[pr])]
        pivots.append(pc)
        pr += 1
        if pr == a.rows:
            break
    reduced = Matrix(f, a.rows, a.cols, tuple(tuple(row) for row in m))
    return reduced, tuple(pivots)


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def kernel_basis(a: Matrix) -> list[tuple[Scalar, ...]]:
    """Basis of the right kernel {c : A·c = 0}, one vector per free column.

    Vectors are emitted in ascending order of their free (non-pivot) column
    index, with the free variable set to 1.
    """
    f = a.field
    reduced, pivots = rref(a)
    pivot_set = set(pivots)
    basis = []
    for j in range(a.cols):
        if j in pivot_set:
            continue
        v = [f.zero()] * a.cols
        v[j] = f.one()
        for i, pc in enumerate(pivots):
            v[pc] = f.neg(reduced.entries[i][j])
        basis.append(tuple(v))
    return basis


def solve(a: Matrix, b: Sequence[Scalar]) -> tuple[Scalar, ...] | None:
    """One solution of A·x = b with free variables set to 0, or None."""
    if len(b) != a.rows:
        raise DimensionMismatch(f"rhs length {len(b)} != rows {a.rows}")
    f = a.field
    aug = Matrix(
        f, a.rows, a.cols + 1,
        tuple(row + (f.coerce(bv),) for row, bv in zip(a.entries, b)),
    )
    reduced, pivots = rref(aug)
    if a.cols in pivots:
        return None
    x = [f.zero()] * a.cols
    for i, pc in enumerate(pivots):
        x[pc] = reduced.entries[i][a.cols]
    return tuple(x)


def parse_matrix(text: str) -> Matrix:
    """Parse the matrix text format.

    Line 1 is ``field gf <p>`` or ``field q``, line 2 ``rows <m>``, line 3
    ``cols <n>``, followed by m rows of n whitespace-separated entries.
    GF entries are integers reduced mod p on read; rational entries are
    ``a`` or ``a/b``.
    """
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if len(lines) < 3:
        raise ParseError("matrix file needs a field, rows and cols header")
    ftok = lines[0].split()
    if ftok[:1] != ["field"]:
        raise ParseError(f"expected 'field ...' on line 1, got {lines[0]!r}")
    if len(ftok) == 2 and ftok[1] == "q":
        field = Q
    elif len(ftok) == 3 and ftok[1] == "gf":
        try:
            p = int(ftok[2])
        except ValueError:
            raise ParseError(f"bad field order {ftok[2]!r}") from None
        try:
            field = FieldSpec.gf(p)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    else:
        raise ParseError(f"unrecognized field line {lines[0]!r}")
    rows = _parse_header_int(lines[1], "rows")
    cols = _parse_header_int(lines[2], "cols")
    data = lines[3:]
    if len(data) != rows:
        raise ParseError(f"expected {rows} entry rows, found {len(data)}")
    grid = []
    for i, ln in enumerate(data):
        toks = ln.split()
        if len(toks) != cols:
            raise ParseError(f"row {i + 1} has {len(toks)} entries, expected {cols}")
        grid.append(tuple(_parse_entry(field, t, i + 1) for t in toks))
    return Matrix(field, rows, cols, tuple(grid))


def _parse_header_int(line: str, key: str) -> int:
    toks = line.split()
    if len(toks) != 2 or toks[0] != key:
        raise ParseError(f"expected '{key} <n>', got {line!r}")
    try:
        n = int(toks[1])
    except ValueError:
        raise ParseError(f"expected '{key} <n>', got {line!r}") from None
    if n < 0:
        raise ParseError(f"{key} must be nonnegative, got {n}")
    return n


def _parse_entry(field: FieldSpec, tok: str, row: int) -> Scalar:
    try:
        if field.is_prime_field:
            return int(tok) % field.p  # type: ignore[operator]
        if "/" in tok:
            num, den = tok.split("/", 1)
            d = int(den)
            if d == 0:
                raise ParseError(f"zero denominator in entry {tok!r} (row {row})")
            return Fraction(int(num), d)
        return Fraction(int(tok))
    except ValueError:
        raise ParseError(f"bad entry {tok!r} in row {row}") from None


def format_matrix(a: Matrix) -> str:
    head = "field q" if not a.field.is_prime_field else f"field gf {a.field.p}"
    out = [head, f"rows {a.rows}", f"cols {a.cols}"]
    for row in a.entries:
        out.append(" ".join(a.field.format(v) for v in row))
    return "\n".join(out) + "\n"
