"""Vector matroids, thin dependences, thin sums systems, and their duality.

A family assigns to each ground element a column vector over an exact field.
The vector matroid tests independence through the rank of a column submatrix;
the thin sums system deliberately takes a different route, materializing
candidate coefficient maps and verifying them row by row against the pointwise
definition of a thin dependence.  On finite ground sets the two oracles must
coincide, and that coincidence is asserted by the verification suites rather
than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch
from .linalg import FieldSpec, Matrix, Scalar, kernel_basis, rref
from .matroids import (
    DualMatroid,
    GroundSet,
    LinearMatroid,
    Matroid,
    bits,
    format_set,
    oracle_difference,
)


@dataclass(frozen=True)
class VectorFamily:
    """A ground-set-indexed family of coordinate vectors (columns of a matrix)."""

    matrix: Matrix
    ground: GroundSet

    def __post_init__(self) -> None:
        if self.ground.size != self.matrix.cols:
            raise DimensionMismatch(
                f"{self.matrix.cols} columns vs ground of size {self.ground.size}"
            )

    @classmethod
    def from_matrix(cls, matrix: Matrix) -> "VectorFamily":
        return cls(matrix, GroundSet(matrix.cols))

    @property
    def field(self) -> FieldSpec:
        return self.matrix.field

    @property
    def coordinates(self) -> int:
        return self.matrix.rows


def support(c: Sequence[Scalar]) -> int:
    """Bitmask of the nonzero positions of a coefficient vector."""
    m = 0
    for i, v in enumerate(c):
        if v != 0:
            m |= 1 << i
    return m


def is_thin_family(fam: VectorFamily) -> tuple[bool, int]:
    """Whether each coordinate row touches only finitely many columns (always
    true at finite scale) together with the largest row support size."""
    widest = 0
    for row in fam.matrix.entries:
        nz = sum(1 for v in row if v != 0)
        widest = max(widest, nz)
    return True, widest


def vector_matroid(fam: VectorFamily) -> LinearMatroid:
    """The representable matroid of the family: independent iff no nonzero
    linear dependence, i.e. the column submatrix has trivial kernel."""
    return LinearMatroid(fam.matrix, fam.ground)


class ThinSumsMatroid(Matroid):
    """Thin sums system of a family, evaluated through thin dependences.

    A subset is dependent iff some nonzero coefficient map supported inside it
    sums to zero in every coordinate row.  Candidates come from the kernel of
    the support-restricted submatrix; each one is then re-verified pointwise,
    row by row, and its support is checked to carry a thin restriction of the
    family.  The full-matrix kernel is never consulted.
    """

    def __init__(self, fam: VectorFamily):
        super().__init__(fam.ground)
        self.family = fam
        self.dependences_seen = 0
        self.support_thinness_ok = True

    def _indep(self, x: int) -> bool:
        cols = list(bits(x))
        if not cols:
            return True
        sub = self.family.matrix.submatrix_columns(cols)
        for vec in kernel_basis(sub):
            c = [self.family.field.zero()] * self.family.ground.size
            for pos, e in enumerate(cols):
                c[e] = vec[pos]
            if not self._is_thin_dependence(c):
                raise AssertionError(
                    f"kernel vector of columns {format_set(x)} failed the pointwise check"
                )
            self.dependences_seen += 1
            sup = support(c)
            thin, _ = is_thin_family(
                VectorFamily(self.family.matrix.submatrix_columns(list(bits(sup))),
                             GroundSet(sup.bit_count()))
            )
            if not thin:
                self.support_thinness_ok = False
            return False
        return True

    def _is_thin_dependence(self, c: Sequence[Scalar]) -> bool:
        # the defining condition: for each coordinate a, sum c(e) f(e)(a) = 0
        f = self.family.field
        for row in self.family.matrix.entries:
            acc = f.zero()
            for e, coef in enumerate(c):
                if coef != 0:
                    acc = f.add(acc, f.mul(coef, row[e]))
            if acc != 0:
                return False
        return True


def thin_sums_system(fam: VectorFamily) -> ThinSumsMatroid:
    return ThinSumsMatroid(fam)


def dual_representation(fam: VectorFamily) -> VectorFamily:
    """A family over the same field and ground representing the dual matroid.

    Row-reduces to standard form on the lexicographically least base B (the
    pivot columns) and emits the complementary standard form: non-pivot
    columns carry an identity, pivot columns the negated transposed
    coefficients.
    """
    f = fam.field
    n = fam.ground.size
    reduced, pivots = rref(fam.matrix)
    free = [j for j in range(n) if j not in set(pivots)]
    k = len(free)
    grid = [[f.zero()] * n for _ in range(k)]
    for j, col in enumerate(free):
        grid[j][col] = f.one()
    for i, col in enumerate(pivots):
        for j, fcol in enumerate(free):
            grid[j][col] = f.neg(reduced.entries[i][fcol])
    psi = Matrix(f, k, n, tuple(tuple(row) for row in grid))
    return VectorFamily(psi, fam.ground)


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    passed: bool
    witness: str = ""


def verify_ts_duality(fam: VectorFamily) -> list[CheckResult]:
    """Both directions of the thin-sums/representable duality at this instance.

    Every comparison is an exhaustive oracle comparison over all 2^n subsets:
    the thin sums system must agree with the vector matroid (finite-scale
    collapse), with the dual of the constructed dual representation, and the
    thin sums system of the dual representation must agree with the dual of
    the vector matroid.
    """
    results = []
    ts = thin_sums_system(fam)
    vec = vector_matroid(fam)
    psi = dual_representation(fam)

    diff = oracle_difference(ts, vec)
    results.append(CheckResult(
        "ts-linear-collapse", diff is None,
        "" if diff is None else f"disagree at {format_set(diff)}"))

    diff = oracle_difference(ts, DualMatroid(vector_matroid(psi)))
    results.append(CheckResult(
        "ts-dual-forward", diff is None,
        "" if diff is None else f"disagree at {format_set(diff)}"))

    diff = oracle_difference(thin_sums_system(psi), DualMatroid(vec))
    results.append(CheckResult(
        "ts-dual-backward", diff is None,
        "" if diff is None else f"disagree at {format_set(diff)}"))

    diff = oracle_difference(vector_matroid(psi), DualMatroid(vec))
    results.append(CheckResult(
        "dual-representation", diff is None,
        "" if diff is None else f"disagree at {format_set(diff)}"))

    results.append(CheckResult(
        "thin-support", ts.support_thinness_ok,
        "" if ts.support_thinness_ok else "a dependence support was not thin"))
    return results
