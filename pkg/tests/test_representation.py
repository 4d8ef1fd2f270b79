"""Vector matroids, thin sums systems, and the duality verifier."""

from fractions import Fraction

import pytest

from matroidlab import (
    GF2,
    GF3,
    Q,
    DualMatroid,
    Matrix,
    VectorFamily,
    dual_representation,
    is_thin_family,
    kernel_basis,
    oracle_difference,
    support,
    thin_sums_system,
    vector_matroid,
    verify_ts_duality,
)
from matroidlab.corpus import Lcg

A1 = VectorFamily.from_matrix(Matrix.from_rows(GF2, [(1, 0, 1), (0, 1, 1)]))
ONES_GF2 = VectorFamily.from_matrix(Matrix.from_rows(GF2, [(1, 1, 1)]))
ONES_GF3 = VectorFamily.from_matrix(Matrix.from_rows(GF3, [(1, 1, 1)]))


class TestSupport:
    def test_simple(self):
        assert support((1, 0, 1)) == 0b101

    def test_zero_vector(self):
        assert support((0, 0)) == 0

    def test_gf3(self):
        assert support((0, 2, 0)) == 0b010


class TestThinFamily:
    def test_a1_profile(self):
        assert is_thin_family(A1) == (True, 2)

    def test_zero_matrix(self):
        fam = VectorFamily.from_matrix(Matrix.zeros(GF2, 2, 3))
        assert is_thin_family(fam) == (True, 0)

    def test_all_ones_row(self):
        assert is_thin_family(ONES_GF2) == (True, 3)


class TestVectorMatroid:
    def test_a1_circuits(self):
        assert vector_matroid(A1).circuits() == [0b111]

    def test_identity_columns_free(self):
        fam = VectorFamily.from_matrix(Matrix.identity(GF2, 3))
        assert vector_matroid(fam).circuits() == []

    def test_zero_column_is_loop(self):
        fam = VectorFamily.from_matrix(Matrix.from_rows(GF2, [(1, 0)]))
        assert 0b10 in vector_matroid(fam).circuits()


class TestThinSums:
    def test_coincides_with_vector_matroid_on_a1(self):
        assert thin_sums_system(A1).circuits() == vector_matroid(A1).circuits()

    def test_all_ones_gives_u13(self):
        assert thin_sums_system(ONES_GF2).circuits() == [0b011, 0b101, 0b110]

    def test_empty_ground(self):
        fam = VectorFamily.from_matrix(Matrix.zeros(GF2, 0, 0))
        ts = thin_sums_system(fam)
        assert ts.independent_sets() == [0]

    def test_pointwise_path_counts_dependences(self):
        ts = thin_sums_system(A1)
        ts.oracle_table()
        assert ts.dependences_seen > 0
        assert ts.support_thinness_ok


class TestDualRepresentation:
    def test_a1_dualizes_to_all_ones(self):
        psi = dual_representation(A1)
        assert psi.matrix.rows == 1
        assert psi.matrix.entries == ((1, 1, 1),)
        assert vector_matroid(psi).bases() == [0b001, 0b010, 0b100]

    def test_free_matroid_dualizes_to_zero_rows(self):
        fam = VectorFamily.from_matrix(Matrix.identity(GF2, 2))
        psi = dual_representation(fam)
        assert psi.matrix.rows == 0
        assert vector_matroid(psi).rank() == 0

    def test_all_ones_gf3(self):
        psi = dual_representation(ONES_GF3)
        assert psi.matrix.rows == 2
        assert kernel_basis(psi.matrix) == [(1, 1, 1)]
        assert oracle_difference(
            vector_matroid(psi), DualMatroid(vector_matroid(ONES_GF3))
        ) is None

    def test_rank_deficient_rows_are_reduced_first(self):
        fam = VectorFamily.from_matrix(
            Matrix.from_rows(GF2, [(1, 0, 1), (1, 0, 1)])
        )
        psi = dual_representation(fam)
        assert oracle_difference(
            vector_matroid(psi), DualMatroid(vector_matroid(fam))
        ) is None


def _seed7_gf3_3x6() -> VectorFamily:
    rng = Lcg(7)
    grid = [[rng.draw() % 3 for _ in range(6)] for _ in range(3)]
    return VectorFamily.from_matrix(Matrix.from_rows(GF3, grid))


class TestTsDuality:
    @pytest.mark.parametrize(
        "fam",
        [
            A1,
            VectorFamily.from_matrix(Matrix.zeros(GF2, 1, 2)),
            ONES_GF3,
            VectorFamily.from_matrix(
                Matrix.from_rows(Q, [(Fraction(1, 2), 1, 0), (0, 1, Fraction(-2, 3))])
            ),
            _seed7_gf3_3x6(),
        ],
    )
    def test_both_directions_pass(self, fam):
        results = verify_ts_duality(fam)
        assert {r.check_id for r in results} == {
            "ts-linear-collapse",
            "ts-dual-forward",
            "ts-dual-backward",
            "dual-representation",
            "thin-support",
        }
        assert all(r.passed for r in results), [r for r in results if not r.passed]
