"""Property tests over randomly generated instances."""

from hypothesis import given, settings
from hypothesis import strategies as st

from matroidlab import (
    GF2,
    GF3,
    DualMatroid,
    LinearMatroid,
    Matrix,
    MultiGraph,
    SpaceOperator,
    VectorFamily,
    check_axioms,
    cycle_matroid,
    minimal_edge_cuts,
    bond_matroid,
    oracle_difference,
    dual_representation,
    thin_sums_system,
    vector_matroid,
)
from matroidlab.matroids import bits, submasks


@st.composite
def small_linear_matroid(draw):
    field = draw(st.sampled_from([GF2, GF3]))
    rows = draw(st.integers(1, 3))
    cols = draw(st.integers(1, 5))
    grid = [[draw(st.integers(0, field.p - 1)) for _ in range(cols)] for _ in range(rows)]
    return LinearMatroid(Matrix.from_rows(field, grid, cols=cols))


@st.composite
def small_multigraph(draw):
    nv = draw(st.integers(1, 4))
    ne = draw(st.integers(1, 6))
    edges = tuple(
        (draw(st.integers(0, nv - 1)), draw(st.integers(0, nv - 1)))
        for _ in range(ne)
    )
    return MultiGraph(nv, edges)


@given(small_linear_matroid())
@settings(max_examples=40, deadline=None)
def test_enumerated_family_satisfies_the_axioms(m):
    assert check_axioms(m.ground, m.independent_sets()).all_pass


@given(small_linear_matroid())
@settings(max_examples=40, deadline=None)
def test_dual_involution(m):
    assert oracle_difference(m.dual().dual(), m) is None


@given(small_linear_matroid())
@settings(max_examples=40, deadline=None)
def test_no_circuit_meets_a_cocircuit_in_one_element(m):
    for o in m.circuits():
        for b in m.dual().circuits():
            assert (o & b).bit_count() != 1


@given(small_linear_matroid())
@settings(max_examples=30, deadline=None)
def test_bases_are_complements_of_dual_bases(m):
    dual_bases = {m.live & ~b for b in m.bases()}
    assert dual_bases == set(m.dual().bases())


@given(small_linear_matroid())
@settings(max_examples=25, deadline=None)
def test_closure_operator_satisfies_the_partition_law(m):
    s = SpaceOperator.from_matroid(m)
    sd = s.dual()
    for x in bits(m.live):
        xb = 1 << x
        rest = m.live ^ xb
        for xs in submasks(rest):
            assert bool(s(xs) & xb) != bool(sd(rest ^ xs) & xb)


@given(small_linear_matroid())
@settings(max_examples=25, deadline=None)
def test_double_dual_operator_is_identity(m):
    s = SpaceOperator.from_matroid(m)
    sdd = s.dual().dual()
    for x in submasks(m.live):
        assert sdd(x) == s(x)


@given(small_linear_matroid())
@settings(max_examples=25, deadline=None)
def test_thin_sums_collapses_to_vector_matroid(m):
    fam = VectorFamily.from_matrix(m.matrix)
    assert oracle_difference(thin_sums_system(fam), vector_matroid(fam)) is None


@given(small_linear_matroid())
@settings(max_examples=25, deadline=None)
def test_dual_representation_represents_the_dual(m):
    fam = VectorFamily.from_matrix(m.matrix)
    psi = dual_representation(fam)
    assert oracle_difference(vector_matroid(psi), DualMatroid(vector_matroid(fam))) is None


@given(small_multigraph())
@settings(max_examples=40, deadline=None)
def test_bond_circuits_are_minimal_cuts(g):
    assert bond_matroid(g).circuits() == minimal_edge_cuts(g)


@given(small_multigraph(), st.data())
@settings(max_examples=30, deadline=None)
def test_minors_of_cycle_matroids_stay_tame(g, data):
    m = cycle_matroid(g)
    c = data.draw(st.integers(0, m.live)) & m.live
    d = data.draw(st.integers(0, m.live)) & m.live & ~c
    minor = m.minor(c, d)
    t = minor.tameness()
    assert t.all_finite
    assert t.max_intersection <= minor.live.bit_count()
