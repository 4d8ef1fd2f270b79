"""Corpus-wide verification driver.

Runs every law of the library over a generated corpus and emits one plain-text
report line per check and instance: ``<check-id> <instance-id> PASS|FAIL
[witness]``.  Output order is canonical (corpus order, fixed check order), so
two runs with equal flags produce byte-identical reports.

Checks that sweep all minors or partitions evaluate independence through
precomputed oracle tables for speed, and spot-check the object-level API
(minor and dual constructions) on a deterministic sample of the same cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .corpus import CorpusSpec, Instance, Lcg, generate_corpus
from .errors import MatroidLabError
from .graphs import (
    MultiGraph,
    bond_matroid,
    cycle_matroid,
    minimal_edge_cuts,
    verify_graphic_representable,
)
from .linalg import GF2, GF3, GF5, Matrix, Q, kernel_basis, rank, rref
from .matroids import (
    LinearMatroid,
    Matroid,
    bits,
    check_axioms,
    format_set,
    oracle_difference,
    submasks,
)
from .representation import (
    VectorFamily,
    is_thin_family,
    support,
    vector_matroid,
    verify_ts_duality,
)
from .spaces import SpaceOperator, find_non_matroidal_ie, is_ie, operators_equal

# Reference trace of the pinned generator at seed 7: the first six draws and
# the 3x6 GF(2) matrix they induce.  Part of the external corpus contract.
PINNED_SEED = 7
PINNED_DRAWS = (2118330556, 4104526463, 3893713506, 1171437346, 1144091090, 594514439)
PINNED_GF2_3X6 = (
    (0, 1, 0, 0, 0, 1),
    (0, 0, 0, 1, 1, 0),
    (1, 1, 1, 0, 1, 1),
)

# hand-built families that must each fail exactly one axiom
NEGATIVE_FAMILIES = (
    ("neg-i1", 3, (), "i1"),
    ("neg-i2", 3, (0b000, 0b001, 0b011), "i2"),
    ("neg-i3", 3, (0b000, 0b001, 0b010, 0b011, 0b100), "i3"),
)

GRAPH_FIELDS = ((GF2, "gf2"), (GF3, "gf3"), (GF5, "gf5"), (Q, "q"))

FDT_LIMIT = 7          # fundamental circuit/cocircuit sweeps
PAIR_LIMIT = 7         # cocircuit-through-pair sweeps
LIFT_LIMIT = 6         # circuit lifting over all minors
PARTITION_LIMIT = 7    # circuit/cocircuit dichotomy and minor-dual identity
KERNEL_ENUM_LIMIT = 7000   # enumerate kernel vectors when p^nullity fits
API_SPOT_SAMPLES = 6   # object-level cross-checks per table sweep


@dataclass(frozen=True)
class ReportLine:
    check_id: str
    instance_id: str
    ok: bool
    witness: str = ""

    def render(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f" {self.witness}" if self.witness else ""
        return f"{self.check_id} {self.instance_id} {status}{tail}"


def render_report(lines: list[ReportLine]) -> str:
    return "\n".join(ln.render() for ln in lines) + "\n"


def acceptance_spec() -> CorpusSpec:
    return CorpusSpec(seed=1, count=200, max_ground=8)


# ---------------------------------------------------------------------------
# Table helpers (fast sweeps over minors and duals)
# ---------------------------------------------------------------------------

def _rank_table(table: dict[int, bool], live: int) -> dict[int, int]:
    # ascending numeric order visits every subset after all its subsets
    rt: dict[int, int] = {}
    for s in submasks(live):
        if table[s]:
            rt[s] = s.bit_count()
        else:
            rt[s] = max((rt[s ^ (1 << e)] for e in bits(s)), default=0)
    return rt


def _dual_table(table: dict[int, bool], live: int) -> dict[int, bool]:
    rt = _rank_table(table, live)
    full_rank = rt[live]
    return {s: rt[live & ~s] == full_rank for s in submasks(live)}


def _minor_table(
    table: dict[int, bool], live: int, contracted: int, deleted: int
) -> tuple[dict[int, bool], int]:
    base = 0
    for e in bits(contracted):
        if table[base | (1 << e)]:
            base |= 1 << e
    minor_live = live & ~(contracted | deleted)
    return {s: table[s | base] for s in submasks(minor_live)}, minor_live


def _circuits_from_table(table: dict[int, bool], live: int) -> list[int]:
    found: list[int] = []
    for s in sorted(submasks(live), key=lambda t: (t.bit_count(), t)):
        if s == 0 or any(c & ~s == 0 for c in found):
            continue
        if not table[s]:
            found.append(s)
    return sorted(found)


def _disjoint_pairs(live: int):
    for c in submasks(live):
        for d in submasks(live & ~c):
            yield c, d


# ---------------------------------------------------------------------------
# Global checks
# ---------------------------------------------------------------------------

def _global_checks() -> list[ReportLine]:
    out = []

    rng = Lcg(PINNED_SEED)
    draws = tuple(rng.draw() for _ in range(len(PINNED_DRAWS)))
    ok = draws == PINNED_DRAWS
    if ok:
        pinned = CorpusSpec(
            seed=PINNED_SEED, count=1, max_ground=6,
            generators=("random-matrix-gf2",),
        )
        inst = generate_corpus(pinned)[0]
        fam = inst.value
        ok = (
            isinstance(fam, VectorFamily)
            and fam.matrix.rows == 3
            and fam.matrix.cols == 6
            and fam.matrix.entries == PINNED_GF2_3X6
        )
    out.append(ReportLine("lcg-trace", "pinned", ok, "" if ok else "trace mismatch"))

    for iid, n, family, intended in NEGATIVE_FAMILIES:
        failed = check_axioms(n, family).failed()
        ok = failed == [intended]
        out.append(ReportLine(
            "axioms-neg", iid, ok,
            "" if ok else f"failed {','.join(failed) or 'none'} expected {intended}"))

    try:
        find_non_matroidal_ie(3)
        out.append(ReportLine("ie-nonmatroid", "n3", True))
    except (RuntimeError, MatroidLabError) as exc:
        out.append(ReportLine("ie-nonmatroid", "n3", False, str(exc)))

    return out


# ---------------------------------------------------------------------------
# Per-matroid suite
# ---------------------------------------------------------------------------

def _matroid_suite(iid: str, m: Matroid, vander: Matroid | None = None) -> list[ReportLine]:
    out = []
    live = m.live
    n = live.bit_count()
    table = m.oracle_table()

    # axioms on the fully enumerated family
    fam = [s for s in submasks(live) if table[s]]
    rep = check_axioms(m.ground, fam)
    out.append(ReportLine(
        "axioms", iid, rep.all_pass,
        "" if rep.all_pass else f"violates {','.join(rep.failed())}"))

    if vander is not None:
        diff = oracle_difference(m, vander)
        out.append(ReportLine(
            "backend-coherence", iid, diff is None,
            "" if diff is None else f"disagree at {format_set(diff)}"))

    circuits = m.circuits()
    cocircuits = m.dual().circuits()

    bad = next(
        ((o, b) for o in circuits for b in cocircuits if (o & b).bit_count() == 1),
        None,
    )
    out.append(ReportLine(
        "notone", iid, bad is None,
        "" if bad is None else f"o={format_set(bad[0])} b={format_set(bad[1])}"))

    try:
        m.bases()
        out.append(ReportLine("bases-equicardinal", iid, True))
    except AssertionError as exc:
        out.append(ReportLine("bases-equicardinal", iid, False, str(exc)))

    diff = oracle_difference(m.dual().dual(), m)
    out.append(ReportLine(
        "dual-involution", iid, diff is None,
        "" if diff is None else f"disagree at {format_set(diff)}"))

    if n <= FDT_LIMIT:
        out.append(_fdt_check(iid, m))
    if n <= PAIR_LIMIT:
        out.append(_pair_check(iid, m, circuits))
    if n <= LIFT_LIMIT:
        out.append(_lift_check(iid, m, table))
    if n <= PARTITION_LIMIT:
        out.append(_dichotomy_check(iid, m))
        out.append(_minor_dual_check(iid, m, table))

    out.extend(_operator_checks(iid, m))

    t = m.tameness()
    ok = t.all_finite and t.max_intersection <= n
    out.append(ReportLine(
        "tameness", iid, ok, "" if ok else f"max {t.max_intersection} > {n}"))
    td = m.dual().tameness()
    ok = td.all_finite and td.max_intersection <= n
    out.append(ReportLine(
        "tame-dual", iid, ok, "" if ok else f"max {td.max_intersection} > {n}"))
    out.append(_tame_minors_check(iid, m, table))

    return out


def _fdt_check(iid: str, m: Matroid) -> ReportLine:
    for b in m.bases():
        fund_circuits = {e: m.fundamental_circuit(b, e) for e in bits(m.live & ~b)}
        fund_cocircuits = {f: m.fundamental_cocircuit(b, f) for f in bits(b)}
        for e, oe in fund_circuits.items():
            for f, bf in fund_cocircuits.items():
                inter = oe & bf
                if inter and inter != (1 << e) | (1 << f):
                    return ReportLine(
                        "fdt", iid, False,
                        f"B={format_set(b)} e={e} f={f} meet={format_set(inter)}")
                if bool(oe >> f & 1) != bool(bf >> e & 1):
                    return ReportLine(
                        "fdt", iid, False,
                        f"B={format_set(b)} e={e} f={f} membership mismatch")
    return ReportLine("fdt", iid, True)


def _pair_check(iid: str, m: Matroid, circuits: list[int]) -> ReportLine:
    for o in circuits:
        for e in bits(o):
            for f in bits(o):
                if e == f:
                    continue
                try:
                    b = m.cocircuit_through_pair(o, e, f)
                except (AssertionError, MatroidLabError) as exc:
                    return ReportLine("o-cap-b", iid, False,
                                      f"o={format_set(o)} e={e} f={f}: {exc}")
                if o & b != (1 << e) | (1 << f):
                    return ReportLine("o-cap-b", iid, False,
                                      f"o={format_set(o)} e={e} f={f} got {format_set(b)}")
    return ReportLine("o-cap-b", iid, True)


def _lift_check(iid: str, m: Matroid, table: dict[int, bool]) -> ReportLine:
    for c, d in _disjoint_pairs(m.live):
        minor_table, minor_live = _minor_table(table, m.live, c, d)
        for oprime in _circuits_from_table(minor_table, minor_live):
            try:
                o = m.lift_circuit(c, d, oprime)
            except (AssertionError, MatroidLabError) as exc:
                return ReportLine(
                    "rest-cir", iid, False,
                    f"C={format_set(c)} D={format_set(d)} o'={format_set(oprime)}: {exc}")
            if oprime & ~o or o & ~(oprime | c):
                return ReportLine(
                    "rest-cir", iid, False,
                    f"C={format_set(c)} D={format_set(d)} o'={format_set(oprime)} "
                    f"lifted {format_set(o)}")
    return ReportLine("rest-cir", iid, True)


def _dichotomy_check(iid: str, m: Matroid) -> ReportLine:
    for x in bits(m.live):
        rest = m.live ^ (1 << x)
        for c in submasks(rest):
            d = rest ^ c
            try:
                m.position(c, x, d)
            except (AssertionError, MatroidLabError) as exc:
                return ReportLine(
                    "dualops", iid, False,
                    f"C={format_set(c)} x={x} D={format_set(d)}: {exc}")
    return ReportLine("dualops", iid, True)


def _minor_dual_check(iid: str, m: Matroid, table: dict[int, bool]) -> ReportLine:
    dual_full = _dual_table(table, m.live)
    spots = 0
    for c, d in _disjoint_pairs(m.live):
        # (M / D \ C)* : contract D and delete C, then dualize the table
        left_table, minor_live = _minor_table(table, m.live, d, c)
        left = _dual_table(left_table, minor_live)
        # M* / C \ D : contract C and delete D inside the dual table
        right, right_live = _minor_table(dual_full, m.live, c, d)
        if minor_live != right_live or left != right:
            bad = next((s for s in submasks(minor_live) if left[s] != right.get(s)), None)
            return ReportLine(
                "minor-dual", iid, False,
                f"C={format_set(c)} D={format_set(d)} at {format_set(bad or 0)}")
        if c and d and spots < API_SPOT_SAMPLES:
            spots += 1
            left_api = m.delete(c).contract(d).dual()
            right_api = m.dual().contract(c).delete(d)
            diff = oracle_difference(left_api, right_api)
            if diff is not None:
                return ReportLine(
                    "minor-dual", iid, False,
                    f"api C={format_set(c)} D={format_set(d)} at {format_set(diff)}")
    return ReportLine("minor-dual", iid, True)


def _operator_checks(iid: str, m: Matroid) -> list[ReportLine]:
    out = []
    s = SpaceOperator.from_matroid(m)
    sd = s.dual()

    ok, wit = True, ""
    for x in bits(m.live):
        xb = 1 << x
        rest = m.live ^ xb
        for xs in submasks(rest):
            ys = rest ^ xs
            if bool(s(xs) & xb) == bool(sd(ys) & xb):
                ok, wit = False, f"x={x} X={format_set(xs)} Y={format_set(ys)}"
                break
        if not ok:
            break
    out.append(ReportLine("dagger", iid, ok, wit))

    out.append(ReportLine(
        "double-dual", iid, operators_equal(sd.dual(), s)))
    out.append(ReportLine(
        "span-dual", iid,
        operators_equal(SpaceOperator.from_matroid(m.dual()), sd)))
    out.append(ReportLine("span-ie", iid, is_ie(s)))
    return out


def _tame_minors_check(iid: str, m: Matroid, table: dict[int, bool]) -> ReportLine:
    spots = 0
    for c, d in _disjoint_pairs(m.live):
        minor_table, minor_live = _minor_table(table, m.live, c, d)
        circs = _circuits_from_table(minor_table, minor_live)
        cocircs = _circuits_from_table(_dual_table(minor_table, minor_live), minor_live)
        mx = max(((o & b).bit_count() for o in circs for b in cocircs), default=0)
        if mx > minor_live.bit_count():
            return ReportLine(
                "tame-minors", iid, False,
                f"C={format_set(c)} D={format_set(d)} max {mx}")
        if c and d and spots < API_SPOT_SAMPLES:
            spots += 1
            t = m.minor(c, d).tameness()
            if not t.all_finite or t.max_intersection != mx:
                return ReportLine(
                    "tame-minors", iid, False,
                    f"api C={format_set(c)} D={format_set(d)} "
                    f"{t.max_intersection} != {mx}")
    return ReportLine("tame-minors", iid, True)


# ---------------------------------------------------------------------------
# Per-family and per-graph suites
# ---------------------------------------------------------------------------

def _family_suite(iid: str, fam: VectorFamily) -> list[ReportLine]:
    out = []
    kb = kernel_basis(fam.matrix)

    ok = all(all(v == 0 for v in fam.matrix.mat_vec(c)) for c in kb)
    out.append(ReportLine("kernel-exact", iid, ok))

    ok = rank(fam.matrix) + len(kb) == fam.matrix.cols
    out.append(ReportLine("rank-nullity", iid, ok))

    r1, p1 = rref(fam.matrix)
    r2, p2 = rref(r1)
    out.append(ReportLine("rref-idempotent", iid, r1.entries == r2.entries and p1 == p2))

    thin, _widest = is_thin_family(fam)
    out.append(ReportLine("thin-family", iid, thin))

    for res in verify_ts_duality(fam):
        out.append(ReportLine(res.check_id, iid, res.passed, res.witness))

    out.append(_circuit_kernel_check(iid, fam))

    out.extend(_matroid_suite(iid, vector_matroid(fam)))
    return out


def _circuit_kernel_check(iid: str, fam: VectorFamily) -> ReportLine:
    m = vector_matroid(fam)
    circuits = m.circuits()
    for o in circuits:
        cols = list(bits(o))
        vecs = kernel_basis(fam.matrix.submatrix_columns(cols))
        if len(vecs) != 1 or support(vecs[0]) != (1 << len(cols)) - 1:
            return ReportLine(
                "circuit-kernel", iid, False,
                f"circuit {format_set(o)} is not a minimal full-support kernel")
    # over a finite field, enumerate the whole kernel and compare minimal
    # supports with the circuit list; over Q the space is infinite and the
    # per-circuit direction above is the checkable half
    field = fam.field
    kb = kernel_basis(fam.matrix)
    if field.is_prime_field and field.p ** len(kb) <= KERNEL_ENUM_LIMIT:
        supports = set()
        ncols = fam.matrix.cols
        for coeffs in product(range(field.p), repeat=len(kb)):
            vec = [field.zero()] * ncols
            for a, basis_vec in zip(coeffs, kb):
                if a:
                    for j in range(ncols):
                        vec[j] = field.add(vec[j], field.mul(a, basis_vec[j]))
            sup = support(vec)
            if sup:
                supports.add(sup)
        minimal = {s for s in supports if not any(t != s and t & ~s == 0 for t in supports)}
        if minimal != set(circuits):
            return ReportLine(
                "circuit-kernel", iid, False,
                "minimal kernel supports differ from the circuit list")
    return ReportLine("circuit-kernel", iid, True)


def _graph_suite(iid: str, g: MultiGraph) -> list[ReportLine]:
    out = []
    cyc = cycle_matroid(g)
    bond = bond_matroid(g)

    for fld, tag in GRAPH_FIELDS:
        ok, diff = verify_graphic_representable(g, fld)
        out.append(ReportLine(
            f"graphic-rep-{tag}", iid, ok,
            "" if ok else f"disagree at {format_set(diff)}"))

    if g.edge_count <= 10:
        ok = bond.circuits() == minimal_edge_cuts(g)
        out.append(ReportLine(
            "bond-cuts", iid, ok,
            "" if ok else "bond circuits differ from minimal cuts"))

    diff = oracle_difference(bond.dual(), cyc)
    out.append(ReportLine(
        "bond-dual", iid, diff is None,
        "" if diff is None else f"disagree at {format_set(diff)}"))

    out.extend(_matroid_suite(f"{iid}/cycle", cyc))
    out.extend(_matroid_suite(f"{iid}/bond", bond))
    return out


def _vandermonde(r: int, n: int) -> Matrix:
    rows = tuple(tuple(Q.coerce((j + 1) ** i) for j in range(n)) for i in range(r))
    return Matrix(Q, r, n, rows)


def _instance_lines(inst: Instance) -> list[ReportLine]:
    if inst.kind == "matroid":
        r, n = inst.meta
        vander = LinearMatroid(_vandermonde(r, n))
        return _matroid_suite(inst.instance_id, inst.value, vander=vander)
    if inst.kind == "family":
        return _family_suite(inst.instance_id, inst.value)
    if inst.kind == "graph":
        return _graph_suite(inst.instance_id, inst.value)
    raise ValueError(f"unknown instance kind {inst.kind}")


def verify_corpus(spec: CorpusSpec) -> list[ReportLine]:
    """All checks over the generated corpus, in canonical order."""
    lines = _global_checks()
    for inst in generate_corpus(spec):
        lines.extend(_instance_lines(inst))
    return lines
