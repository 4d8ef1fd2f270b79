"""Command-line surface: file ingestion, one-shot computations, verify driver.

Sources are auto-detected by their first line: ``field`` starts a matrix,
``ground`` a set system, ``vertices`` a graph.  Exit codes: 0 when everything
passes, 1 when any check line reports FAIL, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .corpus import CorpusSpec
from .errors import MatroidLabError, ParseError
from .graphs import bond_matroid, cycle_matroid, parse_graph
from .linalg import format_matrix, parse_matrix
from .matroids import (
    ExplicitMatroid,
    LinearMatroid,
    Matroid,
    bits,
    check_axioms,
    format_set,
    format_set_system,
    parse_set,
    parse_set_system,
    submasks,
)
from .representation import (
    VectorFamily,
    dual_representation,
    is_thin_family,
    thin_sums_system,
    vector_matroid,
)
from .spaces import SpaceOperator, is_exchange, is_idempotent, parse_operator_table
from .verify import render_report, verify_corpus

FIELD_GENERATORS = {
    "gf2": "random-matrix-gf2",
    "gf3": "random-matrix-gf3",
    "q": "random-matrix-q",
}


def _read(path: str) -> str:
    return Path(path).read_text()


def _detect(text: str) -> str:
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    head = first.split()[0] if first.split() else ""
    if head == "field":
        return "matrix"
    if head == "ground":
        return "setsystem"
    if head == "vertices":
        return "graph"
    raise ParseError(f"unrecognized file format (first line {first!r})")


def load_matroid(path: str) -> Matroid:
    """Load any of the three source formats as a matroid."""
    text = _read(path)
    kind = _detect(text)
    if kind == "matrix":
        return LinearMatroid(parse_matrix(text))
    if kind == "setsystem":
        ground, family = parse_set_system(text)
        return ExplicitMatroid(ground, family)
    return cycle_matroid(parse_graph(text))


def _emit_set_system(m: Matroid, reindex: bool = False) -> None:
    live = m.live
    if reindex:
        order = list(bits(live))
        fam = []
        for s in submasks(live):
            if m.is_independent(s):
                fam.append(sum(1 << order.index(e) for e in bits(s)))
        print(format_set_system(len(order), fam), end="")
    else:
        fam = [s for s in submasks(live) if m.is_independent(s)]
        print(format_set_system(m.ground.size, fam), end="")


def _cmd_axioms(args) -> int:
    text = _read(args.file)
    if _detect(text) != "setsystem":
        raise ParseError("the axioms command expects a set-system file")
    ground, family = parse_set_system(text)
    report = check_axioms(ground, family)
    for name in ("i1", "i2", "i3", "im"):
        check = getattr(report, name)
        if check.passed:
            print(f"{name} PASS")
        else:
            wit = " ".join(format_set(w) for w in check.witness or ())
            print(f"{name} FAIL {wit}".rstrip())
    return 0 if report.all_pass else 1


def _cmd_circuits(args) -> int:
    m = load_matroid(args.source)
    for o in m.circuits():
        print(f"circuit {format_set(o)}")
    return 0


def _cmd_bases(args) -> int:
    m = load_matroid(args.source)
    for b in m.bases():
        print(f"base {format_set(b)}")
    return 0


def _cmd_dual(args) -> int:
    _emit_set_system(load_matroid(args.source).dual())
    return 0


def _cmd_minor(args) -> int:
    m = load_matroid(args.source)
    contracted = parse_set(args.contract) if args.contract else 0
    deleted = parse_set(args.delete) if args.delete else 0
    _emit_set_system(m.minor(contracted, deleted), reindex=True)
    return 0


def _cmd_closure(args) -> int:
    m = load_matroid(args.source)
    op = SpaceOperator.from_matroid(m)
    print(f"closure {format_set(op(parse_set(args.set)))}")
    return 0


def _cmd_ie_check(args) -> int:
    text = _read(args.source)
    kind = _detect(text)
    if kind == "setsystem" and any(
        ln.strip().startswith("map") for ln in text.splitlines()[1:]
    ):
        op = parse_operator_table(text)
    else:
        op = SpaceOperator.from_matroid(load_matroid(args.source))
    idem = is_idempotent(op)
    exch = is_exchange(op)
    print(f"idempotent {'PASS' if idem else 'FAIL'}")
    print(f"exchange {'PASS' if exch else 'FAIL'}")
    print(f"ie {'PASS' if idem and exch else 'FAIL'}")
    return 0 if idem and exch else 1


def _cmd_tame(args) -> int:
    t = load_matroid(args.source).tameness()
    print(f"max-intersection {t.max_intersection}")
    print(f"all-finite {'true' if t.all_finite else 'false'}")
    return 0


def _cmd_rep(args) -> int:
    m = LinearMatroid(parse_matrix(_read(args.file)))
    print(f"ground {m.ground.size}")
    print(f"rank {m.rank()}")
    for o in m.circuits():
        print(f"circuit {format_set(o)}")
    return 0


def _cmd_ts(args) -> int:
    fam = VectorFamily.from_matrix(parse_matrix(_read(args.file)))
    ts = thin_sums_system(fam)
    _thin, widest = is_thin_family(fam)
    print(f"ground {fam.ground.size}")
    print(f"max-row-support {widest}")
    for o in ts.circuits():
        print(f"circuit {format_set(o)}")
    from .matroids import oracle_difference

    diff = oracle_difference(ts, vector_matroid(fam))
    print(f"collapse {'PASS' if diff is None else f'FAIL {format_set(diff)}'}")
    return 0 if diff is None else 1


def _cmd_dualrep(args) -> int:
    fam = VectorFamily.from_matrix(parse_matrix(_read(args.file)))
    print(format_matrix(dual_representation(fam).matrix), end="")
    return 0


def _cmd_graph_cycle(args) -> int:
    _emit_set_system(cycle_matroid(parse_graph(_read(args.file))))
    return 0


def _cmd_graph_bond(args) -> int:
    _emit_set_system(bond_matroid(parse_graph(_read(args.file))))
    return 0


def _cmd_verify(args) -> int:
    tokens = [t.strip() for t in args.fields.split(",") if t.strip()]
    bad = [t for t in tokens if t not in FIELD_GENERATORS]
    if bad or not tokens:
        print(f"error: unknown fields {','.join(bad) or '(none)'}", file=sys.stderr)
        return 2
    generators = ("explicit-uniform",) + tuple(
        FIELD_GENERATORS[t] for t in tokens
    ) + ("random-graph",)
    spec = CorpusSpec(
        seed=args.seed, count=args.count,
        max_ground=args.max_ground, generators=generators,
    )
    lines = verify_corpus(spec)
    sys.stdout.write(render_report(lines))
    return 0 if all(ln.ok for ln in lines) else 1


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matroidlab",
        description="Exact workbench for finite matroids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("axioms", help="check (I1)(I2)(I3)(IM) for a set system")
    p.add_argument("file")
    p.set_defaults(func=_cmd_axioms)

    p = sub.add_parser("circuits", help="list the circuits of a source")
    p.add_argument("source")
    p.set_defaults(func=_cmd_circuits)

    p = sub.add_parser("bases", help="list the bases of a source")
    p.add_argument("source")
    p.set_defaults(func=_cmd_bases)

    p = sub.add_parser("dual", help="emit the dual matroid as a set system")
    p.add_argument("source")
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("minor", help="contract/delete and emit the minor (re-indexed)")
    p.add_argument("source")
    p.add_argument("--contract", default="", metavar="I,J")
    p.add_argument("--delete", default="", metavar="K")
    p.set_defaults(func=_cmd_minor)

    p = sub.add_parser("closure", help="closure of a set in the source matroid")
    p.add_argument("source")
    p.add_argument("--set", required=True, metavar="I,J")
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("ie-check", help="idempotence/exchange of an operator or closure")
    p.add_argument("source", help="matroid source or operator table file")
    p.set_defaults(func=_cmd_ie_check)

    p = sub.add_parser("tame", help="largest circuit-cocircuit intersection")
    p.add_argument("source")
    p.set_defaults(func=_cmd_tame)

    p = sub.add_parser("rep", help="vector matroid of a matrix file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_rep)

    p = sub.add_parser("ts", help="thin sums system of a matrix file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_ts)

    p = sub.add_parser("dualrep", help="dual representation of a matrix file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_dualrep)

    p = sub.add_parser("graph-cycle", help="cycle matroid of a graph file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_graph_cycle)

    p = sub.add_parser("graph-bond", help="bond matroid of a graph file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_graph_bond)

    p = sub.add_parser("verify", help="run every invariant suite over a corpus")
    p.add_argument("target", choices=["all"])
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--max-ground", type=int, default=8, dest="max_ground")
    p.add_argument("--fields", default="gf2,gf3,q")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (MatroidLabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
