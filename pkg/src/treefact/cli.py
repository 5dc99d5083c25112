"""Command-line interface: enumerate, convert, verify, orbits, export.

Output is newline-delimited canonical JSON (sorted keys, compact separators)
on standard output; diagnostics go to standard error.  Identical invocations
produce byte-identical output.  Exit codes: 0 success / all checks pass,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator

from .affine import DomainError, InvariantViolation
from .checks import run_suite
from .factorization import Factorization
from .subwords import (Subword, enumerate_distinguished, enumerate_maximal,
                       orbit_sizes, skip_reflections)
from .trees import (LabeledTree, PlaneTree, all_labeled_trees,
                    cyclic_embedding, export_dot, export_tikz,
                    factorization_from_tree, parse_edge_list,
                    subword_from_tree, tree_from_factorization,
                    tree_from_subword)

COST_TABLE = """\
documented bounds (costs grow quickly with n):
  enumerate trees                    2 <= n <= 7   (n^(n-2) records; n=7 gives 16807)
  enumerate maximal-subwords         2 <= n <= 6   (1, 3, 16, 125, 1296 records)
  enumerate cyclic-factorizations    2 <= n <= 6   (same census as maximal subwords)
  enumerate distinguished-subwords   2 <= n <= 5   (1, 4, 45, 1331 records)
  verify --suite ...                 2 <= n <= 6   (n=6 takes tens of seconds; sub-checks
                                                    needing full distinguished enumeration
                                                    report SKIP above n=5)
  orbits                             2 <= n <= 5   (rotation orbits of maximal subwords)"""

ENUMERATE_BOUNDS = {
    "trees": 7,
    "maximal-subwords": 6,
    "cyclic-factorizations": 6,
    "distinguished-subwords": 5,
}

VERIFY_BOUND = 6
ORBITS_BOUND = 5


def _dumps(record) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def _check_bound(parser: argparse.ArgumentParser, n: int, bound: int,
                 what: str) -> None:
    if n < 2 or n > bound:
        parser.error(
            f"{what} supports 2 <= n <= {bound}, got n={n}\n{COST_TABLE}"
        )


# ---------------------------------------------------------------------------
# Record parsing (convert / export inputs)
# ---------------------------------------------------------------------------


def _read_input(args) -> str:
    if args.file:
        with open(args.file, "r", encoding="utf-8") as fh:
            return fh.read()
    return sys.stdin.read()


def _parse_tree_record(text: str, edge_list: bool, n_override: int | None
                       ) -> PlaneTree:
    """A plane tree from a JSON record, a bare labeled-tree record, or an
    edge list.  Bare labeled trees get their canonical cyclic embedding."""
    if edge_list:
        return cyclic_embedding(parse_edge_list(text, n_override))
    data = json.loads(text)
    if not isinstance(data, dict):
        raise DomainError("expected a JSON object describing a tree")
    if "rotation" in data:
        return PlaneTree.from_dict(data)
    if "edges" in data:
        if "n" not in data:
            raise DomainError("labeled-tree record needs an \"n\" field")
        return cyclic_embedding(LabeledTree.from_dict(data))
    raise DomainError(
        "tree record needs \"edges\" (labeled tree) or \"rotation\" "
        "(plane tree)"
    )


def _parse_subword_record(text: str) -> Subword:
    data = json.loads(text)
    if not isinstance(data, dict) or "indicator" not in data:
        raise DomainError("expected a JSON object with an \"indicator\" field")
    return Subword.from_dict(data)


def _parse_factorization_record(text: str) -> Factorization:
    data = json.loads(text)
    if not isinstance(data, dict) or "refs" not in data:
        raise DomainError("expected a JSON object with a \"refs\" field")
    return Factorization.from_dict(data)


def _canonical_factorization(fact: Factorization) -> Factorization:
    return Factorization(fact.n, fact.canonical_refs())


# ---------------------------------------------------------------------------
# Text renderings
# ---------------------------------------------------------------------------


def _tree_text(pt: PlaneTree) -> str:
    edges = " ".join(f"{a}-{b}" for a, b in pt.tree().edges)
    rots = " ".join(
        f"{v}:({','.join(map(str, pt.rotation(v)))})"
        for v in range(1, pt.n + 1))
    return (f"n={pt.n} edges[{edges}] rotations[{rots}] "
            f"marked={pt.marked[0]}-{pt.marked[1]}")


def _subword_text(u: Subword) -> str:
    bits = "".join(map(str, u.indicator))
    skips = ",".join(map(str, u.skips()))
    return f"n={u.n} indicator={bits} skips=[{skips}]"


def _factorization_text(fact: Factorization) -> str:
    refs = " ".join(str(r) for r in fact.canonical_refs())
    return f"n={fact.n} {refs}"


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_enumerate(args, parser) -> int:
    n = args.n
    _check_bound(parser, n, ENUMERATE_BOUNDS[args.kind],
                 f"enumerate {args.kind}")
    out = sys.stdout

    def records() -> Iterator[tuple[dict, str]]:
        if args.kind == "trees":
            for tree in all_labeled_trees(n):
                pt = cyclic_embedding(tree)
                yield pt.to_dict(), _tree_text(pt)
        elif args.kind == "maximal-subwords":
            for u in enumerate_maximal(n, jobs=args.jobs):
                yield u.to_dict(), _subword_text(u)
        elif args.kind == "distinguished-subwords":
            for u in enumerate_distinguished(n, jobs=args.jobs):
                yield u.to_dict(), _subword_text(u)
        else:  # cyclic-factorizations
            for u in enumerate_maximal(n, jobs=args.jobs):
                fact = _canonical_factorization(skip_reflections(u))
                yield fact.to_dict(), _factorization_text(fact)

    emitted = 0
    for record, text in records():
        if args.limit is not None and emitted >= args.limit:
            break
        out.write((text if args.format == "text" else _dumps(record)) + "\n")
        emitted += 1
    return 0


def _cmd_convert(args, parser) -> int:
    text = _read_input(args)
    direction = args.direction
    try:
        if direction == "tree-to-subword":
            pt = _parse_tree_record(text, args.edge_list, args.n)
            u = subword_from_tree(pt)
            if args.check_roundtrip and tree_from_subword(u) != pt:
                print("roundtrip failure: subword does not convert back "
                      "to the input tree", file=sys.stderr)
                return 1
            print(_subword_text(u) if args.format == "text"
                  else _dumps(u.to_dict()))
        elif direction == "subword-to-tree":
            u = _parse_subword_record(text)
            pt = tree_from_subword(u)
            if args.check_roundtrip and subword_from_tree(pt) != u:
                print("roundtrip failure: tree does not convert back to "
                      "the input subword", file=sys.stderr)
                return 1
            print(_tree_text(pt) if args.format == "text"
                  else _dumps(pt.to_dict()))
        elif direction == "tree-to-factorization":
            pt = _parse_tree_record(text, args.edge_list, args.n)
            fact = _canonical_factorization(factorization_from_tree(pt))
            if args.check_roundtrip and tree_from_factorization(fact) != pt:
                print("roundtrip failure: factorization does not convert "
                      "back to the input tree", file=sys.stderr)
                return 1
            print(_factorization_text(fact) if args.format == "text"
                  else _dumps(fact.to_dict()))
        else:  # factorization-to-tree
            fact = _parse_factorization_record(text)
            pt = tree_from_factorization(fact)
            if args.check_roundtrip:
                back = factorization_from_tree(pt)
                if back.canonical_refs() != fact.canonical_refs():
                    print("roundtrip failure: tree does not convert back "
                          "to the input factorization", file=sys.stderr)
                    return 1
            print(_tree_text(pt) if args.format == "text"
                  else _dumps(pt.to_dict()))
    except (DomainError, json.JSONDecodeError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    return 0


def _cmd_verify(args, parser) -> int:
    _check_bound(parser, args.n, VERIFY_BOUND, "verify")
    results = run_suite(args.suite, args.n, jobs=args.jobs)
    failed = False
    for res in results:
        print(f"{res.status} {res.name}: {res.detail}")
        if res.status == "FAIL":
            failed = True
            if res.counterexample is not None:
                print(f"counterexample: {_dumps(res.counterexample)}",
                      file=sys.stderr)
    passed = sum(1 for r in results if r.status == "PASS")
    skipped = sum(1 for r in results if r.status == "SKIP")
    summary = f"{passed} passed"
    if skipped:
        summary += f", {skipped} skipped"
    fails = sum(1 for r in results if r.status == "FAIL")
    if fails:
        summary += f", {fails} FAILED"
    print(summary)
    return 1 if failed else 0


def _cmd_orbits(args, parser) -> int:
    _check_bound(parser, args.n, ORBITS_BOUND, "orbits")
    sizes = orbit_sizes(args.n, jobs=args.jobs)
    multiset: dict[int, int] = {}
    for s in sizes:
        multiset[s] = multiset.get(s, 0) + 1
    if args.format == "json":
        print(_dumps({
            "n": args.n,
            "orbit_sizes": sorted(sizes),
            "orbits": len(sizes),
            "total": sum(sizes),
        }))
    else:
        print(f"n={args.n}: {len(sizes)} rotation orbits on "
              f"{sum(sizes)} maximal subwords")
        for size in sorted(multiset):
            print(f"  {multiset[size]} orbit(s) of size {size}")
    return 0


def _cmd_export(args, parser) -> int:
    text = _read_input(args)
    try:
        pt = _parse_tree_record(text, args.edge_list, args.n)
    except (DomainError, json.JSONDecodeError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    source = export_dot(pt) if args.format == "dot" else export_tikz(pt)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(source)
    else:
        sys.stdout.write(source)
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treefact",
        description="Exact combinatorics of labeled trees, cyclic "
                    "reflection factorizations, and maximal subwords, with "
                    "agreeing polynomial point counts.",
        epilog=COST_TABLE,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser(
        "enumerate", help="stream objects as newline-delimited JSON")
    p_enum.add_argument("kind", choices=sorted(ENUMERATE_BOUNDS))
    p_enum.add_argument("--n", type=int, required=True, help="rank (>= 2)")
    p_enum.add_argument("--format", choices=("json", "text"), default="json")
    p_enum.add_argument("--jobs", type=int, default=1,
                        help="worker processes for the subword search")
    p_enum.add_argument("--limit", type=int, default=None,
                        help="emit at most this many records")

    p_conv = sub.add_parser(
        "convert", help="convert one record between representations")
    p_conv.add_argument("--direction", required=True, choices=(
        "tree-to-subword", "subword-to-tree",
        "tree-to-factorization", "factorization-to-tree"))
    p_conv.add_argument("--file", default=None,
                        help="input file (default: standard input)")
    p_conv.add_argument("--edge-list", action="store_true",
                        help="input is an 'a b' edge list, not JSON "
                             "(tree inputs only)")
    p_conv.add_argument("--n", type=int, default=None,
                        help="vertex count for --edge-list input")
    p_conv.add_argument("--check-roundtrip", action="store_true",
                        help="verify the inverse conversion returns "
                             "the input")
    p_conv.add_argument("--format", choices=("json", "text"), default="json")

    p_verify = sub.add_parser(
        "verify", help="run a named check suite; exit 0 iff all pass")
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument("--suite", default="all", choices=(
        "bijections", "lemmas", "counts", "polynomials", "conjecture",
        "all"))
    p_verify.add_argument("--jobs", type=int, default=1)

    p_orbits = sub.add_parser(
        "orbits", help="rotation-orbit sizes of the maximal subwords "
                       "(exploratory)")
    p_orbits.add_argument("--n", type=int, required=True)
    p_orbits.add_argument("--jobs", type=int, default=1)
    p_orbits.add_argument("--format", choices=("json", "text"),
                          default="text")

    p_export = sub.add_parser(
        "export", help="render a tree record as DOT or TikZ source")
    p_export.add_argument("--format", required=True, choices=("dot", "tikz"))
    p_export.add_argument("--file", default=None,
                          help="input file (default: standard input)")
    p_export.add_argument("--edge-list", action="store_true",
                          help="input is an 'a b' edge list, not JSON")
    p_export.add_argument("--n", type=int, default=None,
                          help="vertex count for --edge-list input")
    p_export.add_argument("--out", default=None,
                          help="output file (default: standard output)")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "enumerate":
            return _cmd_enumerate(args, parser)
        if args.command == "convert":
            return _cmd_convert(args, parser)
        if args.command == "verify":
            return _cmd_verify(args, parser)
        if args.command == "orbits":
            return _cmd_orbits(args, parser)
        return _cmd_export(args, parser)
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
