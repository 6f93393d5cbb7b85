"""Batch command-line front end.

One action per invocation: build cobweb posets and emit their matrices or
DOT drawings, count Hasse paths, join/compose relations from JSON files,
run Ferrers and dimension-2 checks, and decompose n-ary relations into
binary chains.  Exit status 0 on success, 1 on domain errors (message on
stderr), 2 on usage errors.

The environment variable COBWEB_MAX_VERTICES (default 10000) caps the
size of any constructed digraph.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import boolmat, cobweb, digraph, ferrers, njoin
from .fseq import FSequence

DEFAULT_MAX_VERTICES = 10000


class DomainError(Exception):
    """Invalid input or failed check; maps to exit status 1."""


def _max_vertices() -> int:
    raw = os.environ.get("COBWEB_MAX_VERTICES")
    if raw is None:
        return DEFAULT_MAX_VERTICES
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"COBWEB_MAX_VERTICES is not an integer: {raw!r}")


def _check_size(levels: Sequence[int]) -> None:
    cap = _max_vertices()
    total = sum(levels)
    if total > cap:
        raise DomainError(
            f"construction of {total} vertices exceeds COBWEB_MAX_VERTICES={cap}"
        )


def _load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise DomainError(f"{path} is not valid JSON: {exc}")


def _load_digraph(path: str) -> digraph.GradedDigraph:
    d = digraph.digraph_from_json(_load_json(path))
    _check_size(d.levels)
    return d


def _resolve_digraph(args: argparse.Namespace) -> digraph.GradedDigraph:
    """A graded digraph from --from, or a cobweb from --seq/--levels."""
    if getattr(args, "from_path", None):
        return _load_digraph(args.from_path)
    return _build_cobweb(args).hasse


def _build_cobweb(args: argparse.Namespace) -> cobweb.CobwebPoset:
    if not args.seq:
        raise DomainError("either --seq or --from is required")
    seq = FSequence.parse(args.seq)
    if seq.kind == "explicit":
        sizes = list(seq.values)
        if args.levels is not None and args.levels != len(sizes):
            raise DomainError(
                f"--levels {args.levels} disagrees with {len(sizes)} explicit sizes"
            )
    else:
        if args.levels is None:
            raise DomainError(f"--levels is required with --seq {args.seq}")
        from .fseq import level_sizes

        sizes = level_sizes(seq, args.levels)
    _check_size(sizes)
    return cobweb.build_cobweb(sizes)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# -- subcommand handlers -----------------------------------------------------

def _cmd_build(args) -> int:
    p = _build_cobweb(args)
    _emit(_json_text(digraph.digraph_to_json(p.hasse)), args.out)
    return 0


def _cmd_hasse(args) -> int:
    d = _resolve_digraph(args)
    if args.format == "json":
        _emit(_json_text(digraph.digraph_to_json(d)), args.out)
    else:
        _emit(boolmat.to_text(digraph.global_adjacency(d)), args.out)
    return 0


def _cmd_zeta(args) -> int:
    d = _resolve_digraph(args)
    z = digraph.transitive_closure(d).leq
    if args.format == "json":
        _emit(_json_text([[int(x) for x in row] for row in z]), args.out)
    else:
        _emit(boolmat.to_text(z), args.out)
    return 0


def _cmd_dot(args) -> int:
    d = _resolve_digraph(args)
    _emit(digraph.to_dot(d, rank_by_level=True), args.out)
    return 0


def _cmd_paths(args) -> int:
    d = _resolve_digraph(args)
    count = cobweb.count_paths(d, args.x, args.y)
    _emit(f"{count}\n", args.out)
    return 0


def _cmd_join(args) -> int:
    left = njoin.relation_from_json(_load_json(args.left))
    right = njoin.relation_from_json(_load_json(args.right))
    joined = njoin.njoin_relations([left, right])
    _emit(_json_text(njoin.nary_to_json(joined)), args.out)
    return 0


def _cmd_compose(args) -> int:
    left = njoin.relation_from_json(_load_json(args.left))
    right = njoin.relation_from_json(_load_json(args.right))
    composed = njoin.compose_relations(left, right)
    _emit(_json_text(njoin.relation_to_json(composed)), args.out)
    return 0


def _cmd_check_ferrers(args) -> int:
    d = _resolve_digraph(args)
    result = ferrers.chain_is_ferrers(list(d.blocks))
    lines = []
    status = 0
    if result.ok:
        lines.append("OK: all blocks Ferrers")
    else:
        status = 1
        for k, witness in result.failures:
            lines.append(f"FAIL: block {k} {witness.describe()}")
    strict_ok = ferrers.strict_order_is_ferrers(digraph.transitive_closure(d).leq)
    if strict_ok:
        lines.append("OK: strict order matrix Ferrers")
    else:
        status = 1
        lines.append("FAIL: strict order matrix not Ferrers")
    _emit("".join(ln + "\n" for ln in lines), args.out)
    return status


def _cmd_check_dim2(args) -> int:
    d = _resolve_digraph(args)
    if cobweb.verify_dim2(d):
        _emit("OK: realizer of two linear orders verified\n", args.out)
        return 0
    _emit("FAIL: linear-order intersection differs from the partial order\n", args.out)
    return 1


def _cmd_decompose(args) -> int:
    t = njoin.nary_from_json(_load_json(args.from_path))
    try:
        chain = njoin.project_chain(t)
    except ValueError as exc:
        raise DomainError(str(exc))
    payload = {
        "decomposable": njoin.is_join_decomposable(t),
        "links": [njoin.relation_to_json(r) for r in chain.links],
    }
    _emit(_json_text(payload), args.out)
    return 0


def _cmd_fibtree(args) -> int:
    if args.levels is None:
        raise DomainError("--levels is required for fibtree")
    d = cobweb.fibonacci_tree(args.levels)
    _check_size(d.levels)
    if args.format == "dot":
        _emit(digraph.to_dot(d, rank_by_level=True), args.out)
    elif args.format == "text":
        _emit(boolmat.to_text(digraph.global_adjacency(d)), args.out)
    else:
        _emit(_json_text(digraph.digraph_to_json(d)), args.out)
    return 0


# -- parser ------------------------------------------------------------------

def _add_source_flags(sub: argparse.ArgumentParser, with_from: bool = True) -> None:
    sub.add_argument("--seq", help="sequence spec, e.g. naturals | fibonacci | gaussian:2 | constant:3 | explicit:1,2,3")
    sub.add_argument("--levels", type=int, help="number of levels")
    if with_from:
        sub.add_argument("--from", dest="from_path", metavar="PATH", help="load a digraph JSON file instead")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cobweb",
        description="Cobweb posets, natural joins, and Boolean matrix checks.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("build", help="build a cobweb and emit digraph JSON")
    _add_source_flags(sub, with_from=False)
    sub.add_argument("--out")
    sub.set_defaults(handler=_cmd_build)

    sub = subs.add_parser("hasse", help="emit the Hasse adjacency matrix")
    _add_source_flags(sub)
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--out")
    sub.set_defaults(handler=_cmd_hasse)

    sub = subs.add_parser("zeta", help="emit the zeta (incidence) matrix")
    _add_source_flags(sub)
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--out")
    sub.set_defaults(handler=_cmd_zeta)

    sub = subs.add_parser("dot", help="emit a DOT drawing of the Hasse digraph")
    _add_source_flags(sub)
    sub.add_argument("--out")
    sub.set_defaults(handler=_cmd_dot)

    sub = subs.add_parser("paths", help="count directed Hasse paths between two vertices")
    _add_source_flags(sub)
    sub.add_argument("--x", type=int, required=True, help="source vertex (1-based)")
    sub.add_argument("--y", type=int, required=True, help="target vertex (1-based)")
    sub.add_argument("--out")
    sub.set_defaults(handler=_cmd_paths)

    sub = subs.add_parser("join", help="natural join of two relation JSON files")
    sub.add_argument("--left", required=True)
    sub.add_argument("--right", required=True)
    sub.add_argument("--out")
    sub.set_defaults(handler=_cmd_join)

    sub = subs.add_parser("compose", help="compose two relation JSON files")
    sub.add_argument("--left", required=True)
    sub.add_argument("--right", required=True)
    sub.add_argument("--out")
    sub.set_defaults(handler=_cmd_compose)

    sub = subs.add_parser("check-ferrers", help="blockwise and strict-order Ferrers checks")
    _add_source_flags(sub)
    sub.add_argument("--out")
    sub.set_defaults(handler=_cmd_check_ferrers)

    sub = subs.add_parser("check-dim2", help="verify the two-linear-order realizer")
    _add_source_flags(sub)
    sub.add_argument("--out")
    sub.set_defaults(handler=_cmd_check_dim2)

    sub = subs.add_parser("decompose", help="project an n-ary relation JSON into a binary chain")
    sub.add_argument("--from", dest="from_path", metavar="PATH", required=True)
    sub.add_argument("--out")
    sub.set_defaults(handler=_cmd_decompose)

    sub = subs.add_parser("fibtree", help="emit the rabbit-genealogy tree digraph")
    sub.add_argument("--levels", type=int, required=True)
    sub.add_argument("--format", choices=("json", "text", "dot"), default="json")
    sub.add_argument("--out")
    sub.set_defaults(handler=_cmd_fibtree)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, IndexError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
