"""Command-line interface.

Commands read profile or graph files ('-' for stdin) and print reports to
stdout. Vote indices in reports are 1-based; graph vertex ids stay 0-based
to match the graph file format. Exit codes: 0 positive verdict, 1 negative
verdict, 2 usage or input errors, 3 budget exhausted.

--json swaps the human report for one JSON object with a fixed key set:
command, domain, verdict, parts, witness, order, tree, stats (unused slots
are null). stats holds distinct_votes, dangerous_triples and case, filled
for the commands that compute them.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .domains import DomainId, is_member
from .errors import PrefError
from .gstree import (
    CaterpillarOrder,
    build_gs_tree,
    format_tree,
    recognize_caterpillar,
)
from .hardness import clique_kpartition, parse_graph, reduce_to_profile
from .minors import MinorWitness
from .oracle import (
    BUDGET_EXCEEDED,
    DEFAULT_BUDGET,
    MODELS,
    GenParams,
    bruteforce_kpartition,
    generate,
)
from .partition2 import dangerous_triples, partition2
from .profiles import Profile, dedupe, emit_profile, parse_profile


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _witness_json(p: Profile, w: MinorWitness) -> dict:
    return {
        "votes": [i + 1 for i in w.vote_indices],
        "candidates": [p.names[c] for c in w.candidates],
        "pattern": w.source,
    }


def _witness_line(p: Profile, w: MinorWitness) -> str:
    return "witness: votes %s candidates %s pattern %s" % (
        ",".join(str(i + 1) for i in w.vote_indices),
        ",".join(p.names[c] for c in w.candidates),
        w.source,
    )


def _report(
    as_json: bool,
    command: str,
    plain: list[str],
    domain: str | None = None,
    verdict: str | None = None,
    parts: list[list[int]] | None = None,
    witness: dict | None = None,
    order: list[str] | None = None,
    tree: str | None = None,
    stats: dict | None = None,
) -> None:
    if as_json:
        print(
            json.dumps(
                {
                    "command": command,
                    "domain": domain,
                    "verdict": verdict,
                    "parts": parts,
                    "witness": witness,
                    "order": order,
                    "tree": tree,
                    "stats": stats,
                }
            )
        )
    else:
        for line in plain:
            print(line)


def _cmd_recognize(args: argparse.Namespace) -> int:
    p = parse_profile(_read_text(args.file))
    w = is_member(p, args.domain)
    stats = {
        "distinct_votes": len(dedupe(p).representative.votes),
        "dangerous_triples": None,
        "case": None,
    }
    if w is None:
        _report(
            args.json,
            "recognize",
            ["MEMBER"],
            domain=args.domain,
            verdict="MEMBER",
            stats=stats,
        )
        return 0
    _report(
        args.json,
        "recognize",
        ["NON-MEMBER", _witness_line(p, w)],
        domain=args.domain,
        verdict="NON-MEMBER",
        witness=_witness_json(p, w),
        stats=stats,
    )
    return 1


def _cmd_explain(args: argparse.Namespace) -> int:
    p = parse_profile(_read_text(args.file))
    if args.domain == "gs":
        w = is_member(p, DomainId.GS)
        if w is None:
            tree = format_tree(build_gs_tree(p), p.names)
            _report(
                args.json,
                "explain",
                [tree],
                domain="gs",
                verdict="MEMBER",
                tree=tree,
            )
            return 0
        _report(
            args.json,
            "explain",
            ["NON-MEMBER", _witness_line(p, w)],
            domain="gs",
            verdict="NON-MEMBER",
            witness=_witness_json(p, w),
        )
        return 1
    got = recognize_caterpillar(p)
    if isinstance(got, CaterpillarOrder):
        names = [p.names[c] for c in got.order]
        _report(
            args.json,
            "explain",
            [",".join(names)],
            domain="catgs",
            verdict="MEMBER",
            order=names,
        )
        return 0
    _report(
        args.json,
        "explain",
        ["NON-MEMBER", _witness_line(p, got)],
        domain="catgs",
        verdict="NON-MEMBER",
        witness=_witness_json(p, got),
    )
    return 1


def _part_lines(parts: Sequence[Sequence[int]], one_based: bool) -> list[str]:
    shift = 1 if one_based else 0
    return [" ".join(str(i + shift) for i in part) for part in parts]


def _cmd_partition2(args: argparse.Namespace) -> int:
    p = parse_profile(_read_text(args.file))
    rep = dedupe(p).representative
    records = dangerous_triples(rep, args.domain)
    if any(sum(1 for f in rec.member_flags if not f) >= 2 for rec in records):
        case = "reject"
    elif any(all(rec.member_flags) for rec in records):
        case = "case2"
    else:
        case = "case1"
    stats = {
        "distinct_votes": rep.n,
        "dangerous_triples": len(records),
        "case": case,
    }
    bip = partition2(p, args.domain)
    if bip is None:
        _report(
            args.json,
            "partition2",
            ["NO"],
            domain=args.domain,
            verdict="NO",
            stats=stats,
        )
        return 1
    parts = [list(bip.part1), list(bip.part2)]
    _report(
        args.json,
        "partition2",
        ["YES"] + _part_lines(parts, one_based=True),
        domain=args.domain,
        verdict="YES",
        parts=[[i + 1 for i in part] for part in parts],
        stats=stats,
    )
    return 0


def _cmd_partition_bf(args: argparse.Namespace) -> int:
    p = parse_profile(_read_text(args.file))
    stats = {
        "distinct_votes": len(dedupe(p).representative.votes),
        "dangerous_triples": None,
        "case": None,
    }
    got = bruteforce_kpartition(p, args.domain, args.k, args.budget)
    if got is BUDGET_EXCEEDED:
        _report(
            args.json,
            "partition-bf",
            ["BUDGET-EXCEEDED"],
            domain=args.domain,
            verdict="BUDGET-EXCEEDED",
            stats=stats,
        )
        return 3
    if got is None:
        _report(
            args.json,
            "partition-bf",
            ["NO"],
            domain=args.domain,
            verdict="NO",
            stats=stats,
        )
        return 1
    parts = [list(grp) for grp in got.groups()]
    _report(
        args.json,
        "partition-bf",
        ["YES"] + _part_lines(parts, one_based=True),
        domain=args.domain,
        verdict="YES",
        parts=[[i + 1 for i in part] for part in parts],
        stats=stats,
    )
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    g = parse_graph(_read_text(args.graphfile))
    r = reduce_to_profile(g, args.k)
    sys.stdout.write(emit_profile(r.profile))
    return 0


def _cmd_clique_bf(args: argparse.Namespace) -> int:
    g = parse_graph(_read_text(args.graphfile))
    cp = clique_kpartition(g, args.k)
    if cp is None:
        _report(args.json, "clique-bf", ["NO"], verdict="NO")
        return 1
    parts = [list(cls) for cls in cp.classes()]
    _report(
        args.json,
        "clique-bf",
        ["YES"] + _part_lines(parts, one_based=False),
        verdict="YES",
        parts=parts,
    )
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    params = GenParams(
        n=args.votes, m=args.cands, k=args.groups, seed=args.seed, model=args.model
    )
    sys.stdout.write(emit_profile(generate(params)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prefdomains",
        description="Recognize structured preference domains and split profiles into structured groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    domains = [d.value for d in DomainId]

    def add_json(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--json", action="store_true", help="emit one JSON object")

    sp = sub.add_parser("recognize", help="membership test with witness")
    sp.add_argument("file", help="profile file or '-'")
    sp.add_argument("--domain", required=True, choices=domains)
    add_json(sp)
    sp.set_defaults(func=_cmd_recognize)

    sp = sub.add_parser("explain", help="tree or caterpillar order for members")
    sp.add_argument("file", help="profile file or '-'")
    sp.add_argument("--domain", required=True, choices=["gs", "catgs"])
    add_json(sp)
    sp.set_defaults(func=_cmd_explain)

    sp = sub.add_parser("partition2", help="two-group split via the fast solver")
    sp.add_argument("file", help="profile file or '-'")
    sp.add_argument("--domain", required=True, choices=domains)
    add_json(sp)
    sp.set_defaults(func=_cmd_partition2)

    sp = sub.add_parser("partition-bf", help="k-group split by brute force")
    sp.add_argument("file", help="profile file or '-'")
    sp.add_argument("--domain", required=True, choices=domains)
    sp.add_argument("-k", type=int, required=True, help="number of groups")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node limit")
    add_json(sp)
    sp.set_defaults(func=_cmd_partition_bf)

    sp = sub.add_parser("reduce", help="clique-cover instance to profile")
    sp.add_argument("graphfile", help="graph file or '-'")
    sp.add_argument("-k", type=int, required=True, help="number of cliques/groups")
    sp.set_defaults(func=_cmd_reduce)

    sp = sub.add_parser("clique-bf", help="clique k-partition by brute force")
    sp.add_argument("graphfile", help="graph file or '-'")
    sp.add_argument("-k", type=int, required=True, help="number of cliques")
    add_json(sp)
    sp.set_defaults(func=_cmd_clique_bf)

    sp = sub.add_parser("gen", help="seeded profile generation")
    sp.add_argument("--model", default="impartial", choices=list(MODELS))
    sp.add_argument("--votes", type=int, required=True, help="votes per group")
    sp.add_argument("--cands", type=int, required=True, help="number of candidates")
    sp.add_argument("--groups", type=int, default=1, help="number of groups")
    sp.add_argument("--seed", type=int, default=0, help="64-bit seed")
    sp.set_defaults(func=_cmd_gen)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PrefError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
