"""Command line front end.

Subcommands:
  enumerate    stream maximal k-cliques, one per line
  communities  detect temporal communities, one membership interval per line
  stats        per-vertex community counts and community sizes, as CSV
  compare      nesting between two k values, optional snapshot containment
  generate     synthetic stream generation
  oracle       brute-force reference output, for debugging small inputs

Exit codes: 0 ok, 1 data error (unreadable or invalid input), 2 usage error.
Output is deterministic: identical input and flags give identical bytes.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Sequence, TextIO

from .cliques import enumerate_k_cliques
from .linkstream import LinkStream, ParseError, Time, apply_delta, parse_links, serialize
from .oracle import compare_communities, oracle_communities, oracle_enumerate, snapshot_cpm
from .percolate import TemporalCommunity
from .pipeline import compute_communities
from .synth import random_instants


def _fmt(t: Time) -> str:
    return repr(t) if isinstance(t, float) else str(t)


def _add_input_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("input", help="input file, or - for standard input")
    sub.add_argument("--delta", type=_time_arg, default=None,
                     help="duration added to instantaneous records (implies instantaneous format)")
    sub.add_argument("--format", choices=["durational", "instantaneous"], default=None,
                     help="input line format (default: durational, or instantaneous when --delta is set)")


def _add_output_option(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--output", choices=["csv", "tsv"], default=None,
                     help="field separator for output lines (default: spaces)")


def _time_arg(text: str) -> Time:
    try:
        return int(text)
    except ValueError:
        return float(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lscpm",
                                     description="Overlapping temporal communities in link streams")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list maximal k-cliques in emission order")
    p.add_argument("--k", type=int, required=True)
    _add_input_options(p)
    _add_output_option(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("communities", help="detect temporal communities")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--single-thread", action="store_true",
                   help="run enumeration and percolation sequentially")
    _add_input_options(p)
    _add_output_option(p)
    p.set_defaults(func=cmd_communities)

    p = sub.add_parser("stats", help="community statistics as CSV")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--single-thread", action="store_true")
    _add_input_options(p)
    _add_output_option(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("compare", help="compare community structure across k values")
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, default=None)
    p.add_argument("--snapshot-times", default=None,
                   help="comma-separated times; checks snapshot communities against k1 output")
    _add_input_options(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("generate", help="emit a synthetic stream")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--links", type=int, required=True)
    p.add_argument("--span", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--block", type=int, default=None,
                   help="confine pairs to vertex blocks of this size (bounds degree)")
    p.add_argument("--delta", type=_time_arg, default=None,
                   help="expand the instants and emit durational lines instead")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("oracle", help="brute-force reference output (small inputs only)")
    p.add_argument("--k", type=int, required=True)
    _add_input_options(p)
    p.set_defaults(func=cmd_oracle)

    return parser


def _check_k(parser: argparse.ArgumentParser, *ks: int | None) -> None:
    for k in ks:
        if k is not None and k < 3:
            parser.error(f"k must be at least 3, got {k}")


def _read_stream(args: argparse.Namespace) -> LinkStream:
    fmt = args.format
    if fmt is None:
        fmt = "instantaneous" if args.delta is not None else "durational"
    if fmt == "durational" and args.delta is not None:
        raise UsageError("--delta applies to instantaneous input only")
    if fmt == "instantaneous" and args.delta is None:
        raise UsageError("instantaneous input requires --delta")
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, "r", encoding="utf-8") as handle:
            text = handle.read()
    return parse_links(text, format=fmt, delta=args.delta)


def _sep(args: argparse.Namespace, default: str = " ") -> str:
    if getattr(args, "output", None) == "csv":
        return ","
    if getattr(args, "output", None) == "tsv":
        return "\t"
    return default


class UsageError(Exception):
    pass


def cmd_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    stream = _read_stream(args)
    sep = _sep(args)
    for clique in enumerate_k_cliques(stream, args.k):
        fields = [_fmt(clique.interval.t0), _fmt(clique.interval.t1)]
        fields += [stream.labels[v] for v in clique.vertices]
        out.write(sep.join(fields) + "\n")
    return 0


def _community_lines(stream: LinkStream, communities: list[TemporalCommunity], sep: str) -> list[str]:
    rows = []
    for community in communities:
        for v, spans in community.members.items():
            label = stream.labels[v]
            for iv in spans:
                rows.append((community.id, label, iv.t0, iv.t1))
    rows.sort()
    return [sep.join((str(cid), label, _fmt(t0), _fmt(t1))) for cid, label, t0, t1 in rows]


def cmd_communities(args: argparse.Namespace, out: TextIO) -> int:
    stream = _read_stream(args)
    communities = compute_communities(stream, args.k, single_thread=args.single_thread)
    for line in _community_lines(stream, communities, _sep(args)):
        out.write(line + "\n")
    return 0


def cmd_stats(args: argparse.Namespace, out: TextIO) -> int:
    stream = _read_stream(args)
    communities = compute_communities(stream, args.k, single_thread=args.single_thread)
    sep = _sep(args, default=",")
    counts = {v: 0 for v in stream.labels}
    for community in communities:
        for v in community.members:
            counts[v] += 1
    out.write(sep.join(("section", "key", "value")) + "\n")
    for v in sorted(counts, key=lambda x: stream.labels[x]):
        out.write(sep.join(("vertex_communities", stream.labels[v], str(counts[v]))) + "\n")
    for community in communities:
        out.write(sep.join(("community_size", str(community.id), str(len(community.members)))) + "\n")
    return 0


def cmd_compare(args: argparse.Namespace, out: TextIO) -> int:
    stream = _read_stream(args)
    base = compute_communities(stream, args.k1)
    if args.k2 is not None:
        other = compute_communities(stream, args.k2)
        report = compare_communities(other, base)  # a = k2, b = k1
        out.write(f"equal: {'yes' if report.equal else 'no'}\n")
        named = {"a ⊆ b": "k2 ⊆ k1", "b ⊆ a": "k1 ⊆ k2"}
        out.write(f"refinement: {named.get(report.refinement, report.refinement)}\n")
        out.write(f"communities: k1={len(base)} k2={len(other)}\n")
        for diff in report.diffs:
            out.write(f"diff: {diff.replace('side a', 'k2').replace('side b', 'k1')}\n")
    if args.snapshot_times is not None:
        for token in args.snapshot_times.split(","):
            t = _time_arg(token.strip())
            snapshot = snapshot_cpm(stream, t, args.k1)
            contained = 0
            for group in snapshot:
                if any(group <= community.present_at(t) for community in base):
                    contained += 1
            status = "all contained" if contained == len(snapshot) else \
                f"{len(snapshot) - contained} not contained"
            out.write(f"snapshot t={_fmt(t)}: {len(snapshot)} communities, {status}\n")
    return 0


def cmd_generate(args: argparse.Namespace, out: TextIO) -> int:
    rng = random.Random(args.seed)
    instants = random_instants(rng, args.vertices, args.links, args.span, args.block)
    if args.delta is None:
        for t, u, v in sorted(instants):
            out.write(f"{_fmt(t)} {u} {v}\n")
    else:
        stream = apply_delta(instants, args.delta)
        out.write(serialize(stream))
    return 0


def cmd_oracle(args: argparse.Namespace, out: TextIO) -> int:
    stream = _read_stream(args)
    cliques = sorted(oracle_enumerate(stream, args.k),
                     key=lambda c: (c.interval.t0, c.vertices, c.interval.t1))
    out.write("# cliques\n")
    for clique in cliques:
        fields = [_fmt(clique.interval.t0), _fmt(clique.interval.t1)]
        fields += [stream.labels[v] for v in clique.vertices]
        out.write(" ".join(fields) + "\n")
    _, communities = oracle_communities(cliques, args.k)
    out.write("# communities\n")
    for line in _community_lines(stream, communities, " "):
        out.write(line + "\n")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _check_k(parser, getattr(args, "k", None), getattr(args, "k1", None), getattr(args, "k2", None))
    try:
        return args.func(args, sys.stdout)
    except UsageError as exc:
        parser.error(str(exc))  # exits with code 2
        return 2
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
