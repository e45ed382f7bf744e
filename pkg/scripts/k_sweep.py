#!/usr/bin/env python3
"""Sweep k over a stream and report clique and community counts.

With no input file, a synthetic stream is used. Verifies on the way that each
community at k+1 is contained in exactly one community at k, so the sweep
doubles as a nesting sanity check on real data.
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from lscpm import (  # noqa: E402
    compute_communities,
    enumerate_k_cliques,
    parse_links,
    synthetic_stream,
)
from lscpm.oracle import containing_communities  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("input", nargs="?", default=None, help="durational input file")
    ap.add_argument("--delta", type=int, default=None,
                    help="treat the input as instantaneous records with this duration")
    ap.add_argument("--kmin", type=int, default=3)
    ap.add_argument("--kmax", type=int, default=6)
    ap.add_argument("--seed", type=int, default=11)
    args = ap.parse_args()

    if args.input is None:
        stream = synthetic_stream(n_vertices=60, n_instants=4000, span=400,
                                  delta=25, seed=args.seed, block=6)
    else:
        text = Path(args.input).read_text(encoding="utf-8")
        fmt = "instantaneous" if args.delta is not None else "durational"
        stream = parse_links(text, format=fmt, delta=args.delta)
    print(f"# {len(stream.links)} links, {stream.n_vertices} vertices")
    print("k,cliques,communities,seconds")
    previous = None
    for k in range(args.kmin, args.kmax + 1):
        begin = time.perf_counter()
        n_cliques = sum(1 for _ in enumerate_k_cliques(stream, k))
        communities = compute_communities(stream, k, single_thread=True)
        elapsed = time.perf_counter() - begin
        print(f"{k},{n_cliques},{len(communities)},{elapsed:.3f}")
        if previous is not None:
            for inner in communities:
                hits = containing_communities(inner, previous)
                assert len(hits) == 1, f"nesting broken between k={k - 1} and k={k}"
        previous = communities
    return 0


if __name__ == "__main__":
    sys.exit(main())
