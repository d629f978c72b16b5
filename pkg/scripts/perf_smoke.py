#!/usr/bin/env python3
"""Quick performance snapshot: build, cycle, and query timings.

Defaults reproduce the repository's performance gate (100k-vertex,
500k-edge random graph; 100k delete+insert cycles; 1M queries).
"""

import argparse
import random
import sys
import time

from dynconn.workload import build_index, random_edge_stream, run_random_cycle


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=100_000)
    p.add_argument("--m", type=int, default=500_000)
    p.add_argument("--k", type=int, default=100_000)
    p.add_argument("--queries", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=88)
    p.add_argument("--mode", choices=("conn", "2ec"), default="conn")
    args = p.parse_args(argv)

    t0 = time.perf_counter()
    stream = random_edge_stream(args.n, args.m, seed=args.seed)
    t1 = time.perf_counter()
    idx, _ = build_index(stream, args.mode)
    t2 = time.perf_counter()
    print(f"generate: {t1 - t0:.2f}s   build: {t2 - t1:.2f}s   "
          f"avg depth: {idx.forest.average_depth():.3f}")

    rep = run_random_cycle(idx, args.k, seed=args.seed)
    if args.k:
        d_mean, _ = rep.timings_ns["delete"]
        i_mean, _ = rep.timings_ns["insert"]
        total = (d_mean + i_mean) * args.k / 1e9
        print(f"cycle k={args.k}: {total:.2f}s "
              f"(delete {d_mean:.0f}ns, insert {i_mean:.0f}ns per op)")

    if args.queries:
        rng = random.Random(args.seed + 1)
        if args.mode == "2ec":
            query = idx.two_edge_connected
        else:
            query = idx.connected
        pairs = [(rng.randrange(args.n), rng.randrange(args.n))
                 for _ in range(args.queries)]
        t0 = time.perf_counter()
        for u, v in pairs:
            query(u, v)
        dt = time.perf_counter() - t0
        print(f"queries: {args.queries} in {dt:.2f}s "
              f"({dt / args.queries * 1e9:.0f}ns each)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
