#!/usr/bin/env python3
"""Write a seeded random edge list, optionally timestamped.

Example:
    python scripts/gen_graph.py --n 900 --m 33720 --seed 900 --timestamps -o fo_like.txt
"""

import argparse
import sys

from dynconn.workload import random_edge_stream


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--m", type=int, required=True, help="edge count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timestamps", action="store_true",
                   help="emit increasing integer arrival times")
    p.add_argument("-o", "--output", default=None, help="default stdout")
    args = p.parse_args(argv)

    stream = random_edge_stream(args.n, args.m, args.seed, args.timestamps)
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        out.write(f"# random graph n={args.n} m={args.m} seed={args.seed}\n")
        for ev in stream.events:
            if ev.t is None:
                out.write(f"{ev.u} {ev.v}\n")
            else:
                out.write(f"{ev.u} {ev.v} {ev.t}\n")
    finally:
        if args.output:
            out.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
