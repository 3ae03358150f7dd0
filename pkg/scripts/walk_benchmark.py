"""Random flation walks from every standard diagram, classified back.

Reports per base type the mean classification time, the witness length
and which recognizer fired.

    python3 scripts/walk_benchmark.py --walks 200 --steps 50
"""
import argparse
import time
from collections import Counter, defaultdict

from qcartan.classify import classify
from qcartan.core import DynkinType, bigraph_to_matrix
from qcartan.inflations import verify_witness
from qcartan.oracle import WalkSpec, random_walk

BASES = ["A4", "A5", "A6", "A7", "A8", "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--walks", type=int, default=100)
    ap.add_argument("--steps", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--inflations", action="store_true", help="skip the structural recognizers")
    args = ap.parse_args()
    times, lengths, methods = defaultdict(float), defaultdict(int), defaultdict(Counter)
    for name in BASES:
        base = DynkinType.parse(name)
        for k in range(args.walks):
            g, _ = random_walk(WalkSpec(base, args.steps, args.seed + k))
            t = time.perf_counter()
            res = classify(g, structural=not args.inflations)
            times[name] += time.perf_counter() - t
            if res.types != (base,) or not verify_witness(bigraph_to_matrix(g), res.canonical, res.witness):
                raise SystemExit(f"{name} seed {args.seed + k}: got {res.types}")
            lengths[name] += len(res.witness)
            methods[name].update(res.methods)
    print(f"{'type':5} {'ms/graph':>9} {'steps':>7}  method")
    for name in BASES:
        print(f"{name:5} {1000 * times[name] / args.walks:9.2f} {lengths[name] / args.walks:7.1f}  "
              + ", ".join(f"{m}={c}" for m, c in methods[name].items()))


if __name__ == "__main__":
    main()
