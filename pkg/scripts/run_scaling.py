"""Scaling experiment: median query time per size, CSV per problem, log-log slope.

    python scripts/run_scaling.py --problems triangle tg-triangle --out results/
"""

import argparse
import csv
import pathlib

from robustgraphs.bench import CSV_COLUMNS, PROBLEMS, BenchConfig, loglog_slope, scaling_axis


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--problems", nargs="+", choices=PROBLEMS, default=["triangle", "tg-triangle"])
    ap.add_argument("--sizes", type=int, nargs="+", default=list(BenchConfig().sizes))
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--out", type=pathlib.Path, default=pathlib.Path("results"))
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    for problem in args.problems:
        config = BenchConfig(problem, tuple(args.sizes), args.seed, args.reps)
        rows = config.run()
        path = args.out / f"scaling_{problem}.csv"
        with open(path, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, extrasaction="ignore")
            w.writeheader()
            w.writerows(rows)
        xs = [scaling_axis(problem, r) for r in rows]
        slope = loglog_slope(xs, [r["query_ns"] for r in rows])
        axis = "n+m" if problem == "tg-triangle" else "n"
        print(f"{problem}: slope of query time vs {axis} = {slope:.3f}  ({path})")
        for r in rows:
            print(f"  n={r['n']:>6} m={r['m']:>10} query={r['query_ns'] / 1e6:9.3f} ms  {r['outcome']}")


if __name__ == "__main__":
    main()
