"""Oracle comparison over the seeded corpora, with outcome histograms.

    python scripts/run_corpus.py --family girth --count 300 --seed 2
"""

import argparse
import collections
import time

from robustgraphs.cli import verify_one
from robustgraphs.corpus import CorpusConfig
from robustgraphs.geometry import transmission_graph, unit_disk_graph
from robustgraphs.outcomes import Girth

PROBLEM = {"udg": "triangle", "girth": "girth", "tg": "tg-triangle"}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--family", choices=sorted(PROBLEM), default="udg")
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    config = CorpusConfig(args.family, args.count, args.seed)
    problem = PROBLEM[config.family]
    build = transmission_graph if config.family == "tg" else unit_disk_graph
    hist = collections.Counter()
    failures = []
    t0 = time.perf_counter()
    for inst in config.instances():
        ok, errs, out, _ = verify_one(problem, build(inst.sites), in_domain=True)
        hist[f"Girth {out.length}" if isinstance(out, Girth) else out.tag] += 1
        if not ok:
            failures.append((inst.name, errs))
    dt = time.perf_counter() - t0
    print(f"{config}: {config.count} instances in {dt:.1f}s, {len(failures)} failures")
    for key, c in sorted(hist.items(), key=lambda kv: -kv[1]):
        print(f"  {key:<16} {c}")
    for name, errs in failures[:10]:
        print(f"  FAIL {name}: {errs}")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
