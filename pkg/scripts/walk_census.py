"""Count even walks over random complexes and graphs: how many show up
per side length, how many are minimal, and how often the cheap structural
tests settle the linear-type question.

Usage:  python3 scripts/walk_census.py [--trials 60] [--seed 7] [--s-max 3]
"""

import argparse
import random
import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from reeswalk import families
from reeswalk.structure import LINEAR_TYPE, linear_type_structural
from reeswalk.walks import enumerate_even_walks, is_minimal_even_walk


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=60)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--s-max", type=int, default=3)
    args = parser.parse_args(argv)

    rng = random.Random(args.seed)
    by_length = Counter()
    minimal = Counter()
    verdicts = Counter()
    complexes_with_walks = 0

    for k in range(args.trials):
        c = families.random_complex(rng) if k % 2 else families.random_graph(rng)
        walks = enumerate_even_walks(c, args.s_max).walks
        if walks:
            complexes_with_walks += 1
        for w in walks:
            by_length[w.s] += 1
            if is_minimal_even_walk(c, w):
                minimal[w.s] += 1
        verdicts[linear_type_structural(c, args.s_max).reason] += 1

    print(f"trials:                 {args.trials}")
    print(f"complexes with walks:   {complexes_with_walks}")
    for s in sorted(by_length):
        print(f"walks with s={s}:         {by_length[s]}  (minimal: {minimal[s]})")
    print("structural outcomes:")
    for reason, count in verdicts.most_common():
        print(f"  {reason:<28} {count}")
    certified = sum(
        count
        for reason, count in verdicts.items()
        if reason in ("FOREST", "NO_EVEN_CYCLE_IN_LINE_GRAPH")
    )
    print(f"certified {LINEAR_TYPE}: {certified}/{args.trials}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
