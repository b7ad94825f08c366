"""Check the presentation relations of P_n and the two commutation identities.

    python scripts/relation_suite.py --max-n 6
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from purebraid.relations import commutation_identities, presentation


@dataclass
class Config:
    max_n: int = 6
    show: int = 5


def main(cfg: Config):
    for m in range(3, cfg.max_n + 1):
        total, failed = Counter(), Counter()
        examples = []
        for r in presentation(m):
            total[r.family] += 1
            if not r.holds():
                failed[r.family] += 1
                examples.append(r)
        row = "  ".join(f"{f}: {total[f] - failed[f]}/{total[f]}" for f in sorted(total))
        print(f"n={m}  {row}")
        for r in examples[: cfg.show]:
            print(f"    fails {r}")
    for r in commutation_identities():
        print(f"{'holds' if r.holds() else 'FAILS'}  {r}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=Config.max_n)
    p.add_argument("--show", type=int, default=Config.show, help="failing instances to print per n")
    a = p.parse_args()
    main(Config(a.max_n, a.show))
