"""How fast the collection process grows with input length.

For random words in P_n of each length, run the collection process under a
leaf budget and report how many finish, plus tree counts of those that do.

    python scripts/collection_growth.py --n 4 --max-len 8 --samples 20
"""

import argparse
import random
import statistics
import time
from dataclasses import dataclass

from purebraid.braid import BraidWord, all_generators
from purebraid.collection import BudgetExceeded, collect


@dataclass
class Config:
    n: int = 4
    max_len: int = 8
    samples: int = 20
    budget: int = 5000
    strict: bool = False
    seed: int = 0


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    gens = all_generators(cfg.n)
    mode = "strict" if cfg.strict else "default"
    print(f"n={cfg.n} mode={mode} budget={cfg.budget} leaves")
    print("len  finished  median_trees  max_trees  seconds")
    for length in range(cfg.max_len + 1):
        sizes, start = [], time.perf_counter()
        for _ in range(cfg.samples):
            w = BraidWord(cfg.n, tuple(rng.choice(gens) for _ in range(length)))
            try:
                d = collect(w, strict=cfg.strict, max_leaves=cfg.budget)
            except BudgetExceeded:
                continue
            sizes.append(len(d.trees()))
        elapsed = time.perf_counter() - start
        med = statistics.median(sizes) if sizes else "-"
        top = max(sizes) if sizes else "-"
        print(f"{length:3d}  {len(sizes):4d}/{cfg.samples:<4d} {med!s:>12}  {top!s:>9}  {elapsed:7.2f}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(Config()).items():
        flag = "--" + name.replace("_", "-")
        if isinstance(default, bool):
            p.add_argument(flag, action="store_true")
        else:
            p.add_argument(flag, type=type(default), default=default)
    main(Config(**vars(p.parse_args())))
