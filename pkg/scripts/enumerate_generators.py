"""Count the monic generators of an intersection of deletion kernels.

The family is given as in the command line tool, e.g. "1;2;3;4" for the
Brunnian braids of P_4 or all 2-subsets via --k 2.

    python scripts/enumerate_generators.py --n 4 --sets "1;2;3;4" --max-leaves 3
    python scripts/enumerate_generators.py --n 5 --k 3 --max-leaves 2 --show 5
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from purebraid.brunnian import ConstraintFamily, check_generator, enumerate_generators
from purebraid.expr import tree_text


@dataclass
class Config:
    n: int = 4
    sets: str = ""
    k: int = 1
    max_leaves: int = 3
    show: int = 0
    verify: bool = False


def family(cfg: Config) -> ConstraintFamily:
    if cfg.sets:
        parts = [p for p in cfg.sets.split(";") if p.strip()]
        return ConstraintFamily.of(cfg.n, ([int(x) for x in p.split(",")] for p in parts))
    return ConstraintFamily.k_subsets(cfg.n, cfg.k)


def main(cfg: Config):
    f = family(cfg)
    counts = Counter()
    for t in enumerate_generators(f, cfg.max_leaves):
        counts[t.leaves] += 1
        if counts[t.leaves] <= cfg.show:
            print(f"  {tree_text(t)}")
        if cfg.verify:
            assert check_generator(t, f), tree_text(t)
    print(f"n={cfg.n}, {len(f)} constraint sets")
    for leaves in sorted(counts):
        print(f"{leaves} leaves: {counts[leaves]} monic trees")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(Config()).items():
        flag = "--" + name.replace("_", "-")
        if isinstance(default, bool):
            p.add_argument(flag, action="store_true")
        else:
            p.add_argument(flag, type=type(default), default=default)
    main(Config(**vars(p.parse_args())))
