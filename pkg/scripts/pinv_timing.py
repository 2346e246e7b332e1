#!/usr/bin/env python3
"""Time the exact pseudoinverse on random dense rational matrices.

Entry growth during elimination is the cost driver for exact arithmetic,
so timings are reported per size and entry magnitude:

    python scripts/pinv_timing.py --sizes 6 9 12 --digits 3 --repeats 3
"""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass

from catmag import Matrix, penrose_check


@dataclass
class TimingConfig:
    sizes: list[int]
    digits: int = 3
    repeats: int = 3
    seed: int = 0


def random_dense(rng: random.Random, n: int, digits: int) -> Matrix:
    low, high = 10 ** (digits - 1), 10**digits - 1
    return Matrix(
        [[rng.choice([-1, 1]) * rng.randint(low, high) for _ in range(n)] for _ in range(n)]
    )


def run(config: TimingConfig) -> None:
    rng = random.Random(config.seed)
    print(f"{'size':>5} {'digits':>6} {'best':>9} {'mean':>9}")
    for n in config.sizes:
        samples = []
        for _ in range(config.repeats):
            m = random_dense(rng, n, config.digits)
            start = time.perf_counter()
            pseudo = m.pinv()
            samples.append(time.perf_counter() - start)
            assert penrose_check(m, pseudo).all_hold
        best = min(samples)
        mean = sum(samples) / len(samples)
        print(f"{n:>5} {config.digits:>6} {best:>8.3f}s {mean:>8.3f}s")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[4, 8, 12])
    parser.add_argument("--digits", type=int, default=3)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    run(TimingConfig(args.sizes, args.digits, args.repeats, args.seed))


if __name__ == "__main__":
    main()
