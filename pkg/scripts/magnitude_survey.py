#!/usr/bin/env python3
"""Survey magnitudes across standard families of categories and posets.

Prints, for each structure: object count, whether zeta is invertible,
whether a weighting/coweighting exists, and the exact magnitude.  Useful
for eyeballing how the generalized magnitude behaves on singular zetas.

    python scripts/magnitude_survey.py --max-divisor 30
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from catmag import (
    chain_poset,
    cyclic_monoid,
    discrete_category,
    divisor_poset,
    format_rational,
    indiscrete_category,
    magnitude_of_category,
)


@dataclass
class SurveyConfig:
    max_size: int = 5
    max_divisor: int = 30
    only_squarefree: bool = False


def survey_rows(config: SurveyConfig):
    families = [
        ("discrete", discrete_category, range(config.max_size + 1)),
        ("indiscrete", indiscrete_category, range(1, config.max_size + 1)),
        ("cyclic-monoid", cyclic_monoid, range(1, config.max_size + 1)),
        ("chain", chain_poset, range(1, config.max_size + 1)),
    ]
    for family, build, sizes in families:
        for size in sizes:
            yield f"{family}({size})", magnitude_of_category(build(size))
    for n in range(2, config.max_divisor + 1):
        if config.only_squarefree and any(n % (p * p) == 0 for p in range(2, n)):
            continue
        yield f"divisors({n})", magnitude_of_category(divisor_poset(n))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-size", type=int, default=5)
    parser.add_argument("--max-divisor", type=int, default=30)
    parser.add_argument("--only-squarefree", action="store_true")
    args = parser.parse_args()
    config = SurveyConfig(args.max_size, args.max_divisor, args.only_squarefree)

    header = f"{'structure':<18} {'n':>3} {'invertible':>10} {'weighted':>8} {'magnitude':>10}"
    print(header)
    print("-" * len(header))
    for name, report in survey_rows(config):
        chi = format_rational(report.magnitude) if report.has_magnitude else "-"
        print(
            f"{name:<18} {report.n:>3} "
            f"{'yes' if report.mobius is not None else 'no':>10} "
            f"{'yes' if report.has_magnitude else 'no':>8} {chi:>10}"
        )


if __name__ == "__main__":
    main()
