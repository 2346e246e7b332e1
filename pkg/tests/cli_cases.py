"""Golden-file case table for the CLI, shared by the CLI and acceptance tests.

Each case: (golden file stem, argv relative to the fixtures dir, expected
exit code).  Covers every subcommand in both output formats where the
format changes anything.
"""

from __future__ import annotations

import pathlib

FIXTURES = pathlib.Path(__file__).parent / "fixtures"
GOLDEN = pathlib.Path(__file__).parent / "golden"

CASES: list[tuple[str, list[str], int]] = [
    ("magnitude-indiscrete-2", ["magnitude", "indiscrete-2.json"], 0),
    ("magnitude-zero-matrix", ["magnitude", "zero-matrix.json"], 2),
    ("magnitude-divisors-6-json", ["magnitude", "divisors-6.json", "--format", "json"], 0),
    ("magnitude-upper-decimal", ["magnitude", "upper-2x2.json", "--decimal", "3"], 0),
    ("pinv-ones-2x2", ["pinv", "ones-2x2.json"], 0),
    ("pinv-upper-json", ["pinv", "upper-2x2.json", "--format", "json"], 0),
    ("zeta-arrow", ["zeta", "arrow.json"], 0),
    ("zeta-divisors-6", ["zeta", "divisors-6.json"], 0),
    ("mobius-divisors-6", ["mobius", "divisors-6.json"], 0),
    ("mobius-indiscrete-2", ["mobius", "indiscrete-2.json"], 2),
    ("weighting-divisors-6", ["weighting", "divisors-6.json"], 0),
    ("weighting-zero-matrix", ["weighting", "zero-matrix.json"], 2),
    ("weighting-ones-json", ["weighting", "ones-2x2.json", "--format", "json"], 0),
    ("coweighting-arrow", ["coweighting", "arrow.json"], 0),
    ("rota-divisors-6", ["rota", "divisors-6.json"], 0),
    ("rota-divisors-6-decimal", ["rota", "divisors-6.json", "--decimal", "2"], 0),
    ("check-arrow", ["check", "arrow.json"], 0),
    ("check-divisors-6", ["check", "divisors-6.json"], 0),
    ("check-penrose-good", ["check", "ones-2x2.json", "--against", "quarters.json"], 0),
    ("check-penrose-bad", ["check", "ones-2x2.json", "--against", "bad-candidate.json"], 2),
    ("product-arrow-arrow", ["product", "arrow.json", "arrow.json"], 0),
    ("product-arrow-arrow-magnitude", ["product", "arrow.json", "arrow.json", "--magnitude"], 0),
    ("coproduct-arrow-arrow", ["coproduct", "arrow.json", "arrow.json"], 0),
    ("gen-divisors-12", ["gen", "divisors", "12"], 0),
    ("gen-discrete-0", ["gen", "discrete", "0"], 0),
    ("gen-indiscrete-2", ["gen", "indiscrete", "2"], 0),
    ("gen-chain-3", ["gen", "chain", "3"], 0),
    ("gen-cyclic-monoid-3", ["gen", "cyclic-monoid", "3"], 0),
]


def resolve_argv(argv: list[str]) -> list[str]:
    """Prefix fixture file names with the fixtures directory."""
    return [
        str(FIXTURES / part) if part.endswith(".json") else part for part in argv
    ]
