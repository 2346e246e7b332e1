"""Independent oracles and generators used across the test suite.

These deliberately avoid the library's own elimination code paths: the
solver below is a self-contained Gaussian elimination over plain lists
of Fractions, the Moebius oracle is the number-theoretic recursion, and
poset enumeration is brute force over candidate relations.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache

from catmag import Matrix, Poset, close_poset


def gauss_solvable(rows: list[list[Fraction]], rhs: list[Fraction]) -> bool:
    """Does A x = b have a solution?  Plain forward elimination on an
    augmented copy; a zero row with nonzero right side means inconsistent."""
    height = len(rows)
    width = len(rows[0]) if rows else 0
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    pivot_row = 0
    for col in range(width):
        src = next((r for r in range(pivot_row, height) if aug[r][col] != 0), None)
        if src is None:
            continue
        aug[pivot_row], aug[src] = aug[src], aug[pivot_row]
        lead = aug[pivot_row]
        for r in range(pivot_row + 1, height):
            if aug[r][col] != 0:
                factor = aug[r][col] / lead[col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], lead)]
        pivot_row += 1
        if pivot_row == height:
            break
    # rows at or below the final pivot row have all-zero coefficients
    return all(aug[r][-1] == 0 for r in range(pivot_row, height))


@lru_cache(maxsize=None)
def classical_mobius(k: int) -> int:
    """Number-theoretic Moebius via mu(1) = 1 and sum_{d|k} mu(d) = 0."""
    if k == 1:
        return 1
    return -sum(classical_mobius(d) for d in range(1, k) if k % d == 0)


def random_rank_matrix(rng: random.Random, rows: int, cols: int, rank: int) -> Matrix:
    """Random matrix of rank at most ``rank``: a product of small integer
    factor matrices (rank usually exactly ``rank``)."""
    if rank == 0:
        return Matrix.zeros(rows, cols)
    left = [[rng.randint(-3, 3) for _ in range(rank)] for _ in range(rows)]
    right = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rank)]
    return Matrix(left, cols=rank) @ Matrix(right, cols=cols)


def random_matrix(rng: random.Random, rows: int, cols: int, low: int = -4, high: int = 4) -> Matrix:
    return Matrix([[rng.randint(low, high) for _ in range(cols)] for _ in range(rows)], cols=cols)


def random_permutation_matrix(rng: random.Random, n: int) -> Matrix:
    perm = list(range(n))
    rng.shuffle(perm)
    return Matrix([[int(perm[i] == j) for j in range(n)] for i in range(n)], cols=n)


def strict_relations(n: int):
    """All labeled posets on range(n), as frozensets of strict pairs."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in range(2 ** len(pairs)):
        rel = frozenset(p for k, p in enumerate(pairs) if bits >> k & 1)
        if any((b, a) in rel for a, b in rel):
            continue
        if any(
            (a, d) not in rel
            for a, b in rel
            for c, d in rel
            if b == c
        ):
            continue
        yield rel


def bounded_posets(max_size: int):
    """Every bounded poset (unique bottom and top, bottom != top) with at
    most ``max_size`` elements: an arbitrary poset on the interior with a
    fresh bottom and top adjoined, which is exactly what bounded means."""
    assert max_size >= 2
    for interior_size in range(max_size - 1):
        names = [f"p{i}" for i in range(interior_size)]
        for rel in strict_relations(interior_size):
            pairs = [(names[a], names[b]) for a, b in sorted(rel)]
            pairs += [("bot", x) for x in names] + [(x, "top") for x in names]
            pairs.append(("bot", "top"))
            yield close_poset(["bot"] + names + ["top"], pairs)


def random_poset(rng: random.Random, n: int) -> Poset:
    """Random poset: edges only from lower to higher label, so closure
    never hits a cycle."""
    names = [f"e{i}" for i in range(n)]
    pairs = [
        (names[i], names[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < 0.4
    ]
    return close_poset(names, pairs)
