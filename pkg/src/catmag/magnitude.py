"""Weightings, coweightings, and magnitude via the pseudoinverse.

For a square matrix M (typically a zeta matrix), a weighting is a column
vector w with M w = 1 and a coweighting is a row vector z with z M = 1^T.
M has magnitude when both exist, and the common value of their entry
sums equals the entry sum of the pseudoinverse M+.  The decisive fact:
M has a weighting iff M+ 1 is one (and dually iff 1^T M+ is a
coweighting), so a single pseudoinverse settles existence and value.

The pseudoinverse of the zeta matrix is the pseudo-Moebius function; it
coincides with the classical Moebius function (the inverse of zeta)
exactly when zeta is invertible, and its entry sum is reported as the
``generalized_magnitude`` even when no weighting exists.

Rota's Euler characteristic of a bounded poset, E = 1 + mu(bottom, top),
comes with a brute-force chain-counting oracle: E equals the alternating
sum 1 - sum_{i>=2} (-1)^i C_i over the counts C_i of i-element chains
from bottom to top.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .categories import (
    FinCategory,
    Poset,
    as_category,
    category_coproduct,
    category_product,
    zeta_of,
)
from .matrix import Matrix, ShapeError, direct_sum, kron


class BoundsError(ValueError):
    """The poset lacks the unique bottom/top structure an operation needs."""


@dataclass(frozen=True)
class MagnitudeReport:
    """Everything the pseudoinverse of one square matrix reveals.

    ``magnitude`` is set only when both a weighting and a coweighting
    exist; ``generalized_magnitude`` (the entry sum of the pseudoinverse)
    is always defined and agrees with ``magnitude`` whenever the latter
    exists.  When weightings are not unique, ``weighting`` is the
    particular solution given by the pseudoinverse applied to the ones
    vector, and ``weighting_nullspace`` spans the directions in which it
    may be translated.
    """

    object_order: tuple[str, ...]
    pseudo_mobius: Matrix
    mobius: Matrix | None
    weighting: Matrix | None  # n x 1 column
    coweighting: Matrix | None  # 1 x n row
    weighting_nullspace: tuple[Matrix, ...]
    has_weighting: bool
    has_coweighting: bool
    has_magnitude: bool
    magnitude: Fraction | None
    generalized_magnitude: Fraction

    @property
    def n(self) -> int:
        return len(self.object_order)


def _require_square(m: Matrix) -> None:
    if not m.is_square:
        raise ShapeError(f"weighting/magnitude need a square matrix, got {m.rows}x{m.cols}")


def _weighting_from(m: Matrix, pseudo: Matrix) -> Matrix | None:
    ones = Matrix.ones(m.rows, 1)
    candidate = pseudo @ ones
    return candidate if m @ candidate == ones else None


def _coweighting_from(m: Matrix, pseudo: Matrix) -> Matrix | None:
    ones_row = Matrix.ones(1, m.rows)
    candidate = ones_row @ pseudo
    return candidate if candidate @ m == ones_row else None


def weighting_of(m: Matrix) -> Matrix | None:
    """The weighting M+ 1 when M has one; None proves none exists."""
    _require_square(m)
    return _weighting_from(m, m.pinv())


def coweighting_of(m: Matrix) -> Matrix | None:
    """The coweighting 1^T M+ when M has one; None proves none exists."""
    _require_square(m)
    return _coweighting_from(m, m.pinv())


def _build_report(m: Matrix, labels: tuple[str, ...]) -> MagnitudeReport:
    pseudo = m.pinv()
    weighting = _weighting_from(m, pseudo)
    coweighting = _coweighting_from(m, pseudo)
    has_weighting = weighting is not None
    has_coweighting = coweighting is not None
    has_magnitude = has_weighting and has_coweighting
    generalized = pseudo.entry_sum()
    return MagnitudeReport(
        object_order=labels,
        pseudo_mobius=pseudo,
        mobius=m.inverse(),
        weighting=weighting,
        coweighting=coweighting,
        weighting_nullspace=m.nullspace_basis() if has_weighting else (),
        has_weighting=has_weighting,
        has_coweighting=has_coweighting,
        has_magnitude=has_magnitude,
        magnitude=generalized if has_magnitude else None,
        generalized_magnitude=generalized,
    )


def magnitude_of(m: Matrix) -> MagnitudeReport:
    """Full report for a square matrix; rows are labelled by index."""
    _require_square(m)
    return _build_report(m, tuple(str(i) for i in range(m.rows)))


def magnitude_of_category(structure: FinCategory | Poset) -> MagnitudeReport:
    """Report for the zeta matrix, with entries labelled by object name."""
    zeta = zeta_of(structure)
    return _build_report(zeta.matrix, zeta.object_order)


def _bounds(poset: Poset) -> tuple[str, str]:
    bottom = poset.global_min()
    top = poset.global_max()
    if bottom is None or top is None:
        raise BoundsError("poset has no unique minimum and maximum")
    if bottom == top:
        raise BoundsError("minimum and maximum coincide (one-point poset)")
    return bottom, top


def rota_characteristic(poset: Poset) -> Fraction:
    """Euler characteristic 1 + mu(bottom, top) of a bounded poset."""
    bottom, top = _bounds(poset)
    zeta = zeta_of(poset)
    mobius = zeta.matrix.inverse()
    # a poset's zeta matrix is unitriangular under a linear extension
    assert mobius is not None
    index = {x: i for i, x in enumerate(zeta.object_order)}
    return 1 + mobius[index[bottom]][index[top]]


def rota_chain_oracle(poset: Poset) -> Fraction:
    """Independent chain-counting route to the Euler characteristic.

    Enumerates every chain bottom = c_1 < ... < c_i = top by brute force
    and returns 1 - sum_{i>=2} (-1)^i C_i.
    """
    bottom, top = _bounds(poset)
    strictly_above = {
        a: [b for b in poset.objects if b != a and poset.holds(a, b)] for a in poset.objects
    }
    counts: Counter[int] = Counter()

    def extend(last: str, size: int) -> None:
        if last == top:
            counts[size] += 1
            return
        for nxt in strictly_above[last]:
            extend(nxt, size + 1)

    extend(bottom, 1)
    return Fraction(1) - sum(
        (Fraction((-1) ** size) * c for size, c in counts.items()), Fraction(0)
    )


def interior_characteristic_check(poset: Poset) -> tuple[Fraction, Fraction]:
    """(magnitude of the open interior, Rota characteristic of the whole).

    The two are equal for every bounded poset; callers assert it.
    """
    bottom, top = _bounds(poset)
    interior = poset.restrict(x for x in poset.objects if x not in (bottom, top))
    report = magnitude_of_category(interior)
    assert report.has_magnitude and report.magnitude is not None
    return report.magnitude, rota_characteristic(poset)


def pseudo_mobius_product_check(
    a: Matrix | FinCategory | Poset, b: Matrix | FinCategory | Poset
) -> bool:
    """Does the pseudoinverse distribute over product and coproduct?

    Matrix arguments are combined by Kronecker product / direct sum;
    categorical arguments go through the actual product and coproduct
    constructions and their zeta matrices.  True means both identities
    hold entry for entry.
    """
    if isinstance(a, Matrix) or isinstance(b, Matrix):
        if not (isinstance(a, Matrix) and isinstance(b, Matrix)):
            raise TypeError("mixing matrix and categorical arguments is ambiguous")
        za, zb = a, b
        product_zeta = kron(za, zb)
        coproduct_zeta = direct_sum(za, zb)
    else:
        ca, cb = as_category(a), as_category(b)
        za, zb = zeta_of(ca).matrix, zeta_of(cb).matrix
        product_zeta = zeta_of(category_product(ca, cb)).matrix
        coproduct_zeta = zeta_of(category_coproduct(ca, cb)).matrix
    za_plus, zb_plus = za.pinv(), zb.pinv()
    return (
        product_zeta.pinv() == kron(za_plus, zb_plus)
        and coproduct_zeta.pinv() == direct_sum(za_plus, zb_plus)
    )
