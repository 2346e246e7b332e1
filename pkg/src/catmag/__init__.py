"""Exact magnitude (Euler characteristic) of finite categories and posets.

The zeta matrix of a finite category counts morphisms between objects;
its Moore-Penrose pseudoinverse, computed here over exact rationals,
decides whether the category has a magnitude and gives its value as the
sum of the pseudoinverse's entries.  Includes Moebius functions on
posets, Rota's Euler characteristic, and product/coproduct algebra.
"""

from .categories import (
    CategoryError,
    FinCategory,
    Morphism,
    Poset,
    PosetError,
    ZetaContext,
    as_category,
    category_coproduct,
    category_product,
    chain_poset,
    close_poset,
    cyclic_monoid,
    discrete_category,
    divisor_poset,
    indiscrete_category,
    validate_category,
    zeta_of,
    zeta_of_category,
    zeta_of_poset,
)
from .magnitude import (
    BoundsError,
    MagnitudeReport,
    coweighting_of,
    interior_characteristic_check,
    magnitude_of,
    magnitude_of_category,
    pseudo_mobius_product_check,
    rota_chain_oracle,
    rota_characteristic,
    weighting_of,
)
from .matrix import (
    Matrix,
    PenroseCheck,
    RankFactors,
    RowEchelon,
    ShapeError,
    direct_sum,
    kron,
    penrose_check,
)
from .rationals import (
    Rational,
    RationalParseError,
    decimal_approximation,
    format_rational,
    make_rational,
    parse_rational,
)

__all__ = [
    "BoundsError",
    "CategoryError",
    "FinCategory",
    "MagnitudeReport",
    "Matrix",
    "Morphism",
    "PenroseCheck",
    "Poset",
    "PosetError",
    "RankFactors",
    "Rational",
    "RationalParseError",
    "RowEchelon",
    "ShapeError",
    "ZetaContext",
    "as_category",
    "category_coproduct",
    "category_product",
    "chain_poset",
    "close_poset",
    "coweighting_of",
    "cyclic_monoid",
    "decimal_approximation",
    "direct_sum",
    "discrete_category",
    "divisor_poset",
    "format_rational",
    "indiscrete_category",
    "interior_characteristic_check",
    "kron",
    "magnitude_of",
    "magnitude_of_category",
    "make_rational",
    "parse_rational",
    "penrose_check",
    "pseudo_mobius_product_check",
    "rota_chain_oracle",
    "rota_characteristic",
    "validate_category",
    "weighting_of",
    "zeta_of",
    "zeta_of_category",
    "zeta_of_poset",
]
