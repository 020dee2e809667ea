"""gammaenum: exact enumeration and asymptotics of genus-bounded chord diagrams.

The package computes, in exact rational arithmetic, the counting sequences of
genus-filtered matchings, irreducible shadows, genus-bounded matchings and
shapes, and canonical structures on a backbone, together with the dominant
singularities and exponential growth rates of their generating functions.
Every symbolic result is cross-checkable against brute-force enumeration
(see ``gammaenum.oracle`` and the ``gammaenum verify`` command).
"""

from .asym import (
    AsymData,
    GrowthRate,
    RootEnclosure,
    dominant_singularity,
    isolate_positive_roots,
    resultant,
    structure_growth,
)
from .diagrams import (
    Diagram,
    Matching,
    ShadowDecomposition,
    classify,
    genus,
    irreducible_components,
    is_irreducible,
    is_shadow,
    shadow,
)
from .exact import (
    BiPoly,
    BiTruncSeries,
    Poly,
    TruncSeries,
    bipoly_eval_series,
    series_binomial_power,
    series_compose,
    series_inverse,
    series_mul,
)
from .gamma import (
    A_series,
    G_lambda_series,
    G_series,
    GammaSystem,
    Gtilde_series,
    H_series,
    S_series,
    build_P,
)
from .hz import C_series, HZTable, Q_poly, hz_table
from .oracle import (
    CountTable,
    OracleCaps,
    count_gamma_matchings,
    count_irreducible_shadows,
    count_matchings_by_genus,
    count_shapes,
    count_structures,
)
from .rational import Q, Rational
from .shadows import I_poly, ShadowPolySet, shadow_set, theta_series

__all__ = [
    "AsymData",
    "A_series",
    "BiPoly",
    "BiTruncSeries",
    "C_series",
    "CountTable",
    "Diagram",
    "G_lambda_series",
    "G_series",
    "GammaSystem",
    "GrowthRate",
    "Gtilde_series",
    "HZTable",
    "H_series",
    "I_poly",
    "Matching",
    "OracleCaps",
    "Poly",
    "Q",
    "Q_poly",
    "Rational",
    "RootEnclosure",
    "S_series",
    "ShadowDecomposition",
    "ShadowPolySet",
    "TruncSeries",
    "bipoly_eval_series",
    "build_P",
    "classify",
    "count_gamma_matchings",
    "count_irreducible_shadows",
    "count_matchings_by_genus",
    "count_shapes",
    "count_structures",
    "dominant_singularity",
    "genus",
    "hz_table",
    "irreducible_components",
    "is_irreducible",
    "is_shadow",
    "isolate_positive_roots",
    "resultant",
    "series_binomial_power",
    "series_compose",
    "series_inverse",
    "series_mul",
    "shadow",
    "shadow_set",
    "structure_growth",
    "theta_series",
]

__version__ = "0.1.0"
