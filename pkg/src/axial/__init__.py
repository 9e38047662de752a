"""Exact symbolic toolkit for 2-generated primitive axial algebras.

Scalars live in the rational function field Q(a, b, x, y), optionally
extended by a primitive cube root of unity.  On top of that sit exact
linear algebra with genericity certificates, fusion laws and their
gradings, finite-dimensional commutative algebras with axis checks,
the relators of the universal algebra, and a catalog of the known
algebras for three-eigenvalue laws.
"""

from .errors import AxialError
from .field import ONE, ZERO, MultiPoly, Scalar, param, parse_poly, parse_scalar
from .linalg import Matrix, Subspace, Vect, kernel, rref
from .fusion import (
    Character,
    FusionLaw,
    GradingGroup,
    characters,
    grading_group,
    is_sublaw,
    law_checks,
    law_isomorphism,
    smith_normal_form,
)
from .algebra import (
    Algebra,
    AlgebraMap,
    AxisReport,
    EigenDecomposition,
    check_axis,
    check_map,
    eigendecompose,
    ideal_closure,
    marked_iso,
    minimal_fusion_law,
    miyamoto,
    miyamoto_group_order,
    map_order,
    phi,
    quotient,
    subalgebra_closure,
)
from .relators import MagmaWord, RelatorReport, check_all, enumerate_words, word_counts

__version__ = "0.1.0"

__all__ = [
    "AxialError",
    "ONE",
    "ZERO",
    "MultiPoly",
    "Scalar",
    "param",
    "parse_poly",
    "parse_scalar",
    "Matrix",
    "Subspace",
    "Vect",
    "kernel",
    "rref",
    "Character",
    "FusionLaw",
    "GradingGroup",
    "characters",
    "grading_group",
    "is_sublaw",
    "law_checks",
    "law_isomorphism",
    "smith_normal_form",
    "Algebra",
    "AlgebraMap",
    "AxisReport",
    "EigenDecomposition",
    "check_axis",
    "check_map",
    "eigendecompose",
    "ideal_closure",
    "marked_iso",
    "minimal_fusion_law",
    "miyamoto",
    "miyamoto_group_order",
    "map_order",
    "phi",
    "quotient",
    "subalgebra_closure",
    "MagmaWord",
    "RelatorReport",
    "check_all",
    "enumerate_words",
    "word_counts",
]
