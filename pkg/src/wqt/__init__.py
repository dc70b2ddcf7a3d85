"""Monomial expansion of deformed W-algebra fields with exact (q, t) coefficients.

Typical use::

    from wqt import root_data, fundamental, verify_cancellation, specialize_t1

    fe = fundamental(root_data("C3"), 2)
    fe.status                      # "Completed"
    verify_cancellation(fe).ok     # True
    specialize_t1(fe).render()
"""

from .cartan import LieType, RootData, a_monomial, build_root_data, root_data
from .catalog import CatalogEntry, catalog, compare, is_covered
from .coeff import FactoredCoeff, equals, evaluate, limit_t1, step_coefficient
from .engine import (
    COMPLETED,
    FAILED,
    TRUNCATED,
    ExpansionConfig,
    FieldExpansion,
    expand,
    from_json,
    fundamental,
    to_dot,
    to_json,
)
from .errors import WqtError
from .limit import QCharacter, specialize_t1, weight_multiset
from .monomial import Monomial, Spectral, parse_monomial, render_monomial
from .verifier import ResidueReport, verify_cancellation

__all__ = [
    "COMPLETED", "FAILED", "TRUNCATED",
    "CatalogEntry", "ExpansionConfig", "FactoredCoeff", "FieldExpansion", "LieType",
    "Monomial", "QCharacter", "ResidueReport", "RootData", "Spectral", "WqtError",
    "a_monomial", "build_root_data", "catalog", "compare", "equals", "evaluate", "expand",
    "from_json", "fundamental", "is_covered", "limit_t1", "parse_monomial", "render_monomial",
    "root_data", "specialize_t1", "step_coefficient", "to_dot", "to_json",
    "verify_cancellation", "weight_multiset",
]
