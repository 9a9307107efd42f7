"""Exact computations for the Landau-Ginzburg mirrors of quadrics Q_N.

Submodules: ``exact`` (Laurent polynomials, rational functions),
``cohomology`` (quantum cohomology of Q_N), ``lg_models`` (the four mirror
presentations and the maps between them), ``quiver``, ``critical``,
``lie_matrix``, ``flat_sections``, ``dmodule``, ``suites`` and ``cli``.
"""

__version__ = "0.1.0"

from .exact import LaurentPolynomial, RationalFunction, rf_equal
from .cohomology import SchubertClass, schubert_basis, quantum_chevalley
from .lg_models import build_model, canonical_model, givental_model, lusztig_model, przyjalkowski_model
from .flat_sections import closed_form_coefficient, gw_invariant, hypergeometric_series

__all__ = [
    "LaurentPolynomial",
    "RationalFunction",
    "rf_equal",
    "SchubertClass",
    "schubert_basis",
    "quantum_chevalley",
    "build_model",
    "canonical_model",
    "givental_model",
    "lusztig_model",
    "przyjalkowski_model",
    "closed_form_coefficient",
    "gw_invariant",
    "hypergeometric_series",
]
