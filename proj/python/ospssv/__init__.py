"""Exact Segal-Sugawara vectors for the orthosymplectic Lie superalgebra
osp(M|2n), with machine verification of the underlying identities."""

from ._core import (
    PoleAtEvaluationError,
    compute_phi,
    superdimension,
    verify_annihilation,
    verify_brauer,
    verify_centrality,
    verify_commutativity,
    verify_integral_rational,
    verify_psi,
    verify_rep,
)

__all__ = [
    "PoleAtEvaluationError",
    "compute_phi",
    "superdimension",
    "verify_annihilation",
    "verify_brauer",
    "verify_centrality",
    "verify_commutativity",
    "verify_integral_rational",
    "verify_psi",
    "verify_rep",
]
