"""Kundu realizations of degree sequences and K-swap navigation between them.

Vertices are 0-indexed. Edges are (u, v) pairs with u < v. A realization is a
dict {"graph": [[u, v], ...], "factor": [[u, v], ...]}, optionally with "n".
"""

from ._core import (
    DEGREE_BOUND,
    KunduError,
    embed_factor,
    enumerate_kundu_realizations,
    enumerate_perfect_matchings,
    enumerate_realizations,
    factor_coverage,
    is_graphic,
    kundu_feasible,
    kundu_realize,
    metagraph,
    navigate,
    realize,
    verify_trace,
)

__all__ = [
    "DEGREE_BOUND",
    "KunduError",
    "embed_factor",
    "enumerate_kundu_realizations",
    "enumerate_perfect_matchings",
    "enumerate_realizations",
    "factor_coverage",
    "is_graphic",
    "kundu_feasible",
    "kundu_realize",
    "metagraph",
    "navigate",
    "realize",
    "verify_trace",
]
