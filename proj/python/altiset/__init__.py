"""Significance (altiset) toolkit: non-dominated sets of finite relations."""

from ._core import (
    AltisetError,
    CyclicRelationError,
    Relation,
    altiset,
    altiset_of_system,
    chain_coloring,
    collective_altiset,
    decreasingness_index,
    epsilon,
    evolve,
    increasing_decomposition,
    increasingness_index,
    layers,
    longest_chain,
    pairwise_elimination,
    skyline,
)

__version__ = "0.1.0"

__all__ = [
    "AltisetError",
    "CyclicRelationError",
    "Relation",
    "altiset",
    "altiset_of_system",
    "chain_coloring",
    "collective_altiset",
    "decreasingness_index",
    "epsilon",
    "evolve",
    "increasing_decomposition",
    "increasingness_index",
    "layers",
    "longest_chain",
    "pairwise_elimination",
    "skyline",
]
