"""Ordered simplicial complexes: class predicates, activities, basis posets,
activity polynomials, shifted multicomplexes and Laplacian spectra."""

from .complexes import (
    OrderedComplex,
    PSI_COLOOP,
    PSI_LOOP,
    Shuffle,
    connected_sum,
    join,
    new_complex,
    uniform_matroid,
)

__all__ = [
    "OrderedComplex",
    "PSI_COLOOP",
    "PSI_LOOP",
    "Shuffle",
    "connected_sum",
    "join",
    "new_complex",
    "uniform_matroid",
]

__version__ = "0.1.0"
