"""Tiny constructors shared across the test modules."""

from quasimat.complexes import OrderedComplex


def fs(*elems):
    return frozenset(elems)


def complex_of(n, facets):
    return OrderedComplex(n, [frozenset(f) for f in facets])
