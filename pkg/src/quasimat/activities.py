"""Internal/external activity, shelling verification and restriction sets."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complexes import OrderedComplex, lex_key
from .polynomials import UnivariatePolynomial


@dataclass(frozen=True)
class ActivityRecord:
    basis: frozenset
    internally_active: frozenset
    internally_passive: frozenset
    externally_active: frozenset
    externally_passive: frozenset

    def to_json(self):
        return {
            "basis": sorted(self.basis),
            "internally_active": sorted(self.internally_active),
            "internally_passive": sorted(self.internally_passive),
            "externally_active": sorted(self.externally_active),
            "externally_passive": sorted(self.externally_passive),
        }


def activity(c: OrderedComplex, basis) -> ActivityRecord:
    """Activity partition of the ground set with respect to a basis.

    Internal activity uses the exchange form: b is active iff no smaller
    non-member can replace it and still give a basis.  External activity of e
    asks for a circuit inside B + e with e as its smallest element.
    """
    basis = frozenset(basis)
    if basis not in c.facets:
        raise ValueError(f"{sorted(basis)} is not a basis")
    ia = set()
    for b in basis:
        without = basis - {b}
        if not any(
            bp not in basis and (without | {bp}) in c.facets
            for bp in range(1, b)
        ):
            ia.add(b)
    ea = set()
    for e in range(1, c.n + 1):
        if e in basis:
            continue
        extended = basis | {e}
        if any(e == min(circ) and circ <= extended for circ in c.circuits):
            ea.add(e)
    outside = frozenset(range(1, c.n + 1)) - basis
    return ActivityRecord(
        basis=basis,
        internally_active=frozenset(ia),
        internally_passive=basis - ia,
        externally_active=frozenset(ea),
        externally_passive=outside - ea,
    )


def internally_passive(c: OrderedComplex, basis) -> frozenset:
    return activity(c, basis).internally_passive


def is_shelling(c: OrderedComplex, order):
    """Check the shelling condition for an ordering of the bases.

    Returns (valid, restriction_sets); restriction_sets is a list aligned with
    the order (the unique minimal new face of each basis) when valid, else None.
    """
    order = [frozenset(b) for b in order]
    if not c.is_pure():
        raise ValueError("shelling orders are defined for pure complexes only")
    if sorted(order, key=lex_key) != sorted(c.facets, key=lex_key) or len(order) != len(c.facets):
        raise ValueError("order is not a permutation of the bases")

    for j, bj in enumerate(order):
        swaps = [
            b
            for b in bj
            if any((bj - {b}) <= order[k] for k in range(j))
        ]
        for i in range(j):
            if not any(b not in order[i] for b in swaps):
                return False, None

    return True, restriction_sets(order)


def restriction_sets(order):
    """Minimal new faces along a facet order, computed from the definition."""
    out = []
    for j, bj in enumerate(order):
        elems = sorted(bj)
        new_faces = [
            frozenset(sub)
            for size in range(len(elems) + 1)
            for sub in combinations(elems, size)
            if not any(frozenset(sub) <= order[i] for i in range(j))
        ]
        minimal = [s for s in new_faces if not any(t < s for t in new_faces)]
        if len(minimal) != 1:
            raise ValueError("order has no unique minimal new face; not a shelling")
        out.append(minimal[0])
    return out


def lex_order(c: OrderedComplex):
    return sorted(c.facets, key=lex_key)


def lex_shelling_check(c: OrderedComplex) -> bool:
    """True iff lex order shells c and every restriction set equals IP(B)."""
    order = lex_order(c)
    valid, restrictions = is_shelling(c, order)
    if not valid:
        return False
    return all(
        r == activity(c, b).internally_passive
        for b, r in zip(order, restrictions)
    )


def h_from_activities(c: OrderedComplex) -> UnivariatePolynomial:
    """Generating polynomial of internally passive set sizes over the bases."""
    degrees = [len(activity(c, b).internally_passive) for b in c.facets]
    coeffs = [0] * (max(degrees) + 1)
    for d in degrees:
        coeffs[d] += 1
    return UnivariatePolynomial(coeffs)
