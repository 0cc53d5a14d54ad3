"""Finite posets on the bases of a complex: Gale order, passive-set
containment order, the weak Gale order, order ideals and Gale truncations."""

from __future__ import annotations

from .activities import internally_passive
from .complexes import OrderedComplex, lex_key


class FinitePoset:
    """A reflexive-transitive relation on a finite list of hashable elements.

    The constructor closes the given pairs reflexively and transitively.
    Antisymmetry is not forced: some constructions naturally yield preorders,
    and `antisymmetry_violations` exposes any offending pairs.
    """

    def __init__(self, elements, pairs):
        self.elements = list(elements)
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate poset elements")
        index = {e: i for i, e in enumerate(self.elements)}
        m = len(self.elements)
        leq = [[False] * m for _ in range(m)]
        for i in range(m):
            leq[i][i] = True
        for a, b in pairs:
            leq[index[a]][index[b]] = True
        # Floyd–Warshall closure
        for k in range(m):
            row_k = leq[k]
            for i in range(m):
                if leq[i][k]:
                    row_i = leq[i]
                    for j in range(m):
                        if row_k[j]:
                            row_i[j] = True
        self._index = index
        self._leq = leq

    def leq(self, a, b):
        return self._leq[self._index[a]][self._index[b]]

    @property
    def antisymmetry_violations(self):
        out = []
        for i, a in enumerate(self.elements):
            for j in range(i + 1, len(self.elements)):
                if self._leq[i][j] and self._leq[j][i]:
                    out.append((a, self.elements[j]))
        return out

    def is_partial_order(self):
        return not self.antisymmetry_violations

    def relation_pairs(self):
        """All (a, b) with a ≤ b, including reflexive pairs."""
        return {
            (a, b)
            for i, a in enumerate(self.elements)
            for j, b in enumerate(self.elements)
            if self._leq[i][j]
        }

    def covers(self):
        """Cover relations a ⋖ b (no strictly intermediate element)."""
        out = []
        m = len(self.elements)
        for i in range(m):
            for j in range(m):
                if i == j or not self._leq[i][j] or self._leq[j][i]:
                    continue
                if not any(
                    k not in (i, j)
                    and self._leq[i][k]
                    and self._leq[k][j]
                    and not self._leq[k][i]
                    and not self._leq[j][k]
                    for k in range(m)
                ):
                    out.append((self.elements[i], self.elements[j]))
        return out

    def minimal_elements(self):
        return [
            a
            for i, a in enumerate(self.elements)
            if not any(j != i and self._leq[j][i] and not self._leq[i][j]
                       for j in range(len(self.elements)))
        ]

    def is_order_ideal(self, subset):
        subset = set(subset)
        if not subset <= set(self.elements):
            raise ValueError("subset contains non-elements")
        return all(
            b not in subset or a in subset
            for (a, b) in self.relation_pairs()
        )

    def order_ideals(self):
        """All downward-closed subsets, the empty one included."""
        down = {
            e: frozenset(
                a for a in self.elements if self.leq(a, e)
            )
            for e in self.elements
        }
        seen = {frozenset()}
        stack = [frozenset()]
        while stack:
            ideal = stack.pop()
            yield ideal
            for e in self.elements:
                if e in ideal:
                    continue
                if down[e] - {e} <= ideal:
                    grown = ideal | {e}
                    if grown not in seen:
                        seen.add(grown)
                        stack.append(grown)

    def to_json(self):
        def name(e):
            return sorted(e) if isinstance(e, frozenset) else e

        return {
            "elements": [name(e) for e in self.elements],
            "covers": [[name(a), name(b)] for a, b in self.covers()],
            "partial_order": self.is_partial_order(),
        }


def is_extension(p: FinitePoset, q: FinitePoset) -> bool:
    """True iff every relation of q also holds in p (same element set)."""
    if set(p.elements) != set(q.elements):
        raise ValueError("posets compare only over identical element sets")
    return q.relation_pairs() <= p.relation_pairs()


def _gale_leq(b1, b2):
    return all(x <= y for x, y in zip(lex_key(b1), lex_key(b2)))


def gale_poset(c: OrderedComplex) -> FinitePoset:
    """Componentwise order on the sorted vertex lists of the bases."""
    if not c.is_pure():
        raise ValueError("the Gale order compares bases of equal size")
    bases = sorted(c.facets, key=lex_key)
    pairs = [(a, b) for a in bases for b in bases if _gale_leq(a, b)]
    return FinitePoset(bases, pairs)


def int_poset(c: OrderedComplex) -> FinitePoset:
    """Bases ordered by containment of their internally passive sets.

    When two distinct bases share a passive set the result is a preorder;
    `antisymmetry_violations` reports the collisions instead of quotienting.
    """
    if not c.is_pure():
        raise ValueError("the passive-containment order needs a pure complex")
    bases = sorted(c.facets, key=lex_key)
    passive = {b: internally_passive(c, b) for b in bases}
    pairs = [(a, b) for a in bases for b in bases if passive[a] <= passive[b]]
    return FinitePoset(bases, pairs)


def weak_gale_poset(c: OrderedComplex) -> FinitePoset:
    """Transitive closure of the Gale relations visible inside the
    restrictions to B0 plus a face disjoint from B0."""
    if not c.is_pure():
        raise ValueError("weak Gale order needs a pure complex")
    bases = sorted(c.facets, key=lex_key)
    b0 = c.lex_min_basis()
    outside = sorted(frozenset(range(1, c.n + 1)) - b0)
    pairs = set()
    for i_face in (f for f in c.faces if f <= frozenset(outside)):
        window = b0 | i_face
        inside = [b for b in bases if b <= window]
        pairs.update(
            (a, b) for a in inside for b in inside if _gale_leq(a, b)
        )
    return FinitePoset(bases, pairs)


def gale_truncate(c: OrderedComplex, ideal) -> OrderedComplex:
    """Sub-complex whose bases are a downward-closed set of the Gale order."""
    ideal = {frozenset(b) for b in ideal}
    if not ideal:
        raise ValueError("truncation needs a nonempty ideal of bases")
    poset = gale_poset(c)
    if not ideal <= set(poset.elements):
        raise ValueError("ideal contains non-bases")
    if not poset.is_order_ideal(ideal):
        raise ValueError("basis set is not downward closed in the Gale order")
    return OrderedComplex(c.n, ideal)
