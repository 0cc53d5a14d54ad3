"""Ordered simplicial complexes on a ground set 1..n and their structural operations.

A complex is stored by its facets (the bases).  Faces are frozensets of
1-based integers; the natural order of the integers is the ground-set order.
All values are immutable after construction and every operation is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

Face = frozenset


def lex_key(s) -> tuple:
    """Sort key realizing lexicographic comparison of vertex sets."""
    return tuple(sorted(s))


def maximal_members(family):
    """Inclusion-maximal members of a family of sets."""
    sets = sorted({frozenset(s) for s in family}, key=len, reverse=True)
    out = []
    for s in sets:
        if not any(s < t for t in out):
            out.append(s)
    return frozenset(out)


class OrderedComplex:
    """Ground set {1..n} with the natural order, plus the set of facets."""

    def __init__(self, n, facets):
        facets = list(facets)
        if not facets:
            raise ValueError("a complex needs at least one facet (possibly the empty face)")
        if n < 0:
            raise ValueError("ground set size must be non-negative")
        for f in facets:
            for v in f:
                if not (1 <= v <= n):
                    raise ValueError(f"vertex {v} out of range 1..{n}")
        self.n = n
        self.facets = maximal_members(facets)

    def __eq__(self, other):
        if not isinstance(other, OrderedComplex):
            return NotImplemented
        return self.n == other.n and self.facets == other.facets

    def __hash__(self):
        return hash((self.n, self.facets))

    def __repr__(self):
        shown = sorted(self.facets, key=lex_key)
        return f"OrderedComplex(n={self.n}, facets={[sorted(f) for f in shown]})"

    # -- basic queries ----------------------------------------------------

    @cached_property
    def faces(self):
        """All faces, including the empty face."""
        out = {frozenset()}
        for facet in self.facets:
            elems = sorted(facet)
            for k in range(1, len(elems) + 1):
                out.update(frozenset(c) for c in combinations(elems, k))
        return frozenset(out)

    def is_face(self, s):
        return frozenset(s) in self.faces

    @cached_property
    def circuits(self):
        """Inclusion-minimal non-faces."""
        faces = self.faces
        candidates = set()
        for f in faces:
            for v in range(1, self.n + 1):
                if v not in f:
                    s = f | {v}
                    if s not in faces:
                        candidates.add(s)
        return frozenset(
            c for c in candidates if all(c - {x} in faces for x in c)
        )

    @cached_property
    def rank(self):
        return max(len(f) for f in self.facets)

    def rank_of(self, subset):
        subset = frozenset(subset)
        if any(not 1 <= v <= self.n for v in subset):
            raise ValueError("subset out of range")
        return max((len(f) for f in self.faces if f <= subset), default=0)

    @cached_property
    def loops(self):
        """Elements in no basis."""
        support = frozenset().union(*self.facets) if self.facets else frozenset()
        return frozenset(range(1, self.n + 1)) - support

    @cached_property
    def coloops(self):
        """Elements in every basis."""
        return frozenset.intersection(*self.facets)

    @cached_property
    def vertices(self):
        return frozenset(range(1, self.n + 1)) - self.loops

    def is_pure(self):
        return len({len(f) for f in self.facets}) == 1

    def lex_min_basis(self):
        return min(self.facets, key=lex_key)

    # -- label-preserving helpers -----------------------------------------

    def facets_within(self, subset):
        """Facets of the restriction to `subset`, in original labels."""
        subset = frozenset(subset)
        return maximal_members(f & subset for f in self.facets)

    def link_facets(self, face):
        """Facets of the link of `face`, in original labels."""
        face = frozenset(face)
        if face not in self.faces:
            raise ValueError(f"{sorted(face)} is not a face")
        return maximal_members(f - face for f in self.facets if face <= f)

    def lex_min_basis_of_contraction(self, face):
        """Lex-smallest basis of the contraction by `face`, original labels."""
        return min(self.link_facets(face), key=lex_key)

    # -- structural operations --------------------------------------------

    def restrict(self, subset):
        """Restriction to `subset`, relabeled order-preservingly to 1..|subset|."""
        complex_, _ = self.restrict_with_labels(subset)
        return complex_

    def restrict_with_labels(self, subset):
        """Restriction plus the tuple of original labels of the new ground set."""
        labels = tuple(sorted(frozenset(subset)))
        if any(not 1 <= v <= self.n for v in labels):
            raise ValueError("subset out of range")
        position = {v: i + 1 for i, v in enumerate(labels)}
        facets = [
            frozenset(position[v] for v in f)
            for f in self.facets_within(labels)
        ]
        return OrderedComplex(len(labels), facets or [frozenset()]), labels

    def delete_element(self, e):
        """Deletion of a non-coloop element: restriction to the complement."""
        if e in self.coloops:
            raise ValueError(f"cannot delete coloop {e}")
        if not 1 <= e <= self.n:
            raise ValueError(f"element {e} out of range")
        return self.restrict(frozenset(range(1, self.n + 1)) - {e})

    def contract_vertex(self, v):
        """Contraction (link) of a vertex, relabeled to 1..n-1."""
        return self.contract_set([v])

    def contract_set(self, face):
        """Contraction by an independent set of vertices, relabeled."""
        complex_, _ = self.contract_set_with_labels(face)
        return complex_

    def contract_set_with_labels(self, face):
        face = frozenset(face)
        if face & self.loops:
            raise ValueError("cannot contract a loop")
        link = self.link_facets(face)
        labels = tuple(v for v in range(1, self.n + 1) if v not in face)
        position = {v: i + 1 for i, v in enumerate(labels)}
        facets = [frozenset(position[v] for v in f) for f in link]
        return OrderedComplex(len(labels), facets or [frozenset()]), labels

    def skeleton(self, k):
        """Sub-complex of all faces of rank at most k."""
        if not 0 <= k <= self.rank:
            raise ValueError(f"skeleton rank {k} out of range 0..{self.rank}")
        facets = [f for f in self.faces if len(f) == k]
        return OrderedComplex(self.n, facets or [frozenset()])

    def relabel(self, perm):
        """Image under a permutation of 1..n, given as a sequence (perm[i-1] = image of i)."""
        perm = tuple(perm)
        if sorted(perm) != list(range(1, self.n + 1)):
            raise ValueError("not a permutation of 1..n")
        return OrderedComplex(
            self.n, [frozenset(perm[v - 1] for v in f) for f in self.facets]
        )

    # -- enumerative invariants -------------------------------------------

    def f_vector(self):
        """(f_0, ..., f_d) with f_j the number of faces of rank j; f_0 = 1."""
        counts = [0] * (self.rank + 1)
        for f in self.faces:
            counts[len(f)] += 1
        return tuple(counts)

    def h_vector(self):
        """Binomial transform of the f-vector; negative entries possible when non-pure."""
        return tuple(self.h_polynomial().padded(self.rank + 1))

    def h_polynomial(self):
        from .polynomials import ONE, X, UnivariatePolynomial

        d = self.rank
        one_minus_x = ONE - X
        acc = UnivariatePolynomial()
        for j, fj in enumerate(self.f_vector()):
            acc = acc + fj * X**j * one_minus_x ** (d - j)
        return acc

    # -- serialization -----------------------------------------------------

    def to_json(self):
        return {
            "n": self.n,
            "facets": [sorted(f) for f in sorted(self.facets, key=lex_key)],
        }

    @classmethod
    def from_json(cls, data):
        return cls(int(data["n"]), [frozenset(f) for f in data["facets"]])


def new_complex(n, facets):
    """Build a complex from any generating family; keeps the maximal members."""
    return OrderedComplex(n, facets)


@dataclass(frozen=True)
class Shuffle:
    """Order-preserving embeddings of two ground sets into their disjoint union."""

    left_positions: tuple
    right_positions: tuple

    def __post_init__(self):
        left, right = self.left_positions, self.right_positions
        total = len(left) + len(right)
        if sorted(left + right) != list(range(1, total + 1)):
            raise ValueError("shuffle images must partition 1..(n+n')")
        if list(left) != sorted(left) or list(right) != sorted(right):
            raise ValueError("shuffle embeddings must be order preserving")

    @classmethod
    def concatenation(cls, n_left, n_right):
        return cls(
            tuple(range(1, n_left + 1)),
            tuple(range(n_left + 1, n_left + n_right + 1)),
        )

    def embed_left(self, s):
        return frozenset(self.left_positions[v - 1] for v in s)

    def embed_right(self, s):
        return frozenset(self.right_positions[v - 1] for v in s)


def join(c1: OrderedComplex, c2: OrderedComplex, shuffle: Shuffle | None = None):
    """Join of two complexes along a shuffle of their ground sets."""
    if shuffle is None:
        shuffle = Shuffle.concatenation(c1.n, c2.n)
    if len(shuffle.left_positions) != c1.n or len(shuffle.right_positions) != c2.n:
        raise ValueError("shuffle shape does not match the ground sets")
    facets = [
        shuffle.embed_left(f1) | shuffle.embed_right(f2)
        for f1 in c1.facets
        for f2 in c2.facets
    ]
    return OrderedComplex(c1.n + c2.n, facets)


def connected_sum(c1: OrderedComplex, c2: OrderedComplex):
    """Glue along the lex-smallest bases; the second complex's extra elements go last.

    The merged order is the simplest order-preserving choice: all of the first
    ground set, then the unglued part of the second.  For other interleavings
    see `connected_sum_shuffled`.
    """
    return connected_sum_shuffled(
        c1, c2, Shuffle.concatenation(c1.n, c2.n - c2.rank)
    )


def connected_sum_shuffled(c1, c2, shuffle: Shuffle):
    """Connected sum with an explicit shuffle of E and E' minus the glued basis."""
    if c1.rank != c2.rank:
        raise ValueError("connected sum requires equal ranks")
    b0 = sorted(c1.lex_min_basis())
    b0p = sorted(c2.lex_min_basis())
    rest = [v for v in range(1, c2.n + 1) if v not in set(b0p)]
    if len(shuffle.left_positions) != c1.n or len(shuffle.right_positions) != len(rest):
        raise ValueError("shuffle shape does not match the glued ground sets")
    # elements of c2: glued basis goes through c1's embedding of B0,
    # the rest through the right injection
    glue = {u: v for u, v in zip(b0p, b0)}
    position_of_rest = {u: i + 1 for i, u in enumerate(rest)}

    def map_c2(vertex):
        if vertex in glue:
            return next(iter(shuffle.embed_left([glue[vertex]])))
        return next(iter(shuffle.embed_right([position_of_rest[vertex]])))

    facets = [shuffle.embed_left(f) for f in c1.facets]
    facets += [frozenset(map_c2(v) for v in f) for f in c2.facets]
    return OrderedComplex(c1.n + len(rest), facets)


PSI_LOOP = OrderedComplex(1, [frozenset()])
PSI_COLOOP = OrderedComplex(1, [frozenset({1})])


def uniform_matroid(d, n):
    """Ordered uniform matroid U_{d,n}: all d-subsets are bases."""
    if not 0 <= d <= n:
        raise ValueError("rank must be between 0 and n")
    return OrderedComplex(
        n, [frozenset(c) for c in combinations(range(1, n + 1), d)]
    )
