"""Naive reference implementations and instance generators.

Nothing here shares logic with the main modules: faces are tested by direct
containment in a facet, activities by literal scans, and enumeration is a
plain search over facet families.  Agreement with the fast paths is the
evidence the test suite relies on.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from .activities import ActivityRecord
from .axioms import is_matroid
from .complexes import OrderedComplex, lex_key, uniform_matroid
from .polynomials import BivariatePolynomial


def _is_face_naive(c, s):
    s = frozenset(s)
    return any(s <= f for f in c.facets)


def _subset_rank_naive(c, subset):
    subset = frozenset(subset)
    best = 0
    for f in c.facets:
        inter = f & subset
        for k in range(best + 1, len(inter) + 1):
            if any(_is_face_naive(c, comb) for comb in combinations(inter, k)):
                best = k
    return best


def corank_nullity_tutte(c: OrderedComplex) -> BivariatePolynomial:
    """Sum over all ground subsets of (x-1)^(r-r(A)) (y-1)^(|A|-r(A)).

    Only valid for matroids, which is enforced.
    """
    if not is_matroid(c).holds:
        raise ValueError("corank-nullity sum is an oracle for matroids only")
    r = c.rank
    x_minus = BivariatePolynomial({(1, 0): 1, (0, 0): -1})
    y_minus = BivariatePolynomial({(0, 1): 1, (0, 0): -1})
    acc = BivariatePolynomial()
    ground = list(range(1, c.n + 1))
    for size in range(c.n + 1):
        for sub in combinations(ground, size):
            ra = _subset_rank_naive(c, sub)
            acc = acc + x_minus ** (r - ra) * y_minus ** (size - ra)
    return acc


def circuits_by_definition(c: OrderedComplex):
    """Minimal non-faces by scanning every subset of the ground set."""
    ground = list(range(1, c.n + 1))
    non_faces = [
        frozenset(sub)
        for size in range(c.n + 1)
        for sub in combinations(ground, size)
        if not _is_face_naive(c, sub)
    ]
    return frozenset(
        s for s in non_faces if not any(t < s for t in non_faces)
    )


def h_vector_by_counting(c: OrderedComplex):
    """h-vector from the raw face census via the alternating binomial sum."""
    from math import comb

    d = c.rank
    ground = list(range(1, c.n + 1))
    f = [0] * (d + 1)
    for size in range(d + 1):
        for sub in combinations(ground, size):
            if _is_face_naive(c, sub):
                f[size] += 1
    return tuple(
        sum((-1) ** (k - j) * comb(d - j, k - j) * f[j] for j in range(k + 1))
        for k in range(d + 1)
    )


def activity_by_definition(c: OrderedComplex, basis) -> ActivityRecord:
    """Literal activity definitions: lex scan over all bases for internal
    activity; a fresh minimal-non-face search for external activity."""
    basis = frozenset(basis)
    if basis not in c.facets:
        raise ValueError(f"{sorted(basis)} is not a basis")
    ia = set()
    for b in basis:
        containing = [f for f in c.facets if basis - {b} <= f]
        if min(containing, key=lex_key) == basis:
            ia.add(b)
    ea = set()
    for e in range(1, c.n + 1):
        if e in basis:
            continue
        extended = sorted(basis | {e})
        for size in range(1, len(extended) + 1):
            for sub in combinations(extended, size):
                if e not in sub or _is_face_naive(c, sub):
                    continue
                if all(
                    _is_face_naive(c, set(sub) - {x}) for x in sub
                ) and min(sub) == e:
                    ea.add(e)
    outside = frozenset(range(1, c.n + 1)) - basis
    return ActivityRecord(
        basis=basis,
        internally_active=frozenset(ia),
        internally_passive=basis - frozenset(ia),
        externally_active=frozenset(ea),
        externally_passive=outside - frozenset(ea),
    )


def gale_pairs_by_definition(c: OrderedComplex):
    """All Gale relations (a, b), by direct componentwise comparison."""
    out = set()
    for a in c.facets:
        for b in c.facets:
            if all(x <= y for x, y in zip(sorted(a), sorted(b))):
                out.add((a, b))
    return out


def int_pairs_by_definition(c: OrderedComplex):
    """All passive-containment relations, with passive sets from the literal
    activity scan."""
    passive = {
        b: activity_by_definition(c, b).internally_passive for b in c.facets
    }
    return {
        (a, b)
        for a in c.facets
        for b in c.facets
        if passive[a] <= passive[b]
    }


# -- exhaustive enumeration ---------------------------------------------------


def canonical_form(c: OrderedComplex):
    """Lexicographically least facet list over all relabelings."""
    best = None
    for perm in permutations(range(1, c.n + 1)):
        facets = tuple(
            sorted(
                tuple(sorted(perm[v - 1] for v in f)) for f in c.facets
            )
        )
        if best is None or facets < best:
            best = facets
    return (c.n, best)


def enumerate_pure_complexes(n, d, allow_large=False):
    """All pure rank-d complexes on ground set 1..n, up to relabeling.

    Every nonempty family of d-subsets is such a complex (equal sizes make
    any family an antichain); loops are allowed, i.e. the support may be a
    proper subset of the ground set.
    """
    if n > 6 and not allow_large:
        raise ValueError("enumeration beyond n=6 must be requested explicitly")
    if not 0 <= d <= n:
        raise ValueError("rank out of range")
    subsets = [frozenset(s) for s in combinations(range(1, n + 1), d)]
    seen = set()
    for size in range(1, len(subsets) + 1):
        for family in combinations(subsets, size):
            c = OrderedComplex(n, family)
            key = canonical_form(c)
            if key in seen:
                continue
            seen.add(key)
            yield c


def enumerate_all_pure_complexes(n, allow_large=False):
    for d in range(n + 1):
        yield from enumerate_pure_complexes(n, d, allow_large=allow_large)


def brute_shelling_exists(c: OrderedComplex, limit=9) -> bool:
    """Search every facet ordering for one satisfying the shelling condition."""
    from .activities import is_shelling

    if not c.is_pure():
        raise ValueError("shellability search needs a pure complex")
    if len(c.facets) > limit:
        raise ValueError(f"too many facets for exhaustive search (> {limit})")
    for order in permutations(c.facets):
        valid, _ = is_shelling(c, order)
        if valid:
            return True
    return False


# -- rank <= 3 matroid enumeration -------------------------------------------


def _simple_rank3_line_families(k):
    """Families of 'long lines' on k points: subsets of size >= 3, pairwise
    sharing at most one point, none equal to the whole point set."""
    points = list(range(k))
    candidates = [
        frozenset(s)
        for size in range(3, k)
        for s in combinations(points, size)
    ]

    families = []

    def extend(start, family):
        families.append(tuple(family))
        for i in range(start, len(candidates)):
            line = candidates[i]
            if all(len(line & other) <= 1 for other in family):
                family.append(line)
                extend(i + 1, family)
                family.pop()

    extend(0, [])
    return families


def _matroid_from_structure(n, classes, rank, lines=()):
    """Bases from parallel classes plus, for rank 3, the long lines of the
    simplification; classes is a list of lists of elements."""
    rep = {e: i for i, cls in enumerate(classes) for e in cls}
    bases = []
    for sub in combinations(sorted(rep), rank):
        points = frozenset(rep[e] for e in sub)
        if len(points) != rank:
            continue
        if rank == 3 and any(points <= line for line in lines):
            continue
        bases.append(frozenset(sub))
    if not bases:
        return None
    return OrderedComplex(n, bases)


def _partitions_of(total, max_parts):
    """Weakly decreasing positive compositions of `total` with <= max_parts parts."""
    def rec(remaining, cap, parts):
        if remaining == 0:
            yield tuple(parts)
            return
        if len(parts) == max_parts:
            return
        for part in range(min(cap, remaining), 0, -1):
            parts.append(part)
            yield from rec(remaining - part, part, parts)
            parts.pop()

    yield from rec(total, total, [])


def _canonical_lines(lines, k):
    """Least relabeling of a line family on k points (points are 0..k-1)."""
    best = None
    for perm in permutations(range(k)):
        image = tuple(
            sorted(tuple(sorted(perm[x] for x in line)) for line in lines)
        )
        if best is None or image < best:
            best = image
    return best


def _line_family_classes(k):
    """(canonical family, automorphism group) per isomorphism class."""
    classes = {}
    for lines in _simple_rank3_line_families(k):
        key = _canonical_lines(lines, k)
        if key not in classes:
            canon = [frozenset(line) for line in key]
            aut = [
                perm
                for perm in permutations(range(k))
                if {frozenset(perm[x] for x in line) for line in canon}
                == set(canon)
            ]
            classes[key] = (canon, aut)
    return list(classes.values())


def enumerate_matroids_rank_le3(max_n):
    """All matroids of rank <= 3 on ground sets 1..n, n <= max_n, one
    representative per isomorphism class.

    A matroid here is determined by its loop count, the multiset of parallel
    class sizes, and (for rank 3) the line structure of the simplification;
    size assignments to points are deduplicated modulo the line family's
    automorphisms, so no whole-complex canonicalization is needed.
    """
    if max_n > 7:
        raise ValueError("enumeration is sized for ground sets up to 7")
    family_cache = {}

    def classes_from_sizes(n_loops, size_vector):
        out = []
        at = n_loops + 1
        for size in size_vector:
            out.append(list(range(at, at + size)))
            at += size
        return out

    for n in range(1, max_n + 1):
        for n_loops in range(n + 1):
            support = n - n_loops
            if support == 0:
                yield OrderedComplex(n, [frozenset()])
                continue
            for sizes in _partitions_of(support, support):
                k = len(sizes)
                if k == 1:
                    yield _matroid_from_structure(
                        n, classes_from_sizes(n_loops, sizes), 1
                    )
                if k >= 2:
                    yield _matroid_from_structure(
                        n, classes_from_sizes(n_loops, sizes), 2
                    )
                if k < 3:
                    continue
                if k not in family_cache:
                    family_cache[k] = _line_family_classes(k)
                for lines, aut in family_cache[k]:
                    # assignments of the size multiset to points, one per
                    # orbit of the automorphism group
                    assigned = set()
                    for vector in set(permutations(sizes)):
                        orbit_min = min(
                            tuple(vector[perm[i]] for i in range(k))
                            for perm in aut
                        )
                        assigned.add(orbit_min)
                    for vector in sorted(assigned):
                        m = _matroid_from_structure(
                            n, classes_from_sizes(n_loops, vector), 3, lines
                        )
                        if m is not None:
                            yield m


# -- random generators --------------------------------------------------------


def random_graphic_matroid(rng: random.Random, max_elements=9):
    """Spanning-forest complex of a small random multigraph, edges ordered
    randomly and labeled 1..m."""
    vertices = rng.randint(3, 5)
    m = rng.randint(vertices - 1, max_elements)
    edges = [
        tuple(sorted(rng.sample(range(vertices), 2))) for _ in range(m)
    ]
    bases = set()
    best = 0
    for sub in combinations(range(m), vertices - 1):
        parent = list(range(vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for idx in sub:
            a, b = edges[idx]
            ra, rb = find(a), find(b)
            if ra == rb:
                acyclic = False
                break
            parent[ra] = rb
        if acyclic:
            bases.add(frozenset(i + 1 for i in sub))
    if not bases:
        # all candidate forests had cycles at full size; fall back to
        # maximal forests of smaller rank
        for size in range(vertices - 2, -1, -1):
            for sub in combinations(range(m), size):
                parent = list(range(vertices))

                def find(x):
                    while parent[x] != x:
                        parent[x] = parent[parent[x]]
                        x = parent[x]
                    return x

                ok = True
                for idx in sub:
                    a, b = edges[idx]
                    ra, rb = find(a), find(b)
                    if ra == rb:
                        ok = False
                        break
                    parent[ra] = rb
                if ok:
                    bases.add(frozenset(i + 1 for i in sub))
            if bases:
                break
    return OrderedComplex(m, bases)


def random_matroid(rng: random.Random, max_elements=9):
    """A random small matroid: uniform or graphic, random labeling."""
    if rng.random() < 0.4:
        n = rng.randint(2, max_elements)
        d = rng.randint(1, n)
        base = uniform_matroid(d, n)
    else:
        base = random_graphic_matroid(rng, max_elements)
    perm = list(range(1, base.n + 1))
    rng.shuffle(perm)
    return base.relabel(perm)


def random_young_ideal(rng: random.Random, rows, cols, target=None):
    """A random order ideal of partitions inside a rows x cols box, grown by
    repeatedly adding a random addable partition."""
    from .shifted import Partition

    ideal = {Partition((), rows, cols)}
    size = target if target is not None else rng.randint(1, rows * cols + 2)
    while len(ideal) < size:
        addable = set()
        for p in ideal:
            for grown in p.up_neighbors():
                if grown not in ideal and all(
                    q in ideal for q in grown.down_neighbors()
                ):
                    addable.add(grown)
        if not addable:
            break
        pick = rng.choice(sorted(addable, key=lambda q: q.parts))
        # a box is only addable when everything below it is present,
        # so adding it keeps the set an ideal
        ideal.add(pick)
    return ideal


def random_shifted_complex(rng: random.Random, max_n=12):
    """A random pure shifted complex built from a random Young ideal."""
    from .shifted import shifted_from_ideal

    n = rng.randint(2, max_n)
    d = rng.randint(1, n - 1)
    ideal = random_young_ideal(rng, d, n - d)
    return shifted_from_ideal(d, n, ideal)


def random_gale_ideal(rng: random.Random, c: OrderedComplex):
    """A random nonempty order ideal of the Gale order on the bases."""
    from .posets import gale_poset

    poset = gale_poset(c)
    ideal = set(poset.minimal_elements())
    extra = rng.randint(0, len(poset.elements))
    for _ in range(extra):
        addable = [
            e
            for e in poset.elements
            if e not in ideal
            and all(
                other in ideal
                for other in poset.elements
                if other != e and poset.leq(other, e)
            )
        ]
        if not addable:
            break
        ideal.add(rng.choice(sorted(addable, key=lex_key)))
    return ideal
