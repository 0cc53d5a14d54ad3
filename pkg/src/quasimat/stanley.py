"""h-vector decomposition machinery, passive-set splitting, O-sequence
tests, and the multicomplex witness search with its assembly step."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .activities import internally_passive
from .complexes import OrderedComplex, lex_key
from .polynomials import ONE, X, UnivariatePolynomial
from .shifted import Monomial, Multicomplex


def sub_complex(c: OrderedComplex, a_set, i_face):
    """(Ψ/I) restricted to A, relabeled; returns (complex, original labels)."""
    i_face = frozenset(i_face)
    a_set = frozenset(a_set) - i_face
    link = c.link_facets(i_face)
    labels = tuple(sorted(a_set))
    position = {v: i + 1 for i, v in enumerate(labels)}
    restricted = [f & a_set for f in link]
    keep = []
    for f in restricted:
        if not any(f < g for g in restricted):
            keep.append(frozenset(position[v] for v in f))
    return OrderedComplex(len(labels), keep or [frozenset()]), labels


def _faces_outside(c, a_set):
    """Faces of c avoiding A (the index set of the decomposition)."""
    a_set = frozenset(a_set)
    return sorted(
        (f for f in c.faces if not f & a_set), key=lambda f: (len(f), lex_key(f))
    )


def is_admissible(c: OrderedComplex, a_set) -> bool:
    """Every indexed sub-complex reaches the maximal possible rank d - |I|."""
    d = c.rank
    for i_face in _faces_outside(c, a_set):
        sub, _ = sub_complex(c, a_set, i_face)
        if sub.rank != d - len(i_face):
            return False
    return True


@dataclass(frozen=True)
class Decomposition:
    a_set: frozenset
    terms: tuple  # (I, h-polynomial of the sub-complex, corank deficit)
    reassembled: UnivariatePolynomial
    matches: bool
    refined: UnivariatePolynomial | None
    refined_matches: bool | None

    def to_json(self):
        return {
            "A": sorted(self.a_set),
            "terms": [
                {
                    "I": sorted(i),
                    "h": list(h.coeffs),
                    "deficit": deficit,
                }
                for i, h, deficit in self.terms
            ],
            "matches": self.matches,
            "refined_matches": self.refined_matches,
        }


def h_decomposition(c: OrderedComplex, a_set) -> Decomposition:
    """Split h(c) over the faces avoiding A.

    General form: h = Σ_I x^|I| (1-x)^{(d-|I|) - rank} h(sub), which follows
    from the f-polynomial splitting f(Ψ) = Σ_I x^|I| f(sub) under the f-to-h
    substitution.  When A is admissible the deficits vanish and the refined
    form Σ_I x^|I| h(sub) is also checked.
    """
    a_set = frozenset(a_set)
    d = c.rank
    terms = []
    total = UnivariatePolynomial()
    for i_face in _faces_outside(c, a_set):
        sub, _ = sub_complex(c, a_set, i_face)
        deficit = (d - len(i_face)) - sub.rank
        h_sub = sub.h_polynomial()
        terms.append((i_face, h_sub, deficit))
        total = total + X ** len(i_face) * (ONE - X) ** deficit * h_sub
    matches = total == c.h_polynomial()
    refined = None
    refined_matches = None
    if is_admissible(c, a_set):
        refined = UnivariatePolynomial()
        for i_face, h_sub, _ in terms:
            refined = refined + X ** len(i_face) * h_sub
        refined_matches = refined == c.h_polynomial()
    return Decomposition(
        a_set, tuple(terms), total, matches, refined, refined_matches
    )


def passive_splitting_check(c: OrderedComplex, a_set, split="complement") -> bool:
    """Basis-by-basis identity IP(B) = I ∪ IP(B∖I, sub-complex).

    split="complement" takes I = B∖A; split="first-basis" takes I = B∖B0
    (for use with B0 ⊆ A).
    """
    a_set = frozenset(a_set)
    b0 = c.lex_min_basis()
    for basis in c.facets:
        if split == "complement":
            i_face = basis - a_set
        elif split == "first-basis":
            i_face = basis - b0
        else:
            raise ValueError(f"unknown split {split!r}")
        sub, labels = sub_complex(c, a_set - i_face, i_face)
        position = {v: i + 1 for i, v in enumerate(labels)}
        inner_basis = frozenset(position[v] for v in basis - i_face)
        if inner_basis not in sub.facets:
            return False
        inner_passive = internally_passive(sub, inner_basis)
        lifted = frozenset(labels[v - 1] for v in inner_passive)
        if internally_passive(c, basis) != i_face | lifted:
            return False
    return True


# -- O-sequences --------------------------------------------------------------


def _macaulay_pseudopower(value, i):
    """The i-th Macaulay upper bound h_i -> h_i^<i> for the next degree."""
    if value == 0:
        return 0
    rep = []
    remaining = value
    at = i
    while remaining > 0 and at >= 1:
        a = at - 1
        while comb(a + 1, at) <= remaining:
            a += 1
        rep.append((a, at))
        remaining -= comb(a, at)
        at -= 1
    return sum(comb(a + 1, j + 1) for a, j in rep)


def is_O_sequence(h) -> bool:
    """Macaulay growth test for the degree census of some multicomplex."""
    h = list(h)
    if any(not isinstance(x, int) or x < 0 for x in h):
        raise ValueError("entries must be non-negative integers")
    if not h or h[0] != 1:
        return False
    for i in range(1, len(h) - 1):
        if h[i + 1] > _macaulay_pseudopower(h[i], i):
            return False
    if len(h) > 1 and h[1] == 0 and any(x for x in h[2:]):
        return False
    return True


def _monomials_of_degree(n_vars, degree):
    """All exponent tuples of the given total degree in n_vars variables."""
    if n_vars == 0:
        return [()] if degree == 0 else []
    out = []

    def rec(i, remaining, acc):
        if i == n_vars - 1:
            out.append(tuple(acc + [remaining]))
            return
        for take in range(remaining + 1):
            rec(i + 1, remaining - take, acc + [take])

    rec(0, degree, [])
    return out


def _census_of_closure(tops, n_vars):
    closure = set()
    stack = list(tops)
    while stack:
        m = stack.pop()
        if m in closure:
            continue
        closure.add(m)
        for i in range(n_vars):
            if m[i]:
                down = list(m)
                down[i] -= 1
                stack.append(tuple(down))
    top_degree = max((sum(m) for m in closure), default=0)
    census = [0] * (top_degree + 1)
    for m in closure:
        census[sum(m)] += 1
    return tuple(census)


def is_pure_O_sequence(h, search_limit=200_000):
    """Existence of a multicomplex with census h whose maximal monomials all
    have top degree.  Returns True/False, or None when the bounded search is
    inconclusive.
    """
    h = list(h)
    if not is_O_sequence(h):
        return False
    if len(h) == 1:
        return True
    d = len(h) - 1
    n_vars = h[1]
    tops = _monomials_of_degree(n_vars, d)
    if len(tops) < h[d]:
        return False
    if comb(len(tops), h[d]) > search_limit:
        return None
    for chosen in combinations(tops, h[d]):
        if _census_of_closure(chosen, n_vars) == tuple(h):
            return True
    return False


# -- conjecture witness search ------------------------------------------------


def _candidate_monomials(support, degree):
    """Monomials with the exact support and total degree (every exponent >= 1)."""
    support = sorted(support)
    k = len(support)
    if degree < k:
        return []
    out = []

    def rec(i, remaining, acc):
        if i == k - 1:
            out.append(Monomial.from_dict(dict(zip(support, acc + [remaining]))))
            return
        for take in range(1, remaining - (k - i - 1) + 1):
            rec(i + 1, remaining - take, acc + [take])

    if k == 0:
        return [Monomial.from_dict({})] if degree == 0 else []
    rec(0, degree, [])
    return sorted(out, key=lambda m: m.exponents)


def search_multicomplex(c: OrderedComplex, require_passive_order=False):
    """Backtracking search for a basis -> monomial witness.

    Bases are processed in a linear extension of the Gale order so that each
    prefix is itself a Gale ideal; divisibility between assigned monomials must
    imply the Gale relation, and the final monomial family must be
    divisor-closed.  Returns the lexicographically least witness
    (Multicomplex, assignment), or None.

    With require_passive_order=True the search additionally demands that
    passive-set containment implies divisibility.  That stronger sandwich is
    unsatisfiable in general: in the rank-3 uniform complex on 5 vertices the
    support and degree constraints force x4^2 and x5^2 to be assigned to bases
    whose passive sets are both contained in that of {3,4,5}, whose monomial
    has degree 3 and so cannot be divisible by both.
    """
    from .posets import gale_poset, int_poset

    b0 = c.lex_min_basis()
    gale = gale_poset(c)
    intp = int_poset(c) if require_passive_order else None
    bases = sorted(
        c.facets,
        key=lambda b: (sum(1 for o in c.facets if gale.leq(o, b)), lex_key(b)),
    )
    passive = {b: internally_passive(c, b) for b in bases}
    candidates = {
        b: _candidate_monomials(b - b0, len(passive[b])) for b in bases
    }
    assignment = {}

    def compatible(b, m):
        for other, om in assignment.items():
            for lo, hi, lom, him in ((other, b, om, m), (b, other, m, om)):
                if intp is not None and intp.leq(lo, hi) and not lom.divides(him):
                    return False
                if lom.divides(him) and not gale.leq(lo, hi):
                    return False
        return m not in assignment.values()

    def closed():
        family = set(assignment.values())
        return all(div in family for m in family for div in m.divisors())

    def backtrack(i):
        if i == len(bases):
            return closed()
        b = bases[i]
        for m in candidates[b]:
            if compatible(b, m):
                assignment[b] = m
                if backtrack(i + 1):
                    return True
                del assignment[b]
        return False

    if not backtrack(0):
        return None
    return Multicomplex(frozenset(assignment.values())), dict(assignment)


def reduction_assembly(c: OrderedComplex, sub_witnesses):
    """Glue restriction witnesses into a global one.

    `sub_witnesses` maps each face I of the complement of B0 with |I| < rank
    to the (multicomplex, assignment) witness of the restriction to B0 ∪ I,
    in the restriction's own 1..|A| labels.  Bases meeting B0 pick their
    monomial from the window B0 ∪ (B∖B0); bases disjoint from B0 get the
    squarefree monomial on their own elements.  Conflicting sub-witnesses
    raise.
    """
    b0 = c.lex_min_basis()
    assignment = {}
    for i_face, (sub_mc, sub_assignment) in sub_witnesses.items():
        i_face = frozenset(i_face)
        a_set = b0 | i_face
        labels = tuple(sorted(a_set))
        position = {v: i + 1 for i, v in enumerate(labels)}
        for inner_basis, monomial in sub_assignment.items():
            outer = frozenset(labels[v - 1] for v in inner_basis)
            if outer not in c.facets:
                continue
            lifted = Monomial.from_dict(
                {labels[v - 1]: e for v, e in monomial.exponents}
            )
            if assignment.get(outer, lifted) != lifted:
                raise ValueError(
                    f"inconsistent sub-witnesses on basis {sorted(outer)}"
                )
            assignment[outer] = lifted
    for basis in c.facets:
        if basis & b0:
            continue
        assignment[basis] = Monomial.from_dict({v: 1 for v in basis})
    missing = set(c.facets) - set(assignment)
    if missing:
        raise ValueError(
            f"no window covered bases {[sorted(b) for b in missing]}"
        )
    return Multicomplex(frozenset(assignment.values())), assignment


def stanley_purity_check(c: OrderedComplex, multicomplex: Multicomplex) -> bool:
    """All maximal monomials of the witness share one degree."""
    return multicomplex.is_pure()
