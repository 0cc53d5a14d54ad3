"""Shifted complexes from Young-lattice ideals, the partition/basis
dictionary, and the two equivalent basis-to-monomial constructions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complexes import OrderedComplex, lex_key


@dataclass(frozen=True)
class Partition:
    """A partition drawn inside a rows x cols bounding box.

    `parts` is the weakly decreasing tuple of positive row lengths.
    """

    parts: tuple
    rows: int
    cols: int

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts if p)
        object.__setattr__(self, "parts", parts)
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be weakly decreasing")
        if len(parts) > self.rows or any(p > self.cols for p in parts):
            raise ValueError("partition does not fit the box")

    def size(self):
        return sum(self.parts)

    def contains(self, other):
        padded = self.parts + (0,) * (len(other.parts) - len(self.parts))
        return all(p >= q for p, q in zip(padded, other.parts))

    def up_neighbors(self):
        """Partitions obtained by adding one box, inside the bounding box."""
        out = []
        for i in range(min(len(self.parts) + 1, self.rows)):
            grown = list(self.parts) + [0] * (i + 1 - len(self.parts))
            grown[i] += 1
            try:
                out.append(Partition(tuple(grown), self.rows, self.cols))
            except ValueError:
                continue
        return out

    def down_neighbors(self):
        """Partitions obtained by removing one box."""
        out = []
        for i in range(len(self.parts)):
            shrunk = list(self.parts)
            shrunk[i] -= 1
            try:
                out.append(Partition(tuple(shrunk), self.rows, self.cols))
            except ValueError:
                continue
        return out

    def to_json(self):
        return list(self.parts)


def durfee(parts) -> int:
    """Side of the largest square fitting in the diagram (parts descending)."""
    parts = tuple(parts)
    k = 0
    while k < len(parts) and parts[k] >= k + 1:
        k += 1
    return k


def basis_to_partition(basis, d, n) -> Partition:
    """Sorted basis (v_1 < ... < v_d) to the partition with parts v_i - i."""
    v = sorted(basis)
    if len(v) != d or any(not 1 <= x <= n for x in v):
        raise ValueError(f"{v} is not a {d}-subset of 1..{n}")
    ascending = [x - i for i, x in enumerate(v, start=1)]
    return Partition(tuple(reversed(ascending)), d, n - d)


def partition_to_basis(p: Partition, d=None, n=None) -> frozenset:
    d = p.rows if d is None else d
    n = p.rows + p.cols if n is None else n
    if d != p.rows or n - d != p.cols:
        raise ValueError("box does not match the requested ground set")
    padded = [0] * (d - len(p.parts)) + list(reversed(p.parts))
    return frozenset(x + i for i, x in enumerate(padded, start=1))


@dataclass(frozen=True)
class Monomial:
    """Monomial in variables indexed by ground-set elements."""

    exponents: tuple  # sorted tuple of (variable, positive exponent)

    @classmethod
    def from_dict(cls, exps):
        return cls(tuple(sorted((v, e) for v, e in exps.items() if e)))

    def as_dict(self):
        return dict(self.exponents)

    def degree(self):
        return sum(e for _, e in self.exponents)

    def support(self):
        return frozenset(v for v, _ in self.exponents)

    def divides(self, other):
        mine = self.as_dict()
        theirs = other.as_dict()
        return all(theirs.get(v, 0) >= e for v, e in mine.items())

    def divisors(self):
        """All monomial divisors, including 1 and the monomial itself."""
        items = list(self.exponents)

        def rec(i):
            if i == len(items):
                yield {}
                return
            v, e = items[i]
            for rest in rec(i + 1):
                for take in range(e + 1):
                    out = dict(rest)
                    if take:
                        out[v] = take
                    yield out

        return {Monomial.from_dict(d) for d in rec(0)}

    def to_json(self):
        return {str(v): e for v, e in self.exponents}

    def __repr__(self):
        if not self.exponents:
            return "1"
        return "*".join(
            f"x{v}^{e}" if e > 1 else f"x{v}" for v, e in self.exponents
        )


@dataclass(frozen=True)
class Multicomplex:
    monomials: frozenset

    def is_divisor_closed(self):
        return all(
            div in self.monomials
            for m in self.monomials
            for div in m.divisors()
        )

    def degree_census(self):
        """h_i = number of monomials of degree i, as a tuple."""
        if not self.monomials:
            return ()
        top = max(m.degree() for m in self.monomials)
        out = [0] * (top + 1)
        for m in self.monomials:
            out[m.degree()] += 1
        return tuple(out)

    def maximal_monomials(self):
        return [
            m
            for m in self.monomials
            if not any(other != m and m.divides(other) for other in self.monomials)
        ]

    def is_pure(self):
        degrees = {m.degree() for m in self.maximal_monomials()}
        return len(degrees) <= 1

    def to_json(self):
        return [
            m.to_json()
            for m in sorted(self.monomials, key=lambda m: (m.degree(), m.exponents))
        ]


# -- shifted complexes --------------------------------------------------------


def shifted_from_ideal(d, n, partitions) -> OrderedComplex:
    """The pure complex whose bases correspond to an ideal of partitions
    in the d x (n-d) box."""
    partitions = set(partitions)
    if not partitions:
        raise ValueError("the ideal must contain at least the empty partition")
    for p in partitions:
        if (p.rows, p.cols) != (d, n - d):
            raise ValueError("partition box does not match (d, n)")
        for q in p.down_neighbors():
            if q not in partitions:
                raise ValueError(
                    f"not an order ideal: {q.parts} missing below {p.parts}"
                )
    return OrderedComplex(n, [partition_to_basis(p) for p in partitions])


def is_shifted(c: OrderedComplex) -> bool:
    """Every basis element may be replaced by any smaller non-member."""
    if not c.is_pure():
        return False
    for b in c.facets:
        for x in b:
            for i in range(1, x):
                if i not in b and (b - {x}) | {i} not in c.facets:
                    return False
    return True


def young_ideal_of(c: OrderedComplex):
    """The partition ideal of a shifted complex."""
    if not is_shifted(c):
        raise ValueError("complex is not shifted")
    d = c.rank
    return {basis_to_partition(b, d, c.n) for b in c.facets}


# -- monomial constructions ---------------------------------------------------


def monomial_inductive(p: Partition) -> Monomial:
    """Recursive construction peeling off the Durfee square.

    The k Durfee rows pick out the k largest basis elements as variables;
    exponents come from the residual partition below the square (recursively
    built in its (rows-k) x k box), shifted up by one.
    """
    def rec(parts, rows, cols):
        parts = tuple(parts)
        if not parts:
            return {}
        k = durfee(parts)
        basis = sorted(
            partition_to_basis(Partition(parts, rows, cols))
        )
        top = basis[rows - k:]
        residual = parts[k:]
        sub = rec(residual, rows - k, k)
        return {
            top[j - 1]: sub.get(rows - k + j, 0) + 1 for j in range(1, k + 1)
        }

    return Monomial.from_dict(rec(p.parts, p.rows, p.cols))


def monomial_bouncing_light(p: Partition) -> Monomial:
    """Mirror construction: a light ray is shot leftward along each Durfee
    row; it bounces off the left wall onto the diagonal, and the staircase
    boundary turns it horizontal again at the first lower row whose length
    equals the vertical distance travelled.  The exponent of the j-th Durfee
    row's variable is the number of left-wall bounces; the top Durfee row
    feeds the largest variable.
    """
    parts = p.parts
    k = durfee(parts)
    if k == 0:
        return Monomial.from_dict({})
    basis = sorted(partition_to_basis(p))
    top = basis[p.rows - k:]  # ascending: top[j] belongs to Durfee row k-j
    exponents = {}
    for row in range(1, k + 1):
        bounces = 1
        at = row
        while True:
            nxt = next(
                (
                    r
                    for r in range(at + 1, len(parts) + 1)
                    if parts[r - 1] == r - at
                ),
                None,
            )
            if nxt is None:
                break
            bounces += 1
            at = nxt
        exponents[top[k - row]] = bounces
    return Monomial.from_dict(exponents)


def multicomplex_of_shifted(c: OrderedComplex) -> tuple:
    """Multicomplex and basis-to-monomial assignment for a shifted complex."""
    if not is_shifted(c):
        raise ValueError("complex is not shifted")
    d = c.rank
    assignment = {
        b: monomial_inductive(basis_to_partition(b, d, c.n)) for b in c.facets
    }
    return Multicomplex(frozenset(assignment.values())), assignment


# -- conjecture clause checking -----------------------------------------------


def verify_conjecture_conditions(c, multicomplex, assignment, family=None):
    """Check the four clauses tying a multicomplex witness to a complex.

    `assignment` maps each basis to its monomial.  `family`, when given, is a
    callable producing (multicomplex, assignment) for restrictions of c; it
    enables the nested-restriction clause, which is otherwise reported as None.
    Returns a dict clause -> bool/None.
    """
    from .activities import internally_passive
    from .posets import gale_poset, int_poset

    b0 = c.lex_min_basis()
    report = {}

    variables = frozenset().union(
        *(m.support() for m in multicomplex.monomials)
    ) if multicomplex.monomials else frozenset()
    report["variables_outside_first_basis"] = variables == c.vertices - b0

    bijection = (
        set(assignment) == set(c.facets)
        and len(set(assignment.values())) == len(c.facets)
        and set(assignment.values()) == set(multicomplex.monomials)
    )
    report["bijection"] = bijection
    report["degree_equals_passive_count"] = all(
        assignment[b].degree() == len(internally_passive(c, b))
        for b in c.facets
    )
    report["support_outside_first_basis"] = all(
        assignment[b].support() == b - b0 for b in c.facets
    )
    report["divisor_closed"] = multicomplex.is_divisor_closed()

    gale = gale_poset(c).relation_pairs()
    intp = int_poset(c).relation_pairs()
    div = {
        (a, b)
        for a in c.facets
        for b in c.facets
        if assignment[a].divides(assignment[b])
    }
    report["divisibility_extends_passive_order"] = intp <= div
    report["gale_extends_divisibility"] = div <= gale

    if family is None:
        report["nested_restrictions"] = None
    else:
        ok = True
        outside = sorted(frozenset(range(1, c.n + 1)) - b0)
        for size in range(len(outside) + 1):
            for extra in combinations(outside, size):
                a_set = b0 | frozenset(extra)
                restricted, labels = c.restrict_with_labels(a_set)
                sub_mc, sub_assignment = family(restricted)
                relabel = {i + 1: v for i, v in enumerate(labels)}
                lifted = {
                    Monomial.from_dict(
                        {relabel[v]: e for v, e in m.exponents}
                    )
                    for m in sub_mc.monomials
                }
                if not lifted <= set(multicomplex.monomials):
                    ok = False
        report["nested_restrictions"] = ok

    return report
