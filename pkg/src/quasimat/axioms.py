"""Decision procedures for the ordered-complex class predicates.

Every checker is exhaustive and returns a `ClassReport`; when the predicate
fails, the report carries a replayable witness (the offending faces, bases or
circuits together with the quantified element).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .activities import is_shelling, lex_order
from .complexes import OrderedComplex, lex_key


@dataclass(frozen=True)
class ClassReport:
    holds: bool
    witness: dict | None = None

    def __bool__(self):
        return self.holds

    def to_json(self):
        return {"holds": self.holds, "witness": _jsonify(self.witness)}


def _jsonify(value):
    if isinstance(value, frozenset):
        return sorted(value)
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonify(v) for k, v in value.items()}
    return value


def _purity_failure(c):
    sizes = sorted({len(f) for f in c.facets})
    return ClassReport(False, {"reason": "not pure", "facet_sizes": sizes})


# -- quasi-independence ------------------------------------------------------


def check_qi(c: OrderedComplex) -> ClassReport:
    """Purity plus the quasi-independence axiom over all pairs of faces.

    The existential subset of the intersection is a hypothesis witness: the
    conclusion is only demanded when some subset makes the premise true.
    """
    if not c.is_pure():
        return _purity_failure(c)
    faces = sorted(c.faces, key=lambda f: (len(f), lex_key(f)))
    first_basis_of = {}

    def contraction_first_basis(face):
        if face not in first_basis_of:
            first_basis_of[face] = c.lex_min_basis_of_contraction(face)
        return first_basis_of[face]

    for i1 in faces:
        for i2 in faces:
            if len(i1) <= len(i2):
                continue
            if any(i2 | {e} in c.faces for e in i1 - i2):
                continue
            # conclusion failed; the axiom is violated iff some premise witness exists
            common = sorted(i1 & i2)
            for size in range(len(common) + 1):
                for sub in combinations(common, size):
                    i = frozenset(sub)
                    if (i1 - i) <= contraction_first_basis(i):
                        return ClassReport(
                            False,
                            {"I1": i1, "I2": i2, "I": i,
                             "contraction_first_basis": contraction_first_basis(i)},
                        )
    return ClassReport(True)


# -- quasi-exchange ----------------------------------------------------------


def check_qe(c: OrderedComplex) -> ClassReport:
    if not c.is_pure():
        return _purity_failure(c)
    for b1 in c.facets:
        for b2 in c.facets:
            if b1 == b2:
                continue
            only2 = b2 - b1
            threshold = max(only2)
            for e1 in b1 - b2:
                if e1 <= threshold:
                    continue
                if not any((b1 - {e1}) | {e2} in c.faces for e2 in only2):
                    return ClassReport(False, {"B1": b1, "B2": b2, "b1": e1})
    return ClassReport(True)


# -- quasi-circuit -----------------------------------------------------------


def check_qc(c: OrderedComplex) -> ClassReport:
    circuits = sorted(c.circuits, key=lex_key)
    for c1, c2 in combinations(circuits, 2):
        shared = c1 & c2
        if not shared:
            continue
        top = max(c1 ^ c2)
        for e in shared:
            if e < top and (c1 | c2) - {e} in c.faces:
                return ClassReport(False, {"C1": c1, "C2": c2, "c": e})
    return ClassReport(True)


# -- first basis property ----------------------------------------------------


@lru_cache(maxsize=200_000)
def _fbp_witness(c: OrderedComplex):
    """None when FBP holds; otherwise a witness dict."""
    if c.rank == 1 or len(c.facets) == 1:
        return None
    b0 = c.lex_min_basis()
    for v in sorted(c.vertices - b0):
        bv0 = c.lex_min_basis_of_contraction(frozenset({v}))
        if not bv0 <= b0:
            return {"vertex": v, "contraction_first_basis": bv0, "first_basis": b0}
        inner = _fbp_witness(c.contract_vertex(v))
        if inner is not None:
            return {"vertex": v, "inner": inner}
    return None


def check_fbp(c: OrderedComplex) -> ClassReport:
    witness = _fbp_witness(c)
    return ClassReport(witness is None, witness)


# -- the PURE class ----------------------------------------------------------


@lru_cache(maxsize=200_000)
def _pure_class_witness(c: OrderedComplex):
    if not c.is_pure():
        return {"reason": "not pure", "facets": sorted(c.facets, key=lex_key)}
    if len(c.facets) == 1:
        return None
    v = max(c.vertices - c.coloops)
    deletion = c.delete_element(v)
    if deletion.rank != c.rank:
        return {"reason": "deletion drops rank", "vertex": v}
    inner = _pure_class_witness(deletion)
    if inner is not None:
        return {"reason": "deletion leaves class", "vertex": v, "inner": inner}
    for u in sorted(c.vertices):
        inner = _pure_class_witness(c.contract_vertex(u))
        if inner is not None:
            return {"reason": "contraction leaves class", "vertex": u, "inner": inner}
    return None


def check_pure_class(c: OrderedComplex) -> ClassReport:
    witness = _pure_class_witness(c)
    return ClassReport(witness is None, witness)


# -- lex shelling and Gale minimum -------------------------------------------


def _one_step_minors(c):
    """Deletion of the largest non-coloop element plus all vertex contractions."""
    out = []
    non_coloops = [e for e in range(1, c.n + 1) if e not in c.coloops]
    if non_coloops:
        out.append(c.delete_element(max(non_coloops)))
    out.extend(c.contract_vertex(v) for v in sorted(c.vertices))
    return out


def check_lex(c: OrderedComplex, hereditary=False) -> ClassReport:
    if not c.is_pure():
        return _purity_failure(c)
    valid, _ = is_shelling(c, lex_order(c))
    if not valid:
        return ClassReport(False, {"reason": "lex order is not a shelling"})
    if hereditary:
        for minor in _one_step_minors(c):
            if not check_lex(minor).holds:
                return ClassReport(
                    False, {"reason": "one-step minor fails", "minor": minor.to_json()}
                )
    return ClassReport(True)


def gale_minimal_bases(c: OrderedComplex):
    """Bases minimal under the componentwise order on sorted vertex lists."""
    keys = {b: lex_key(b) for b in c.facets}

    def leq(a, b):
        return all(x <= y for x, y in zip(keys[a], keys[b]))

    return sorted(
        (b for b in c.facets if not any(other != b and leq(other, b) for other in c.facets)),
        key=lex_key,
    )


def check_gale(c: OrderedComplex, hereditary=False) -> ClassReport:
    if not c.is_pure():
        return _purity_failure(c)
    minima = gale_minimal_bases(c)
    if len(minima) != 1:
        return ClassReport(False, {"reason": "no unique Gale minimum", "minima": minima})
    if hereditary:
        for minor in _one_step_minors(c):
            if not check_gale(minor).holds:
                return ClassReport(
                    False, {"reason": "one-step minor fails", "minor": minor.to_json()}
                )
    return ClassReport(True)


# -- matroids ----------------------------------------------------------------


def _exchange_axiom(c):
    if not c.is_pure():
        return ClassReport(False, {"reason": "not pure"})
    for b1 in c.facets:
        for b2 in c.facets:
            for e1 in b1 - b2:
                if not any((b1 - {e1}) | {e2} in c.facets for e2 in b2 - b1):
                    return ClassReport(False, {"B1": b1, "B2": b2, "b1": e1})
    return ClassReport(True)


def _independence_axiom(c):
    faces = sorted(c.faces, key=len)
    for i1 in faces:
        for i2 in faces:
            if len(i1) > len(i2) and not any(
                i2 | {e} in c.faces for e in i1 - i2
            ):
                return False
    return True


def _circuit_elimination(c):
    for c1, c2 in combinations(c.circuits, 2):
        for e in c1 & c2:
            if (c1 | c2) - {e} in c.faces:
                return False
    return True


def is_matroid(c: OrderedComplex) -> ClassReport:
    """Basis exchange over all pairs, cross-checked against the independence
    and circuit-elimination axioms."""
    report = _exchange_axiom(c)
    if report.holds != _independence_axiom(c) or report.holds != _circuit_elimination(c):
        raise AssertionError("matroid axioms disagree; representation bug")
    return report


# -- quantification over all orderings ---------------------------------------

PREDICATES = {
    "qi": check_qi,
    "qe": check_qe,
    "qc": check_qc,
    "fbp": check_fbp,
    "pure": check_pure_class,
    "lex": check_lex,
    "gale": check_gale,
    "matroid": is_matroid,
}


def holds_for_all_orderings(c: OrderedComplex, predicate) -> ClassReport:
    """Run a class predicate over every relabeling of the ground set.

    Relabelings equivalent under facet-set automorphisms are pruned by
    deduplicating the resulting complexes.
    """
    if isinstance(predicate, str):
        predicate = PREDICATES[predicate]
    seen = set()
    for perm in permutations(range(1, c.n + 1)):
        relabeled = c.relabel(perm)
        if relabeled in seen:
            continue
        seen.add(relabeled)
        report = predicate(relabeled)
        if not report.holds:
            return ClassReport(
                False, {"permutation": list(perm), "inner": report.witness}
            )
    return ClassReport(True)


# -- vertex decomposability --------------------------------------------------


@lru_cache(maxsize=200_000)
def _is_vertex_decomposable(c: OrderedComplex):
    if not c.is_pure():
        return False
    if len(c.facets) == 1:
        return True
    for e in sorted(c.vertices - c.coloops):
        deletion = c.delete_element(e)
        if deletion.rank != c.rank:
            continue
        if _is_vertex_decomposable(deletion) and _is_vertex_decomposable(
            c.contract_vertex(e)
        ):
            return True
    return False


def vertex_decomposition(c: OrderedComplex):
    """Witness tree of shedding vertices, or None when none exists."""
    if not c.is_pure():
        raise ValueError("vertex decomposability is defined for pure complexes")
    if len(c.facets) == 1:
        return {"basis": sorted(next(iter(c.facets)))}
    for e in sorted(c.vertices - c.coloops):
        deletion = c.delete_element(e)
        if deletion.rank != c.rank:
            continue
        if _is_vertex_decomposable(deletion) and _is_vertex_decomposable(
            c.contract_vertex(e)
        ):
            return {
                "shedding_vertex": e,
                "deletion": vertex_decomposition(deletion),
                "contraction": vertex_decomposition(c.contract_vertex(e)),
            }
    return None
