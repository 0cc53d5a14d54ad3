"""End-to-end acceptance checks; each test prints one pass/fail line.

Set QUASIMAT_ACCEPTANCE_FULL=1 to extend the witness-search check from
matroids on up to 6 elements to the full 7-element enumeration (adds a few
minutes of runtime).
"""

import os
import random
from itertools import combinations

import pytest

from quasimat import axioms
from quasimat.activities import (
    h_from_activities,
    internally_passive,
    lex_shelling_check,
)
from quasimat.complexes import uniform_matroid
from quasimat.polynomials import BivariatePolynomial
from helpers import complex_of, fs

FULL = os.environ.get("QUASIMAT_ACCEPTANCE_FULL") == "1"


def report(line, ok):
    print(f"acceptance - {line}: {'PASS' if ok else 'FAIL'}")
    assert ok, line


def subsets(items):
    items = list(items)
    for k in range(len(items) + 1):
        yield from (frozenset(s) for s in combinations(items, k))


def test_criterion_01_classification_table(psi1, psi2, psi3, psi4):
    expected = [
        (psi1, (True, True, False)),
        (psi2, (True, False, False)),
        (psi3, (False, False, True)),
        (psi4, (False, True, False)),
    ]
    ok = all(
        (
            axioms.check_qi(c).holds,
            axioms.check_qe(c).holds,
            axioms.check_qc(c).holds,
        )
        == row
        for c, row in expected
    )
    report("01 four separating complexes classified exactly", ok)


def test_criterion_02_orderings_characterize_matroids(universe):
    ok = True
    for c in universe:
        matroid = axioms.is_matroid(c).holds
        for name in ("qi", "qe", "qc", "fbp", "pure", "lex", "gale"):
            if axioms.holds_for_all_orderings(c, name).holds != matroid:
                ok = False
    report("02 all-orderings membership equals matroidness (n <= 5)", ok)


def test_criterion_03_lex_shelling_with_passive_restrictions(universe):
    from quasimat.oracle import random_shifted_complex

    pool = [c for c in universe if axioms.check_qe(c).holds]
    rng = random.Random(303)
    pool += [random_shifted_complex(rng, 12) for _ in range(100)]
    ok = all(
        lex_shelling_check(c) and h_from_activities(c) == c.h_polynomial()
        for c in pool
    )
    report("03 lex order shells every exchange instance with IP restrictions", ok)


def test_criterion_04_tutte_cross_validation(universe):
    from quasimat.oracle import corank_nullity_tutte, random_shifted_complex
    from quasimat.tutte import tutte_activities, tutte_deletion_contraction

    rng = random.Random(404)
    pool = [
        c
        for c in universe
        if axioms.check_qe(c).holds and axioms.check_qc(c).holds
    ]
    pool += [random_shifted_complex(rng, 9) for _ in range(25)]
    ok = all(
        tutte_activities(c) == tutte_deletion_contraction(c) for c in pool
    )
    for c in universe:
        if axioms.is_matroid(c).holds:
            ok = ok and tutte_activities(c) == corank_nullity_tutte(c)
    ok = ok and tutte_activities(uniform_matroid(2, 4)) == BivariatePolynomial(
        {(2, 0): 1, (1, 0): 2, (0, 1): 2, (0, 2): 1}
    )
    report("04 activity and deletion-contraction polynomials agree", ok)


def test_criterion_05_broken_circuit_h_identity(universe):
    from quasimat.oracle import random_shifted_complex
    from quasimat.tutte import nbc_h_identity

    rng = random.Random(505)
    pool = [
        c
        for c in universe
        if axioms.check_qe(c).holds and axioms.check_qc(c).holds
    ]
    pool += [random_shifted_complex(rng, 9) for _ in range(25)]
    ok = all(nbc_h_identity(c) for c in pool)
    report("05 broken-circuit complex h-identity and lex shelling", ok)


def test_criterion_06_truncation_preserves_class_and_passive_sets(universe):
    from quasimat.oracle import random_gale_ideal, random_shifted_complex
    from quasimat.posets import gale_truncate

    rng = random.Random(606)
    qe_pool = [
        c for c in universe if axioms.check_qe(c).holds and len(c.facets) > 1
    ]
    ok = True
    for trial in range(200):
        if trial % 2 == 0:
            c = rng.choice(qe_pool)
            kind = "qe"
        else:
            c = random_shifted_complex(rng, 9)
            kind = "qi-fbp"
        ideal = random_gale_ideal(rng, c)
        truncated = gale_truncate(c, ideal)
        if kind == "qe":
            ok = ok and axioms.check_qe(truncated).holds
        else:
            ok = ok and axioms.check_qi(truncated).holds
            ok = ok and axioms.check_fbp(truncated).holds
        for b in ideal:
            ok = ok and internally_passive(truncated, b) == internally_passive(c, b)
    report("06 Gale truncation stays in class and preserves passive sets", ok)


def _box_partitions(rows, cols):
    out = [()]

    def rec(prefix, row, bound):
        if row == rows:
            return
        for p in range(1, bound + 1):
            parts = prefix + (p,)
            out.append(parts)
            rec(parts, row + 1, p)

    rec((), 0, cols)
    return out


def test_criterion_07_monomial_constructions_and_clauses():
    from quasimat.oracle import random_shifted_complex
    from quasimat.shifted import (
        Partition,
        monomial_bouncing_light,
        monomial_inductive,
        multicomplex_of_shifted,
        partition_to_basis,
        verify_conjecture_conditions,
    )

    cases = 0
    ok = True
    for rows in range(1, 8):
        for cols in range(1, 8):
            for parts in _box_partitions(rows, cols):
                p = Partition(parts, rows, cols)
                cases += 1
                ok = ok and monomial_inductive(p) == monomial_bouncing_light(p)
    ok = ok and cases >= 8512

    worked = Partition((7, 7, 5, 5, 3, 2, 1), 7, 7)
    ok = ok and partition_to_basis(worked) == fs(2, 4, 6, 9, 10, 13, 14)
    ok = ok and monomial_inductive(worked).as_dict() == {9: 3, 10: 1, 13: 2, 14: 1}

    rng = random.Random(707)
    for _ in range(200):
        c = random_shifted_complex(rng, 9)
        mc, assignment = multicomplex_of_shifted(c)
        clause = verify_conjecture_conditions(
            c, mc, assignment, family=multicomplex_of_shifted
        )
        for key, value in clause.items():
            if key == "divisibility_extends_passive_order":
                continue  # see the companion expected-failure test
            ok = ok and value is True
    report("07 monomial constructions agree and witness clauses hold", ok)


@pytest.mark.xfail(
    strict=True,
    reason="unsatisfiable: the support and degree constraints already force "
    "monomials whose passive-containment relations cannot all be realized by "
    "divisibility (rank-3 uniform complex on 5 vertices)",
)
def test_criterion_07_passive_order_half_of_the_sandwich():
    from quasimat.shifted import (
        multicomplex_of_shifted,
        verify_conjecture_conditions,
    )

    c = uniform_matroid(3, 5)
    mc, assignment = multicomplex_of_shifted(c)
    clause = verify_conjecture_conditions(c, mc, assignment)
    report(
        "07x passive-containment implies divisibility (expected failure)",
        clause["divisibility_extends_passive_order"],
    )


def test_criterion_08_decomposition_and_passive_splitting(universe):
    from quasimat.stanley import h_decomposition, passive_splitting_check

    ok = True
    for c in universe:
        for a in subsets(range(1, c.n + 1)):
            dec = h_decomposition(c, a)
            ok = ok and dec.matches
            if dec.refined is not None:
                ok = ok and dec.refined_matches
    pairs = 0
    for c in universe:
        if not (
            axioms.check_qe(c).holds
            and axioms.check_qi(c).holds
            and axioms.check_fbp(c).holds
        ):
            continue
        b0 = c.lex_min_basis()
        for extra in subsets(frozenset(range(1, c.n + 1)) - b0):
            pairs += 1
            ok = ok and passive_splitting_check(c, b0 | extra, split="first-basis")
    ok = ok and pairs > 0
    report("08 h decompositions reassemble and passive sets split", ok)


def test_criterion_09_witness_search_over_small_matroids():
    from quasimat.oracle import enumerate_matroids_rank_le3
    from quasimat.posets import gale_poset, gale_truncate
    from quasimat.stanley import search_multicomplex, stanley_purity_check

    max_n = 7 if FULL else 6
    rng = random.Random(909)
    ok = True
    count = 0
    for c in enumerate_matroids_rank_le3(max_n):
        count += 1
        found = search_multicomplex(c)
        ok = ok and found is not None and stanley_purity_check(c, found[0])
        ideals = [i for i in gale_poset(c).order_ideals() if i]
        if len(ideals) > 12:
            ideals = rng.sample(ideals, 12)
        for ideal in ideals:
            truncated = gale_truncate(c, ideal)
            ok = ok and search_multicomplex(truncated) is not None
    ok = ok and count >= (283 if FULL else 130)
    scope = "<= 7" if FULL else "<= 6"
    report(
        f"09 witnesses found for all rank <= 3 matroids on {scope} elements "
        "and sampled truncations",
        ok,
    )


def test_criterion_10_laplacian_integrality(path_complex):
    from quasimat.laplacian import integrality_survey, is_integral
    from quasimat.oracle import random_matroid, random_shifted_complex

    rng = random.Random(1010)
    ok = all(is_integral(random_matroid(rng, 9)) for _ in range(50))
    ok = ok and all(
        is_integral(random_shifted_complex(rng, 9)) for _ in range(50)
    )
    surveys = integrality_survey(path_complex)
    ok = ok and [r.integral for r in surveys] == [False, False]
    report("10 Laplacian spectra integral on class members, not on the path", ok)


def test_criterion_11_oracle_equivalence(universe):
    from quasimat.activities import activity
    from quasimat.oracle import (
        activity_by_definition,
        circuits_by_definition,
        gale_pairs_by_definition,
        h_vector_by_counting,
        int_pairs_by_definition,
    )
    from quasimat.posets import gale_poset, int_poset

    ok = True
    for c in universe:
        ok = ok and circuits_by_definition(c) == c.circuits
        ok = ok and h_vector_by_counting(c) == c.h_vector()
        for b in c.facets:
            ok = ok and activity_by_definition(c, b) == activity(c, b)
        ok = ok and gale_pairs_by_definition(c) == gale_poset(c).relation_pairs()
        ok = ok and int_pairs_by_definition(c) == int_poset(c).relation_pairs()
    report("11 fast paths agree with the literal-definition oracles", ok)
