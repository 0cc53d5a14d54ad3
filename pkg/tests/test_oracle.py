"""Independent slow-path oracles and exhaustive enumeration."""

import random

import pytest

from quasimat.complexes import uniform_matroid
from quasimat.oracle import (
    activity_by_definition,
    brute_shelling_exists,
    canonical_form,
    circuits_by_definition,
    corank_nullity_tutte,
    enumerate_all_pure_complexes,
    enumerate_matroids_rank_le3,
    enumerate_pure_complexes,
    gale_pairs_by_definition,
    h_vector_by_counting,
    int_pairs_by_definition,
    random_graphic_matroid,
    random_matroid,
    random_shifted_complex,
)
from quasimat.polynomials import BivariatePolynomial
from helpers import complex_of, fs


def test_corank_nullity_u24(u24):
    assert corank_nullity_tutte(u24) == BivariatePolynomial(
        {(2, 0): 1, (1, 0): 2, (0, 1): 2, (0, 2): 1}
    )


def test_corank_nullity_rejects_non_matroid(psi1):
    with pytest.raises(ValueError):
        corank_nullity_tutte(psi1)


def test_circuit_oracle_agrees(psi1, psi2, psi3, psi4, u24):
    for c in (psi1, psi2, psi3, psi4, u24):
        assert circuits_by_definition(c) == c.circuits


def test_h_vector_oracle_agrees(psi4, u24):
    for c in (psi4, u24):
        assert h_vector_by_counting(c) == c.h_vector()


def test_activity_oracle_agrees(u24, psi4):
    from quasimat.activities import activity

    for c in (u24, psi4):
        for b in c.facets:
            assert activity_by_definition(c, b) == activity(c, b)


def test_poset_pair_oracles_agree(u24):
    from quasimat.posets import gale_poset, int_poset

    assert gale_pairs_by_definition(u24) == gale_poset(u24).relation_pairs()
    assert int_pairs_by_definition(u24) == int_poset(u24).relation_pairs()


def test_canonical_form_is_relabeling_invariant(psi1):
    assert canonical_form(psi1.relabel((3, 1, 4, 2))) == canonical_form(psi1)
    assert canonical_form(psi1) != canonical_form(psi1.skeleton(1))


def test_enumeration_counts():
    assert len(list(enumerate_all_pure_complexes(3))) == 8
    assert len(list(enumerate_all_pure_complexes(4))) == 20
    assert len(list(enumerate_pure_complexes(4, 2))) == 10


def test_enumeration_guard():
    with pytest.raises(ValueError):
        list(enumerate_pure_complexes(7, 2))
    with pytest.raises(ValueError):
        list(enumerate_pure_complexes(4, 5))


def test_enumeration_is_isomorph_free():
    seen = set()
    for c in enumerate_all_pure_complexes(4):
        key = canonical_form(c)
        assert key not in seen
        seen.add(key)


def test_matroid_enumeration_counts_match_census():
    # the number of matroids of rank <= 3 on exactly n elements, up to
    # isomorphism, is known: 2, 4, 8, 16, 32 for n = 1..5
    by_n = {}
    for c in enumerate_matroids_rank_le3(5):
        by_n[c.n] = by_n.get(c.n, 0) + 1
    assert by_n == {1: 2, 2: 4, 3: 8, 4: 16, 5: 32}


def test_matroid_enumeration_yields_matroids():
    from quasimat.axioms import is_matroid

    for c in enumerate_matroids_rank_le3(4):
        assert is_matroid(c).holds
        assert c.rank <= 3


def test_brute_shelling(u24, path_complex):
    assert brute_shelling_exists(u24)
    assert not brute_shelling_exists(
        complex_of(4, [(1, 2), (3, 4)])
    )
    with pytest.raises(ValueError):
        brute_shelling_exists(complex_of(3, [(1, 2), (3,)]))


def test_random_generators_produce_valid_objects():
    from quasimat.axioms import is_matroid
    from quasimat.shifted import is_shifted

    rng = random.Random(17)
    for _ in range(8):
        assert is_matroid(random_graphic_matroid(rng, 7)).holds
        assert is_matroid(random_matroid(rng, 7)).holds
        assert is_shifted(random_shifted_complex(rng, 8))
