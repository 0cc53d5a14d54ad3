"""h decompositions, passive splitting, O-sequences, witness search."""

import random
from itertools import chain, combinations

import pytest

from quasimat.complexes import uniform_matroid
from quasimat.shifted import (
    Monomial,
    multicomplex_of_shifted,
    verify_conjecture_conditions,
)
from quasimat.stanley import (
    h_decomposition,
    is_admissible,
    is_O_sequence,
    is_pure_O_sequence,
    passive_splitting_check,
    reduction_assembly,
    search_multicomplex,
    stanley_purity_check,
    sub_complex,
)
from helpers import complex_of, fs


def subsets(iterable):
    items = list(iterable)
    return chain.from_iterable(
        combinations(items, k) for k in range(len(items) + 1)
    )


def test_sub_complex_labels(u24):
    sub, labels = sub_complex(u24, {1, 2, 3}, {4})
    # link of 4 restricted to {1,2,3}: vertices 1,2,3 as points
    assert labels == (1, 2, 3)
    assert sub.n == 3 and sub.rank == 1
    sub, labels = sub_complex(u24, {2, 4}, fs())
    assert labels == (2, 4)
    assert sub.facets == frozenset({fs(1, 2)})


def test_h_decomposition_matches_everywhere(u24, psi4):
    for c in (u24, psi4, uniform_matroid(3, 5)):
        for a in subsets(range(1, c.n + 1)):
            dec = h_decomposition(c, a)
            assert dec.matches, (c, a)
            if dec.refined is not None:
                assert dec.refined_matches


def test_h_decomposition_refined_for_admissible(u24):
    dec = h_decomposition(u24, {1, 2})
    assert is_admissible(u24, {1, 2})
    assert dec.refined_matches


def test_is_admissible_rank_condition():
    u12 = uniform_matroid(1, 2)
    assert is_admissible(u12, {2})
    assert is_admissible(u12, {1, 2})
    path = complex_of(4, [(1, 2), (1, 3), (2, 4)])
    assert is_admissible(path, {1, 2})
    # restricting the link of 4 to {1,3} drops below the required rank
    assert not is_admissible(path, {1, 3})


def test_passive_splitting_first_basis_mode():
    for c in (uniform_matroid(2, 4), uniform_matroid(3, 5)):
        b0 = c.lex_min_basis()
        full = frozenset(range(1, c.n + 1))
        assert passive_splitting_check(c, full, split="first-basis")
        assert passive_splitting_check(c, b0 | (full - b0), split="first-basis")


def test_passive_splitting_complement_mode_fails_on_u23():
    u23 = uniform_matroid(2, 3)
    assert not passive_splitting_check(u23, {1}, split="complement")
    with pytest.raises(ValueError):
        passive_splitting_check(u23, {1}, split="bogus")


def test_is_O_sequence():
    assert is_O_sequence([1])
    assert is_O_sequence([1, 2, 3])
    assert is_O_sequence([1, 3, 6, 10])
    assert not is_O_sequence([1, 2, 5])  # 5 > 2^<1> = 3
    assert not is_O_sequence([2, 1])
    assert not is_O_sequence([])
    assert not is_O_sequence([1, 0, 1])
    with pytest.raises(ValueError):
        is_O_sequence([1, -1])


def test_is_pure_O_sequence():
    assert is_pure_O_sequence([1]) is True
    assert is_pure_O_sequence([1, 2, 3]) is True
    assert is_pure_O_sequence([1, 3, 1]) is False
    assert is_pure_O_sequence([1, 2, 5]) is False  # not even an O-sequence
    # tiny search budget yields the inconclusive answer
    assert is_pure_O_sequence([1, 4, 10, 19], search_limit=1) is None


def test_search_finds_shifted_construction_for_u24(u24):
    found = search_multicomplex(u24)
    assert found is not None
    mc, assignment = found
    shifted_mc, shifted_assignment = multicomplex_of_shifted(u24)
    assert assignment == shifted_assignment
    assert stanley_purity_check(u24, mc)


def test_search_witness_for_rank3_uniform():
    c = uniform_matroid(3, 5)
    found = search_multicomplex(c)
    assert found is not None
    mc, assignment = found
    report = verify_conjecture_conditions(c, mc, assignment)
    assert report["bijection"]
    assert report["divisor_closed"]
    assert report["gale_extends_divisibility"]
    assert report["degree_equals_passive_count"]
    assert report["support_outside_first_basis"]
    assert stanley_purity_check(c, mc)


def test_search_with_passive_order_constraint_unsatisfiable():
    # support and degree constraints force monomials whose passive-containment
    # relations cannot all be realized by divisibility
    assert search_multicomplex(
        uniform_matroid(3, 5), require_passive_order=True
    ) is None
    # yet the constraint is satisfiable at rank 2
    assert search_multicomplex(
        uniform_matroid(2, 4), require_passive_order=True
    ) is not None


def test_search_single_basis_trivial():
    c = complex_of(3, [(1, 2, 3)])
    mc, assignment = search_multicomplex(c)
    assert assignment == {fs(1, 2, 3): Monomial.from_dict({})}


def test_reduction_assembly_matches_direct_construction():
    c = uniform_matroid(2, 5)
    b0 = c.lex_min_basis()
    outside = sorted(frozenset(range(1, c.n + 1)) - b0)
    sub_witnesses = {}
    for size in range(c.rank):
        for extra in combinations(outside, size):
            i_face = frozenset(extra)
            window = b0 | i_face
            restricted, _ = c.restrict_with_labels(window)
            sub_witnesses[i_face] = multicomplex_of_shifted(restricted)
    mc, assignment = reduction_assembly(c, sub_witnesses)
    direct_mc, direct_assignment = multicomplex_of_shifted(c)
    assert assignment == direct_assignment
    assert mc == direct_mc


def test_reduction_assembly_conflict_raises():
    c = uniform_matroid(2, 4)
    base = multicomplex_of_shifted(c.restrict(fs(1, 2)))
    window = multicomplex_of_shifted(c.restrict(fs(1, 2, 3)))
    bad_assignment = {
        b: Monomial.from_dict({max(b): 2}) for b in window[1]
    }
    with pytest.raises(ValueError):
        reduction_assembly(
            c,
            {
                fs(): base,
                fs(3): (window[0], bad_assignment),
            },
        )


def test_reduction_assembly_missing_bases_raises():
    c = uniform_matroid(2, 4)
    with pytest.raises(ValueError):
        reduction_assembly(
            c, {fs(): multicomplex_of_shifted(c.restrict(fs(1, 2)))}
        )
