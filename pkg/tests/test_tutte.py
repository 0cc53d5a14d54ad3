"""Activity polynomial, deletion–contraction, broken-circuit complex."""

import random

import pytest

from quasimat.complexes import PSI_COLOOP, PSI_LOOP, uniform_matroid
from quasimat.polynomials import BivariatePolynomial
from quasimat.tutte import (
    broken_circuits,
    fundamental_circuit,
    h_identity_check,
    nbc_complex,
    nbc_h_identity,
    tg_evaluate,
    tutte_activities,
    tutte_deletion_contraction,
)
from helpers import complex_of, fs

T_U24 = BivariatePolynomial({(2, 0): 1, (1, 0): 2, (0, 1): 2, (0, 2): 1})


def test_u24_polynomial_exact(u24):
    assert tutte_activities(u24) == T_U24
    assert tutte_deletion_contraction(u24) == T_U24
    assert tg_evaluate(u24, 1, 1) == len(u24.facets)


def test_loop_coloop_base_cases():
    assert tutte_deletion_contraction(PSI_LOOP) == BivariatePolynomial.term(0, 1)
    assert tutte_deletion_contraction(PSI_COLOOP) == BivariatePolynomial.term(1, 0)


def test_methods_agree_on_random_matroids():
    from quasimat.oracle import random_matroid

    rng = random.Random(9)
    for _ in range(12):
        c = random_matroid(rng, 7)
        assert tutte_activities(c) == tutte_deletion_contraction(c)


def test_methods_agree_on_shifted_samples():
    from quasimat.oracle import random_shifted_complex

    rng = random.Random(4)
    for _ in range(12):
        c = random_shifted_complex(rng, 8)
        assert tutte_activities(c) == tutte_deletion_contraction(c)
        assert h_identity_check(c)
        assert nbc_h_identity(c)


def test_oracle_agreement_u24(u24):
    from quasimat.oracle import corank_nullity_tutte

    assert corank_nullity_tutte(u24) == T_U24


def test_h_identity_u24(u24):
    assert h_identity_check(u24)


def test_broken_circuits_and_nbc_u23():
    u23 = uniform_matroid(2, 3)
    assert broken_circuits(u23) == frozenset({fs(2, 3)})
    nbc = nbc_complex(u23)
    assert nbc.facets == frozenset({fs(1, 2), fs(1, 3)})
    assert nbc_h_identity(u23)


def test_nbc_of_loop_complex_is_void():
    c = complex_of(2, [(1,)])  # 2 is a loop; empty set is a broken circuit
    assert fs() in broken_circuits(c)
    assert nbc_complex(c) is None
    assert nbc_h_identity(c)


def test_fundamental_circuit_u24(u24):
    assert fundamental_circuit(u24, fs(3, 4), 1) == fs(1, 3, 4)
    with pytest.raises(ValueError):
        fundamental_circuit(u24, fs(1, 2), 3)  # 3 is externally passive
    with pytest.raises(ValueError):
        fundamental_circuit(u24, fs(1, 2, 3), 4)


def test_nbc_h_identity_on_uniform_family():
    for d, n in [(1, 3), (2, 4), (2, 5), (3, 5)]:
        assert nbc_h_identity(uniform_matroid(d, n))
