"""Milnor number, geometric genus, signature oracles, and the identity chain."""

from __future__ import annotations

import pytest

from helpers import coprime_triples, coprime_tuples
from seifertlab.seifert import SeifertData, brieskorn_seifert_data
from seifertlab.singularity import (
    brieskorn_invariants,
    casson_invariant,
    geometric_genus_divisors,
    geometric_genus_pd,
    milnor_number,
    signature_durfee,
    signature_lattice_oracle,
    verify_identity_chain,
)


def test_milnor_number_examples():
    assert milnor_number(2, 3, 5) == 8
    assert milnor_number(2, 3, 7) == 12
    assert milnor_number(3, 4, 5) == 24
    with pytest.raises(ValueError):
        milnor_number(2, 4, 5)


def test_geometric_genus_pd_examples():
    assert geometric_genus_pd(brieskorn_seifert_data((2, 3, 5))) == 0
    assert geometric_genus_pd(brieskorn_seifert_data((2, 3, 7))) == 1
    assert geometric_genus_pd(brieskorn_seifert_data((2, 3, 13))) == 2


def test_geometric_genus_divisors_examples():
    assert geometric_genus_divisors(brieskorn_seifert_data((2, 3, 5))) == 0
    assert geometric_genus_divisors(brieskorn_seifert_data((2, 3, 7))) == 1
    assert geometric_genus_divisors(brieskorn_seifert_data((3, 4, 5))) == 2


def test_geometric_genus_rejects_wrong_inputs():
    not_hs = SeifertData(-1, ((2, 1), (4, 1)))
    with pytest.raises(ValueError):
        geometric_genus_pd(not_hs)
    # reversed orientation of Sigma(2,3,7): A*e(Y) = +1, deg N > 0
    reversed_237 = SeifertData(-2, ((2, 1), (3, 2), (7, 6)))
    with pytest.raises(ValueError):
        geometric_genus_pd(reversed_237)
    with pytest.raises(ValueError):
        geometric_genus_divisors(reversed_237)


def test_signature_durfee_examples():
    assert signature_durfee(0, 8) == -8
    assert signature_durfee(1, 12) == -8
    assert signature_durfee(2, 24) == -16
    with pytest.raises(ValueError):
        signature_durfee(5, 8)


def test_signature_lattice_oracle_examples():
    assert signature_lattice_oracle(2, 3, 5) == -8
    assert signature_lattice_oracle(2, 3, 7) == -8
    assert signature_lattice_oracle(2, 3, 11) == -16


def test_signature_lattice_oracle_guards():
    with pytest.raises(ValueError):
        signature_lattice_oracle(2, 4, 5)
    with pytest.raises(ValueError):
        signature_lattice_oracle(101, 102, 103)  # product above desk scale


def test_casson_invariant_examples():
    assert casson_invariant(2, 3, 5) == -1
    assert casson_invariant(2, 3, 7) == -1
    assert casson_invariant(2, 3, 11) == -2


def test_identity_chain_examples():
    rep = verify_identity_chain(2, 3, 5)
    assert rep.ok and rep.euler_sl2c == 2
    rep = verify_identity_chain(2, 3, 7)
    assert rep.ok and rep.euler_sl2c == 3
    rep = verify_identity_chain(3, 4, 5)
    assert rep.ok and rep.euler_sl2c == 6


def test_identity_chain_sweep_to_15():
    for p, q, r in coprime_triples(15):
        rep = verify_identity_chain(p, q, r)
        assert rep.ok, rep.as_dict()
        assert rep.milnor % 4 == 0
        assert rep.pg_pd == rep.pg_divisors == rep.excess_euler
        assert rep.sigma_durfee == rep.sigma_lattice
        assert -2 * rep.casson + rep.pg_pd == rep.milnor // 4 == rep.euler_sl2c


def test_pg_two_routes_beyond_triples():
    for n, limit in ((4, 12), (5, 12)):
        for alphas in coprime_tuples(n, limit):
            S = brieskorn_seifert_data(alphas)
            assert geometric_genus_pd(S) == geometric_genus_divisors(S)


def test_brieskorn_invariants_pack():
    inv = brieskorn_invariants(2, 3, 7)
    assert inv.as_dict() == {
        "milnor": 12,
        "pg": 1,
        "signature": -8,
        "b_plus": 2,
        "casson": -1,
        "euler_sl2c": 3,
    }
