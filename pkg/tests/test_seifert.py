"""Seifert data construction, homology-sphere validation, and the bundle N."""

from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest

from helpers import coprime_tuples
from seifertlab.orbifold import Orbifold, canonical_bundle, power
from seifertlab.seifert import (
    SeifertData,
    brieskorn_seifert_data,
    bundle_log,
    n_bundle,
    validate_homology_sphere,
)


def brute_force_brieskorn(alphas):
    """Exhaustive search oracle for the unique (b, gammas) with A*e(Y) = -1.

    Independent of the congruence solve: scans every residue combination and
    divides out A directly.  Usable whenever A = prod alphas <= 10^4.
    """
    A = 1
    for a in alphas:
        A *= a
    assert A <= 10**4
    solutions = []
    for gammas in product(*[range(1, a) for a in alphas]):
        weighted = sum(g * (A // a) for g, a in zip(gammas, alphas))
        if (-1 - weighted) % A == 0:
            solutions.append(((-1 - weighted) // A, gammas))
    assert len(solutions) == 1
    return solutions[0]


def test_brieskorn_235():
    S = brieskorn_seifert_data((2, 3, 5))
    assert S.b == -2 and S.gammas == (1, 2, 4)
    assert S.euler_number == Fraction(-1, 30)


def test_brieskorn_237():
    S = brieskorn_seifert_data((2, 3, 7))
    assert S.b == -1 and S.gammas == (1, 1, 1)
    assert S.euler_number == Fraction(-1, 42)


def test_brieskorn_2357_matches_brute_force():
    S = brieskorn_seifert_data((2, 3, 5, 7))
    b, gammas = brute_force_brieskorn((2, 3, 5, 7))
    assert (S.b, S.gammas) == (b, gammas) == (-2, (1, 2, 2, 3))
    assert S.multiplicity * S.euler_number == -1


def test_brieskorn_against_brute_force_small_products():
    for alphas in coprime_tuples(3, 9) + coprime_tuples(4, 7):
        A = 1
        for a in alphas:
            A *= a
        if A > 10**4:
            continue
        S = brieskorn_seifert_data(alphas)
        assert (S.b, S.gammas) == brute_force_brieskorn(alphas)


def test_brieskorn_input_validation():
    with pytest.raises(ValueError):
        brieskorn_seifert_data((2, 4, 6))
    with pytest.raises(ValueError):
        brieskorn_seifert_data((2, 3))
    with pytest.raises(ValueError):
        brieskorn_seifert_data((1, 2, 3))


def test_seifert_data_validation():
    with pytest.raises(ValueError):
        SeifertData(0, ((2, 1), (3, 3)))  # gamma out of range
    with pytest.raises(ValueError):
        SeifertData(0, ((4, 2),))  # not coprime
    with pytest.raises(ValueError):
        SeifertData(-1, ((2, 1), (2, 1)))  # e(Y) = 0


def test_validate_homology_sphere_examples():
    check = validate_homology_sphere(brieskorn_seifert_data((2, 3, 5)))
    assert check.ok and check.a_times_e == -1
    check = validate_homology_sphere(SeifertData(-1, ((2, 1), (4, 1))))
    assert not check.ok and check.a_times_e == -2
    check = validate_homology_sphere(SeifertData(-1, ((2, 1), (3, 1), (7, 1))))
    assert check.ok and check.a_times_e == -1


def test_n_bundle_examples():
    N7 = n_bundle(brieskorn_seifert_data((2, 3, 7)))
    assert (N7.e, N7.betas) == (-1, (1, 1, 1))
    assert N7.degree == Fraction(-1, 42)
    S5 = brieskorn_seifert_data((2, 3, 5))
    N5 = n_bundle(S5)
    assert (N5.e, N5.betas) == (-2, (1, 2, 4))
    assert N5.degree == Fraction(-1, 30)
    # for this orbifold K and N coincide: deg K = -chi = -1/30 = deg N
    assert N5 == canonical_bundle(Orbifold((2, 3, 5)))


def test_bundle_log_examples():
    S = brieskorn_seifert_data((2, 3, 7))
    N = n_bundle(S)
    assert bundle_log(power(N, 0), S) == 0
    assert bundle_log(canonical_bundle(S.orbifold), S) == -1
    assert bundle_log(N, S) == 1


def test_bundle_log_inverts_powers():
    S = brieskorn_seifert_data((3, 4, 5))
    N = n_bundle(S)
    for m in range(-20, 21):
        assert bundle_log(power(N, m), S) == m


def test_bundle_log_rejects_non_homology_sphere():
    bad = SeifertData(-1, ((2, 1), (4, 1)))
    with pytest.raises(ValueError):
        bundle_log(n_bundle(bad), bad)


def test_bundle_log_rejects_foreign_bundle():
    S = brieskorn_seifert_data((2, 3, 7))
    other = canonical_bundle(Orbifold((2, 3, 5)))
    with pytest.raises(ValueError):
        bundle_log(other, S)


def test_brieskorn_sweep_is_homology_sphere_with_negative_degree():
    for alphas in coprime_tuples(3, 15):
        S = brieskorn_seifert_data(alphas)
        check = validate_homology_sphere(S)
        assert check.ok and check.a_times_e == -1
        assert S.euler_number < 0
        # deg K / deg N is the integer power expressing K through N
        K = canonical_bundle(S.orbifold)
        ratio = K.degree / S.euler_number
        assert ratio.denominator == 1
        assert bundle_log(K, S) == ratio
