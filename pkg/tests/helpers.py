"""Shared generators for sweep and property tests."""

from __future__ import annotations

import random
from itertools import combinations
from math import gcd

from seifertlab.exact import LaurentPoly
from seifertlab.orbifold import LineBundleData, Orbifold, normalize


def coprime_tuples(n: int, limit: int) -> list[tuple[int, ...]]:
    """All strictly increasing pairwise-coprime n-tuples with entries in [2, limit]."""
    out = []
    for combo in combinations(range(2, limit + 1), n):
        if all(gcd(a, b) == 1 for a, b in combinations(combo, 2)):
            out.append(combo)
    return out


def coprime_triples(limit: int) -> list[tuple[int, int, int]]:
    return coprime_tuples(3, limit)


def random_poly(rng: random.Random, max_terms: int = 5) -> LaurentPoly:
    return LaurentPoly(
        {
            rng.randint(-6, 6): rng.randint(-9, 9)
            for _ in range(rng.randint(0, max_terms))
        }
    )


def random_orbifold(rng: random.Random, max_points: int = 4, max_order: int = 12) -> Orbifold:
    n = rng.randint(1, max_points)
    return Orbifold(tuple(rng.randint(2, max_order) for _ in range(n)))


def random_bundle(rng: random.Random, C: Orbifold) -> LineBundleData:
    return normalize(
        rng.randint(-8, 8),
        [rng.randint(-15, 15) for _ in C.alphas],
        C,
    )
