"""Shared fixtures for the froblink test-suite."""

from __future__ import annotations

import random

import pytest

from froblink.algebra.ffpoly import PolynomialRing, PrimeField
from froblink.algebra.ideal import Ideal
from froblink.utils.io import parse_ideal_file, reduce_mod_p


@pytest.fixture
def ideal_of():
    """Build an ideal mod p from generator text, e.g. ``ideal_of("x^2 + y^3", 2)``."""

    def build(text: str, p: int, variables: str = "x, y") -> Ideal:
        return reduce_mod_p(parse_ideal_file(f"ring: {variables}\ngens: {text}\n"), p)

    return build


@pytest.fixture
def ring_of():
    def build(variables: str, p: int) -> PolynomialRing:
        names = tuple(name.strip() for name in variables.split(","))
        return PolynomialRing(names, PrimeField(p))

    return build


def _random_generator(rng: random.Random, ring: PolynomialRing, max_degree: int):
    terms = {}
    for _ in range(rng.randint(1, 3)):
        while True:
            monom = tuple(rng.randint(0, max_degree) for _ in range(ring.ngens))
            if 0 < sum(monom) <= max_degree:
                break
        terms[monom] = rng.randint(1, ring.p - 1)
    return ring.from_terms(terms)


@pytest.fixture
def random_ideals(ring_of):
    """Seeded corpus of small ideals inside the origin (no constant terms)."""

    def build(
        p: int,
        count: int = 6,
        seed: int = 0,
        variables: str = "x, y",
        max_degree: int = 3,
        max_gens: int = 3,
    ):
        rng = random.Random(seed)
        ring = ring_of(variables, p)
        ideals = []
        while len(ideals) < count:
            count_gens = rng.randint(1, max_gens)
            gens = [_random_generator(rng, ring, max_degree) for _ in range(count_gens)]
            ideal = Ideal(ring, gens)
            if not ideal.is_zero:
                ideals.append(ideal)
        return ideals

    return build
