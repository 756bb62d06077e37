"""Seeded random rational values for probabilistic checks.

Coefficients are numerator in [-height, height] over denominator in {1, 2, 3};
every caller passes an explicit seed so runs are reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .linalg import Vec

DENOMINATORS = (1, 2, 3)


def rng_for(seed: int) -> random.Random:
    return random.Random(seed)


def random_rational(rng: random.Random, height: int = 9) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.choice(DENOMINATORS))


def random_vector(rng: random.Random, n: int, height: int = 9) -> Vec:
    return tuple(random_rational(rng, height) for _ in range(n))


def random_nonzero_vector(rng: random.Random, n: int, height: int = 9) -> Vec:
    while True:
        v = random_vector(rng, n, height)
        if any(v):
            return v


def random_poly(rng: random.Random, max_degree: int = 3, height: int = 9) -> tuple[Fraction, ...]:
    """Coefficients by degree with zero constant term (index 0)."""
    deg = rng.randint(1, max_degree)
    return (Fraction(0),) + tuple(random_rational(rng, height) for _ in range(deg))
