"""Shared test utilities: independent oracles and seeded random generators.

The oracles here deliberately avoid the code paths they check.  Admissible
multidegrees are re-derived by filtering a full cartesian product, and
pushforwards are checked against the adjunction that defines them, using
only wedge, integrate and pullback.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from modiag import (
    Ambient,
    cycle,
    ext_class,
    integrate,
    pullback,
    pushforward,
    wedge,
)


def brute_admissible(g: int, m: int, nu: int) -> list[tuple[int, ...]]:
    """All multidegrees in {0..2g}^m of total nu, by exhaustive filtering."""
    return [
        t for t in itertools.product(range(2 * g + 1), repeat=m) if sum(t) == nu
    ]


def monomials_of_degree(ambient: Ambient, degree: int) -> list[int]:
    n = 2 * ambient.g * ambient.m
    out = []
    for positions in itertools.combinations(range(n), degree):
        mask = 0
        for p in positions:
            mask |= 1 << p
        out.append(mask)
    return out


def adjunction_holds(f, alpha, beta) -> bool:
    """The defining property of pushforward, checked from the outside."""
    lhs = integrate(wedge(pushforward(f, alpha), beta))
    rhs = integrate(wedge(alpha, pullback(f, beta)))
    return lhs == rhs


def pushforward_satisfies_adjunction(f, alpha) -> bool:
    """Check the adjunction against every monomial of the pairing degree."""
    g = alpha.ambient.g
    n_in = 2 * g * f.source_blocks
    n_out = 2 * g * f.target_blocks
    target = Ambient(g, f.target_blocks)
    degrees = {mask.bit_count() for mask in alpha.terms} or {0}
    for d in degrees:
        pair_deg = n_in - d
        if not 0 <= pair_deg <= n_out:
            continue
        for mask in monomials_of_degree(target, pair_deg):
            beta = ext_class(target, {mask: Fraction(1)})
            if not adjunction_holds(f, alpha, beta):
                return False
    return True


def random_fraction(rng: random.Random) -> Fraction:
    num = rng.choice([x for x in range(-5, 6) if x])
    return Fraction(num, rng.randint(1, 3))


def random_twist_vector(rng: random.Random, m: int, bound: int = 3) -> tuple[int, ...]:
    while True:
        v = tuple(rng.randint(-bound, bound) for _ in range(m))
        if any(v):
            return v


def random_cycle(rng: random.Random, ambient: Ambient, max_terms: int = 4):
    terms = [
        (random_twist_vector(rng, ambient.m), random_fraction(rng))
        for _ in range(rng.randint(1, max_terms))
    ]
    return cycle(ambient, terms)


def random_homogeneous(rng: random.Random, ambient: Ambient, degree: int, max_terms: int = 3):
    n = 2 * ambient.g * ambient.m
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mask = 0
        for p in rng.sample(range(n), degree):
            mask |= 1 << p
        terms[mask] = random_fraction(rng)
    return ext_class(ambient, terms)
