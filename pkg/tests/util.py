"""Shared helpers for the test suite: seeded random inputs and
independent oracles that deliberately avoid the library's main code
paths."""

from __future__ import annotations

import random

from perisym import LaurentPoly, monomial_orbit_sum
from perisym.laurent import permutations_with_signs
from perisym.verify import schur_bialternant_oracle  # noqa: F401  (re-export)


def random_poly(n: int, rng: random.Random, *, terms: int = 4, bound: int = 3,
                coef: int = 9) -> LaurentPoly:
    """A random sparse Laurent polynomial (possibly zero)."""
    data = {}
    for _ in range(rng.randint(0, terms)):
        exps = tuple(rng.randint(-bound, bound) for _ in range(n))
        data[exps] = rng.randint(-coef, coef)
    return LaurentPoly(n, data)


def random_nonzero_poly(n: int, rng: random.Random, **kw) -> LaurentPoly:
    while True:
        f = random_poly(n, rng, **kw)
        if not f.is_zero():
            return f


def random_symmetric(n: int, rng: random.Random, *, terms: int = 3,
                     bound: int = 2, coef: int = 4) -> LaurentPoly:
    out = LaurentPoly.zero(n)
    for _ in range(terms):
        mu = tuple(sorted((rng.randint(-bound, bound) for _ in range(n)),
                          reverse=True))
        out = out + rng.randint(-coef, coef) * monomial_orbit_sum(n, mu)
    return out


def permute_poly(f: LaurentPoly, perm: tuple[int, ...]) -> LaurentPoly:
    """Apply the variable permutation sending position i to perm[i]."""
    return LaurentPoly(f.arity, {tuple(e[p] for p in perm): c
                                 for e, c in f.terms.items()})


def antisymmetrize(f: LaurentPoly) -> LaurentPoly:
    """Brute-force signed symmetrization over the full symmetric group."""
    out = LaurentPoly.zero(f.arity)
    for perm, sign in permutations_with_signs(f.arity):
        out = out + sign * permute_poly(f, perm)
    return out
