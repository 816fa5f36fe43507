import random

import pytest

from perisym import (
    LaurentPoly,
    LeviIncompatible,
    denominators,
    ds_eval,
    ds_power,
    euler_characteristic,
    euler_ds_power,
    membership,
    radical_roots,
)
from perisym.laurent import permutations_with_signs
from perisym.weights import rho

import util


def root(n, entries):
    out = [0] * n
    for idx, val in entries:
        out[idx] += val
    return tuple(out)


class TestRadicalRoots:
    def test_block_parabolic_n4(self):
        datum = radical_roots((0, 0, -1, -1))
        even = {root(4, [(i, 1), (j, -1)]) for i in (0, 1) for j in (2, 3)}
        assert set(datum.even_radical) == even
        odd = {root(4, [(i, -1), (j, -1)]) for i in range(4) for j in range(i + 1, 4)
               if j >= 2}
        assert set(datum.odd_radical) == odd
        assert datum.blocks == ((1, 2), (3, 4))

    def test_zero_weight(self):
        datum = radical_roots((0, 0, 0))
        assert datum.even_radical == ()
        assert datum.odd_radical == ()
        assert datum.blocks == ((1, 2, 3),)

    def test_rank_two(self):
        datum = radical_roots((0, -1))
        assert set(datum.even_radical) == {(1, -1)}
        assert set(datum.odd_radical) == {(-1, -1)}

    def test_doubled_roots_counted(self):
        datum = radical_roots((1, 0))
        # pairings: e1+e2 -> 1, 2e1 -> 2 positive; -e1-e2 -> -1 negative
        assert set(datum.odd_radical) == {(1, 1), (2, 0)}


class TestEulerCharacteristic:
    def test_diagonal_line_bundle(self):
        for a in (0, 1, 2, -1):
            poly, expansion = euler_characteristic((a, a), (0, 0))
            assert poly == LaurentPoly(2, {(a, a): 1})
            assert expansion.coeffs == {(a, a): 1}

    def test_block_preimage_n4(self):
        for a in (0, 1, 2):
            poly, _ = euler_characteristic((a, a, 0, 0), (0, 0, -1, -1))
            assert ds_eval(poly) == denominators(2)[0]

    def test_levi_incompatible(self):
        with pytest.raises(LeviIncompatible):
            euler_characteristic((1, 0, 0, 0), (0, 0, -1, -1))

    def test_levi_zero_sum_pair(self):
        # gamma pairs positions 1 and 2 through an odd Levi root
        with pytest.raises(LeviIncompatible):
            euler_characteristic((1, -1, 0), (1, -1, -2))
        poly, _ = euler_characteristic((1, 1, 0), (1, -1, -2))
        assert membership(poly).member

    def test_member(self):
        rng = random.Random(51)
        for _ in range(12):
            n = rng.choice((2, 3))
            gamma = tuple(sorted((rng.randint(-2, 2) for _ in range(n)), reverse=True))
            # group indices forced equal by the Levi: equal gamma entries
            # and zero-sum gamma pairs
            component = list(range(n))

            def find(i):
                while component[i] != i:
                    component[i] = component[component[i]]
                    i = component[i]
                return i

            for i in range(n):
                for j in range(i + 1, n):
                    if gamma[i] == gamma[j] or gamma[i] + gamma[j] == 0:
                        component[find(i)] = find(j)
            values = {}
            lam = tuple(values.setdefault(find(i), rng.randint(-2, 2))
                        for i in range(n))
            poly, _ = euler_characteristic(lam, gamma)
            assert membership(poly).member

    def test_w_sum_oracle(self):
        # Literal orbit sum of x^lam * prod(1 - x^-alpha) over the group,
        # cleared to the common Vandermonde denominator.
        cases = [
            ((0, 0), (0, -1)),
            ((1, 1), (0, -1)),
            ((0, 0, 0), (0, -1, -1)),
            ((2, 2, 0), (0, 0, -1)),
            ((1, 1, 1), (0, 0, -1)),
        ]
        for lam, gamma in cases:
            n = len(lam)
            datum = radical_roots(gamma)
            staircase = rho(n)
            numerator = LaurentPoly.monomial(
                n, tuple(lam[i] + staircase[i] for i in range(n))
            )
            for alpha in datum.odd_radical:
                numerator = numerator * (
                    1 - LaurentPoly.monomial(n, [-a for a in alpha])
                )
            signed_orbit = LaurentPoly.zero(n)
            for perm, sign in permutations_with_signs(n):
                signed_orbit = signed_orbit + sign * util.permute_poly(numerator, perm)
            oracle = signed_orbit.exact_divide(denominators(n)[1])
            assert oracle == euler_characteristic(lam, gamma)[0]


class TestEulerDsPower:
    def test_agrees_with_literal_composition(self):
        grid = [(n, k, a) for n in (2, 3, 4) for k in range(1, n // 2 + 1)
                for a in (0, 1, 2)]
        grid.append((5, 2, 1))
        for n, k, a in grid:
            gamma = tuple(0 if i < 2 * k else -1 for i in range(n))
            lam = tuple(a if i < 2 * k else 0 for i in range(n))
            literal = ds_power(euler_characteristic(lam, gamma)[0], k)
            assert euler_ds_power(lam, gamma, k) == literal

    def test_k_zero_is_materialization(self):
        lam, gamma = (1, 1, 0, 0), (0, 0, -1, -1)
        assert euler_ds_power(lam, gamma, 0) == euler_characteristic(lam, gamma)[0]

    def test_block_targets(self):
        for n in (4, 5, 6):
            for k in range(1, n // 2 + 1):
                gamma = tuple(0 if i < 2 * k else -1 for i in range(n))
                lam = tuple(1 if i < 2 * k else 0 for i in range(n))
                assert euler_ds_power(lam, gamma, k) == denominators(n - 2 * k)[0]

    def test_levi_guard(self):
        with pytest.raises(LeviIncompatible):
            euler_ds_power((1, 0, 0, 0), (0, 0, -1, -1), 1)
