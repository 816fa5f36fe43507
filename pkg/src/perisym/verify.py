"""The acceptance battery: exact, seeded, self-contained checks.

Each criterion function returns a :class:`CriterionResult`; ``run_all``
executes the battery in order.  All checks are exact integer identities
(zero tolerance).  The battery is deterministic: random inputs come from
fixed-seed generators.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable, Iterable

from .dsmap import ds_eval, ds_power, kernel_decompose, quotient_reduce
from .euler import euler_characteristic
from .laurent import LaurentPoly, monomial_orbit_sum
from .lift import certify, membership_window_basis
from .schur import alternant, denominators
from .thinkac import KClass, kclass_sch, sch_standard, sch_thin_kac, theta_prime
from .weights import dominant_weights_with_beads_in, parity, rho


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"criterion {self.number} [{status}] {self.name}: "
                f"{self.detail} ({self.seconds:.1f}s)")


def _det(mat: list[list[LaurentPoly]]) -> LaurentPoly:
    """Determinant by Laplace expansion along the first row."""
    size = len(mat)
    if size == 1:
        return mat[0][0]
    out = LaurentPoly.zero(mat[0][0].arity)
    for j in range(size):
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = mat[0][j] * _det(minor)
        out = out + (term if j % 2 == 0 else -term)
    return out


def schur_bialternant_oracle(lam: tuple[int, ...]) -> LaurentPoly:
    """Independent Schur computation: the n x n bead-power determinant
    divided by the Vandermonde determinant, both expanded by cofactors."""
    n = len(lam)
    if n == 0:
        return LaurentPoly.one(0)
    beads = [lam[i] + n - 1 - i for i in range(n)]
    num = _det([[LaurentPoly.variable(n, i + 1, b) for b in beads] for i in range(n)])
    den = _det([[LaurentPoly.variable(n, i + 1, n - 1 - j) for j in range(n)]
                for i in range(n)])
    return num.exact_divide(den)


def _random_symmetric(n: int, rng: random.Random, bound: int = 2,
                      terms: int = 3, coef: int = 4) -> LaurentPoly:
    out = LaurentPoly.zero(n)
    for _ in range(terms):
        mu = tuple(sorted((rng.randint(-bound, bound) for _ in range(n)), reverse=True))
        out = out + rng.randint(-coef, coef) * monomial_orbit_sum(n, mu)
    return out


def _random_member(n: int, rng: random.Random, bound: int = 3,
                   picks: int = 4, coef: int = 3) -> LaurentPoly:
    basis = membership_window_basis(n, bound)
    out = LaurentPoly.zero(n)
    for index in rng.sample(range(len(basis)), min(picks, len(basis))):
        out = out + rng.randint(-coef, coef) * basis[index]
    return out


def criterion_1_thin_kac_formula() -> CriterionResult:
    """Thin-Kac supercharacters against the independent bialternant."""
    start = time.time()
    checked = 0
    for n in (1, 2, 3, 4):
        r_minus = denominators(n)[0]
        for lam in dominant_weights_with_beads_in(n, -4, n + 3):
            sign = -1 if parity(lam) else 1
            expected = sign * r_minus * schur_bialternant_oracle(lam)
            if sch_thin_kac(lam) != expected:
                return CriterionResult(1, "thin-Kac supercharacter formula", False,
                                       f"mismatch at {lam}", time.time() - start)
            checked += 1
    return CriterionResult(1, "thin-Kac supercharacter formula", True,
                           f"{checked} weights exact", time.time() - start)


def criterion_2_kernel_theorem() -> CriterionResult:
    """Kernel of the evaluation map: thin-Kac spans in, decompositions out."""
    start = time.time()
    rng = random.Random(20260811)
    combos = decomposed = 0
    for n in (2, 3, 4):
        weights = list(dominant_weights_with_beads_in(n, -3, n + 2))
        r_minus = denominators(n)[0]
        for _ in range(100):
            coeffs = {}
            for lam in rng.sample(weights, 4):
                coeffs[lam] = rng.randint(-4, 4)
            f = kclass_sch(KClass(n, coeffs))
            if not ds_eval(f).is_zero():
                return CriterionResult(2, "kernel decomposition", False,
                                       f"thin-Kac combination escapes the kernel (n={n})",
                                       time.time() - start)
            combos += 1
        for _ in range(100):
            f = r_minus * _random_symmetric(n, rng)
            expansion = kernel_decompose(f)
            rebuilt = LaurentPoly.zero(n)
            for lam, coef in expansion.sorted_items():
                rebuilt = rebuilt + coef * sch_thin_kac(lam)
            if rebuilt != f:
                return CriterionResult(2, "kernel decomposition", False,
                                       f"reconstruction failed (n={n})",
                                       time.time() - start)
            decomposed += 1
    return CriterionResult(2, "kernel decomposition", True,
                           f"{combos} combinations to zero, {decomposed} decompositions exact",
                           time.time() - start)


def criterion_3_euler_preimage() -> CriterionResult:
    """Evaluation images of parabolic-induction Euler characteristics."""
    start = time.time()
    checked = 0
    for n in range(2, 7):
        for k in range(1, n // 2 + 1):
            gamma = tuple(0 if i < 2 * k else -1 for i in range(n))
            target = denominators(n - 2 * k)[0]
            for a in (0, 1, 2):
                lam = tuple(a if i < 2 * k else 0 for i in range(n))
                image = ds_power(euler_characteristic(lam, gamma)[0], k)
                if image != target:
                    return CriterionResult(3, "Euler preimage", False,
                                           f"mismatch at n={n} k={k} a={a}",
                                           time.time() - start)
                checked += 1
    return CriterionResult(3, "Euler preimage", True,
                           f"{checked} (n,k,a) triples exact", time.time() - start)


def criterion_4_tensor_identity() -> CriterionResult:
    """Translation operators sum to tensoring with the standard module."""
    start = time.time()
    checked = 0
    for n in (1, 2, 3):
        std = sch_standard(n)
        for lam in dominant_weights_with_beads_in(n, -4, n + 3):
            beads = [lam[i] + n - 1 - i for i in range(n)]
            total = LaurentPoly.zero(n)
            for k in beads:
                total = total + kclass_sch(theta_prime(k, KClass.basis(lam)))
            if total != sch_thin_kac(lam) * std:
                return CriterionResult(4, "translation tensor identity", False,
                                       f"mismatch at {lam}", time.time() - start)
            checked += 1
    return CriterionResult(4, "translation tensor identity", True,
                           f"{checked} weights exact", time.time() - start)


def criterion_5_certify() -> CriterionResult:
    """Constructive surjectivity: certify random window elements."""
    start = time.time()
    rng = random.Random(20260811)
    certified = 0
    for n in (2, 3, 4):
        basis = membership_window_basis(n, 4)
        for _ in range(50):
            f = LaurentPoly.zero(n)
            for index in rng.sample(range(len(basis)), min(5, len(basis))):
                f = f + rng.randint(-3, 3) * basis[index]
            cert = certify(f)
            if cert.validate() != f:
                return CriterionResult(5, "constructive certify", False,
                                       f"reconstruction failed (n={n})",
                                       time.time() - start)
            certified += 1
    return CriterionResult(5, "constructive certify", True,
                           f"{certified} random elements certified and replayed exactly",
                           time.time() - start)


def criterion_6_homomorphism() -> CriterionResult:
    """Evaluation is a ring map; the pair choice does not matter."""
    start = time.time()
    rng = random.Random(20260811)
    pairs = 0
    for _ in range(100):
        n = rng.choice((2, 3, 4))
        f = _random_member(n, rng)
        g = _random_member(n, rng)
        if ds_eval(f * g) != ds_eval(f) * ds_eval(g):
            return CriterionResult(6, "homomorphism and pair independence", False,
                                   f"multiplicativity failed (n={n})", time.time() - start)
        if ds_eval(f + g) != ds_eval(f) + ds_eval(g):
            return CriterionResult(6, "homomorphism and pair independence", False,
                                   f"additivity failed (n={n})", time.time() - start)
        pairs += 1
    independence = 0
    for _ in range(20):
        n = rng.choice((3, 4))
        f = _random_member(n, rng)
        reference = ds_eval(f)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                tslice = f.substitute_pair(i, j)
                if tslice.t_witness() is not None:
                    return CriterionResult(6, "homomorphism and pair independence", False,
                                           f"pair ({i},{j}) t-dependent (n={n})",
                                           time.time() - start)
                if LaurentPoly(n - 2, tslice.constant_part()) != reference:
                    return CriterionResult(6, "homomorphism and pair independence", False,
                                           f"pair ({i},{j}) disagrees (n={n})",
                                           time.time() - start)
        independence += 1
    return CriterionResult(6, "homomorphism and pair independence", True,
                           f"{pairs} member pairs, {independence} pair-independence checks",
                           time.time() - start)


def criterion_7_denominator_identity() -> CriterionResult:
    """Signed staircase orbit equals the Vandermonde product."""
    start = time.time()
    for m in range(0, 7):
        if alternant(rho(m)) != denominators(m)[1]:
            return CriterionResult(7, "denominator identity", False,
                                   f"mismatch at m={m}", time.time() - start)
    return CriterionResult(7, "denominator identity", True, "m <= 6 exact",
                           time.time() - start)


def criterion_8_quotient_reductions() -> CriterionResult:
    """Quotient reductions are idempotent and multiplicative up to reduction."""
    start = time.time()
    rng = random.Random(20260811)
    checked = 0
    for n in (2, 3):
        for _ in range(100):
            f = _random_symmetric(n, rng)
            g = _random_symmetric(n, rng)
            for which in ("sp", "SP"):
                rf = quotient_reduce(f, which)
                if quotient_reduce(rf, which) != rf:
                    return CriterionResult(8, "quotient reductions", False,
                                           f"not idempotent (n={n}, {which})",
                                           time.time() - start)
                lhs = quotient_reduce(f * g, which)
                rhs = quotient_reduce(rf * quotient_reduce(g, which), which)
                if lhs != rhs:
                    return CriterionResult(8, "quotient reductions", False,
                                           f"not multiplicative (n={n}, {which})",
                                           time.time() - start)
            checked += 1
    return CriterionResult(8, "quotient reductions", True,
                           f"{checked} random symmetric inputs", time.time() - start)


ALL_CRITERIA: tuple[Callable[[], CriterionResult], ...] = (
    criterion_1_thin_kac_formula,
    criterion_2_kernel_theorem,
    criterion_3_euler_preimage,
    criterion_4_tensor_identity,
    criterion_5_certify,
    criterion_6_homomorphism,
    criterion_7_denominator_identity,
    criterion_8_quotient_reductions,
)


def run_all(report: Callable[[str], None] | None = None,
            numbers: Iterable[int] | None = None) -> list[CriterionResult]:
    wanted = set(numbers) if numbers is not None else None
    results = []
    for index, criterion in enumerate(ALL_CRITERIA, start=1):
        if wanted is not None and index not in wanted:
            continue
        result = criterion()
        results.append(result)
        if report is not None:
            report(result.line())
    return results
