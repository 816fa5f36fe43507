"""The evaluation homomorphism on supersymmetric Laurent polynomials.

A symmetric Laurent polynomial ``f`` in ``n`` variables belongs to the
ring J_n when the evaluation ``x_i = t, x_j = t^{-1}`` is independent of
``t`` (one pair suffices by symmetry).  On J_n the evaluation at the last
pair, with the t-free part compressed to ``n - 2`` variables, is a ring
homomorphism ``J_n -> J_{n-2}`` whose kernel is spanned by the thin-Kac
supercharacters; :func:`kernel_decompose` computes those coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .errors import ArityMismatch, NotInKernel, NotMember, NotSymmetric
from .laurent import LaurentPoly
from .schur import SchurExpansion, denominators, schur_expand
from .weights import parity


@dataclass(frozen=True)
class MembershipReport:
    """Outcome of the J_n test: symmetry plus t-independence, with the
    offending slice term (t-exponent, reduced exponents) when the latter
    fails."""

    symmetric: bool
    t_independent: bool
    witness: tuple[int, tuple[int, ...]] | None = None

    @property
    def member(self) -> bool:
        return self.symmetric and self.t_independent


def membership(f: LaurentPoly) -> MembershipReport:
    """Test membership of f in J_n.

    Checks S_n-invariance, then t-independence of the slice at the pair
    (1, 2); by symmetry any other pair gives the same answer.  Rings with
    fewer than two variables have no pair condition.
    """
    symmetric = f.is_symmetric()
    if f.arity < 2:
        return MembershipReport(symmetric, True, None)
    witness = f.substitute_pair(1, 2).t_witness()
    return MembershipReport(symmetric, witness is None, witness)


def ds_eval(f: LaurentPoly) -> LaurentPoly:
    """Evaluate x_{n-1} = t, x_n = t^{-1} and drop t.

    Raises :class:`NotMember` when the slice has a t-dependent term;
    the compressed result keeps the surviving variables in order.
    """
    n = f.arity
    if n < 2:
        raise ArityMismatch("the evaluation map needs at least two variables")
    tslice = f.substitute_pair(n - 1, n)
    witness = tslice.t_witness()
    if witness is not None:
        raise NotMember(
            f"t-dependent slice term with t-exponent {witness[0]}", witness=witness
        )
    return LaurentPoly(n - 2, tslice.constant_part())


def ds_power(f: LaurentPoly, k: int) -> LaurentPoly:
    """The k-fold composition of the evaluation map, landing in arity
    n - 2k.  ``k = 0`` is the identity."""
    n = f.arity
    if not 0 <= k <= n // 2:
        raise ArityMismatch(f"cannot apply the evaluation {k} times at arity {n}")
    out = f
    for _ in range(k):
        out = ds_eval(out)
    return out


def kernel_decompose(f: LaurentPoly) -> SchurExpansion:
    """Coordinates of a kernel element over thin-Kac supercharacters.

    Requires f in J_n with vanishing evaluation; then f is exactly
    divisible by prod_{i<j}(1 - x_i x_j) and the quotient's Schur
    coefficients, parity-signed, satisfy
    ``f = sum_lam c_lam * sch_thin_kac(lam)``.
    """
    n = f.arity
    if n < 2:
        raise ArityMismatch("kernel decomposition needs at least two variables")
    report = membership(f)
    if not report.symmetric:
        raise NotSymmetric("kernel decomposition needs a symmetric polynomial")
    if not report.t_independent:
        raise NotMember("polynomial is not supersymmetric", witness=report.witness)
    if not ds_eval(f).is_zero():
        raise NotInKernel("the evaluation image is nonzero")
    quotient = f.exact_divide(denominators(n)[0])
    schur_coeffs = schur_expand(quotient)
    signed = {
        lam: (-coef if parity(lam) else coef)
        for lam, coef in schur_coeffs.coeffs.items()
    }
    return SchurExpansion(n, signed)


def filtration_level(f: LaurentPoly) -> int:
    """Least k with the k-fold evaluation of f equal to zero.

    Elements surviving down to arity 0 or 1 get level floor(n/2) + 1,
    the top graded piece of the kernel filtration.
    """
    report = membership(f)
    if not report.member:
        raise NotMember("filtration level is defined on J_n only",
                        witness=report.witness)
    if f.is_zero():
        return 0
    out = f
    for k in range(1, f.arity // 2 + 1):
        out = ds_eval(out)
        if out.is_zero():
            return k
    return f.arity // 2 + 1


def quotient_reduce(f: LaurentPoly, which: Literal["sp", "SP"]) -> LaurentPoly:
    """Canonical representative modulo powers of e = x_1...x_n.

    For ``sp`` the relation is e = 1: every monomial orbit is shifted so
    its minimal entry becomes 0.  For ``SP`` the relation is e^2 = 1:
    orbits shift by even multiples only, leaving a residual entry of 0 or
    1.  The shift amount, being the orbit minimum, is constant on orbits,
    so the reduction of a symmetric polynomial is symmetric.
    """
    if which not in ("sp", "SP"):
        raise ValueError(f"unknown quotient {which!r}; expected 'sp' or 'SP'")
    if not f.is_symmetric():
        raise NotSymmetric("quotient reduction is defined on symmetric polynomials")
    if f.arity == 0:
        return f
    out: dict[tuple[int, ...], int] = {}
    for exps, coef in f.terms.items():
        low = min(exps)
        shift = low if which == "sp" else 2 * (low // 2)
        key = tuple(e - shift for e in exps)
        new = out.get(key, 0) + coef
        if new:
            out[key] = new
        else:
            del out[key]
    return LaurentPoly._raw(f.arity, out)
