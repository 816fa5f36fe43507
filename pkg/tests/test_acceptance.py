"""Acceptance battery: every criterion is exact (integer arithmetic,
zero tolerance) and prints one pass/fail line."""

from perisym import verify


def _check(criterion):
    result = criterion()
    print(result.line())
    assert result.passed, result.line()


def test_criterion_1_thin_kac_formula():
    _check(verify.criterion_1_thin_kac_formula)


def test_criterion_2_kernel_theorem():
    _check(verify.criterion_2_kernel_theorem)


def test_criterion_3_euler_preimage():
    _check(verify.criterion_3_euler_preimage)


def test_criterion_4_tensor_identity():
    _check(verify.criterion_4_tensor_identity)


def test_criterion_5_certify():
    _check(verify.criterion_5_certify)


def test_criterion_6_homomorphism():
    _check(verify.criterion_6_homomorphism)


def test_criterion_7_denominator_identity():
    _check(verify.criterion_7_denominator_identity)


def test_criterion_8_quotient_reductions():
    _check(verify.criterion_8_quotient_reductions)
