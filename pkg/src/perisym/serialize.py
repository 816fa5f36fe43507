"""JSON forms of the package's values.

Coefficients travel as decimal strings so arbitrary-precision integers
survive any JSON tooling; polynomial terms and expansion coefficients are
emitted in canonical (graded-lex descending) order, making serialization
a canonical form: equal values always produce identical JSON.
"""

from __future__ import annotations

from typing import Any

from .laurent import LaurentPoly
from .lift import Certificate, CertificateLevel
from .dsmap import MembershipReport
from .schur import SchurExpansion
from .thinkac import KClass


def poly_to_dict(f: LaurentPoly) -> dict[str, Any]:
    return {
        "n": f.arity,
        "terms": [
            {"exp": list(exps), "coef": str(coef)} for exps, coef in f.sorted_terms()
        ],
    }


def poly_from_dict(data: Any) -> LaurentPoly:
    if not isinstance(data, dict) or "n" not in data or "terms" not in data:
        raise ValueError("polynomial JSON needs keys 'n' and 'terms'")
    arity = int(data["n"])
    terms: dict[tuple[int, ...], int] = {}
    for item in data["terms"]:
        exps = tuple(int(e) for e in item["exp"])
        if exps in terms:
            raise ValueError(f"duplicate exponent vector {list(exps)}")
        terms[exps] = int(item["coef"])
    return LaurentPoly(arity, terms)


def _coeffs_to_list(items) -> list[dict[str, Any]]:
    return [{"weight": list(lam), "coef": str(coef)} for lam, coef in items]


def _coeffs_from_list(data) -> dict[tuple[int, ...], int]:
    coeffs: dict[tuple[int, ...], int] = {}
    for item in data:
        lam = tuple(int(a) for a in item["weight"])
        if lam in coeffs:
            raise ValueError(f"duplicate weight {list(lam)}")
        coeffs[lam] = int(item["coef"])
    return coeffs


def schur_to_dict(expansion: SchurExpansion) -> dict[str, Any]:
    return {
        "n": expansion.arity,
        "coeffs": _coeffs_to_list(expansion.sorted_items()),
    }


def schur_from_dict(data: Any) -> SchurExpansion:
    if not isinstance(data, dict) or "n" not in data or "coeffs" not in data:
        raise ValueError("Schur expansion JSON needs keys 'n' and 'coeffs'")
    return SchurExpansion(int(data["n"]), _coeffs_from_list(data["coeffs"]))


def kclass_to_dict(cls: KClass) -> dict[str, Any]:
    return {
        "n": cls.arity,
        "basis": "thinkac",
        "coeffs": _coeffs_to_list(cls.sorted_items()),
    }


def kclass_from_dict(data: Any) -> KClass:
    if not isinstance(data, dict) or "n" not in data or "coeffs" not in data:
        raise ValueError("class JSON needs keys 'n' and 'coeffs'")
    if data.get("basis", "thinkac") != "thinkac":
        raise ValueError(f"unsupported basis {data.get('basis')!r}")
    return KClass(int(data["n"]), _coeffs_from_list(data["coeffs"]))


def membership_to_dict(report: MembershipReport) -> dict[str, Any]:
    witness = None
    if report.witness is not None:
        witness = {"t_exp": report.witness[0], "exp": list(report.witness[1])}
    return {
        "member": report.member,
        "symmetric": report.symmetric,
        "t_independent": report.t_independent,
        "witness": witness,
    }


def certificate_to_dict(cert: Certificate) -> dict[str, Any]:
    return {
        "levels": [
            {
                "rank": level.rank,
                "lift": poly_to_dict(level.lift_part),
                "kernel": {
                    "n": level.kernel_coeffs.arity,
                    "basis": "thinkac",
                    "coeffs": _coeffs_to_list(level.kernel_coeffs.sorted_items()),
                },
            }
            for level in cert.levels
        ],
        "bottom": poly_to_dict(cert.bottom),
    }


def certificate_from_dict(data: Any) -> Certificate:
    if not isinstance(data, dict) or "levels" not in data or "bottom" not in data:
        raise ValueError("certificate JSON needs keys 'levels' and 'bottom'")
    levels = []
    for item in data["levels"]:
        kernel = item["kernel"]
        levels.append(
            CertificateLevel(
                int(item["rank"]),
                poly_from_dict(item["lift"]),
                SchurExpansion(int(kernel["n"]), _coeffs_from_list(kernel["coeffs"])),
            )
        )
    return Certificate(tuple(levels), poly_from_dict(data["bottom"]))
