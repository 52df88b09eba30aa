"""Exact characteristic numbers and dimension filters for circle actions
with three isolated fixed points.

Rational results come back as :class:`fractions.Fraction`. Models are given
either as a path to a JSON model file or as the decoded dictionary.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from typing import Any, Union

from . import _trifix
from ._trifix import TrifixError, admissible_oriented_dims, oriented_filter, spin_filter

__all__ = [
    "TrifixError",
    "admissible_oriented_dims",
    "bernoulli",
    "chi_y",
    "dim8_unitary_solve",
    "genus_polynomial",
    "integrate",
    "nu2",
    "oriented_filter",
    "parity_search",
    "residue_sum",
    "s_coeff",
    "signature",
    "spin_filter",
    "t_coeff",
    "verify",
]

ModelLike = Union[str, os.PathLike, dict]


def _model_text(model: ModelLike) -> str:
    if isinstance(model, dict):
        return json.dumps(model)
    with open(model, encoding="utf-8") as handle:
        return handle.read()


def bernoulli(i: int) -> Fraction:
    return Fraction(_trifix.bernoulli(i))


def nu2(value: Union[int, Fraction]) -> int | None:
    """2-adic valuation; None stands for infinity (the value 0)."""
    return _trifix.nu2(str(Fraction(value)))


def s_coeff(*parts: int) -> Fraction:
    return Fraction(_trifix.genus_coefficient("L", list(parts)))


def t_coeff(*parts: int) -> Fraction:
    return Fraction(_trifix.genus_coefficient("Todd", list(parts)))


def genus_polynomial(genus: str, k: int) -> dict[tuple[int, ...], Fraction]:
    return {tuple(p): Fraction(v) for p, v in _trifix.genus_polynomial(genus, k)}


def integrate(model: ModelLike, class_spec: str) -> Fraction:
    return Fraction(_trifix.integrate(_model_text(model), class_spec))


def signature(model: ModelLike) -> int:
    return _trifix.signature(_model_text(model))


def residue_sum(model: ModelLike) -> Fraction:
    return Fraction(_trifix.residue_sum(_model_text(model)))


def chi_y(model: ModelLike) -> list[int]:
    """Coefficients of the chi_y polynomial, constant term first."""
    return list(_trifix.chi_y(_model_text(model)))


def dim8_unitary_solve(signs: tuple[int, ...] = (1,)) -> list[tuple[int, int, int, int]]:
    return [tuple(int(x) for x in row) for row in _trifix.dim8_unitary_solve(list(signs))]


def parity_search(chi_minus1: int, chi_1: int, n: int = 4, points: int = 3):
    return _trifix.parity_search(chi_minus1, chi_1, n, points)


def verify(max_dim: int) -> dict[str, Any]:
    return json.loads(_trifix.verify_json(max_dim))
