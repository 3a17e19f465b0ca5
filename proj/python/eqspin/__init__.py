"""Exact equivariant spin numbers, k-vectors and rigidity verdicts for
cyclic actions of odd prime order on spin 4-manifolds."""

import json
import os
from fractions import Fraction

from ._core import DatasetError, InvalidParameters, NonIntegralKVector
from . import _core

__all__ = [
    "DatasetError",
    "InvalidParameters",
    "NonIntegralKVector",
    "enumerate_pseudofree_p3",
    "fermat_quartic",
    "k_vector",
    "normalize",
    "quotient",
    "selftest",
    "spin_number",
    "verdict",
    "verdict_text",
    "verify_prop41",
]


def _document(dataset):
    # dict, path, or JSON text
    if isinstance(dataset, dict):
        return json.dumps(dataset)
    if isinstance(dataset, os.PathLike) or (isinstance(dataset, str) and not dataset.lstrip().startswith("{")):
        with open(dataset, encoding="utf-8") as fh:
            return fh.read()
    return dataset


def _fraction(value):
    return None if value is None else Fraction(value)


def fermat_quartic():
    return json.loads(_core.fermat_quartic())


def normalize(dataset):
    return json.loads(_core.normalize_dataset(_document(dataset)))


def spin_number(dataset, power=1, precision=128):
    report = json.loads(_core.spin_json(_document(dataset), power, precision))
    report["value"] = _fraction(report["value"])
    return report


def quotient(dataset):
    report = json.loads(_core.quotient_json(_document(dataset)))
    for key in ("sigma", "euler"):
        if key in report:
            report[key] = Fraction(report[key])
    return report


def k_vector(dataset):
    return [int(x) for x in _core.k_vector(_document(dataset))]


def verdict(dataset, precision=128):
    """The verdict report as a dict with the JSON report schema."""
    return json.loads(_core.verdict_json(_document(dataset), precision))


def verdict_text(dataset):
    return _core.verdict_text(_document(dataset))


def enumerate_pseudofree_p3(quotient_b_plus, homologically_trivial=False):
    return [tuple(pair) for pair in _core.enumerate_pseudofree_p3(quotient_b_plus, homologically_trivial)]


def verify_prop41(p, m, n, l, d=0, qs=(2,)):
    report = json.loads(_core.prop41_json(p, list(m), list(n), l, d, list(qs)))
    if report["sw_value"] is not None:
        report["sw_value"] = int(report["sw_value"])
    return report


def selftest(k3_signature=-16):
    return json.loads(_core.selftest_json(k3_signature))
