"""Exact dynamical degrees, density certificates and canonical heights on
products of elliptic curves."""

import json

from . import _core
from ._core import DomainError, coprime_test, is_pisot_unit, is_torsion

__all__ = [
    "DomainError",
    "arithmetic_degree_estimate",
    "canonical_height",
    "char_poly",
    "companion",
    "coprime_test",
    "dense_orbit_test",
    "dynamical_degree",
    "gallery",
    "is_pisot_unit",
    "is_torsion",
    "ksc",
    "pisot_unit_search",
    "resultant",
    "run",
]


def char_poly(matrix):
    return json.loads(_core.char_poly(matrix))


def companion(coeffs):
    return json.loads(_core.companion(coeffs))


def resultant(p, q):
    return int(_core.resultant(p, q))


def dense_orbit_test(coeffs):
    return json.loads(_core.dense_orbit_test(coeffs))


def pisot_unit_search(degree, bound):
    return json.loads(_core.pisot_unit_search(degree, bound))


def dynamical_degree(matrix, precision="1e-12"):
    return json.loads(_core.dynamical_degree(matrix, precision))


def canonical_height(A, B, x, y, tol=1e-6):
    return json.loads(_core.canonical_height(str(A), str(B), str(x), str(y), tol))


def arithmetic_degree_estimate(heights, window=None):
    return json.loads(_core.arithmetic_degree_estimate(list(heights), window))


def ksc(example, steps=60, tol=1e-2, force=False):
    return json.loads(_core.ksc(example, steps, tol, force))


def gallery(dim, extras=False):
    return json.loads(_core.gallery(dim, extras))


def run(*args):
    """Run the command line front end; returns (exit code, stdout, stderr)."""
    return _core.run([str(a) for a in args])
