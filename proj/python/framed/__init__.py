"""Exact braid, isogeny, lattice and Hochschild computations.

Matrices may be given as nested lists or as literals like "[[1,1],[0,1]]";
torus points as (x, y) tuples of ints, Fractions or "p/q" strings.
Structured results come back as decoded JSON.
"""

import json
from fractions import Fraction

from . import _framed
from ._framed import DomainError, ParseError

__all__ = [
    "DomainError",
    "ParseError",
    "normal_form",
    "phi",
    "braid_equal",
    "kernel_power",
    "lift_matrix",
    "lift_word",
    "eta_zeta",
    "cover_carry",
    "cover_mul",
    "transpose_cover",
    "enumerate_sublattices",
    "subgroup",
    "kernel_subgroup",
    "matrix_from_subgroup",
    "isogeny_act",
    "sd_mul",
    "sd_apply",
    "validate_algebra",
    "hh_betti",
    "hh0",
    "secondary_hh_betti",
    "selftest",
]


def _matrix(m):
    if isinstance(m, str):
        return m
    (a, b), (c, d) = m
    return f"[[{a},{b}],[{c},{d}]]"


def _point(p):
    if isinstance(p, str):
        return p
    x, y = (Fraction(v) for v in p)
    return f"({x},{y})"


def _points(points):
    if isinstance(points, str):
        return points
    return " ".join(_point(p) for p in points)


def _cover(x):
    if isinstance(x, str):
        return x
    if isinstance(x, dict):
        return f"{_matrix(x['matrix'])}@{x['winding']}"
    matrix, winding = x
    return f"{_matrix(matrix)}@{winding}"


def normal_form(word):
    return json.loads(_framed.normal_form(word))


def phi(word):
    return json.loads(_framed.phi(word))


def braid_equal(x, y):
    return _framed.braid_equal(x, y)


def kernel_power(word):
    return _framed.kernel_power(word)


def lift_matrix(m):
    return _framed.lift_matrix(_matrix(m))


def lift_word(word):
    return json.loads(_framed.lift_word(word))


def eta_zeta(a, b):
    re, im = json.loads(_framed.eta_zeta(_matrix(a), _matrix(b)))
    return Fraction(re), Fraction(im)


def cover_carry(a, b):
    return _framed.cover_carry(_matrix(a), _matrix(b))


def cover_mul(x, y):
    return json.loads(_framed.cover_mul(_cover(x), _cover(y)))


def transpose_cover(x):
    return json.loads(_framed.transpose_cover(_cover(x)))


def enumerate_sublattices(n):
    return json.loads(_framed.enumerate_sublattices(n))


def subgroup(points):
    return json.loads(_framed.subgroup(_points(points)))


def kernel_subgroup(m):
    return json.loads(_framed.kernel_subgroup(_matrix(m)))


def matrix_from_subgroup(points):
    return json.loads(_framed.matrix_from_subgroup(_points(points)))


def isogeny_act(m, points):
    return json.loads(_framed.isogeny_act(_matrix(m), _points(points)))


def sd_mul(g, h):
    return _framed.sd_mul(g, h)


def sd_apply(g, q):
    x, y = json.loads(_framed.sd_apply(g, _point(q)))
    return Fraction(x), Fraction(y)


def validate_algebra(name):
    return json.loads(_framed.validate_algebra(name))


def hh_betti(name, n_max, normalized=True):
    return json.loads(_framed.hh_betti(name, n_max, normalized))


def hh0(name):
    return _framed.hh0(name)


def secondary_hh_betti(name, total_max, order="mu1"):
    return json.loads(_framed.secondary_hh_betti(name, total_max, order))


def selftest(suite="all", seed=7):
    return json.loads(_framed.selftest(suite, seed))
