"""Skyline fillings, Demazure atoms and characters, quasisymmetric Schur
functions, and their Littlewood-Richardson rules."""

import json

from ._skylr import (
    SkylrError,
    bruhat_geq,
    coeff_a,
    coeff_b,
    coeff_classical,
    coeff_qs,
    count_lrc,
    count_lrk,
    count_lrs,
    is_contre_lattice,
    is_regular_contre_lattice,
    parse_ints,
    rem_k,
    render,
    sweep,
    consistency_sides,
)
from . import _skylr

__all__ = [
    "SkylrError",
    "atom",
    "bruhat_geq",
    "character",
    "coeff_a",
    "coeff_b",
    "coeff_classical",
    "coeff_qs",
    "consistency_sides",
    "count_lrc",
    "count_lrk",
    "count_lrs",
    "enum_lrs",
    "is_contre_lattice",
    "is_regular_contre_lattice",
    "lrc_representatives",
    "parse_ints",
    "poly_string",
    "quasi_schur",
    "rem_k",
    "render",
    "render_filling",
    "schur",
    "sweep",
    "verify",
]


def schur(shape, n):
    """Schur polynomial as {exponent tuple: coefficient}."""
    return _skylr.poly_terms("schur", list(shape), n)


def atom(shape, n):
    return _skylr.poly_terms("atom", list(shape), n)


def character(shape, n):
    return _skylr.poly_terms("char", list(shape), n)


def quasi_schur(shape, n):
    return _skylr.poly_terms("qs", list(shape), n)


def poly_string(kind, shape, n):
    """Text form, e.g. poly_string("char", [0, 1], 2) == "x1 + x2"."""
    return _skylr.poly_string(kind, list(shape), n)


def enum_lrs(delta, gamma, content):
    return json.loads(_skylr.enum_lrs_json(list(delta), list(gamma), list(content)))


def lrc_representatives(beta, alpha, content):
    return json.loads(_skylr.lrc_representatives_json(list(beta), list(alpha), list(content)))


def render_filling(filling):
    """Draw a filling or contretableau given as a dict (the JSON form)."""
    return _skylr.render(json.dumps(filling))


def verify(rule, shape, lam, n):
    """Expand shape x s_lam both by counting and by solving; returns the report dict."""
    return json.loads(_skylr.verify_json(rule, list(shape), list(lam), n))
