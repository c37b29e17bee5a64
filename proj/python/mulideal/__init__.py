"""Multiplier ideals of monomial ideals.

Ideals are sequences of exponent tuples, e.g. [(4, 0), (2, 1), (1, 2), (0, 5)].
Coefficients accept int, Fraction or "p/q" strings; rationals come back as Fraction.
"""

import json
from fractions import Fraction

from . import _core

__all__ = [
    "minimalize", "contains", "product", "power", "newton_facets", "multiplier_ideal",
    "mixed_multiplier_ideal", "lct", "entry_threshold", "jumping_numbers", "symbolic_power",
    "minimal_primes", "lct_from_resolution", "classify", "check_skoda", "check_subadditivity",
    "check_restriction", "check_symbolic", "run_campaign",
]


def _gens(ideal):
    gens = [list(g) for g in ideal]
    if not gens:
        raise ValueError("an ideal needs at least one generator")
    return len(gens[0]), gens


def _out(gens):
    return [tuple(g) for g in gens]


def _q(x):
    return str(Fraction(x))


def minimalize(ideal):
    return _out(_core.minimalize(*_gens(ideal)))


def contains(ideal, w):
    return _core.contains(*_gens(ideal), list(w))


def product(a, b):
    d, ga = _gens(a)
    return _out(_core.product(d, ga, _gens(b)[1]))


def power(a, k):
    return _out(_core.power(*_gens(a), k))


def newton_facets(ideal):
    """Facets as (normal, offset) with normal . x >= offset."""
    return [(tuple(Fraction(x) for x in n), Fraction(o)) for n, o in _core.newton_facets(*_gens(ideal))]


def multiplier_ideal(ideal, c):
    return _out(_core.multiplier_ideal(*_gens(ideal), _q(c)))


def mixed_multiplier_ideal(a, c, b, e):
    d, ga = _gens(a)
    return _out(_core.mixed_multiplier_ideal(d, ga, _q(c), _gens(b)[1], _q(e)))


def lct(ideal):
    return Fraction(_core.lct(*_gens(ideal)))


def entry_threshold(ideal, w):
    return Fraction(_core.entry_threshold(*_gens(ideal), list(w)))


def jumping_numbers(ideal, bound):
    """[(xi, J(a^xi)), ...] for the jumps in (0, bound]."""
    return [(Fraction(v), _out(g)) for v, g in _core.jumping_numbers(*_gens(ideal), _q(bound))]


def symbolic_power(ideal, m):
    return _out(_core.symbolic_power(*_gens(ideal), m))


def minimal_primes(ideal):
    """Minimal primes as 0-based variable index tuples."""
    return [tuple(p) for p in _core.minimal_primes(*_gens(ideal))]


def lct_from_resolution(entries):
    """entries: [(r, b), ...]"""
    return Fraction(_core.lct_from_resolution([(_q(r), int(b)) for r, b in entries]))


def classify(entries, c):
    return _core.classify([(_q(r), int(b)) for r, b in entries], _q(c))


def check_skoda(a, m):
    return json.loads(_core.check_skoda(*_gens(a), m))


def check_subadditivity(a, c, b, e):
    d, ga = _gens(a)
    return json.loads(_core.check_subadditivity(d, ga, _q(c), _gens(b)[1], _q(e)))


def check_restriction(a, k, c=1):
    """k is the 0-based index of the coordinate hyperplane x_k = 0."""
    return json.loads(_core.check_restriction(*_gens(a), k, _q(c)))


def check_symbolic(q, m):
    return json.loads(_core.check_symbolic(*_gens(q), m))


def run_campaign(seed, count):
    return [json.loads(r) for r in _core.run_campaign(seed, count)]
