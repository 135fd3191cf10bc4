"""Operator linearization of commutative nonassociative polynomials.

``delta(args, p)`` replaces ``len(args)`` distinct leaves equal to the chosen
generator by the arguments, in every way (each argument used once, every
assignment of arguments to the chosen leaves counted), and sums.  A monomial
with fewer such leaves than arguments contributes zero.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Tuple

from .magma import Monomial, Polynomial, as_polynomial, multiply


def _split(mask: int):
    """All (sub, rest) pairs with sub | rest == mask, disjoint."""
    sub = mask
    while True:
        yield sub, mask & ~sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@lru_cache(maxsize=200_000)
def _delta_monomial(m: Monomial, args: Tuple[Monomial, ...], mask: int, var: str) -> Polynomial:
    # ``mask`` selects which of ``args`` still have to be placed inside ``m``.
    if m.is_leaf:
        if mask == 0:
            return Polynomial.monomial(m)
        if m.gen != var or mask & (mask - 1):
            return Polynomial()
        return Polynomial.monomial(args[mask.bit_length() - 1])
    out = Polynomial()
    for sub, rest in _split(mask):
        left = _delta_monomial(m.left, args, sub, var)
        if not left:
            continue
        right = _delta_monomial(m.right, args, rest, var)
        if right:
            out = out + multiply(left, right)
    return out


def _monomial_args(args: Sequence[Polynomial]):
    """Expand polynomial arguments into (coefficient, monomial tuple) terms."""
    terms = [((), 1)]
    for a in args:
        terms = [(ms + (m,), c * k) for ms, c in terms for m, k in a.items()]
    return terms


def delta(args: Sequence, target, var: str = "x") -> Polynomial:
    """Linearize ``target`` in ``var`` with the given arguments."""
    if not args:
        raise ValueError("delta needs at least one argument")
    if var not in ("x", "y"):
        raise ValueError(f"unknown generator {var!r}")
    polys = [as_polynomial(a) for a in args]
    target = as_polynomial(target)
    r = len(polys)
    full = (1 << r) - 1
    out = Polynomial()
    for ms, c in _monomial_args(polys):
        for m, k in target.items():
            vdeg = m.xdeg if var == "x" else m.ydeg
            if vdeg < r:
                continue
            out = out + _delta_monomial(m, ms, full, var).scale(c * k)
    return out


def delta_repeated(alpha, r: int, target, var: str = "x") -> Polynomial:
    """``delta`` with ``r`` copies of ``alpha``."""
    if r < 1:
        raise ValueError("r must be at least 1")
    return delta([alpha] * r, target, var)


def binomial_term(alpha, j: int, target, var: str = "x") -> Polynomial:
    """The part of ``target(var + alpha)`` of degree ``j`` in ``alpha``.

    Identical arguments are counted once per ordering by :func:`delta`, so
    this is ``delta_repeated(alpha, j, target) / j!``.
    """
    return delta_repeated(alpha, j, target, var).scale(Fraction(1, math.factorial(j)))
