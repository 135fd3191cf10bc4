"""The free commutative magma algebra on the generators ``x`` and ``y``.

Monomials are binary trees modulo swapping the two children of any node.
Each :class:`Monomial` is built already canonical: the children of a node are
stored in the order given by :attr:`Monomial.key`, which compares total
degree first, then structure (``x < y < products``, products compared by
their children).  Two trees that differ only by child swaps therefore build
the same key and compare equal.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

from .ratlinalg import format_rational, rat

GENERATORS = ("x", "y")


class Monomial:
    __slots__ = ("left", "right", "gen", "degree", "xdeg", "key", "_hash")

    def __init__(self, left: Optional["Monomial"], right: Optional["Monomial"], gen: Optional[str]):
        self.left = left
        self.right = right
        self.gen = gen
        if gen is not None:
            self.degree = 1
            self.xdeg = 1 if gen == "x" else 0
            self.key: tuple = (1, GENERATORS.index(gen))
        else:
            self.degree = left.degree + right.degree
            self.xdeg = left.xdeg + right.xdeg
            self.key = (self.degree, 2, left.key, right.key)
        self._hash = hash(self.key)

    @staticmethod
    def leaf(gen: str) -> "Monomial":
        if gen not in GENERATORS:
            raise ValueError(f"unknown generator {gen!r}")
        return _LEAVES[gen]

    @staticmethod
    def product(a: "Monomial", b: "Monomial") -> "Monomial":
        if b.key < a.key:
            a, b = b, a
        return Monomial(a, b, None)

    @property
    def is_leaf(self) -> bool:
        return self.gen is not None

    @property
    def ydeg(self) -> int:
        return self.degree - self.xdeg

    def children(self) -> Tuple["Monomial", "Monomial"]:
        if self.gen is not None:
            raise ValueError("a generator has no children")
        return self.left, self.right

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._hash == other._hash and self.key == other.key

    def __lt__(self, other: "Monomial") -> bool:
        return self.key < other.key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Monomial({render_monomial(self)!r})"

    def __str__(self) -> str:
        return render_monomial(self)


_LEAVES = {g: Monomial(None, None, g) for g in GENERATORS}
X = _LEAVES["x"]
Y = _LEAVES["y"]


def canonicalize(tree) -> Monomial:
    """Build a Monomial from a raw nested structure.

    A raw tree is a generator name or a 2-element tuple/list of raw trees.
    Monomials are accepted unchanged.
    """
    if isinstance(tree, Monomial):
        return tree
    if isinstance(tree, str):
        return Monomial.leaf(tree)
    if isinstance(tree, (tuple, list)) and len(tree) == 2:
        return Monomial.product(canonicalize(tree[0]), canonicalize(tree[1]))
    raise ValueError(f"not a binary tree over {{x, y}}: {tree!r}")


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return Monomial.product(a, b)


@lru_cache(maxsize=None)
def principal_power(gen: Union[str, Monomial], n: int) -> Monomial:
    """Left-normed power: ``a^1 = a`` and ``a^(i+1) = a * a^i``."""
    if n < 1:
        raise ValueError("powers start at 1")
    base = Monomial.leaf(gen) if isinstance(gen, str) else gen
    out = base
    for _ in range(n - 1):
        out = Monomial.product(base, out)
    return out


def as_generator_power(m: Monomial) -> Optional[Tuple[str, int]]:
    """``(g, n)`` when ``m`` is the principal power ``g^n``, else None."""
    n = 1
    while not m.is_leaf:
        a, b = m.left, m.right
        # children are ordered, the leaf always sorts first
        if not a.is_leaf:
            return None
        if b.is_leaf:
            if a.gen != b.gen:
                return None
            return a.gen, n + 1
        if b.key[2] != a.key:
            return None
        m = b
        n += 1
    return m.gen, n


@lru_cache(maxsize=None)
def monomials_of_bidegree(xdeg: int, ydeg: int) -> Tuple[Monomial, ...]:
    """All canonical monomials with the given x- and y-degree, ascending by key.

    For ``ydeg == 0`` the counts are the Wedderburn-Etherington numbers.
    """
    if xdeg < 0 or ydeg < 0 or xdeg + ydeg == 0:
        return ()
    if xdeg + ydeg == 1:
        return (X,) if xdeg else (Y,)
    found = set()
    for i in range(xdeg + 1):
        for j in range(ydeg + 1):
            k = i + j
            if k == 0 or 2 * k > xdeg + ydeg:
                continue
            for a in monomials_of_bidegree(i, j):
                for b in monomials_of_bidegree(xdeg - i, ydeg - j):
                    found.add(Monomial.product(a, b))
    return tuple(sorted(found, key=lambda m: m.key))


def monomials_of_degree(d: int) -> Tuple[Monomial, ...]:
    out = []
    for yd in range(d + 1):
        out.extend(monomials_of_bidegree(d - yd, yd))
    return tuple(sorted(out, key=lambda m: m.key))


def pure_x_monomials(d: int) -> Tuple[Monomial, ...]:
    return monomials_of_bidegree(d, 0)


class Polynomial(dict):
    """Finite rational combination of monomials; zero coefficients are never stored."""

    def __init__(self, data=None):
        super().__init__()
        if data is None:
            return
        items = data.items() if isinstance(data, dict) else data
        for m, c in items:
            self.add_term(m, c)

    @classmethod
    def monomial(cls, m, coeff=1) -> "Polynomial":
        return cls([(canonicalize(m), rat(coeff))])

    def add_term(self, m: Monomial, c) -> None:
        c = rat(c)
        if not c:
            return
        nv = self.get(m, 0) + c
        if nv:
            self[m] = nv
        else:
            del self[m]

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = Polynomial(self)
        for m, c in other.items():
            out.add_term(m, c)
        return out

    def __neg__(self) -> "Polynomial":
        return Polynomial((m, -c) for m, c in self.items())

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, k) -> "Polynomial":
        k = rat(k)
        return Polynomial((m, c * k) for m, c in self.items())

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def degrees(self) -> set:
        return {m.degree for m in self}

    def is_y_linear(self) -> bool:
        return all(m.ydeg == 1 for m in self)

    def __repr__(self) -> str:
        return f"Polynomial({render(self)!r})"

    def __str__(self) -> str:
        return render(self)


def multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    out = Polynomial()
    for a, ca in p.items():
        for b, cb in q.items():
            out.add_term(Monomial.product(a, b), ca * cb)
    return out


def as_polynomial(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, str):
        return parse(value)
    return Polynomial.monomial(value)


# ---------------------------------------------------------------- rendering


def principal_base(m: Monomial) -> Optional[Tuple[Monomial, int]]:
    """``(a, n)`` with ``m = a^n`` (principal power, ``n >= 2``) for the smallest such ``a``."""
    if m.is_leaf:
        return None
    for a, rest in ((m.left, m.right), (m.right, m.left)):
        if rest == a:
            return a, 2
        inner = principal_base(rest)
        if inner is not None and inner[0] == a:
            return a, inner[1] + 1
    return None


def _atomic(m: Monomial) -> bool:
    return m.is_leaf or as_generator_power(m) is not None


def _factor_text(m: Monomial) -> str:
    if _atomic(m):
        return render_monomial(m)
    pw = principal_base(m)
    if pw is not None:
        return render_monomial(m)
    return "(" + render_monomial(m) + ")"


def render_monomial(m: Monomial) -> str:
    if m.is_leaf:
        return m.gen
    pw = as_generator_power(m)
    if pw is not None:
        return f"{pw[0]}^{pw[1]}"
    pb = principal_base(m)
    if pb is not None:
        return f"({render_monomial(pb[0])})^{pb[1]}"
    return _factor_text(m.left) + _factor_text(m.right)


def render(p: Polynomial) -> str:
    """Deterministic text form; terms by descending monomial order."""
    if not p:
        return "0"
    parts = []
    for m in sorted(p, key=lambda m: m.key, reverse=True):
        c = p[m]
        body = render_monomial(m)
        mag = abs(c)
        text = body if mag == 1 else f"{format_rational(mag)}{body}"
        if not parts:
            parts.append(("-" if c < 0 else "") + text)
        else:
            parts.append((" - " if c < 0 else " + ") + text)
    return "".join(parts)


# ------------------------------------------------------------------ parsing


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


class _Parser:
    """Recursive descent over the grammar

        expr     := ['+'|'-'] term (('+'|'-') term)*
        term     := [coeff] monomial | '0'
        monomial := factor [factor]
        factor   := ('x' | 'y' | '(' monomial ')') ['^' integer]
        coeff    := integer ['/' integer]

    ``g^n`` is the principal power, so ``x^2y^2`` is ``(x^2)(y^2)`` and
    ``(xy)^2`` is ``(xy)(xy)``.  A product has at most two factors.
    """

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise ParseError(message, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def expr(self) -> Polynomial:
        out = Polynomial()
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        while True:
            coeff, mono = self.term()
            if mono is not None:
                out.add_term(mono, sign * coeff)
            nxt = self.peek()
            if nxt == "":
                return out
            if nxt == ")":
                self.error("unbalanced parentheses")
            if nxt not in "+-":
                self.error("unexpected character")
            sign = -1 if nxt == "-" else 1
            self.pos += 1

    def term(self):
        coeff = Fraction(1)
        if self.peek().isdigit():
            num = self.integer()
            den = 1
            if self.peek() == "/":
                self.pos += 1
                den = self.integer()
                if den == 0:
                    self.error("zero denominator")
            coeff = Fraction(num, den)
            if self.peek() in ("", "+", "-") and num == 0:
                return coeff, None
            if self.peek() not in ("x", "y", "("):
                self.error("a coefficient must be followed by a monomial")
        return coeff, self.monomial()

    def monomial(self) -> Monomial:
        first = self.factor()
        if self.peek() not in ("x", "y", "("):
            return first
        second = self.factor()
        if self.peek() in ("x", "y", "("):
            self.error("a product has exactly two factors; group with parentheses")
        return Monomial.product(first, second)

    def factor(self):
        ch = self.peek()
        if ch in ("x", "y"):
            self.pos += 1
            base = Monomial.leaf(ch)
        elif ch == "(":
            self.pos += 1
            base = self.monomial()
            if self.peek() != ")":
                self.error("unbalanced parentheses")
            self.pos += 1
        elif ch == ")":
            self.error("unbalanced parentheses")
        else:
            self.error("expected x, y or '('")
        if self.peek() == "^":
            self.pos += 1
            n = self.integer()
            if n < 1:
                self.error("exponent must be positive")
            base = principal_power(base, n)
        return base


def parse(text: str) -> Polynomial:
    p = _Parser(text)
    if p.peek() == "":
        p.error("empty expression")
    out = p.expr()
    return out


def parse_monomial(text: str) -> Monomial:
    p = parse(text)
    if len(p) != 1 or next(iter(p.values())) != 1:
        raise ValueError(f"{text!r} is not a single monomial")
    return next(iter(p))


def substitute_x(p: Polynomial, value: Polynomial) -> Polynomial:
    """Replace every leaf ``x`` of ``p`` by ``value``."""
    cache: Dict[Monomial, Polynomial] = {}

    def walk(m: Monomial) -> Polynomial:
        if m in cache:
            return cache[m]
        if m.is_leaf:
            out = value if m.gen == "x" else Polynomial.monomial(m)
        else:
            out = multiply(walk(m.left), walk(m.right))
        cache[m] = out
        return out

    out = Polynomial()
    for m, c in p.items():
        out = out + walk(m).scale(c)
    return out


def raw_trees(m: Monomial) -> Iterator:
    """Every raw tree (nested tuples) whose canonical form is ``m``."""
    if m.is_leaf:
        yield m.gen
        return
    for a, b in itertools.product(list(raw_trees(m.left)), list(raw_trees(m.right))):
        yield (a, b)
        yield (b, a)
