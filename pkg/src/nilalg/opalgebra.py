"""Words in the multiplication operators ``L = L_x`` and ``U = L_{x^2}``.

A word is stored as a string over ``"LU3456"``; the digits stand for the
auxiliary letters ``T3..T6`` (multiplication by ``x^3``, ``x^2x^2``,
``x(x^2x^2)`` and ``x(x(x^2x^2))``), which only live until they are
eliminated.  The leftmost letter is the outermost multiplication, so
``"UUL"`` applied to ``y`` is ``x^2(x^2(xy))``.

Relations are closed degree by degree with exact row reduction over all
words of one degree; there is no rewriting system and no critical pairs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from .linearize import delta
from .magma import Monomial, Polynomial, Y, multiply
from .onevar import BASIS, OneVarAlgebra, Variety, multisets_by_degree
from .magma import pure_x_monomials
from .ratlinalg import Echelon, format_rational, rat

LETTER_DEGREE = {"L": 1, "U": 2, "3": 3, "4": 4, "5": 5, "6": 6}
BASIS_LETTER = {1: "L", 2: "U", 3: "3", 4: "4", 5: "5", 6: "6"}
_LETTER_RANK = {"L": 0, "U": 1, "3": 2, "4": 3, "5": 4, "6": 5}


def word_degree(w: str) -> int:
    return sum(LETTER_DEGREE[c] for c in w)


def word_key(w: str) -> Tuple[int, Tuple[int, ...]]:
    """Sort key: x-degree, then left-to-right lexicographic with ``U > L``."""
    return word_degree(w), tuple(_LETTER_RANK[c] for c in w)


def word_order(w1: str, w2: str) -> int:
    """-1, 0 or 1 as ``w1`` is below, equal to or above ``w2``."""
    k1, k2 = word_key(w1), word_key(w2)
    return (k1 > k2) - (k1 < k2)


def display_key(w: str):
    # the layout of the printed tables: more U's first, then lexicographic
    return word_degree(w), -len(w), tuple(_LETTER_RANK[c] for c in w)


@lru_cache(maxsize=None)
def words_of_degree(d: int) -> Tuple[str, ...]:
    """All words over ``{L, U}`` of x-degree ``d``, descending by :func:`word_key`."""
    if d < 0:
        return ()
    if d == 0:
        return ("",)
    out = ["L" + w for w in words_of_degree(d - 1)]
    out += ["U" + w for w in words_of_degree(d - 2)]
    return tuple(sorted(out, key=word_key, reverse=True))


# ------------------------------------------------------------- text forms


class WordParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


def render_word(w: str) -> str:
    if not w:
        return "1"
    parts = []
    for m in re.finditer(r"(.)\1*", w):
        ch, n = m.group(1), len(m.group(0))
        name = ch if ch in "LU" else f"T{ch}"
        parts.append(name if n == 1 else f"{name}^{n}")
    return "".join(parts)


class _WordParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise WordParseError(message, self.text, self.pos)

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def integer(self) -> int:
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def word(self, nested: bool = False) -> str:
        out = ""
        while True:
            ch = self.peek()
            if ch in ("L", "U"):
                self.pos += 1
                item = ch
            elif ch == "T":
                self.pos += 1
                k = self.integer()
                if k not in (3, 4, 5, 6):
                    self.error("auxiliary letters are T3..T6")
                item = str(k)
            elif ch == "(":
                self.pos += 1
                item = self.word(nested=True)
                if self.peek() != ")":
                    self.error("unbalanced parentheses")
                self.pos += 1
            elif ch == "1" and not out and not nested:
                self.pos += 1
                return ""
            else:
                break
            if self.peek() == "^":
                self.pos += 1
                item = item * self.integer()
            out += item
        if not out:
            if self.peek() == ")":
                self.error("unbalanced parentheses")
            self.error("expected a word over L and U")
        return out


def parse_word(text: str) -> str:
    p = _WordParser(text)
    w = p.word()
    if p.peek() != "":
        p.error("unexpected character")
    return w


class OpPoly(dict):
    """Rational combination of words; zero coefficients are never stored."""

    def __init__(self, data=None):
        super().__init__()
        if data is None:
            return
        items = data.items() if isinstance(data, dict) else data
        for w, c in items:
            self.add_term(w, c)

    @classmethod
    def word(cls, w: str, coeff=1) -> "OpPoly":
        return cls([(w, coeff)])

    def add_term(self, w: str, c) -> None:
        c = rat(c)
        if not c:
            return
        nv = self.get(w, 0) + c
        if nv:
            self[w] = nv
        else:
            del self[w]

    def __add__(self, other: "OpPoly") -> "OpPoly":
        out = OpPoly(self)
        for w, c in other.items():
            out.add_term(w, c)
        return out

    def __neg__(self) -> "OpPoly":
        return OpPoly((w, -c) for w, c in self.items())

    def __sub__(self, other: "OpPoly") -> "OpPoly":
        return self + (-other)

    def scale(self, k) -> "OpPoly":
        k = rat(k)
        return OpPoly((w, c * k) for w, c in self.items())

    def __mul__(self, other):
        if isinstance(other, OpPoly):
            out = OpPoly()
            for a, ca in self.items():
                for b, cb in other.items():
                    out.add_term(a + b, ca * cb)
            return out
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def lift(self, left: str = "", right: str = "") -> "OpPoly":
        return OpPoly((left + w + right, c) for w, c in self.items())

    def degrees(self) -> set:
        return {word_degree(w) for w in self}

    def __repr__(self) -> str:
        return f"OpPoly({render_oppoly(self)!r})"

    def __str__(self) -> str:
        return render_oppoly(self)


def render_oppoly(p: OpPoly) -> str:
    if not p:
        return "0"
    parts = []
    for w in sorted(p, key=display_key, reverse=True):
        c = p[w]
        mag = abs(c)
        body = render_word(w)
        if mag == 1:
            text = body
        elif not w:
            text = format_rational(mag)
        else:
            text = format_rational(mag) + body
        if not parts:
            parts.append(("-" if c < 0 else "") + text)
        else:
            parts.append((" - " if c < 0 else " + ") + text)
    return "".join(parts)


_TERM = re.compile(r"\s*([+-])?\s*(\d+(?:\s*/\s*\d+)?)?\s*")


def parse_oppoly(text: str) -> OpPoly:
    """Parse ``"-LU^2 + 2UL^3 - 1/2 L^5"``; ``"0"`` is the zero polynomial."""
    text = text.strip()
    if text == "0":
        return OpPoly()
    out = OpPoly()
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        sign, coeff = m.group(1), m.group(2)
        if sign is None and not first:
            raise WordParseError("expected '+' or '-'", text, m.start())
        pos = m.end()
        wp = _WordParser(text)
        wp.pos = pos
        if wp.peek() in ("L", "U", "T", "("):
            w = wp.word()
        elif coeff is not None:
            w = ""
        else:
            raise WordParseError("expected a word", text, pos)
        pos = wp.pos
        c = Fraction(coeff.replace(" ", "")) if coeff else Fraction(1)
        out.add_term(w, -c if sign == "-" else c)
        first = False
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


def parse_equation(text: str) -> OpPoly:
    """``"lhs = rhs"`` as the single operator polynomial ``lhs - rhs``."""
    if text.count("=") != 1:
        raise ValueError(f"expected exactly one '=' in {text!r}")
    lhs, rhs = text.split("=")
    return parse_oppoly(lhs) - parse_oppoly(rhs)


# ----------------------------------------------------------- translation


def _chain(m: Monomial) -> List[Monomial]:
    """Co-factors along the path from the root of ``m`` down to ``y``."""
    out = []
    while not m.is_leaf:
        a, b = m.left, m.right
        if a.ydeg:
            a, b = b, a
        out.append(a)
        m = b
    if m != Y:
        raise ValueError("monomial is not y-linear")
    return out


def translate(f: Polynomial, onevar: OneVarAlgebra) -> OpPoly:
    """Read a y-linear polynomial as an operator polynomial applied to ``y``.

    Every co-factor on the way to ``y`` is replaced by its one-variable
    normal form, whose basis elements become the letters L, U, T3..T6.
    """
    out = OpPoly()
    for m, c in f.items():
        if m.ydeg != 1:
            raise ValueError(f"translate needs a y-linear polynomial, got degree {m.ydeg} in y")
        terms = [("", Fraction(c))]
        for q in _chain(m):
            nf = onevar.normal_form(q)
            terms = [(w + BASIS_LETTER[k], cw * v) for w, cw in terms for k, v in nf.items()]
            if not terms:
                break
        for w, cw in terms:
            out.add_term(w, cw)
    return out


def apply_to_y(p: OpPoly) -> Polynomial:
    """Expand a word polynomial back into multiplications acting on ``y``."""
    out = Polynomial()
    for w, c in p.items():
        poly = Polynomial.monomial(Y)
        for ch in reversed(w):
            poly = multiply(Polynomial.monomial(BASIS[LETTER_DEGREE[ch]]), poly)
        out = out + poly.scale(c)
    return out


# ------------------------------------------------------------ the tables


@dataclass
class NormalFormTable:
    variety: Variety
    degree: int
    words: Tuple[str, ...]
    relations: List[OpPoly]
    pivots: List[str]
    canonical: List[str]
    rules: Dict[str, OpPoly]

    def to_json(self) -> dict:
        return {
            "variety": self.variety.label,
            "degree": self.degree,
            "canonical": [render_word(w) for w in self.canonical],
            "rules": [
                {
                    "pivot": render_word(p),
                    "tail": [
                        {"word": render_word(w), "coeff": format_rational(c)}
                        for w, c in sorted(self.rules[p].items(), key=lambda t: word_key(t[0]), reverse=True)
                    ],
                }
                for p in self.pivots
            ],
        }

    def render_text(self) -> str:
        cols = sorted(self.canonical, key=display_key, reverse=True)
        head = [render_word(w) for w in cols]
        lines = [f"degree {self.degree}: {len(self.words)} words, "
                 f"{len(self.pivots)} rule{'' if len(self.pivots) == 1 else 's'}, {len(self.canonical)} canonical"]
        if not self.pivots:
            return lines[0]
        pivots = sorted(self.pivots, key=display_key, reverse=True)
        body = [[render_word(p)] + [format_rational(self.rules[p].get(w, 0)) for w in cols] for p in pivots]
        widths = [max(len(r[i]) for r in body + [[""] + head]) for i in range(len(cols) + 1)]
        lines.append("  ".join([" " * widths[0]] + [h.rjust(widths[i + 1]) for i, h in enumerate(head)]).rstrip())
        for r in body:
            lines.append("  ".join([r[0].ljust(widths[0])] + [v.rjust(widths[i + 1]) for i, v in enumerate(r[1:])]).rstrip())
        return "\n".join(lines)


class OperatorAlgebra:
    """Per-degree relation spaces of the operator algebra generated by L and U."""

    def __init__(self, variety: Variety, exhaustive: bool = False, onevar: Optional[OneVarAlgebra] = None):
        self.variety = variety
        self.exhaustive = exhaustive
        self.cap = variety.cap
        self.onevar = onevar or OneVarAlgebra(variety, exhaustive=exhaustive)
        self.letter_rules: Dict[str, OpPoly] = {}
        self._tables: Dict[int, NormalFormTable] = {}
        self._echelons: Dict[int, Echelon] = {}

    # -- relation sources ---------------------------------------------------

    def _arg_pool(self, max_deg: int) -> List[Monomial]:
        max_deg = min(max_deg, self.onevar.max_degree)
        if self.exhaustive:
            return [m for k in range(1, max_deg + 1) for m in pure_x_monomials(k)]
        return [BASIS[k] for k in sorted(BASIS) if k <= max_deg and self.onevar.survives(k)]

    def delta_instances(self, d: int) -> Iterator[Tuple[Tuple[Monomial, ...], Polynomial, Polynomial]]:
        """``(args, identity, delta([y, *args], identity))`` of x-degree ``d`` and y-degree 1."""
        y = Polynomial.monomial(Y)
        for f in self.variety.identities:
            n = max(f.degrees())
            for r in range(1, n + 1):
                total = d - (n - r)
                size = r - 1
                if total < size or (size == 0 and total != 0):
                    continue
                for args in multisets_by_degree(self._arg_pool(max(total - size + 1, 0)), size, total):
                    if size > 1 and all(a.degree == 1 for a in args):
                        continue
                    yield args, f, delta([y] + [Polynomial.monomial(a) for a in args], f, "x")

    def generate_relations(self, d: int) -> List[OpPoly]:
        """Raw relations of degree ``d`` over ``{L, U}``: new instances plus liftings."""
        self._build_through(d - 1)
        return list(self._raw_rows(d, keep=None))

    def _raw_rows(self, d: int, keep: Optional[str]) -> Iterator[OpPoly]:
        for _, _, inst in self.delta_instances(d):
            op = self.expand_letters(translate(inst, self.onevar), keep=keep)
            if op:
                yield op
        yield from self._lifted_rows(d)

    def _lifted_rows(self, d: int) -> Iterator[OpPoly]:
        for letter, k in (("L", 1), ("U", 2)):
            if d - k in self._tables:
                for rel in self._tables[d - k].relations:
                    yield rel.lift(left=letter)
                    yield rel.lift(right=letter)

    # -- letters ------------------------------------------------------------

    def expand_letters(self, p: OpPoly, keep: Optional[str] = None) -> OpPoly:
        """Substitute the eliminated auxiliary letters by their rules."""
        out = OpPoly()
        for w, c in p.items():
            if all(ch in "LU" or ch == keep for ch in w):
                out.add_term(w, c)
                continue
            acc = OpPoly.word("", c)
            for ch in w:
                if ch in "LU" or ch == keep:
                    acc = acc.lift(right=ch)
                else:
                    acc = acc * self.letter_rule(ch)
            out = out + acc
        return out

    def letter_rule(self, letter: str) -> OpPoly:
        k = LETTER_DEGREE[letter]
        if not self.onevar.survives(k):
            return OpPoly()
        self._build_through(k)
        return self.letter_rules[letter]

    def derive_letter_eliminations(self) -> Dict[str, OpPoly]:
        """Rules writing T3..T6 over ``{L, U}``, keyed by the letter digit."""
        self._build_through(min(6, self.cap))
        return {ch: self.letter_rule(ch) for ch in "3456"}

    # -- tables -------------------------------------------------------------

    def _build_through(self, d: int) -> None:
        for k in range(1, d + 1):
            if k not in self._tables:
                self._build(k)

    def _build(self, d: int) -> None:
        if d > self.cap:
            raise ValueError(f"degree {d} beyond the cap {self.cap} for {self.variety.label}")
        words = words_of_degree(d)
        letter = BASIS_LETTER.get(d) if 3 <= d <= 6 and self.onevar.survives(d) else None
        offset = 1 if letter else 0
        index = {w: i + offset for i, w in enumerate(words)}
        if letter:
            index[letter] = 0
        ech = Echelon()
        for row in self._raw_rows(d, keep=letter):
            ech.add({index[w]: c for w, c in row.items()})
        rows = ech.reduced()
        relations = []
        rules: Dict[str, OpPoly] = {}
        pivots = []
        for p, row in rows.items():
            poly = OpPoly((words[j - offset] if j >= offset else letter, c) for j, c in row.items())
            if letter and p == 0:
                self.letter_rules[letter] = -(poly - OpPoly.word(letter))
                continue
            relations.append(poly)
            pw = words[p - offset]
            pivots.append(pw)
            rules[pw] = -(poly - OpPoly.word(pw))
        if letter and letter not in self.letter_rules:
            raise ArithmeticError(f"T{letter} could not be eliminated in degree {d}")
        canonical = [w for w in words if w not in rules]
        self._echelons[d] = ech
        self._tables[d] = NormalFormTable(self.variety, d, words, relations, pivots, canonical, rules)

    def table(self, d: int) -> NormalFormTable:
        if not 1 <= d <= self.cap:
            raise ValueError(f"degree {d} outside 1..{self.cap} for {self.variety.label}")
        self._build_through(d)
        return self._tables[d]

    def tables(self, max_degree: Optional[int] = None) -> List[NormalFormTable]:
        top = self.cap if max_degree is None else max_degree
        return [self.table(d) for d in range(1, top + 1)]

    # -- reduction ----------------------------------------------------------

    def reduce(self, p: OpPoly) -> OpPoly:
        """Canonical representative of ``p`` over the canonical words."""
        if isinstance(p, str):
            p = parse_oppoly(p)
        p = self.expand_letters(p)
        out = OpPoly()
        for w, c in p.items():
            d = word_degree(w)
            if d == 0:
                out.add_term(w, c)
                continue
            tail = self.table(d).rules.get(w)
            if tail is None:
                out.add_term(w, c)
            else:
                out = out + tail.scale(c)
        return out

    def in_relation_space(self, p: OpPoly) -> bool:
        return not self.reduce(p)

    def lifted_space_contains(self, p: OpPoly) -> bool:
        """Membership in the span of liftings of lower-degree relations only."""
        p = self.expand_letters(p)
        for d in sorted(p.degrees()):
            part = OpPoly((w, c) for w, c in p.items() if word_degree(w) == d)
            self._build_through(d - 1)
            index = {w: i for i, w in enumerate(words_of_degree(d))}
            ech = Echelon()
            for row in self._lifted_rows(d):
                ech.add({index[w]: c for w, c in row.items()})
            if not ech.contains({index[w]: c for w, c in part.items()}):
                return False
        return True

    def quotient_dimensions(self, max_degree: Optional[int] = None) -> List[int]:
        return [len(t.canonical) for t in self.tables(max_degree)]

    def all_coefficients(self) -> Iterator[Fraction]:
        """Every coefficient of every stored rule and relation row."""
        for t in self._tables.values():
            for rel in t.relations:
                yield from rel.values()
        for rule in self.letter_rules.values():
            yield from rule.values()
        for d in range(1, self.onevar.max_degree + 1):
            for row in self.onevar.space(d).rows.values():
                yield from row.values()
