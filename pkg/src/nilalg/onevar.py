"""The one-generated quotient: pure-x monomials modulo a variety's identities.

For each degree the consequence space is the span of

* linearizations of each defining identity with pure-x arguments, and
* products ``m * c`` of a monomial ``m`` with a lower-degree consequence ``c``.

Arguments default to the basis representatives ``b1..b6``; multilinearity
of the linearization makes any other choice of arguments redundant.
"""

from __future__ import annotations

import enum
import itertools
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .linearize import delta
from .magma import Monomial, Polynomial, X, multiply, parse_monomial, principal_power, pure_x_monomials, render, render_monomial
from .ratlinalg import Echelon
from .reports import VerificationReport

MAX_DEGREE = 12

BASIS_TEXT = {
    1: "x",
    2: "x^2",
    3: "x^3",
    4: "(x^2)(x^2)",
    5: "x((x^2)(x^2))",
    6: "x(x((x^2)(x^2)))",
}
BASIS: Dict[int, Monomial] = {k: parse_monomial(t) for k, t in BASIS_TEXT.items()}


class Variety(enum.Enum):
    NIL4 = "nil4"
    NIL4_B5 = "nil4-b5"
    NIL4_B6 = "nil4-b6"

    @property
    def identities(self) -> Tuple[Polynomial, ...]:
        base = (Polynomial.monomial(principal_power("x", 4)),)
        if self is Variety.NIL4_B5:
            return base + (Polynomial.monomial(BASIS[5]),)
        if self is Variety.NIL4_B6:
            return base + (Polynomial.monomial(BASIS[6]),)
        return base

    @property
    def cap(self) -> int:
        """Largest operator degree the engine builds for this variety."""
        return {Variety.NIL4: 12, Variety.NIL4_B5: 8, Variety.NIL4_B6: 10}[self]

    @property
    def label(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> "Variety":
        key = text.strip().lower().replace("_", "-")
        for v in cls:
            if v.value == key:
                return v
        raise ValueError(f"unknown variety {text!r}; expected one of nil4, nil4-b5, nil4-b6")


def multisets_by_degree(pool: Sequence[Monomial], size: int, total: int) -> Iterator[Tuple[Monomial, ...]]:
    """Multisets (as sorted tuples) of ``size`` elements of ``pool`` whose degrees sum to ``total``."""
    pool = sorted(pool, key=lambda m: m.key)

    def rec(start: int, size: int, total: int):
        if size == 0:
            if total == 0:
                yield ()
            return
        for i in range(start, len(pool)):
            m = pool[i]
            if m.degree * size > total:
                continue
            for rest in rec(i, size - 1, total - m.degree):
                yield (m,) + rest

    yield from rec(0, size, total)


class OneVarAlgebra:
    """Consequence spaces and normal forms for pure-x monomials of one variety."""

    def __init__(self, variety: Variety, exhaustive: bool = False, max_degree: int = MAX_DEGREE):
        if not 1 <= max_degree <= MAX_DEGREE:
            raise ValueError(f"max_degree must lie in 1..{MAX_DEGREE}")
        self.variety = variety
        self.exhaustive = exhaustive
        self.max_degree = max_degree
        self._columns: Dict[int, List[Monomial]] = {}
        self._index: Dict[int, Dict[Monomial, int]] = {}
        self._spaces: Dict[int, Echelon] = {}
        self._nf: Dict[Monomial, Dict[int, Fraction]] = {}
        self.anomalies: List[str] = []

    # -- construction -------------------------------------------------------

    def _check_degree(self, d: int) -> None:
        if not 1 <= d <= self.max_degree:
            raise ValueError(f"degree {d} outside the supported range 1..{self.max_degree}")

    def columns(self, d: int) -> List[Monomial]:
        """Degree-``d`` monomials, most eliminable first; the basis element last."""
        if d not in self._columns:
            mons = sorted(pure_x_monomials(d), key=lambda m: m.key, reverse=True)
            rep = BASIS.get(d)
            if rep is not None:
                mons.remove(rep)
                mons.append(rep)
            self._columns[d] = mons
            self._index[d] = {m: i for i, m in enumerate(mons)}
        return self._columns[d]

    def _vector(self, p: Polynomial, d: int) -> Dict[int, Fraction]:
        idx = self._index[d]
        return {idx[m]: c for m, c in p.items()}

    def _arg_pool(self, max_deg: int) -> List[Monomial]:
        if self.exhaustive:
            return [m for k in range(1, max_deg + 1) for m in pure_x_monomials(k)]
        return [BASIS[k] for k in sorted(BASIS) if k <= max_deg and self.survives(k)]

    def identity_instances(self, d: int) -> Iterator[Polynomial]:
        """Linearizations of the defining identities landing in degree ``d``."""
        for f in self.variety.identities:
            n = max(f.degrees())
            if n == d:
                yield f
            for r in range(1, n + 1):
                arg_total = d - (n - r)
                if arg_total < r:
                    continue
                for args in multisets_by_degree(self._arg_pool(arg_total - r + 1), r, arg_total):
                    if all(a == X for a in args):
                        continue
                    yield delta([Polynomial.monomial(a) for a in args], f, "x")

    def space(self, d: int) -> Echelon:
        self._check_degree(d)
        if d in self._spaces:
            return self._spaces[d]
        for k in range(1, d):
            self.space(k)
        cols = self.columns(d)
        ech = Echelon()
        for inst in self.identity_instances(d):
            ech.add(self._vector(inst, d))
        for k in range(1, d):
            lower = self._spaces[d - k]
            lower_cols = self._columns[d - k]
            for row in lower.rows.values():
                c = Polynomial((lower_cols[j], v) for j, v in row.items())
                for m in pure_x_monomials(k):
                    ech.add(self._vector(multiply(Polynomial.monomial(m), c), d))
        self._spaces[d] = ech
        free = [cols[j] for j in range(len(cols)) if j not in ech.rows]
        expected = [BASIS[d]] if d in BASIS else []
        if any(m not in expected for m in free):
            self.anomalies.append(
                f"degree {d}: quotient spanned by {[render_monomial(m) for m in free]}, "
                f"expected at most {[render_monomial(m) for m in expected]}"
            )
        return ech

    # -- queries ------------------------------------------------------------

    def survives(self, k: int) -> bool:
        """Whether the basis element ``b_k`` is nonzero in the quotient."""
        if k not in BASIS:
            return False
        ech = self.space(k)
        return self._index[k][BASIS[k]] not in ech.rows

    def quotient_dimension(self, d: int) -> int:
        ech = self.space(d)
        return len(self._columns[d]) - len(ech)

    def consequence_basis(self, d: int) -> List[Polynomial]:
        ech = self.space(d)
        cols = self._columns[d]
        return [Polynomial((cols[j], v) for j, v in row.items()) for _, row in sorted(ech.rows.items())]

    def is_consequence(self, p: Polynomial) -> bool:
        for d in sorted(p.degrees()):
            part = Polynomial((m, c) for m, c in p.items() if m.degree == d)
            if any(m.ydeg for m in part):
                raise ValueError("only pure-x polynomials live in the one-variable quotient")
            if not self.space(d).contains(self._vector(part, d)):
                return False
        return True

    def normal_form(self, m: Monomial) -> Dict[int, Fraction]:
        """Coordinates of ``m`` over the basis ``b1..b6`` (empty means zero)."""
        if m.ydeg:
            raise ValueError(f"{render_monomial(m)} is not a pure-x monomial")
        hit = self._nf.get(m)
        if hit is not None:
            return hit
        d = m.degree
        ech = self.space(d)
        res = ech.residual({self._index[d][m]: Fraction(1)})
        out: Dict[int, Fraction] = {}
        cols = self._columns[d]
        for j, c in res.items():
            if cols[j] != BASIS.get(d):
                raise ArithmeticError(
                    f"{render_monomial(m)} has no normal form over b1..b6: "
                    f"{render_monomial(cols[j])} survives in degree {d}"
                )
            out[d] = c
        self._nf[m] = out
        return out

    def normal_form_poly(self, p: Polynomial) -> Polynomial:
        out = Polynomial()
        for m, c in p.items():
            for k, v in self.normal_form(m).items():
                out.add_term(BASIS[k], c * v)
        return out

    def dimensions(self, max_degree: Optional[int] = None) -> List[int]:
        top = self.max_degree if max_degree is None else max_degree
        return [self.quotient_dimension(d) for d in range(1, top + 1)]

    def table_json(self, max_degree: Optional[int] = None) -> List[dict]:
        from .ratlinalg import format_rational

        top = self.max_degree if max_degree is None else max_degree
        out = []
        for d in range(1, top + 1):
            for m in sorted(pure_x_monomials(d), key=lambda m: m.key):
                nf = self.normal_form(m)
                out.append({
                    "degree": d,
                    "monomial": render_monomial(m),
                    "normal_form": [{"basis": f"b{k}", "coeff": format_rational(v)} for k, v in sorted(nf.items())],
                })
        return out


def verify_element_facts(variety: Variety = Variety.NIL4, algebra: Optional[OneVarAlgebra] = None) -> VerificationReport:
    """Element-level facts of the one-generated quotient of ``x^4 = 0``."""
    if variety is not Variety.NIL4:
        raise ValueError("the element checks are stated for nil4")
    alg = algebra or OneVarAlgebra(variety)
    rep = VerificationReport(variety.label)

    def member(cid: str, text: str, poly: Polynomial) -> None:
        ok = alg.is_consequence(poly)
        rep.add(cid, text, ok, None if ok else f"not a consequence: {render(poly)}")

    b5, b6 = BASIS[5], BASIS[6]
    x2 = principal_power("x", 2)
    x3 = principal_power("x", 3)
    member("x2x3", "x^2 x^3 = -x(x^2 x^2)",
           Polynomial([(Monomial.product(x2, x3), 1), (b5, 1)]))
    member("x3x3", "x^3 x^3 = x(x(x^2 x^2))",
           Polynomial([(Monomial.product(x3, x3), 1), (b6, -1)]))
    member("x2cubed", "(x^2)^3 = x(x(x^2 x^2))",
           Polynomial([(principal_power(x2, 3), 1), (b6, -1)]))
    for d in range(7, alg.max_degree + 1):
        mons = pure_x_monomials(d)
        dead = [m for m in mons if not alg.normal_form(m)]
        ok = len(dead) == len(mons)
        survivor = next((m for m in mons if alg.normal_form(m)), None)
        rep.add(f"vanish.deg{d}", f"all {len(mons)} monomials of degree {d} vanish", ok,
                None if ok else f"{render_monomial(survivor)} survives")
    dims = alg.dimensions()
    rep.dims = dims
    ok = dims[:6] == [1] * 6 and all(v == 0 for v in dims[6:])
    rep.add("index7", "every product of at least 7 factors x vanishes", ok, None if ok else f"dims {dims}")
    for a in alg.anomalies:
        rep.add("quotient", "quotient larger than the basis b1..b6", False, a)
    return rep
