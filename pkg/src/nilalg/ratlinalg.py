"""Exact rational arithmetic and row reduction.

Rationals are :class:`fractions.Fraction`; matrices are kept sparse as lists
of ``{column: value}`` dicts so that the relation spaces built elsewhere
never materialize their (mostly zero) dense form.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

Rational = Fraction
SparseRow = Dict[int, Fraction]

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat(value: Union[int, str, Fraction]) -> Fraction:
    """Coerce ``value`` to a Fraction; strings use the ``"p/q"`` form."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rat_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    if op not in _OPS:
        raise ValueError(f"unknown operation {op!r}")
    if op == "div" and b == 0:
        raise ZeroDivisionError("division of a rational by zero")
    return _OPS[op](rat(a), rat(b))


def format_rational(q: Fraction) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is one."""
    q = rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class RatMatrix:
    """A sparse ``rows x cols`` matrix of rationals."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Optional[List[SparseRow]] = None):
        if rows is None:
            rows = [{} for _ in range(nrows)]
        if len(rows) != nrows:
            raise ValueError(f"expected {nrows} rows, got {len(rows)}")
        for row in rows:
            for c in row:
                if not 0 <= c < ncols:
                    raise IndexError(f"column {c} outside 0..{ncols - 1}")
        self.nrows = nrows
        self.ncols = ncols
        self.rows = [{c: rat(v) for c, v in row.items() if v != 0} for row in rows]

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[Union[int, str, Fraction]]], ncols: Optional[int] = None) -> "RatMatrix":
        if ncols is None:
            ncols = len(data[0]) if data else 0
        rows = []
        for r in data:
            if len(r) != ncols:
                raise ValueError("ragged dense matrix")
            rows.append({j: rat(v) for j, v in enumerate(r) if rat(v) != 0})
        return cls(len(rows), ncols, rows)

    def to_dense(self) -> List[List[Fraction]]:
        return [[row.get(j, Fraction(0)) for j in range(self.ncols)] for row in self.rows]

    def __getitem__(self, idx: Tuple[int, int]) -> Fraction:
        i, j = idx
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(idx)
        return self.rows[i].get(j, Fraction(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.rows) == (other.nrows, other.ncols, other.rows)

    def __repr__(self) -> str:
        return f"RatMatrix({self.nrows}x{self.ncols}, {self.to_dense()!r})"


def _axpy(target: SparseRow, factor: Fraction, row: Mapping[int, Fraction]) -> None:
    """target += factor * row, dropping entries that cancel."""
    for c, v in row.items():
        nv = target.get(c, 0) + factor * v
        if nv:
            target[c] = nv
        else:
            target.pop(c, None)


class Echelon:
    """Incrementally maintained reduced row echelon basis of a subspace of ``Q^n``.

    Rows are keyed by their pivot column and normalized to a leading one.
    The leftmost nonzero column is always the pivot, so when columns are
    ordered from the most to the least preferred basis element, the pivot
    set is the greedy choice of eliminable columns.
    """

    def __init__(self) -> None:
        self.rows: Dict[int, SparseRow] = {}
        self.pivot_values: List[Fraction] = []

    def __len__(self) -> int:
        return len(self.rows)

    def residual(self, vec: Mapping[int, Fraction]) -> SparseRow:
        """Reduce ``vec`` against every stored row."""
        out = {c: rat(v) for c, v in vec.items() if v}
        for c in sorted(c for c in out if c in self.rows):
            val = out.get(c)
            if val:
                _axpy(out, -val, self.rows[c])
        return out

    def add(self, vec: Mapping[int, Fraction]) -> bool:
        """Insert ``vec``; returns False when it was already in the span."""
        res = self.residual(vec)
        if not res:
            return False
        p = min(res)
        lead = res[p]
        self.pivot_values.append(lead)
        inv = 1 / lead
        new = {c: v * inv for c, v in res.items()}
        for row in self.rows.values():
            val = row.get(p)
            if val:
                _axpy(row, -val, new)
        self.rows[p] = new
        return True

    def contains(self, vec: Mapping[int, Fraction]) -> bool:
        return not self.residual(vec)

    def reduced(self) -> Dict[int, SparseRow]:
        """The basis rows sorted by pivot column."""
        return {p: self.rows[p] for p in sorted(self.rows)}


def rref(m: RatMatrix) -> Tuple[RatMatrix, List[int], int]:
    """Reduced row echelon form of ``m`` with its pivot columns and rank.

    The reduced matrix keeps the shape of ``m``; zero rows come last.
    """
    ech = Echelon()
    for row in m.rows:
        ech.add(row)
    red = ech.reduced()
    pivots = sorted(red)
    rows = [dict(red[p]) for p in pivots]
    rows.extend({} for _ in range(m.nrows - len(rows)))
    return RatMatrix(m.nrows, m.ncols, rows), pivots, len(pivots)


def in_row_space(v: Union[Sequence, Mapping[int, Fraction]], basis: RatMatrix) -> Optional[List[Fraction]]:
    """Coefficients ``c`` with ``sum(c[i] * basis[i]) == v``, or None.

    ``v`` is either a dense sequence of length ``basis.ncols`` or a sparse
    column map.
    """
    if isinstance(v, Mapping):
        target = {c: rat(x) for c, x in v.items() if x}
        if any(not 0 <= c < basis.ncols for c in target):
            raise ValueError("vector has entries outside the matrix columns")
    else:
        if len(v) != basis.ncols:
            raise ValueError(f"vector of length {len(v)} against {basis.ncols} columns")
        target = {c: rat(x) for c, x in enumerate(v) if rat(x) != 0}

    # Track each echelon row as a combination of the original rows through
    # extra columns placed after the real ones.
    n = basis.ncols
    ech = Echelon()
    for i, row in enumerate(basis.rows):
        aug = dict(row)
        aug[n + i] = Fraction(1)
        ech.add(aug)
    res = ech.residual(target)
    if any(c < n for c in res):
        return None
    coeffs = [Fraction(0)] * basis.nrows
    # residual = target - sum(...) expressed on the tracking columns, negated
    for c, val in res.items():
        coeffs[c - n] = -val
    return coeffs


def primes_of(n: int) -> List[int]:
    """Prime divisors of a positive integer, ascending."""
    out = []
    d = 2
    n = abs(n)
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def denominator_primes(values: Iterable[Fraction]) -> set:
    primes: set = set()
    seen: set = set()
    for q in values:
        d = rat(q).denominator
        if d > 1 and d not in seen:
            seen.add(d)
            primes.update(primes_of(d))
    return primes
