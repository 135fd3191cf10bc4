"""Published operator identities the engine re-derives.

Tables are kept in their printed layout, one pivot word per row with the
coefficients of the tail words listed under ``columns``; a row reads
``pivot = sum(coeff * column)``.  Equations are ``"lhs = rhs"`` strings in
the word syntax of :mod:`nilalg.opalgebra` (``T3..T6`` are the
multiplications by ``x^3``, ``x^2x^2``, ``x(x^2x^2)``, ``x(x(x^2x^2))``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .opalgebra import OpPoly, parse_oppoly, parse_word, parse_equation


@dataclass(frozen=True)
class IdentityTable:
    name: str
    columns: Tuple[str, ...]
    rows: Tuple[Tuple[str, Tuple[str, ...]], ...]

    def equations(self) -> List[Tuple[str, OpPoly]]:
        """``(label, pivot - tail)`` for every row."""
        out = []
        for pivot, coeffs in self.rows:
            if len(coeffs) != len(self.columns):
                raise ValueError(f"{self.name}: row {pivot} has {len(coeffs)} entries")
            poly = OpPoly.word(parse_word(pivot))
            for col, c in zip(self.columns, coeffs):
                poly = poly - OpPoly.word(parse_word(col), c)
            out.append((f"{pivot} = " + render_tail(self.columns, coeffs), poly))
        return out


def render_tail(columns: Sequence[str], coeffs: Sequence[str]) -> str:
    tail = OpPoly()
    for col, c in zip(columns, coeffs):
        tail = tail + OpPoly.word(parse_word(col), c)
    return str(tail)


def _table(name: str, columns: str, rows: str) -> IdentityTable:
    cols = tuple(columns.split())
    parsed = []
    for line in rows.strip().splitlines():
        head, *rest = line.split()
        parsed.append((head, tuple(rest)))
    return IdentityTable(name, cols, tuple(parsed))


NIL4_DEG5 = _table(
    "nil4 degree 5",
    "ULU LU^2 UL^3 LUL^2 L^2UL L^3U L^5",
    """
    U^2L  0 -1 2 0 0 -2 -8
    """,
)

NIL4_DEG6 = _table(
    "nil4 degree 6",
    "UL^2U (LU)^2 L^2U^2 UL^4 LUL^3 L^2UL^2 L^3UL L^4U L^6",
    """
    U^3     -2 -2 2 -8 -8 0 -4 8 40
    (UL)^2  -1 -1 1 -4 -2 2  0 4 24
    """,
)

NIL4_DEG7 = _table(
    "nil4 degree 7",
    "UL^2UL UL^3U LUL^2U L(LU)^2 LUL^4 L^2UL^3 L^3UL^2 L^4UL L^5U L^7",
    """
    L^3U^2  0  0  0  0  0   0   -2  -1   -5  -20
    UL^5    0  0  0  0 -1  1/2   0  3/4 3/4   8
    ULU^2   2 -2 -2 -2 -8  -2    0  -3    1   0
    """,
)

NIL4_DEG8 = _table(
    "nil4 degree 8",
    "UL^4U LUL^2UL LUL^3U L^2UL^2U L^2UL^4 L^4UL^2 L^5UL L^6U L^8",
    """
    L^3ULU     0  0  0  0   0  -1/2   -2  -11/2  -20
    UL^2U^2   -4 -2 -2  0   2  -5/2   13  31/2    32
    (UL^2)^2   0  1  0 -1 -12 -11/4 -7/2  25/4    36
    UL^3UL    -1 -1 -1  0  -4 -11/2   -3   9/2     0
    L^3UL^3    0  0  0  0   0  -3/4 -3/2  -3/4    -8
    """,
)

NIL4_DEG9 = _table(
    "nil4 degree 9",
    "LUL^4U (L^2U)^2L L^7U L^9",
    """
    L^6UL       0 0 -7 -48
    L(L^2U)^2   0 0 -217 -4510/3
    UL^4UL      1 0 -587/2 -6155/3
    L^2UL^3U    0 0 29/3 422/9
    UL^2ULU     0 0 1318/3 27988/9
    L^5UL^2     0 0 -23 -496/3
    """,
)

NIL4_TABLES = (NIL4_DEG5, NIL4_DEG6, NIL4_DEG7, NIL4_DEG8, NIL4_DEG9)

B5_DEG5 = _table(
    "nil4-b5 degree 5",
    "ULU LUL^2 L^3U L^5",
    """
    UUL    0  2  0  0
    LUU    0 -2 -2 -4
    L^2UL  0  0 -1 -4
    UL^3   0  0  0  2
    """,
)

B5_DEG6 = _table(
    "nil4-b5 degree 6",
    "ULLU L^4U L^6",
    """
    UUU     -2  4  8
    UULL     0  0  4
    ULUL    -1  2  4
    LUUL     0  2  0
    LULU     0  0  4
    LLUU     0 -4 -4
    UL^4     0  0  2
    LUL^3    0  0  2
    L^2UL^2  0  1  0
    L^3UL    0 -1 -4
    """,
)

B5_TABLES = (B5_DEG5, B5_DEG6)

# Multiplication by x^3, x^2x^2, x(x^2x^2), x(x(x^2x^2)) over L and U.
NIL4_LETTERS = (
    ("3", "T3 = -LU - 2L^3"),
    ("4", "T4 = -U^2 - 2UL^2 - 2LUL + 4L^4"),
    ("5", "T5 = -LU^2 - 2LUL^2 - 2L^2UL - 4L^3U - 12L^5"),
    ("6", "T6 = 2L^2U^2 + 4L^2UL^2 + 4L^4U + 8L^6"),
)

NIL4_DERIVED = (
    ("deg7.a", "L^3U^2 = -2L^3UL^2 - L^4UL - 5L^5U - 20L^7"),
    ("deg7.b", "ULU^2 = 2UL^2UL - 2UL^3U - 2LUL^2U - 2L^2ULU + 4UL^5 - 4LUL^4 - 4L^2UL^3 - 6L^4UL - 2L^5U - 32L^7"),
    ("deg7.c", "UL^5 = -LUL^4 + 1/2 L^2UL^3 + 3/4 L^4UL + 3/4 L^5U + 8L^7"),
    ("deg7.d", "ULU^2 = 2UL^2UL - 2UL^3U - 2LUL^2U - 2L^2ULU - 8LUL^4 - 2L^2UL^3 - 3L^4UL + L^5U"),
)

# Steps towards L^10 = 0; all of degree 10 and obtainable from lower rows alone.
NIL4_DEG10_STEPS = (
    ("deg10.a", "L^7UL = -7L^8U - 48L^10"),
    ("deg10.b", "L^6UL^2 = 49L^8U + 288L^10"),
    ("deg10.c", "L^6UL^2 = -23L^8U - 496/3 L^10"),
    ("deg10.d", "27L^8U + 170L^10 = 0"),
    ("deg10.e", "L^5UL^3 = 161L^8U + 2816/3 L^10"),
    ("deg10.f", "L^5UL^3 = -27L^8U - 152L^10"),
    ("deg10.g", "141L^8U + 818L^10 = 0"),
    ("deg10.h", "L^3UL^3U = 29/3 L^8U + 422/9 L^10"),
    ("deg10.i", "L^3UL^3U = 1003L^8U + 3281/2 L^10"),
    ("deg10.j", "17880L^8U + 28685L^10 = 0"),
    ("deg10.k", "L^8U = 0"),
    ("deg10.l", "L^10 = 0"),
    ("deg10.m", "L^2UL^4U = 0"),
)

# the three linear relations between L^8U and L^10 obtained on the way
NIL4_DEG10_SYSTEM = ((27, 170), (141, 818), (17880, 28685))

B5_EQUATIONS = (
    ("x2x2", "T4 = -4LUL"),
    ("UU", "UU = -2ULL + 2LUL + 4L^4"),
    ("T5", "T5 = 0"),
    ("UL3", "UL^3 = 2L^5"),
    ("L2UL", "L^2UL = -L^3U - 4L^5"),
    ("ULUL.a", "(UL)^2 = -UL^2U - (LU)^2 + 2L^3UL + 4L^4U + 16L^6"),
    ("ULUL.b", "(UL)^2 + UL^2U + 2L^3UL + 4L^6 = 0"),
    ("LULU", "(LU)^2 = 4L^6"),
    ("ULUL.c", "(UL)^2 = -UL^2U + 2L^4U + 4L^6"),
    ("L7", "L^7 = 0"),
    ("LUL2U", "LUL^2U = 2L^5U"),
    ("L5U", "L^5U = 0"),
)

# Spanning set of the operator algebra under x^4 = x(x^2x^2) = 0.
B5_SPANNING_WORDS = tuple(
    "L U L^2 UL LU L^3 UL^2 LUL L^2U L^4 ULU LUL^2 L^3U L^5 UL^2U L^4U L^6".split()
)

B6_EQUATIONS = (
    ("T6", "T6 = 0"),
    ("T5", "T5 + LT4 + 4L^2UL = 0"),
    ("LUU", "LUU = -2LUL^2 - 2L^3U - 4L^5"),
    ("LUL3", "LUL^3 = -1/2 L^2UL^2 - 1/2 L^3UL"),
    ("L4UL", "L^4UL = -3L^5U - 16L^7"),
    ("L2ULU", "L^2ULU = -L^3UL^2 + 5L^5U + 28L^7"),
    ("UL4U", "UL^4U = -1/2 L^2UL^2U + 24L^6U + 62L^8"),
    ("L2UL2U", "L^2UL^2U = 48L^6U + 156L^8"),
    ("L6U", "L^6U = -2L^8"),
    ("L7U.a", "L^7U = -2L^9"),
    ("L9", "L^9 = 0"),
    ("L7U", "L^7U = 0"),
    ("L2UL2UL", "L^2UL^2UL = 0"),
    ("LUL4U", "LUL^4U = 0"),
)


def equation(text: str) -> OpPoly:
    return parse_equation(text)
