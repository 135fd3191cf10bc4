"""Verification of the nilpotency bounds for the three varieties.

Published rows and equations are checked as members of the computed
relation spaces (so the engine's own choice of pivots never matters), and
the bounds as the vanishing of every word of the relevant degrees.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Optional, Sequence

from . import identities as ids
from .onevar import Variety, verify_element_facts
from .opalgebra import (
    OpPoly,
    OperatorAlgebra,
    parse_equation,
    parse_oppoly,
    parse_word,
    render_word,
    word_degree,
    words_of_degree,
)
from .ratlinalg import RatMatrix, denominator_primes, rref
from .reports import VerificationReport

ALLOWED_PRIMES = {
    Variety.NIL4: {2, 3},
    Variety.NIL4_B5: {2, 3},
    Variety.NIL4_B6: {2, 3, 5},
}

# first degree from which every word vanishes, per variety
NILPOTENCY_DEGREE = {Variety.NIL4: 10, Variety.NIL4_B5: 7, Variety.NIL4_B6: 9}


@lru_cache(maxsize=None)
def algebra(variety: Variety, exhaustive: bool = False) -> OperatorAlgebra:
    """Shared, lazily built table stack for one variety."""
    return OperatorAlgebra(variety, exhaustive=exhaustive)


def quotient_dimensions(variety: Variety, max_degree: int, exhaustive: bool = False) -> List[int]:
    if not 1 <= max_degree <= 12:
        raise ValueError("max_degree must lie in 1..12")
    return algebra(variety, exhaustive).quotient_dimensions(max_degree)


def denominator_audit(variety: Variety, exhaustive: bool = False) -> set:
    """Primes dividing a denominator anywhere in the variety's built tables."""
    alg = algebra(variety, exhaustive)
    alg.tables()
    return denominator_primes(alg.all_coefficients())


def _check_zero(rep: VerificationReport, alg: OperatorAlgebra, cid: str, text: str, poly: OpPoly) -> None:
    red = alg.reduce(poly)
    rep.add(cid, text, not red, None if not red else f"residue {red}")


def _check_equations(rep: VerificationReport, alg: OperatorAlgebra, prefix: str, eqs) -> None:
    for cid, text in eqs:
        _check_zero(rep, alg, f"{prefix}.{cid}", text, parse_equation(text))


def _check_tables(rep: VerificationReport, alg: OperatorAlgebra, tables) -> None:
    for table in tables:
        for label, poly in table.equations():
            pivot = label.split(" =")[0]
            _check_zero(rep, alg, f"table.{table.name.replace(' ', '_')}.{pivot}", label, poly)


def _check_vanishing(rep: VerificationReport, alg: OperatorAlgebra, degrees: Sequence[int]) -> None:
    for d in degrees:
        words = words_of_degree(d)
        alive = [w for w in words if alg.reduce(OpPoly.word(w))]
        rep.add(f"vanish.deg{d}", f"all {len(words)} words of degree {d} reduce to 0",
                not alive, None if not alive else f"{render_word(alive[0])} -> {alg.reduce(OpPoly.word(alive[0]))}")


def _check_primes(rep: VerificationReport, variety: Variety) -> None:
    primes = denominator_audit(variety)
    allowed = ALLOWED_PRIMES[variety]
    rep.denominator_primes = sorted(primes)
    bad = sorted(primes - allowed)
    rep.add("denominators", f"denominator primes within {sorted(allowed)}", not bad,
            None if not bad else f"unexpected primes {bad}")


def _tightness(rep: VerificationReport, alg: OperatorAlgebra, variety: Variety) -> None:
    d = NILPOTENCY_DEGREE[variety] - 1
    red = alg.reduce(OpPoly.word("L" * d))
    if red:
        rep.observations.append(f"L^{d} = {red} is not in the relation space; the bound is sharp for these relations")
    else:
        rep.observations.append(f"L^{d} already reduces to 0: the relations give a stronger bound")


def verify_nil4() -> VerificationReport:
    """``x^4 = 0`` forces every operator word of x-degree at least 10 to vanish."""
    variety = Variety.NIL4
    alg = algebra(variety)
    rep = VerificationReport(variety.label)

    # element level: the one-generated quotient
    for chk in verify_element_facts(variety, alg.onevar).checks:
        rep.add(f"element.{chk.id}", chk.anchor, chk.passed, chk.witness)

    rules = alg.derive_letter_eliminations()
    for letter, text in ids.NIL4_LETTERS:
        expected = parse_oppoly(text.split("=", 1)[1])
        got = rules[letter]
        rep.add(f"letter.T{letter}", text, got == expected, None if got == expected else f"derived T{letter} = {got}")

    _check_tables(rep, alg, ids.NIL4_TABLES)
    _check_equations(rep, alg, "derived", ids.NIL4_DERIVED)

    # degree-10 steps must already follow from lifting lower-degree relations
    for cid, text in ids.NIL4_DEG10_STEPS:
        poly = parse_equation(text)
        red = alg.reduce(poly)
        lifted = alg.lifted_space_contains(poly)
        ok = not red and lifted
        witness = None
        if red:
            witness = f"residue {red}"
        elif not lifted:
            witness = "not in the span of lifted lower-degree relations"
        rep.add(f"proof.{cid}", text, ok, witness)

    red, pivots, rank = rref(RatMatrix.from_dense(ids.NIL4_DEG10_SYSTEM))
    ok = rank == 2 and pivots == [0, 1]
    rep.add("proof.system", "the three relations in (L^8U, L^10) force both to vanish", ok,
            None if ok else f"rank {rank}")

    for w in ("L^10", "L^8U", "L^2UL^4U"):
        _check_zero(rep, alg, f"zero.{w}", f"{w} = 0", OpPoly.word(parse_word(w)))
    _check_vanishing(rep, alg, (10, 11))

    rep.dims = alg.quotient_dimensions(11)
    _check_primes(rep, variety)
    _tightness(rep, alg, variety)
    return rep


def verify_nil4_b5() -> VerificationReport:
    """``x^4 = x(x^2x^2) = 0`` forces vanishing from degree 7 and a 17-word spanning set."""
    variety = Variety.NIL4_B5
    alg = algebra(variety)
    rep = VerificationReport(variety.label)

    _check_equations(rep, alg, "eq", ids.B5_EQUATIONS)
    _check_tables(rep, alg, ids.B5_TABLES)
    _check_vanishing(rep, alg, (7, 8))

    spanning = {parse_word(w) for w in ids.B5_SPANNING_WORDS}
    for d in range(1, 7):
        canon = alg.table(d).canonical
        extra = [w for w in canon if w not in spanning]
        rep.add(f"span.deg{d}", f"canonical words of degree {d} lie in the 17-word spanning set",
                not extra, None if not extra else "outside: " + ", ".join(render_word(w) for w in extra))
    rep.dims = alg.quotient_dimensions(8)
    bound = [sum(1 for w in spanning if word_degree(w) == d) for d in range(1, 7)]
    ok = all(a <= b for a, b in zip(rep.dims[:6], bound))
    rep.add("span.dims", f"dimensions by degree at most {tuple(bound)}", ok, None if ok else f"dims {rep.dims}")
    _check_primes(rep, variety)
    _tightness(rep, alg, variety)
    return rep


def verify_nil4_b6() -> VerificationReport:
    """``x^4 = x(x(x^2x^2)) = 0`` forces every word of degree at least 9 to vanish."""
    variety = Variety.NIL4_B6
    alg = algebra(variety)
    rep = VerificationReport(variety.label)

    _check_equations(rep, alg, "eq", ids.B6_EQUATIONS)
    _check_vanishing(rep, alg, (9, 10))
    rep.dims = alg.quotient_dimensions(10)
    _check_primes(rep, variety)
    _tightness(rep, alg, variety)
    return rep


VERIFIERS = {1: verify_nil4, 2: verify_nil4_b5, 3: verify_nil4_b6}


def verify(which) -> List[VerificationReport]:
    if which == "all":
        return [VERIFIERS[k]() for k in sorted(VERIFIERS)]
    return [VERIFIERS[int(which)]()]


def monotonicity(degrees: Sequence[int] = range(7, 12)) -> Dict[str, List[str]]:
    """Words vanishing under nil4 that survive in a subvariety (expected: none)."""
    base = algebra(Variety.NIL4)
    out: Dict[str, List[str]] = {}
    for sub in (Variety.NIL4_B5, Variety.NIL4_B6):
        alg = algebra(sub)
        bad = []
        for d in degrees:
            for w in words_of_degree(d):
                dead = not base.reduce(OpPoly.word(w))
                if dead and d <= sub.cap and alg.reduce(OpPoly.word(w)):
                    bad.append(render_word(w))
        out[sub.label] = bad
    return out
