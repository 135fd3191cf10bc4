"""Acceptance gate: twelve exact criteria, one PASS/FAIL line each.

Run ``pytest tests/test_acceptance.py -s`` or ``python tests/test_acceptance.py``.
"""

import random
import subprocess
import sys
from fractions import Fraction

import pytest

from nilalg import identities as ids
from nilalg.linearize import binomial_term, delta
from nilalg.magma import (
    Monomial,
    Polynomial,
    Y,
    monomials_of_bidegree,
    multiply,
    parse,
    pure_x_monomials,
    substitute_x,
)
from nilalg.onevar import Variety, verify_element_facts
from nilalg.opalgebra import OpPoly, apply_to_y, parse_equation, parse_oppoly, parse_word, translate, words_of_degree
from nilalg.ratlinalg import RatMatrix, rref
from nilalg.theorems import algebra, denominator_audit

SEED = 1729


def _all_zero(alg, polys):
    bad = [label for label, p in polys if alg.reduce(p)]
    return not bad, f"{len(polys)} identities" if not bad else f"nonzero: {bad[:3]}"


def linearization_fidelity():
    cases = [
        (["y"], "x^2(xy)", "2(xy)^2 + x^2y^2"),
        (["x^2", "y"], "x^2", "2x^2y"),
        (["y", "xy^2", "x"], "x^2", "0"),
    ]
    bad = [t for a, t, e in cases if delta([parse(s) for s in a], parse(t)) != parse(e)]
    return not bad, "3 examples" if not bad else f"mismatch on {bad}"


def _random_poly(rng, max_degree):
    p = Polynomial()
    for _ in range(rng.randint(1, 5)):
        d = rng.randint(1, max_degree)
        p.add_term(rng.choice(pure_x_monomials(d)), Fraction(rng.randint(-9, 9), rng.randint(1, 6)))
    return p


def binomial_property():
    rng = random.Random(SEED)
    n = 120
    for _ in range(n):
        p = _random_poly(rng, 6)
        rhs = p
        for j in range(1, 7):
            rhs = rhs + binomial_term(Y, j, p)
        if substitute_x(p, parse("x + y")) != rhs:
            return False, f"fails for {p}"
    return True, f"{n} random polynomials of degree <= 6"


def element_facts():
    rep = verify_element_facts(Variety.NIL4, algebra(Variety.NIL4).onevar)
    onevar = algebra(Variety.NIL4).onevar
    mons = pure_x_monomials(7) + pure_x_monomials(8)
    dead = sum(1 for m in mons if not onevar.normal_form(m))
    ok = rep.passed and dead == len(mons)
    return ok, f"{dead}/{len(mons)} monomials of degrees 7, 8 vanish"


def letter_eliminations():
    rules = algebra(Variety.NIL4).derive_letter_eliminations()
    bad = [t for k, t in ids.NIL4_LETTERS if rules[k] != parse_oppoly(t.split("=", 1)[1])]
    return not bad, "T3..T6 exact" if not bad else f"differs: {bad}"


def tables():
    rows = 0
    for variety, group in ((Variety.NIL4, ids.NIL4_TABLES), (Variety.NIL4_B5, ids.B5_TABLES)):
        alg = algebra(variety)
        for table in group:
            for label, poly in table.equations():
                rows += 1
                if alg.reduce(poly):
                    return False, f"{table.name}: {label}"
    return True, f"{rows} rows of 7 tables reduce to 0"


def derivation_waypoints():
    alg = algebra(Variety.NIL4)
    ok, detail = _all_zero(alg, [(c, parse_equation(t)) for c, t in ids.NIL4_DERIVED + ids.NIL4_DEG10_STEPS])
    if not ok:
        return ok, detail
    # homogeneous system in (L^8U, L^10): full column rank forces (0, 0)
    red, pivots, rank = rref(RatMatrix.from_dense(ids.NIL4_DEG10_SYSTEM))
    solved = rank == 2 and red.to_dense()[:2] == [[1, 0], [0, 1]]
    return solved, f"{detail}; system rank {rank}"


def nil4_vanishing():
    alg = algebra(Variety.NIL4)
    counted = 0
    for d, expected in ((10, 89), (11, 144)):
        ws = words_of_degree(d)
        if len(ws) != expected or any(alg.reduce(OpPoly.word(w)) for w in ws):
            return False, f"degree {d}"
        counted += len(ws)
    special = all(not alg.reduce(OpPoly.word(parse_word(w))) for w in ("L^10", "L^8U", "L^2UL^4U"))
    return special, f"{counted} words of degrees 10, 11 vanish"


def nil4_b5_vanishing():
    alg = algebra(Variety.NIL4_B5)
    ok, detail = _all_zero(alg, [(c, parse_equation(t)) for c, t in ids.B5_EQUATIONS])
    if not ok:
        return ok, detail
    if any(alg.reduce(OpPoly.word(w)) for d in (7, 8) for w in words_of_degree(d)):
        return False, "a word of degree 7 or 8 survives"
    spanning = {parse_word(w) for w in ids.B5_SPANNING_WORDS}
    extra = [w for d in range(1, 7) for w in alg.table(d).canonical if w not in spanning]
    return not extra, "canonical words within the 17-word set" if not extra else f"extra {extra}"


def nil4_b6_vanishing():
    alg = algebra(Variety.NIL4_B6)
    ok, detail = _all_zero(alg, [(c, parse_equation(t)) for c, t in ids.B6_EQUATIONS])
    if not ok:
        return ok, detail
    alive = [w for d in (9, 10) for w in words_of_degree(d) if alg.reduce(OpPoly.word(w))]
    return not alive, f"{detail}; degrees 9, 10 vanish" if not alive else f"survivors {alive[:3]}"


def denominators():
    allowed = {Variety.NIL4: {2, 3}, Variety.NIL4_B5: {2, 3}, Variety.NIL4_B6: {2, 3, 5}}
    found = {v: denominator_audit(v) for v in Variety}
    ok = all(found[v] <= allowed[v] for v in Variety)
    return ok, ", ".join(f"{v.label} {sorted(found[v])}" for v in Variety)


def _direct(m: Monomial, onevar) -> Polynomial:
    if m == Y:
        return Polynomial.monomial(Y)
    a, b = (m.left, m.right) if m.right.ydeg else (m.right, m.left)
    return multiply(onevar.normal_form_poly(Polynomial.monomial(a)), _direct(b, onevar))


def oracle_equivalence():
    rng = random.Random(SEED)
    onevar = algebra(Variety.NIL4).onevar
    n = 150
    for _ in range(n):
        m = rng.choice(monomials_of_bidegree(rng.randint(0, 8), 1))
        if apply_to_y(translate(Polynomial.monomial(m), onevar)) != _direct(m, onevar):
            return False, f"differs on {m}"
    return True, f"{n} random y-linear monomials of x-degree <= 8"


def determinism():
    cmds = (["verify", "all", "--format", "json"], ["derive", "--variety", "nil4", "--format", "json"])
    for argv in cmds:
        outs = [subprocess.run([sys.executable, "-m", "nilalg.cli", *argv], capture_output=True, check=False).stdout
                for _ in range(2)]
        if outs[0] != outs[1] or not outs[0]:
            return False, f"{' '.join(argv)} differs between runs"
    return True, "verify and derive JSON byte-identical across runs"


CRITERIA = [
    (1, "linearization fidelity", linearization_fidelity),
    (2, "binomial property", binomial_property),
    (3, "one-variable elements", element_facts),
    (4, "letter eliminations", letter_eliminations),
    (5, "published tables", tables),
    (6, "derivation waypoints", derivation_waypoints),
    (7, "x^4 = 0: words of degree >= 10 vanish", nil4_vanishing),
    (8, "x^4 = x(x^2x^2) = 0: degree >= 7 and spanning set", nil4_b5_vanishing),
    (9, "x^4 = x(x(x^2x^2)) = 0: degree >= 9", nil4_b6_vanishing),
    (10, "denominator audit", denominators),
    (11, "oracle equivalence", oracle_equivalence),
    (12, "determinism", determinism),
]


def _line(n, title, ok, detail):
    return f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title} ({detail})"


@pytest.mark.parametrize("n, title, check", CRITERIA, ids=[f"c{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(n, title, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _line(n, title, ok, detail), end="")
    assert ok, detail


if __name__ == "__main__":
    results = [(n, t, *c()) for n, t, c in CRITERIA]
    for n, t, ok, detail in results:
        print(_line(n, t, ok, detail))
    sys.exit(0 if all(r[2] for r in results) else 1)
