import json

import pytest

from nilalg import theorems
from nilalg.onevar import Variety
from nilalg.opalgebra import OpPoly, parse_equation
from nilalg.reports import VerificationReport


@pytest.fixture(scope="module")
def reports():
    return {r.variety: r for r in theorems.verify("all")}


@pytest.mark.parametrize("label", ["nil4", "nil4-b5", "nil4-b6"])
def test_every_check_passes(reports, label):
    rep = reports[label]
    assert rep.passed, "\n".join(f"{c.id}: {c.witness}" for c in rep.failures)
    ids = [c.id for c in rep.checks]
    assert len(ids) == len(set(ids))


def test_report_json_schema(reports):
    doc = reports["nil4"].to_json()
    assert {"variety", "checks", "dims", "denominator_primes"} <= set(doc)
    for chk in doc["checks"]:
        assert {"id", "anchor", "status"} <= set(chk)
        assert chk["status"] in ("pass", "fail")
    assert doc["dims"] == [1, 2, 3, 5, 7, 9, 10, 9, 4, 0, 0]
    json.loads(reports["nil4"].dumps())


def test_degree_ten_waypoints_come_from_lifts(reports):
    proof = [c for c in reports["nil4"].checks if c.id.startswith("proof.deg10")]
    assert len(proof) == 13 and all(c.passed for c in proof)


@pytest.mark.parametrize("variety, primes", [
    (Variety.NIL4, {2, 3}),
    (Variety.NIL4_B5, set()),
    (Variety.NIL4_B6, {2}),
])
def test_denominator_audit(variety, primes):
    assert theorems.denominator_audit(variety) == primes


def test_bounds_are_sharp_for_the_relations():
    for variety, n in theorems.NILPOTENCY_DEGREE.items():
        alg = theorems.algebra(variety)
        assert alg.reduce(OpPoly.word("L" * (n - 1)))
        assert not alg.reduce(OpPoly.word("L" * n))


def test_subvarieties_kill_at_least_as_much():
    assert theorems.monotonicity() == {"nil4-b5": [], "nil4-b6": []}


def test_wrong_identity_is_caught():
    alg = theorems.algebra(Variety.NIL4)
    assert alg.reduce(parse_equation("L^9 = 0"))
    # a single altered coefficient of a published row
    assert alg.reduce(parse_equation("U^2L = -LU^2 + 2UL^3 - 2L^3U - 7L^5"))


def test_failures_carry_witnesses():
    rep = VerificationReport("nil4")
    rep.add("a", "x", True)
    rep.add("b", "y", False)
    assert not rep.passed
    assert rep.failures[0].witness
    assert rep.to_json()["checks"][1]["status"] == "fail"


def test_quotient_dimension_range():
    assert theorems.quotient_dimensions(Variety.NIL4_B5, 6) == [1, 2, 3, 4, 4, 3]
    with pytest.raises(ValueError):
        theorems.quotient_dimensions(Variety.NIL4, 13)
