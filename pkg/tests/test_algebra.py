import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentle.algebra import (
    ExhaustedAttemptsError,
    InvalidGentleError,
    NotDegreeZeroError,
    NotProperError,
    check_gentle,
    koszul_dual,
    random_gentle,
    serialize,
    validate_gentle,
)
from gentle.threads import aag_invariants, is_proper, is_smooth

from conftest import loop_algebra


def test_paper_quiver_is_valid(ex1):
    assert len(ex1.quiver.arrows) == 4
    assert ("b", "d") in ex1.relations


def test_point_algebra_is_valid(point):
    assert point.quiver.vertices == ("v",)


def test_axiom3_two_relations_on_one_arrow():
    with pytest.raises(InvalidGentleError) as err:
        validate_gentle(
            "123",
            [("a", "1", "2"), ("d", "1", "2"), ("b", "2", "3")],
            [("b", "a"), ("b", "d")],
        )
    violations = err.value.violations
    assert any(v.axiom == "axiom3" and v.witness[0] == "b" for v in violations)


def test_axiom4_two_unrelated_continuations():
    violations = check_gentle(
        "123",
        [("a", "1", "2"), ("b", "2", "3"), ("c", "2", "3")],
        [],
    )
    assert any(v.axiom == "axiom4" and v.witness[0] == "a" for v in violations)


def test_axiom1_valence_bound():
    violations = check_gentle(
        "12",
        [("a", "1", "2"), ("b", "1", "2"), ("c", "1", "2")],
        [],
    )
    assert any(v.axiom == "too_many_arrows" for v in violations)


def test_relation_must_compose():
    violations = check_gentle(
        "123",
        [("a", "1", "2"), ("c", "2", "3")],
        [("a", "c")],
    )
    assert any(v.axiom == "not_composable" for v in violations)


def test_disconnected_quiver_rejected():
    violations = check_gentle("12", [], [])
    assert any(v.axiom == "disconnected" for v in violations)


def test_duplicate_ids_are_preconditions():
    with pytest.raises(ValueError):
        check_gentle("11", [], [])
    with pytest.raises(ValueError):
        check_gentle("12", [("a", "1", "2"), ("a", "2", "1")], [])


def test_serialize_round_trip(ex1, ex2):
    for algebra in (ex1, ex2):
        assert validate_gentle(**serialize(algebra)) == algebra


# --- Koszul duality ----------------------------------------------------------

def test_dual_of_linear_a3_with_relation():
    a3 = validate_gentle("123", [("a", "1", "2"), ("b", "2", "3")], [("b", "a")])
    dual = koszul_dual(a3)
    assert dual.relations == frozenset()
    assert all(dual.deg(x.name) == 1 for x in dual.quiver.arrows)
    assert {(x.source, x.target) for x in dual.quiver.arrows} == {("2", "1"), ("3", "2")}
    assert aag_invariants(a3) == aag_invariants(dual)


def test_dual_of_a2(a2):
    dual = koszul_dual(a2)
    assert dual.relations == frozenset()
    assert dual.quiver.arrows[0].source == "2"


def test_dual_of_paper_example_complements_relations(ex1):
    dual = koszul_dual(ex1)
    # composable pairs were ba, bd, cb; only bd was a relation
    assert dual.relations == frozenset({("a", "b"), ("b", "c")})
    assert aag_invariants(ex1) == aag_invariants(dual)


def test_double_dual_is_identity_up_to_grading(ex1):
    dual = koszul_dual(ex1)
    ungraded_dual = validate_gentle(
        dual.quiver.vertices,
        [(a.name, a.source, a.target) for a in dual.quiver.arrows],
        sorted(dual.relations),
    )
    double = koszul_dual(ungraded_dual)
    assert double.quiver == ex1.quiver
    assert double.relations == ex1.relations


def test_dual_requires_proper():
    with pytest.raises(NotProperError):
        koszul_dual(loop_algebra(0))


def test_dual_requires_degree_zero():
    bad = validate_gentle("12", [("a", "1", "2")], [], {"a": 3})
    with pytest.raises(NotDegreeZeroError):
        koszul_dual(bad)


def test_dual_of_proper_is_smooth():
    for seed in range(40):
        algebra = random_gentle(seed, 7, 0, proper=True)
        assert is_smooth(koszul_dual(algebra))[0]


# --- random generation ---------------------------------------------------------

def test_random_deterministic():
    a = random_gentle(1, 6, 2, smooth=True)
    b = random_gentle(1, 6, 2, smooth=True)
    assert a == b


def test_random_smooth_has_no_forbidden_cycle():
    algebra = random_gentle(1, 6, 2, smooth=True)
    ok, witness = is_smooth(algebra)
    assert ok and witness is None


def test_random_smooth_proper_runs_pipeline():
    from gentle.linefield import analyze, orbit_invariants

    algebra = random_gentle(2, 12, 2, smooth=True, proper=True)
    assert is_proper(algebra)[0]
    inv = orbit_invariants(analyze(algebra))
    assert inv.genus >= 0


def test_random_rejection_budget():
    with pytest.raises(ExhaustedAttemptsError):
        # a budget of zero attempts can never succeed
        random_gentle(0, 3, 0, smooth=True, max_attempts=0)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_random_valence_bounds(seed):
    algebra = random_gentle(seed, 9, 3)
    for v in algebra.quiver.vertices:
        assert len(algebra.quiver.incoming[v]) <= 2
        assert len(algebra.quiver.outgoing[v]) <= 2
