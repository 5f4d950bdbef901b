import pathlib

import pytest

from gentle.algebra import validate_gentle

SAMPLES = pathlib.Path(__file__).resolve().parent.parent / "samples"
FIXTURES = pathlib.Path(__file__).resolve().parent / "fixtures"


@pytest.fixture
def ex1():
    """Four vertices, double arrow a,d: 1->2, b: 2->3, c: 3->4, relation bd."""
    return validate_gentle(
        "1234",
        [("a", "1", "2"), ("d", "1", "2"), ("b", "2", "3"), ("c", "3", "4")],
        [("b", "d")],
    )


@pytest.fixture
def ex2():
    """Six vertices, eight arrows, relations za = by = xc = dt = 0; genus 1."""
    return validate_gentle(
        "123456",
        [("a", "1", "2"), ("b", "2", "3"), ("c", "1", "5"), ("d", "5", "3"),
         ("t", "4", "5"), ("x", "5", "6"), ("y", "4", "2"), ("z", "2", "6")],
        [("z", "a"), ("b", "y"), ("x", "c"), ("d", "t")],
    )


@pytest.fixture
def point():
    """The base field: one vertex, no arrows."""
    return validate_gentle(["v"], [], [])


@pytest.fixture
def a2():
    """One arrow 1 -> 2, no relations."""
    return validate_gentle("12", [("a", "1", "2")], [])


def loop_algebra(degree: int, with_relation: bool = False):
    rels = [("al", "al")] if with_relation else []
    return validate_gentle(["v"], [("al", "v", "v")], rels, {"al": degree})


@pytest.fixture
def annulus():
    """Loop with no relation and degree 1: smooth, not proper."""
    return loop_algebra(1)
