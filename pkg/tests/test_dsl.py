import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentle.dsl import (
    AlgebraDocument,
    ArrowDecl,
    DslError,
    RelationDecl,
    algebra_to_document,
    document_to_algebra,
    parse,
    serialize,
)

from conftest import FIXTURES, SAMPLES


def test_parse_paper_example_file():
    doc = parse((SAMPLES / "ex1.gentle").read_text())
    assert doc.name == "ex1"
    assert len(doc.vertices) == 4
    assert len(doc.arrows) == 4
    assert [(r.later, r.earlier) for r in doc.relations] == [("b", "d")]
    algebra = document_to_algebra(doc)
    assert ("b", "d") in algebra.relations


def test_round_trip_on_all_samples():
    for path in sorted(SAMPLES.glob("*.gentle")):
        doc = parse(path.read_text())
        assert parse(serialize(doc)) == doc, path.name


def test_degrees_default_to_zero():
    doc = parse("algebra x\nvertex 1 2\narrow a 1 2\n")
    assert doc.arrows[0].degree == 0
    assert document_to_algebra(doc).deg("a") == 0


def test_negative_degree():
    doc = parse("algebra x\nvertex 1 2\narrow a 1 2 deg -3\n")
    assert doc.arrows[0].degree == -3


def test_comments_and_blank_lines():
    text = "# heading\n\nalgebra x  # trailing\nvertex v\n"
    assert parse(text).vertices == ("v",)


def test_empty_vertex_section_position():
    with pytest.raises(DslError) as err:
        parse("algebra x\nvertex\n")
    assert err.value.span.line == 2
    assert err.value.span.column == 1
    assert err.value.expected == ("IDENT",)


def test_non_composable_relation_span():
    text = "algebra x\nvertex 1 2 3\narrow a 1 2\narrow c 1 3\nrel c.a\n"
    doc = parse(text)
    with pytest.raises(DslError) as err:
        document_to_algebra(doc)
    assert err.value.span.line == 5
    assert "not composable" in err.value.message


def test_all_malformed_fixtures_have_positions():
    paths = sorted(FIXTURES.glob("malformed/*.gentle"))
    assert len(paths) == 20
    for path in paths:
        with pytest.raises(DslError) as err:
            document_to_algebra(parse(path.read_text()))
        diag = err.value.as_dict()
        assert diag["line"] >= 1 and diag["column"] >= 1, path.name


IDENT = st.from_regex(r"[a-z][a-z0-9_]{0,5}", fullmatch=True)


@st.composite
def documents(draw):
    vertices = tuple(
        sorted(draw(st.sets(IDENT, min_size=1, max_size=6)))
    )
    n_arrows = draw(st.integers(0, 6))
    arrows = []
    for i in range(n_arrows):
        arrows.append(
            ArrowDecl(
                f"x{i}",
                draw(st.sampled_from(vertices)),
                draw(st.sampled_from(vertices)),
                draw(st.integers(-9, 9)),
            )
        )
    relations = []
    composable = [
        (b.name, a.name)
        for a in arrows
        for b in arrows
        if b.source == a.target and b.name != a.name
    ]
    if composable:
        chosen = draw(st.sets(st.sampled_from(composable), max_size=3))
        relations = [RelationDecl(later, earlier) for later, earlier in sorted(chosen)]
    name = draw(IDENT)
    return AlgebraDocument(name, vertices, tuple(arrows), tuple(relations))


@settings(max_examples=120, deadline=None)
@given(documents())
def test_round_trip_random_documents(doc):
    assert parse(serialize(doc)) == doc


def test_algebra_document_round_trip(ex2):
    doc = algebra_to_document(ex2, name="ex2")
    again = document_to_algebra(doc)
    assert again == ex2
