from collections import Counter

import pytest

from gentle.algebra import random_gentle
from gentle.ribbon import NotSmoothError, build_ribbon, crosscheck_boundaries, trace_faces
from gentle.threads import boundary_components, enumerate_threads

from conftest import loop_algebra


def test_paper_ribbon_graph(ex1):
    ribbon = build_ribbon(ex1)
    assert sorted(v.thread.name for v in ribbon.vertices) == ["a", "bd", "c", "e_4"]
    assert len(ribbon.edges) == 4
    ends = Counter()
    name_of = {i: v.thread.name for i, v in enumerate(ribbon.vertices)}
    for e in ribbon.edges:
        ends[frozenset({name_of[e.ends[0][0]], name_of[e.ends[1][0]]})] += 1
    assert ends[frozenset({"a", "bd"})] == 2  # the double edge
    assert ends[frozenset({"bd", "c"})] == 1
    assert ends[frozenset({"c", "e_4"})] == 1


def test_point_ribbon_is_an_interval(point):
    ribbon = build_ribbon(point)
    assert len(ribbon.vertices) == 2 and len(ribbon.edges) == 1


def test_loop_ribbon_is_a_loop_edge():
    ribbon = build_ribbon(loop_algebra(0))
    assert len(ribbon.vertices) == 1 and len(ribbon.edges) == 1
    e = ribbon.edges[0]
    assert e.ends[0][0] == e.ends[1][0]


def test_not_smooth_refused():
    with pytest.raises(NotSmoothError):
        build_ribbon(loop_algebra(0, with_relation=True))


def test_paper_faces(ex1):
    surface = trace_faces(build_ribbon(ex1))
    assert sorted(s for s, _ in surface.boundaries) == [1, 3]
    assert surface.euler == 0 and surface.genus == 0


def test_genus_one_faces(ex2):
    surface = trace_faces(build_ribbon(ex2))
    assert surface.euler == -2 and surface.genus == 1
    assert surface.boundaries == [(2, -2), (2, -2)]


def test_point_is_a_disk(point):
    surface = trace_faces(build_ribbon(point))
    assert surface.genus == 0 and surface.boundaries == [(2, 2)]


def test_crosscheck_on_examples(ex1, ex2, point):
    for algebra in (ex1, ex2, point, loop_algebra(4)):
        system = enumerate_threads(algebra)
        surface = trace_faces(build_ribbon(algebra, system))
        pairing = crosscheck_boundaries(algebra, surface, system)
        assert len(pairing) == len(surface.faces)


def test_loop_face_types():
    algebra = loop_algebra(2)
    system = enumerate_threads(algebra)
    surface = trace_faces(build_ribbon(algebra, system))
    pairing = dict(crosscheck_boundaries(algebra, surface, system))
    comps = boundary_components(algebra, system)
    for fi, face in enumerate(surface.faces):
        comp = comps[pairing[fi]]
        if face.stops:
            assert comp.component_type == "I"
        else:
            assert comp.component_type == "II"


def test_fuzz_crosscheck_and_euler():
    for seed in range(300):
        algebra = random_gentle(seed, 12, 3, smooth=True)
        system = enumerate_threads(algebra)
        ribbon = build_ribbon(algebra, system)
        surface = trace_faces(ribbon)
        crosscheck_boundaries(algebra, surface, system)
        q = algebra.quiver
        assert surface.euler == len(q.vertices) - len(q.arrows)
        assert sum(w for _, w in surface.boundaries) == 2 * surface.euler
        assert sum(w + 2 for _, w in surface.boundaries) == 4 - 4 * surface.genus
        assert sum(s for s, _ in surface.boundaries) == len(system.forbidden)
        proper = not system.permitted_cycles
        assert proper == all(s >= 1 for s, _ in surface.boundaries)
