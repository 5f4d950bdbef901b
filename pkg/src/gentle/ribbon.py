"""Ribbon graph of a smooth algebra, fatgraph face tracing, surface data.

Ribbon vertices are the forbidden threads; the edge for each quiver vertex
joins its two forbidden slot occurrences.  The linear half-edge order at a
ribbon vertex is the order of vertex occurrences along the thread, with the
stop slot between the last and first positions.  Thickening the graph with
this structure gives the surface; its boundary is traced by the usual
fatgraph face walk.

Each ribbon vertex with m half-edges bounds a 2m-gon of the thickened
surface whose free boundary arcs alternate with the half-edge sides.  The
arc between positions j and j+1 carries the line-field winding theta equal
to the degree of the thread's j-th arrow; the wrap-around arc through the
stop carries minus the thread grading, making the thetas sum to m - 2.  A
face's boundary winding is minus the sum of thetas over the arcs it
traverses; summed over all faces this gives twice the Euler characteristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .algebra import GradedGentleAlgebra
from .threads import (
    BoundaryComponent,
    Thread,
    ThreadSystem,
    boundary_components,
    enumerate_threads,
)


class NotSmoothError(ValueError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"algebra is not homologically smooth: forbidden cycle {witness.name}")


class MismatchedComponentError(AssertionError):
    """Face-traced boundary data disagrees with thread-traced components."""


HalfEdge = tuple[int, int]  # (ribbon vertex index, position 0..m-1)


@dataclass(frozen=True)
class RibbonEdge:
    label: str              # quiver vertex
    ends: tuple[HalfEdge, HalfEdge]


@dataclass(frozen=True)
class RibbonVertexData:
    thread: Thread
    occurrences: tuple[str, ...]    # quiver vertices along the thread
    thetas: tuple[int, ...]         # arc windings, stop arc last

    @property
    def valence(self) -> int:
        return len(self.occurrences)


class RibbonGraph:
    """Fatgraph with one stop slot per vertex and labelled edges."""

    def __init__(self, vertices: tuple[RibbonVertexData, ...],
                 edges: tuple[RibbonEdge, ...]):
        self.vertices = vertices
        self.edges = edges

    @cached_property
    def partner(self) -> dict[HalfEdge, HalfEdge]:
        table: dict[HalfEdge, HalfEdge] = {}
        for e in self.edges:
            a, b = e.ends
            table[a] = b
            table[b] = a
        return table

    @cached_property
    def edge_at(self) -> dict[HalfEdge, int]:
        table: dict[HalfEdge, int] = {}
        for i, e in enumerate(self.edges):
            table[e.ends[0]] = i
            table[e.ends[1]] = i
        return table

    @property
    def euler(self) -> int:
        return len(self.vertices) - len(self.edges)

    def theta(self, half: HalfEdge) -> int:
        """Winding of the free arc leaving ``half`` toward the next position."""
        v, pos = half
        return self.vertices[v].thetas[pos]

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for e in self.edges:
                for a, b in (e.ends, e.ends[::-1]):
                    if a[0] == v and b[0] not in seen:
                        seen.add(b[0])
                        stack.append(b[0])
        return len(seen) == len(self.vertices)


@dataclass(frozen=True)
class Face:
    """One boundary walk: the cyclic sequence of entry slots it passes."""

    entries: tuple[HalfEdge, ...]
    stops: int
    winding: int


@dataclass(frozen=True)
class SurfaceModel:
    ribbon: RibbonGraph
    faces: tuple[Face, ...]
    euler: int
    genus: int

    @property
    def boundaries(self) -> list[tuple[int, int]]:
        return [(f.stops, f.winding) for f in self.faces]


def build_ribbon(algebra: GradedGentleAlgebra,
                 system: ThreadSystem | None = None) -> RibbonGraph:
    """Ribbon graph of a smooth algebra; raises NotSmoothError otherwise."""
    if system is None:
        system = enumerate_threads(algebra)
    if system.forbidden_cycles:
        raise NotSmoothError(system.forbidden_cycles[0])

    qv_deg = algebra.deg
    vertices = []
    index_of: dict[Thread, int] = {}
    for t in system.forbidden:
        occ = t.vertex_path(algebra)
        thetas = tuple(qv_deg(a) for a in t.arrows) + (-t.grading,)
        index_of[t] = len(vertices)
        vertices.append(RibbonVertexData(t, occ, thetas))

    edges = []
    for v in algebra.quiver.vertices:
        (o1, i1), (o2, i2) = system._forb_slots[v]
        edges.append(RibbonEdge(v, ((index_of[o1], i1), (index_of[o2], i2))))

    graph = RibbonGraph(tuple(vertices), tuple(edges))
    if not graph.is_connected():
        raise AssertionError("ribbon graph of a connected quiver must be connected")
    return graph


def trace_faces(ribbon: RibbonGraph) -> SurfaceModel:
    """Trace all boundary faces of the thickened fatgraph.

    From an entry slot (v, u) the walk runs along the free arc after position
    u, crosses the edge at position u+1 (collecting the stop when the arc is
    the wrap-around one), and re-enters at the partner half-edge.
    """
    entries = [
        (vi, pos)
        for vi, v in enumerate(ribbon.vertices)
        for pos in range(v.valence)
    ]
    seen: set[HalfEdge] = set()
    faces = []
    for start in entries:
        if start in seen:
            continue
        walk = []
        stops = 0
        winding = 0
        cur = start
        while True:
            seen.add(cur)
            walk.append(cur)
            vi, pos = cur
            m = ribbon.vertices[vi].valence
            winding -= ribbon.vertices[vi].thetas[pos]
            if pos == m - 1:
                stops += 1
            cur = ribbon.partner[(vi, (pos + 1) % m)]
            if cur == start:
                break
        faces.append(Face(tuple(walk), stops, winding))

    euler = ribbon.euler
    b = len(faces)
    genus2 = 2 - euler - b
    if genus2 % 2 or genus2 < 0:
        raise AssertionError(f"impossible face count: chi={euler} b={b}")
    return SurfaceModel(ribbon, tuple(faces), euler, genus2 // 2)


def _face_event_key(ribbon: RibbonGraph, face: Face) -> tuple:
    """Canonical cyclic event stream of a face (arrows and stop thread names)."""
    events = []
    for vi, pos in face.entries:
        data = ribbon.vertices[vi]
        if pos == data.valence - 1:
            events.append(("stop", data.thread.name, data.thread.tag))
        else:
            events.append(("arrow", data.thread.arrows[pos]))
    return _canonical_cyclic(events)


def _component_event_key(comp: BoundaryComponent) -> tuple:
    events = []
    if comp.component_type == "II":
        events = [("arrow", a) for a in comp.cycle.arrows]
    else:
        for f, p in comp.pairs:
            events.append(("stop", f.name, f.tag))
            events.extend(("arrow", a) for a in p.arrows)
    return _canonical_cyclic(events)


def _canonical_cyclic(seq: list) -> tuple:
    if not seq:
        return ()
    rotations = [tuple(seq[i:] + seq[:i]) for i in range(len(seq))]
    return min(rotations)


def crosscheck_boundaries(
    algebra: GradedGentleAlgebra,
    surface: SurfaceModel,
    system: ThreadSystem | None = None,
) -> list[tuple[int, int]]:
    """Match faces to combinatorial boundary components one-to-one.

    Matching is by the exact cyclic event stream (stops by thread, arrows in
    order), and the pair (stop count, winding) must agree on each matched
    pair.  Any failure raises MismatchedComponentError: it signals a bug, not
    a property of the input.
    """
    if system is None:
        system = enumerate_threads(algebra)
    comps = boundary_components(algebra, system)
    comp_keys: dict[tuple, list[int]] = {}
    for ci, comp in enumerate(comps):
        comp_keys.setdefault(_component_event_key(comp), []).append(ci)

    pairing = []
    for fi, face in enumerate(surface.faces):
        key = _face_event_key(surface.ribbon, face)
        bucket = comp_keys.get(key)
        if not bucket:
            raise MismatchedComponentError(f"face {fi} has no matching component: {key}")
        ci = bucket.pop()
        comp = comps[ci]
        if (face.stops, face.winding) != (comp.n, comp.w):
            raise MismatchedComponentError(
                f"face {fi} data {(face.stops, face.winding)} != component {(comp.n, comp.w)}"
            )
        pairing.append((fi, ci))
    leftovers = [ci for bucket in comp_keys.values() for ci in bucket]
    if leftovers:
        raise MismatchedComponentError(f"components without faces: {leftovers}")
    return pairing
