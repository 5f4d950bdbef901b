"""Windings of simple cycles, the Z/4 quadratic function, and orbit invariants.

The line field is tangent to every dual arc and is pinned on each 2m-gon
disk by the integer windings theta along its free boundary arcs.  Every
homotopy-invariant quantity is computed in an exact piecewise-linear model:

* each ribbon vertex of valence m is a regular 2m-gon with the dual-arc
  sides at even positions, so the side directions and side midpoints are
  rational multiples of a half-turn;
* along the free arc between consecutive dual-arc sides the line field's
  angle advances by theta - 1 + 2/m half-turns (this is what makes the
  windings sum to m - 2 exactly when the field extends over the disk);
* a simple graph cycle is drawn with one straight chord per visited disk;
  the field's rotation along a chord equals its rotation along either
  boundary detour (their difference is the full disk rotation, which is
  zero), and the tangent only turns at dual-arc crossings, by the unique
  representative in (-1, 1) of the angle mismatch between consecutive
  chords transported across the gluing.

The winding of the cycle is tangent rotation minus field rotation, in
half-turns; it always comes out an integer and is asserted to.  Boundary
faces use the closed form: winding = minus the sum of the thetas traversed.

From simple-cycle windings, q(c) = w(c) + 2 on the fundamental-cycle basis
extends to all of H1(Sigma; Z/4) by the quadratic relation; sigma, the
genus-one gcd invariant, and the Arf invariant of the reduced form on H/K
follow the applicability gates of the orbit classification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .algebra import GradedGentleAlgebra
from .homology import (
    CycleBasis,
    Dart,
    IntersectionForm,
    cycle_basis,
    dart_endpoints,
    intersection_form,
    is_simple_cycle,
    quotient_symplectic_basis,
    smith_quotient_basis,
    walk_coordinates,
)
from .quadforms import QuadZ4, Z2QuadraticSpace, arf_gauss, arf_symplectic
from .ribbon import (
    RibbonGraph,
    SurfaceModel,
    build_ribbon,
    crosscheck_boundaries,
    trace_faces,
)
from .threads import ThreadSystem, enumerate_threads


class NonSimpleCycleError(ValueError):
    pass


class NotGenusOneError(ValueError):
    pass


class NotApplicableError(ValueError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Arf invariant not applicable: {reason}")


class NoSimpleBasisError(RuntimeError):
    """No pair of simple cycles projects to a basis of H1/K; flagged hard."""


@dataclass(frozen=True)
class LineFieldData:
    """Arc windings per disk; each disk's windings sum to (side count) - 2."""

    disk_windings: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for thetas in self.disk_windings:
            if sum(thetas) != len(thetas) - 2:
                raise ValueError("disk windings violate the extension constraint")


@dataclass(frozen=True)
class OrbitInvariants:
    """The full decision tuple for one algebra's surface model."""

    genus: int
    boundary: tuple[tuple[int, int], ...]   # sorted (stops, winding) pairs
    sigma: int
    gcd_invariant: int | None               # present iff genus == 1
    arf: int | None                         # present iff the Arf gate is open

    @property
    def boundary_multiset(self):
        return tuple(sorted(self.boundary))


# --- exact chart geometry -----------------------------------------------------

def _side_midpoint(m: int, a: int) -> Fraction:
    """Circle angle (half-turns) of the midpoint of dual-arc side ``a``."""
    return Fraction(4 * a + 1, 2 * m)


def _side_direction(m: int, a: int) -> Fraction:
    """Tangent direction of dual-arc side ``a`` traversed counterclockwise."""
    return Fraction(4 * a + 1, 2 * m) + Fraction(1, 2)


def _chord_direction(m: int, a: int, b: int) -> Fraction:
    start, end = _side_midpoint(m, a), _side_midpoint(m, b)
    delta = (end - start) % 2
    return start + (delta + 1) / 2


def _field_advance(thetas, j: int) -> Fraction:
    return thetas[j] - 1 + Fraction(2, len(thetas))


def _chord_field_rotation(thetas, a: int, b: int, route: str) -> Fraction:
    """Line-field rotation along the chord, via a boundary detour."""
    m = len(thetas)
    if route == "ccw":
        total = Fraction(0)
        j = a
        while j != b:
            total += _field_advance(thetas, j)
            j = (j + 1) % m
        return total
    if route == "cw":
        total = Fraction(0)
        j = b
        while j != a:
            total += _field_advance(thetas, j)
            j = (j + 1) % m
        return -total
    raise ValueError("route must be 'ccw' or 'cw'")


def winding_of_cycle(ribbon: RibbonGraph, darts: tuple[Dart, ...],
                     route: str = "ccw") -> int:
    """Winding number of a simple graph cycle with respect to the line field."""
    if not is_simple_cycle(ribbon, darts):
        raise NonSimpleCycleError("cycle revisits a ribbon vertex")

    visits = []
    n = len(darts)
    for k, d in enumerate(darts):
        prev = darts[k - 1]
        _, enter = dart_endpoints(ribbon, prev)
        leave, _ = dart_endpoints(ribbon, d)
        if enter[0] != leave[0]:
            raise ValueError("dart sequence is not a closed walk")
        if enter[1] == leave[1]:
            raise ValueError("cycle enters and leaves a disk through the same side")
        visits.append((enter[0], enter[1], leave[1]))

    total = Fraction(0)
    chord_dirs = []
    for vi, a, b in visits:
        thetas = ribbon.vertices[vi].thetas
        total -= _chord_field_rotation(thetas, a, b, route)
        chord_dirs.append(_chord_direction(len(thetas), a, b))

    for k in range(n):
        vi, _, out_pos = visits[k]
        wi, in_pos, _ = visits[(k + 1) % n]
        m_out = ribbon.vertices[vi].valence
        m_in = ribbon.vertices[wi].valence
        rho = _side_direction(m_in, in_pos) + 1 - _side_direction(m_out, out_pos)
        turn = (chord_dirs[(k + 1) % n] - chord_dirs[k] - rho) % 2
        if turn == 1:
            raise AssertionError("chord tangent to a dual arc: broken geometry")
        if turn > 1:
            turn -= 2
        total += turn

    if total.denominator != 1:
        raise AssertionError(f"winding came out non-integral: {total}")
    return int(total)


# --- assembled surface analysis ------------------------------------------------

@dataclass(frozen=True)
class SurfaceAnalysis:
    """Everything the orbit invariants need, computed once."""

    algebra: GradedGentleAlgebra
    system: ThreadSystem
    ribbon: RibbonGraph
    surface: SurfaceModel
    basis: CycleBasis
    form: IntersectionForm
    generator_windings: tuple[int, ...]
    line_field: LineFieldData

    @property
    def genus(self) -> int:
        return self.surface.genus

    @property
    def boundary(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.surface.boundaries))

    @cached_property
    def q(self) -> QuadZ4:
        pairing = tuple(
            tuple(v % 4 for v in row) for row in self.form.gram
        )
        values = tuple((w + 2) % 4 for w in self.generator_windings)
        return QuadZ4(pairing, values)

    def q_of_class(self, coords) -> int:
        return self.q.q(tuple(c % 4 for c in coords))


def q_form(analysis: SurfaceAnalysis) -> QuadZ4:
    """The quadratic refinement on H1(Sigma; Z/4) in generator coordinates."""
    return analysis.q


def analyze(algebra: GradedGentleAlgebra,
            system: ThreadSystem | None = None) -> SurfaceAnalysis:
    """Run the full surface pipeline with its internal consistency gates.

    The face/component bijection and the quadratic compatibility of chord
    windings with face windings are asserted on every run; a failure is a
    bug, never valid output.
    """
    if system is None:
        system = enumerate_threads(algebra)
    ribbon = build_ribbon(algebra, system)
    surface = trace_faces(ribbon)
    crosscheck_boundaries(algebra, surface, system)
    basis = cycle_basis(ribbon, surface)
    form = intersection_form(ribbon, basis)
    windings = tuple(winding_of_cycle(ribbon, g) for g in basis.generators)
    analysis = SurfaceAnalysis(
        algebra, system, ribbon, surface, basis, form, windings,
        LineFieldData(tuple(v.thetas for v in ribbon.vertices)),
    )
    for face_class, face in zip(basis.face_classes, surface.faces):
        expected = (face.winding + 2) % 4
        if analysis.q_of_class(face_class) != expected:
            raise AssertionError(
                "quadratic function disagrees with a boundary winding"
            )
    return analysis


def sigma(analysis: SurfaceAnalysis) -> int:
    """0 iff the mod-2 winding homomorphism vanishes on all of H1."""
    return 0 if all(w % 2 == 0 for w in analysis.generator_windings) else 1


def enumerate_simple_cycles(ribbon: RibbonGraph, limit: int = 20000):
    """All graph-simple cycles as dart tuples, one representative each."""
    n = len(ribbon.vertices)
    incident: dict[int, list[Dart]] = {v: [] for v in range(n)}
    for ei, e in enumerate(ribbon.edges):
        incident[e.ends[0][0]].append((ei, 0))
        incident[e.ends[1][0]].append((ei, 1))

    seen: set[tuple] = set()
    cycles: list[tuple[Dart, ...]] = []

    def canonical(darts):
        forward = list(darts)
        backward = [(e, 1 - f) for e, f in reversed(forward)]
        keys = []
        for seq in (forward, backward):
            for i in range(len(seq)):
                keys.append(tuple(seq[i:] + seq[:i]))
        return min(keys)

    def extend(path_darts, path_vertices):
        if len(cycles) >= limit:
            return
        v = path_vertices[-1]
        for d in incident[v]:
            _, head = dart_endpoints(ribbon, d)
            w = head[0]
            if w == path_vertices[0]:
                cand = tuple(path_darts + [d])
                # back-and-forth over a single edge is not a cycle
                if len(cand) == 2 and cand[0][0] == cand[1][0]:
                    continue
                key = canonical(cand)
                if key not in seen:
                    seen.add(key)
                    cycles.append(cand)
            if w > path_vertices[0] and w not in path_vertices:
                extend(path_darts + [d], path_vertices + [w])

    for start in range(n):
        extend([], [start])
    return cycles


def gcd_invariant(analysis: SurfaceAnalysis, cycle_limit: int = 20000) -> int:
    """gcd of windings over non-separating simple cycles, genus-one case.

    Equals gcd of the windings of any two simple cycles projecting to a basis
    of H1/im(boundary) together with the boundary invariants w_i + 2.  All
    qualifying pairs must give the same value; a discrepancy is a hard error.
    """
    if analysis.genus != 1:
        raise NotGenusOneError(f"genus is {analysis.genus}")
    quotient = smith_quotient_basis(analysis.basis, analysis.basis.face_classes)
    if len(quotient.projection) != 2:
        raise AssertionError("genus-one quotient should have rank 2")

    candidates = []
    for darts in enumerate_simple_cycles(analysis.ribbon, cycle_limit):
        coords = walk_coordinates(analysis.ribbon, darts, analysis.basis.nontree_edges)
        image = quotient.project(coords)
        if image != (0, 0):
            candidates.append((image, winding_of_cycle(analysis.ribbon, darts)))

    rs = [w + 2 for _, w in analysis.surface.boundaries]
    values = set()
    for i in range(len(candidates)):
        for j in range(i + 1, len(candidates)):
            (u, wu), (v, wv) = candidates[i], candidates[j]
            det = u[0] * v[1] - u[1] * v[0]
            if abs(det) == 1:
                values.add(math.gcd(wu, wv, *rs))
    if not values:
        raise NoSimpleBasisError("no simple-cycle pair projects to a basis of H1/K")
    if len(values) > 1:
        raise AssertionError(f"gcd invariant depends on the chosen pair: {values}")
    return values.pop()


def arf_invariant(analysis: SurfaceAnalysis, gauss_limit: int = 16) -> int:
    """Arf invariant of the reduced form on (H/K) mod 2, when defined.

    Requires genus at least 2, boundary invariants divisible by 4, and a
    vanishing sigma.  Computed through a symplectic basis and re-checked by
    Gauss sum whenever the quotient dimension allows.
    """
    if analysis.genus < 2:
        raise NotApplicableError("genus")
    rs = [w + 2 for _, w in analysis.surface.boundaries]
    if any(r % 4 for r in rs):
        raise NotApplicableError("boundary mod 4")
    if sigma(analysis) != 0:
        raise NotApplicableError("sigma")

    pairs = quotient_symplectic_basis(analysis.form, analysis.basis.face_classes)
    if len(pairs) != analysis.genus:
        raise AssertionError("symplectic basis size disagrees with the genus")

    def q_bar(vec) -> int:
        value = analysis.q_of_class(vec)
        if value % 2:
            raise AssertionError("sigma = 0 but q takes an odd value")
        return (value // 2) % 2

    arf = sum(q_bar(a) * q_bar(b) for a, b in pairs) % 2

    flat = [v for pair in pairs for v in pair]
    gram = tuple(
        tuple(analysis.form.pairing(x, y) % 2 for y in flat) for x in flat
    )
    space = Z2QuadraticSpace(gram, tuple(q_bar(v) for v in flat))
    check = arf_symplectic(space)
    if space.dim <= gauss_limit:
        gauss = arf_gauss(space)
        if gauss != check:
            raise AssertionError("Gauss-sum Arf disagrees with symplectic Arf")
    if check != arf:
        raise AssertionError("Arf routes disagree")
    return arf


def orbit_invariants(analysis: SurfaceAnalysis) -> OrbitInvariants:
    """Assemble the decision tuple, with gcd/Arf exactly when applicable."""
    s = sigma(analysis)
    gcd_value = gcd_invariant(analysis) if analysis.genus == 1 else None
    arf_value: int | None
    try:
        arf_value = arf_invariant(analysis)
    except NotApplicableError:
        arf_value = None
    return OrbitInvariants(
        genus=analysis.genus,
        boundary=analysis.boundary,
        sigma=s,
        gcd_invariant=gcd_value,
        arf=arf_value,
    )
