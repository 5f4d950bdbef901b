"""Threads, cycles, combinatorial boundary components, and AAG invariants.

The relation ideal induces two injective partial successor maps on arrows:
the forbidden successor (compose to a relation) and the permitted successor
(compose to a nonzero path).  Maximal chains of these maps are the forbidden
and permitted threads; their cycles are the forbidden and permitted cycles.
"Cycle" is taken at arrow level: a cyclic orbit of the successor map, which
may revisit vertices.  This is the reading under which homological smoothness
is exactly the absence of forbidden cycles (a forbidden cycle feeds arbitrarily
long forbidden paths into the Koszul resolution of a vertex simple).

Every vertex carries exactly two forbidden and two permitted incidence slots.
Nontrivial threads and cycles occupy slots through their vertex occurrences;
trivial (idempotent) threads fill whatever remains.  Boundary components are
traced by a deterministic walk over forbidden slots: cross to the partner slot
at the thread's start vertex after the stop, otherwise advance along the
thread and cross at the arrow head.  The walk's alternation condition (first
and last arrows at each junction differ) holds by construction.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from .algebra import GradedGentleAlgebra


@dataclass(frozen=True)
class Thread:
    """A maximal forbidden or permitted path, possibly trivial.

    Arrows are stored in traversal order (first composed arrow first); the
    conventional right-to-left name is the reversed concatenation.  Trivial
    threads record their vertex and a tag distinguishing the two idempotent
    slots an isolated vertex carries.
    """

    kind: str                       # "forbidden" | "permitted"
    arrows: tuple[str, ...]
    grading: int
    vertex: str | None = None       # set for trivial threads only
    tag: int = 0

    @property
    def trivial(self) -> bool:
        return not self.arrows

    @property
    def name(self) -> str:
        if self.trivial:
            return f"e_{self.vertex}"
        return "".join(reversed(self.arrows))

    def vertex_path(self, algebra: GradedGentleAlgebra) -> tuple[str, ...]:
        if self.trivial:
            return (self.vertex,)
        by = algebra.quiver.arrow_by_name
        path = [by[self.arrows[0]].source]
        path.extend(by[a].target for a in self.arrows)
        return tuple(path)


@dataclass(frozen=True)
class CyclePath:
    """A cyclic orbit of a successor map, stored at its canonical rotation."""

    kind: str
    arrows: tuple[str, ...]
    winding: int

    @property
    def name(self) -> str:
        return "".join(reversed(self.arrows)) + "*"


@dataclass(frozen=True)
class BoundaryComponent:
    """One combinatorial boundary component.

    component_type "I" alternates forbidden/permitted threads as pairs
    (f_i, p_i) with shared source at each junction; "II" wraps a permitted
    cycle, "II'" a forbidden cycle.  ``n`` counts forbidden threads and ``w``
    is the winding number.
    """

    component_type: str             # "I" | "II" | "II'"
    pairs: tuple[tuple[Thread, Thread], ...] = ()
    cycle: CyclePath | None = None

    @property
    def n(self) -> int:
        return len(self.pairs)

    @property
    def w(self) -> int:
        if self.cycle is not None:
            return self.cycle.winding
        return sum(f.grading + p.grading for f, p in self.pairs)

    @property
    def aag_pair(self) -> tuple[int, int]:
        return (self.n, self.n - self.w)


@dataclass(frozen=True)
class AagInvariant:
    """Multiset of pairs (n(b), n(b) - w(b)) over boundary components.

    Pairs are kept sorted, so equality is multiset equality.
    """

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(sorted(self.pairs)))

    @cached_property
    def multiset(self) -> Counter:
        return Counter(self.pairs)

    @property
    def genus_sum(self) -> int:
        return sum(n - m + 2 for n, m in self.pairs)


# A slot occurrence: (owner, index into the owner's vertex path).
Occurrence = tuple[object, int]


class ThreadSystem:
    """Complete thread/cycle enumeration with the per-vertex slot structure."""

    def __init__(self, algebra: GradedGentleAlgebra):
        self.algebra = algebra
        forb_chains, forb_cycles = _functional_parts(
            algebra.forbidden_next, algebra.forbidden_prev, algebra
        )
        perm_chains, perm_cycles = _functional_parts(
            algebra.permitted_next, algebra.permitted_prev, algebra
        )
        self.forbidden_cycles = tuple(
            CyclePath("forbidden", arrows, _forbidden_cycle_winding(algebra, arrows))
            for arrows in forb_cycles
        )
        self.permitted_cycles = tuple(
            CyclePath("permitted", arrows, _permitted_cycle_winding(algebra, arrows))
            for arrows in perm_cycles
        )

        forbidden = [
            Thread("forbidden", arrows, _forbidden_grading(algebra, arrows))
            for arrows in forb_chains
        ]
        permitted = [
            Thread("permitted", arrows, _permitted_grading(algebra, arrows))
            for arrows in perm_chains
        ]
        self._forb_slots = self._occupy_slots(forbidden, self.forbidden_cycles)
        self._perm_slots = self._occupy_slots(permitted, self.permitted_cycles)
        forbidden += self._fill_trivial(self._forb_slots, "forbidden", 1)
        permitted += self._fill_trivial(self._perm_slots, "permitted", 0)
        self.forbidden = tuple(forbidden)
        self.permitted = tuple(permitted)

        for v in algebra.quiver.vertices:
            if len(self._forb_slots[v]) != 2 or len(self._perm_slots[v]) != 2:
                raise AssertionError(f"slot bookkeeping broke at vertex {v}")

    def _occupy_slots(self, threads, cycles) -> dict[str, list[Occurrence]]:
        slots: dict[str, list[Occurrence]] = {
            v: [] for v in self.algebra.quiver.vertices
        }
        for t in threads:
            for i, v in enumerate(t.vertex_path(self.algebra)):
                slots[v].append((t, i))
        by = self.algebra.quiver.arrow_by_name
        for c in cycles:
            for i, a in enumerate(c.arrows):
                slots[by[a].source].append((c, i))
        return slots

    def _fill_trivial(self, slots, kind: str, grading: int) -> list[Thread]:
        made = []
        for v in self.algebra.quiver.vertices:
            for tag in range(2 - len(slots[v])):
                t = Thread(kind, (), grading, vertex=v, tag=tag)
                slots[v].append((t, 0))
                made.append(t)
        return made

    def forbidden_partner(self, occ: Occurrence) -> Occurrence:
        owner, i = occ
        if isinstance(owner, Thread):
            v = owner.vertex_path(self.algebra)[i]
        else:
            v = self.algebra.quiver.arrow_by_name[owner.arrows[i]].source
        a, b = self._forb_slots[v]
        return b if occ == a else a

    @staticmethod
    def out_arrow(occ: Occurrence) -> str | None:
        owner, i = occ
        if isinstance(owner, Thread):
            return owner.arrows[i] if i < len(owner.arrows) else None
        return owner.arrows[i]

    def forbidden_occurrence_at_head(self, arrow: str) -> Occurrence:
        """The slot occupied just after traversing ``arrow`` within its owner."""
        owner, i = self._forb_arrow_slot[arrow]
        if isinstance(owner, Thread):
            return (owner, i + 1)
        return (owner, (i + 1) % len(owner.arrows))

    @cached_property
    def _forb_arrow_slot(self) -> dict[str, Occurrence]:
        table: dict[str, Occurrence] = {}
        for t in self.forbidden:
            for i, a in enumerate(t.arrows):
                table[a] = (t, i)
        for c in self.forbidden_cycles:
            for i, a in enumerate(c.arrows):
                table[a] = (c, i)
        return table


def _functional_parts(next_map, prev_map, algebra):
    """Maximal chains and cycles of an injective partial successor map."""
    arrows = [a.name for a in algebra.quiver.arrows]
    placed: set[str] = set()
    chains: list[tuple[str, ...]] = []
    cycles: list[tuple[str, ...]] = []
    for a in arrows:
        if a in placed:
            continue
        back = a
        seen = {a}
        is_cycle = False
        while True:
            p = prev_map.get(back)
            if p is None:
                break
            if p in seen:
                is_cycle = True
                break
            seen.add(p)
            back = p
        if is_cycle:
            cyc = [back]
            x = next_map[back]
            while x != back:
                cyc.append(x)
                x = next_map[x]
            cyc = _canonical_rotation(cyc)
            cycles.append(tuple(cyc))
            placed.update(cyc)
        else:
            chain = [back]
            x = next_map.get(back)
            while x is not None:
                chain.append(x)
                x = next_map.get(x)
            chains.append(tuple(chain))
            placed.update(chain)
    return chains, cycles


def _canonical_rotation(cyc: list[str]) -> list[str]:
    k = cyc.index(min(cyc))
    return cyc[k:] + cyc[:k]


def _forbidden_grading(algebra, arrows) -> int:
    if not arrows:
        return 1
    return sum(algebra.deg(a) for a in arrows) - (len(arrows) - 1)


def _permitted_grading(algebra, arrows) -> int:
    return -sum(algebra.deg(a) for a in arrows)


def _forbidden_cycle_winding(algebra, arrows) -> int:
    return sum(algebra.deg(a) for a in arrows) - len(arrows)


def _permitted_cycle_winding(algebra, arrows) -> int:
    return -sum(algebra.deg(a) for a in arrows)


def enumerate_threads(algebra: GradedGentleAlgebra) -> ThreadSystem:
    """Enumerate all threads and cycles together with the slot structure."""
    return ThreadSystem(algebra)


def is_smooth(algebra: GradedGentleAlgebra) -> tuple[bool, CyclePath | None]:
    """Homological smoothness; returns (flag, forbidden-cycle witness or None)."""
    system = enumerate_threads(algebra)
    if system.forbidden_cycles:
        return False, system.forbidden_cycles[0]
    return True, None


def is_proper(algebra: GradedGentleAlgebra) -> tuple[bool, CyclePath | None]:
    """Properness (finite dimension); returns (flag, permitted-cycle witness)."""
    system = enumerate_threads(algebra)
    if system.permitted_cycles:
        return False, system.permitted_cycles[0]
    return True, None


def boundary_components(
    algebra: GradedGentleAlgebra, system: ThreadSystem | None = None
) -> list[BoundaryComponent]:
    """Partition all thread/cycle slot incidences into boundary components.

    The walk state is a forbidden slot occurrence.  From an occurrence with an
    outgoing arrow, collect that arrow (it extends the current permitted
    stretch) and cross to the partner slot at its head; from an occurrence at
    the end of a thread, collect the thread's stop and cross to the partner
    slot at the thread's start.  Orbits with stops are type I components; the
    stop-free orbits collect exactly the permitted cycles (type II), and the
    forbidden cycles stand alone as type II'.
    """
    if system is None:
        system = enumerate_threads(algebra)
    permitted_by_arrows = {t.arrows: t for t in system.permitted if not t.trivial}
    trivial_pool: dict[str, list[Thread]] = {}
    for t in system.permitted:
        if t.trivial:
            trivial_pool.setdefault(t.vertex, []).append(t)
    cycle_by_rotation = {
        c.arrows: c for c in system.permitted_cycles
    }

    states: list[Occurrence] = []
    for v in algebra.quiver.vertices:
        states.extend(system._forb_slots[v])
    done: set[Occurrence] = set()
    components: list[BoundaryComponent] = []

    for start in states:
        if start in done:
            continue
        events: list[tuple[str, object]] = []
        occ = start
        while True:
            done.add(occ)
            out = system.out_arrow(occ)
            if out is not None:
                events.append(("arrow", out))
                head = system.forbidden_occurrence_at_head(out)
                occ = system.forbidden_partner(head)
            else:
                thread = occ[0]
                events.append(("stop", thread))
                occ = system.forbidden_partner((thread, 0))
            if occ == start:
                break
        components.append(
            _component_from_events(algebra, events, permitted_by_arrows,
                                   trivial_pool, cycle_by_rotation)
        )

    for c in system.forbidden_cycles:
        components.append(BoundaryComponent("II'", cycle=c))

    if permitted_by_arrows or cycle_by_rotation or any(trivial_pool.values()):
        raise AssertionError("thread occurrences left over after tracing")
    return components


def _component_from_events(algebra, events, permitted_by_arrows,
                           trivial_pool, cycle_by_rotation) -> BoundaryComponent:
    stops = [i for i, (k, _) in enumerate(events) if k == "stop"]
    if not stops:
        arrows = tuple(_canonical_rotation([a for _, a in events]))
        cycle = cycle_by_rotation.pop(arrows, None)
        if cycle is None:
            raise AssertionError(f"stray permitted stretch {arrows}")
        return BoundaryComponent("II", cycle=cycle)

    pairs = []
    for j, i in enumerate(stops):
        nxt = stops[(j + 1) % len(stops)]
        f = events[i][1]
        stretch = []
        k = (i + 1) % len(events)
        while k != nxt:
            stretch.append(events[k][1])
            k = (k + 1) % len(events)
        if stretch:
            p = permitted_by_arrows.pop(tuple(stretch), None)
            if p is None:
                raise AssertionError(f"stretch {stretch} is not a permitted thread")
        else:
            v = f.vertex_path(algebra)[0]
            if not trivial_pool.get(v):
                raise AssertionError(f"missing trivial permitted thread at {v}")
            p = trivial_pool[v].pop()
        pairs.append((f, p))
    return BoundaryComponent("I", pairs=tuple(pairs))


def aag_invariants(
    algebra: GradedGentleAlgebra, system: ThreadSystem | None = None
) -> AagInvariant:
    """The multiset {(n(b), n(b) - w(b))} over all boundary components."""
    comps = boundary_components(algebra, system)
    return AagInvariant(tuple(sorted(c.aag_pair for c in comps)))
