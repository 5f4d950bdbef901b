"""Graded gentle algebras: representation, validation, random instances, Koszul duals.

A gentle algebra is a quiver with quadratic monomial relations subject to four
local axioms: at most two arrows in and out of every vertex, relations generated
by composable arrow pairs, and for every arrow at most one relation partner and
at most one non-relation partner on each side.  Instances are immutable; all
functions here are pure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping


class InvalidGentleError(ValueError):
    """Raised when input data violates the gentle axioms.

    Carries the full list of violations in ``violations``.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class NotProperError(ValueError):
    """Operation requires a proper (finite-dimensional) algebra."""


class NotDegreeZeroError(ValueError):
    """Operation requires all arrow degrees to be zero."""


class ExhaustedAttemptsError(RuntimeError):
    """Rejection sampling failed to meet the requested flags within budget."""


@dataclass(frozen=True)
class Violation:
    axiom: str  # not_composable | too_many_arrows | axiom3 | axiom4 | disconnected
    witness: tuple

    def __str__(self):
        return f"{self.axiom}{self.witness}"


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    """Finite quiver with named vertices and arrows.

    Vertex and arrow order is preserved as given; all derived iteration is
    deterministic in that order.
    """

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    @cached_property
    def arrow_by_name(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    @cached_property
    def outgoing(self) -> dict[str, tuple[Arrow, ...]]:
        out: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            out[a.source].append(a)
        return {v: tuple(lst) for v, lst in out.items()}

    @cached_property
    def incoming(self) -> dict[str, tuple[Arrow, ...]]:
        inc: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            inc[a.target].append(a)
        return {v: tuple(lst) for v, lst in inc.items()}

    def undirected_components(self) -> list[set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        seen: set[str] = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(comp)
        return comps


@dataclass(frozen=True, eq=False)
class GradedGentleAlgebra:
    """A validated Z-graded gentle algebra.

    ``relations`` holds ordered pairs (b, a) meaning the composition b∘a (a
    first, then b; paths compose right to left) lies in the relation ideal.
    ``degree`` assigns an integer degree to every arrow.
    """

    quiver: Quiver
    relations: frozenset[tuple[str, str]]
    degree: Mapping[str, int] = field(default_factory=dict)

    def __eq__(self, other):
        if not isinstance(other, GradedGentleAlgebra):
            return NotImplemented
        return (
            self.quiver == other.quiver
            and self.relations == other.relations
            and dict(self.degree) == dict(other.degree)
        )

    def deg(self, arrow_name: str) -> int:
        return self.degree.get(arrow_name, 0)

    @cached_property
    def forbidden_next(self) -> dict[str, str]:
        """arrow a -> the unique arrow b with (b, a) in the relation ideal."""
        nxt: dict[str, str] = {}
        for b, a in self.relations:
            nxt[a] = b
        return nxt

    @cached_property
    def forbidden_prev(self) -> dict[str, str]:
        prv: dict[str, str] = {}
        for b, a in self.relations:
            prv[b] = a
        return prv

    @cached_property
    def permitted_next(self) -> dict[str, str]:
        """arrow a -> the unique composable arrow b with ba outside the ideal."""
        nxt: dict[str, str] = {}
        for a in self.quiver.arrows:
            for b in self.quiver.outgoing[a.target]:
                if (b.name, a.name) not in self.relations:
                    nxt[a.name] = b.name
        return nxt

    @cached_property
    def permitted_prev(self) -> dict[str, str]:
        prv: dict[str, str] = {}
        for a, b in self.permitted_next.items():
            prv[b] = a
        return prv

    def is_degree_zero(self) -> bool:
        return all(self.deg(a.name) == 0 for a in self.quiver.arrows)


def check_gentle(
    vertices: Iterable[str],
    arrows: Iterable[tuple[str, str, str]],
    relations: Iterable[tuple[str, str]],
) -> list[Violation]:
    """Return all gentle-axiom violations of the raw data (empty if valid).

    Raises ValueError for structurally malformed input (duplicate ids, unknown
    references); those are preconditions, not axiom violations.
    """
    vertices = list(vertices)
    if len(set(vertices)) != len(vertices):
        raise ValueError("duplicate vertex ids")
    vset = set(vertices)
    arrow_list = [Arrow(*t) for t in arrows]
    names = [a.name for a in arrow_list]
    if len(set(names)) != len(names):
        raise ValueError("duplicate arrow ids")
    by_name = {a.name: a for a in arrow_list}
    for a in arrow_list:
        if a.source not in vset or a.target not in vset:
            raise ValueError(f"arrow {a.name} references undeclared vertex")
    rel_list = list(dict.fromkeys(tuple(r) for r in relations))
    for b, a in rel_list:
        if b not in by_name or a not in by_name:
            raise ValueError(f"relation ({b},{a}) references unknown arrow")

    violations: list[Violation] = []
    quiver = Quiver(tuple(vertices), tuple(arrow_list))

    for b, a in rel_list:
        if by_name[b].source != by_name[a].target:
            violations.append(Violation("not_composable", (b, a)))
    for v in vertices:
        if len(quiver.incoming[v]) > 2:
            violations.append(Violation("too_many_arrows", (v, "in")))
        if len(quiver.outgoing[v]) > 2:
            violations.append(Violation("too_many_arrows", (v, "out")))

    rels = set(rel_list)
    for a in arrow_list:
        succ_in = sorted(b for b, x in rels if x == a.name)
        pred_in = sorted(x for b, x in rels if b == a.name)
        if len(succ_in) > 1:
            violations.append(Violation("axiom3", (a.name, *succ_in)))
        if len(pred_in) > 1:
            violations.append(Violation("axiom3", (a.name, *pred_in)))
        succ_out = sorted(
            b.name for b in quiver.outgoing.get(a.target, ())
            if (b.name, a.name) not in rels
        )
        pred_out = sorted(
            b.name for b in quiver.incoming.get(a.source, ())
            if (a.name, b.name) not in rels
        )
        if len(succ_out) > 1:
            violations.append(Violation("axiom4", (a.name, *succ_out)))
        if len(pred_out) > 1:
            violations.append(Violation("axiom4", (a.name, *pred_out)))

    comps = quiver.undirected_components()
    if len(comps) > 1:
        violations.append(
            Violation("disconnected", tuple(tuple(sorted(c)) for c in comps))
        )
    return violations


def validate_gentle(
    vertices: Iterable[str],
    arrows: Iterable[tuple[str, str, str]],
    relations: Iterable[tuple[str, str]],
    degree: Mapping[str, int] | None = None,
) -> GradedGentleAlgebra:
    """Validate raw quiver data against the gentle axioms.

    Returns the immutable algebra, or raises InvalidGentleError carrying one
    Violation per failed axiom, each with a witness (vertex or arrow pair).
    """
    vertices = tuple(vertices)
    arrows = tuple(tuple(t) for t in arrows)
    violations = check_gentle(vertices, arrows, relations)
    if violations:
        raise InvalidGentleError(violations)
    quiver = Quiver(vertices, tuple(Arrow(*t) for t in arrows))
    for name in degree or {}:
        if name not in quiver.arrow_by_name:
            raise ValueError(f"degree given for unknown arrow {name}")
    deg = {k: v for k, v in (degree or {}).items() if v != 0}
    return GradedGentleAlgebra(quiver, frozenset(tuple(r) for r in relations), deg)


def serialize(algebra: GradedGentleAlgebra) -> dict:
    """Plain-data form of an algebra; validate_gentle(**serialize(A)) == A."""
    return {
        "vertices": list(algebra.quiver.vertices),
        "arrows": [(a.name, a.source, a.target) for a in algebra.quiver.arrows],
        "relations": sorted(algebra.relations),
        "degree": {a.name: algebra.deg(a.name) for a in algebra.quiver.arrows},
    }


def _has_functional_cycle(next_map: Mapping[str, str]) -> bool:
    seen_done: set[str] = set()
    for start in next_map:
        if start in seen_done:
            continue
        path = []
        on_path: set[str] = set()
        a = start
        while a is not None and a not in seen_done:
            if a in on_path:
                return True
            on_path.add(a)
            path.append(a)
            a = next_map.get(a)
        seen_done.update(path)
    return False


def koszul_dual(algebra: GradedGentleAlgebra) -> GradedGentleAlgebra:
    """Quadratic (Koszul) dual of a proper, degree-zero gentle algebra.

    Same vertices, all arrows reversed, and relations complemented: the
    reversed pair is a relation exactly when the original composition was not.
    Every dual arrow receives degree 1 (path-length grading).  The dual of a
    proper algebra is homologically smooth.
    """
    if not algebra.is_degree_zero():
        raise NotDegreeZeroError("Koszul dual requires grading concentrated in degree 0")
    if _has_functional_cycle(algebra.permitted_next):
        raise NotProperError("Koszul dual requires a proper algebra (no permitted cycles)")

    q = algebra.quiver
    dual_arrows = [(a.name, a.target, a.source) for a in q.arrows]
    dual_rels = []
    for a in q.arrows:
        for b in q.outgoing[a.target]:
            # composition b∘a in the original becomes a∘b between reversed arrows
            if (b.name, a.name) not in algebra.relations:
                dual_rels.append((a.name, b.name))
    return validate_gentle(
        q.vertices, dual_arrows, dual_rels, {a.name: 1 for a in q.arrows}
    )


def random_gentle(
    seed: int,
    max_vertices: int,
    max_degree: int = 0,
    *,
    smooth: bool = False,
    proper: bool = False,
    max_attempts: int = 400,
) -> GradedGentleAlgebra:
    """Deterministic random gentle algebra; smooth/proper by rejection sampling.

    The quiver is grown from a random spanning tree (so it is always connected)
    and extra arrows are added while in/out valences stay at most 2.  Relations
    are chosen independently per vertex among the pairings the axioms allow.
    Raises ExhaustedAttemptsError if the flags cannot be met within budget.
    """
    if max_vertices < 1 or max_degree < 0:
        raise ValueError("bounds must be at least 1 vertex and degree >= 0")
    rng = random.Random(seed)
    for _ in range(max_attempts):
        algebra = _sample_gentle(rng, max_vertices, max_degree)
        if smooth and _has_functional_cycle(algebra.forbidden_next):
            continue
        if proper and _has_functional_cycle(algebra.permitted_next):
            continue
        return algebra
    raise ExhaustedAttemptsError(
        f"no instance with smooth={smooth} proper={proper} after {max_attempts} tries (seed={seed})"
    )


def _sample_gentle(rng: random.Random, max_vertices: int, max_degree: int) -> GradedGentleAlgebra:
    n = rng.randint(1, max_vertices)
    vertices = [f"v{i}" for i in range(n)]
    out_free = {v: 2 for v in vertices}
    in_free = {v: 2 for v in vertices}
    arrows: list[tuple[str, str, str]] = []

    def add_arrow(src: str, tgt: str) -> None:
        arrows.append((f"a{len(arrows)}", src, tgt))
        out_free[src] -= 1
        in_free[tgt] -= 1

    # spanning tree keeps the quiver connected
    order = vertices[:]
    rng.shuffle(order)
    for i, v in enumerate(order[1:], start=1):
        choices = [
            (u, v) for u in order[:i] if out_free[u] > 0 and in_free[v] > 0
        ] + [
            (v, u) for u in order[:i] if out_free[v] > 0 and in_free[u] > 0
        ]
        if not choices:
            return _sample_gentle(rng, max_vertices, max_degree)  # dead layout, rare
        add_arrow(*rng.choice(choices))

    extra = rng.randint(0, n)
    for _ in range(extra):
        srcs = [v for v in vertices if out_free[v] > 0]
        tgts = [v for v in vertices if in_free[v] > 0]
        if not srcs or not tgts:
            break
        add_arrow(rng.choice(srcs), rng.choice(tgts))

    quiver = Quiver(tuple(vertices), tuple(Arrow(*t) for t in arrows))
    relations: list[tuple[str, str]] = []
    for v in vertices:
        ins = list(quiver.incoming[v])
        outs = list(quiver.outgoing[v])
        if len(ins) == 1 and len(outs) == 1:
            if rng.random() < 0.5:
                relations.append((outs[0].name, ins[0].name))
        elif len(ins) == 1 and len(outs) == 2:
            relations.append((rng.choice(outs).name, ins[0].name))
        elif len(ins) == 2 and len(outs) == 1:
            relations.append((outs[0].name, rng.choice(ins).name))
        elif len(ins) == 2 and len(outs) == 2:
            perm = rng.random() < 0.5
            relations.append((outs[0].name, ins[0 if perm else 1].name))
            relations.append((outs[1].name, ins[1 if perm else 0].name))

    degree = {a[0]: rng.randint(-max_degree, max_degree) for a in arrows}
    return validate_gentle(vertices, arrows, relations, degree)
