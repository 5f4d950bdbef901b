"""First homology of the thickened surface from its ribbon graph.

H1 of the surface retracts onto H1 of the graph: a spanning tree gives
fundamental cycles as a free basis, and every closed dart walk (in
particular every boundary face) gets integer coordinates by counting its
net traversals of non-tree edges.

The intersection pairing is computed on explicit curve representatives.
Each graph cycle is drawn on the surface with one chord per visited ribbon
vertex and parallel strands inside shared edge strips, so all crossings
happen inside the vertex disks.  Two chords cross exactly when their four
endpoints interleave in the cyclic boundary order of the disk, and the
sign of a crossing is +1 when the endpoints read first-in, second-in,
first-out, second-out counterclockwise.  Signed values depend on these
conventions only through a global sign; everything downstream consumes the
mod-2 reduction, which is convention-free.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ribbon import RibbonGraph, SurfaceModel

Dart = tuple[int, int]   # (edge index, flip); flip 0 traverses ends[0] -> ends[1]


class DegenerateQuotientError(AssertionError):
    """The mod-2 form on H/K failed to be nondegenerate: upstream bug."""


@dataclass(frozen=True)
class CycleBasis:
    """Fundamental cycles of a spanning tree plus face-walk coordinates."""

    generators: tuple[tuple[Dart, ...], ...]
    nontree_edges: tuple[int, ...]
    tree_edges: tuple[int, ...]
    face_classes: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class IntersectionForm:
    gram: tuple[tuple[int, ...], ...]

    def pairing(self, x, y) -> int:
        return sum(
            xi * self.gram[i][j] * yj
            for i, xi in enumerate(x) if xi
            for j, yj in enumerate(y) if yj
        )

    def mod2_rank(self) -> int:
        rows = [[v % 2 for v in row] for row in self.gram]
        return _gf2_rank(rows)


def dart_endpoints(ribbon: RibbonGraph, dart: Dart):
    e = ribbon.edges[dart[0]]
    tail, head = e.ends if dart[1] == 0 else e.ends[::-1]
    return tail, head


def cycle_basis(ribbon: RibbonGraph, surface: SurfaceModel | None = None) -> CycleBasis:
    """Spanning-tree homology basis; rank = edges - vertices + 1 = 1 - chi."""
    n = len(ribbon.vertices)
    parent: dict[int, Dart | None] = {0: None}
    order = [0]
    tree: list[int] = []
    frontier = [0]
    incident: dict[int, list[tuple[int, int]]] = {v: [] for v in range(n)}
    for ei, e in enumerate(ribbon.edges):
        incident[e.ends[0][0]].append((ei, 0))
        incident[e.ends[1][0]].append((ei, 1))
    while frontier:
        v = frontier.pop(0)
        for ei, flip in incident[v]:
            _, head = dart_endpoints(ribbon, (ei, flip))
            w = head[0]
            if w not in parent:
                parent[w] = (ei, flip)
                tree.append(ei)
                order.append(w)
                frontier.append(w)
    if len(parent) != n:
        raise AssertionError("ribbon graph is not connected")

    tree_set = set(tree)
    nontree = tuple(ei for ei in range(len(ribbon.edges)) if ei not in tree_set)

    def path_to_root(v: int) -> list[Dart]:
        darts = []
        while parent[v] is not None:
            d = parent[v]
            darts.append(d)
            tail, _ = dart_endpoints(ribbon, d)
            v = tail[0]
        return darts  # from v up to the root, each dart pointing down toward v's side

    generators = []
    for ei in nontree:
        tail, head = dart_endpoints(ribbon, (ei, 0))
        up_h = path_to_root(head[0])   # darts oriented away from root, listed head-first
        up_t = path_to_root(tail[0])
        while up_h and up_t and up_h[-1] == up_t[-1]:
            up_h.pop()
            up_t.pop()
        # cycle: e, then head -> lca (reversed darts), then lca -> tail
        darts: list[Dart] = [(ei, 0)]
        darts.extend((d[0], 1 - d[1]) for d in up_h)
        darts.extend(reversed(up_t))
        generators.append(tuple(darts))

    face_classes = []
    if surface is not None:
        for face in surface.faces:
            face_classes.append(
                walk_coordinates(ribbon, face_darts(ribbon, face), nontree)
            )
    return CycleBasis(tuple(generators), nontree, tuple(sorted(tree_set)),
                      tuple(face_classes))


def face_darts(ribbon: RibbonGraph, face) -> tuple[Dart, ...]:
    """The face walk as a closed dart sequence (one dart per crossing)."""
    darts = []
    for vi, pos in face.entries:
        m = ribbon.vertices[vi].valence
        half = (vi, (pos + 1) % m)
        ei = ribbon.edge_at[half]
        flip = 0 if ribbon.edges[ei].ends[0] == half else 1
        darts.append((ei, flip))
    return tuple(darts)


def walk_coordinates(ribbon: RibbonGraph, darts, nontree) -> tuple[int, ...]:
    index = {ei: i for i, ei in enumerate(nontree)}
    coords = [0] * len(nontree)
    for ei, flip in darts:
        if ei in index:
            coords[index[ei]] += 1 if flip == 0 else -1
    return tuple(coords)


def _cycle_visits(ribbon: RibbonGraph, darts):
    """Per-vertex (entry half-edge, exit half-edge) of a closed dart walk."""
    visits = []
    for k, d in enumerate(darts):
        prev = darts[k - 1]
        _, head = dart_endpoints(ribbon, prev)
        tail, _ = dart_endpoints(ribbon, d)
        if head[0] != tail[0]:
            raise ValueError("dart sequence is not a closed walk")
        visits.append((head[0], head, tail))
    return visits


def is_simple_cycle(ribbon: RibbonGraph, darts) -> bool:
    visits = _cycle_visits(ribbon, darts)
    vertices = [v for v, _, _ in visits]
    return len(set(vertices)) == len(vertices)


def intersection_form(ribbon: RibbonGraph, basis: CycleBasis) -> IntersectionForm:
    """Signed intersection Gram matrix on the fundamental-cycle basis."""
    r = basis.rank
    gram = [[0] * r for _ in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            s = _signed_crossings(ribbon, basis.generators[i], basis.generators[j])
            gram[i][j] = s
            gram[j][i] = -s
    return IntersectionForm(tuple(tuple(row) for row in gram))


def _signed_crossings(ribbon: RibbonGraph, c1, c2) -> int:
    """Crossing number of the standard drawings of two simple graph cycles.

    Strand marks on a shared half-edge are ordered by track: track 0 before
    track 1 along the side at the edge's first end, reversed at the second
    end (the strands run parallel through the strip).
    """
    def marks(darts, track):
        table: dict[int, list[tuple]] = {}
        for v, enter, exit_ in _cycle_visits(ribbon, darts):
            table[v] = [_mark(ribbon, enter, track), _mark(ribbon, exit_, track)]
        return table

    m1, m2 = marks(c1, 0), marks(c2, 1)
    total = 0
    for v, (p_in, p_out) in m1.items():
        if v not in m2:
            continue
        q_in, q_out = m2[v]
        total += _chord_sign(p_in, p_out, q_in, q_out)
    return total


def _mark(ribbon: RibbonGraph, half, track: int) -> tuple:
    ei = ribbon.edge_at[half]
    at_first_end = ribbon.edges[ei].ends[0] == half
    sub = track if at_first_end else 1 - track
    return (half[1], sub)


def _chord_sign(p1, p2, q1, q2) -> int:
    """+1 / -1 / 0 by the cyclic pattern of four distinct boundary marks."""
    ring = sorted([(p1, "p1"), (p2, "p2"), (q1, "q1"), (q2, "q2")])
    labels = [lab for _, lab in ring]
    k = labels.index("p1")
    labels = labels[k:] + labels[:k]
    if labels == ["p1", "q1", "p2", "q2"]:
        return 1
    if labels == ["p1", "q2", "p2", "q1"]:
        return -1
    return 0


# --- integer linear algebra -------------------------------------------------

def smith_normal_form(matrix):
    """Return (D, L, R) with D = L @ A @ R, L and R unimodular, D diagonal.

    Textbook elimination with pivoting on the smallest nonzero entry; fine at
    the ranks that occur here (a dozen or so).
    """
    A = [list(row) for row in matrix]
    n = len(A)
    m = len(A[0]) if n else 0
    L = [[int(i == j) for j in range(n)] for i in range(n)]
    R = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        L[i], L[j] = L[j], L[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in R:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        A[dst] = [a + c * b for a, b in zip(A[dst], A[src])]
        L[dst] = [a + c * b for a, b in zip(L[dst], L[src])]

    def add_col(src, dst, c):
        for row in A:
            row[dst] += c * row[src]
        for row in R:
            row[dst] += c * row[src]

    def smallest_pivot(t):
        pivot, best = None, None
        for i in range(t, n):
            for j in range(t, m):
                if A[i][j] and (best is None or abs(A[i][j]) < best):
                    best = abs(A[i][j])
                    pivot = (i, j)
        return pivot

    t = 0
    while t < min(n, m):
        pivot = smallest_pivot(t)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            for i in range(t + 1, n):
                if A[i][t]:
                    add_row(t, i, -(A[i][t] // A[t][t]))
            for j in range(t + 1, m):
                if A[t][j]:
                    add_col(t, j, -(A[t][j] // A[t][t]))
            if any(A[i][t] for i in range(t + 1, n)) or any(
                A[t][j] for j in range(t + 1, m)
            ):
                # a nonzero remainder is strictly smaller; re-pivot on it
                pivot = smallest_pivot(t)
                swap_rows(t, pivot[0])
                swap_cols(t, pivot[1])
                continue
            # enforce the divisibility chain: drag in any entry the pivot
            # does not divide and restart the clearing loop
            culprit = next(
                (
                    (i, j)
                    for i in range(t + 1, n)
                    for j in range(t + 1, m)
                    if A[i][j] % A[t][t]
                ),
                None,
            )
            if culprit is None:
                break
            add_row(culprit[0], t, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            L[t] = [-x for x in L[t]]
        t += 1
    return A, L, R


@dataclass(frozen=True)
class IntegralQuotient:
    """Z^n / span(columns) with all invariant factors 1 (asserted)."""

    rank_image: int
    projection: tuple[tuple[int, ...], ...]  # (n - rank) x n, applied to coords

    def project(self, coords) -> tuple[int, ...]:
        return tuple(sum(r * c for r, c in zip(row, coords)) for row in self.projection)


def smith_quotient_basis(basis: CycleBasis, boundary_classes) -> IntegralQuotient:
    """Quotient of H1 by the boundary subgroup via Smith normal form.

    Boundary classes span a primitive sublattice (invariant factors all 1),
    so the quotient is free; its coordinates are the last rows of L applied
    to generator coordinates.
    """
    n = basis.rank
    if n == 0:
        return IntegralQuotient(0, ())
    cols = [list(c) for c in boundary_classes]
    if not cols:
        A = [[0] for _ in range(n)]
    else:
        A = [[col[i] for col in cols] for i in range(n)]
    D, L, _ = smith_normal_form(A)
    rank = sum(1 for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i])
    for i in range(rank):
        if abs(D[i][i]) != 1:
            raise AssertionError("boundary sublattice is not primitive")
    projection = tuple(tuple(L[i]) for i in range(rank, n))
    return IntegralQuotient(rank, projection)


# --- GF(2) linear algebra ---------------------------------------------------

def _gf2_rank(rows) -> int:
    rows = [row[:] for row in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    r = 0
    while r < len(rows) and col < ncols:
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                rows[i] = [(a + b) % 2 for a, b in zip(rows[i], rows[r])]
        r += 1
        rank += 1
        col += 1
    return rank


def gf2_row_reduce(rows):
    """Reduced row-echelon form over GF(2); returns (rows, pivot columns)."""
    rows = [row[:] for row in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                rows[i] = [(a + b) % 2 for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    return rows[:r], pivots


def quotient_symplectic_basis(form: IntersectionForm, boundary_classes,
                              modulus: int = 2):
    """Symplectic basis of (H/K) mod 2: pairs (a_i, b_i) with a_i.b_j = delta.

    Vectors are returned as integer combinations of the generators.  Raises
    DegenerateQuotientError if the induced form on the quotient has a kernel,
    which would signal an upstream bug.
    """
    if modulus != 2:
        raise ValueError("only the mod-2 quotient form is defined")
    n = len(form.gram)
    _, pivots = gf2_row_reduce([[v % 2 for v in row] for row in boundary_classes])
    free = [j for j in range(n) if j not in pivots]

    reps = []
    for j in free:
        e = [0] * n
        e[j] = 1
        reps.append(e)

    def pair(x, y):
        return form.pairing(x, y) % 2

    basis_pairs = []
    pool = reps[:]
    while pool:
        a = pool.pop(0)
        partner = next((y for y in pool if pair(a, y)), None)
        if partner is None:
            # a pairs to zero with every remaining and every chosen vector,
            # so its image lies in the kernel of the quotient form
            raise DegenerateQuotientError("mod-2 form on H/K is degenerate")
        pool.remove(partner)
        b = partner
        cleaned = []
        for y in pool:
            y2 = y[:]
            if pair(y2, b):
                y2 = [(u + v) % 2 for u, v in zip(y2, a)]
            if pair(y2, a):
                y2 = [(u + v) % 2 for u, v in zip(y2, b)]
            cleaned.append(y2)
        pool = cleaned
        basis_pairs.append((tuple(a), tuple(b)))
    return basis_pairs
