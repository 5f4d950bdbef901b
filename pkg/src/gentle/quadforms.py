"""Quadratic forms over GF(2) and Z/4 with Arf invariants and transvections.

A GF(2) quadratic space is (dimension, alternating Gram matrix, values on the
basis); the form extends to every vector through
q(x+y) = q(x) + q(y) + x.y.  The Arf invariant is computed two independent
ways: through a symplectic basis (sum of q(a_i) q(b_i)) and through the Gauss
sum G = sum_x (-1)^q(x), which equals +-2^(n/2) for nondegenerate forms with
the sign deciding Arf.

The Z/4 counterpart stores an even Gram matrix B with B(a,b) = 2(a.b) and
satisfies q(x+y) = q(x) + q(y) + B(x,y) mod 4.  Transvections act by
q(T_a(x)) = q(x) + (q(a) + 2)(a.x).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np


class DegenerateFormError(ValueError):
    pass


class TooLargeError(ValueError):
    pass


class BadParameterError(ValueError):
    pass


GAUSS_DIM_LIMIT = 24


@dataclass(frozen=True)
class Z2QuadraticSpace:
    """Quadratic form over GF(2) given by basis values and alternating Gram."""

    gram: tuple[tuple[int, ...], ...]
    values: tuple[int, ...]

    def __post_init__(self):
        n = len(self.values)
        if len(self.gram) != n or any(len(r) != n for r in self.gram):
            raise ValueError("Gram size does not match value count")
        for i in range(n):
            if self.gram[i][i] % 2:
                raise ValueError("Gram must be alternating (zero diagonal)")
            for j in range(n):
                if (self.gram[i][j] - self.gram[j][i]) % 2:
                    raise ValueError("Gram must be symmetric mod 2")

    @property
    def dim(self) -> int:
        return len(self.values)

    def pairing(self, x, y) -> int:
        return sum(
            (x[i] & 1) and (y[j] & 1) and self.gram[i][j]
            for i in range(self.dim)
            for j in range(self.dim)
        ) % 2

    def q(self, x) -> int:
        total = sum(v for v, xi in zip(self.values, x) if xi & 1)
        for i in range(self.dim):
            if not x[i] & 1:
                continue
            for j in range(i + 1, self.dim):
                if x[j] & 1:
                    total += self.gram[i][j]
        return total % 2

    def direct_sum(self, other: "Z2QuadraticSpace") -> "Z2QuadraticSpace":
        n, m = self.dim, other.dim
        gram = [[0] * (n + m) for _ in range(n + m)]
        for i in range(n):
            for j in range(n):
                gram[i][j] = self.gram[i][j]
        for i in range(m):
            for j in range(m):
                gram[n + i][n + j] = other.gram[i][j]
        return Z2QuadraticSpace(
            tuple(tuple(r) for r in gram), self.values + other.values
        )


def hyperbolic_plane(qa: int = 0, qb: int = 0) -> Z2QuadraticSpace:
    return Z2QuadraticSpace(((0, 1), (1, 0)), (qa % 2, qb % 2))


def arf_symplectic(space: Z2QuadraticSpace) -> int:
    """Arf via a symplectic basis: sum of q(a_i) q(b_i) mod 2."""
    n = space.dim
    if n % 2:
        raise DegenerateFormError("odd dimension cannot carry a nondegenerate form")
    vectors = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        vectors.append(e)
    arf = 0
    while vectors:
        a = vectors.pop(0)
        partner = next((y for y in vectors if space.pairing(a, y)), None)
        if partner is None:
            raise DegenerateFormError("form is degenerate")
        vectors.remove(partner)
        b = partner
        arf += space.q(a) * space.q(b)
        cleaned = []
        for y in vectors:
            y2 = y[:]
            if space.pairing(y2, b):
                y2 = [(u + v) % 2 for u, v in zip(y2, a)]
            if space.pairing(y2, a):
                y2 = [(u + v) % 2 for u, v in zip(y2, b)]
            cleaned.append(y2)
        vectors = cleaned
    return arf % 2


def gauss_sum(space: Z2QuadraticSpace, dim_limit: int = GAUSS_DIM_LIMIT) -> int:
    """Exact G(q) = sum over all vectors of (-1)^q(x), by doubling over basis."""
    n = space.dim
    if n > dim_limit:
        raise TooLargeError(f"dimension {n} exceeds Gauss-sum limit {dim_limit}")
    qs = np.zeros(1, dtype=np.uint8)
    for k in range(n):
        size = qs.shape[0]
        pair_k = np.zeros(size, dtype=np.uint8)
        idx = np.arange(size, dtype=np.uint64)
        for j in range(k):
            if space.gram[j][k] % 2:
                pair_k ^= ((idx >> np.uint64(j)) & np.uint64(1)).astype(np.uint8)
        qs = np.concatenate([qs, (qs ^ pair_k) ^ np.uint8(space.values[k] % 2)])
    ones = int(np.count_nonzero(qs))
    return (1 << n) - 2 * ones


def arf_gauss(space: Z2QuadraticSpace, dim_limit: int = GAUSS_DIM_LIMIT) -> int:
    """Arf via the Gauss sum; checks |G| = 2^(n/2) exactly."""
    n = space.dim
    g = gauss_sum(space, dim_limit)
    if n % 2 or abs(g) != 1 << (n // 2):
        raise DegenerateFormError(f"|G| = {abs(g)} != 2^{n//2}: form is degenerate")
    return 0 if g > 0 else 1


# --- the documented families -------------------------------------------------

def family(kind: str, parameter: int) -> Z2QuadraticSpace:
    """The explicit quadratic spaces used for the glued-surface computations.

    Vn(n): all-ones off-diagonal pairing, q = 0 on the basis; Arf = C(n/2, 2)
    for even n.  Vbar(n): the quotient of V_n (n = 1 mod 4) by its kernel
    vector, presented on the images of the first n-1 basis vectors.  Wk(k):
    dimension 2k with q = 1 on the basis and the triangular beta/gamma
    pairing; Arf = k mod 2 for k != 2 mod 3.  K2(n): the banded pairing with
    band width n/2; Arf = n/2 mod 2 for even n != 2 mod 3.
    """
    if kind == "Vn":
        n = parameter
        if n < 2 or n % 2:
            raise BadParameterError("Vn requires even n >= 2")
        return _v_space(n)
    if kind == "Vbar":
        n = parameter
        if n % 4 != 1:
            raise BadParameterError("Vbar requires n = 1 mod 4")
        v = _v_space(n)
        kernel = (1,) * n
        if v.q(kernel) != 0:
            raise BadParameterError("kernel vector has q != 0; quotient undefined")
        # images of the first n-1 basis vectors present the quotient
        gram = tuple(tuple(v.gram[i][j] for j in range(n - 1)) for i in range(n - 1))
        return Z2QuadraticSpace(gram, v.values[: n - 1])
    if kind == "Wk":
        k = parameter
        if k < 0 or k % 3 == 2:
            raise BadParameterError("Wk requires k >= 0 with k != 2 mod 3")
        n = 2 * k
        gram = [[0] * n for _ in range(n)]
        # basis order: beta_1..beta_k, gamma_1..gamma_k
        for i in range(k):
            for j in range(k):
                if i != j:
                    gram[i][j] = gram[k + i][k + j] = 1
                if i <= j:
                    gram[i][k + j] = gram[k + j][i] = 1
        return Z2QuadraticSpace(tuple(tuple(r) for r in gram), (1,) * n)
    if kind == "K2":
        n = parameter
        if n < 4 or n % 2 or n % 3 == 2:
            raise BadParameterError("K2 requires even n >= 4 with n != 2 mod 3")
        gram = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                val = 1 if j < i + n // 2 else 0
                gram[i][j] = gram[j][i] = val
        return Z2QuadraticSpace(tuple(tuple(r) for r in gram), (0,) * n)
    raise BadParameterError(f"unknown family {kind!r}")


def _v_space(n: int) -> Z2QuadraticSpace:
    gram = tuple(tuple(1 if i != j else 0 for j in range(n)) for i in range(n))
    return Z2QuadraticSpace(gram, (0,) * n)


def family_arf_formula(kind: str, parameter: int) -> int:
    """Closed forms for the families' Arf invariants."""
    if kind == "Vn":
        return comb(parameter // 2, 2) % 2
    if kind == "Vbar":
        return ((parameter - 1) // 4) % 2
    if kind == "Wk":
        return parameter % 2
    if kind == "K2":
        return (parameter // 2) % 2
    raise BadParameterError(f"unknown family {kind!r}")


# --- Z/4 quadratic functions --------------------------------------------------

@dataclass(frozen=True)
class QuadZ4:
    """Quadratic function on (Z/4)^n over an antisymmetric intersection pairing.

    ``pairing`` holds the intersection numbers e_i . e_j mod 4; the quadratic
    relation uses its double B = 2(a.b).  Only B (hence a.b mod 2) enters the
    relation, but transvections need the pairing itself.
    """

    pairing: tuple[tuple[int, ...], ...]
    values: tuple[int, ...]              # q on basis, mod 4

    def __post_init__(self):
        n = len(self.values)
        if len(self.pairing) != n or any(len(r) != n for r in self.pairing):
            raise ValueError("pairing size does not match value count")
        for i in range(n):
            if self.pairing[i][i] % 4:
                raise ValueError("pairing must vanish on the diagonal")
            for j in range(n):
                if (self.pairing[i][j] + self.pairing[j][i]) % 4:
                    raise ValueError("pairing must be antisymmetric mod 4")

    @property
    def rank(self) -> int:
        return len(self.values)

    def dot(self, x, y) -> int:
        return sum(
            xi * self.pairing[i][j] * yj
            for i, xi in enumerate(x) if xi % 4
            for j, yj in enumerate(y) if yj % 4
        ) % 4

    def b(self, x, y) -> int:
        """The even form B(x,y) = 2 (x.y) of the quadratic relation."""
        return (2 * self.dot(x, y)) % 4

    def q(self, x) -> int:
        total = sum(v * xi for v, xi in zip(self.values, x))
        for i in range(self.rank):
            if not x[i] % 4:
                continue
            for j in range(i + 1, self.rank):
                total += x[i] * x[j] * 2 * self.pairing[i][j]
        return total % 4

    def is_even_valued(self) -> bool:
        return all(v % 2 == 0 for v in self.values)


def transvection(form: QuadZ4, a) -> QuadZ4:
    """The composite q o T_a for the transvection T_a(x) = x + (a.x) a.

    T_a preserves the pairing, so the Gram is unchanged and only the basis
    values move: q(T_a(e_i)) = q(e_i) + (q(a) + 2)(a . e_i).
    """
    qa = form.q(a)
    new_values = []
    for i in range(form.rank):
        e = [0] * form.rank
        e[i] = 1
        shift = ((qa + 2) * form.dot(a, e)) % 4
        new_values.append((form.values[i] + shift) % 4)
    return QuadZ4(form.pairing, tuple(new_values))
