import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentle.quadforms import (
    BadParameterError,
    DegenerateFormError,
    QuadZ4,
    TooLargeError,
    Z2QuadraticSpace,
    arf_gauss,
    arf_symplectic,
    family,
    family_arf_formula,
    gauss_sum,
    hyperbolic_plane,
    transvection,
)


def test_hyperbolic_planes():
    assert arf_symplectic(hyperbolic_plane(0, 0)) == 0
    assert arf_symplectic(hyperbolic_plane(1, 1)) == 1
    assert arf_gauss(hyperbolic_plane(1, 1)) == 1


def test_vn_values():
    for n in range(2, 17, 2):
        space = family("Vn", n)
        expected = family_arf_formula("Vn", n)
        assert arf_gauss(space) == expected
        assert arf_symplectic(space) == expected
        assert abs(gauss_sum(space)) == 1 << (n // 2)
    assert family_arf_formula("Vn", 4) == 1


def test_vbar_values():
    for n in (5, 9, 13, 17):
        space = family("Vbar", n)
        expected = ((n - 1) // 4) % 2
        assert arf_gauss(space) == expected == family_arf_formula("Vbar", n)
    with pytest.raises(BadParameterError):
        family("Vbar", 7)


def test_wk_values_and_recursion():
    values = {}
    for k in (0, 1, 3, 4, 6, 7, 8):
        if k % 3 == 2:
            continue
        space = family("Wk", k)
        values[k] = arf_gauss(space)
        assert values[k] == k % 2
        assert arf_symplectic(space) == k % 2
    assert values[1] == 1
    for k in (3, 4, 6, 7):
        if k - 3 in values:
            assert values[k] == (values[k - 3] + 1) % 2
    with pytest.raises(BadParameterError):
        family("Wk", 2)


def test_wk1_shape():
    space = family("Wk", 1)
    assert space.dim == 2 and space.values == (1, 1)
    assert space.gram[0][1] == 1


def test_k2_values():
    for n in (4, 6, 10, 12, 16):
        space = family("K2", n)
        assert arf_gauss(space) == (n // 2) % 2 == family_arf_formula("K2", n)
    assert arf_gauss(family("K2", 6)) == 1
    with pytest.raises(BadParameterError):
        family("K2", 8)  # 8 = 2 mod 3


def test_vn4_gram_shape():
    space = family("Vn", 4)
    assert space.values == (0, 0, 0, 0)
    assert all(
        space.gram[i][j] == (1 if i != j else 0) for i in range(4) for j in range(4)
    )


def test_direct_sum_rule():
    rng = random.Random(7)
    pool = [family("Vn", 4), family("Wk", 1), hyperbolic_plane(1, 1),
            hyperbolic_plane(0, 1), family("Vn", 6)]
    for _ in range(12):
        a, b = rng.choice(pool), rng.choice(pool)
        assert arf_gauss(a.direct_sum(b)) == (arf_gauss(a) + arf_gauss(b)) % 2


def test_gauss_sum_limit():
    with pytest.raises(TooLargeError):
        gauss_sum(family("Vn", 16), dim_limit=10)


def test_degenerate_detection():
    degenerate = Z2QuadraticSpace(((0, 0), (0, 0)), (0, 1))
    with pytest.raises(DegenerateFormError):
        arf_gauss(degenerate)
    with pytest.raises(DegenerateFormError):
        arf_symplectic(degenerate)


def random_quad4(rng, rank):
    pairing = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        for j in range(i + 1, rank):
            v = rng.randrange(4)
            pairing[i][j] = v
            pairing[j][i] = (-v) % 4
    values = tuple(rng.randrange(4) for _ in range(rank))
    return QuadZ4(tuple(tuple(r) for r in pairing), values)


def test_transvection_formula_and_relation():
    rng = random.Random(0)
    for _ in range(10_000):
        rank = rng.randrange(1, 5)
        q = random_quad4(rng, rank)
        a = tuple(rng.randrange(4) for _ in range(rank))
        qt = transvection(q, a)
        x = tuple(rng.randrange(4) for _ in range(rank))
        y = tuple(rng.randrange(4) for _ in range(rank))
        # the composite agrees with q evaluated at T_a(x)
        tx = tuple((xi + q.dot(a, x) * ai) % 4 for xi, ai in zip(x, a))
        assert qt.q(x) == q.q(tx)
        assert qt.q(x) == (q.q(x) + (q.q(a) + 2) * q.dot(a, x)) % 4
        # the quadratic relation survives
        xy = tuple((u + v) % 4 for u, v in zip(x, y))
        assert qt.q(xy) == (qt.q(x) + qt.q(y) + qt.b(x, y)) % 4


def test_transvection_kernel_vector_fixes_q():
    rng = random.Random(1)
    for _ in range(200):
        rank = rng.randrange(1, 4)
        pairing = tuple(tuple(0 for _ in range(rank)) for _ in range(rank))
        q = QuadZ4(pairing, tuple(rng.randrange(4) for _ in range(rank)))
        a = tuple(rng.randrange(4) for _ in range(rank))
        assert transvection(q, a) == q


def surface_like_quad4(rng, genus, kernel_dim):
    """Block form: symplectic 2g block plus a kernel block (boundary classes)."""
    rank = 2 * genus + kernel_dim
    pairing = [[0] * rank for _ in range(rank)]
    for i in range(genus):
        pairing[2 * i][2 * i + 1] = 1
        pairing[2 * i + 1][2 * i] = 3
    values = [rng.randrange(4) for _ in range(rank)]
    return QuadZ4(tuple(tuple(r) for r in pairing), tuple(values))


def quad4_sigma(q):
    return 0 if all(v % 2 == 0 for v in q.values) else 1


def quad4_arf(q, genus, kernel_dim):
    """Arf of q/2 on the symplectic block, when q is even on everything and
    the kernel values vanish mod 4."""
    if quad4_sigma(q):
        return None
    if any(q.values[2 * genus + i] % 4 for i in range(kernel_dim)):
        return None
    pairs = []
    for i in range(genus):
        a = tuple(1 if k == 2 * i else 0 for k in range(q.rank))
        b = tuple(1 if k == 2 * i + 1 else 0 for k in range(q.rank))
        pairs.append((q.q(a) // 2, q.q(b) // 2))
    return sum(x * y for x, y in pairs) % 2


def test_transvection_preserves_orbit_invariants():
    rng = random.Random(2)
    for _ in range(10_000):
        genus = rng.randrange(1, 3)
        kernel_dim = rng.randrange(0, 3)
        q = surface_like_quad4(rng, genus, kernel_dim)
        a = tuple(rng.randrange(4) for _ in range(q.rank))
        qt = transvection(q, a)
        # boundary restriction: values on kernel vectors are untouched
        for i in range(kernel_dim):
            e = tuple(
                1 if k == 2 * genus + i else 0 for k in range(q.rank)
            )
            assert qt.q(e) == q.q(e)
        assert quad4_sigma(qt) == quad4_sigma(q)
        arf_before = quad4_arf(q, genus, kernel_dim)
        arf_after = quad4_arf(qt, genus, kernel_dim)
        if arf_before is not None:
            assert arf_after == arf_before


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4))
def test_random_even_spaces_have_consistent_arf(seed, genus):
    rng = random.Random(seed)
    gram = [[0] * (2 * genus) for _ in range(2 * genus)]
    for i in range(genus):
        gram[2 * i][2 * i + 1] = gram[2 * i + 1][2 * i] = 1
    # random symplectic-looking perturbation: add pairings between blocks
    for i in range(2 * genus):
        for j in range(i + 1, 2 * genus):
            if (j - i) > 1 and rng.random() < 0.3:
                gram[i][j] = gram[j][i] = 1
    values = tuple(rng.randrange(2) for _ in range(2 * genus))
    space = Z2QuadraticSpace(tuple(tuple(r) for r in gram), values)
    try:
        by_basis = arf_symplectic(space)
    except DegenerateFormError:
        return
    assert arf_gauss(space) == by_basis
