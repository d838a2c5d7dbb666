from fractions import Fraction
from itertools import combinations
from math import gcd

from hypothesis import given
from hypothesis import strategies as st

from coxkit.linalg import (
    IntegerMatrix,
    determinant,
    hermite_normal_form,
    integer_kernel,
    primitive,
    rational_nullspace,
    rational_rank,
    row_lattice_hnf,
    smith_normal_form,
    solve_rational,
    sparse_rational_rank,
)


def mat(rows):
    return IntegerMatrix.from_rows(rows)


def matrices(max_rows=5, max_cols=5, lo=-9, hi=9):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=m, max_size=m)
        )
    )


def minors_gcd(rows, k):
    m, n = len(rows), len(rows[0])
    g = 0
    for r in combinations(range(m), k):
        for c in combinations(range(n), k):
            g = gcd(g, determinant([[rows[i][j] for j in c] for i in r]))
    return g


def in_row_lattice(v, basis):
    """Integer membership of v in the row lattice of an HNF basis."""
    v = list(v)
    for row in basis:
        piv = next((j for j, x in enumerate(row) if x), None)
        if piv is None:
            continue
        if v[piv] % row[piv]:
            return False
        q = v[piv] // row[piv]
        v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def test_hnf_identity():
    h, u = hermite_normal_form(IntegerMatrix.identity(3))
    assert h == IntegerMatrix.identity(3)
    assert u == IntegerMatrix.identity(3)


def test_hnf_fano44_rows():
    h, _ = hermite_normal_form(mat([[0, 0, 1, 1, 0, 1], [1, 1, 2, 0, 1, 2]]))
    assert h.tolist() == [[1, 1, 0, -2, 1, 0], [0, 0, 1, 1, 0, 1]]


@given(matrices())
def test_hnf_transform_and_idempotence(rows):
    m = mat(rows)
    h, u = hermite_normal_form(m)
    assert u @ m == h
    assert abs(determinant(u.tolist())) == 1
    h2, _ = hermite_normal_form(h)
    assert h2 == h


@given(matrices(3, 5))
def test_hnf_same_row_lattice(rows):
    m = mat(rows)
    basis = [r for r in hermite_normal_form(m)[0].tolist() if any(r)]
    for r in rows:
        assert in_row_lattice(r, basis)
    own = [r for r in hermite_normal_form(mat(rows))[0].tolist() if any(r)]
    for r in basis:
        assert in_row_lattice(r, own)


def test_smith_examples():
    assert smith_normal_form(mat([[0, 0], [0, 0]])).invariants == (0, 0)
    assert smith_normal_form(mat([[2, 4], [6, 8]])).invariants == (2, 4)
    p4 = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [-1, -1, -1, -1]]
    s = smith_normal_form(mat(p4))
    assert s.invariants == (1, 1, 1, 1)
    assert s.torsion() == ()
    assert s.free_rank() == 1


@given(matrices())
def test_smith_minor_gcd(rows):
    s = smith_normal_form(mat(rows))
    m = mat(rows)
    assert s.u @ m @ s.v == s.diag
    prod = 1
    for k, d in enumerate(s.invariants, start=1):
        prod *= d
        assert minors_gcd(rows, k) == prod
    for a, b in zip(s.invariants, s.invariants[1:]):
        if b:
            assert a and b % a == 0


def test_kernel_examples():
    assert integer_kernel(IntegerMatrix.identity(4)).nrows == 0
    from coxkit.fixtures import fixture

    rays = fixture("fano44").rays
    k = integer_kernel(IntegerMatrix.from_rows(rays))
    assert k.tolist() == [[1, 1, 0, -2, 1, 0], [0, 0, 1, 1, 0, 1]]


@given(matrices(6, 4))
def test_kernel_annihilates_and_is_saturated(rows):
    m = mat(rows)
    k = integer_kernel(m)
    assert (k @ m).is_zero() if k.nrows else True
    assert k.nrows == len(rows) - rational_rank(m)
    if k.nrows:
        assert smith_normal_form(k).invariants == (1,) * k.nrows


@given(matrices(5, 4))
def test_kernel_grows_with_dependent_row(rows):
    m = mat(rows)
    extra = [a + b for a, b in zip(rows[0], rows[-1])]
    assert integer_kernel(mat(rows + [extra])).nrows == integer_kernel(m).nrows + 1


def test_rank_examples():
    assert rational_rank(IntegerMatrix.identity(4)) == 4
    u, v = [1, -2, 3], [4, 0, -1, 2]
    assert rational_rank(mat([[a * b for b in v] for a in u])) == 1


@given(
    st.lists(st.lists(st.integers(-5, 5), min_size=2, max_size=2), min_size=5, max_size=5),
    st.lists(st.lists(st.integers(-5, 5), min_size=7, max_size=7), min_size=2, max_size=2),
)
def test_rank_of_product(a, b):
    prod = [[sum(a[i][k] * b[k][j] for k in range(2)) for j in range(7)] for i in range(5)]
    expected = min(rational_rank(mat(a)), rational_rank(mat(b)))
    r = rational_rank(mat(prod))
    assert r <= expected
    if rational_rank(mat(a)) == 2 and rational_rank(mat(b)) == 2:
        assert r == 2


@given(matrices(5, 6))
def test_sparse_rank_agrees(rows):
    sparse = [{j: x for j, x in enumerate(r) if x} for r in rows]
    assert sparse_rational_rank(sparse) == rational_rank(mat(rows))


@given(matrices(4, 5))
def test_rational_nullspace(rows):
    ns = rational_nullspace(rows)
    assert len(ns) == len(rows[0]) - rational_rank(mat(rows))
    for v in ns:
        assert all(sum(Fraction(a) * x for a, x in zip(r, v)) == 0 for r in rows)


def test_solve_and_primitive():
    assert solve_rational([[2, 0], [0, 3]], [1, 1]) == (Fraction(1, 2), Fraction(1, 3))
    assert solve_rational([[1, 1], [1, 1]], [0, 1]) is None
    assert primitive([Fraction(2, 3), Fraction(4, 3)]) == (1, 2)
    assert row_lattice_hnf(mat([[2, 4], [1, 2]])).tolist()[0] == [1, 2]
