"""Integer linear algebra, checked against sympy as an independent oracle."""
from hypothesis import given
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from kklab.lattice import dense_kernel, hnf, integer_kernel, rank, same_lattice, solve_in_hnf

matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)))


def invariant_factors(rows):
    rows = [r for r in rows if any(r)]
    if not rows:
        return []
    snf = smith_normal_form(Matrix(rows), domain=ZZ)
    return sorted(abs(snf[i, i]) for i in range(min(snf.shape)) if snf[i, i] != 0)


@given(matrices)
def test_hnf_same_lattice_as_sympy(m):
    h = hnf(m)
    assert len(h) == Matrix(m).rank()
    assert invariant_factors(h) == invariant_factors(m)
    # every input row lies in the span of h, and conversely h lies in the span of m
    for row in m:
        assert solve_in_hnf(h, row) is not None
    assert same_lattice(h, m)


@given(matrices)
def test_hnf_echelon_shape(m):
    h = hnf(m)
    pivots = [next(j for j, v in enumerate(r) if v) for r in h]
    assert pivots == sorted(set(pivots))
    for i, p in enumerate(pivots):
        assert h[i][p] > 0
        for k in range(i):
            assert 0 <= h[k][p] < h[i][p]


@given(matrices)
def test_kernel_against_sympy(m):
    ncols = len(m[0])
    ker = dense_kernel(m, ncols)
    assert len(ker) == ncols - Matrix(m).rank()
    for v in ker:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)
    # saturated: the kernel lattice has trivial invariant factors
    assert all(f == 1 for f in invariant_factors(ker))
    assert rank(m) == Matrix(m).rank()


def test_integer_kernel_sparse():
    ker = integer_kernel([{"a": 2, "b": -2}], ["a", "b", "c"])
    assert same_lattice(ker, [[1, 1, 0], [0, 0, 1]])
