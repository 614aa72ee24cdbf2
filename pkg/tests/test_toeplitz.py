"""Toeplitz algebra; the product rule is checked against shift matrices."""
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kklab import gamma as G
from kklab import toeplitz as TP
from kklab.polynomials import LaurentPolynomial
from kklab.rings import check_hom
from kklab.toeplitz import ALPHA, BETA, E, ONE, T, TT, tt

N = 10
monos = st.tuples(st.integers(0, 4), st.integers(0, 4))
elements = st.dictionaries(monos, st.integers(-3, 3), max_size=5).map(T)


def shift_matrix(p, q, size):
    """β^p α^q = Σ_i e_{i+p, i+q}."""
    M = [[0] * size for _ in range(size)]
    for i in range(size):
        if i + p < size and i + q < size:
            M[i + p][i + q] = 1
    return M


@given(monos, monos)
def test_mono_mul_against_shift_matrices(x, y):
    big = N + 10
    A, B = shift_matrix(*x, big), shift_matrix(*y, big)
    prod = [[sum(A[i][k] * B[k][j] for k in range(big)) for j in range(N)] for i in range(N)]
    assert prod == [row[:N] for row in shift_matrix(*TP.mono_mul(x, y), big)[:N]]


@given(elements, elements, elements)
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(elements, elements)
def test_hat_is_injective_ring_map(x, y):
    assert TP.hat(x * y) == TP.hat(x) * TP.hat(y)
    assert TP.hat(x + y) == TP.hat(x) + TP.hat(y)
    assert (TP.hat(x) == 0) == (x == 0)


@given(elements)
def test_symbol_kernel_is_finite_matrices(x):
    assert TP.in_Minfty(x) == TP.hat(x).is_finite()
    assert TP.in_Minfty(x) == (TP.pi_laurent(x) == 0)


@given(elements, elements)
def test_symbol_is_ring_map(x, y):
    assert TP.pi_laurent(x * y) == TP.pi_laurent(x) * TP.pi_laurent(y)


@pytest.mark.parametrize("p", range(5))
@pytest.mark.parametrize("q", range(5))
def test_hat_of_matrix_units(p, q):
    x = BETA ** p * ALPHA ** q - BETA ** (p + 1) * ALPHA ** (q + 1)
    assert TP.hat(x) == G.PM.unit(p, q)


def test_basic_relations():
    assert ALPHA * BETA == ONE
    assert BETA * ALPHA != ONE
    assert E * E == E
    assert TP.pi_laurent(ALPHA) == LaurentPolynomial.t(1)
    assert TP.tau0_member(ALPHA - 1) and not TP.tau0_member(ONE)


def test_tensor_ring_axioms():
    rng = random.Random(7)
    for _ in range(20):
        xs = [tt(TP.random_toeplitz(rng), TP.random_toeplitz(rng), rng.randint(0, 2)) for _ in range(3)]
        a, b, c = xs
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_units_are_invertible():
    u1, u1_inv, u2, u2_inv = TP.unit_matrices()
    for u, v in ((u1, u1_inv), (u2, u2_inv)):
        assert u * v == TT(1) and v * u == TT(1)
        assert u.ev(0) == TT(1)


def test_transposed_forms_only_agree_at_endpoints():
    _, u1_inv, u2, u2_inv = TP.unit_matrices()
    v1, v2 = TP.transposed_inverses()
    assert u2 * v2 != TT(1)
    for v, w in ((v1, u1_inv), (v2, u2_inv)):
        assert v.ev(0) == w.ev(0) and v.ev(1) == w.ev(1)


@pytest.mark.parametrize("name", ["psi", "phi1", "phi2", "phi3", "iota", "Phi1", "Phi2"])
def test_named_maps_are_homomorphisms(name):
    assert check_hom(TP.named_maps()[name]).ok


def test_fundamental_suite():
    records = TP.fundamental_suite()
    bad = [r["id"] for r in records if not r["ok"]]
    assert not bad
    ids = {r["id"] for r in records}
    for prefix in "abcdef":
        assert any(i.startswith(prefix + ".") for i in ids)
