from hypothesis import given
from hypothesis import strategies as st

from kklab.polynomials import IntPolynomial, NCPolynomial
from kklab.rings import (AlgebraHom, AlgebraPresentation, CrossedProduct, RingMatrix, check_hom,
                         matrix_inverse_adjugate, morita_check, rotation_homotopy_W)
from strategies import int_polys

t = IntPolynomial.var("t")
ZERO, ONE = IntPolynomial(0), IntPolynomial(1)


def test_rotation_homotopy():
    W, record = rotation_homotopy_W()
    assert all(record[k] for k in ("ev0_is_identity", "ev1_is_rotation", "det_is_one", "inverse_checked"))
    assert W.det() == 1
    assert W.map(lambda p: p.ev(1)) == RingMatrix([[ZERO, -ONE], [ONE, ZERO]], ZERO, ONE)
    assert W * matrix_inverse_adjugate(W) == RingMatrix.identity(2, ZERO, ONE)


@given(int_polys(variables=("t",)), int_polys(variables=("t",)))
def test_elementary_products_invert(p, q):
    M = RingMatrix([[ONE, p], [ZERO, ONE]], ZERO, ONE) * RingMatrix([[ONE, ZERO], [q, ONE]], ZERO, ONE)
    assert M.det() == 1
    assert M * matrix_inverse_adjugate(M) == RingMatrix.identity(2, ZERO, ONE)


@given(int_polys(), int_polys())
def test_crossed_product(a, b):
    swap = {"x": IntPolynomial.var("y"), "y": IntPolynomial.var("x")}
    cp = CrossedProduct(["x", "y"], swap, swap)
    A, B = cp.const(a), cp.const(b)
    assert cp.t(1) * A * cp.t(-1) == cp.const(cp.sigma(a))
    assert (A * cp.t(1)) * (B * cp.t(2)) == A * (cp.t(1) * B) * cp.t(2)
    assert cp.t(3) * cp.t(-3) == cp.const(ONE)


def test_morita():
    x = IntPolynomial.var("x")
    assert morita_check([ONE, ZERO], [ONE, x], [x, x + 1, ONE], ZERO, ONE).ok


def test_check_hom_rejects_bad_map():
    P = AlgebraPresentation(["a", "b"], [NCPolynomial.word("a", "b") - 1])
    good = AlgebraHom(P, {"a": ONE, "b": ONE}, ONE)
    bad = AlgebraHom(P, {"a": t, "b": t}, ONE)
    assert check_hom(good).ok
    assert not check_hom(bad).ok
