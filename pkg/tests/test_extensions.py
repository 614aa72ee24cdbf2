import pytest

from kklab import extensions as ext
from kklab.polynomials import IntPolynomial, NCPolynomial

t = IntPolynomial.var("t")
U = ext.Unitalized


def test_j_basis_of_integers():
    assert ext.j_basis(ext.INTEGERS, 2) == [{("x", "x"): 1, ("x",): -1}]
    J3 = ext.j_basis(ext.INTEGERS, 3)
    assert len(J3) == 2
    TA = ext.tensor_algebra(ext.INTEGERS, 3)
    for v in J3:
        assert TA.counit(v) == {} or all(c == 0 for c in TA.counit(v).values())


def test_loop_classifying_map():
    rho = ext.loop_rho(ext.INTEGERS, 3)
    assert rho.ok
    assert rho({("x", "x"): 1, ("x",): -1}) == t ** 2 - t
    assert rho({("x", "x", "x"): 1, ("x",): -1}) == t ** 3 - t
    for p in rho.images:
        assert p.ev(0) == 0 and p.ev(1) == 0


def test_split_extension_is_trivial():
    rho = ext.classifying_map(ext.split_extension_example(), 4)
    assert all(i == 0 for i in rho.images)


def test_naturality():
    assert ext.loop_naturality_check(3).ok


def test_rewriting_confluent():
    assert ext.qq_confluence_check(6)
    assert ext.qq_normal_form(("u", "u", "v", "v", "v")) == ("u", "v")


def test_qq_rank_and_zero():
    r = ext.qQ_calculus([[U(1), 0], [0, 0]], [[0, 0], [0, 0]])
    assert r.ok and r.k0.rank() == 1
    e = [[U(1), 0], [0, 0]]
    r = ext.qQ_calculus(e, e)
    assert r.ok and r.k0.rank() == 0
    assert r.hom(NCPolynomial.gen("u") - NCPolynomial.gen("v")) == r.hom.zero


def test_unitalization_arithmetic():
    a, b = U(IntPolynomial.var("x"), 2), U(IntPolynomial(3), -1)
    assert (a * b).augmentation() == -2
    assert a * U(0, 1) == a


@pytest.mark.parametrize("example", [ext.polynomial_ring_example, ext.square_zero_example])
def test_graded_homotopies(example):
    _, verdicts = ext.graded_homotopy(*example())
    assert all(v.ok for v in verdicts.values())


def test_amalgamated_maps():
    data = ext.amalgamated_example()
    assert all(v.ok for v in data.verdicts.values())


def test_fiber_product():
    f = lambda p: p.ev(0, "t") if isinstance(p, IntPolynomial) else p
    F = ext.fiber_product(f, f)
    good = F.pair(t + 1, 1 - t)
    assert F.contains(good) and F.pr1(good) == t + 1
    assert not F.contains(ext.FiberPair(t + 1, t))
    with pytest.raises(ValueError):
        F.pair(t + 1, t)


def test_path_algebra_inclusion():
    P = ext.path_algebra(lambda p: p, 3)
    loop = t ** 2 - t
    assert P.contains(P.iota(loop))
