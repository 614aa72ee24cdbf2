from hypothesis import given

from kklab.polynomials import IntPolynomial, LaurentPolynomial, NCPolynomial
from strategies import int_polys, laurents, nc_polys

x, y = IntPolynomial.var("x"), IntPolynomial.var("y")


@given(int_polys(), int_polys(), int_polys())
def test_int_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0


@given(int_polys(), int_polys(), int_polys(variables=("x",)))
def test_subs_is_ring_map(a, b, p):
    f = {"y": p}
    assert (a * b).subs(f) == a.subs(f) * b.subs(f)
    assert (a + b).subs(f) == a.subs(f) + b.subs(f)


def test_int_basics():
    p = (x + 1) ** 2
    assert p == x * x + 2 * x + 1
    assert p.degree() == 2 and p.constant_term() == 1
    assert p.ev(2, "x") == 9
    assert IntPolynomial.from_json(p.to_json()) == p
    assert (x - y).rename({"x": "y"}) == 0


@given(laurents(), laurents(), laurents())
def test_laurent_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a * b).ev(1) == a.ev(1) * b.ev(1)


def test_laurent_units():
    t = LaurentPolynomial.t
    assert t(3) * t(-3) == 1
    assert (t(2) - t(-1)).ev(1) == 0


@given(nc_polys(), nc_polys(), nc_polys())
def test_nc_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


def test_nc_noncommutative():
    a, b = NCPolynomial.gen("a"), NCPolynomial.gen("b")
    assert a * b != b * a
    assert (a * b - b * a).degree() == 2
    assert (a * b + a).truncate(1) == a
