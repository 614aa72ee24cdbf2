from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kklab.polynomials import IntPolynomial
from kklab.power import (PowerRing, exponential_failure_check, induced_hom, pointed_power,
                         quotient_exactness_check)
from kklab.simplicial import (SimplicialError, build_standard, product, quotient_with_map,
                              subdivide_times)

t1 = IntPolynomial.var("t1")


# Dimension counts by hand: ℤ^{Δ^n} is a polynomial ring in n variables; a graph of
# intervals glued at vertices carries one polynomial per edge matched at the vertices.
@pytest.mark.parametrize("n", [0, 1, 2, 3])
@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_simplex_rank_is_polynomial_ring(n, d):
    assert PowerRing(build_standard("simplex", n), d).rank() == comb(n + d, d)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_graph_ranks(d):
    # E edges, V vertices, connected: E (d + 1) + V - 2E for d >= 1
    assert PowerRing(build_standard("boundary", 2), d).rank() == 3 * d
    assert PowerRing(build_standard("circle"), d).rank() == d
    sd2, _ = subdivide_times(build_standard("circle"), 2)
    assert PowerRing(sd2, d).rank() == 4 * (d + 1) + 4 - 8


@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_square_rank(d):
    # two triangles glued along the diagonal edge
    assert PowerRing(product(build_standard("simplex", 1), build_standard("simplex", 1)), d).rank() \
        == 2 * comb(d + 2, 2) - (d + 1)


def test_exponential_failure():
    r = exponential_failure_check(2)
    assert r["ok"]
    assert r["triangle_ranks"] == (1, 3, 6)
    assert r["square_ranks"] == (1, 4, 9)


@pytest.mark.parametrize("kind,n", [("simplex", 2), ("boundary", 3), ("circle", 0)])
def test_products_close(kind, n):
    R = PowerRing(build_standard(kind, n), 4)
    assert R.closure_violation() is None
    basis = R.basis()
    for a in basis:
        assert a.is_compatible()
        for b in basis:
            if (a * b).degree() <= 4:
                assert R.contains(a * b)


def test_circle_contents():
    R = PowerRing(build_standard("circle"), 3)
    loop = lambda p: R.element({"e": p, "*": p.subs({"t1": 0})})
    assert R.contains(loop(t1 ** 3 - t1))
    assert not R.contains(loop(t1))
    assert R.coordinates(loop(t1 ** 2 - t1)) is not None


def test_pointed():
    K = build_standard("circle")
    R = pointed_power(K, "*", 3)
    assert R.rank() == PowerRing(K, 3).rank() - 1
    with pytest.raises(SimplicialError):
        pointed_power(K, "e", 2)


@given(st.integers(0, 4))
def test_induced_hom_of_last_vertex_map(d):
    sd, h = subdivide_times(build_standard("simplex", 1), 1)
    f = induced_hom(h, d)
    rows = f.matrix()
    assert len(rows) == f.source.rank()
    for a in f.source.basis():
        for b in f.source.basis():
            if (a * b).degree() <= d:
                assert f(a * b) == f(a) * f(b)


@pytest.mark.parametrize("n,d", [(1, 4), (2, 3)])
def test_quotient_exactness(n, d):
    D = build_standard("simplex", n)
    bd = [x for x in D.all_ids() if len(x) <= n]
    assert quotient_exactness_check(D, bd, "0", d).ok


def test_quotient_map_pullback_lands_in_pointed_ring():
    D1 = build_standard("simplex", 1)
    S, q = quotient_with_map(D1, ["0", "1"])
    f = induced_hom(q, 3, "*", "0")
    assert len(f.matrix()) == f.source.rank() == 2
