import pytest

from kklab import paths
from kklab.polynomials import IntPolynomial
from kklab.rings import AlgebraHom, AlgebraPresentation

x, t = IntPolynomial.var("x"), IntPolynomial.var("t")
A = AlgebraPresentation(["x"], [])
ZERO = AlgebraHom(A, {"x": IntPolynomial(0)}, IntPolynomial(1))
ID = AlgebraHom(A, {"x": x}, IntPolynomial(1))
H = paths.ElementaryHomotopy(AlgebraHom(A, {"x": x * t}, IntPolynomial(1)))


def test_elementary_homotopy():
    assert paths.check_elementary(H, ZERO, ID).ok
    assert paths.check_elementary(H.reverse(), ID, ZERO).ok
    assert not paths.check_elementary(H, ID, ZERO).ok
    assert paths.flip(x * t) == x - x * t


def test_interval_structure():
    for n in range(4):
        I = paths.interval(n)
        assert len(I.edges) == 2 ** n and len(I.vertices) == 2 ** n + 1
        assert set(I.orientation) <= {1, -1}


def test_concatenation_and_refinement():
    p = paths.SubdividedPath.from_homotopy(H)
    loop = paths.concat(p, p.reverse())
    assert loop.is_valid() and loop.n == 1
    assert loop.start()("x") == 0 and loop.end()("x") == 0
    r = loop.refine_to(3)
    assert r.is_valid() and r.n == 3
    for v in paths.interval(1).vertices:
        assert loop.at_vertex(v)("x") in (0, x)
    ok, element = r.as_power_hom(2)
    assert ok and element


def test_mismatched_pieces_are_rejected():
    p = paths.SubdividedPath.from_homotopy(H)
    with pytest.raises(ValueError):
        paths.concat(p, p)  # p ends at id but starts at 0
    broken = paths.SubdividedPath([H.h, ZERO], 1, "t")
    assert not broken.is_valid()
    assert broken.matching_violation() is not None
    # edges of sd Δ^1 alternate orientation, so the same piece twice is a valid path
    assert paths.SubdividedPath([H.h, H.h], 1, "t").is_valid()


@pytest.mark.parametrize("n", [0, 1, 2])
def test_eta_pastes_to_ring_map(n):
    r = paths.eta_transformation(n, 2)
    assert r.pasting_ok and r.hom_ok and r.endpoint_ok and r.ok


@pytest.mark.parametrize("n", [1, 2])
def test_eta_off_diagonal_variant_fails_to_paste(n):
    assert not paths.eta_transformation(n, 2, "printed").ok
