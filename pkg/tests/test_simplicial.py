import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kklab.simplicial import (SimplicialError, SimplicialMap, build_standard, find_isomorphism,
                              load_simplicial, normalize_word, product, product_with_projections,
                              quotient, quotient_with_map, subdivide, subdivide_times, surjection_of,
                              word_of)
from math import comb

KINDS = [("simplex", n) for n in range(4)] + [("boundary", n) for n in range(1, 4)] + [("circle", 0)]


@pytest.mark.parametrize("kind,n", KINDS)
def test_standard_objects_valid(kind, n):
    K = build_standard(kind, n)
    assert K.identity_violation() is None
    if kind == "simplex":
        assert K.counts() == tuple(comb(n + 1, k + 1) for k in range(n + 1))
        assert K.euler_characteristic() == 1


@pytest.mark.parametrize("kind,n", KINDS)
def test_subdivision_preserves_euler_characteristic(kind, n):
    K = build_standard(kind, n)
    sdK, h = subdivide(K)
    assert sdK.identity_violation() is None
    assert h.is_valid()
    assert sdK.euler_characteristic() == K.euler_characteristic()
    # vertices of sd K are the nondegenerate simplices of K
    assert len(sdK.vertices()) == sum(K.counts())


@given(st.integers(1, 4))
def test_subdivided_interval(m):
    K, h = subdivide_times(build_standard("simplex", 1), m)
    assert K.counts() == (2 ** m + 1, 2 ** m)
    assert h.is_valid()


def test_subdivided_triangle_counts():
    assert subdivide(build_standard("simplex", 2))[0].counts() == (7, 12, 6)
    assert subdivide_times(build_standard("circle"), 3)[0].counts() == (8, 8)


@given(st.lists(st.integers(0, 4), max_size=5))
def test_degeneracy_words_normalize(word):
    w = normalize_word(word)
    assert list(w) == sorted(set(w), reverse=True)
    n = (w[0] if w else 0) + 2
    assert word_of(surjection_of(w, n)) == w


def test_products():
    D1, D2 = build_standard("simplex", 1), build_standard("simplex", 2)
    assert product(D1, D1).counts() == (4, 5, 2)
    assert product(D1, D2).counts() == (6, 12, 10, 3)
    P, pr1, pr2 = product_with_projections(D1, D1)
    assert pr1.is_valid() and pr2.is_valid()
    assert P.identity_violation() is None


def test_quotients():
    D1 = build_standard("simplex", 1)
    S = quotient(D1, ["0", "1"])
    assert find_isomorphism(S, build_standard("circle")) is not None
    Q, q = quotient_with_map(build_standard("simplex", 2), ["0", "1", "2", "01", "02", "12"])
    assert Q.counts() == (1, 0, 1) and q.is_valid()
    assert subdivide(Q)[0].euler_characteristic() == 2


def test_identity_map_and_composition():
    K = build_standard("simplex", 2)
    sdK, h = subdivide(K)
    ident = SimplicialMap.identity(K)
    assert h.compose(SimplicialMap.identity(sdK)).is_valid()
    assert ident.is_valid()


def test_json_roundtrip(tmp_path):
    K = subdivide(build_standard("circle"))[0]
    path = tmp_path / "K.json"
    path.write_text(json.dumps(K.to_json()))
    L = load_simplicial(path)
    assert L.counts() == K.counts() and find_isomorphism(K, L) is not None


@pytest.mark.parametrize("text", [
    "{",
    "[]",
    '{"simplices": {"0": ["a"], "1": [{"id": "e", "faces": [[[], "a"], [[], "zz"]]}]}}',
    '{"simplices": {"x": []}}',
])
def test_loader_rejects_bad_input(tmp_path, text):
    path = tmp_path / "bad.json"
    path.write_text(text)
    with pytest.raises(SimplicialError):
        load_simplicial(path)


def test_loader_rejects_identity_violation(tmp_path):
    # a 2-simplex whose faces do not agree on shared vertices
    data = {"simplices": {
        "0": ["a", "b", "c"],
        "1": [{"id": "ab", "faces": [[[], "b"], [[], "a"]]},
              {"id": "bc", "faces": [[[], "c"], [[], "b"]]},
              {"id": "ac", "faces": [[[], "c"], [[], "a"]]}],
        "2": [{"id": "abc", "faces": [[[], "bc"], [[], "ab"], [[], "ab"]]}],
    }}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    with pytest.raises(SimplicialError):
        load_simplicial(path)
