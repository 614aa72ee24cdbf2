"""Progression matrices, checked against dense truncations built straight from the terms."""
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kklab import gamma as G
from kklab.gamma import PM

N = 12
B = 4  # coefficient bound for random terms


@st.composite
def raw_terms(draw, max_terms=4):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        if draw(st.booleans()):
            t = ("F", draw(st.integers(0, B)), draw(st.integers(0, B)))
        else:
            t = ("P", draw(st.integers(1, B)), draw(st.integers(0, B)), draw(st.integers(1, B)), draw(st.integers(0, B)))
        terms[t] = terms.get(t, 0) + draw(st.integers(-3, 3))
    return terms


def dense(terms, rows, cols):
    M = [[0] * cols for _ in range(rows)]
    for t, c in terms.items():
        if t[0] == "F":
            if t[1] < rows and t[2] < cols:
                M[t[1]][t[2]] += c
        else:
            _, a, b, cc, d = t
            i = 0
            while a * i + b < rows:
                if cc * i + d < cols:
                    M[a * i + b][cc * i + d] += c
                i += 1
    return M


def matmul(a, b):
    return [[sum(x * y for x, y in zip(r, col)) for col in zip(*b)] for r in a]


@given(raw_terms())
def test_normal_form_preserves_entries(terms):
    assert G.window(PM(terms), N) == dense(terms, N, N)


@given(raw_terms(), raw_terms())
def test_product_against_dense(s, t):
    # row r of a term reaches column at most B r + B, so this inner size is exact
    inner = B * N + B + 1
    expected = matmul(dense(s, N, inner), dense(t, inner, N))
    assert G.window(PM(s) * PM(t), N) == expected


@given(raw_terms(), raw_terms(), raw_terms())
def test_ring_axioms(s, t, u):
    x, y, z = PM(s), PM(t), PM(u)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z
    assert x * PM.identity() == x == PM.identity() * x


@given(raw_terms())
def test_equality_is_entrywise(terms):
    x = PM(terms)
    if x == 0:
        assert all(v == 0 for row in dense(terms, 3 * N, 3 * N) for v in row)
    else:
        assert x.terms
    assert x - x == 0


@given(raw_terms())
def test_transpose(terms):
    x = PM(terms)
    W = G.window(x, N)
    assert G.window(x.transpose(), N) == [list(r) for r in zip(*W)]


def test_sum_ring_relations():
    _, checks = G.sum_ring_data()
    assert "α₁β₁ = 1" in checks
    assert all(checks.values())
    assert G.ALPHA_HAT * G.BETA_HAT == 1
    assert 1 - G.BETA_HAT * G.ALPHA_HAT == PM.unit(0, 0)


def test_oplus_and_associator():
    x, y, z = G.ALPHA_HAT, PM.unit(1, 2), G.BETA_HAT * 3
    U = G.associator()
    assert U * U.transpose() == 1 and U.transpose() * U == 1
    assert U * G.oplus(G.oplus(x, y), z) * U.transpose() == G.oplus(x, G.oplus(y, z))
    assert G.oplus(x, y) * G.oplus(z, x) == G.oplus(x * z, y * x)


@given(st.integers(0, 2 ** 31))
def test_wagoner_identity(seed):
    rng = random.Random(seed)
    samples = [(G.random_progression(rng, 3, 4), G.random_progression(rng, 3, 4))]
    ok, witness = G.wagoner_Q_check(samples)
    assert ok, witness


def test_wagoner_on_windows():
    assert G.wagoner_window_check(G.phi_infinity(G.ALPHA_HAT), G.BETA_HAT, 64)


@pytest.mark.parametrize("x", [G.ALPHA_HAT, G.BETA_HAT, PM.unit(0, 0), PM.identity(), PM.unit(2, 1) - G.ALPHA_HAT])
def test_phi_infinity_fixed_point(x):
    p = G.phi_infinity(x)
    assert G.windows_agree(G.oracle_oplus(x, p), p, 64)


def test_phi_infinity_multiplicative():
    gens = [G.ALPHA_HAT, G.BETA_HAT, PM.unit(0, 0)]
    for x in gens:
        for y in gens:
            assert G.windows_agree(G.phi_infinity(x * y), G.phi_infinity(x) * G.phi_infinity(y), 64)
            ok, M = G.window_product_check(G.phi_infinity(x), G.phi_infinity(y), 64)
            assert ok and M > 0


def test_phi_infinity_satisfies_gamma_conditions():
    assert G.gamma_conditions(G.phi_infinity(G.ALPHA_HAT + G.BETA_HAT), 64)


def test_minfty_split():
    x = PM.unit(3, 1) * 2 + G.ALPHA_HAT
    fin, prog = G.m_infinity_split(x)
    assert fin + prog == x and fin.is_finite() and not prog.is_finite()


def test_wodzicki_blowup():
    vals = [G.wodzicki_blowup(n) for n in (3, 10, 28)]
    assert vals[0] < vals[1] < vals[2]
    assert vals == [G.largest_full_block(n) for n in (3, 10, 28)]
    # nonzeros per row grow with the block size, so no uniform row bound exists
    W = G.wodzicki_window(28)
    assert max(sum(r) for r in W) == 7


def test_json_roundtrip():
    x = G.ALPHA_HAT * 2 - PM.unit(1, 1)
    assert PM.from_json(x.to_json()) == x


def test_bad_terms_rejected():
    with pytest.raises(ValueError):
        PM({("P", 0, 0, 1, 0): 1})
    with pytest.raises(ValueError):
        G.prog(1, -1, 1, 0)
