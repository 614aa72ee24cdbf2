"""Normal forms in the Toeplitz ring τ = ℤ⟨α, β | αβ = 1⟩ and in (τ⊗τ)[t].

Every element of τ is uniquely ``Σ c_{pq} β^p α^q``; products follow
``(β^p α^q)(β^r α^s) = β^{p + max(r-q, 0)} α^{s + max(q-r, 0)}``.
"""
from __future__ import annotations

import random
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from .gamma import ProgressionMatrix
from .polynomials import LaurentPolynomial, NCPolynomial
from .rings import AlgebraHom, AlgebraPresentation, check_hom

Mono = Tuple[int, int]


def mono_mul(x: Mono, y: Mono) -> Mono:
    p, q = x
    r, s = y
    return p + max(r - q, 0), s + max(q - r, 0)


def _add_into(out: dict, key, c: int) -> None:
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


class ToeplitzElement:
    """``Σ c_{pq} β^p α^q`` stored as ``{(p, q): c}``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Mono, int]] = None):
        if isinstance(terms, int):
            terms = {(0, 0): terms}
        self.terms: Dict[Mono, int] = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def mono(cls, p: int, q: int, c: int = 1) -> "ToeplitzElement":
        return cls({(p, q): c})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, ToeplitzElement):
            return x
        if isinstance(x, int):
            return cls({(0, 0): x})
        return NotImplemented

    def __add__(self, other):
        other = ToeplitzElement.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(out, k, c)
        return ToeplitzElement(out)

    __radd__ = __add__

    def __neg__(self):
        return ToeplitzElement({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = ToeplitzElement.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = ToeplitzElement.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = ToeplitzElement.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: Dict[Mono, int] = {}
        for x, c in self.terms.items():
            for y, d in other.terms.items():
                _add_into(out, mono_mul(x, y), c * d)
        return ToeplitzElement(out)

    def __rmul__(self, other):
        other = ToeplitzElement.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self

    def __pow__(self, n: int):
        out = ToeplitzElement(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = ToeplitzElement.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{_mono_str(k)}" if c != 1 else _mono_str(k) for k, c in sorted(self.terms.items()))


def _mono_str(k: Mono) -> str:
    p, q = k
    parts = []
    if p:
        parts.append("β" if p == 1 else f"β^{p}")
    if q:
        parts.append("α" if q == 1 else f"α^{q}")
    return "".join(parts) or "1"


T = ToeplitzElement
ALPHA = T.mono(0, 1)
BETA = T.mono(1, 0)
ONE = T(1)
E = ONE - BETA * ALPHA  # 1 - βα


def tau_multiply(x: ToeplitzElement, y: ToeplitzElement) -> ToeplitzElement:
    return x * y


def pi_laurent(x: ToeplitzElement) -> LaurentPolynomial:
    """``β^p α^q ↦ t^{q-p}``."""
    out: Dict[int, int] = {}
    for (p, q), c in x.terms.items():
        out[q - p] = out.get(q - p, 0) + c
    return LaurentPolynomial(out)


def in_Minfty(x: ToeplitzElement) -> bool:
    return not pi_laurent(x)


def tau0_member(x: ToeplitzElement) -> bool:
    return pi_laurent(x).ev(1) == 0


def hat(x: ToeplitzElement) -> ProgressionMatrix:
    """``β^p α^q ↦ Σ_j e_{j+p, j+q}``."""
    return ProgressionMatrix({("P", 1, p, 1, q): c for (p, q), c in x.terms.items()})


def random_toeplitz(rng: random.Random, max_terms: int = 4, bound: int = 4) -> ToeplitzElement:
    out: Dict[Mono, int] = {}
    for _ in range(rng.randint(0, max_terms)):
        _add_into(out, (rng.randint(0, bound), rng.randint(0, bound)), rng.choice([-2, -1, 1, 2, 3]))
    return T(out)


TAU = AlgebraPresentation(["alpha", "beta"], [NCPolynomial.word("alpha", "beta") - 1])


# (τ ⊗ τ)[t]

TKey = Tuple[Mono, Mono, int]


class TensorToeplitz:
    """Elements of ``(τ⊗τ)[t]`` as ``{((p,q), (r,s), k): c}`` for ``c β^pα^q ⊗ β^rα^s t^k``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[TKey, int]] = None):
        if isinstance(terms, int):
            terms = {((0, 0), (0, 0), 0): terms}
        self.terms: Dict[TKey, int] = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def tensor(cls, x: ToeplitzElement, y: ToeplitzElement, k: int = 0) -> "TensorToeplitz":
        out: Dict[TKey, int] = {}
        for a, c in ToeplitzElement.coerce(x).terms.items():
            for b, d in ToeplitzElement.coerce(y).terms.items():
                _add_into(out, (a, b, k), c * d)
        return cls(out)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, TensorToeplitz):
            return x
        if isinstance(x, int):
            return cls({((0, 0), (0, 0), 0): x})
        return NotImplemented

    def __add__(self, other):
        other = TensorToeplitz.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(out, k, c)
        return TensorToeplitz(out)

    __radd__ = __add__

    def __neg__(self):
        return TensorToeplitz({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = TensorToeplitz.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = TensorToeplitz.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return TensorToeplitz({k: c * other for k, c in self.terms.items()})
        if not isinstance(other, TensorToeplitz):
            return NotImplemented
        out: Dict[TKey, int] = {}
        for (a, b, k), c in self.terms.items():
            for (a2, b2, k2), d in other.terms.items():
                _add_into(out, (mono_mul(a, a2), mono_mul(b, b2), k + k2), c * d)
        return TensorToeplitz(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        other = TensorToeplitz.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def ev(self, value: int) -> "TensorToeplitz":
        out: Dict[TKey, int] = {}
        for (a, b, k), c in self.terms.items():
            _add_into(out, (a, b, 0), c * value ** k)
        return TensorToeplitz(out)

    def t_degree(self) -> int:
        return max((k for _, _, k in self.terms), default=-1)

    def pi_first(self) -> Dict[Tuple[int, Mono, int], int]:
        """``(π⊗1)``: the image in ``ℤ[t^{±1}] ⊗ τ[t]``, keyed by (Laurent exponent, τ-monomial, t-power)."""
        out: Dict[Tuple[int, Mono, int], int] = {}
        for ((p, q), b, k), c in self.terms.items():
            _add_into(out, (q - p, b, k), c)
        return out

    def pi_both(self) -> Dict[Tuple[int, int, int], int]:
        out: Dict[Tuple[int, int, int], int] = {}
        for ((p, q), (r, s), k), c in self.terms.items():
            _add_into(out, (q - p, s - r, k), c)
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b, k), c in sorted(self.terms.items()):
            s = f"{_mono_str(a)}⊗{_mono_str(b)}" + (f"·t^{k}" if k else "")
            parts.append(s if c == 1 else f"{c}*{s}")
        return " + ".join(parts)


TT = TensorToeplitz


def tensor_multiply(x: TensorToeplitz, y: TensorToeplitz) -> TensorToeplitz:
    return x * y


def tt(x, y=1, k: int = 0) -> TensorToeplitz:
    return TT.tensor(T.coerce(x), T.coerce(y), k)


def corner(i: int, j: int, x: TensorToeplitz) -> TensorToeplitz:
    """``e_{ij} ⊗ x ↦ β^i (1-βα) α^j ⊗ x`` for i, j ∈ {0, 1}; x lives in ``1 ⊗ τ[t]``."""
    return tt(BETA ** i * E * ALPHA ** j) * x


def embed_2x2(m: Sequence[Sequence[TensorToeplitz]]) -> TensorToeplitz:
    """A 2×2 matrix over ``τ[t]`` placed in the corner, plus the complementary ``β²α² ⊗ 1``."""
    out = tt(BETA ** 2 * ALPHA ** 2)
    for i in range(2):
        for j in range(2):
            out = out + corner(i, j, m[i][j])
    return out


def second(x: ToeplitzElement, poly: Mapping[int, int] = None) -> TensorToeplitz:
    """``1 ⊗ x·p(t)`` with ``p`` given as ``{power: coeff}``."""
    poly = poly or {0: 1}
    out = TT()
    for k, c in poly.items():
        out = out + TT.tensor(ONE, x, k) * c
    return out


def _unit_blocks():
    one = second(ONE)
    ba = second(BETA * ALPHA)
    b = second(BETA)
    a = second(ALPHA)
    t2 = second(ONE, {2: 1})
    t = second(ONE, {1: 1})
    c = second(ONE, {3: 1, 1: -2})  # t³ - 2t
    return one, ba, b, a, t2, t, c


def unit_matrices():
    """The units ``u_1, u_2`` with their two-sided inverses.

    The inverses negate the off-diagonal entries; the transposed forms agree with them
    only at t = 0 and t = 1 (see ``transposed_inverses``).
    """
    one, ba, b, a, t2, t, c = _unit_blocks()
    u1 = embed_2x2([[one - t2 * ba, c * b], [t * a, one - t2]])
    u1_inv = embed_2x2([[one - t2 * ba, -c * b], [-t * a, one - t2]])
    u2 = embed_2x2([[one - t2, c], [t, one - t2]])
    u2_inv = embed_2x2([[one - t2, -c], [-t, one - t2]])
    return u1, u1_inv, u2, u2_inv


def transposed_inverses():
    """Candidate inverses obtained by swapping the off-diagonal polynomials of ``u_i``."""
    one, ba, b, a, t2, t, c = _unit_blocks()
    v1 = embed_2x2([[one - t2 * ba, t * b], [c * a, one - t2]])
    v2 = embed_2x2([[one - t2, t], [c, one - t2]])
    return v1, v2


def named_maps() -> Dict[str, AlgebraHom]:
    """ψ, φ₁, φ₂, φ₃, Φ₁, Φ₂ and the corner inclusion ι, as maps out of τ."""
    a2, b2 = ALPHA ** 2, BETA ** 2
    psi_a, psi_b = tt(BETA * a2), tt(b2 * ALPHA)
    maps = {
        "psi": ({"alpha": psi_a, "beta": psi_b}, tt(BETA * ALPHA)),
        "phi1": ({"alpha": psi_a + tt(E, ALPHA), "beta": psi_b + tt(E, BETA)}, TT(1)),
        "phi2": ({"alpha": tt(ALPHA), "beta": tt(BETA)}, TT(1)),
        "phi3": ({"alpha": psi_a + tt(E), "beta": psi_b + tt(E)}, TT(1)),
        "iota": ({"alpha": tt(E, ALPHA), "beta": tt(E, BETA)}, tt(E)),
    }
    u1, u1_inv, u2, u2_inv = unit_matrices()
    maps["Phi1"] = ({"alpha": tt(ALPHA) * u1, "beta": u1_inv * tt(BETA)}, TT(1))
    maps["Phi2"] = ({"alpha": tt(ALPHA) * u2, "beta": u2_inv * tt(BETA)}, TT(1))
    return {name: AlgebraHom(TAU, imgs, one, TT(), name) for name, (imgs, one) in maps.items()}


def tau0_sample() -> List[ToeplitzElement]:
    base = [ALPHA - 1, BETA - 1, E, BETA * ALPHA ** 2 - ALPHA]
    return base + [x * y for x in base for y in base]


def to_nc(x: ToeplitzElement) -> NCPolynomial:
    out = NCPolynomial()
    for (p, q), c in x.terms.items():
        out = out + NCPolynomial({("beta",) * p + ("alpha",) * q: c})
    return out


def fundamental_suite() -> List[Dict[str, Any]]:
    """Every identity used for the homotopy out of τ₀, checked exactly.

    Returns records ``{id, anchor, ok, witness}``.
    """
    maps = named_maps()
    records = []

    def rec(cid, anchor, ok, witness=None):
        records.append({"id": cid, "anchor": anchor, "ok": bool(ok), "witness": None if ok else repr(witness)})

    # (a) well-defined maps out of τ
    for name in ["psi", "phi1", "phi2", "phi3", "iota", "Phi1", "Phi2"]:
        v = check_hom(maps[name])
        rec(f"a.hom.{name}", f"{name}(α){name}(β) = {name}(1)", v.ok, v.detail)
    psi = maps["psi"]
    rec("a.psi.corner", "ψ(α)ψ(β) = βα ⊗ 1", psi("alpha") * psi("beta") == tt(BETA * ALPHA))
    rec("a.psi.alpha", "ψ(α) = βα² ⊗ 1", psi("alpha") == tt(BETA * ALPHA ** 2))
    rec("a.phi1.alpha", "φ_1(α) = βα² ⊗ 1 + e ⊗ α", maps["phi1"]("alpha") == tt(BETA * ALPHA ** 2) + tt(E, ALPHA))

    # (b) units
    u1, u1_inv, u2, u2_inv = unit_matrices()
    for name, u, ui in [("u1", u1, u1_inv), ("u2", u2, u2_inv)]:
        rec(f"b.{name}.right", f"{name}·{name}⁻¹ = 1", u * ui == 1, u * ui - 1)
        rec(f"b.{name}.left", f"{name}⁻¹·{name} = 1", ui * u == 1, ui * u - 1)
        rec(f"b.{name}.ev0", f"ev_0({name}) = 1", u.ev(0) == 1, u.ev(0))
    for name, ui, v in [("u1", u1_inv, transposed_inverses()[0]), ("u2", u2_inv, transposed_inverses()[1])]:
        ends_ok = all(v.ev(t) == ui.ev(t) for t in (0, 1))
        rec(f"b.{name}.transposed", f"transposed {name}⁻¹ agrees with {name}⁻¹ at t = 0, 1", ends_ok)

    # (c) endpoints of the homotopies
    ends = [("c.ev0.Phi1", "Phi1", 0, "phi2", "ev_0 Φ_1 = φ_2"),
            ("c.ev0.Phi2", "Phi2", 0, "phi2", "ev_0 Φ_2 = φ_2"),
            ("c.ev1.Phi1", "Phi1", 1, "phi1", "ev_1 Φ_1 = φ_1"),
            ("c.ev1.Phi2", "Phi2", 1, "phi3", "ev_1 Φ_2 = φ_3")]
    for cid, H, t, target, anchor in ends:
        bad = [g for g in ("alpha", "beta") if maps[H](g).ev(t) != maps[target](g)]
        rec(cid, anchor, not bad, bad)

    # (d) congruences modulo M_∞ ⊗ τ
    for name in ["phi1", "phi2", "phi3"]:
        bad = [g for g in ("alpha", "beta") if (maps[name](g) - psi(g)).pi_first()]
        rec(f"d.{name}", f"(π⊗1)({name}(g) - ψ(g)) = 0", not bad, bad)
    for name, u in [("u1", u1), ("u2", u2)]:
        rec(f"d.{name}", f"1 - {name} ∈ M_∞ ⊗ τ[t]", not (1 - u).pi_first(), (1 - u).pi_first())
    for name in ["phi1", "phi2", "phi3"]:
        bad = [g for g in ("alpha", "beta") if (maps[name](g) - psi(g)).pi_both()]
        rec(f"d.pipi.{name}", f"(π⊗π)({name}(g) - ψ(g)) = 0", not bad, bad)

    # (e) φ₃ = ψ on τ₀
    sample = tau0_sample()
    assert all(tau0_member(x) for x in sample)
    bad = [x for x in sample if maps["phi3"](to_nc(x)) != psi(to_nc(x))]
    rec("e.phi3.psi", "φ_3 agrees with ψ on τ_0 (sample)", not bad, bad)

    # (f) φ₁ = ψ ⊥ ι
    iota = maps["iota"]
    gens = [ALPHA, BETA, ONE] + sample[:4]
    bad = []
    for x in gens:
        for y in gens:
            px, py = psi(to_nc(x)), psi(to_nc(y))
            ix, iy = iota(to_nc(x)), iota(to_nc(y))
            if px * iy or ix * py:
                bad.append((x, y))
    rec("f.orthogonal", "ψ(a)ι(b) = ι(a)ψ(b) = 0", not bad, bad)
    bad = [x for x in gens + sample if maps["phi1"](to_nc(x)) != psi(to_nc(x)) + iota(to_nc(x))]
    rec("f.sum", "φ_1 = ψ + ι", not bad, bad)
    return records
