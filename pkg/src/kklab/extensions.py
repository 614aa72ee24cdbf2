"""Tensor algebras and classifying maps, fiber products and path algebras,
idempotent pairs, graded homotopies, amalgamated-product maps and orthogonal sums."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .lattice import integer_kernel
from .paths import ElementaryHomotopy, check_elementary
from .polynomials import IntPolynomial, NCPolynomial
from .rings import AlgebraHom, AlgebraPresentation, RingMatrix, Verdict, check_hom

T = IntPolynomial.var("t")

Vector = Dict[str, int]
Word = Tuple[str, ...]


def _add_into(out: dict, key, c: int) -> None:
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


# free abelian algebras with a multiplication table

class FreeAbelianAlgebra:
    """A ring whose additive group is free on ``basis``; ``table[(a, b)]`` is the product ``a·b``.

    ``model`` optionally realizes basis elements as polynomials (used by path sections).
    """

    def __init__(self, basis: Sequence[str], table: Mapping[Tuple[str, str], Vector],
                 model: Optional[Mapping[str, Any]] = None):
        self.basis = list(basis)
        self.table = {k: dict(v) for k, v in table.items()}
        self.model = dict(model) if model else None

    def mul(self, u: Vector, v: Vector) -> Vector:
        out: Vector = {}
        for a, c in u.items():
            for b, d in v.items():
                for k, e in self.table.get((a, b), {}).items():
                    _add_into(out, k, c * d * e)
        return out

    def realize(self, u: Vector):
        if self.model is None:
            raise ValueError("algebra has no polynomial model")
        return sum((IntPolynomial.coerce(self.model[a]) * c for a, c in u.items()), IntPolynomial())


INTEGERS = FreeAbelianAlgebra(["x"], {("x", "x"): {"x": 1}}, {"x": 1})


class TruncatedTensorAlgebra:
    """``T(A)_{≤d} = ⊕_{1≤n≤d} A^{⊗n}`` on the words in the basis of A, with counit ``η_A``."""

    def __init__(self, A: FreeAbelianAlgebra, d: int):
        if d < 1:
            raise ValueError("degree bound must be at least 1")
        self.A = A
        self.d = d
        self.words: List[Word] = [w for n in range(d, 0, -1) for w in itertools.product(A.basis, repeat=n)]

    def component(self, n: int) -> List[Word]:
        return [w for w in self.words if len(w) == n]

    def counit_word(self, w: Word) -> Vector:
        out: Vector = {w[0]: 1}
        for a in w[1:]:
            out = self.A.mul(out, {a: 1})
        return out

    def counit(self, x: Mapping[Word, int]) -> Vector:
        out: Vector = {}
        for w, c in x.items():
            for k, e in self.counit_word(w).items():
                _add_into(out, k, c * e)
        return out

    def multiply(self, x: Mapping[Word, int], y: Mapping[Word, int]) -> Dict[Word, int]:
        """Concatenation product, truncated at degree d."""
        out: Dict[Word, int] = {}
        for w, c in x.items():
            for v, e in y.items():
                if len(w) + len(v) <= self.d:
                    _add_into(out, w + v, c * e)
        return out

    def j_basis(self) -> List[Dict[Word, int]]:
        """ℤ-basis of ``J(A)_{≤d} = ker η_A`` (row HNF over words, longest first)."""
        eqs = []
        for k in self.A.basis:
            eqs.append({w: self.counit_word(w).get(k, 0) for w in self.words})
        rows = integer_kernel(eqs, self.words)
        return [{w: c for w, c in zip(self.words, r) if c} for r in rows]


def tensor_algebra(A: FreeAbelianAlgebra, d: int) -> TruncatedTensorAlgebra:
    return TruncatedTensorAlgebra(A, d)


def j_basis(A: FreeAbelianAlgebra, d: int) -> List[Dict[Word, int]]:
    return TruncatedTensorAlgebra(A, d).j_basis()


def fmt_tensor(x: Mapping[Word, int]) -> str:
    parts = []
    for w, c in sorted(x.items(), key=lambda kv: (-len(kv[0]), kv[0])):
        s = "⊗".join(w)
        parts.append(s if c == 1 else f"{c}*{s}")
    return " + ".join(parts) if parts else "0"


# extensions and classifying maps

@dataclass
class Extension:
    """``A ◁ B ↠ C`` with an additive section ``s`` given on the basis of C.

    ``in_kernel`` decides membership in A; ``project`` is the quotient map on the
    image of the section (used to check ``g∘s = id``).
    """

    C: FreeAbelianAlgebra
    section: Dict[str, Any]
    in_kernel: Callable[[Any], bool]
    project: Callable[[Any], Vector]
    name: str = ""

    def section_violation(self) -> Optional[str]:
        for b in self.C.basis:
            if self.project(self.section[b]) != {b: 1}:
                return b
        return None


@dataclass
class ClassifyingMap:
    """``J(C)_{≤d} → A``: the multiplicative extension of the section restricted to J."""

    extension: Extension
    d: int
    T: TruncatedTensorAlgebra
    basis: List[Dict[Word, int]]
    images: List[Any]
    ok: bool
    failures: List[str] = field(default_factory=list)

    def __call__(self, x: Mapping[Word, int]):
        if self.T.counit(x):
            raise ValueError(f"{fmt_tensor(x)} is not in J")
        return _section_extended(self.extension, x)


def _section_extended(E: Extension, x: Mapping[Word, int]):
    total = None
    for w, c in x.items():
        term = E.section[w[0]]
        for a in w[1:]:
            term = term * E.section[a]
        term = term * c
        total = term if total is None else total + term
    return 0 if total is None else total


def classifying_map(E: Extension, d: int) -> ClassifyingMap:
    if d < 2:
        raise ValueError("degree bound must be at least 2")
    bad = E.section_violation()
    if bad is not None:
        raise ValueError(f"section does not split the quotient on basis element {bad}")
    Tc = TruncatedTensorAlgebra(E.C, d)
    basis = Tc.j_basis()
    images = [_section_extended(E, x) for x in basis]
    failures = [f"{fmt_tensor(x)} ↦ {img!r} escapes the kernel" for x, img in zip(basis, images)
                if not E.in_kernel(img)]
    return ClassifyingMap(E, d, Tc, basis, images, not failures, failures)


def path_extension(A: FreeAbelianAlgebra) -> Extension:
    """``Ω A ◁ P A = tA[t] ↠ A`` (evaluation at 1) with section ``a ↦ t·a``."""
    return Extension(
        C=A,
        section={b: T * IntPolynomial.coerce(A.model[b]) for b in A.basis},
        in_kernel=lambda p: IntPolynomial.coerce(p).subs({"t": 1}).is_zero()
        and IntPolynomial.coerce(p).subs({"t": 0}).is_zero(),
        project=lambda p: _coordinates_in_model(A, IntPolynomial.coerce(p).subs({"t": 1})),
        name="loop",
    )


def _coordinates_in_model(A: FreeAbelianAlgebra, p: IntPolynomial) -> Vector:
    # only used for models where the basis images are distinct monomials
    out: Vector = {}
    for b in A.basis:
        m = IntPolynomial.coerce(A.model[b])
        (mono, c), = m.terms.items()
        coeff = p.terms.get(mono, 0)
        if coeff % c:
            return {"?": 1}
        if coeff:
            out[b] = coeff // c
    return out


def loop_rho(A: FreeAbelianAlgebra, d: int) -> ClassifyingMap:
    """The classifying map ``ρ_A: J(A) → Ω A`` of the loop extension, on ``J(A)_{≤d}``."""
    return classifying_map(path_extension(A), d)


def split_extension_example() -> Extension:
    """``tℤ[t] ◁ ℤ[t] ↠ ℤ`` (evaluation at 0) with the multiplicative section ``1 ↦ 1``."""
    return Extension(
        C=INTEGERS,
        section={"x": IntPolynomial(1)},
        in_kernel=lambda p: IntPolynomial.coerce(p).subs({"t": 0}).is_zero(),
        project=lambda p: {"x": IntPolynomial.coerce(p).subs({"t": 0}).constant_term()}
        if IntPolynomial.coerce(p).subs({"t": 0}).constant_term() else {},
        name="split",
    )


def loop_naturality_check(d: int = 3, f: Callable[[Any], Any] = None) -> Verdict:
    """``f^{S^1} ρ_ℤ = ρ_B J(f)`` on ``J(ℤ)_{≤d}`` for the unit map ``f: ℤ → ℤ[x]``."""
    f = f or (lambda p: IntPolynomial.coerce(p))
    B = FreeAbelianAlgebra(["x"], {("x", "x"): {"x": 1}}, {"x": f(IntPolynomial(1))})
    rho_Z, rho_B = loop_rho(INTEGERS, d), loop_rho(B, d)
    for x, img in zip(rho_Z.basis, rho_Z.images):
        lhs = f(img)  # coefficientwise; t is untouched
        rhs = rho_B(x)
        if lhs != rhs:
            return Verdict(False, f"square fails on {fmt_tensor(x)}", (lhs, rhs))
    return Verdict(True)


# fiber products and path algebras

class FiberPair:
    """``(b, c)`` in ``B ×_D C``; operations are componentwise."""

    __slots__ = ("b", "c")

    def __init__(self, b, c):
        self.b, self.c = b, c

    def __add__(self, o):
        return FiberPair(self.b + o.b, self.c + o.c)

    def __sub__(self, o):
        return FiberPair(self.b - o.b, self.c - o.c)

    def __neg__(self):
        return FiberPair(-self.b, -self.c)

    def __mul__(self, o):
        if isinstance(o, int):
            return FiberPair(self.b * o, self.c * o)
        return FiberPair(self.b * o.b, self.c * o.c)

    __rmul__ = __mul__

    def __eq__(self, o):
        if isinstance(o, int):
            return self.b == o and self.c == o
        return isinstance(o, FiberPair) and self.b == o.b and self.c == o.c

    def __hash__(self):
        return hash((self.b, self.c))

    def __repr__(self):
        return f"({self.b!r}, {self.c!r})"


class FiberProduct:
    """``B ×_D C = {(b, c) : f(b) = g(c)}``."""

    def __init__(self, f: Callable[[Any], Any], g: Callable[[Any], Any]):
        self.f, self.g = f, g

    def contains(self, x: FiberPair) -> bool:
        return bool(self.f(x.b) == self.g(x.c))

    def pair(self, b, c) -> FiberPair:
        x = FiberPair(b, c)
        if not self.contains(x):
            raise ValueError(f"f(b) ≠ g(c) for {x!r}")
        return x

    def pr1(self, x: FiberPair):
        return x.b

    def pr2(self, x: FiberPair):
        return x.c


def fiber_product(f: Callable[[Any], Any], g: Callable[[Any], Any]) -> FiberProduct:
    return FiberProduct(f, g)


class PathAlgebra(FiberProduct):
    """``P_f = {(p, a) : p ∈ tB[t], deg p ≤ d, p(1) = f(a)}`` with ``π_f(p, a) = a`` and ``ι_f(ω) = (ω, 0)``."""

    def __init__(self, f: Callable[[Any], Any], d: int):
        super().__init__(lambda p: IntPolynomial.coerce(p).subs({"t": 1}), f)
        self.d = d

    def contains(self, x: FiberPair) -> bool:
        p = IntPolynomial.coerce(x.b)
        return p.subs({"t": 0}).is_zero() and p.degree("t") <= self.d and super().contains(x)

    def pi(self, x: FiberPair):
        return x.c

    def iota(self, omega) -> FiberPair:
        p = IntPolynomial.coerce(omega)
        if not (p.subs({"t": 0}).is_zero() and p.subs({"t": 1}).is_zero()):
            raise ValueError(f"{p} is not a loop")
        return FiberPair(p, 0)


def path_algebra(f: Callable[[Any], Any], d: int) -> PathAlgebra:
    return PathAlgebra(f, d)


# idempotent pairs and the q/Q calculus

class Unitalized:
    """``(a, n) ∈ Ã = A ⊕ ℤ·1`` with ``(a, n)(b, m) = (ab + ma + nb, nm)``; A is modeled by IntPolynomial."""

    __slots__ = ("a", "n")

    def __init__(self, a, n: int = 0):
        self.a = IntPolynomial.coerce(a)
        self.n = n

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Unitalized):
            return x
        if isinstance(x, int):
            return cls(0, x)
        return NotImplemented

    def __add__(self, o):
        o = Unitalized.coerce(o)
        return Unitalized(self.a + o.a, self.n + o.n)

    __radd__ = __add__

    def __neg__(self):
        return Unitalized(-self.a, -self.n)

    def __sub__(self, o):
        return self + (-Unitalized.coerce(o))

    def __rsub__(self, o):
        return Unitalized.coerce(o) - self

    def __mul__(self, o):
        o = Unitalized.coerce(o)
        return Unitalized(self.a * o.a + self.a * o.n + o.a * self.n, self.n * o.n)

    def __rmul__(self, o):
        return Unitalized.coerce(o) * self

    def __eq__(self, o):
        o = Unitalized.coerce(o)
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.n == o.n

    def __hash__(self):
        return hash((self.a, self.n))

    def augmentation(self) -> int:
        return self.n

    def __repr__(self):
        return f"({self.a!r}; {self.n})"


def _umatrix(rows) -> RingMatrix:
    return RingMatrix([[Unitalized.coerce(x) for x in r] for r in rows], Unitalized(0), Unitalized(0, 1))


QQ = AlgebraPresentation(
    ["u", "v"],
    [NCPolynomial.word("u", "u") - NCPolynomial.gen("u"), NCPolynomial.word("v", "v") - NCPolynomial.gen("v")],
    unital=False,
)


def qq_normal_form(word: Word) -> Word:
    """Rewrite with ``uu → u`` and ``vv → v``."""
    out: List[str] = []
    for a in word:
        if not out or out[-1] != a:
            out.append(a)
    return tuple(out)


def qq_reduce_all(word: Word, steps: int = 64) -> set:
    """All irreducible words reachable by applying the rules anywhere, in any order."""
    seen, todo, normal = set(), [tuple(word)], set()
    while todo:
        w = todo.pop()
        if w in seen:
            continue
        seen.add(w)
        succ = [w[:i] + w[i + 1:] for i in range(len(w) - 1) if w[i] == w[i + 1]]
        if not succ:
            normal.add(w)
        todo.extend(succ)
    return normal


def qq_confluence_check(max_len: int = 6) -> bool:
    """Every word up to ``max_len`` has exactly one normal form (covers the overlaps uuu, vvv)."""
    for n in range(1, max_len + 1):
        for w in itertools.product("uv", repeat=n):
            if qq_reduce_all(w) != {qq_normal_form(w)}:
                return False
    return True


def q_generators(max_len: int = 3) -> List[Dict[Word, int]]:
    """Differences of alternating words; they span ``ker(m: Q(ℤ) → ℤ)`` up to ``max_len``."""
    words = [w for n in range(1, max_len + 1) for w in itertools.product("uv", repeat=n) if qq_normal_form(w) == w]
    return [{w: 1, words[0]: -1} for w in words[1:]]


@dataclass
class K0Class:
    """Formal difference ``[e0] − [e1]``; equality only through explicit witnesses."""

    e0: RingMatrix
    e1: RingMatrix

    def rank(self) -> int:
        """Trace of ``e0 − e1`` over ℤ̃ evaluated on A = ℤ (the A-part read as an integer)."""
        total = 0
        for i in range(self.e0.n):
            for e, sgn in ((self.e0, 1), (self.e1, -1)):
                x = e[i, i]
                total += sgn * (x.a.constant_term() + x.n)
        return total

    def equal_with_witness(self, other: "K0Class", g: RingMatrix, g_inv: RingMatrix) -> Verdict:
        """``g (e0 ⊕ other.e1) g⁻¹ = other.e0 ⊕ e1`` after padding to a common size."""
        n = g.n
        left = _block(self.e0, other.e1, n)
        right = _block(other.e0, self.e1, n)
        ident = _umatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])
        if not (g * g_inv == ident and g_inv * g == ident):
            return Verdict(False, "witness is not invertible")
        if not g * left * g_inv == right:
            return Verdict(False, "witness does not conjugate")
        return Verdict(True)


def _block(a: RingMatrix, b: RingMatrix, n: int) -> RingMatrix:
    rows = [[Unitalized(0)] * n for _ in range(n)]
    for i in range(a.n):
        for j in range(a.n):
            rows[i][j] = a[i, j]
    for i in range(b.n):
        for j in range(b.n):
            rows[a.n + i][a.n + j] = b[i, j]
    return _umatrix(rows)


@dataclass
class QQResult:
    hom: AlgebraHom
    k0: K0Class
    ok: bool
    failures: List[str]


def qQ_calculus(e0, e1, max_len: int = 3) -> QQResult:
    """Send ``u ↦ e0, v ↦ e1`` and check that q-generators land in the augmentation ideal."""
    e0 = e0 if isinstance(e0, RingMatrix) else _umatrix(e0)
    e1 = e1 if isinstance(e1, RingMatrix) else _umatrix(e1)
    for name, e in (("e0", e0), ("e1", e1)):
        if not e * e == e:
            raise ValueError(f"{name} is not idempotent")
    zero = _umatrix([[0] * e0.n for _ in range(e0.n)])
    hom = AlgebraHom(QQ, {"u": e0, "v": e1}, zero, zero, "qQ")
    failures = []
    v = check_hom(hom)
    if not v.ok:
        failures.append(v.detail)
    for q in q_generators(max_len):
        img = hom(NCPolynomial(q))
        if any(img[i, j].augmentation() for i in range(img.n) for j in range(img.n)):
            failures.append(f"q-generator {q} leaves the ideal")
    return QQResult(hom, K0Class(e0, e1), not failures, failures)


# graded homotopies

def graded_homotopy(A: AlgebraPresentation, model: Mapping[str, Any], zero: Any = 0,
                    one: Any = None) -> Tuple[ElementaryHomotopy, Dict[str, Verdict]]:
    """``h(a_n) = a_n t^n``; verifies h is a hom, ``ev_0 h`` = degree-0 projection and ``ev_1 h = id``."""
    for rel in A.relations:
        degs = {sum(A.degrees.get(g, 0) for g in w) for w in rel.terms}
        if len(degs) > 1:
            raise ValueError(f"relation {rel!r} is not homogeneous")
    unit = one if one is not None else zero
    h = AlgebraHom(A, {g: _scale_t(model[g], A.degrees.get(g, 0)) for g in A.generators}, unit, zero, "h")
    ident = AlgebraHom(A, dict(model), unit, zero, "id")
    proj = AlgebraHom(A, {g: model[g] if A.degrees.get(g, 0) == 0 else zero for g in A.generators},
                      unit, zero, "π0")
    H = ElementaryHomotopy(h)
    verdicts = {
        "hom": check_hom(h),
        "endpoints": check_elementary(H, proj, ident),
        "projection_hom": check_hom(proj),
    }
    return H, verdicts


def _scale_t(x, n: int):
    tn = T ** n
    if isinstance(x, RingMatrix):
        return x.map(lambda e: IntPolynomial.coerce(e) * tn, IntPolynomial(0), IntPolynomial(1))
    return IntPolynomial.coerce(x) * tn


def polynomial_ring_example():
    """``ℤ[x]`` graded by ``deg x = 1``."""
    A = AlgebraPresentation(["x"], [], True, {"x": 1})
    return A, {"x": IntPolynomial.var("x")}, IntPolynomial(0), IntPolynomial(1)


def square_zero_example():
    """Non-unital ``A = A_1`` spanned by x, y with all products zero, modeled in strictly upper 3×3 matrices."""
    gens = ["x", "y"]
    rels = [NCPolynomial.word(a, b) for a in gens for b in gens]
    A = AlgebraPresentation(gens, rels, False, {"x": 1, "y": 1})
    P0, P1 = IntPolynomial(0), IntPolynomial(1)

    def m(entries):
        rows = [[P0] * 3 for _ in range(3)]
        for (i, j), c in entries.items():
            rows[i][j] = IntPolynomial(c)
        return RingMatrix(rows, P0, P1)

    model = {"x": m({(0, 2): 1}), "y": m({(0, 2): 2})}
    zero = m({})
    return A, model, zero, zero


# amalgamated free products

@dataclass
class AmalgamatedData:
    theta: AlgebraHom
    eta: Callable[[FiberPair], RingMatrix]
    verdicts: Dict[str, Verdict]


def amalgamated_maps(A: AlgebraPresentation, B: AlgebraPresentation, C_gens: Sequence[str],
                     a_model: Mapping[str, Any], b_model: Mapping[str, Any],
                     alpha: Callable[[Any], Any], beta: Callable[[Any], Any],
                     d1_samples: Sequence[Tuple[NCPolynomial, NCPolynomial]] = ()) -> AmalgamatedData:
    """``ϑ: A ∗_C B → A ⊕_C B`` and ``η: D_2 → M_2 D_1``.

    The free product is presented by the union of generators (C generators shared) and
    relations. ``alpha``/``beta`` are the retractions on the models of A and B.
    ``d1_samples`` are pairs (a, b) of words with α(a) = β(b) = 0.
    """
    for c in C_gens:
        if not (alpha(a_model[c]) == a_model[c] and beta(b_model[c]) == b_model[c]):
            raise ValueError(f"retraction is not the identity on {c}")
    gens = list(dict.fromkeys(list(A.generators) + list(B.generators)))
    free = AlgebraPresentation(gens, list(A.relations) + list(B.relations))
    images = {}
    for g in gens:
        if g in C_gens:
            images[g] = FiberPair(a_model[g], b_model[g])
        elif g in A.generators:
            images[g] = FiberPair(a_model[g], alpha(a_model[g]))
        else:
            images[g] = FiberPair(beta(b_model[g]), b_model[g])
    one = FiberPair(IntPolynomial(1), IntPolynomial(1))
    theta = AlgebraHom(free, images, one, FiberPair(IntPolynomial(0), IntPolynomial(0)), "ϑ")
    target = FiberProduct(alpha, beta)
    verdicts = {"theta_hom": check_hom(theta)}
    bad = [g for g, x in images.items() if not target.contains(x)]
    verdicts["theta_lands"] = Verdict(not bad, f"images leave A ⊕_C B: {bad}" if bad else "")

    # η on D_2, with entries in the free product (NC polynomials)
    retract = {g: (alpha(a_model[g]) if g in A.generators else beta(b_model[g])) for g in gens}

    def to_C(p: NCPolynomial):
        return AlgebraHom(free, retract, IntPolynomial(1), IntPolynomial(0))(p)

    def eta(x: FiberPair) -> RingMatrix:
        return RingMatrix([[x.b, NCPolynomial(0)], [NCPolynomial(0), x.c]], NCPolynomial(0), NCPolynomial(1))

    failures = []
    for a, b in d1_samples:
        if not (to_C(a) == 0 and to_C(b) == 0):
            failures.append(f"sample ({a!r}, {b!r}) is not in D_2")
    for (a, b), (a2, b2) in itertools.product(d1_samples, repeat=2):
        if eta(FiberPair(a, b)) * eta(FiberPair(a2, b2)) != eta(FiberPair(a * a2, b * b2)):
            failures.append("η not multiplicative")
        m = eta(FiberPair(a, b))
        if any(not to_C(m[i, j]) == 0 for i in range(2) for j in range(2)):
            failures.append("η(a, b) has an entry outside D_1")
    verdicts["eta_hom"] = Verdict(not failures, "; ".join(failures))
    return AmalgamatedData(theta, eta, verdicts)


def amalgamated_example() -> AmalgamatedData:
    """C = ℤ[c], A = ℤ[c, x] with α(x) = 0, B = ℤ[c, y] with β(y) = c."""
    x, y, c = (NCPolynomial.gen(g) for g in "xyc")
    A = AlgebraPresentation(["c", "x"], [x * c - c * x])
    B = AlgebraPresentation(["c", "y"], [y * c - c * y])
    a_model = {"c": IntPolynomial.var("c"), "x": IntPolynomial.var("x")}
    b_model = {"c": IntPolynomial.var("c"), "y": IntPolynomial.var("y")}
    alpha = lambda p: IntPolynomial.coerce(p).subs({"x": 0})
    beta = lambda p: IntPolynomial.coerce(p).subs({"y": IntPolynomial.var("c")})
    samples = [(x, y - c), (x * c, (y - c) * y), (x * x, NCPolynomial(0))]
    return amalgamated_maps(A, B, ["c"], a_model, b_model, alpha, beta, samples)


# orthogonal sums

def orthogonal_sum(f: AlgebraHom, g: AlgebraHom, samples: Sequence[Any]) -> Tuple[AlgebraHom, Verdict]:
    """``f + g`` when ``f(a)g(b) = g(a)f(b) = 0`` on the samples; the sum is checked with ``check_hom``."""
    for a in samples:
        for b in samples:
            if f(a) * g(b) or g(a) * f(b):
                return None, Verdict(False, "f and g are not orthogonal", (a, b))
    s = AlgebraHom(f.source, {k: f.images[k] + g.images[k] for k in f.images}, f.one + g.one,
                   f.zero, f"{f.name}+{g.name}")
    return s, check_hom(s)
