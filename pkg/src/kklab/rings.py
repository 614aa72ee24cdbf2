"""Exact rings and ring maps.

* coordinate rings of standard simplices and the substitutions induced by
  simplicial operators;
* square matrices over an arbitrary exact ring, with determinant and
  adjugate inverse;
* finitely presented algebras, homomorphism checking and Morita-type maps;
* twisted Laurent rings over a polynomial base;
* the rotation homotopy matrix ``W``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Mapping, Sequence, Tuple

from .polynomials import IntPolynomial, NCPolynomial


# coordinate rings of simplices

def coords(n: int) -> List[str]:
    """Variables ``t1..tn`` of ℤ^{Δ^n}; ``t0 = 1 - t1 - ... - tn`` is eliminated."""
    return [f"t{k}" for k in range(1, n + 1)]


class PolyMap:
    """Ring map between polynomial rings given by substituting the source variables."""

    def __init__(self, images: Mapping[str, IntPolynomial], source_vars: Sequence[str] = None,
                 target_vars: Sequence[str] = None, name: str = ""):
        self.images = {v: IntPolynomial.coerce(p) for v, p in images.items()}
        self.source_vars = list(source_vars) if source_vars is not None else sorted(self.images)
        self.target_vars = list(target_vars) if target_vars is not None else None
        self.name = name

    def __call__(self, p: IntPolynomial) -> IntPolynomial:
        return IntPolynomial.coerce(p).subs(self.images)

    def compose(self, first: "PolyMap") -> "PolyMap":
        """``self ∘ first``: apply ``first`` then ``self``."""
        return PolyMap({v: self(first.images.get(v, IntPolynomial.var(v))) for v in first.source_vars},
                       first.source_vars, self.target_vars, f"{self.name}∘{first.name}")

    def __eq__(self, other):
        if not isinstance(other, PolyMap):
            return NotImplemented
        vs = set(self.source_vars) | set(other.source_vars)
        return all(self(IntPolynomial.var(v)) == other(IntPolynomial.var(v)) for v in vs)

    def __repr__(self):
        return f"PolyMap({self.name or self.images})"


def pullback_along(phi: Sequence[int], m: int) -> PolyMap:
    """ℤ^{Δ^m} -> ℤ^{Δ^n} induced by the monotone map ``phi: [n] -> [m]``.

    The affine map sends barycentric coordinates ``u`` to ``t_v = Σ_{φ(k)=v} u_k``.
    """
    n = len(phi) - 1
    if any(not 0 <= v <= m for v in phi) or any(a > b for a, b in zip(phi, phi[1:])):
        raise ValueError(f"{tuple(phi)} is not a monotone map [{n}] -> [{m}]")
    u = [None] + [IntPolynomial.var(f"t{k}") for k in range(1, n + 1)]
    u[0] = 1 - sum(u[1:], IntPolynomial())
    images = {}
    for v in range(1, m + 1):
        images[f"t{v}"] = sum((u[k] for k in range(n + 1) if phi[k] == v), IntPolynomial())
    # substitution is simultaneous, so shared variable names are harmless
    return PolyMap(images, coords(m), coords(n))


def simplex_ring_map(kind: str, i: int, n: int) -> PolyMap:
    """δ_i^*: ℤ^{Δ^n} -> ℤ^{Δ^{n-1}} ('face') or σ_i^*: ℤ^{Δ^n} -> ℤ^{Δ^{n+1}} ('degeneracy')."""
    if kind == "face":
        if n < 1 or not 0 <= i <= n:
            raise ValueError(f"face index {i} out of range for Δ^{n}")
        phi = tuple(k if k < i else k + 1 for k in range(n))
        pm = pullback_along(phi, n)
        pm.name = f"δ{i}*"
        return pm
    if kind == "degeneracy":
        if not 0 <= i <= n:
            raise ValueError(f"degeneracy index {i} out of range for Δ^{n}")
        phi = tuple(k if k <= i else k - 1 for k in range(n + 2))
        pm = pullback_along(phi, n)
        pm.name = f"σ{i}*"
        return pm
    raise ValueError(f"unknown kind {kind!r}")


def evaluation(value: int, var: str = "t") -> Callable[[IntPolynomial], IntPolynomial]:
    return lambda p: IntPolynomial.coerce(p).subs({var: value})


# matrices

class RingMatrix:
    """Square matrix over any exact ring supporting ``+``, ``*`` and ``==``.

    ``zero`` and ``one`` are the ring's constants (defaults are the ints, which
    also embed into every ring used here).
    """

    __slots__ = ("rows", "zero", "one")

    def __init__(self, rows: Sequence[Sequence[Any]], zero: Any = 0, one: Any = 1):
        self.rows = [list(r) for r in rows]
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square")
        self.zero = zero
        self.one = one

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int, zero: Any = 0, one: Any = 1) -> "RingMatrix":
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], zero, one)

    @classmethod
    def diag(cls, entries: Sequence[Any], zero: Any = 0, one: Any = 1) -> "RingMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else zero for j in range(n)] for i in range(n)], zero, one)

    def like(self, rows) -> "RingMatrix":
        return RingMatrix(rows, self.zero, self.one)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.like([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return self.like([[-a for a in r] for r in self.rows])

    def __sub__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RingMatrix):
            n = self.n
            out = []
            for i in range(n):
                row = []
                for j in range(n):
                    acc = self.zero
                    for k in range(n):
                        acc = acc + self.rows[i][k] * other.rows[k][j]
                    row.append(acc)
                out.append(row)
            return self.like(out)
        return self.like([[a * other for a in r] for r in self.rows])

    def __rmul__(self, other):
        return self.like([[other * a for a in r] for r in self.rows])

    def map(self, f: Callable[[Any], Any], zero: Any = None, one: Any = None) -> "RingMatrix":
        return RingMatrix([[f(a) for a in r] for r in self.rows],
                          self.zero if zero is None else zero, self.one if one is None else one)

    def __eq__(self, other):
        if isinstance(other, int):
            return all(a == (other if i == j else 0)
                       for i, r in enumerate(self.rows) for j, a in enumerate(r))
        if not isinstance(other, RingMatrix):
            return NotImplemented
        if other.n != self.n:
            return False
        return all(a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    def __hash__(self):
        return hash(tuple(tuple(map(repr, r)) for r in self.rows))

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.rows for a in r)

    def minor(self, i: int, j: int) -> "RingMatrix":
        return self.like([r[:j] + r[j + 1:] for k, r in enumerate(self.rows) if k != i])

    def det(self):
        """Determinant by permutation expansion (commutative entry rings, small n)."""
        n = self.n
        if n == 0:
            return self.one
        total = self.zero
        for perm in itertools.permutations(range(n)):
            sign = _perm_sign(perm)
            term = self.one
            for i, j in enumerate(perm):
                term = term * self.rows[i][j]
            total = total + term if sign > 0 else total - term
        return total

    def adjugate(self) -> "RingMatrix":
        n = self.n
        if n == 1:
            return self.like([[self.one]])
        cof = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                d = self.minor(i, j).det()
                cof[j][i] = d if (i + j) % 2 == 0 else -d
        return self.like(cof)

    def transpose(self) -> "RingMatrix":
        return self.like([list(c) for c in zip(*self.rows)])

    def __repr__(self):
        return "RingMatrix(" + repr(self.rows) + ")"


def _perm_sign(perm) -> int:
    sign = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


class NonUnitDeterminant(ValueError):
    def __init__(self, det):
        super().__init__(f"det = {det} not a unit")
        self.det = det


def matrix_inverse_adjugate(M: RingMatrix) -> RingMatrix:
    """Exact inverse ``det^{-1} adj(M)`` for ``det(M) = ±1``; the product with M is checked."""
    d = M.det()
    if d == 1:
        inv = M.adjugate()
    elif d == -1:
        inv = -M.adjugate()
    else:
        raise NonUnitDeterminant(d)
    ident = RingMatrix.identity(M.n, M.zero, M.one)
    if M * inv != ident or inv * M != ident:
        raise ArithmeticError("adjugate inverse failed verification")
    return inv


def rotation_homotopy_W() -> Tuple[RingMatrix, Dict[str, Any]]:
    """``W = ((1-t², t³-2t), (t, 1-t²))`` over ℤ[t] with its verification record."""
    t = IntPolynomial.var("t")
    W = RingMatrix([[1 - t * t, t ** 3 - 2 * t], [t, 1 - t * t]], IntPolynomial(0), IntPolynomial(1))
    ev0 = W.map(lambda p: p.subs({"t": 0}))
    ev1 = W.map(lambda p: p.subs({"t": 1}))
    det = W.det()
    inv = matrix_inverse_adjugate(W)
    ident = RingMatrix.identity(2, IntPolynomial(0), IntPolynomial(1))
    record = {
        "ev0": ev0,
        "ev1": ev1,
        "det": det,
        "inverse": inv,
        "ev0_is_identity": ev0 == ident,
        "ev1_is_rotation": ev1 == RingMatrix([[0, -1], [1, 0]]).map(IntPolynomial),
        "det_is_one": det == 1,
        "inverse_checked": W * inv == ident and inv * W == ident,
    }
    return W, record


# presented algebras

@dataclass
class AlgebraPresentation:
    """Generators and relations; each relation is an NCPolynomial meant to vanish."""

    generators: List[str]
    relations: List[NCPolynomial] = field(default_factory=list)
    unital: bool = True
    degrees: Dict[str, int] = field(default_factory=dict)

    def check_generators(self, poly: NCPolynomial) -> None:
        unknown = poly.generators() - set(self.generators)
        if unknown:
            raise KeyError(f"unknown generator(s) {sorted(unknown)}")


def evaluate_nc(poly: NCPolynomial, images: Mapping[str, Any], one: Any, zero: Any = 0) -> Any:
    """Evaluate a noncommutative polynomial at ring elements."""
    total = zero
    for word, c in sorted(poly.terms.items()):
        if word:
            term = images[word[0]]
            for g in word[1:]:
                term = term * images[g]
        else:
            term = one
        total = total + term * c if not isinstance(term, int) else total + c * term
    return total


@dataclass
class Verdict:
    ok: bool
    detail: str = ""
    witness: Any = None

    def __bool__(self):
        return self.ok


class AlgebraHom:
    """A map out of a presented algebra given by generator images.

    ``one`` is the image of the unit: the target unit for unital maps, or an
    idempotent for corner-type maps.
    """

    def __init__(self, source: AlgebraPresentation, images: Mapping[str, Any], one: Any, zero: Any = 0,
                 name: str = ""):
        unknown = set(images) - set(source.generators)
        if unknown:
            raise KeyError(f"unknown generator(s) {sorted(unknown)}")
        missing = set(source.generators) - set(images)
        if missing:
            raise KeyError(f"no image for generator(s) {sorted(missing)}")
        self.source = source
        self.images = dict(images)
        self.one = one
        self.zero = zero
        self.name = name

    def __call__(self, poly) -> Any:
        if isinstance(poly, str):
            return self.images[poly]
        if isinstance(poly, int):
            poly = NCPolynomial(poly)
        self.source.check_generators(poly)
        return evaluate_nc(poly, self.images, self.one, self.zero)

    def map_images(self, f: Callable[[Any], Any], one=None, zero=None, name="") -> "AlgebraHom":
        return AlgebraHom(self.source, {g: f(x) for g, x in self.images.items()},
                          f(self.one) if one is None else one, self.zero if zero is None else zero, name)


def check_hom(f: AlgebraHom) -> Verdict:
    """Every relation must vanish; for unital sources the unit image must be a compatible idempotent."""
    for rel in f.source.relations:
        f.source.check_generators(rel)
        value = f(rel)
        if not value == 0:
            return Verdict(False, f"relation {rel!r} maps to {value!r}", (rel, value))
    if not f.source.unital:
        return Verdict(True)
    p = f.one
    if not p * p == p:
        return Verdict(False, "unit image is not idempotent", p)
    for g, x in f.images.items():
        if not (p * x == x and x * p == x):
            return Verdict(False, f"image of {g} not inside the corner of the unit image", g)
    return Verdict(True)


def identity_hom(P: AlgebraPresentation) -> AlgebraHom:
    return AlgebraHom(P, {g: NCPolynomial.gen(g) for g in P.generators}, NCPolynomial(1), NCPolynomial(0))


def morita_map(p: Sequence[Any], q: Sequence[Any], zero: Any = 0, one: Any = 1) -> Callable[[Any], RingMatrix]:
    """``a ↦ (p_i a q_j)_{ij}``."""
    if len(p) != len(q):
        raise ValueError("p and q must have the same length")

    def xi(a):
        return RingMatrix([[pi * a * qj for qj in q] for pi in p], zero, one)

    return xi


def morita_check(p: Sequence[Any], q: Sequence[Any], samples: Sequence[Any], zero: Any = 0, one: Any = 1,
                 degree: int = 2) -> Verdict:
    """Sampled precondition ``a(Σ q_i p_i)a' = aa'`` and multiplicativity of the Morita map."""
    qp = zero
    for pi, qi in zip(p, q):
        qp = qp + qi * pi
    for a in samples:
        for b in samples:
            if not a * qp * b == a * b:
                return Verdict(False, "a(Σ q_i p_i)a' differs from aa'", (a, b))
    xi = morita_map(p, q, zero, one)
    words = [w for k in range(1, degree + 1) for w in itertools.product(samples, repeat=k)]
    for w1 in words:
        for w2 in words:
            a = _prod(w1)
            b = _prod(w2)
            if xi(a) * xi(b) != xi(a * b):
                return Verdict(False, "ξ(a)ξ(b) differs from ξ(ab)", (a, b))
    return Verdict(True)


def _prod(xs):
    out = xs[0]
    for x in xs[1:]:
        out = out * x
    return out


# twisted Laurent rings

class CrossedProduct:
    """Twisted Laurent ring ``A[t, t^{-1}; σ]`` with ``t a t^{-1} = σ(a)``.

    ``A`` is a commutative polynomial ring; ``sigma`` and ``sigma_inv`` are
    substitutions of its generators.
    """

    def __init__(self, generators: Sequence[str], sigma: Mapping[str, Any], sigma_inv: Mapping[str, Any]):
        self.generators = list(generators)
        self.sigma = PolyMap(sigma, self.generators, self.generators, "σ")
        self.sigma_inv = PolyMap(sigma_inv, self.generators, self.generators, "σ⁻¹")
        for g in self.generators:
            x = IntPolynomial.var(g)
            if self.sigma(self.sigma_inv(x)) != x or self.sigma_inv(self.sigma(x)) != x:
                raise ValueError(f"σ∘σ⁻¹ ≠ id on generator {g}")
        self._cache: Dict[Tuple[int, IntPolynomial], IntPolynomial] = {}

    def twist(self, m: int, a: IntPolynomial) -> IntPolynomial:
        """σ^m(a) for any integer m."""
        key = (m, a)
        if key not in self._cache:
            out = a
            step = self.sigma if m >= 0 else self.sigma_inv
            for _ in range(abs(m)):
                out = step(out)
            self._cache[key] = out
        return self._cache[key]

    def element(self, terms: Mapping[int, Any]) -> "TwistedLaurent":
        return TwistedLaurent(self, {k: IntPolynomial.coerce(a) for k, a in terms.items()})

    def t(self, k: int = 1) -> "TwistedLaurent":
        return self.element({k: 1})

    def const(self, a) -> "TwistedLaurent":
        return self.element({0: a})


class TwistedLaurent:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: CrossedProduct, terms: Mapping[int, IntPolynomial]):
        self.ring = ring
        self.terms = {k: a for k, a in terms.items() if not a.is_zero()}

    def _coerce(self, other):
        if isinstance(other, TwistedLaurent):
            return other
        if isinstance(other, (int, IntPolynomial)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, a in other.terms.items():
            out[k] = out.get(k, IntPolynomial()) + a
        return TwistedLaurent(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return TwistedLaurent(self.ring, {k: -a for k, a in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: Dict[int, IntPolynomial] = {}
        for m, a in self.terms.items():
            for k, b in other.terms.items():
                # (a t^m)(b t^k) = a σ^m(b) t^{m+k}
                out[m + k] = out.get(m + k, IntPolynomial()) + a * self.ring.twist(m, b)
        return TwistedLaurent(self.ring, out)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({a})*t^{k}" for k, a in sorted(self.terms.items()))
