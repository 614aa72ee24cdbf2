"""Polynomial function rings ℤ^K of finite simplicial sets.

An element is a tuple ``(f_x)`` with ``f_x ∈ ℤ^{Δ^{dim x}} = ℤ[t1..tn]`` for
every nondegenerate simplex x, subject to ``δ_i^*(f_x) = θ^*(f_y)`` whenever
``d_i x`` has normal form ``(w, y)`` with surjection θ.  The degree-≤d part
is the integer kernel of those linear conditions on coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .lattice import integer_kernel, hnf, same_lattice, solve_in_hnf
from .polynomials import IntPolynomial, Monomial, monomials_up_to
from .rings import PolyMap, coords, pullback_along, simplex_ring_map
from .simplicial import (FiniteSimplicialSet, SimplicialError, SimplicialMap, product, quotient_with_map,
                         surjection_of)


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


@lru_cache(maxsize=None)
def _face_map(i: int, n: int) -> PolyMap:
    return simplex_ring_map("face", i, n)


@lru_cache(maxsize=None)
def _surj_map(theta: Tuple[int, ...]) -> PolyMap:
    return pullback_along(theta, theta[-1])


def degeneracy_pullback(word: Sequence[int], n: int) -> PolyMap:
    """ℤ^{Δ^m} -> ℤ^{Δ^n} for the degeneracy word ``word`` on an n-simplex."""
    return _surj_map(surjection_of(tuple(word), n))


@lru_cache(maxsize=None)
def _mono_image(pm_key, mono: Monomial) -> IntPolynomial:
    kind, a, b = pm_key
    pm = _face_map(a, b) if kind == "face" else _surj_map(a)
    return pm(IntPolynomial({mono: 1}))


class PowerRing:
    """Degree-≤d slice of ℤ^K (or of the pointed ring ℤ^{(K,⋆)})."""

    def __init__(self, K: FiniteSimplicialSet, degree: int, basepoint: Optional[str] = None):
        if degree < 0:
            raise ValueError("degree must be non-negative")
        if basepoint is not None and K.dim.get(basepoint) != 0:
            raise SimplicialError(f"basepoint {basepoint!r} is not a vertex")
        self.K = K
        self.degree = degree
        self.basepoint = basepoint
        self.order = [x for n in reversed(K.dims) for x in K.simplices[n]]
        self.monomials = {n: monomials_up_to(coords(n), degree) for n in K.dims}
        cols = []
        for deg in range(degree, -1, -1):
            for x in self.order:
                for m in self.monomials[K.dim[x]]:
                    if mono_degree(m) == deg:
                        cols.append((x, m))
        self.columns: List[Tuple[str, Monomial]] = cols
        self.col_index = {c: k for k, c in enumerate(cols)}
        self._basis: Optional[List[List[int]]] = None

    # conditions
    def equations(self) -> List[Dict[Tuple[str, Monomial], int]]:
        K = self.K
        eqs = []
        for x in self.order:
            n = K.dim[x]
            if n == 0:
                continue
            for i, (w, y) in enumerate(K.faces[x]):
                theta = surjection_of(w, n - 1)
                rows: Dict[Monomial, Dict[Tuple[str, Monomial], int]] = {}
                for m in self.monomials[n]:
                    for mm, c in _mono_image(("face", i, n), m).terms.items():
                        e = rows.setdefault(mm, {})
                        e[(x, m)] = e.get((x, m), 0) + c
                for m in self.monomials[K.dim[y]]:
                    for mm, c in _mono_image(("surj", theta, None), m).terms.items():
                        e = rows.setdefault(mm, {})
                        e[(y, m)] = e.get((y, m), 0) - c
                eqs.extend(rows.values())
        if self.basepoint is not None:
            eqs.append({(self.basepoint, ()): 1})
        return eqs

    @property
    def basis_rows(self) -> List[List[int]]:
        if self._basis is None:
            self._basis = integer_kernel(self.equations(), self.columns)
        return self._basis

    def row_degree(self, row: Sequence[int]) -> int:
        k = next(i for i, a in enumerate(row) if a)
        return mono_degree(self.columns[k][1])

    def basis(self) -> List["PowerRingElement"]:
        return [self.element_from_row(r) for r in self.basis_rows]

    def graded_basis(self) -> Dict[int, List["PowerRingElement"]]:
        out: Dict[int, List[PowerRingElement]] = {k: [] for k in range(self.degree + 1)}
        for r in self.basis_rows:
            out[self.row_degree(r)].append(self.element_from_row(r))
        return out

    def ranks(self) -> Tuple[int, ...]:
        """Number of basis elements of each exact degree 0..d."""
        counts = [0] * (self.degree + 1)
        for r in self.basis_rows:
            counts[self.row_degree(r)] += 1
        return tuple(counts)

    def cumulative_ranks(self) -> Tuple[int, ...]:
        out, acc = [], 0
        for c in self.ranks():
            acc += c
            out.append(acc)
        return tuple(out)

    def rank(self) -> int:
        return len(self.basis_rows)

    # conversions
    def element(self, components: Mapping[str, object]) -> "PowerRingElement":
        comps = {x: IntPolynomial.coerce(components.get(x, 0)) for x in self.order}
        return PowerRingElement(self, comps)

    def element_from_row(self, row: Sequence[int]) -> "PowerRingElement":
        comps: Dict[str, Dict[Monomial, int]] = {x: {} for x in self.order}
        for (x, m), c in zip(self.columns, row):
            if c:
                comps[x][m] = c
        return PowerRingElement(self, {x: IntPolynomial(t) for x, t in comps.items()})

    def row_of(self, f: "PowerRingElement") -> List[int]:
        row = [0] * len(self.columns)
        for x, p in f.components.items():
            for m, c in p.terms.items():
                if (x, m) not in self.col_index:
                    raise ValueError(f"component on {x!r} exceeds the degree bound")
                row[self.col_index[(x, m)]] = c
        return row

    def coordinates(self, f: "PowerRingElement") -> Optional[List[int]]:
        """Integer coordinates of f in the HNF basis, or None if f is not in the ring."""
        try:
            row = self.row_of(f)
        except ValueError:
            return None
        return solve_in_hnf(self.basis_rows, row)

    def contains(self, f: "PowerRingElement") -> bool:
        return self.coordinates(f) is not None

    def one(self) -> "PowerRingElement":
        return self.element({x: 1 for x in self.order})

    def closure_violation(self):
        """First pair of basis elements whose product (within the bound) does not re-expand integrally."""
        rows = self.basis_rows
        degs = [self.row_degree(r) for r in rows]
        elems = [self.element_from_row(r) for r in rows]
        for a in range(len(rows)):
            for b in range(a, len(rows)):
                if degs[a] + degs[b] > self.degree:
                    continue
                prod = elems[a] * elems[b]
                if self.coordinates(prod) is None:
                    return a, b
        return None

    def to_json(self) -> list:
        gb = self.graded_basis()
        return [{"degree": k, "basis": [f.to_json() for f in gb[k]]} for k in sorted(gb)]


class PowerRingElement:
    """A tuple of polynomials indexed by nondegenerate simplices."""

    __slots__ = ("ring", "components")

    def __init__(self, ring: PowerRing, components: Mapping[str, IntPolynomial]):
        self.ring = ring
        self.components = dict(components)

    def __getitem__(self, x: str) -> IntPolynomial:
        return self.components[x]

    def _zip(self, other, op):
        if isinstance(other, int):
            other = self.ring.element({x: other for x in self.components})
        return PowerRingElement(self.ring, {x: op(p, other.components[x]) for x, p in self.components.items()})

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self):
        return PowerRingElement(self.ring, {x: -p for x, p in self.components.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return PowerRingElement(self.ring, {x: p * other for x, p in self.components.items()})
        return self._zip(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return all(p == other for p in self.components.values())
        if not isinstance(other, PowerRingElement):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(frozenset(self.components.items()))

    def degree(self) -> int:
        return max((p.degree() for p in self.components.values()), default=-1)

    def compatibility_violation(self):
        K = self.ring.K
        for x, p in self.components.items():
            n = K.dim[x]
            if n == 0:
                continue
            for i, (w, y) in enumerate(K.faces[x]):
                if _face_map(i, n)(p) != degeneracy_pullback(w, n - 1)(self.components[y]):
                    return x, i
        return None

    def is_compatible(self) -> bool:
        return self.compatibility_violation() is None

    def at_vertex(self, v: str) -> int:
        return self.components[v].constant_term()

    def to_json(self) -> dict:
        return {x: p.to_json() for x, p in self.components.items() if not p.is_zero()}

    def __repr__(self):
        return "{" + ", ".join(f"{x}: {p}" for x, p in self.components.items()) + "}"


def power(K: FiniteSimplicialSet, d: int) -> PowerRing:
    return PowerRing(K, d)


def pointed_power(K: FiniteSimplicialSet, basepoint: Optional[str], d: int) -> PowerRing:
    bp = basepoint if basepoint is not None else K.basepoint
    if bp is None or K.dim.get(bp) != 0:
        raise SimplicialError(f"basepoint {bp!r} is not a vertex")
    return PowerRing(K, d, bp)


# induced maps

class InducedHom:
    """``f^*: ℤ^L -> ℤ^K`` for a simplicial map ``f: K -> L``, on degree-≤d slices."""

    def __init__(self, f: SimplicialMap, source: PowerRing, target: PowerRing):
        self.f = f
        self.source = source  # ring of L
        self.target = target  # ring of K

    def __call__(self, g: PowerRingElement) -> PowerRingElement:
        comps = {}
        for x, (w, y) in self.f.assignment.items():
            comps[x] = degeneracy_pullback(w, self.f.source.dim[x])(g.components[y])
        return PowerRingElement(self.target, comps)

    def matrix(self) -> List[List[int]]:
        """Rows: coordinates of the images of the source basis in the target basis."""
        rows = []
        for g in self.source.basis():
            c = self.target.coordinates(self(g))
            if c is None:
                raise ArithmeticError("image of a basis element left the target ring")
            rows.append(c)
        return rows


def induced_hom(f: SimplicialMap, d: int, source_basepoint=None, target_basepoint=None) -> InducedHom:
    src = PowerRing(f.target, d, source_basepoint)
    tgt = PowerRing(f.source, d, target_basepoint)
    return InducedHom(f, src, tgt)


def matmul(a: List[List[int]], b: List[List[int]]) -> List[List[int]]:
    if not a:
        return []
    return [[sum(x * y for x, y in zip(r, col)) for col in zip(*b)] if b else [] for r in a]


# exactness of the pointed quotient sequence

@dataclass
class ExactnessReport:
    surjective: bool
    kernel_matches: bool
    degree: int
    slack: int
    witness: object = None
    details: Dict[str, object] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.surjective and self.kernel_matches


def quotient_exactness_check(L: FiniteSimplicialSet, K_ids, basepoint: str, d: int,
                             slack: Optional[int] = None) -> ExactnessReport:
    """Check ``0 -> ℤ^{(L/K,⋆)} -> ℤ^{(L,⋆)} -> ℤ^{(K,⋆)} -> 0`` degreewise.

    Restriction must hit every element of ℤ^{(K,⋆)} of degree ≤ d - slack, and
    its kernel on the degree-≤d slice must equal the image of ℤ^{(L/K,⋆)}.
    """
    K_ids = set(K_ids)
    if not L.is_subcomplex(K_ids):
        raise SimplicialError("not a subcomplex")
    if basepoint not in K_ids:
        raise SimplicialError("basepoint must lie in the subcomplex")
    if slack is None:
        slack = L.dimension
    K = L.restrict(K_ids)
    RL = PowerRing(L, d, basepoint)
    RK = PowerRing(K, d, basepoint)

    # restriction, in K-coordinates
    restricted = []
    for g in RL.basis():
        restricted.append(RK.row_of(RK.element({x: g.components[x] for x in RK.order})))
    image = hnf(restricted)
    surjective = True
    witness = None
    for r in RK.basis_rows:
        if RK.row_degree(r) <= d - slack and solve_in_hnf(image, r) is None:
            surjective, witness = False, RK.element_from_row(r)
            break

    # kernel of restriction, as vectors in L-coordinates
    nb = len(RL.basis_rows)
    eqs = []
    for k in range(len(RK.columns)):
        e = {j: restricted[j][k] for j in range(nb) if restricted[j][k]}
        if e:
            eqs.append(e)
    kern_coeffs = integer_kernel(eqs, list(range(nb)))
    kernel = [[sum(c * RL.basis_rows[j][k] for j, c in enumerate(v)) for k in range(len(RL.columns))]
              for v in kern_coeffs]

    Q, qmap = quotient_with_map(L, K_ids)
    RQ = PowerRing(Q, d, Q.basepoint)
    pulled = InducedHom(qmap, RQ, RL)
    image_q = [RL.row_of(pulled(g)) for g in RQ.basis()]
    kernel_matches = same_lattice(kernel, image_q)
    if not kernel_matches and witness is None:
        witness = "kernel and quotient image differ"
    return ExactnessReport(surjective, kernel_matches, d, slack, witness,
                           {"rank_L": RL.rank(), "rank_K": RK.rank(), "rank_quotient": RQ.rank(),
                            "rank_kernel": len(hnf(kernel))})


# exponential law

def exponential_failure_check(d: int) -> Dict[str, object]:
    from .simplicial import build_standard

    D1 = build_standard("simplex", 1)
    D2 = build_standard("simplex", 2)
    square = PowerRing(product(D1, D1), d)
    triangle = PowerRing(D2, d)
    rs, rt = square.cumulative_ranks(), triangle.cumulative_ranks()
    differing = [k for k in range(d + 1) if rs[k] != rt[k]]
    return {
        "square_ranks": rs,
        "triangle_ranks": rt,
        "square_increments": square.ranks(),
        "triangle_increments": triangle.ranks(),
        "differ_at": differing,
        "ok": bool(differing) and d >= 2 and rs[2] != rt[2],
    }
