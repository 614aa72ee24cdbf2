"""Elementary homotopies, paths over sd^n Δ^1 and the square-to-interval transformation η."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .polynomials import IntPolynomial
from .power import PowerRing, PowerRingElement, degeneracy_pullback
from .rings import AlgebraHom, Verdict
from .simplicial import SimplicialError, build_standard, product_with_projections, subdivide

T = IntPolynomial.var("t")


def ev_t(x: Any, value, var: str = "t") -> Any:
    """Substitute ``var = value`` in a polynomial, a matrix of polynomials, or an int."""
    if isinstance(x, int):
        return x
    if isinstance(x, IntPolynomial):
        return x.subs({var: value})
    if hasattr(x, "map"):
        return x.map(lambda e: ev_t(e, value, var))
    raise TypeError(f"cannot evaluate {type(x).__name__}")


def flip(x: Any, var: str = "t") -> Any:
    """``t ↦ 1 - t``."""
    return ev_t(x, 1 - IntPolynomial.var(var), var)


def _same(a, b) -> bool:
    return bool(a == b)


# elementary homotopies

@dataclass
class ElementaryHomotopy:
    """A hom ``h: A → B[t]``; its endpoints are ``ev_0 h`` and ``ev_1 h``."""

    h: AlgebraHom
    var: str = "t"

    def ev(self, value) -> AlgebraHom:
        return self.h.map_images(lambda x: ev_t(x, value, self.var), name=f"ev{value}({self.h.name})")

    def reverse(self) -> "ElementaryHomotopy":
        return ElementaryHomotopy(self.h.map_images(lambda x: flip(x, self.var)), self.var)

    @classmethod
    def constant(cls, f: AlgebraHom) -> "ElementaryHomotopy":
        return cls(f)


def check_elementary(h: ElementaryHomotopy, f: AlgebraHom, g: AlgebraHom) -> Verdict:
    """True iff ``ev_0 h = f`` and ``ev_1 h = g`` on generators."""
    for value, target in ((0, f), (1, g)):
        end = h.ev(value)
        for gen in h.h.source.generators:
            if not _same(end(gen), target(gen)):
                return Verdict(False, f"ev_{value} differs on generator {gen}", gen)
        if not _same(end.one, target.one):
            return Verdict(False, f"ev_{value} differs on the unit", "1")
    return Verdict(True)


# the subdivided interval

class Interval:
    """``sd^n Δ^1`` with its edges listed from the left end.

    ``orientation[i]`` is +1 when the edge coordinate vanishes at the left end of
    edge i and -1 when it vanishes at the right end.
    """

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("subdivision level must be non-negative")
        self.n = n
        K = build_standard("simplex", 1)
        self.steps = []
        for _ in range(n):
            K, h = subdivide(K)
            self.steps.append(h)
        self.K = K
        self.h = self.steps[-1] if self.steps else None
        # the left end is the unique vertex over 0 under the iterated last-vertex map
        start = self._left_end()
        edges, orient, verts = [], [], [start]
        remaining = set(K.simplices[1])
        v = start
        while remaining:
            for e in sorted(remaining):
                (_, a), (_, b) = K.faces[e]  # d0 = coordinate 1, d1 = coordinate 0
                if b == v:
                    edges.append(e), orient.append(1), verts.append(a)
                    v = a
                    break
                if a == v:
                    edges.append(e), orient.append(-1), verts.append(b)
                    v = b
                    break
            else:
                raise SimplicialError("sd^n Δ^1 is not a path")
            remaining.discard(edges[-1])
        self.edges: List[str] = edges
        self.orientation: List[int] = orient
        self.vertices: List[str] = verts

    def _left_end(self) -> str:
        v_ids = set(self.K.vertices())
        current = {v: v for v in v_ids}
        for h in reversed(self.steps):
            current = {v: h(w)[1] for v, w in current.items()}
        ends = [v for v, img in current.items() if img == "0"]
        assert len(ends) == 1
        return ends[0]

    def __len__(self):
        return len(self.edges)

    def coordinate_at(self, i: int, side: str) -> int:
        """Own coordinate of edge i at its 'left' or 'right' vertex."""
        left = 0 if self.orientation[i] == 1 else 1
        return left if side == "left" else 1 - left


@lru_cache(maxsize=None)
def interval(n: int) -> Interval:
    return Interval(n)


# subdivided paths

class SubdividedPath:
    """Homs ``A → B[t]``, one per edge of ``sd^n Δ^1`` in left-to-right order.

    Each piece is written in its own edge coordinate ``t``.
    """

    def __init__(self, pieces: Sequence[AlgebraHom], n: int, var: str = "t"):
        self.I = interval(n)
        if len(pieces) != len(self.I):
            raise ValueError(f"sd^{n} Δ^1 has {len(self.I)} edges, got {len(pieces)} pieces")
        self.pieces = list(pieces)
        self.n = n
        self.var = var
        self.source = pieces[0].source

    @classmethod
    def constant(cls, f: AlgebraHom, n: int = 0) -> "SubdividedPath":
        return cls([f] * len(interval(n)), n)

    @classmethod
    def from_homotopy(cls, h: ElementaryHomotopy) -> "SubdividedPath":
        return cls([h.h], 0, h.var)

    def end_value(self, i: int, side: str) -> AlgebraHom:
        return ElementaryHomotopy(self.pieces[i], self.var).ev(self.I.coordinate_at(i, side))

    def start(self) -> AlgebraHom:
        return self.end_value(0, "left")

    def end(self) -> AlgebraHom:
        return self.end_value(len(self.pieces) - 1, "right")

    def matching_violation(self) -> Optional[Tuple[int, str]]:
        """First shared vertex at which adjacent pieces disagree."""
        for i in range(len(self.pieces) - 1):
            a, b = self.end_value(i, "right"), self.end_value(i + 1, "left")
            for g in self.source.generators:
                if not _same(a(g), b(g)):
                    return i, g
        return None

    def is_valid(self) -> bool:
        return self.matching_violation() is None

    def refine(self) -> "SubdividedPath":
        """Pull back along the last-vertex map ``sd^{n+1} Δ^1 → sd^n Δ^1``."""
        fine = interval(self.n + 1)
        h = fine.h
        index = {e: i for i, e in enumerate(self.I.edges)}
        pieces = []
        for e in fine.edges:
            word, y = h(e)
            if not word:
                pieces.append(self.pieces[index[y]])
            else:
                pieces.append(self.at_vertex(y))
        return SubdividedPath(pieces, self.n + 1, self.var)

    def at_vertex(self, v: str) -> AlgebraHom:
        pos = self.I.vertices.index(v)
        if pos < len(self.pieces):
            return self.end_value(pos, "left")
        return self.end_value(pos - 1, "right")

    def refine_to(self, m: int) -> "SubdividedPath":
        p = self
        while p.n < m:
            p = p.refine()
        return p

    def reverse(self) -> "SubdividedPath":
        N = len(self.pieces)
        pieces = []
        for j in range(N):
            i = N - 1 - j
            piece = self.pieces[i]
            if self.I.orientation[i] == self.I.orientation[j]:
                piece = piece.map_images(lambda x: flip(x, self.var))
            pieces.append(piece)
        return SubdividedPath(pieces, self.n, self.var)

    def as_power_hom(self, degree: int) -> Tuple[bool, Dict[str, PowerRingElement]]:
        """Each generator's image as an element of ``B ⊗ ℤ^{sd^n Δ^1}``, with the compatibility verdict.

        Only polynomial targets are supported; ``t`` becomes the edge coordinate ``t1``.
        """
        R = PowerRing(self.I.K, degree)
        out = {}
        ok = True
        for g in self.source.generators:
            comps = {}
            for i, e in enumerate(self.I.edges):
                comps[e] = IntPolynomial.coerce(self.pieces[i](g)).rename({self.var: "t1"})
            for v in self.I.vertices:
                comps[v] = IntPolynomial.coerce(self.at_vertex(v)(g))
            elem = PowerRingElement(R, comps)
            out[g] = elem
            ok = ok and elem.is_compatible()
        return ok, out


def concat(p: SubdividedPath, q: SubdividedPath) -> SubdividedPath:
    """``p`` followed by ``q``, both refined to level ``max + 1`` halves."""
    for g in p.source.generators:
        if not _same(p.end()(g), q.start()(g)):
            raise ValueError(f"endpoint mismatch on generator {g}")
    m = max(p.n, q.n)
    p, q = p.refine_to(m), q.refine_to(m)
    out = interval(m + 1)
    half = len(p.pieces)
    pieces = []
    for j in range(len(out)):
        src, i = (p, j) if j < half else (q, j - half)
        piece = src.pieces[i]
        if src.I.orientation[i] != out.orientation[j]:
            piece = piece.map_images(lambda x: flip(x, src.var))
        pieces.append(piece)
    return SubdividedPath(pieces, m + 1, p.var)


# η: squares of sd^n Δ^1 × sd^n Δ^1 to edges of sd^n Δ^1
#
# Formulas are stated in a uniform parametrization: t1, t2 run left to right along the
# edges of the two factors, s runs right to left along the target edge. Edges of
# sd^n Δ^1 alternate orientation, so every formula is converted to the own edge
# coordinates before it is pulled back.

U1, U2 = IntPolynomial.var("t1"), IntPolynomial.var("t2")
DIAGONAL = 1 - U1 - U2 + U1 * U2

CONVENTIONS = {
    "printed": {"below": U1, "diagonal": DIAGONAL, "above": U2},
    "complement": {"below": 1 - U1, "diagonal": DIAGONAL, "above": 1 - U2},
}


def eta_square(k: int, l: int, convention: str = "complement") -> Tuple[int, IntPolynomial]:
    """Target edge and its right-to-left coordinate ``s`` for the square (k, l), 0-based."""
    forms = CONVENTIONS[convention]
    if l < k:
        return k, forms["below"]
    if k == l:
        return k, forms["diagonal"]
    return l, forms["above"]


@dataclass
class EtaReport:
    n: int
    convention: str
    squares: Dict[Tuple[int, int], Tuple[int, IntPolynomial]]
    constants: Dict[Tuple[int, int], Dict[int, int]]
    pasting_ok: bool
    hom_ok: bool
    endpoint_ok: bool
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.pasting_ok and self.hom_ok and self.endpoint_ok


def solve_eta_constants(N: int, convention: str = "complement"):
    """Fill the components of every square outside its target edge.

    Square (k, l) sends the coordinate ``s_i`` of edge i to a constant for i ≠ target;
    these constants are the unknowns of the side-pasting equations and are found by
    propagation from sides on which a printed formula restricts to a constant.
    Returns ``(tuples, failures)``; tuple entries are polynomials in t1, t2 or ints.
    """
    tuples: Dict[Tuple[int, int], List[Any]] = {}
    for k in range(N):
        for l in range(N):
            i, poly = eta_square(k, l, convention)
            tuples[(k, l)] = [None] * N
            tuples[(k, l)][i] = poly
    # right side of (k, l) meets left side of the next square
    sides = [((k, l), "t1", (k + 1, l)) for k in range(N - 1) for l in range(N)]
    sides += [((k, l), "t2", (k, l + 1)) for k in range(N) for l in range(N - 1)]

    def restrict(p, var, value):
        return None if p is None else IntPolynomial.coerce(p).subs({var: value})

    changed = True
    while changed:
        changed = False
        for a, var, b in sides:
            for i in range(N):
                ra, rb = restrict(tuples[a][i], var, 1), restrict(tuples[b][i], var, 0)
                if ra is not None and rb is None and ra.is_constant():
                    tuples[b][i] = ra.constant_term()
                    changed = True
                elif rb is not None and ra is None and rb.is_constant():
                    tuples[a][i] = rb.constant_term()
                    changed = True
    failures = []
    for a, var, b in sides:
        for i in range(N):
            ra, rb = restrict(tuples[a][i], var, 1), restrict(tuples[b][i], var, 0)
            if ra is None or rb is None:
                failures.append(f"component {i} undetermined on side {a}|{b}")
            elif ra != rb:
                failures.append(f"component {i} differs on side {a}|{b}: {ra} vs {rb}")
    return tuples, failures


def _to_uniform(own: IntPolynomial, orientation: int) -> IntPolynomial:
    return own if orientation == 1 else 1 - own


class Eta:
    """η as a ring map ``ℤ^{sd^n Δ^1} → ℤ^{sd^n Δ^1 × sd^n Δ^1}`` at a degree bound."""

    def __init__(self, n: int, degree: int = 2, convention: str = "complement"):
        self.I = I = interval(n)
        self.n, self.degree, self.convention = n, degree, convention
        self.source = PowerRing(I.K, degree)
        self.P, self.pr1, self.pr2 = product_with_projections(I.K, I.K)
        self.target = PowerRing(self.P, 2 * degree)
        index = {e: i for i, e in enumerate(I.edges)}
        t1 = IntPolynomial.var("t1")
        # each triangle of the product: target edge and the own target coordinate
        self.triangles: Dict[str, Tuple[str, IntPolynomial]] = {}
        for x in self.P.simplices.get(2, ()):
            (w1, e1), (w2, e2) = self.pr1(x), self.pr2(x)
            k, l = index[e1], index[e2]
            u1 = _to_uniform(degeneracy_pullback(w1, 2)(t1), I.orientation[k])
            u2 = _to_uniform(degeneracy_pullback(w2, 2)(t1), I.orientation[l])
            i, s = eta_square(k, l, convention)
            back = s.subs({"t1": u1, "t2": u2})
            own = 1 - back if I.orientation[i] == 1 else back
            self.triangles[x] = (I.edges[i], own)

    def __call__(self, p: PowerRingElement) -> PowerRingElement:
        comps: Dict[str, IntPolynomial] = {}
        for x, (e, own) in self.triangles.items():
            comps[x] = p[e].subs({"t1": own})
        # lower simplices inherit from the first triangle containing them
        for dim in (1, 0):
            for x in self.P.simplices.get(dim + 1, ()):
                for j, (w, y) in enumerate(self.P.faces[x]):
                    if not w and y not in comps and self.P.dim[y] == dim:
                        comps[y] = _face_map(j, dim + 1)(comps[x])
        return PowerRingElement(self.target, comps)

    def restrict_second(self, q: PowerRingElement, side: str) -> Dict[str, IntPolynomial]:
        """Restriction of ``q ∈ ℤ^{K×K}`` to ``K × {left or right end}``, indexed by the edges of K."""
        v = self.I.vertices[0] if side == "left" else self.I.vertices[-1]
        out = {}
        for x in self.P.simplices.get(1, ()):
            (w1, e1), (_, y2) = self.pr1(x), self.pr2(x)
            if not w1 and y2 == v:
                out[e1] = q[x]
        return out


def eta_transformation(n: int, degree: int = 2, convention: str = "complement") -> EtaReport:
    """Assemble η on ``sd^n Δ^1`` and verify it.

    Checks: the side-pasting equations for the constants are solvable; the image of every
    basis element of the degree slice satisfies the compatibility conditions of the
    product; η(1) = 1 and η is multiplicative on basis products; along ``K × {left end}``
    η(p) restricts to p and along ``K × {right end}`` to the constant p(right end).
    """
    I = interval(n)
    N = len(I)
    tuples, failures = solve_eta_constants(N, convention)
    squares = {(k, l): eta_square(k, l, convention) for k in range(N) for l in range(N)}
    constants = {kl: {i: c for i, c in enumerate(tup) if isinstance(c, int)} for kl, tup in tuples.items()}
    pasting_ok = not failures

    eta = Eta(n, degree, convention)
    basis = eta.source.basis()
    images = [eta(b) for b in basis]
    hom_ok = True
    for b, img in zip(basis, images):
        v = img.compatibility_violation()
        if v is not None:
            hom_ok = False
            failures.append(f"image of {b!r} violates compatibility at {v}")
            break
    if not eta(eta.source.one()) == 1:
        hom_ok = False
        failures.append("η(1) ≠ 1")
    for a in range(len(basis)):
        for b in range(a, len(basis)):
            if eta(basis[a] * basis[b]) != images[a] * images[b]:
                hom_ok = False
                failures.append(f"η not multiplicative on basis pair ({a}, {b})")

    endpoint_ok = True
    right = I.vertices[-1]
    for b, img in zip(basis, images):
        bottom = eta.restrict_second(img, "left")
        top = eta.restrict_second(img, "right")
        if any(bottom[e] != b[e] for e in I.edges):
            endpoint_ok = False
            failures.append(f"η({b!r}) does not restrict to the identity on K × left end")
        if any(top[e] != b[right] for e in I.edges):
            endpoint_ok = False
            failures.append(f"η({b!r}) is not constant on K × right end")
    return EtaReport(n, convention, squares, constants, pasting_ok, hom_ok, endpoint_ok, failures)


def _face_map(i: int, n: int):
    from .power import _face_map as fm
    return fm(i, n)
