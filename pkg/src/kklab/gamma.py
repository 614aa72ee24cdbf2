"""Exact arithmetic with ℕ×ℕ integer matrices built from arithmetic progressions.

A :class:`ProgressionMatrix` is a finite integer combination of

* finite entries ``("F", p, q)`` = ``e_{p,q}``, and
* progressions ``("P", a, b, c, d)`` = ``Σ_{i≥0} e_{a i + b, c i + d}``
  with ``a, c ≥ 1`` and ``b, d ≥ 0``.

These form a subring of the cone ring (finitely many values, boundedly many
nonzeros per row and column) containing the finite matrices as an ideal.
Every element is kept in a canonical normal form, so ``==`` is equality of
infinite matrices.  :class:`OracleMatrix` covers locally finite matrices
whose index pattern is not affine.
"""
from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

Term = Tuple

IDENTITY = ("P", 1, 0, 1, 0)


def prog(a: int, b: int, c: int, d: int, i0: int = 0) -> Term:
    """``Σ_{i≥i0} e_{a i + b, c i + d}`` as a term with the start folded in."""
    if a < 1 or c < 1 or b < 0 or d < 0 or i0 < 0:
        raise ValueError("progression needs a, c >= 1 and b, d, i0 >= 0")
    return ("P", a, b + a * i0, c, d + c * i0)


def entry(p: int, q: int) -> Term:
    if p < 0 or q < 0:
        raise ValueError("matrix indices are non-negative")
    return ("F", p, q)


def _term_product(s: Term, t: Term) -> Optional[Term]:
    if s[0] == "F" and t[0] == "F":
        return ("F", s[1], t[2]) if s[2] == t[1] else None
    if s[0] == "F":
        _, p, q = s
        _, a, b, c, d = t
        if q < b or (q - b) % a:
            return None
        return ("F", p, c * ((q - b) // a) + d)
    if t[0] == "F":
        _, a, b, c, d = s
        _, p, q = t
        if p < d or (p - d) % c:
            return None
        return ("F", a * ((p - d) // c) + b, q)
    _, a, b, c, d = s
    _, a2, b2, c2, d2 = t
    # c i + d = a2 j + b2 with i, j >= 0
    g, x, y = _egcd(c, a2)
    rhs = b2 - d
    if rhs % g:
        return None
    i0, j0 = x * (rhs // g), y * (rhs // g)
    si, sj = a2 // g, c // g
    m = max(_ceil_div(-i0, si), _ceil_div(-j0, sj))
    i, j = i0 + si * m, j0 + sj * m
    return ("P", a * si, a * i + b, c2 * sj, c2 * j + d2)


def _egcd(a: int, b: int):
    """``(g, x, y)`` with ``a x - b y = g``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, -old_t


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _lcm(xs: Iterable[int]) -> int:
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x)
    return out


class _Line:
    """A lattice line ``k ↦ (r0 + da k, s0 + dc k)``, k ≥ 0, with (r0, s0) its first point in ℕ²."""

    __slots__ = ("da", "dc", "r0", "s0", "pieces")

    def __init__(self, da, dc, r0, s0):
        self.da, self.dc, self.r0, self.s0 = da, dc, r0, s0
        self.pieces: List[Tuple[int, int, int]] = []  # (k0, step, coeff)

    def param(self, r: int, s: int) -> Optional[int]:
        if r < self.r0 or (r - self.r0) % self.da:
            return None
        k = (r - self.r0) // self.da
        return k if s == self.s0 + self.dc * k else None

    def point(self, k: int) -> Tuple[int, int]:
        return self.r0 + self.da * k, self.s0 + self.dc * k

    def own(self, k: int) -> int:
        return sum(c for k0, g, c in self.pieces if k >= k0 and (k - k0) % g == 0)


def _line_of(t: Term) -> Tuple[Tuple[int, int, int, int], int, int]:
    _, a, b, c, d = t
    g = math.gcd(a, c)
    da, dc = a // g, c // g
    m = min(b // da, d // dc)
    return (da, dc, b - da * m, d - dc * m), m, g


def _crossing(l1: _Line, l2: _Line) -> Optional[Tuple[int, int]]:
    det = l1.da * l2.dc - l1.dc * l2.da
    if det == 0:
        return None
    dr, ds = l2.r0 - l1.r0, l2.s0 - l1.s0
    k1 = Fraction(dr * l2.dc - ds * l2.da, det)
    k2 = Fraction(dr * l1.dc - ds * l1.da, det)
    if k1.denominator != 1 or k2.denominator != 1 or k1 < 0 or k2 < 0:
        return None
    return int(k1), int(k2)


def normalize(terms: Dict[Term, int]) -> Dict[Term, int]:
    """Canonical form: a unique term dict for each infinite matrix.

    Along every line the entries are eventually periodic.  Each line with a
    nonzero periodic part contributes progressions of minimal period starting
    at the least threshold that also clears all crossings with other such
    lines; all remaining nonzero entries become finite entries.
    """
    finite: Dict[Tuple[int, int], int] = {}
    lines: Dict[Tuple[int, int, int, int], _Line] = {}
    for t, c in terms.items():
        if not c:
            continue
        if t[0] == "F":
            finite[(t[1], t[2])] = finite.get((t[1], t[2]), 0) + c
        else:
            key, k0, g = _line_of(t)
            if key not in lines:
                lines[key] = _Line(*key)
            lines[key].pieces.append((k0, g, c))
    line_list = [lines[k] for k in sorted(lines)]

    def value(r: int, s: int) -> int:
        v = finite.get((r, s), 0)
        for ln in line_list:
            k = ln.param(r, s)
            if k is not None:
                v += ln.own(k)
        return v

    info = []
    for ln in line_list:
        L = _lcm(g for _, g, _ in ln.pieces)
        K0 = max(k0 for k0, _, _ in ln.pieces)
        h = [ln.own(K0 + rho) for rho in range(L)]
        if any(h):
            L = min(p for p in range(1, L + 1) if L % p == 0 and all(h[r] == h[(r + p) % L] for r in range(L)))
        info.append((ln, L, K0, any(h)))

    tails = [(ln, L, K0) for ln, L, K0, nz in info if nz]
    thresholds = {}
    for ln, L, K0 in tails:
        bound = K0
        floor = 0
        for (p, q) in finite:
            k = ln.param(p, q)
            if k is not None:
                bound = max(bound, k + 1)
        for other, _, _, nz in info:
            if other is ln:
                continue
            cr = _crossing(ln, other)
            if cr is not None:
                bound = max(bound, cr[0] + 1)
                if nz:
                    floor = max(floor, cr[0] + 1)
        T = max(bound, floor)
        while T - 1 >= floor and value(*ln.point(T - 1)) == value(*ln.point(T - 1 + L)):
            T -= 1
        thresholds[id(ln)] = T

    out: Dict[Term, int] = {}
    for ln, L, K0 in tails:
        T = thresholds[id(ln)]
        for rho in range(L):
            c = value(*ln.point(T + rho))
            if c:
                r, s = ln.point(T + rho)
                out[("P", ln.da * L, r, ln.dc * L, s)] = c

    def in_tail(r, s):
        for ln, L, K0 in tails:
            k = ln.param(r, s)
            if k is not None and k >= thresholds[id(ln)]:
                return True
        return False

    candidates = set(finite)
    for ln, L, K0, nz in info:
        upto = thresholds[id(ln)] if nz else K0
        for k in range(upto):
            candidates.add(ln.point(k))
    for (r, s) in candidates:
        if in_tail(r, s):
            continue
        v = value(r, s)
        if v:
            out[("F", r, s)] = v
    return dict(sorted(out.items()))


class ProgressionMatrix:
    """An element of the progression subring, always in normal form."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Optional[Dict[Term, int]] = None, normalized: bool = False):
        terms = terms or {}
        for t in terms:
            _check_term(t)
        self.terms: Dict[Term, int] = dict(terms) if normalized else normalize(terms)
        self._hash = None

    # constructors
    @classmethod
    def zero(cls) -> "ProgressionMatrix":
        return cls({}, normalized=True)

    @classmethod
    def identity(cls) -> "ProgressionMatrix":
        return cls({IDENTITY: 1})

    @classmethod
    def unit(cls, p: int, q: int) -> "ProgressionMatrix":
        return cls({entry(p, q): 1})

    @classmethod
    def progression(cls, a, b, c, d, i0=0, coeff=1) -> "ProgressionMatrix":
        return cls({prog(a, b, c, d, i0): coeff})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, ProgressionMatrix):
            return x
        if isinstance(x, int):
            return cls({IDENTITY: x}) if x else cls.zero()
        return NotImplemented

    # arithmetic
    def __add__(self, other):
        other = ProgressionMatrix.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        merged = dict(self.terms)
        for t, c in other.terms.items():
            merged[t] = merged.get(t, 0) + c
        return ProgressionMatrix(merged)

    __radd__ = __add__

    def __neg__(self):
        return ProgressionMatrix({t: -c for t, c in self.terms.items()}, normalized=True)

    def __sub__(self, other):
        other = ProgressionMatrix.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = ProgressionMatrix.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ProgressionMatrix.zero()
            return ProgressionMatrix({t: c * other for t, c in self.terms.items()}, normalized=True)
        if not isinstance(other, ProgressionMatrix):
            return NotImplemented
        out: Dict[Term, int] = {}
        for s, c1 in self.terms.items():
            for t, c2 in other.terms.items():
                p = _term_product(s, t)
                if p is not None:
                    out[p] = out.get(p, 0) + c1 * c2
        return ProgressionMatrix(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        out = ProgressionMatrix.identity()
        for _ in range(n):
            out = out * self
        return out

    def transpose(self) -> "ProgressionMatrix":
        out = {}
        for t, c in self.terms.items():
            if t[0] == "F":
                out[("F", t[2], t[1])] = c
            else:
                out[("P", t[3], t[4], t[1], t[2])] = c
        return ProgressionMatrix(out)

    # comparison
    def __eq__(self, other):
        other = ProgressionMatrix.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # entries
    def __call__(self, r: int, s: int) -> int:
        v = 0
        for t, c in self.terms.items():
            if t[0] == "F":
                if t[1] == r and t[2] == s:
                    v += c
            else:
                _, a, b, cc, d = t
                if r >= b and (r - b) % a == 0 and s == cc * ((r - b) // a) + d:
                    v += c
        return v

    def row_support(self, r: int) -> List[int]:
        cols = set()
        for t in self.terms:
            if t[0] == "F":
                if t[1] == r:
                    cols.add(t[2])
            else:
                _, a, b, c, d = t
                if r >= b and (r - b) % a == 0:
                    cols.add(c * ((r - b) // a) + d)
        return sorted(cols)

    def col_support(self, s: int) -> List[int]:
        return self.transpose().row_support(s)

    def is_finite(self) -> bool:
        return all(t[0] == "F" for t in self.terms)

    def term_count(self) -> int:
        return len(self.terms)

    def as_oracle(self) -> "OracleMatrix":
        return OracleMatrix(self.__call__, self.row_support, self.col_support,
                            max_row=self.term_count(), max_col=self.term_count(),
                            values=set(self.terms.values()) | {0})

    def to_json(self) -> list:
        return [[list(t), c] for t, c in self.terms.items()]

    @classmethod
    def from_json(cls, data) -> "ProgressionMatrix":
        return cls({tuple(t): c for t, c in data})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for t, c in self.terms.items():
            s = f"e[{t[1]},{t[2]}]" if t[0] == "F" else f"P({t[1]}i+{t[2]},{t[3]}i+{t[4]})"
            parts.append(s if c == 1 else f"{c}*{s}")
        return " + ".join(parts)


def _check_term(t: Term) -> None:
    if t[0] == "F":
        if len(t) != 3 or t[1] < 0 or t[2] < 0:
            raise ValueError(f"bad finite entry {t!r}")
    elif t[0] == "P":
        if len(t) != 5 or t[1] < 1 or t[3] < 1 or t[2] < 0 or t[4] < 0:
            raise ValueError(f"bad progression {t!r}")
    else:
        raise ValueError(f"unknown term kind {t!r}")


PM = ProgressionMatrix

ALPHA_HAT = PM.progression(1, 0, 1, 1)   # Σ e_{i,i+1}
BETA_HAT = PM.progression(1, 1, 1, 0)    # Σ e_{i+1,i}


def sum_ring_generators():
    """``α₁ = Σ e_{i,2i}, β₁ = Σ e_{2i,i}, α₂ = Σ e_{i,2i+1}, β₂ = Σ e_{2i+1,i}``."""
    a1 = PM.progression(1, 0, 2, 0)
    b1 = PM.progression(2, 0, 1, 0)
    a2 = PM.progression(1, 0, 2, 1)
    b2 = PM.progression(2, 1, 1, 0)
    return a1, b1, a2, b2


def sum_ring_data(max_power: int = 4):
    """The four generators with a dict of named relation checks."""
    a1, b1, a2, b2 = sum_ring_generators()
    one = PM.identity()
    checks = {
        "α₁β₁ = 1": a1 * b1 == one,
        "α₂β₂ = 1": a2 * b2 == one,
        "β₁α₁ + β₂α₂ = 1": b1 * a1 + b2 * a2 == one,
        "α₂β₁ = 0": a2 * b1 == 0,
        "α₁β₂ = 0": a1 * b2 == 0,
    }
    ok = True
    for i in range(max_power + 1):
        for j in range(max_power + 1):
            val = a1 * a2 ** i * b2 ** j * b1
            ok &= val == (one if i == j else 0)
    checks[f"α₁α₂^iβ₂^jβ₁ = δ_ij (i,j ≤ {max_power})"] = ok
    return (a1, b1, a2, b2), checks


def oplus(x: ProgressionMatrix, y: ProgressionMatrix) -> ProgressionMatrix:
    """``x ⊕ y = β₁ x α₁ + β₂ y α₂``."""
    a1, b1, a2, b2 = sum_ring_generators()
    return b1 * x * a1 + b2 * y * a2


def m_infinity_split(x: ProgressionMatrix):
    """(finite part, progression part) of the normal form."""
    fin = {t: c for t, c in x.terms.items() if t[0] == "F"}
    rest = {t: c for t, c in x.terms.items() if t[0] == "P"}
    return PM(fin, normalized=True), PM(rest, normalized=True)


def associator() -> ProgressionMatrix:
    """Permutation ``U`` with ``U ((x⊕y)⊕z) Uᵀ = x⊕(y⊕z)``."""
    return PM({("P", 2, 0, 4, 0): 1, ("P", 4, 1, 4, 2): 1, ("P", 4, 3, 2, 1): 1})


def random_progression(rng: random.Random, max_terms: int = 6, bound: int = 8) -> ProgressionMatrix:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        c = rng.choice([-2, -1, 1, 1, 2, 3])
        if rng.random() < 0.3:
            t = ("F", rng.randint(0, bound), rng.randint(0, bound))
        else:
            t = ("P", rng.randint(1, bound), rng.randint(0, bound), rng.randint(1, bound), rng.randint(0, bound))
        terms[t] = terms.get(t, 0) + c
    return PM(terms)


# lazily evaluated matrices

class OracleMatrix:
    """Locally finite ℕ×ℕ matrix given by an entry function and support enumerators."""

    def __init__(self, entry_fn: Callable[[int, int], int], row_support: Callable[[int], Iterable[int]],
                 col_support: Callable[[int], Iterable[int]], max_row: Optional[int] = None,
                 max_col: Optional[int] = None, values: Optional[set] = None):
        self.entry_fn = entry_fn
        self._row = row_support
        self._col = col_support
        self.max_row = max_row
        self.max_col = max_col
        self.values = values

    def __call__(self, r: int, s: int) -> int:
        return self.entry_fn(r, s)

    def row_support(self, r: int) -> List[int]:
        return sorted(set(self._row(r)))

    def col_support(self, s: int) -> List[int]:
        return sorted(set(self._col(s)))

    @staticmethod
    def lift(x) -> "OracleMatrix":
        if isinstance(x, OracleMatrix):
            return x
        if isinstance(x, ProgressionMatrix):
            return x.as_oracle()
        if isinstance(x, int):
            return ProgressionMatrix.coerce(x).as_oracle()
        raise TypeError(f"cannot view {type(x).__name__} as a matrix")

    def __add__(self, other):
        other = OracleMatrix.lift(other)
        return OracleMatrix(lambda r, s: self(r, s) + other(r, s),
                            lambda r: set(self.row_support(r)) | set(other.row_support(r)),
                            lambda s: set(self.col_support(s)) | set(other.col_support(s)),
                            _add(self.max_row, other.max_row), _add(self.max_col, other.max_col))

    __radd__ = __add__

    def __neg__(self):
        return OracleMatrix(lambda r, s: -self(r, s), self._row, self._col, self.max_row, self.max_col)

    def __sub__(self, other):
        return self + (-OracleMatrix.lift(other))

    def __mul__(self, other):
        other = OracleMatrix.lift(other)

        def e(r, s):
            return sum(self(r, k) * other(k, s) for k in self.row_support(r))

        def rows(r):
            return {j for k in self.row_support(r) for j in other.row_support(k)}

        def cols(s):
            return {i for k in other.col_support(s) for i in self.col_support(k)}

        return OracleMatrix(e, rows, cols, _mul(self.max_row, other.max_row), _mul(self.max_col, other.max_col))

    def __rmul__(self, other):
        return OracleMatrix.lift(other) * self


def _add(a, b):
    return None if a is None or b is None else a + b


def _mul(a, b):
    return None if a is None or b is None else a * b


def decode_phi_index(r: int) -> Tuple[int, int]:
    """``(k, i)`` with ``r = 2^{k+1} i + 2^k - 1``, i.e. ``r + 1 = 2^k (2i + 1)``."""
    n = r + 1
    k = (n & -n).bit_length() - 1
    return k, (n >> k) // 2


def phi_infinity(x) -> OracleMatrix:
    """``φ^∞(x) = Σ_k β₂^k β₁ x α₁ α₂^k``: entry ``x(i,j)`` at ``(2^{k+1}i+2^k-1, 2^{k+1}j+2^k-1)``."""
    x = OracleMatrix.lift(x)

    def e(r, s):
        k1, i = decode_phi_index(r)
        k2, j = decode_phi_index(s)
        return x(i, j) if k1 == k2 else 0

    def rows(r):
        k, i = decode_phi_index(r)
        return [(2 * j + 1) * 2 ** k - 1 for j in x.row_support(i)]

    def cols(s):
        k, j = decode_phi_index(s)
        return [(2 * i + 1) * 2 ** k - 1 for i in x.col_support(j)]

    return OracleMatrix(e, rows, cols, x.max_row, x.max_col, x.values)


def oracle_oplus(x, y) -> OracleMatrix:
    """``β₁ x α₁ + β₂ y α₂`` for lazily evaluated operands."""
    x, y = OracleMatrix.lift(x), OracleMatrix.lift(y)

    def e(r, s):
        if r % 2 != s % 2:
            return 0
        return x(r // 2, s // 2) if r % 2 == 0 else y(r // 2, s // 2)

    def rows(r):
        src = x if r % 2 == 0 else y
        return [2 * j + r % 2 for j in src.row_support(r // 2)]

    def cols(s):
        src = x if s % 2 == 0 else y
        return [2 * i + s % 2 for i in src.col_support(s // 2)]

    return OracleMatrix(e, rows, cols, _max(x.max_row, y.max_row), _max(x.max_col, y.max_col))


def _max(a, b):
    return None if a is None or b is None else max(a, b)


# windows

def window(x, N: int) -> List[List[int]]:
    x = OracleMatrix.lift(x) if not isinstance(x, (ProgressionMatrix, OracleMatrix)) else x
    return [[x(i, j) for j in range(N)] for i in range(N)]


def int_matmul(a: List[List[int]], b: List[List[int]]) -> List[List[int]]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(r, c)) for c in bt] for r in a]


class InsufficientWindow(ValueError):
    pass


def safe_rows(x, N: int) -> int:
    """Largest M such that rows r < M of x have all their support inside [0, N)."""
    x = OracleMatrix.lift(x)
    M = 0
    while M < N and all(j < N for j in x.row_support(M)):
        M += 1
    return M


def window_product_check(x, y, N: int):
    """Compare ``window(x·y)`` with ``window(x)·window(y)`` on the rows where truncation is exact.

    Returns ``(ok, M)`` with M the size of the compared block of rows.
    """
    X, Y = OracleMatrix.lift(x), OracleMatrix.lift(y)
    M = safe_rows(X, N)
    if M == 0:
        raise InsufficientWindow(f"window {N} too small: row 0 reaches outside")
    lhs = window(X * Y, N)[:M]
    rhs = int_matmul(window(X, N)[:M], window(Y, N))
    return lhs == rhs, M


def windows_agree(x, y, N: int) -> bool:
    return window(OracleMatrix.lift(x), N) == window(OracleMatrix.lift(y), N)


def gamma_conditions(x, N: int, bound: Optional[int] = None) -> bool:
    """Finite value set and at most ``bound`` nonzeros per row and column on the window."""
    x = OracleMatrix.lift(x)
    if bound is None:
        bound = x.max_row
    W = window(x, N)
    values = {v for row in W for v in row}
    if x.values is not None and not values <= x.values:
        return False
    rows_ok = all(sum(1 for v in row if v) <= bound for row in W)
    cols_ok = all(sum(1 for v in col if v) <= bound for col in zip(*W))
    return rows_ok and cols_ok


# block matrices with unbounded values

def wodzicki_window(N: int) -> List[List[int]]:
    """Block-diagonal all-ones blocks of sizes 1, 2, 3, ... truncated to [0, N)²."""
    block = [0] * N
    start, size, b = 0, 1, 0
    while start < N:
        for k in range(start, min(start + size, N)):
            block[k] = b
        start += size
        size += 1
        b += 1
    return [[1 if block[i] == block[j] else 0 for j in range(N)] for i in range(N)]


def wodzicki_blowup(N: int) -> int:
    """Maximum entry of the square of the truncated block matrix."""
    A = wodzicki_window(N)
    return max(max(r) for r in int_matmul(A, A))


def largest_full_block(N: int) -> int:
    m = 0
    while (m + 1) * (m + 2) // 2 <= N:
        m += 1
    return m


# Wagoner's conjugation

def wagoner_Q():
    """``Q`` and its inverse as 3×3 matrices over the progression ring."""
    from .rings import RingMatrix

    a1, b1, a2, b2 = sum_ring_generators()
    z, one = PM.zero(), PM.identity()
    Q = RingMatrix([[a1, z, z], [a2, z, z], [z, b1, b2]], z, one)
    Qinv = RingMatrix([[b1, b2, z], [z, z, a1], [z, z, a2]], z, one)
    return Q, Qinv


def wagoner_Q_check(samples: Sequence[Tuple[ProgressionMatrix, ProgressionMatrix]]):
    """``QQ⁻¹ = Q⁻¹Q = 1`` and ``Q diag(a⊕b,0,0) Q⁻¹ = diag(a,b,0)`` on the samples."""
    from .rings import RingMatrix

    Q, Qinv = wagoner_Q()
    z, one = PM.zero(), PM.identity()
    ident = RingMatrix.identity(3, z, one)
    if Q * Qinv != ident or Qinv * Q != ident:
        return False, "QQ⁻¹ or Q⁻¹Q differs from 1"
    for a, b in samples:
        lhs = Q * RingMatrix.diag([oplus(a, b), z, z], z, one) * Qinv
        rhs = RingMatrix.diag([a, b, z], z, one)
        if lhs != rhs:
            return False, (a, b)
    return True, None


def wagoner_window_check(a, b, N: int) -> bool:
    """The conjugation identity entrywise on a window, for lazily evaluated a, b."""
    a1, b1, a2, b2 = [g.as_oracle() for g in sum_ring_generators()]
    c = oracle_oplus(a, b)
    blocks = {
        (0, 0): a1 * c * b1, (0, 1): a1 * c * b2,
        (1, 0): a2 * c * b1, (1, 1): a2 * c * b2,
    }
    expected = {(0, 0): OracleMatrix.lift(a), (0, 1): OracleMatrix.lift(0),
                (1, 0): OracleMatrix.lift(0), (1, 1): OracleMatrix.lift(b)}
    return all(window(blocks[k], N) == window(expected[k], N) for k in blocks)
