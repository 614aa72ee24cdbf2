"""Finite simplicial sets stored through their nondegenerate simplices.

An n-simplex is written as a normal-form pair ``(word, y)``: ``y`` is a
nondegenerate simplex id and ``word`` a strictly decreasing tuple of
degeneracy indices, so the pair stands for ``s_{j1} ... s_{jk} y``.  The set
of indices in the word is exactly the set of ``j`` with ``θ(j) = θ(j+1)``
for the underlying surjection ``θ: [n] -> [dim y]``, and most of the code
below works with those surjections directly.
"""
from __future__ import annotations

import itertools
import json
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

Word = Tuple[int, ...]
Pair = Tuple[Word, str]


class SimplicialError(ValueError):
    """Raised for malformed simplicial data."""


# degeneracy words <-> surjections

def surjection_of(word: Sequence[int], n: int) -> Tuple[int, ...]:
    """The surjection ``[n] -> [n - len(word)]`` collapsing ``j, j+1`` for ``j`` in word."""
    js = set(word)
    theta = [0]
    for j in range(n):
        theta.append(theta[-1] + (0 if j in js else 1))
    return tuple(theta)


def word_of(theta: Sequence[int]) -> Word:
    return tuple(sorted((j for j in range(len(theta) - 1) if theta[j] == theta[j + 1]), reverse=True))


def normalize_word(word: Sequence[int]) -> Word:
    """Normal form of the composite ``s_{a1} s_{a2} ... s_{ak}`` (a1 outermost)."""
    w = list(word)
    changed = True
    while changed:
        changed = False
        for m in range(len(w) - 1):
            if w[m] <= w[m + 1]:
                # s_i s_j = s_{j+1} s_i for i <= j
                w[m], w[m + 1] = w[m + 1] + 1, w[m]
                changed = True
    return tuple(w)


def fmt_pair(pair: Pair) -> str:
    word, y = pair
    if not word:
        return y
    return "s" + ".".join(map(str, word)) + ":" + y


class FiniteSimplicialSet:
    """A finite simplicial set.

    ``simplices[n]`` lists the nondegenerate n-simplex ids in a fixed
    traversal order; ``faces[x][i]`` is the normal form of ``d_i x``.
    """

    def __init__(self, simplices: Mapping[int, Sequence[str]], faces: Mapping[str, Sequence[Pair]],
                 basepoint: Optional[str] = None, validate: bool = True):
        self.simplices: Dict[int, Tuple[str, ...]] = {
            int(n): tuple(ids) for n, ids in sorted(simplices.items()) if ids}
        self.faces: Dict[str, Tuple[Pair, ...]] = {
            x: tuple((tuple(w), y) for w, y in fs) for x, fs in faces.items()}
        self.dim: Dict[str, int] = {}
        for n, ids in self.simplices.items():
            for x in ids:
                if x in self.dim:
                    raise SimplicialError(f"duplicate simplex id {x!r}")
                self.dim[x] = n
        self.basepoint = basepoint
        if validate:
            self.validate()

    # basic data
    @property
    def dims(self) -> List[int]:
        return sorted(self.simplices)

    @property
    def dimension(self) -> int:
        return max(self.simplices, default=-1)

    def nondegenerate(self, n: int) -> Tuple[str, ...]:
        return self.simplices.get(n, ())

    def vertices(self) -> Tuple[str, ...]:
        return self.nondegenerate(0)

    def all_ids(self) -> List[str]:
        return [x for n in self.dims for x in self.simplices[n]]

    def counts(self) -> Tuple[int, ...]:
        return tuple(len(self.simplices.get(n, ())) for n in range(self.dimension + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * len(ids) for n, ids in self.simplices.items())

    def pair_dim(self, pair: Pair) -> int:
        return self.dim[pair[1]] + len(pair[0])

    # face and degeneracy operators on normal forms
    def face(self, i: int, pair: Pair) -> Pair:
        word, y = pair
        n = self.dim[y] + len(word)
        if not 0 <= i <= n or n == 0:
            raise SimplicialError(f"face d_{i} undefined on a {n}-simplex")
        theta = surjection_of(word, n)
        composite = theta[:i] + theta[i + 1:]
        m = self.dim[y]
        missing = [v for v in range(m + 1) if v not in composite]
        if not missing:
            return word_of(composite), y
        # exactly one value is missed; factor through d_v of y
        v = missing[0]
        reduced = tuple(c if c < v else c - 1 for c in composite)
        fw, z = self.faces[y][v]
        inner = surjection_of(fw, m - 1)
        return word_of(tuple(inner[c] for c in reduced)), z

    def degeneracy(self, j: int, pair: Pair) -> Pair:
        n = self.pair_dim(pair)
        if not 0 <= j <= n:
            raise SimplicialError(f"degeneracy s_{j} undefined on a {n}-simplex")
        return normalize_word((j,) + pair[0]), pair[1]

    def iterated_face(self, pair: Pair, keep: Sequence[int]) -> Pair:
        """Restriction of an n-simplex to the vertex subset ``keep`` of ``[n]``."""
        n = self.pair_dim(pair)
        keep = set(keep)
        for i in range(n, -1, -1):
            if i not in keep:
                pair = self.face(i, pair)
        return pair

    def vertex_of(self, pair: Pair, k: int) -> str:
        return self.iterated_face(pair, [k])[1]

    def simplices_of_dim(self, n: int) -> List[Pair]:
        """All n-simplices (degenerate ones included) as normal-form pairs."""
        out = []
        for m in range(0, n + 1):
            for y in self.simplices.get(m, ()):
                for J in itertools.combinations(range(n - 1, -1, -1), n - m):
                    out.append((tuple(J), y))
        return out

    # validation
    def validate(self) -> None:
        for n, ids in self.simplices.items():
            for x in ids:
                if n == 0:
                    if self.faces.get(x):
                        raise SimplicialError(f"vertex {x!r} must not have faces")
                    continue
                fs = self.faces.get(x)
                if fs is None or len(fs) != n + 1:
                    raise SimplicialError(f"simplex {x!r} of dimension {n} needs {n + 1} faces")
                for i, (w, y) in enumerate(fs):
                    if y not in self.dim:
                        raise SimplicialError(f"face {i} of {x!r} references unknown simplex {y!r}")
                    if list(w) != sorted(set(w), reverse=True):
                        raise SimplicialError(f"face {i} of {x!r} has a word that is not strictly decreasing: {w}")
                    if self.dim[y] + len(w) != n - 1:
                        raise SimplicialError(f"face {i} of {x!r} has the wrong dimension")
                    if w and (w[-1] < 0 or w[0] > n - 2):
                        raise SimplicialError(f"face {i} of {x!r} has an out-of-range degeneracy index")
        for x in self.faces:
            if x not in self.dim:
                raise SimplicialError(f"faces given for unknown simplex {x!r}")
        if self.basepoint is not None and self.dim.get(self.basepoint) != 0:
            raise SimplicialError(f"basepoint {self.basepoint!r} is not a vertex")
        bad = self.identity_violation()
        if bad is not None:
            raise SimplicialError(f"simplicial identity d_{bad[1]} d_{bad[2]} fails on {bad[0]!r}")

    def identity_violation(self):
        """First ``(x, i, j)`` with ``d_i d_j x != d_{j-1} d_i x`` (i < j), or None."""
        for n in self.dims:
            if n < 2:
                continue
            for x in self.simplices[n]:
                p = ((), x)
                for j in range(n + 1):
                    for i in range(j):
                        if self.face(i, self.face(j, p)) != self.face(j - 1, self.face(i, p)):
                            return x, i, j
        return None

    # comparisons
    def is_isomorphic(self, other: "FiniteSimplicialSet") -> bool:
        return find_isomorphism(self, other) is not None

    def relabel(self, prefix: str = "") -> "FiniteSimplicialSet":
        """Copy with compact ids ``v0, v1, ..., e0, ..., s2_0, ...`` in traversal order."""
        names = {}
        for n, ids in self.simplices.items():
            tag = {0: "v", 1: "e", 2: "f"}.get(n, f"s{n}_")
            for k, x in enumerate(ids):
                names[x] = f"{prefix}{tag}{k}"
        return self.rename(names)

    def rename(self, names: Mapping[str, str]) -> "FiniteSimplicialSet":
        simplices = {n: [names[x] for x in ids] for n, ids in self.simplices.items()}
        faces = {names[x]: [(w, names[y]) for w, y in fs] for x, fs in self.faces.items()}
        bp = names[self.basepoint] if self.basepoint is not None else None
        return FiniteSimplicialSet(simplices, faces, bp, validate=False)

    def with_basepoint(self, vertex: str) -> "FiniteSimplicialSet":
        if self.dim.get(vertex) != 0:
            raise SimplicialError(f"basepoint {vertex!r} is not a vertex")
        return FiniteSimplicialSet(self.simplices, self.faces, vertex, validate=False)

    def subcomplex_closure(self, ids: Iterable[str]) -> set:
        out = set()
        stack = list(ids)
        while stack:
            x = stack.pop()
            if x in out:
                continue
            if x not in self.dim:
                raise SimplicialError(f"unknown simplex {x!r}")
            out.add(x)
            stack.extend(y for _, y in self.faces.get(x, ()))
        return out

    def is_subcomplex(self, ids: Iterable[str]) -> bool:
        ids = set(ids)
        return all(x in self.dim for x in ids) and self.subcomplex_closure(ids) == ids

    def restrict(self, ids: Iterable[str]) -> "FiniteSimplicialSet":
        ids = set(ids)
        if not self.is_subcomplex(ids):
            raise SimplicialError("not a subcomplex")
        simplices = {n: [x for x in xs if x in ids] for n, xs in self.simplices.items()}
        faces = {x: fs for x, fs in self.faces.items() if x in ids}
        bp = self.basepoint if self.basepoint in ids else None
        return FiniteSimplicialSet(simplices, faces, bp, validate=False)

    # serialization
    def to_json(self) -> dict:
        data = {
            "dims": self.dims,
            "simplices": {
                str(n): (list(ids) if n == 0 else
                         [{"id": x, "faces": [[list(w), y] for w, y in self.faces[x]]} for x in ids])
                for n, ids in self.simplices.items()
            },
        }
        if self.basepoint is not None:
            data["basepoint"] = self.basepoint
        return data

    @classmethod
    def from_json(cls, data) -> "FiniteSimplicialSet":
        if not isinstance(data, dict) or "simplices" not in data:
            raise SimplicialError("expected an object with a 'simplices' field")
        raw = data["simplices"]
        if not isinstance(raw, dict):
            raise SimplicialError("'simplices' must map dimensions to lists")
        simplices: Dict[int, List[str]] = {}
        faces: Dict[str, List[Pair]] = {}
        for key, entries in raw.items():
            try:
                n = int(key)
            except ValueError:
                raise SimplicialError(f"bad dimension key {key!r}") from None
            if n < 0 or not isinstance(entries, list):
                raise SimplicialError(f"bad entry list for dimension {key!r}")
            ids = []
            for entry in entries:
                if n == 0:
                    if isinstance(entry, dict):
                        entry = entry.get("id")
                    if not isinstance(entry, str):
                        raise SimplicialError(f"vertex ids must be strings, got {entry!r}")
                    ids.append(entry)
                    continue
                if not isinstance(entry, dict) or not isinstance(entry.get("id"), str):
                    raise SimplicialError(f"simplex entries in dimension {n} need a string 'id'")
                fs = entry.get("faces")
                if not isinstance(fs, list):
                    raise SimplicialError(f"simplex {entry['id']!r} needs a 'faces' list")
                parsed = []
                for f in fs:
                    if (not isinstance(f, list) or len(f) != 2 or not isinstance(f[0], list)
                            or not isinstance(f[1], str) or not all(isinstance(j, int) for j in f[0])):
                        raise SimplicialError(f"bad face {f!r} of simplex {entry['id']!r}")
                    parsed.append((tuple(f[0]), f[1]))
                ids.append(entry["id"])
                faces[entry["id"]] = parsed
            simplices[n] = ids
        if "dims" in data:
            declared = sorted(data["dims"]) if isinstance(data["dims"], list) else None
            if declared != sorted(n for n, ids in simplices.items() if ids):
                raise SimplicialError("'dims' does not match the dimensions carrying simplices")
        return cls(simplices, faces, data.get("basepoint"))

    def __eq__(self, other):
        if not isinstance(other, FiniteSimplicialSet):
            return NotImplemented
        return (self.simplices == other.simplices and self.faces == other.faces
                and self.basepoint == other.basepoint)

    def __repr__(self):
        return f"FiniteSimplicialSet(counts={self.counts()})"


def load_simplicial(path) -> FiniteSimplicialSet:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SimplicialError(f"invalid JSON: {exc}") from None
    return FiniteSimplicialSet.from_json(data)


def find_isomorphism(K: FiniteSimplicialSet, L: FiniteSimplicialSet) -> Optional[Dict[str, str]]:
    """Backtracking search for a bijection of nondegenerate simplices commuting with faces."""
    if K.counts() != L.counts():
        return None
    order = [x for n in reversed(K.dims) for x in K.simplices[n]]

    def extend(k, fwd, bwd):
        if k == len(order):
            return dict(fwd)
        x = order[k]
        if x in fwd:
            return extend(k + 1, fwd, bwd)
        for y in L.simplices[K.dim[x]]:
            if y in bwd:
                continue
            f2, b2 = dict(fwd), dict(bwd)
            if _assign(K, L, x, y, f2, b2):
                res = extend(k + 1, f2, b2)
                if res is not None:
                    return res
        return None

    return extend(0, {}, {})


def _assign(K, L, x, y, fwd, bwd) -> bool:
    stack = [(x, y)]
    while stack:
        a, b = stack.pop()
        if a in fwd or b in bwd:
            if fwd.get(a) != b or bwd.get(b) != a:
                return False
            continue
        if K.dim[a] != L.dim[b]:
            return False
        fwd[a], bwd[b] = b, a
        for (w1, y1), (w2, y2) in zip(K.faces.get(a, ()), L.faces.get(b, ())):
            if w1 != w2:
                return False
            stack.append((y1, y2))
    return True


class SimplicialMap:
    """A map of simplicial sets given on nondegenerate simplices."""

    def __init__(self, source: FiniteSimplicialSet, target: FiniteSimplicialSet,
                 assignment: Mapping[str, Pair], validate: bool = True):
        self.source = source
        self.target = target
        self.assignment: Dict[str, Pair] = {x: (tuple(w), y) for x, (w, y) in assignment.items()}
        if validate:
            problem = self.violation()
            if problem:
                raise SimplicialError(problem)

    def apply(self, pair: Pair) -> Pair:
        word, x = pair
        iw, y = self.assignment[x]
        return normalize_word(word + iw), y

    def __call__(self, x) -> Pair:
        if isinstance(x, str):
            return self.assignment[x]
        return self.apply(x)

    def violation(self) -> Optional[str]:
        for x in self.source.all_ids():
            if x not in self.assignment:
                return f"no image for {x!r}"
            img = self.assignment[x]
            if img[1] not in self.target.dim:
                return f"image of {x!r} is not in the target"
            if self.target.pair_dim(img) != self.source.dim[x]:
                return f"image of {x!r} has the wrong dimension"
        for x in self.source.all_ids():
            n = self.source.dim[x]
            if n == 0:
                continue
            for i in range(n + 1):
                lhs = self.apply(self.source.face(i, ((), x)))
                rhs = self.target.face(i, self.assignment[x])
                if lhs != rhs:
                    return f"map does not commute with d_{i} on {x!r}"
        return None

    def is_valid(self) -> bool:
        return self.violation() is None

    def compose(self, first: "SimplicialMap") -> "SimplicialMap":
        """``self ∘ first``."""
        return SimplicialMap(first.source, self.target,
                             {x: self.apply(p) for x, p in first.assignment.items()}, validate=False)

    @classmethod
    def identity(cls, K: FiniteSimplicialSet) -> "SimplicialMap":
        return cls(K, K, {x: ((), x) for x in K.all_ids()}, validate=False)

    def __eq__(self, other):
        return isinstance(other, SimplicialMap) and self.assignment == other.assignment


# standard objects

def _subset_id(s: Sequence[int], n: int) -> str:
    return ("" if n < 10 else ",").join(map(str, s))


def build_standard(kind: str, n: int = 0) -> FiniteSimplicialSet:
    """Δ^n ('simplex'), ∂Δ^n ('boundary'), S^1 ('circle') or Δ^0 ('point')."""
    if n < 0:
        raise SimplicialError("dimension must be non-negative")
    if kind == "point":
        return FiniteSimplicialSet({0: ["*"]}, {}, "*")
    if kind == "circle":
        return FiniteSimplicialSet({0: ["*"], 1: ["e"]}, {"e": [((), "*"), ((), "*")]}, "*")
    if kind not in ("simplex", "boundary"):
        raise SimplicialError(f"unknown standard object {kind!r}")
    if kind == "boundary" and n == 0:
        raise SimplicialError("the boundary of Δ^0 is empty")
    top = n if kind == "simplex" else n - 1
    simplices: Dict[int, List[str]] = {}
    faces: Dict[str, List[Pair]] = {}
    for k in range(top + 1):
        ids = []
        for s in itertools.combinations(range(n + 1), k + 1):
            x = _subset_id(s, n)
            ids.append(x)
            if k:
                faces[x] = [((), _subset_id(s[:i] + s[i + 1:], n)) for i in range(k + 1)]
        simplices[k] = ids
    return FiniteSimplicialSet(simplices, faces, "0")


def disjoint_union(K: FiniteSimplicialSet, L: FiniteSimplicialSet) -> FiniteSimplicialSet:
    nk = {x: "a." + x for x in K.all_ids()}
    nl = {x: "b." + x for x in L.all_ids()}
    K2, L2 = K.rename(nk), L.rename(nl)
    simplices = {n: list(K2.simplices.get(n, ())) + list(L2.simplices.get(n, ()))
                 for n in sorted(set(K2.dims) | set(L2.dims))}
    faces = dict(K2.faces)
    faces.update(L2.faces)
    return FiniteSimplicialSet(simplices, faces, K2.basepoint)


# subdivision

Chain = Tuple[Tuple[int, ...], ...]


def _chain_id(x: str, chain: Chain, n: int) -> str:
    sep = "" if n < 10 else ","
    return "(" + x + "|" + "<".join(sep.join(map(str, s)) for s in chain) + ")"


def subdivide(K: FiniteSimplicialSet):
    """Barycentric subdivision ``sd K`` with its last-vertex map ``sd K -> K``.

    Nondegenerate k-simplices of sd K are pairs ``(x, S_0 ⊊ ... ⊊ S_k)`` with
    x nondegenerate and ``S_k = [dim x]``; a face whose top shrinks is moved
    into ``sd`` of the corresponding face of x.
    """
    ids: Dict[Tuple[str, Chain], str] = {}
    simplices: Dict[int, List[str]] = {}
    entries: Dict[int, List[Tuple[str, Chain]]] = {}
    for n in K.dims:
        full = tuple(range(n + 1))
        proper = [tuple(s) for r in range(1, n + 1) for s in itertools.combinations(full, r)]
        for chain in _chains_ending_at(full, proper):
            k = len(chain) - 1
            for x in K.simplices[n]:
                key = (x, chain)
                ids[key] = _chain_id(x, chain, n)
                entries.setdefault(k, []).append(key)
    # deterministic traversal: by dimension, then source simplex order, then chain
    order = {x: i for i, x in enumerate(K.all_ids())}
    for k in entries:
        entries[k].sort(key=lambda key: (order[key[0]], [len(s) for s in key[1]], key[1]))
        simplices[k] = [ids[key] for key in entries[k]]

    def normal(x: str, chain: Chain) -> Pair:
        n = K.dim[x]
        top = chain[-1]
        if len(top) == n + 1:
            return (), ids[(x, chain)]
        word, z = K.iterated_face(((), x), top)
        theta = surjection_of(word, len(top) - 1)
        pos = {v: p for p, v in enumerate(top)}
        images = [tuple(sorted({theta[pos[v]] for v in s})) for s in chain]
        dedup = []
        for s in images:
            if not dedup or dedup[-1] != s:
                dedup.append(s)
        degen = tuple(i for i in range(len(images) - 1, -1, -1)
                      if i + 1 < len(images) and images[i] == images[i + 1])
        return degen, ids[(z, tuple(dedup))]

    faces: Dict[str, List[Pair]] = {}
    for k, keys in entries.items():
        if k == 0:
            continue
        for x, chain in keys:
            faces[ids[(x, chain)]] = [normal(x, chain[:i] + chain[i + 1:]) for i in range(k + 1)]
    bp = None
    if K.basepoint is not None:
        bp = ids[(K.basepoint, ((0,),))]
    sdK = FiniteSimplicialSet(simplices, faces, bp, validate=False)

    assignment = {}
    for (x, chain), sid in ids.items():
        theta = [max(s) for s in chain]
        image = sorted(set(theta))
        word, z = K.iterated_face(((), x), image)
        inner = surjection_of(word, len(image) - 1)
        pos = {v: p for p, v in enumerate(image)}
        assignment[sid] = (word_of(tuple(inner[pos[v]] for v in theta)), z)
    h = SimplicialMap(sdK, K, assignment, validate=False)
    return sdK, h


def _chains_ending_at(full, proper):
    """All strictly increasing chains of subsets ending with ``full``."""
    out = []

    def rec(chain):
        out.append(tuple(chain) + (full,))
        last = chain[0] if chain else full
        for s in proper:
            if len(s) < len(last) and set(s) < set(last):
                rec([s] + chain)

    rec([])
    return out


def subdivide_times(K: FiniteSimplicialSet, times: int):
    """``sd^times K`` together with the composite last-vertex map."""
    h = SimplicialMap.identity(K)
    for _ in range(times):
        K, step = subdivide(K)
        h = h.compose(step)
    return K, h


# quotients and products

def quotient(K: FiniteSimplicialSet, L: Iterable[str], basepoint: str = "*") -> FiniteSimplicialSet:
    """Collapse the subcomplex with nondegenerate ids ``L`` to a basepoint vertex."""
    return quotient_with_map(K, L, basepoint)[0]


def quotient_with_map(K: FiniteSimplicialSet, L: Iterable[str], basepoint: str = "*"):
    """``(K/L, K -> K/L)``."""
    L = set(L)
    if not L:
        raise SimplicialError("cannot collapse an empty subcomplex")
    if not K.is_subcomplex(L):
        missing = K.subcomplex_closure(L) - L if all(x in K.dim for x in L) else L - set(K.dim)
        raise SimplicialError(f"not a subcomplex; missing or unknown: {sorted(missing)}")
    while basepoint in K.dim and basepoint not in L:
        basepoint += "*"
    simplices: Dict[int, List[str]] = {0: [basepoint]}
    for n, ids in K.simplices.items():
        for x in ids:
            if x not in L:
                simplices.setdefault(n, []).append(x)
    if 0 in K.simplices:
        simplices[0] = [basepoint] + [v for v in K.simplices[0] if v not in L]

    def fix(pair: Pair) -> Pair:
        w, y = pair
        if y in L:
            m = K.dim[y] + len(w)
            return tuple(range(m - 1, -1, -1)), basepoint
        return pair

    faces = {x: [fix(p) for p in K.faces[x]] for ids in simplices.values() for x in ids
             if x != basepoint and K.dim[x] > 0}
    Q = FiniteSimplicialSet(simplices, faces, basepoint)
    qmap = SimplicialMap(K, Q, {x: fix(((), x)) for x in K.all_ids()}, validate=False)
    return Q, qmap


def product(K: FiniteSimplicialSet, L: FiniteSimplicialSet) -> FiniteSimplicialSet:
    """Categorical product; nondegenerate simplices are pairs with disjoint degeneracy sets."""
    return product_with_projections(K, L)[0]


def product_with_projections(K: FiniteSimplicialSet, L: FiniteSimplicialSet):
    """``(K × L, pr_1, pr_2)``."""
    top = K.dimension + L.dimension
    simplices: Dict[int, List[str]] = {}
    key_of: Dict[str, Tuple[Pair, Pair]] = {}
    id_of: Dict[Tuple[Pair, Pair], str] = {}
    for n in range(top + 1):
        for a in K.simplices_of_dim(n):
            for b in L.simplices_of_dim(n):
                if set(a[0]) & set(b[0]):
                    continue
                pid = "(" + fmt_pair(a) + "," + fmt_pair(b) + ")"
                simplices.setdefault(n, []).append(pid)
                key_of[pid] = (a, b)
                id_of[(a, b)] = pid

    def normal(a: Pair, b: Pair, n: int) -> Pair:
        common = set(a[0]) & set(b[0])
        if not common:
            return (), id_of[(a, b)]
        outer = surjection_of(tuple(common), n)

        def factor(p):
            theta = surjection_of(p[0], n)
            inner = {}
            for k in range(n + 1):
                inner[outer[k]] = theta[k]
            return word_of(tuple(inner[v] for v in range(outer[-1] + 1))), p[1]

        return tuple(sorted(common, reverse=True)), id_of[(factor(a), factor(b))]

    faces = {}
    for pid, (a, b) in key_of.items():
        n = K.pair_dim(a)
        if n == 0:
            continue
        faces[pid] = [normal(K.face(i, a), L.face(i, b), n - 1) for i in range(n + 1)]
    bp = None
    if K.basepoint is not None and L.basepoint is not None:
        bp = id_of[(((), K.basepoint), ((), L.basepoint))]
    P = FiniteSimplicialSet(simplices, faces, bp)
    pr1 = SimplicialMap(P, K, {pid: ab[0] for pid, ab in key_of.items()}, validate=False)
    pr2 = SimplicialMap(P, L, {pid: ab[1] for pid, ab in key_of.items()}, validate=False)
    return P, pr1, pr2
