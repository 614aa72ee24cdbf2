"""Integer linear algebra: Hermite normal forms, kernels, lattice membership.

Matrices are lists of rows of Python ints.  Sparse linear equations are
dicts ``{column: coefficient}``.
"""
from __future__ import annotations

from typing import Dict, Hashable, List, Optional, Sequence, Tuple

Row = List[int]


def _reduce_column(rows: List[Row], col: int, start: int, extra: Optional[List[Row]] = None) -> bool:
    """Euclid on column ``col`` among rows[start:], leaving a single nonzero at rows[start].

    ``extra`` (if given) receives the same row operations.  Returns whether a
    pivot was found.
    """
    while True:
        nz = [r for r in range(start, len(rows)) if rows[r][col]]
        if not nz:
            return False
        piv = min(nz, key=lambda r: abs(rows[r][col]))
        if piv != start:
            rows[start], rows[piv] = rows[piv], rows[start]
            if extra is not None:
                extra[start], extra[piv] = extra[piv], extra[start]
        p = rows[start][col]
        done = True
        for r in range(start + 1, len(rows)):
            if not rows[r][col]:
                continue
            q = rows[r][col] // p
            if q:
                rows[r] = [a - q * b for a, b in zip(rows[r], rows[start])]
                if extra is not None:
                    extra[r] = [a - q * b for a, b in zip(extra[r], extra[start])]
            if rows[r][col]:
                done = False
        if done:
            if p < 0:
                rows[start] = [-a for a in rows[start]]
                if extra is not None:
                    extra[start] = [-a for a in extra[start]]
            return True


def hnf_with_transform(matrix: Sequence[Sequence[int]]) -> Tuple[List[Row], List[Row]]:
    """Row Hermite normal form ``H`` with unimodular ``U`` such that ``U * matrix = H``.

    ``H`` keeps zero rows at the bottom, so ``len(H) == len(matrix)``.
    """
    rows = [list(r) for r in matrix]
    m = len(rows)
    ncols = len(rows[0]) if rows else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    r = 0
    pivots = []
    for c in range(ncols):
        if r >= m:
            break
        if _reduce_column(rows, c, r, U):
            p = rows[r][c]
            for above in range(r):
                q = rows[above][c] // p
                if q:
                    rows[above] = [a - q * b for a, b in zip(rows[above], rows[r])]
                    U[above] = [a - q * b for a, b in zip(U[above], U[r])]
            pivots.append(c)
            r += 1
    return rows, U


def hnf(matrix: Sequence[Sequence[int]]) -> List[Row]:
    """Row Hermite normal form with zero rows removed.

    Pivots are positive, entries above a pivot lie in ``[0, pivot)``.  Two
    matrices generate the same row lattice iff their HNFs coincide.
    """
    rows = [list(r) for r in matrix if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        if r >= len(rows):
            break
        if _reduce_column(rows, c, r):
            p = rows[r][c]
            for above in range(r):
                q = rows[above][c] // p
                if q:
                    rows[above] = [a - q * b for a, b in zip(rows[above], rows[r])]
            r += 1
    return rows[:r]


def pivot_columns(h: Sequence[Sequence[int]]) -> List[int]:
    out = []
    for row in h:
        out.append(next(i for i, a in enumerate(row) if a))
    return out


def rank(matrix: Sequence[Sequence[int]]) -> int:
    return len(hnf(matrix))


def solve_in_hnf(h: Sequence[Sequence[int]], v: Sequence[int]) -> Optional[List[int]]:
    """Integer coefficients ``c`` with ``sum c_i h_i == v``, or None if ``v`` is not in the lattice."""
    v = list(v)
    coeffs = []
    for row in h:
        c = next(i for i, a in enumerate(row) if a)
        if any(v[:c]):
            return None
        q, rem = divmod(v[c], row[c])
        if rem:
            return None
        coeffs.append(q)
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    if any(v):
        return None
    return coeffs


def same_lattice(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> bool:
    return hnf(a) == hnf(b)


def dense_kernel(matrix: Sequence[Sequence[int]], ncols: Optional[int] = None) -> List[Row]:
    """ℤ-basis (in HNF) of ``{x : matrix @ x == 0}``."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    if not matrix:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    transposed = [list(col) for col in zip(*matrix)]
    H, U = hnf_with_transform(transposed)
    basis = [U[i] for i in range(len(H)) if not any(H[i])]
    return hnf(basis)


def integer_kernel(equations: Sequence[Dict[Hashable, int]], variables: Sequence[Hashable]) -> List[Row]:
    """ℤ-basis of the solutions of sparse homogeneous equations, in row HNF.

    ``variables`` fixes the coordinate order of the returned vectors.
    Variables with a unit coefficient are eliminated first (an exact lattice
    isomorphism); whatever is left goes through a dense HNF kernel.
    """
    index = {v: i for i, v in enumerate(variables)}
    eqs = [{v: c for v, c in e.items() if c} for e in equations]
    for e in eqs:
        for v in e:
            if v not in index:
                raise KeyError(f"unknown variable {v!r}")
    eqs = [e for e in eqs if e]
    # occurrence lists make substitution cheap
    occurs: Dict[Hashable, set] = {}
    for k, e in enumerate(eqs):
        for v in e:
            occurs.setdefault(v, set()).add(k)
    alive = set(range(len(eqs)))
    eliminated: List[Tuple[Hashable, Dict[Hashable, int]]] = []

    while True:
        choice = None
        for k in sorted(alive):
            e = eqs[k]
            units = [v for v, c in e.items() if c in (1, -1)]
            if units:
                # eliminate the latest coordinate so earlier ones stay free
                choice = (k, max(units, key=index.__getitem__))
                break
        if choice is None:
            break
        k, v = choice
        e = eqs[k]
        sign = e[v]
        expr = {w: -sign * c for w, c in e.items() if w != v}
        eliminated.append((v, expr))
        alive.discard(k)
        for w in e:
            occurs[w].discard(k)
        for k2 in list(occurs.get(v, ())):
            e2 = eqs[k2]
            c2 = e2.pop(v)
            occurs[v].discard(k2)
            for w, c in expr.items():
                s = e2.get(w, 0) + c2 * c
                if s:
                    if w not in e2:
                        occurs.setdefault(w, set()).add(k2)
                    e2[w] = s
                else:
                    e2.pop(w, None)
                    occurs[w].discard(k2)
            if not e2:
                alive.discard(k2)

    elim_set = {v for v, _ in eliminated}
    free = [v for v in variables if v not in elim_set]
    free_index = {v: i for i, v in enumerate(free)}
    residual = [[eqs[k].get(v, 0) for v in free] for k in sorted(alive)]
    residual = [r for r in residual if any(r)]
    kernel_free = dense_kernel(residual, len(free)) if residual else [
        [int(i == j) for j in range(len(free))] for i in range(len(free))]

    basis = []
    for kv in kernel_free:
        values = {v: kv[free_index[v]] for v in free}
        for v, expr in reversed(eliminated):
            values[v] = sum(c * values[w] for w, c in expr.items())
        basis.append([values[v] for v in variables])
    return hnf(basis)
