"""Exact linear algebra over Z, Q and prime fields.

Vectors are sparse ``dict`` maps from column index to integer (or Fraction).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

# Largest prime below 2**21: dot products of length <= 2**10 stay below 2**53,
# so float64 BLAS products are exact before reduction.
DEFAULT_PRIME = 2097143


class IntegerEchelon:
    """Echelon form over Z built only from unit pivots.

    Every stored row has a pivot column with coefficient 1 and is zero in all
    other pivot columns (fully reduced).  Rows that cannot be given a unit
    pivot are parked in ``pending``; a nonempty ``pending`` list after
    :meth:`finish` means the lattice may have torsion in its cokernel, see
    :meth:`cokernel_torsion`.
    """

    def __init__(self, ncols: int | None = None):
        self.ncols = ncols
        self.rows: dict[int, dict] = {}  # pivot -> row
        self.pending: list[dict] = []
        self._col_rows: dict[int, set] = {}  # column -> pivots of rows touching it

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        v = {c: x for c, x in vec.items() if x}
        for piv in [c for c in v if c in self.rows]:
            coeff = v.get(piv)
            if not coeff:
                continue
            for c, x in self.rows[piv].items():
                y = v.get(c, 0) - coeff * x
                if y:
                    v[c] = y
                else:
                    v.pop(c, None)
        return v

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; return True when the rank grew."""
        v = self.reduce(vec)
        if not v:
            return False
        piv = _unit_entry(v)
        if piv is None:
            self.pending.append(v)
            return False
        self._install(piv, v)
        return True

    def _install(self, piv: int, v: dict) -> None:
        if v[piv] == -1:
            v = {c: -x for c, x in v.items()}
        # clear the new pivot column from existing rows
        for other in list(self._col_rows.get(piv, ())):
            row = self.rows[other]
            k = row.get(piv)
            if not k:
                continue
            for c, x in v.items():
                y = row.get(c, 0) - k * x
                if y:
                    if c not in row:
                        self._col_rows.setdefault(c, set()).add(other)
                    row[c] = y
                else:
                    row.pop(c, None)
                    s = self._col_rows.get(c)
                    if s is not None:
                        s.discard(other)
        self.rows[piv] = v
        for c in v:
            self._col_rows.setdefault(c, set()).add(piv)

    def finish(self) -> None:
        """Retry parked rows until no further unit pivot appears."""
        progress = True
        while progress and self.pending:
            progress = False
            old, self.pending = self.pending, []
            for v in old:
                if self.add(v):
                    progress = True

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def normal_form(self, vec: dict) -> dict:
        """Reduce ``vec`` modulo the unit-pivot rows (exact, integral)."""
        return self.reduce(vec)

    def cokernel_torsion(self) -> list[int]:
        """Invariant factors > 1 of the parked rows on non-pivot columns."""
        if not self.pending:
            return []
        rows = [self.reduce(v) for v in self.pending]
        rows = [r for r in rows if r]
        if not rows:
            return []
        cols = sorted({c for r in rows for c in r})
        idx = {c: k for k, c in enumerate(cols)}
        mat = [[0] * len(cols) for _ in rows]
        for i, r in enumerate(rows):
            for c, x in r.items():
                mat[i][idx[c]] = x
        factors, _ = smith_normal_form(mat)
        return [f for f in factors if f > 1]

    def pending_rank(self) -> int:
        rows = [self.reduce(v) for v in self.pending]
        rows = [r for r in rows if r]
        return rational_rank(rows)


def _unit_entry(v: dict) -> int | None:
    best = None
    for c, x in v.items():
        if x == 1 or x == -1:
            if best is None or c > best:
                best = c
    return best


# ---------------------------------------------------------------------------
# rationals


def rational_rref(rows: Iterable[dict]) -> tuple[dict[int, dict], list[int]]:
    """Reduced row echelon form over Q of sparse rows; returns (pivot -> row, pivots)."""
    basis: dict[int, dict] = {}
    for vec in rows:
        v = {c: Fraction(x) for c, x in vec.items() if x}
        for piv in [c for c in v if c in basis]:
            k = v.get(piv)
            if not k:
                continue
            for c, x in basis[piv].items():
                y = v.get(c, 0) - k * x
                if y:
                    v[c] = y
                else:
                    v.pop(c, None)
        if not v:
            continue
        piv = max(v)
        k = v[piv]
        v = {c: x / k for c, x in v.items()}
        for other, row in basis.items():
            m = row.get(piv)
            if m:
                for c, x in v.items():
                    y = row.get(c, 0) - m * x
                    if y:
                        row[c] = y
                    else:
                        row.pop(c, None)
        basis[piv] = v
    return basis, sorted(basis)


class RationalEchelon:
    """Incremental reduced echelon form over Q on integer-indexed sparse vectors."""

    def __init__(self):
        self.rows: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        return rational_reduce(self.rows, vec)

    def add(self, vec: dict) -> bool:
        v = self.reduce(vec)
        if not v:
            return False
        piv = max(v)
        k = v[piv]
        v = {c: x / k for c, x in v.items()}
        for row in self.rows.values():
            m = row.get(piv)
            if m:
                for c, x in v.items():
                    y = row.get(c, 0) - m * x
                    if y:
                        row[c] = y
                    else:
                        row.pop(c, None)
        self.rows[piv] = v
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)


def rational_rank(rows: Iterable[dict]) -> int:
    return len(rational_rref(rows)[0])


def rational_reduce(basis: dict[int, dict], vec: dict) -> dict:
    v = {c: Fraction(x) for c, x in vec.items() if x}
    for piv in [c for c in v if c in basis]:
        k = v.get(piv)
        if not k:
            continue
        for c, x in basis[piv].items():
            y = v.get(c, 0) - k * x
            if y:
                v[c] = y
            else:
                v.pop(c, None)
    return v


def rational_kernel(rows: Sequence[dict], ncols: int) -> list[dict]:
    """Basis of ``{x : row . x = 0 for every row}`` as sparse Fraction vectors."""
    basis, pivots = rational_rref(rows)
    pivset = set(pivots)
    out = []
    for free in range(ncols):
        if free in pivset:
            continue
        x = {free: Fraction(1)}
        for piv, row in basis.items():
            k = row.get(free)
            if k:
                x[piv] = -k
        out.append(x)
    return out


def same_span(rows_a: Sequence[dict], rows_b: Sequence[dict]) -> tuple[bool, int, int, int]:
    """Compare spans over Q; returns (equal, dim A, dim B, dim A+B)."""
    ra = rational_rank(rows_a)
    rb = rational_rank(rows_b)
    rab = rational_rank(list(rows_a) + list(rows_b))
    return (ra == rb == rab), ra, rb, rab


# ---------------------------------------------------------------------------
# Smith normal form


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> tuple[list[int], int]:
    """Invariant factors ``d1 | d2 | ...`` (nonzero ones) and the rank of an integer matrix."""
    a = [list(map(int, r)) for r in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    t = 0
    while t < m and t < n:
        # pick the smallest nonzero entry in the remaining block as pivot
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            done = True
            # clear column t
            for i in range(t + 1, m):
                x = a[i][t]
                if x:
                    q = x // p
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, n):
                            if rt[j]:
                                ri[j] -= q * rt[j]
                    if a[i][t]:
                        done = False
            # clear row t
            rt = a[t]
            for j in range(t + 1, n):
                x = rt[j]
                if x:
                    q = x // p
                    if q:
                        for row in a[t:]:
                            if row[t]:
                                row[j] -= q * row[t]
                    if rt[j]:
                        done = False
            if done:
                # divisibility of the remaining block
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if a[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                for j in range(t, n):
                    a[t][j] += a[bad][j]
                continue
            # move the smallest nonzero entry of row/column t to the pivot
            best = (abs(a[t][t]), t, t)
            for i in range(t + 1, m):
                if a[i][t] and abs(a[i][t]) < best[0]:
                    best = (abs(a[i][t]), i, t)
            for j in range(t + 1, n):
                if a[t][j] and abs(a[t][j]) < best[0]:
                    best = (abs(a[t][j]), t, j)
            _, i, j = best
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        t += 1
    factors = [abs(a[k][k]) for k in range(t)]
    factors.sort()
    return factors, len(factors)


# ---------------------------------------------------------------------------
# prime fields


class ModpEchelon:
    """Reduced echelon basis of a row space over GF(p) on dense numpy rows.

    Arithmetic uses float64 with ``p < 2**21`` and short dot products, which
    keeps every intermediate integer exact.
    """

    def __init__(self, ncols: int, p: int = DEFAULT_PRIME):
        self.ncols = ncols
        self.p = p
        self.basis = np.zeros((0, ncols))
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce(self, rows: np.ndarray) -> np.ndarray:
        if not self.pivots or rows.shape[0] == 0:
            return np.mod(rows, self.p)
        coeff = rows[:, self.pivots]
        out = rows - _modmat(coeff, self.basis, self.p)
        return np.mod(out, self.p)

    def add_rows(self, rows: np.ndarray) -> None:
        if rows.shape[0] == 0 or self.ncols == 0:
            return
        rows = self._reduce(np.asarray(rows, dtype=float))
        rows = rows[np.any(rows != 0, axis=1)]
        if rows.shape[0] == 0:
            return
        new, piv = _rref_modp(rows, self.p)
        if not piv:
            return
        if self.pivots:
            coeff = self.basis[:, piv]
            self.basis = np.mod(self.basis - _modmat(coeff, new, self.p), self.p)
        self.basis = np.vstack([self.basis, new])
        self.pivots = self.pivots + piv

    def nonpivots(self) -> list[int]:
        s = set(self.pivots)
        return [c for c in range(self.ncols) if c not in s]

    def projector(self) -> tuple[list[int], list[int], np.ndarray]:
        """Data for quotient coordinates: ``q = v[np] - v[piv] @ B[:, np]``."""
        npiv = self.nonpivots()
        return self.pivots, npiv, self.basis[:, npiv] if self.pivots else np.zeros((0, len(npiv)))


def _modmat(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """``a @ b mod p`` computed exactly in float64 by splitting the inner dimension."""
    k = a.shape[1]
    step = max(1, (2 ** 52) // (p * p))
    if k <= step:
        return np.mod(a @ b, p)
    out = np.zeros((a.shape[0], b.shape[1]))
    for s in range(0, k, step):
        out = np.mod(out + np.mod(a[:, s:s + step] @ b[s:s + step], p), p)
    return out


def _inv_mod(x: int, p: int) -> int:
    return pow(int(x), p - 2, p)


def _rref_modp(rows: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    a = np.mod(rows.copy(), p)
    m, n = a.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = _inv_mod(a[r, c], p)
        a[r] = np.mod(a[r] * inv, p)
        col = a[:, c].copy()
        col[r] = 0
        idx = np.nonzero(col)[0]
        if idx.size:
            a[idx] = np.mod(a[idx] - np.outer(col[idx], a[r]), p)
        pivots.append(c)
        r += 1
    return a[:r], pivots


def modp_rank(rows: np.ndarray, p: int = DEFAULT_PRIME) -> int:
    e = ModpEchelon(rows.shape[1], p)
    for s in range(0, rows.shape[0], 512):
        e.add_rows(rows[s:s + 512])
    return e.rank
