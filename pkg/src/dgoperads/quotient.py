"""Ideals generated by quadratic relations and per-degree quotient dimensions.

Two engines share one interface:

* :class:`DirectIdeal` works over the integers.  The ideal in arity ``n`` is
  spanned by ``x o_i g`` and ``g o_j x`` with ``x`` in the ideal of arity
  ``n-1`` (all relabelings in the symmetric case).  Rows are reduced to
  unit-pivot echelon form, which yields an integral quotient basis and a
  torsion check.
* :class:`CherryTower` works over a prime field and never materializes the
  ideal.  Every tree splits off a cherry (a vertex whose inputs are leaves),
  so ``Quot(n)`` is the quotient of ``sum over cherries of Quot(n-1) (x) E``
  by two kinds of vectors: a tree with two cherries split in two ways, and a
  relation grafted at the bottom of a tree.  The column space is small even
  when the free operad is huge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .exalg import LinComb
from .free import FreeOperad, QuadraticData, _count_after, leaves, map_leaves
from .linalg import DEFAULT_PRIME, IntegerEchelon, ModpEchelon, rational_rank


@dataclass
class IdealLevel:
    n: int
    trees: list
    index: dict
    degree_of: list
    echelon: IntegerEchelon
    pending_rank_by_degree: dict = field(default_factory=dict)
    torsion: list = field(default_factory=list)

    def rank_by_degree(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for piv in self.echelon.pivots():
            d = self.degree_of[piv]
            out[d] = out.get(d, 0) + 1
        for d, r in self.pending_rank_by_degree.items():
            out[d] = out.get(d, 0) + r
        return dict(sorted(out.items()))

    def free_by_degree(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for d in self.degree_of:
            out[d] = out.get(d, 0) + 1
        return dict(sorted(out.items()))

    def quotient_by_degree(self) -> dict[int, int]:
        ranks = self.rank_by_degree()
        return {d: c - ranks.get(d, 0) for d, c in self.free_by_degree().items()}

    @property
    def torsion_free(self) -> bool:
        return not self.torsion

    def quotient_basis(self) -> list:
        """Non-pivot trees; an integral basis of the quotient when torsion free and nothing is pending."""
        piv = set(self.echelon.rows)
        return [t for k, t in enumerate(self.trees) if k not in piv]

    def vector(self, x: LinComb) -> dict:
        return {self.index[t]: c for t, c in x.items()}

    def contains(self, x: LinComb) -> bool:
        """Exact membership over Q (integral when no row is pending)."""
        v = self.echelon.normal_form(self.vector(x))
        if not v:
            return True
        if not self.echelon.pending:
            return False
        pend = [self.echelon.reduce(r) for r in self.echelon.pending]
        return rational_rank(pend + [v]) == rational_rank(pend)

    def quotient_coordinates(self, x: LinComb) -> dict:
        """Coordinates on :meth:`quotient_basis` (trees) of the class of ``x``."""
        v = self.echelon.normal_form(self.vector(x))
        return {self.trees[k]: c for k, c in v.items()}

    def ideal_basis(self) -> list[LinComb]:
        rows = list(self.echelon.rows.values())
        rows += [self.echelon.reduce(r) for r in self.echelon.pending]
        return [LinComb((self.trees[k], c) for k, c in r.items()) for r in rows if r]


class DirectIdeal:
    """Exact integral computation of the ideal, arity by arity."""

    def __init__(self, data: QuadraticData):
        self.data = data
        self.free: FreeOperad = data.free
        self.levels: dict[int, IdealLevel] = {}

    min_arity = 3

    def level(self, n: int) -> IdealLevel:
        if n < self.min_arity:
            raise ValueError(f"the ideal starts in arity {self.min_arity}")
        if n in self.levels:
            return self.levels[n]
        trees = self.free.basis(n)
        index = {t: k for k, t in enumerate(trees)}
        degree_of = [self.free.degree(t) for t in trees]
        ech = IntegerEchelon(len(trees))
        lev = IdealLevel(n, trees, index, degree_of, ech)
        for g in self._generators(n):
            ech.add(lev.vector(g))
        ech.finish()
        # parked rows: record their contribution and any torsion
        pend = [ech.reduce(v) for v in ech.pending]
        pend = [v for v in pend if v]
        by_deg: dict[int, list] = {}
        for v in pend:
            by_deg.setdefault(degree_of[next(iter(v))], []).append(v)
        lev.pending_rank_by_degree = {d: rational_rank(rs) for d, rs in by_deg.items()}
        lev.torsion = ech.cokernel_torsion()
        self.levels[n] = lev
        return lev

    def _generators(self, n: int):
        if n == 3:
            return self.data.saturated_relations()
        return self._grow(self.level(n - 1).ideal_basis(), n)

    def _grow(self, basis: list[LinComb], n: int):
        fr = self.free
        ng = len(fr.gens)
        if not fr.symmetric:
            gens = [fr.generator(h) for h in range(ng)]
            for x in basis:
                for h in gens:
                    for i in range(1, n):
                        yield fr.compose(x, i, h)
                    yield fr.compose(h, 1, x)
                    yield fr.compose(h, 2, x)
            return
        dims = fr.dims
        for x in basis:
            for b in range(1, n + 1):
                shift = {k: (k if k < b else k + 1) for k in range(1, n)}
                xs = [(map_leaves(t, shift), c) for t, c in x.items()]
                # a cherry g(a, b) grafted at letter a
                for a in range(1, n + 1):
                    if a == b:
                        continue
                    for h in range(ng):
                        acc = LinComb()
                        for t, c in xs:
                            after = _count_after(t, a, dims)
                            sgn = -1 if (after & 1 and dims[h] & 1) else 1
                            new = _replace_leaf(t, a, (h, a, b))
                            acc = acc + fr.canonical(new) * (c * sgn)
                        yield acc
                # a root with the leaf b on either side
                for h in range(ng):
                    yield LinComb(fr._canon_sum([((h, b, t), c) for t, c in xs]))
                    yield LinComb(fr._canon_sum([((h, t, b), c) for t, c in xs]))


def _replace_leaf(t, a, s):
    if isinstance(t, int):
        return s if t == a else t
    return (t[0], _replace_leaf(t[1], a, s), _replace_leaf(t[2], a, s))


# ---------------------------------------------------------------------------
# prime-field tower


@dataclass
class TowerLevel:
    n: int
    dims: dict            # degree -> dimension of Quot(n) over GF(p)
    coords: dict          # tree -> (degree, dense coordinate vector)


class CherryTower:
    """Quotient dimensions over GF(p) through cherry splittings."""

    def __init__(self, data: QuadraticData, p: int = DEFAULT_PRIME, batch: int = 4096):
        self.data = data
        self.free: FreeOperad = data.free
        self.p = p
        self.batch = batch
        self.levels: dict[int, TowerLevel] = {}
        self._dims: dict[int, dict] = {}
        dims = self.free.dims
        # relation basis in arity 3 (over Q; integer rows)
        lev3 = DirectIdeal(data).level(3)
        self.relations = lev3.ideal_basis()
        self.levels[1] = TowerLevel(1, {0: 1}, {1: (0, np.ones(1))})
        coords2 = {}
        count: dict[int, int] = {}
        for t in self.free.basis(2):
            d = dims[t[0]]
            count[d] = count.get(d, 0) + 1
        pos: dict[int, int] = {}
        for t in self.free.basis(2):
            d = dims[t[0]]
            v = np.zeros(count[d])
            v[pos.get(d, 0)] = 1
            pos[d] = pos.get(d, 0) + 1
            coords2[t] = (d, v)
        self.levels[2] = TowerLevel(2, dict(sorted(count.items())), coords2)

    def level(self, n: int, keep_coords: bool = True) -> TowerLevel:
        if n < 1:
            raise ValueError("arity must be at least 1")
        if n in self.levels:
            return self.levels[n]
        prev = self.level(n - 1)
        fr = self.free
        dims = fr.dims
        gdeg = sorted(set(dims))
        pairs = self._pairs(n)
        pair_index = {pq: k for k, pq in enumerate(pairs)}
        # column layout of W(n), one block per total degree
        layout: dict[int, dict] = {}
        width: dict[int, int] = {}
        for pk in range(len(pairs)):
            for h in range(len(fr.gens)):
                for qd, qdim in prev.dims.items():
                    d = qd + dims[h]
                    layout.setdefault(d, {})[(pk, h)] = width.get(d, 0)
                    width[d] = width.get(d, 0) + qdim
        echs = {d: ModpEchelon(w, self.p) for d, w in width.items()}
        pending: dict[int, list] = {d: [] for d in width}

        def psi(t, cherry):
            a, b, h = cherry
            rest, sign = fr.contract(t, cherry)
            qd, qv = prev.coords[rest]
            d = qd + dims[h]
            off = layout[d][(pair_index[self._pair_key(a, b)], h)]
            return d, off, sign, qv

        def flush(d, force=False):
            rows = pending[d]
            if rows and (force or len(rows) >= self.batch):
                mat = np.zeros((len(rows), width[d]))
                for r, entries in enumerate(rows):
                    for off, sign, qv in entries:
                        mat[r, off:off + len(qv)] += sign * qv
                echs[d].add_rows(mat)
                pending[d] = []

        # trees with at least two cherries
        first_cherry = {}
        for t in fr.basis(n):
            ch = fr.cherries(t)
            first_cherry[t] = ch[0]
            if len(ch) < 2:
                continue
            d0, off0, s0, q0 = psi(t, ch[0])
            for c in ch[1:]:
                d1, off1, s1, q1 = psi(t, c)
                pending[d0].append([(off0, s0, q0), (off1, -s1, q1)])
                flush(d0)
        # relations grafted at the bottom
        for elem in self._bottom_relations(n):
            entries = []
            d = None
            for t, c in elem.items():
                d, off, s, qv = psi(t, first_cherry[t])
                entries.append((off, s * c, qv))
            if entries:
                pending[d].append(entries)
                flush(d)
        for d in width:
            flush(d, force=True)
        qdims = {d: width[d] - echs[d].rank for d in sorted(width)}
        coords = {}
        if keep_coords:
            proj = {d: echs[d].projector() for d in width}
            for t in fr.basis(n):
                d, off, s, qv = psi(t, first_cherry[t])
                v = np.zeros(width[d])
                v[off:off + len(qv)] = s * qv
                piv, npiv, bmat = proj[d]
                q = v[npiv]
                if piv:
                    q = q - v[piv] @ bmat
                coords[t] = (d, np.mod(q, self.p))
        lev = TowerLevel(n, qdims, coords)
        if keep_coords:
            self.levels[n] = lev
        self._dims[n] = qdims
        return lev

    def quotient_dims(self, n: int) -> dict[int, int]:
        """Dimensions over GF(p); the top arity is computed without coordinates."""
        if n in self._dims:
            return dict(self._dims[n])
        if n <= 2:
            return dict(self.level(n).dims)
        return dict(self.level(n, keep_coords=False).dims)

    # -- helpers ------------------------------------------------------------
    def _pairs(self, n: int) -> list:
        if self.free.symmetric:
            return list(combinations(range(1, n + 1), 2))
        return [(j, j + 1) for j in range(1, n)]

    def _pair_key(self, a: int, b: int):
        return (a, b)

    def _bottom_relations(self, n: int):
        fr = self.free
        if not fr.symmetric:
            for s in fr.basis(n - 2):
                base = LinComb.basis(s)
                for a in range(1, n - 1):
                    for r in self.relations:
                        yield fr.compose(base, a, r)
            return
        dims = fr.dims
        for a, b, c in combinations(range(1, n + 1), 3):
            others = [x for x in range(1, n + 1) if x not in (b, c)]
            shift = {k: others[k - 1] for k in range(1, n - 1)}
            rel = {1: a, 2: b, 3: c}
            rels = [[(map_leaves(t, rel), k) for t, k in r.items()] for r in self.relations]
            rdeg = [fr.degree(r[0][0]) for r in rels]
            for s in fr.basis(n - 2):
                s2 = map_leaves(s, shift)
                after = _count_after(s2, a, dims)
                for r, rd in zip(rels, rdeg):
                    sgn = -1 if (after & 1 and rd & 1) else 1
                    yield LinComb((_replace_leaf(s2, a, t), k * sgn) for t, k in r)
