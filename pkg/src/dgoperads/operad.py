"""Common interface for dg operads on finite label sets, and a brute-force axiom harness."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Hashable, Iterable, Sequence

from .exalg import LinComb, bilinear, check_bijection


class DGOperad:
    """Base class for explicit dg operads.

    Subclasses work on cells over arbitrary finite sets of integer labels and
    implement the ``*_cell`` hooks.  Composition is in set form: ``a`` over
    ``I``, a slot ``i`` in ``I``, ``b`` over ``J`` with ``I - {i}`` and ``J``
    disjoint.  Group actions are left actions: relabeling by ``f`` sends
    letter ``i`` to ``f[i]``.
    """

    name = "operad"
    direction = 1  # +1: differential raises dimension, -1: lowers it
    symmetric = True

    # -- hooks -----------------------------------------------------------
    def basis(self, labels: Sequence[int]) -> list:
        raise NotImplementedError

    def unit(self, label: int) -> LinComb:
        raise NotImplementedError

    def cell_labels(self, cell) -> tuple:
        raise NotImplementedError

    def cell_dim(self, cell) -> int:
        raise NotImplementedError

    def compose_cells(self, a, i: int, b) -> LinComb:
        raise NotImplementedError

    def d_cell(self, a) -> LinComb:
        raise NotImplementedError

    def relabel_cell(self, a, mapping: dict) -> LinComb:
        raise NotImplementedError

    # -- linear extensions ---------------------------------------------------
    def basis_n(self, n: int) -> list:
        if n < 1:
            raise ValueError("arity must be at least 1")
        return self.basis(tuple(range(1, n + 1)))

    def element_labels(self, x: LinComb) -> tuple | None:
        for cell in x:
            return self.cell_labels(cell)
        return None

    def compose(self, x: LinComb, i: int, y: LinComb) -> LinComb:
        if not x or not y:
            return LinComb()
        labels_x = self.element_labels(x)
        labels_y = self.element_labels(y)
        if i not in labels_x:
            raise ValueError(f"slot {i} not among labels {labels_x}")
        rest = set(labels_x) - {i}
        if rest & set(labels_y):
            raise ValueError("label collision in composition")
        if i in labels_y:
            # the slot is a letter of its own, distinct from J's letters
            fresh = max(max(labels_x), max(labels_y)) + 1
            ren = {a: a for a in labels_x}
            ren[i] = fresh
            x = self.relabel(x, ren)
            i = fresh
        return bilinear(lambda a, b: self.compose_cells(a, i, b), x, y)

    def compose_std(self, x: LinComb, i: int, y: LinComb) -> LinComb:
        """Composition on standard labels: ``{1..n} o_i {1..m}`` lands in ``{1..n+m-1}``."""
        if not x or not y:
            return LinComb()
        n = len(self.element_labels(x) or ())
        m = len(self.element_labels(y) or ())
        if not 1 <= i <= n:
            raise ValueError(f"slot {i} out of range for arity {n}")
        shift_x = {j: (j if j <= i else j + m - 1) for j in range(1, n + 1)}
        shift_y = {k: k + i - 1 for k in range(1, m + 1)}
        return self.compose(self.relabel(x, shift_x), i, self.relabel(y, shift_y))

    def differential(self, x: LinComb) -> LinComb:
        return x.map_basis(self.d_cell)

    def relabel(self, x: LinComb, mapping: dict) -> LinComb:
        labels = self.element_labels(x)
        if labels is not None:
            check_bijection(mapping, labels)
            if all(mapping[a] == a for a in labels):
                return x
        return x.map_basis(lambda c: self.relabel_cell(c, mapping))

    def dim_of(self, x: LinComb) -> int | None:
        for cell in x:
            return self.cell_dim(cell)
        return None

    def basis_by_dim(self, n: int) -> dict[int, list]:
        out: dict[int, list] = {}
        for c in self.basis_n(n):
            out.setdefault(self.cell_dim(c), []).append(c)
        return dict(sorted(out.items()))

    def dims(self, n: int) -> dict[int, int]:
        return {k: len(v) for k, v in self.basis_by_dim(n).items()}


def cycle_action(cycle: Sequence[int]) -> dict:
    """The permutation ``c0 -> c1 -> ... -> c0`` as a dict."""
    out = {}
    for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
        out[a] = b
    return out


def power_action(perm: dict, k: int) -> dict:
    out = {a: a for a in perm}
    for _ in range(k % max(1, len(perm)) if k >= 0 else 0):
        out = {a: perm[out[a]] for a in out}
    return out


# the cycle 3 -> 2 -> 1 -> 3 acting on {1,2,3}
TAU = {3: 2, 2: 1, 1: 3}


def tau_power(k: int) -> dict:
    return power_action(TAU, k % 3)


# ---------------------------------------------------------------------------
# Axiom harness


AXIOMS = ("unit", "d_squared", "chain_map", "sequential", "parallel", "equivariance")


@dataclass
class AxiomReport:
    operad: str
    max_total_arity: int
    status: dict = field(default_factory=lambda: {a: True for a in AXIOMS})
    checked: dict = field(default_factory=lambda: {a: 0 for a in AXIOMS})
    witnesses: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.status.values())

    def record(self, axiom: str, ok: bool, witness: Any = None) -> None:
        self.checked[axiom] += 1
        if not ok and self.status[axiom]:
            self.status[axiom] = False
            self.witnesses[axiom] = witness

    def as_dict(self) -> dict:
        return {
            "operad": self.operad,
            "max_total_arity": self.max_total_arity,
            "status": dict(self.status),
            "checked": dict(self.checked),
            "witnesses": {k: repr(v) for k, v in sorted(self.witnesses.items())},
        }


def _sgn(a: int) -> int:
    return -1 if a & 1 else 1


def check_operad_axioms(operad: DGOperad, max_total_arity: int) -> AxiomReport:
    """Exhaustively check the dg operad axioms on basis cells.

    Pairs ``(a, b)`` are checked when ``arity(a o_i b) <= max_total_arity``,
    triples when the full composite stays within the bound.  Arity-one cells
    other than the unit are included.
    """
    rep = AxiomReport(operad.name, max_total_arity)
    top = max_total_arity
    bases = {n: [LinComb.basis(c) for c in operad.basis_n(n)] for n in range(1, top + 1)}
    dim = operad.dim_of
    comp = operad.compose_std

    for n in range(1, top + 1):
        u = operad.unit(1)
        for a in bases[n]:
            rep.record("unit", comp(u, 1, a) == a, ("unit o_1", a))
            for i in range(1, n + 1):
                rep.record("unit", comp(a, i, u) == a, ("o_i unit", a, i))
            da = operad.differential(a)
            rep.record("d_squared", not operad.differential(da), a)

    # pairs: chain map and equivariance
    for n, m in product(range(1, top + 1), repeat=2):
        if n + m - 1 > top:
            continue
        for a in bases[n]:
            da = operad.differential(a)
            sa = _sgn(dim(a))
            for b in bases[m]:
                db = operad.differential(b)
                for i in range(1, n + 1):
                    ab = comp(a, i, b)
                    lhs = operad.differential(ab)
                    rhs = comp(da, i, b) + sa * comp(a, i, db)
                    rep.record("chain_map", lhs == rhs, (a, i, b))
                    _check_equivariance(operad, rep, a, i, b, ab)

    # triples
    for n, m, r in product(range(1, top + 1), repeat=3):
        if n + m + r - 2 > top:
            continue
        for a in bases[n]:
            for b in bases[m]:
                for i in range(1, n + 1):
                    ab = comp(a, i, b)
                    for c in bases[r]:
                        # sequential: c plugged inside b
                        for j in range(i, i + m):
                            lhs = comp(ab, j, c)
                            rhs = comp(a, i, comp(b, j - i + 1, c))
                            rep.record("sequential", lhs == rhs, (a, i, b, j, c))
                        # parallel: c plugged into a slot of a after i
                        sbc = _sgn(dim(b) * dim(c))
                        for j in range(i + 1, n + 1):
                            lhs = comp(ab, j + m - 1, c)
                            rhs = sbc * comp(comp(a, j, c), i, b)
                            rep.record("parallel", lhs == rhs, (a, i, b, j, c))
    return rep


def _check_equivariance(operad: DGOperad, rep: AxiomReport, a: LinComb, i: int,
                        b: LinComb, ab: LinComb) -> None:
    """Naturality of set-form composition under relabelings of both inputs.

    ``a`` lives on ``1..n`` and ``b`` on ``1..m``; both are moved onto
    disjoint fresh label sets by bijections built from adjacent transpositions.
    """
    la = operad.element_labels(a)
    lb = operad.element_labels(b)
    n, m = len(la), len(lb)
    shift_a = 100
    shift_b = 200
    perms_a = [tuple(range(n))] + [_adjacent(n, k) for k in range(n - 1)]
    perms_b = [tuple(range(m))] + [_adjacent(m, k) for k in range(m - 1)]
    # reference: the standard composite, with the same labels as below
    for pa in perms_a:
        fa = {la[k]: shift_a + la[pa[k]] for k in range(n)}
        a2 = operad.relabel(a, fa)
        for pb in perms_b:
            fb = {lb[k]: shift_b + lb[pb[k]] for k in range(m)}
            b2 = operad.relabel(b, fb)
            lhs = operad.compose(a2, fa[i], b2)
            # move the standard composite by the induced bijection
            g = {}
            for j in la:
                if j < i:
                    g[j] = fa[j]
                elif j > i:
                    g[j + m - 1] = fa[j]
            for k in lb:
                g[k + i - 1] = fb[k]
            rhs = operad.relabel(ab, g) if ab else ab
            rep.record("equivariance", lhs == rhs, (a, i, b, pa, pb))


def _adjacent(n: int, k: int) -> tuple:
    p = list(range(n))
    p[k], p[k + 1] = p[k + 1], p[k]
    return tuple(p)
