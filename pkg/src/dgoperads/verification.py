"""Checks tying quadratic presentations to explicit operads and to dimension oracles."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .exalg import LinComb
from .free import FreeOperad, QuadraticData, leaves, min_leaf
from .linalg import RationalEchelon
from .operad import DGOperad, TAU, tau_power
from .pasc import PASC, cell
from .perm import PI, partition
from .quotient import CherryTower, DirectIdeal


class TreeEvaluator:
    """The operad map from a free operad to an explicit one given by generator images."""

    def __init__(self, free: FreeOperad, target: DGOperad, images: list[LinComb]):
        if len(images) != len(free.gens):
            raise ValueError("one image per generator is required")
        for g, img in enumerate(images):
            if img and target.dim_of(img) != free.dims[g]:
                raise ValueError(f"image of {free.gens.names[g]} has the wrong dimension")
        self.free = free
        self.target = target
        self.images = images
        self._cache: dict = {}

    def tree(self, t) -> LinComb:
        if isinstance(t, int):
            return self.target.unit(t)
        hit = self._cache.get(t)
        if hit is not None:
            return hit
        g, left, right = t
        a, b = min_leaf(left), min_leaf(right)
        img = self.images[g]
        if not img:
            out = LinComb()
        else:
            out = self.target.relabel(img, {1: a, 2: b})
            out = self.target.compose(out, a, self.tree(left))
            out = self.target.compose(out, b, self.tree(right))
        self._cache[t] = out
        return out

    def __call__(self, x: LinComb) -> LinComb:
        acc = LinComb()
        for t, c in x.items():
            acc = acc + self.tree(t) * c
        return acc


def standard_images(name: str) -> tuple[DGOperad, list[LinComb]]:
    """Explicit target and generator images for the presentations with a concrete model."""
    if name == "pi":
        return PI, [partition([1], [2]), partition([2], [1]), partition([1, 2])]
    if name in ("pasc", "trias"):
        amb = (1, 2)
        return PASC, [cell(amb, 1), cell(amb, 2), cell(amb, 1, 2)]
    raise KeyError(f"no explicit model for {name!r}")


def _vec(target: DGOperad, index: dict, x: LinComb) -> dict:
    return {index[c]: v for c, v in x.items()}


def image_ranks(free: FreeOperad, target: DGOperad, images: list[LinComb],
                max_arity: int) -> dict[int, tuple[int, int]]:
    """``n -> (rank of the image of F(n), dim target(n))``, grown one cherry at a time."""
    out = {}
    basis_prev = [target.unit(1)]
    out[1] = (1, len(target.basis_n(1)))
    for n in range(2, max_arity + 1):
        cells = target.basis_n(n)
        index = {c: k for k, c in enumerate(cells)}
        ech = RationalEchelon()
        new_basis = []
        if free.symmetric:
            for b in range(1, n + 1):
                shift = {k: (k if k < b else k + 1) for k in range(1, n)}
                for y in basis_prev:
                    ys = target.relabel(y, shift)
                    for a in range(1, n + 1):
                        if a == b:
                            continue
                        for img in images:
                            if not img:
                                continue
                            z = target.compose(ys, a, target.relabel(img, {1: a, 2: b}))
                            if z and ech.add(_vec(target, index, z)):
                                new_basis.append(z)
        else:
            for y in basis_prev:
                for i in range(1, n):
                    for img in images:
                        if not img:
                            continue
                        z = target.compose_std(y, i, img)
                        if z and ech.add(_vec(target, index, z)):
                            new_basis.append(z)
        out[n] = (ech.rank, len(cells))
        basis_prev = new_basis
    return out


@dataclass
class PresentationReport:
    name: str
    max_arity: int
    relations_zero: dict = field(default_factory=dict)
    equivariant: bool = True
    d_compatible: bool = True
    arities: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return (all(self.relations_zero.values()) and self.equivariant and self.d_compatible
                and all(a["ok"] for a in self.arities.values()))

    def as_dict(self) -> dict:
        return {"name": self.name, "max_arity": self.max_arity,
                "relations_zero": dict(self.relations_zero), "equivariant": self.equivariant,
                "d_compatible": self.d_compatible,
                "arities": {str(k): v for k, v in sorted(self.arities.items())},
                "passed": self.passed}


def relations_in_model(q: QuadraticData, target: DGOperad, images: list[LinComb]) -> dict[str, bool]:
    ev = TreeEvaluator(q.free, target, images)
    return {name: not ev(r) for name, r in zip(q.relation_names, q.relations)}


def presentation_check(q: QuadraticData, target: DGOperad, images: list[LinComb],
                       max_arity: int, direct_up_to: int | None = None) -> PresentationReport:
    """Relations vanish, the generators reach all of the target, and dimensions agree.

    Dimensions come from the exact integral computation up to ``direct_up_to``
    and from the prime-field tower beyond.  Over a prime field the quotient
    can only be larger than over Q, and surjectivity bounds the rational
    quotient from below by the target, so equality of the prime-field count
    with the target dimension settles the rational one.
    """
    fr = q.free
    rep = PresentationReport(q.name, max_arity)
    rep.relations_zero = relations_in_model(q, target, images)
    ev = TreeEvaluator(fr, target, images)
    # equivariance of the generator images
    if fr.symmetric:
        for g in range(len(fr.gens)):
            swapped = fr.canonical((g, 2, 1))
            if ev(swapped) != target.relabel(images[g], {1: 2, 2: 1}):
                rep.equivariant = False
    # compatibility with differentials, on generators and in arity 3
    if q.d_gen is not None:
        for t in fr.basis(2) + fr.basis(3):
            x = LinComb.basis(t)
            if ev(fr.derivation(x, q.d_gen)) != target.differential(ev(x)):
                rep.d_compatible = False
                break
    if direct_up_to is None:
        direct_up_to = 4 if fr.symmetric else 5
    ranks = image_ranks(fr, target, images, max_arity)
    direct = DirectIdeal(q)
    tower = None
    for n in range(1, max_arity + 1):
        tdims = target.dims(n)
        rank, total = ranks[n]
        entry = {"target": _plain(tdims), "surjective": rank == total}
        if n <= 2:
            qd = {}
            for t in fr.basis(n):
                d = fr.degree(t)
                qd[d] = qd.get(d, 0) + 1
            entry["method"] = "free"
        elif n <= direct_up_to:
            lev = direct.level(n)
            qd = lev.quotient_by_degree()
            entry["method"] = "exact"
            entry["torsion"] = list(lev.torsion)
        else:
            tower = tower or CherryTower(q)
            qd = tower.quotient_dims(n)
            entry["method"] = f"mod {tower.p}, bounded below by the target"
        qd = {d: v for d, v in qd.items() if v}
        entry["quotient"] = _plain(qd)
        entry["ok"] = entry["surjective"] and _plain(qd) == _plain(tdims)
        rep.arities[n] = entry
    return rep


def _plain(d: dict) -> dict:
    return {int(k): int(v) for k, v in sorted(d.items()) if v}


@dataclass
class DifferentialReport:
    name: str
    max_arity: int
    ideal_stable: bool = True
    square_in_ideal: bool = True
    checked: int = 0

    @property
    def passed(self) -> bool:
        return self.ideal_stable and self.square_in_ideal


def quotient_differential_check(q: QuadraticData, max_arity: int) -> DifferentialReport:
    """``d`` preserves the ideal and ``d^2`` lands in it, on every free basis element."""
    rep = DifferentialReport(q.name, max_arity)
    if q.d_gen is None:
        raise ValueError(f"{q.name} has no differential")
    fr = q.free
    direct = DirectIdeal(q)
    for n in range(3, max_arity + 1):
        lev = direct.level(n)
        for r in lev.ideal_basis():
            rep.checked += 1
            if not lev.contains(fr.derivation(r, q.d_gen)):
                rep.ideal_stable = False
        for t in fr.basis(n):
            x = LinComb.basis(t)
            dd = fr.derivation(fr.derivation(x, q.d_gen), q.d_gen)
            rep.checked += 1
            if dd and not lev.contains(dd):
                rep.square_in_ideal = False
    return rep
