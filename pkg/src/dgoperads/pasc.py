"""The dg operad on faces of simplices, exterior-algebra model, and its nonsymmetric view."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .exalg import LinComb, sort_sign
from .operad import DGOperad


@dataclass(frozen=True)
class SubsetCell:
    """``+ e_{p1} ^ ... ^ e_{pk}`` (increasing ``p``) inside the ambient set ``ambient``."""

    ambient: tuple
    subset: tuple

    @property
    def dim(self) -> int:
        return len(self.subset) - 1

    def __repr__(self) -> str:
        return "^".join(f"e{p}" for p in self.subset) + "|" + "".join(map(str, self.ambient))


def cell(ambient, *letters) -> LinComb:
    """Signed element ``e_{l1} ^ e_{l2} ^ ...`` of ``Pasc(ambient)`` (letters in any order)."""
    amb = tuple(sorted(ambient))
    if not letters or any(x not in amb for x in letters):
        raise ValueError("letters must be a nonempty part of the ambient set")
    s, e = sort_sign(letters)
    if not e:
        return LinComb()
    return LinComb.basis(SubsetCell(amb, s), e)


def pasc_basis(n_or_labels) -> list[SubsetCell]:
    if isinstance(n_or_labels, int):
        if n_or_labels < 1:
            raise ValueError("arity must be at least 1")
        amb = tuple(range(1, n_or_labels + 1))
    else:
        amb = tuple(sorted(n_or_labels))
    return [SubsetCell(amb, sub) for k in range(1, len(amb) + 1)
            for sub in combinations(amb, k)]


def pasc_theta(i: int, x: LinComb) -> LinComb:
    """Degree -1 left derivation removing ``e_i``; the unit of the exterior algebra is killed."""
    out = []
    for c, coeff in x.items():
        if i not in c.subset or len(c.subset) == 1:
            continue
        m = c.subset.index(i)
        rest = c.subset[:m] + c.subset[m + 1:]
        out.append((SubsetCell(c.ambient, rest), -coeff if m & 1 else coeff))
    return LinComb(out)


def pasc_d(x: LinComb) -> LinComb:
    """Boundary, normalized so that ``d(e1 ^ e2) = e1 - e2``.

    This is minus the sum of the left derivations over all ambient letters.
    """
    out = LinComb()
    for c, coeff in x.items():
        out = out + (-1) * pasc_theta_all(c) * coeff
    return out


def pasc_theta_all(c: SubsetCell) -> LinComb:
    out = []
    if len(c.subset) == 1:
        return LinComb()
    for m, i in enumerate(c.subset):
        rest = c.subset[:m] + c.subset[m + 1:]
        out.append((SubsetCell(c.ambient, rest), -1 if m & 1 else 1))
    return LinComb(out)


def pasc_compose(x: SubsetCell, i: int, y: SubsetCell) -> LinComb:
    """Three-case composition; ``i`` is a letter of ``x`` not shared with ``y``'s ambient set."""
    if i not in x.ambient:
        raise ValueError(f"letter {i} not in {x.ambient}")
    ambient = tuple(sorted([a for a in x.ambient if a != i] + list(y.ambient)))
    if i in x.subset:
        # (-1)^dim(x) theta_i(x ^ y): e_i sits at position m of x
        m = x.subset.index(i)
        sign = -1 if (m + x.dim) & 1 else 1
        word = x.subset[:m] + x.subset[m + 1:] + y.subset
        s, e = sort_sign(word)
        return LinComb.basis(SubsetCell(ambient, s), sign * e)
    if y.dim == 0:
        return LinComb.basis(SubsetCell(ambient, x.subset))
    return LinComb()


def pasc_relabel(c: SubsetCell, mapping: dict) -> LinComb:
    s, e = sort_sign([mapping[p] for p in c.subset])
    return LinComb.basis(SubsetCell(tuple(sorted(mapping[a] for a in c.ambient)), s), e)


def simplex_face_count(n: int, k: int) -> int:
    return comb(n, k + 1)


class SimplicesOperad(DGOperad):
    name = "pasc"
    direction = -1

    def basis(self, labels):
        return pasc_basis(labels)

    def unit(self, label):
        return LinComb.basis(SubsetCell((label,), (label,)))

    def cell_labels(self, cell):
        return cell.ambient

    def cell_dim(self, cell):
        return cell.dim

    def compose_cells(self, a, i, b):
        return pasc_compose(a, i, b)

    def d_cell(self, a):
        return -pasc_theta_all(a)

    def relabel_cell(self, a, mapping):
        return pasc_relabel(a, mapping)


PASC = SimplicesOperad()
