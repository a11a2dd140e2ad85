"""Trivial explicit models of Com and As, concentrated in dimension 0."""

from __future__ import annotations

from itertools import permutations

from .exalg import LinComb
from .operad import DGOperad


class CommutativeOperad(DGOperad):
    """One cell per label set: ``Com(I)`` is the trivial representation."""

    name = "com"
    direction = 1

    def basis(self, labels):
        return [frozenset(labels)]

    def unit(self, label):
        return LinComb.basis(frozenset((label,)))

    def cell_labels(self, cell):
        return tuple(sorted(cell))

    def cell_dim(self, cell):
        return 0

    def compose_cells(self, a, i, b):
        return LinComb.basis((a - {i}) | b)

    def d_cell(self, a):
        return LinComb()

    def relabel_cell(self, a, mapping):
        return LinComb.basis(frozenset(mapping[x] for x in a))


class AssociativeOperad(DGOperad):
    """Words using every label once: ``As(I)`` is the regular representation.

    The nonsymmetric component is spanned by the single increasing word.
    """

    name = "as"
    direction = 1

    def basis(self, labels):
        return [tuple(w) for w in permutations(sorted(labels))]

    def unit(self, label):
        return LinComb.basis((label,))

    def cell_labels(self, cell):
        return tuple(sorted(cell))

    def cell_dim(self, cell):
        return 0

    def compose_cells(self, a, i, b):
        k = a.index(i)
        return LinComb.basis(a[:k] + b + a[k + 1:])

    def d_cell(self, a):
        return LinComb()

    def relabel_cell(self, a, mapping):
        return LinComb.basis(tuple(mapping[x] for x in a))


COM = CommutativeOperad()
AS = AssociativeOperad()
