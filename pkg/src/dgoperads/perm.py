"""The dg operad on faces of permutohedra: ordered set partitions with exterior signs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial
from typing import Sequence

from .exalg import LinComb, graded_shuffles, sort_sign
from .operad import DGOperad


@dataclass(frozen=True)
class OrderedPartition:
    """Canonical face ``b1 (x) b2 (x) ... (x) bp``; every block sorted ascending."""

    blocks: tuple

    @property
    def dim(self) -> int:
        return sum(len(b) - 1 for b in self.blocks)

    @property
    def labels(self) -> tuple:
        return tuple(sorted(x for b in self.blocks for x in b))

    def __repr__(self) -> str:
        return "(x)".join("^".join(map(str, b)) for b in self.blocks)


def partition(*blocks: Sequence[int]) -> LinComb:
    """Build the signed canonical element from unsorted blocks, e.g. ``partition([2, 1], [3])``."""
    sign = 1
    canon = []
    for b in blocks:
        s, e = sort_sign(b)
        if e == 0:
            return LinComb()
        sign *= e
        canon.append(s)
    return LinComb.basis(OrderedPartition(tuple(canon)), sign)


def _ordered_partitions(labels: tuple):
    if not labels:
        yield ()
        return
    n = len(labels)
    for size in range(1, n + 1):
        for block in combinations(labels, size):
            rest = tuple(x for x in labels if x not in block)
            for tail in _ordered_partitions(rest):
                yield (block,) + tail


def pi_basis(n_or_labels) -> list[OrderedPartition]:
    """All ordered set partitions, sorted by dimension then lexicographically."""
    if isinstance(n_or_labels, int):
        if n_or_labels < 1:
            raise ValueError("arity must be at least 1")
        labels = tuple(range(1, n_or_labels + 1))
    else:
        labels = tuple(sorted(n_or_labels))
    cells = [OrderedPartition(p) for p in _ordered_partitions(labels)]
    cells.sort(key=lambda c: (c.dim, c.blocks))
    return cells


def pi_d(cell: OrderedPartition) -> LinComb:
    blocks = cell.blocks
    acc = []
    running = 0
    for j in range(len(blocks) - 1):
        running += len(blocks[j]) - 1
        merged, s = sort_sign(blocks[j] + blocks[j + 1])
        new = blocks[:j] + (merged,) + blocks[j + 2:]
        acc.append((OrderedPartition(new), s * (-1 if running & 1 else 1)))
    return LinComb(acc)


def pi_compose(pi: OrderedPartition, i: int, mu: OrderedPartition) -> LinComb:
    """Insert ``mu`` at letter ``i`` of ``pi`` (labels other than ``i`` must be disjoint)."""
    blocks = pi.blocks
    for ell, blk in enumerate(blocks):
        if i in blk:
            break
    else:
        raise ValueError(f"letter {i} does not occur in {pi!r}")
    pos = blk.index(i)
    # write the block as pi'_l ^ i
    sign = -1 if (len(blk) - 1 - pos) & 1 else 1
    head = blk[:pos] + blk[pos + 1:]
    merged, s = sort_sign(head + mu.blocks[0])
    sign *= s
    tail_pi = blocks[ell + 1:]
    tail_mu = mu.blocks[1:]
    # bring mu_1 in front of pi_{l+1} .. pi_p
    d_mu1 = len(mu.blocks[0]) - 1
    d_tail = sum(len(b) - 1 for b in tail_pi)
    if d_mu1 & 1 and d_tail & 1:
        sign = -sign
    front = blocks[:ell] + (merged,)
    out = []
    for shuffled, eps in graded_shuffles(tail_pi, tail_mu,
                                         [len(b) - 1 for b in tail_pi],
                                         [len(b) - 1 for b in tail_mu]):
        out.append((OrderedPartition(front + shuffled), sign * eps))
    return LinComb(out)


def pi_relabel(cell: OrderedPartition, mapping: dict) -> LinComb:
    sign = 1
    new = []
    for b in cell.blocks:
        s, e = sort_sign([mapping[x] for x in b])
        sign *= e
        new.append(s)
    return LinComb.basis(OrderedPartition(tuple(new)), sign)


def permutohedron_face_count(n: int, k: int) -> int:
    """Number of ``k``-dimensional faces of the ``(n-1)``-permutohedron: ``(n-k)! S(n, n-k)``."""
    if not 0 <= k < n:
        return 0
    return factorial(n - k) * stirling2(n, n - k)


def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1)) // factorial(k)


class PermutohedraOperad(DGOperad):
    name = "pi"
    direction = 1

    def basis(self, labels):
        return pi_basis(labels)

    def unit(self, label):
        return LinComb.basis(OrderedPartition(((label,),)))

    def cell_labels(self, cell):
        return cell.labels

    def cell_dim(self, cell):
        return cell.dim

    def compose_cells(self, a, i, b):
        return pi_compose(a, i, b)

    def d_cell(self, a):
        return pi_d(a)

    def relabel_cell(self, a, mapping):
        return pi_relabel(a, mapping)


PI = PermutohedraOperad()
