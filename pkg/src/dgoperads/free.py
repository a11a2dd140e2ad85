"""Free operads on binary graded generators and quadratic quotients.

A tree monomial is either a leaf (an ``int`` label) or a vertex
``(g, left, right)`` with ``g`` an index into the generator list.  The sign
of a monomial lives in the coefficient of the surrounding :class:`LinComb`.

Koszul signs follow the depth-first (preorder) listing of vertices: the
composite ``S o_i T`` is the product "vertices of S, then vertices of T",
reordered to preorder.  In the symmetric case monomials are kept canonical:
at every vertex the subtree holding the smallest leaf is on the left.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .exalg import LinComb


@dataclass(frozen=True)
class GeneratorSpace:
    """Binary generators with homological dimensions and the action of the transposition.

    ``swap[g]`` lists ``(h, c)`` with ``g . (12) = sum c * h``; it is ``None``
    for nonsymmetric generators.
    """

    names: tuple
    dims: tuple
    swap: tuple | None = None

    def __post_init__(self):
        if len(self.names) != len(self.dims):
            raise ValueError("names and dims differ in length")
        if self.swap is not None:
            # the transposition must act as an involution
            for g in range(len(self.names)):
                acc: dict = {}
                for h, c in self.swap[g]:
                    for k, c2 in self.swap[h]:
                        acc[k] = acc.get(k, 0) + c * c2
                acc = {k: v for k, v in acc.items() if v}
                if acc != {g: 1}:
                    raise ValueError(f"action of (12) does not square to 1 on {self.names[g]}")

    @property
    def symmetric(self) -> bool:
        return self.swap is not None

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def swap_matrix(self) -> list[list[int]]:
        g = len(self.names)
        mat = [[0] * g for _ in range(g)]
        for a in range(g):
            for h, c in self.swap[a]:
                mat[a][h] += c
        return mat


def free_action_space(names: Sequence[str], dims: Sequence[int],
                      swapped_names: Sequence[str]) -> GeneratorSpace:
    """Generators ``names`` together with their free transposition images ``swapped_names``."""
    allnames = tuple(names) + tuple(swapped_names)
    alldims = tuple(dims) + tuple(dims)
    g = len(names)
    swap = tuple(((k + g, 1),) for k in range(g)) + tuple(((k, 1),) for k in range(g))
    return GeneratorSpace(allnames, alldims, swap)


# ---------------------------------------------------------------------------
# tree helpers


def is_leaf(t) -> bool:
    return isinstance(t, int)


def leaves(t) -> tuple:
    if isinstance(t, int):
        return (t,)
    return leaves(t[1]) + leaves(t[2])


def min_leaf(t) -> int:
    while not isinstance(t, int):
        t = t[1]
    return t


def vertices(t) -> list[int]:
    """Generator indices in preorder."""
    if isinstance(t, int):
        return []
    return [t[0]] + vertices(t[1]) + vertices(t[2])


def tree_degree(t, dims: Sequence[int]) -> int:
    if isinstance(t, int):
        return 0
    return dims[t[0]] + tree_degree(t[1], dims) + tree_degree(t[2], dims)


def map_leaves(t, f):
    if isinstance(t, int):
        return f[t]
    return (t[0], map_leaves(t[1], f), map_leaves(t[2], f))


def tree_repr(t, names: Sequence[str]) -> str:
    if isinstance(t, int):
        return str(t)
    return f"{names[t[0]]}({tree_repr(t[1], names)},{tree_repr(t[2], names)})"


def _graft(t, i: int, s, dims, s_deg: int):
    """Replace leaf ``i`` of ``t`` by ``s``; returns (tree, sign)."""
    # preorder walk: count the degree of vertices of t visited after leaf i
    after = [0]
    found = [False]

    def walk(u):
        if isinstance(u, int):
            if u == i:
                found[0] = True
                return s
            return u
        if found[0]:
            after[0] += dims[u[0]]
        left = walk(u[1])
        right = walk(u[2])
        return (u[0], left, right)

    new = walk(t)
    if not found[0]:
        raise ValueError(f"no leaf {i}")
    sign = -1 if (after[0] & 1 and s_deg & 1) else 1
    return new, sign


def _count_after(t, i: int, dims) -> int:
    """Total degree of the vertices of ``t`` that come after leaf ``i`` in preorder."""
    total = 0
    found = False
    stack = [t]
    while stack:
        u = stack.pop()
        if isinstance(u, int):
            if u == i:
                found = True
            continue
        if found:
            total += dims[u[0]]
        stack.append(u[2])
        stack.append(u[1])
    return total


class FreeOperad:
    """The free (symmetric or nonsymmetric) operad on a :class:`GeneratorSpace`."""

    def __init__(self, gens: GeneratorSpace, symmetric: bool | None = None):
        self.gens = gens
        self.symmetric = gens.symmetric if symmetric is None else symmetric
        if self.symmetric and gens.swap is None:
            raise ValueError("symmetric free operad needs the transposition action")
        self.dims = gens.dims
        self._basis_cache: dict = {}
        self._canon_cache: dict = {}

    # -- monomials -------------------------------------------------------------
    def generator(self, g: int | str, left: int = 1, right: int = 2) -> LinComb:
        if isinstance(g, str):
            g = self.gens.index(g)
        return self.canonical((g, left, right))

    def degree(self, t) -> int:
        return tree_degree(t, self.dims)

    def canonical(self, t) -> LinComb:
        if not self.symmetric:
            return LinComb.basis(t)
        return LinComb(self._canon(t))

    def _canon_sum(self, terms) -> dict:
        out: dict = {}
        for t, c in terms:
            for u, k in (self._canon(t) if self.symmetric else ((t, 1),)):
                out[u] = out.get(u, 0) + c * k
        return {u: v for u, v in out.items() if v}

    def _canon(self, t) -> tuple:
        """Canonical form as a tuple of ``(tree, coeff)`` pairs (memoized)."""
        if isinstance(t, int):
            return ((t, 1),)
        hit = self._canon_cache.get(t)
        if hit is not None:
            return hit
        g, a, b = t
        out: dict = {}
        for a2, ca in self._canon(a):
            for b2, cb in self._canon(b):
                if min_leaf(b2) < min_leaf(a2):
                    sgn = -1 if (self.degree(a2) & 1 and self.degree(b2) & 1) else 1
                    for h, ch in self.gens.swap[g]:
                        key = (h, b2, a2)
                        out[key] = out.get(key, 0) + ca * cb * ch * sgn
                else:
                    key = (g, a2, b2)
                    out[key] = out.get(key, 0) + ca * cb
        res = tuple((k, v) for k, v in out.items() if v)
        self._canon_cache[t] = res
        return res

    def basis(self, n: int) -> list:
        if n < 1:
            raise ValueError("arity must be at least 1")
        hit = self._basis_cache.get(n)
        if hit is None:
            labels = tuple(range(1, n + 1))
            if self.symmetric:
                hit = list(self._sym_trees(labels))
            else:
                hit = list(self._planar_trees(labels))
            self._basis_cache[n] = hit
        return hit

    def _sym_trees(self, labels: tuple):
        if len(labels) == 1:
            yield labels[0]
            return
        first, rest = labels[0], labels[1:]
        ng = len(self.gens)
        for k in range(0, len(rest)):
            for extra in combinations(rest, k):
                left = (first,) + extra
                right = tuple(x for x in rest if x not in extra)
                for lt in self._sym_trees(left):
                    for rt in self._sym_trees(right):
                        for g in range(ng):
                            yield (g, lt, rt)

    def _planar_trees(self, labels: tuple):
        if len(labels) == 1:
            yield labels[0]
            return
        ng = len(self.gens)
        for k in range(1, len(labels)):
            for lt in self._planar_trees(labels[:k]):
                for rt in self._planar_trees(labels[k:]):
                    for g in range(ng):
                        yield (g, lt, rt)

    def basis_by_degree(self, n: int) -> dict[int, list]:
        out: dict[int, list] = {}
        for t in self.basis(n):
            out.setdefault(self.degree(t), []).append(t)
        return dict(sorted(out.items()))

    # -- operations ------------------------------------------------------------
    def compose_trees(self, s, i: int, t) -> LinComb:
        """``s o_i t`` on standard labels (``s`` over 1..n, ``t`` over 1..m)."""
        m = len(leaves(t))
        n = len(leaves(s))
        if not 1 <= i <= n:
            raise ValueError(f"slot {i} out of range")
        fs = {j: (j if j < i else (j + m - 1 if j > i else j)) for j in range(1, n + 1)}
        ft = {k: k + i - 1 for k in range(1, m + 1)}
        s2 = map_leaves(s, fs)
        t2 = map_leaves(t, ft)
        new, sign = _graft(s2, i, t2, self.dims, self.degree(t))
        # order-preserving shifts keep canonical forms canonical
        return LinComb.basis(new, sign)

    def compose(self, x: LinComb, i: int, y: LinComb) -> LinComb:
        acc: dict = {}
        for s, cs in x.items():
            for t, ct in y.items():
                for r, cr in self.compose_trees(s, i, t).items():
                    v = acc.get(r, 0) + cs * ct * cr
                    if v:
                        acc[r] = v
                    else:
                        del acc[r]
        return LinComb(acc)

    def relabel(self, x: LinComb, mapping: dict) -> LinComb:
        if not self.symmetric:
            raise ValueError("nonsymmetric operads carry no relabeling")
        return x.map_basis(lambda t: self.canonical(map_leaves(t, mapping)))

    def substitute(self, x: LinComb, images: Sequence[dict]) -> LinComb:
        """Replace each vertex generator ``g`` by the combination ``images[g]`` (same degree)."""
        def sub(t):
            if isinstance(t, int):
                return ((t, 1),)
            out = []
            for h, c in images[t[0]].items():
                for a, ca in sub(t[1]):
                    for b, cb in sub(t[2]):
                        out.append(((h, a, b), c * ca * cb))
            return out

        return LinComb([p for t, c in x.items() for (u, k) in sub(t) for p in [(u, c * k)]])

    def derivation(self, x: LinComb, d_gen: Sequence[dict]) -> LinComb:
        """Extend ``g -> d_gen[g]`` (combinations of generators) as a degree +-1 derivation."""
        dims = self.dims

        def walk(t, acc_deg):
            # yields (new tree, sign) for each vertex whose generator is differentiated
            if isinstance(t, int):
                return []
            g, a, b = t
            out = []
            sgn = -1 if acc_deg & 1 else 1
            for h, c in d_gen[g].items():
                out.append(((h, a, b), sgn * c))
            da = acc_deg + dims[g]
            for a2, ca in walk(a, da):
                out.append(((g, a2, b), ca))
            db = da + tree_degree(a, dims)
            for b2, cb in walk(b, db):
                out.append(((g, a, b2), cb))
            return out

        acc = LinComb()
        for t, c in x.items():
            acc = acc + LinComb((u, c * k) for u, k in walk(t, 0))
        if self.symmetric:
            acc = acc.map_basis(self.canonical)
        return acc

    def cherries(self, t) -> list:
        """Vertices whose two children are leaves, as ``(left leaf, right leaf, g)``, in preorder."""
        out = []
        stack = [t]
        while stack:
            u = stack.pop()
            if isinstance(u, int):
                continue
            if isinstance(u[1], int) and isinstance(u[2], int):
                out.append((u[1], u[2], u[0]))
            else:
                stack.append(u[2])
                stack.append(u[1])
        return out

    def contract(self, t, cherry) -> tuple:
        """Split ``t`` as ``(rest) o_a cherry``; returns (rest on standard labels, sign).

        The cherry is replaced by its left leaf ``a``; remaining labels are
        renumbered order-preservingly (the right leaf disappears).
        """
        a, b, g = cherry

        def walk(u):
            if isinstance(u, int):
                return u
            if u[1] == a and u[2] == b and u[0] == g:
                return a
            return (u[0], walk(u[1]), walk(u[2]))

        rest = walk(t)
        after = _count_after(rest, a, self.dims)
        sign = -1 if (after & 1 and self.dims[g] & 1) else 1
        renum = {x: (x if x < b else x - 1) for x in leaves(rest)}
        return map_leaves(rest, renum), sign


# ---------------------------------------------------------------------------
# quadratic data


@dataclass
class QuadraticData:
    """Binary quadratic presentation; relations are arity-3 elements of the free operad."""

    name: str
    gens: GeneratorSpace
    relations: list
    symmetric: bool = True
    d_gen: list | None = None  # images of generators under d, as {gen index: coeff}
    direction: int = 1
    relation_names: list = field(default_factory=list)

    def __post_init__(self):
        self.free = FreeOperad(self.gens, self.symmetric)
        for r in self.relations:
            for t in r:
                if len(leaves(t)) != 3:
                    raise ValueError(f"{self.name}: relation not in arity 3")
            degs = {self.free.degree(t) for t in r}
            if len(degs) > 1:
                raise ValueError(f"{self.name}: relation not homogeneous in dimension")

    def saturated_relations(self) -> list:
        """Relations closed under the action of the symmetric group on three letters."""
        if not self.symmetric:
            return list(self.relations)
        out = []
        for r in self.relations:
            for perm in permutations((1, 2, 3)):
                out.append(self.free.relabel(r, dict(zip((1, 2, 3), perm))))
        return out

    def generator_dims(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for d in self.gens.dims:
            out[d] = out.get(d, 0) + 1
        return out
