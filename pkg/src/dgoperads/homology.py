"""Integral homology of operad components.

Explicit operads give their cells directly.  A presented operad gives an
integral basis of each quotient component: the trees that are not pivots of
the unit-pivot echelon form of the ideal.  The differential of a basis tree
is reduced modulo the ideal, which lands in that basis with integer
coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classical import AS, COM
from .exalg import LinComb
from .free import QuadraticData
from .linalg import smith_normal_form
from .operad import DGOperad
from .pasc import PASC
from .perm import PI
from .presentations import presentation
from .quotient import DirectIdeal

EXPLICIT: dict[str, DGOperad] = {"pi": PI, "pasc": PASC, "com": COM, "as": AS}


@dataclass
class ChainComplexData:
    """Cells per dimension and integer matrices of ``d``.

    ``matrices[k]`` has one row per cell of dimension ``k + direction`` and one
    column per cell of dimension ``k``.
    """

    name: str
    n: int
    direction: int
    labels: dict
    matrices: dict = field(default_factory=dict)

    def dims(self) -> dict[int, int]:
        return {k: len(v) for k, v in sorted(self.labels.items()) if v}

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * v for k, v in self.dims().items())

    def square_is_zero(self) -> bool:
        for k, m in self.matrices.items():
            nxt = self.matrices.get(k + self.direction)
            if nxt is None or not m or not nxt:
                continue
            inner = len(m)
            for i in range(len(nxt)):
                row = nxt[i]
                for j in range(len(m[0])):
                    if sum(row[r] * m[r][j] for r in range(inner) if row[r]):
                        return False
        return True


@dataclass
class HomologySummary:
    name: str
    n: int
    ranks: dict
    torsion: dict

    def is_integers_in_degree_zero(self) -> bool:
        return (self.ranks == {0: 1}) and not any(self.torsion.values())

    def as_dict(self) -> dict:
        return {"name": self.name, "n": self.n,
                "ranks": {str(k): v for k, v in sorted(self.ranks.items())},
                "torsion": {str(k): v for k, v in sorted(self.torsion.items()) if v}}


def _matrix(cells_src: list, cells_dst: list, image) -> list[list[int]]:
    index = {c: r for r, c in enumerate(cells_dst)}
    mat = [[0] * len(cells_src) for _ in cells_dst]
    for j, c in enumerate(cells_src):
        for tgt, v in image(c).items():
            if v != int(v):
                raise ValueError("differential is not integral in this basis")
            mat[index[tgt]][j] = int(v)
    return mat


def _assemble(name: str, n: int, direction: int, by_dim: dict, image) -> ChainComplexData:
    cx = ChainComplexData(name, n, direction, {k: list(v) for k, v in by_dim.items()})
    for k, cells in by_dim.items():
        dst = by_dim.get(k + direction, [])
        if cells and dst:
            cx.matrices[k] = _matrix(cells, dst, image)
        elif cells:
            for c in cells:
                if image(c):
                    raise ValueError(f"d leaves the complex from dimension {k}")
    if not cx.square_is_zero():
        raise ValueError(f"d^2 != 0 on {name}({n})")
    return cx


def explicit_complex(op: DGOperad, n: int) -> ChainComplexData:
    return _assemble(op.name, n, op.direction, op.basis_by_dim(n), op.d_cell)


def presented_complex(q: QuadraticData, n: int) -> ChainComplexData:
    """Complex of ``q``'s quotient in arity ``n`` on the integral basis of non-pivot trees."""
    if q.d_gen is None:
        raise ValueError(f"{q.name} carries no differential")
    fr = q.free
    if n < 3:
        basis = fr.basis(n)
        reduce = LinComb
    else:
        lev = DirectIdeal(q).level(n)
        if lev.torsion or lev.echelon.pending:
            raise ValueError(f"no integral quotient basis for {q.name}({n}): torsion {lev.torsion}")
        basis = lev.quotient_basis()
        reduce = lambda x: LinComb(lev.quotient_coordinates(x))  # noqa: E731
    by_dim: dict = {}
    for t in basis:
        by_dim.setdefault(fr.degree(t), []).append(t)
    image = lambda t: reduce(fr.derivation(LinComb.basis(t), q.d_gen))  # noqa: E731
    return _assemble(q.name, n, q.direction, dict(sorted(by_dim.items())), image)


def build_complex(name: str, n: int) -> ChainComplexData:
    """Chain complex of the named operad in arity ``n``; explicit models win over presentations."""
    if n < 1:
        raise ValueError("arity must be at least 1")
    if name in EXPLICIT:
        return explicit_complex(EXPLICIT[name], n)
    return presented_complex(presentation(name), n)


def homology(cx: ChainComplexData) -> HomologySummary:
    """Free ranks and torsion coefficients via Smith normal forms of every ``d``."""
    ranks: dict = {}
    torsion: dict = {}
    snf = {k: smith_normal_form(m) for k, m in cx.matrices.items()}
    for k, cells in cx.labels.items():
        out_rank = snf[k][1] if k in snf else 0
        src = k - cx.direction  # the map landing in dimension k
        in_rank = snf[src][1] if src in snf else 0
        r = len(cells) - out_rank - in_rank
        if r:
            ranks[k] = r
        tors = [f for f in snf[src][0] if f > 1] if src in snf else []
        if tors:
            torsion[k] = tors
    return HomologySummary(cx.name, cx.n, dict(sorted(ranks.items())), torsion)
