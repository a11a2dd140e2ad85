"""Computed dimension tables for the fifteen generating series, next to their closed forms."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

from .classical import AS, COM
from .free import QuadraticData
from .pasc import PASC
from .perm import PI
from .presentations import presentation
from .quotient import CherryTower, DirectIdeal
from .series import (CONJECTURAL, EXPONENTIAL, KOSZUL_INVERSE_FORMS, TABLE_ENTRIES, Series,
                     SeriesTruncation, closed_form_coefficients, closed_form_series,
                     series_substitute, suspension_series)

# entry -> ("explicit", model) | ("degree0", model) | ("presented", presentation name)
SOURCES = {
    "pi": ("explicit", PI),
    "pasc": ("explicit", PASC),
    "com": ("explicit", COM),
    "as": ("explicit", AS),
    "perm": ("degree0", PASC),
    "k": ("presented", "kprime"),
    "trias": ("presented", "trias"),
    "coprod": ("presented", "coprod"),
    "lambda": ("presented", "lambda"),
    "zin": ("presented", "zin"),
    "dend": ("presented", "dend-ns"),
    "prelie": ("presented", "prelie"),
    "lie": ("presented", "lie"),
    "dias": ("presented", "dias-ns"),
    "leib": ("presented", "leib"),
}

EXPLICIT_LIMIT = 7
PRESENTED_LIMIT = 4


def default_limit(entry: str) -> int:
    kind, _ = SOURCES[entry]
    return EXPLICIT_LIMIT if kind != "presented" else PRESENTED_LIMIT


_ENGINES: dict = {}


def _engines(q: QuadraticData) -> tuple[DirectIdeal, CherryTower]:
    key = (q.name, id(q))
    if key not in _ENGINES:
        _ENGINES[key] = (DirectIdeal(q), CherryTower(q))
    return _ENGINES[key]


def presented_dims(q: QuadraticData, n: int, exact_up_to: int | None = None) -> dict[int, int]:
    """Per-degree quotient dimensions; exact over Z up to ``exact_up_to``, prime field beyond."""
    fr = q.free
    if n <= 2:
        out: dict[int, int] = {}
        for t in fr.basis(n):
            out[fr.degree(t)] = out.get(fr.degree(t), 0) + 1
        return out
    if exact_up_to is None:
        exact_up_to = 4 if fr.symmetric else 5
    direct, tower = _engines(q)
    if n <= exact_up_to:
        return direct.level(n).quotient_by_degree()
    return tower.quotient_dims(n)


def series_truncate(entry: str, N: int | None = None) -> SeriesTruncation:
    """Dimensions of the operad behind a table entry, computed from its model or presentation."""
    if entry not in SOURCES:
        raise KeyError(f"unknown table entry {entry!r}")
    N = default_limit(entry) if N is None else N
    kind, src = SOURCES[entry]
    rows: dict[int, dict[int, int]] = {}
    for n in range(1, N + 1):
        if kind == "presented":
            row = presented_dims(presentation(src), n)
        else:
            row = src.dims(n)
            if kind == "degree0":
                row = {0: row.get(0, 0)}
            if src is AS:
                # regular representation: one planar word per arity
                row = {k: v // factorial(n) for k, v in row.items()}
        rows[n] = {k: v for k, v in row.items() if v}
    return SeriesTruncation(entry, N, EXPONENTIAL[entry],
                            {(n, k): v for n, r in rows.items() for k, v in r.items()})


@dataclass
class TableCell:
    entry: str
    n: int
    computed: dict
    closed_form: dict
    conjectural: bool

    @property
    def equal(self) -> bool:
        return self.computed == self.closed_form


@dataclass
class TableReport:
    max_arity: int
    cells: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.equal for c in self.cells)

    def rows(self):
        """CSV rows ``(operad, n, k, dim)`` of the computed dimensions."""
        for c in self.cells:
            for k, v in sorted(c.computed.items()):
                yield (c.entry, c.n, k, v)


def table_report(max_arity: int | None = None, entries=TABLE_ENTRIES) -> TableReport:
    """Computed rows against closed forms; presented entries stop at their own limit."""
    rep = TableReport(max_arity or EXPLICIT_LIMIT)
    for e in entries:
        N = default_limit(e) if max_arity is None else min(max_arity, default_limit(e))
        comp = series_truncate(e, N)
        closed = closed_form_coefficients(e, N)
        for n in range(1, N + 1):
            rep.cells.append(TableCell(e, n, comp.row(n), closed.row(n), e in CONJECTURAL))
    return rep


def format_table(rep: TableReport) -> str:
    lines = [f"{'operad':<8} {'n':>2}  {'computed':<40} {'closed form':<40} status"]
    for c in rep.cells:
        comp = ",".join(str(c.computed.get(k, 0)) for k in range(max(c.computed, default=-1) + 1))
        clo = ",".join(str(c.closed_form.get(k, 0)) for k in range(max(c.closed_form, default=-1) + 1))
        status = "equal" if c.equal else "DIFFERENT"
        if c.conjectural:
            status += " (conjectural)"
        lines.append(f"{c.entry:<8} {c.n:>2}  {comp:<40} {clo:<40} {status}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# series identities


@dataclass
class CompositionReport:
    N: int
    zin_outer: bool
    zin_inner: bool

    @property
    def order(self) -> str | None:
        if self.zin_outer:
            return "g_Zin(g_ΣCom(x,t),t)"
        if self.zin_inner:
            return "g_ΣCom(g_Zin(x,t),t)"
        return None

    @property
    def passed(self) -> bool:
        return self.order is not None


def distributive_law_check(N: int = 6) -> CompositionReport:
    """Try both composition orders of the Zin and suspended Com series against ``g_Pi``."""
    zin = closed_form_coefficients("zin", N)
    scom = suspension_series(series_truncate("com", N))
    target = series_truncate("pi", N)

    def matches(outer, inner) -> bool:
        try:
            return series_substitute(outer, inner, N).dims == target.dims
        except ValueError:
            return False

    return CompositionReport(N, matches(zin, scom), matches(scom, zin))


KOSZUL_PAIRS = (("pi", "coprod"), ("pasc", "lambda"), ("k", "trias"))
KOSZUL_FORM = "f(-g(-x,t),t)"


@dataclass
class KoszulInverseReport:
    N: int
    results: dict  # (f, g) -> {form: bool}

    def holds(self, form: str = KOSZUL_FORM) -> bool:
        return all(r[form] for r in self.results.values())

    def forms_holding(self) -> list[str]:
        return [f for f in KOSZUL_INVERSE_FORMS if self.holds(f)]


def koszul_inverse_check(N: int = 5) -> KoszulInverseReport:
    """Every candidate functional-inverse form, on each dual pair in both directions."""
    out = {}
    for a, b in KOSZUL_PAIRS:
        sa, sb = closed_form_series(a, N), closed_form_series(b, N)
        for f, g, fn, gn in ((sa, sb, a, b), (sb, sa, b, a)):
            out[(fn, gn)] = {form: KOSZUL_INVERSE_FORMS[form](f, g) == Series.x(N)
                             for form in KOSZUL_INVERSE_FORMS}
    return KoszulInverseReport(N, out)
