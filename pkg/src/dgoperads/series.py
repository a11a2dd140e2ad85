"""Exact generating series of graded operads.

A :class:`Series` is a power series in ``x`` truncated at ``x^N`` whose
coefficients are Laurent polynomials in ``t`` with rational coefficients.
Closed forms are evaluated with exact ``exp``, ``log``, ``sqrt`` and
reciprocal recurrences; no floating point is involved.

The dimension convention is ``g_P(x, t) = sum dim P^k(n) (-t)^k x^n / n!``
for symmetric operads and the same without ``n!`` for nonsymmetric ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable

# ---------------------------------------------------------------------------
# Laurent polynomials in t: dict exponent -> Fraction


def _padd(a: dict, b: dict, s: int = 1) -> dict:
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, 0) + s * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def _pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for i, u in a.items():
        for j, v in b.items():
            out[i + j] = out.get(i + j, 0) + u * v
    return {k: v for k, v in out.items() if v}


def _pscale(a: dict, c) -> dict:
    return {k: v * c for k, v in a.items() if v * c} if c else {}


def _pshift(a: dict, m: int) -> dict:
    return {k + m: v for k, v in a.items()}


def _pdivexact(a: dict, b: dict) -> dict:
    """Exact division of Laurent polynomials; raises when ``b`` does not divide ``a``."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    a = dict(a)
    out: dict = {}
    bl, bh = min(b), max(b)
    # the quotient's exponents lie in [min(a) - bl, max(a) - bh]
    floor = min(a) - bl if a else 0
    while a and max(a) - bh >= floor:
        lead = max(a)
        q = Fraction(a[lead]) / b[bh]
        out[lead - bh] = q
        a = _padd(a, _pshift(_pscale(b, q), lead - bh), -1)
    if a:
        raise ValueError("polynomial division is not exact")
    return out


def _monomial(c=1, k: int = 0) -> dict:
    return {k: Fraction(c)} if c else {}


# ---------------------------------------------------------------------------


class Series:
    """Truncated series ``sum_{n <= N} c_n(t) x^n``."""

    __slots__ = ("N", "c")

    def __init__(self, N: int, coeffs=None):
        self.N = N
        self.c = [dict() for _ in range(N + 1)]
        if coeffs:
            for n, p in (coeffs.items() if isinstance(coeffs, dict) else enumerate(coeffs)):
                if n <= N:
                    self.c[n] = {k: Fraction(v) for k, v in p.items() if v}

    @classmethod
    def x(cls, N: int, coeff: dict | None = None) -> "Series":
        s = cls(N)
        if N >= 1:
            s.c[1] = coeff or _monomial(1)
        return s

    @classmethod
    def const(cls, N: int, poly: dict) -> "Series":
        s = cls(N)
        s.c[0] = {k: Fraction(v) for k, v in poly.items() if v}
        return s

    def copy(self) -> "Series":
        return Series(self.N, {n: dict(p) for n, p in enumerate(self.c)})

    def __add__(self, other: "Series") -> "Series":
        N = min(self.N, other.N)
        return Series(N, [_padd(self.c[n], other.c[n]) for n in range(N + 1)])

    def __sub__(self, other: "Series") -> "Series":
        N = min(self.N, other.N)
        return Series(N, [_padd(self.c[n], other.c[n], -1) for n in range(N + 1)])

    def __neg__(self) -> "Series":
        return self.scale(-1)

    def scale(self, c) -> "Series":
        return Series(self.N, [_pscale(p, Fraction(c)) for p in self.c])

    def times_poly(self, poly: dict) -> "Series":
        return Series(self.N, [_pmul(p, poly) for p in self.c])

    def div_poly(self, poly: dict) -> "Series":
        return Series(self.N, [_pdivexact(p, poly) if p else {} for p in self.c])

    def __mul__(self, other: "Series") -> "Series":
        N = min(self.N, other.N)
        out = [dict() for _ in range(N + 1)]
        for i in range(N + 1):
            if not self.c[i]:
                continue
            for j in range(N + 1 - i):
                if other.c[j]:
                    out[i + j] = _padd(out[i + j], _pmul(self.c[i], other.c[j]))
        return Series(N, out)

    def shift_down(self) -> "Series":
        """Divide by ``x``; the constant term must vanish.  Precision drops by one."""
        if self.c[0]:
            raise ValueError("series has a constant term")
        return Series(self.N - 1, self.c[1:])

    def reciprocal(self) -> "Series":
        a0 = self.c[0]
        if len(a0) != 1:
            raise ValueError("constant term is not an invertible monomial in t")
        (k0, v0), = a0.items()
        inv0 = {-k0: 1 / Fraction(v0)}
        out = [dict() for _ in range(self.N + 1)]
        out[0] = inv0
        for n in range(1, self.N + 1):
            acc: dict = {}
            for j in range(1, n + 1):
                if self.c[j] and out[n - j]:
                    acc = _padd(acc, _pmul(self.c[j], out[n - j]))
            out[n] = _pscale(_pmul(acc, inv0), -1)
        return Series(self.N, out)

    def __truediv__(self, other: "Series") -> "Series":
        return self * other.reciprocal()

    def derivative(self) -> "Series":
        return Series(self.N, [_pscale(self.c[n + 1], n + 1) for n in range(self.N)] + [{}])

    def exp(self) -> "Series":
        """``exp(f)`` for ``f`` without constant term: ``n e_n = sum k f_k e_{n-k}``."""
        if self.c[0]:
            raise ValueError("exp needs a series without constant term")
        out = [dict() for _ in range(self.N + 1)]
        out[0] = _monomial(1)
        for n in range(1, self.N + 1):
            acc: dict = {}
            for k in range(1, n + 1):
                if self.c[k] and out[n - k]:
                    acc = _padd(acc, _pscale(_pmul(self.c[k], out[n - k]), k))
            out[n] = _pscale(acc, Fraction(1, n))
        return Series(self.N, out)

    def log1p(self) -> "Series":
        """``log(1 + f)`` for ``f`` without constant term."""
        if self.c[0]:
            raise ValueError("log1p needs a series without constant term")
        one = Series.const(self.N, _monomial(1))
        quotient = self.derivative() * (one + self).reciprocal()
        return Series(self.N, [{}] + [_pscale(quotient.c[n - 1], Fraction(1, n))
                                      for n in range(1, self.N + 1)])

    def sqrt(self) -> "Series":
        """Square root of a series with constant term 1."""
        if self.c[0] != {0: 1}:
            raise ValueError("sqrt needs constant term 1")
        out = [dict() for _ in range(self.N + 1)]
        out[0] = _monomial(1)
        for n in range(1, self.N + 1):
            acc = dict(self.c[n])
            for i in range(1, n):
                if out[i] and out[n - i]:
                    acc = _padd(acc, _pmul(out[i], out[n - i]), -1)
            out[n] = _pscale(acc, Fraction(1, 2))
        return Series(self.N, out)

    def compose(self, inner: "Series") -> "Series":
        """``self(inner(x, t), t)``; ``inner`` must have no constant term."""
        if inner.c[0]:
            raise ValueError("inner series has a nonzero constant term")
        N = min(self.N, inner.N)
        acc = Series.const(N, self.c[0])
        power = Series.const(N, _monomial(1))
        for n in range(1, N + 1):
            power = power * inner
            if self.c[n]:
                acc = acc + power.times_poly(self.c[n])
        return acc

    def substitute_t(self, f: Callable[[int], tuple]) -> "Series":
        """Apply ``t^k -> c * t^m`` with ``(c, m) = f(k)``."""
        out = []
        for p in self.c:
            q: dict = {}
            for k, v in p.items():
                c, m = f(k)
                q[m] = q.get(m, 0) + c * v
            out.append({k: v for k, v in q.items() if v})
        return Series(self.N, out)

    def scale_x(self, poly: dict) -> "Series":
        """``f(a(t) x, t)`` for a Laurent polynomial ``a``."""
        out = []
        power = _monomial(1)
        for n in range(self.N + 1):
            out.append(_pmul(self.c[n], power))
            power = _pmul(power, poly)
        return Series(self.N, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        N = min(self.N, other.N)
        return all(self.c[n] == other.c[n] for n in range(N + 1))

    def __repr__(self) -> str:
        return f"Series(N={self.N}, {self.c})"


# ---------------------------------------------------------------------------
# dimension tables


@dataclass
class SeriesTruncation:
    """``(n, k) -> dim P^k(n)`` for ``n <= N``; ``exponential`` selects the ``x^n/n!`` convention."""

    name: str
    N: int
    exponential: bool
    dims: dict = field(default_factory=dict)

    def __post_init__(self):
        bad = {key: v for key, v in self.dims.items() if v < 0}
        if bad:
            raise ValueError(f"negative dimensions in {self.name}: {bad}")
        self.dims = {key: v for key, v in sorted(self.dims.items()) if v}

    def row(self, n: int) -> dict[int, int]:
        return {k: v for (m, k), v in self.dims.items() if m == n}

    def to_series(self) -> Series:
        s = Series(self.N)
        for (n, k), v in self.dims.items():
            if n <= self.N:
                c = Fraction(v * (-1) ** k)
                if self.exponential:
                    c /= factorial(n)
                s.c[n] = _padd(s.c[n], {k: c})
        return s

    @classmethod
    def from_series(cls, name: str, s: Series, exponential: bool, N: int | None = None) -> "SeriesTruncation":
        N = s.N if N is None else N
        dims = {}
        for n in range(1, N + 1):
            for k, v in s.c[n].items():
                val = v * (-1) ** k * (factorial(n) if exponential else 1)
                if val.denominator != 1:
                    raise ValueError(f"non-integral coefficient at ({n}, {k}) in {name}")
                if k < 0:
                    raise ValueError(f"negative power of t at ({n}, {k}) in {name}")
                dims[(n, k)] = int(val)
        if s.c[0]:
            raise ValueError(f"{name} has a constant term")
        return cls(name, N, exponential, dims)


def series_truncate(name: str, dims_by_arity: dict[int, dict[int, int]], exponential: bool) -> SeriesTruncation:
    """Package per-arity dimension maps ``{n: {k: dim}}``."""
    N = max(dims_by_arity)
    return SeriesTruncation(name, N, exponential,
                            {(n, k): v for n, row in dims_by_arity.items() for k, v in row.items()})


# ---------------------------------------------------------------------------
# closed forms of the table


T = _monomial(1, 1)
ONE = _monomial(1)


def _geom(N: int, a: dict) -> Series:
    """``a x / (1 - a x)``."""
    x = Series.x(N, a)
    return x * (Series.const(N, ONE) - x).reciprocal()


def _closed(name: str, N: int) -> Series:
    X = Series.x(N)
    one = Series.const(N, ONE)
    if name in ("zin", "as", "leib"):
        return X * (one - X).reciprocal()
    if name == "dend":
        # ((1 - 2x) - sqrt(1 - 4x)) / (2x), expanded one order higher before dividing by x
        M = N + 1
        Xm = Series.x(M)
        onem = Series.const(M, ONE)
        num = (onem - Xm.scale(2)) - (onem - Xm.scale(4)).sqrt()
        return num.shift_down().scale(Fraction(1, 2))
    if name == "prelie":
        # f = x e^f by fixed-point iteration
        f = Series(N)
        for _ in range(N + 1):
            f = X * f.exp()
        return f
    if name == "pi":
        etx = Series.x(N, T).exp()
        return (etx - one) * (one + etx.times_poly(_padd(T, ONE, -1))).reciprocal()
    if name == "k":
        M = N + 1
        Xm = Series.x(M)
        onem = Series.const(M, ONE)
        lin = onem - Xm.scale(2) + Xm.times_poly(T)
        disc = onem - Xm.scale(4) + Xm.times_poly(_pscale(T, 2)) + (Xm * Xm).times_poly(_pmul(T, T))
        num = lin - disc.sqrt()
        return num.shift_down().div_poly(_padd(_pscale(ONE, 2), _pscale(T, 2), -1))
    if name == "lambda":
        s = Series(N)
        for n in range(1, N + 1):
            p = ONE
            for k in range(1, n):
                p = _pmul(p, _padd(_pscale(ONE, n), _pscale(T, k), -1))
            s.c[n] = _pscale(p, Fraction(1, factorial(n)))
        return s
    if name == "com":
        return X.exp() - one
    if name == "lie":
        return -(-X).log1p()
    if name == "pasc":
        return (X.exp() - Series.x(N, _padd(ONE, T, -1)).exp()).div_poly(T)
    if name == "trias":
        a = _padd(ONE, T, -1)  # 1 - t
        second = Series.x(N, a) * (one - Series.x(N, a)).reciprocal()
        return (X * (one - X).reciprocal() - second).div_poly(T)
    if name == "coprod":
        return ((-(-X).log1p()) + Series.x(N, _padd(T, ONE, -1)).log1p()).div_poly(T)
    if name == "perm":
        return X * X.exp()
    if name == "dias":
        return X * ((one - X) * (one - X)).reciprocal()
    raise KeyError(f"unknown table entry {name!r}")


TABLE_ENTRIES = ("zin", "dend", "prelie", "pi", "k", "lambda", "com", "as", "lie",
                 "pasc", "trias", "coprod", "perm", "dias", "leib")
EXPONENTIAL = {"zin": True, "dend": False, "prelie": True, "pi": True, "k": False,
               "lambda": True, "com": True, "as": False, "lie": True, "pasc": True,
               "trias": False, "coprod": True, "perm": True, "dias": False, "leib": True}
CONJECTURAL = frozenset({"lambda"})


def closed_form_series(name: str, N: int) -> Series:
    return _closed(name, N)


def closed_form_coefficients(name: str, N: int) -> SeriesTruncation:
    if name not in EXPONENTIAL:
        raise KeyError(f"unknown table entry {name!r}")
    return SeriesTruncation.from_series(name, _closed(name, N), EXPONENTIAL[name], N)


def coefficient_formula(name: str, n: int) -> dict[int, int]:
    """The coefficient column of the table, evaluated directly."""
    from .perm import permutohedron_face_count
    if name in ("zin", "leib"):
        return {0: factorial(n)}
    if name == "dend":
        return {0: comb(2 * n, n) // (n + 1)}
    if name == "prelie":
        return {0: n ** (n - 1)}
    if name == "pi":
        return {k: permutohedron_face_count(n, k) for k in range(n)}
    if name == "k":
        return {k: associahedron_face_count(n, k) for k in range(n)}
    if name == "lambda":
        p = ONE
        for k in range(1, n):
            p = _pmul(p, _padd(_pscale(ONE, n), _pscale(T, k), -1))
        return {k: int(v * (-1) ** k) for k, v in p.items()}
    if name == "com":
        return {0: 1}
    if name == "as":
        return {0: 1}
    if name == "lie":
        return {0: factorial(n - 1)}
    if name in ("pasc", "trias"):
        return {k: comb(n, k + 1) for k in range(n)}
    if name == "coprod":
        return {k: comb(n, k + 1) * factorial(n - 1) for k in range(n)}
    if name in ("perm", "dias"):
        return {0: n}
    raise KeyError(name)


def associahedron_face_count(n: int, k: int) -> int:
    """Planar trees with ``n + 1`` leaves and ``n - k`` internal vertices (each of valence >= 2)."""
    # dissections of an (n+2)-gon with d = n - k - 1 diagonals (Kirkman-Cayley)
    d = n - k - 1
    m = n + 2
    if d < 0 or d > m - 3:
        return 0
    return comb(m - 3, d) * comb(m + d - 1, d) // (d + 1)


# ---------------------------------------------------------------------------
# transforms


def suspension_series(s: SeriesTruncation) -> SeriesTruncation:
    """``g(x, t) -> -g(-t x, t) / t``."""
    g = s.to_series()
    out = (-g.scale_x(_pscale(T, -1))).div_poly(T)
    return SeriesTruncation.from_series(f"Σ{s.name}", out, s.exponential, s.N)


def desuspension_series(s: SeriesTruncation) -> SeriesTruncation:
    """Inverse of :func:`suspension_series`: ``h(x, t) -> -t h(-x / t, t)``."""
    h = s.to_series()
    out = (-h.scale_x(_pscale(_monomial(1, -1), -1))).times_poly(T)
    name = s.name[1:] if s.name.startswith("Σ") else f"Σ^-1 {s.name}"
    return SeriesTruncation.from_series(name, out, s.exponential, s.N)


def series_substitute(outer: SeriesTruncation, inner: SeriesTruncation, N: int | None = None) -> SeriesTruncation:
    """``g_outer(g_inner(x, t), t)`` truncated at ``N``, in the convention of ``outer``."""
    N = min(outer.N, inner.N) if N is None else N
    g = outer.to_series()
    f = inner.to_series()
    if f.c[0]:
        raise ValueError("inner series has a nonzero constant term")
    g = Series(N, g.c[:N + 1])
    f = Series(N, f.c[:N + 1])
    return SeriesTruncation.from_series(f"{outer.name}∘{inner.name}", g.compose(f), outer.exponential, N)


def negate_x(s: Series) -> Series:
    return s.scale_x(_pscale(ONE, -1))


KOSZUL_INVERSE_FORMS = {
    # name -> f, g -> series that should equal x
    "f(-g(-x,t),t)": lambda f, g: f.compose(-negate_x(g)),
    "f(-g(-x,-t),t)": lambda f, g: f.compose(-negate_x(g.substitute_t(lambda k: ((-1) ** k, k)))),
    "f(g(x,t),t)": lambda f, g: f.compose(g),
    "f(-g(-x,t),-t)": lambda f, g: f.compose(-negate_x(g)).substitute_t(lambda k: ((-1) ** k, k)),
}


def koszul_inverse_holds(f: Series, g: Series, form: str) -> bool:
    out = KOSZUL_INVERSE_FORMS[form](f, g)
    return out == Series.x(out.N)
