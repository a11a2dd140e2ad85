"""Exact arithmetic substrate: formal integer combinations, exterior words, Koszul signs."""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from itertools import combinations
from numbers import Rational
from typing import Any


@dataclass(frozen=True)
class SignedWord:
    """A normalized exterior monomial; ``sign == 0`` is the zero word."""

    labels: tuple = ()
    sign: int = 1

    @property
    def is_zero(self) -> bool:
        return self.sign == 0


ZERO_WORD = SignedWord((), 0)


def permutation_parity(seq: Sequence) -> int:
    """Parity (0 or 1) of the permutation sorting ``seq`` (entries distinct)."""
    n = len(seq)
    inv = 0
    for a in range(n):
        x = seq[a]
        for b in range(a + 1, n):
            if seq[b] < x:
                inv += 1
    return inv & 1


def sort_sign(labels: Sequence) -> tuple[tuple, int]:
    """Return ``(sorted labels, sign)``; sign is 0 when a label repeats."""
    out = tuple(sorted(labels))
    for a, b in zip(out, out[1:]):
        if a == b:
            return (), 0
    return out, (-1 if permutation_parity(labels) else 1)


def normalize_word(labels: Iterable) -> SignedWord:
    labels = tuple(labels)
    out, sign = sort_sign(labels)
    if sign == 0:
        return ZERO_WORD
    return SignedWord(out, sign)


def _check_bijection(perm: Sequence[int], n: int) -> None:
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise ValueError(f"not a bijection on {n} positions: {list(perm)!r}")


def koszul_sign(permutation: Sequence[int], degrees: Sequence[int]) -> int:
    """Sign of reordering graded items.

    ``permutation[k]`` is the original index of the item placed at position k.
    Each inversion between two odd items costs a factor -1.
    """
    n = len(degrees)
    _check_bijection(permutation, n)
    odd = [permutation[k] for k in range(n) if degrees[permutation[k]] & 1]
    return -1 if permutation_parity(odd) else 1


def graded_shuffles(left: Sequence[Any], right: Sequence[Any],
                    left_degrees: Sequence[int] | None = None,
                    right_degrees: Sequence[int] | None = None) -> list[tuple[tuple, int]]:
    """All shuffles of ``left`` with ``right`` and their Koszul signs.

    The sign is taken relative to the concatenation ``left + right``.
    Shuffles are listed lexicographically in the set of positions taken by
    ``left``.  Degrees default to 0.
    """
    p, q = len(left), len(right)
    ld = list(left_degrees) if left_degrees is not None else [0] * p
    rd = list(right_degrees) if right_degrees is not None else [0] * q
    out = []
    for pos in combinations(range(p + q), p):
        pos_set = set(pos)
        items = []
        sign = 1
        # odd right items already placed in front of the current left item
        li = ri = 0
        odd_right_before = 0
        for k in range(p + q):
            if k in pos_set:
                if ld[li] & 1 and odd_right_before & 1:
                    sign = -sign
                items.append(left[li])
                li += 1
            else:
                if rd[ri] & 1:
                    odd_right_before += 1
                items.append(right[ri])
                ri += 1
        out.append((tuple(items), sign))
    return out


class LinComb(Mapping):
    """Finite formal sum of hashable basis elements with nonzero int coefficients.

    Values are immutable; arithmetic returns new objects.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Hashable, int] | Iterable[tuple[Hashable, int]] = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for b, c in items:
            if c:
                v = acc.get(b, 0) + c
                if v:
                    acc[b] = v
                else:
                    del acc[b]
        self._terms = acc
        self._hash = None

    @classmethod
    def _wrap(cls, d: dict) -> "LinComb":
        out = cls.__new__(cls)
        out._terms = d
        out._hash = None
        return out

    @classmethod
    def basis(cls, b: Hashable, coeff: int = 1) -> "LinComb":
        return cls._wrap({b: coeff} if coeff else {})

    def __getitem__(self, b):
        return self._terms[b]

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coeff(self, b) -> int:
        return self._terms.get(b, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            if other == 0:
                return self
            return NotImplemented
        if len(other) > len(self):
            self, other = other, self
        acc = dict(self._terms)
        for b, c in other._terms.items():
            v = acc.get(b, 0) + c
            if v:
                acc[b] = v
            else:
                del acc[b]
        return LinComb._wrap(acc)

    __radd__ = __add__

    def __neg__(self) -> "LinComb":
        return LinComb._wrap({b: -c for b, c in self._terms.items()})

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def __mul__(self, k) -> "LinComb":
        if not isinstance(k, Rational):
            return NotImplemented
        if k == 0:
            return LinComb._wrap({})
        return LinComb._wrap({b: c * k for b, c in self._terms.items()})

    __rmul__ = __mul__

    def map_basis(self, f) -> "LinComb":
        """Extend ``f: basis -> LinComb`` linearly."""
        acc: dict = {}
        for b, c in self._terms.items():
            for b2, c2 in f(b).items():
                v = acc.get(b2, 0) + c * c2
                if v:
                    acc[b2] = v
                else:
                    del acc[b2]
        return LinComb._wrap(acc)

    def sorted_items(self, key=None) -> list:
        return sorted(self._terms.items(), key=key or (lambda kv: repr(kv[0])))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for b, c in self.sorted_items():
            parts.append(f"{c:+d}*{b!r}")
        return " ".join(parts)


def bilinear(f, x: LinComb, y: LinComb) -> LinComb:
    """Extend ``f(basis_x, basis_y) -> LinComb`` bilinearly."""
    acc: dict = {}
    for a, ca in x.items():
        for b, cb in y.items():
            k = ca * cb
            for r, cr in f(a, b).items():
                v = acc.get(r, 0) + k * cr
                if v:
                    acc[r] = v
                else:
                    del acc[r]
    return LinComb._wrap(acc)


def check_bijection(mapping: Mapping, domain: Iterable) -> None:
    """Raise ``ValueError`` unless ``mapping`` restricted to ``domain`` is injective and total."""
    dom = list(domain)
    try:
        img = [mapping[a] for a in dom]
    except KeyError as exc:
        raise ValueError(f"bijection undefined on {exc.args[0]!r}") from None
    if len(set(img)) != len(img):
        raise ValueError("relabeling is not injective")


def standard_relabeling(labels: Iterable) -> dict:
    """Order-preserving bijection from a finite label set onto ``1..n``."""
    return {a: k for k, a in enumerate(sorted(labels), start=1)}
