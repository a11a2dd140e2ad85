from itertools import permutations
from math import comb

import pytest
from hypothesis import given, strategies as st

from dgoperads.exalg import (LinComb, bilinear, check_bijection, graded_shuffles, koszul_sign,
                             normalize_word, permutation_parity, sort_sign, standard_relabeling)


def brute_parity(seq):
    """Parity by counting transpositions in a selection sort."""
    s = list(seq)
    swaps = 0
    for a in range(len(s)):
        b = min(range(a, len(s)), key=s.__getitem__)
        if b != a:
            s[a], s[b] = s[b], s[a]
            swaps += 1
    return swaps & 1


distinct = st.lists(st.integers(-50, 50), unique=True, max_size=8)


@given(distinct)
def test_parity_matches_selection_sort(seq):
    assert permutation_parity(seq) == brute_parity(seq)


@given(distinct)
def test_sort_sign_sorts(seq):
    out, sign = sort_sign(seq)
    assert list(out) == sorted(seq)
    assert sign == (-1) ** brute_parity(seq)


def test_sort_sign_repeated_letter_is_zero():
    assert sort_sign([2, 1, 2]) == ((), 0)
    assert normalize_word([3, 3]).is_zero


def test_normalize_word_examples():
    w = normalize_word([2, 1, 3])
    assert (w.labels, w.sign) == ((1, 2, 3), -1)
    w = normalize_word([3, 1, 2])
    assert (w.labels, w.sign) == ((1, 2, 3), 1)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=6), st.randoms())
def test_koszul_sign_counts_odd_inversions(degrees, rnd):
    perm = list(range(len(degrees)))
    rnd.shuffle(perm)
    inv = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm))
              if perm[a] > perm[b] and degrees[perm[a]] & 1 and degrees[perm[b]] & 1)
    assert koszul_sign(perm, degrees) == (-1) ** inv


def test_koszul_sign_rejects_non_bijection():
    with pytest.raises(ValueError):
        koszul_sign([0, 0], [1, 1])


@pytest.mark.parametrize("p,q", [(0, 3), (2, 2), (3, 2), (1, 4)])
def test_shuffle_count(p, q):
    out = graded_shuffles(list("abc")[:p], list("wxyz")[:q])
    assert len(out) == comb(p + q, p)
    assert all(e == 1 for _, e in out)
    assert len({s for s, _ in out}) == len(out)


def test_shuffles_of_odd_items():
    out = dict(graded_shuffles(["a"], ["b", "c"], [1], [1, 1]))
    assert out == {("a", "b", "c"): 1, ("b", "a", "c"): -1, ("b", "c", "a"): 1}


@given(st.lists(st.integers(0, 2), min_size=1, max_size=3),
       st.lists(st.integers(0, 2), min_size=1, max_size=3))
def test_shuffle_sign_equals_koszul_sign(ld, rd):
    left = [("L", k) for k in range(len(ld))]
    right = [("R", k) for k in range(len(rd))]
    deg = dict(zip(left, ld)) | dict(zip(right, rd))
    items = left + right
    for shuffled, eps in graded_shuffles(left, right, ld, rd):
        perm = [items.index(x) for x in shuffled]
        assert eps == koszul_sign(perm, [deg[x] for x in items])


coeffs = st.dictionaries(st.sampled_from("abcde"), st.integers(-5, 5), max_size=5)


@given(coeffs, coeffs)
def test_lincomb_group_laws(a, b):
    x, y = LinComb(a), LinComb(b)
    assert x + y == y + x
    assert x - x == LinComb()
    assert (x + y) * 3 == x * 3 + y * 3
    assert all(v for v in (x + y).values())


def test_lincomb_merges_terms():
    x = LinComb([("a", 1), ("a", 2), ("b", 1), ("b", -1)])
    assert dict(x) == {"a": 3}
    assert not LinComb.basis("z", 0)


def test_bilinear_and_map_basis():
    x = LinComb({"a": 2, "b": 1})
    y = LinComb({"u": 3})
    z = bilinear(lambda p, q: LinComb.basis(p + q), x, y)
    assert z == LinComb({"au": 6, "bu": 3})
    assert x.map_basis(lambda c: LinComb.basis("s", 1)) == LinComb({"s": 3})


def test_relabeling_helpers():
    assert standard_relabeling([7, 3, 5]) == {3: 1, 5: 2, 7: 3}
    check_bijection({1: 2, 2: 1}, [1, 2])
    with pytest.raises(ValueError):
        check_bijection({1: 2, 2: 2}, [1, 2])


@pytest.mark.parametrize("n", range(1, 6))
def test_parity_sums_to_zero_over_symmetric_group(n):
    if n > 1:
        assert sum((-1) ** permutation_parity(p) for p in permutations(range(n))) == 0
