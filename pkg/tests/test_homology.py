from math import factorial

import pytest

from dgoperads.homology import (ChainComplexData, build_complex, explicit_complex, homology,
                                presented_complex)
from dgoperads.perm import PI, partition
from dgoperads.presentations import presentation


def test_pi2_complex():
    cx = build_complex("pi", 2)
    assert cx.dims() == {0: 2, 1: 1}
    cells = cx.labels[0]
    col = {c: cx.matrices[0][0][j] for j, c in enumerate(cells)}
    (a, _), = partition([1], [2]).items()
    (b, _), = partition([2], [1]).items()
    assert (col[a], col[b]) == (1, -1)


def test_interval_complex():
    cx = ChainComplexData("interval", 2, -1, {0: ["p", "q"], 1: ["e"]}, {1: [[1], [-1]]})
    h = homology(cx)
    assert h.ranks == {0: 1}
    assert h.is_integers_in_degree_zero()


def test_torsion_is_reported():
    # a cell complex of the real projective plane: Z -> Z (x2) in the middle degree
    cx = ChainComplexData("rp2", 0, -1, {0: ["v"], 1: ["e"], 2: ["f"]}, {1: [[0]], 2: [[2]]})
    h = homology(cx)
    assert h.ranks == {0: 1}
    assert h.torsion == {1: [2]}
    assert not h.is_integers_in_degree_zero()


def test_square_zero_detects_error():
    cx = ChainComplexData("bad", 0, 1, {0: ["a"], 1: ["b"], 2: ["c"]}, {0: [[1]], 1: [[1]]})
    assert not cx.square_is_zero()


@pytest.mark.parametrize("name,n,dims", [
    ("pasc", 3, {0: 3, 1: 3, 2: 1}),
    ("kprime", 3, {0: 5, 1: 5, 2: 1}),
    ("trias", 3, {0: 3, 1: 3, 2: 1}),
])
def test_complex_dims(name, n, dims):
    assert build_complex(name, n).dims() == dims


@pytest.mark.parametrize("name,n", [("pi", 4), ("pasc", 5), ("kprime", 4), ("trias", 4),
                                    ("com", 4), ("as", 3)])
def test_contractible_components(name, n):
    cx = build_complex(name, n)
    h = homology(cx)
    if name == "as":
        assert h.ranks == {0: factorial(n)}
    else:
        assert h.is_integers_in_degree_zero()
    assert cx.euler_characteristic() == sum(h.ranks.values())


@pytest.mark.parametrize("name", ["coprod", "lambda"])
def test_degree_zero_homology_of_duals(name):
    for n in (2, 3):
        h = homology(build_complex(name, n))
        assert h.ranks == {0: factorial(n - 1)}
        assert not h.torsion


def test_errors():
    with pytest.raises(ValueError):
        build_complex("pi", 0)
    with pytest.raises(ValueError):
        presented_complex(presentation("zin"), 3)


def test_explicit_direction():
    assert explicit_complex(PI, 3).direction == 1
    assert build_complex("pasc", 3).direction == -1
