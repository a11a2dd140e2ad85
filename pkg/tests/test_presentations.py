from functools import lru_cache
from math import comb, factorial

import pytest

from dgoperads.exalg import LinComb
from dgoperads.presentations import (LAMBDA_GENS, LAMBDA_RELATIONS_PRINTED, _data, presentation)
from dgoperads.quotient import CherryTower, DirectIdeal
from dgoperads.tables import presented_dims
from dgoperads.verification import (presentation_check, quotient_differential_check,
                                    relations_in_model, standard_images)


@lru_cache(maxsize=None)
def planar_trees(leaves):
    """Planar trees with ``leaves`` leaves, all vertices of arity >= 2: {internal vertices: count}."""
    if leaves == 1:
        return {0: 1}
    out = {}

    def forests(total, parts):
        # ordered sequences of `parts` trees with `total` leaves in all
        if parts == 0:
            return {0: 1} if total == 0 else {}
        acc = {}
        for first in range(1, total - parts + 2):
            for a, x in planar_trees(first).items():
                for b, y in forests(total - first, parts - 1).items():
                    acc[a + b] = acc.get(a + b, 0) + x * y
        return acc

    for arity in range(2, leaves + 1):
        for v, c in forests(leaves, arity).items():
            out[v + 1] = out.get(v + 1, 0) + c
    return out


def associahedron_faces(n):
    """Faces of the cell for arity n: planar trees with n+1 leaves, dim = n - internal vertices."""
    return {n - v: c for v, c in planar_trees(n + 1).items()}


def test_planar_oracle_values():
    assert associahedron_faces(3) == {0: 5, 1: 5, 2: 1}
    assert associahedron_faces(4) == {0: 14, 1: 21, 2: 9, 3: 1}


def test_free_basis_sizes():
    k = presentation("kprime").free
    assert {d: len(v) for d, v in k.basis_by_degree(3).items()} == {0: 8, 1: 8, 2: 2}
    assert len(presentation("pi").free.basis(3)) == 27
    assert len(presentation("pi").free.basis(1)) == 1


@pytest.mark.parametrize("name,ranks", [
    ("kprime", {0: 3, 1: 3, 2: 1}),
    ("pi", {0: 6, 1: 6, 2: 2}),
    ("pasc", {0: 9, 1: 9, 2: 2}),
])
def test_relation_ranks(name, ranks):
    assert DirectIdeal(presentation(name)).level(3).rank_by_degree() == ranks


@pytest.mark.parametrize("name,n,dims", [
    ("kprime", 3, {0: 5, 1: 5, 2: 1}),
    ("lambda", 3, {0: 9, 1: 9, 2: 2}),
    ("coprod", 3, {0: 6, 1: 6, 2: 2}),
    ("lambda", 4, {0: 64, 1: 96, 2: 44, 3: 6}),
])
def test_quotient_dims(name, n, dims):
    assert presented_dims(presentation(name), n) == dims


@pytest.mark.parametrize("n", [3, 4, 5])
def test_kprime_matches_planar_trees(n):
    assert presented_dims(presentation("kprime"), n) == associahedron_faces(n)


@pytest.mark.parametrize("n", [3, 4])
def test_trias_and_coprod_dims(n):
    assert presented_dims(presentation("trias"), n) == {k: comb(n, k + 1) for k in range(n)}
    assert (presented_dims(presentation("coprod"), n)
            == {k: comb(n, k + 1) * factorial(n - 1) for k in range(n)})


@pytest.mark.parametrize("name", ["pi", "pasc", "kprime", "trias", "coprod", "lambda", "zin", "dias-ns"])
def test_engines_agree(name):
    q = presentation(name)
    tower = CherryTower(q)
    for n in (3, 4):
        assert DirectIdeal(q).level(n).quotient_by_degree() == {
            k: v for k, v in tower.quotient_dims(n).items()}


def test_printed_lambda_reading_has_wrong_dimensions():
    q = _data("lambda-printed", LAMBDA_GENS, LAMBDA_RELATIONS_PRINTED, True)
    assert DirectIdeal(q).level(3).quotient_by_degree() != {0: 9, 1: 9, 2: 2}


def test_relations_are_homogeneous_and_saturated():
    for name in ("pi", "pasc", "kprime", "trias", "coprod", "lambda"):
        q = presentation(name)
        fr = q.free
        for r in q.relations:
            assert len({fr.degree(t) for t in r}) == 1
        sat = q.saturated_relations()
        if fr.symmetric:
            assert len(sat) >= len(q.relations)


@pytest.mark.parametrize("name,N", [("pi", 4), ("pasc", 5), ("trias", 5)])
def test_presentation_against_model(name, N):
    model, imgs = standard_images(name)
    rep = presentation_check(presentation(name), model, imgs, N)
    assert rep.passed, rep.as_dict()


@pytest.mark.parametrize("name", ["pi", "pasc", "trias"])
def test_relations_vanish_in_model(name):
    model, imgs = standard_images(name)
    rels = relations_in_model(presentation(name), model, imgs)
    assert rels and all(rels.values())


def test_relations_counts():
    assert len(presentation("pi").relation_names) == 4  # rel2 in two halves
    assert len(presentation("pasc").relation_names) == 7
    assert len(presentation("trias").relation_names) == 11


@pytest.mark.parametrize("name", ["pi", "pasc", "kprime", "trias", "coprod", "lambda"])
def test_differential_descends(name):
    rep = quotient_differential_check(presentation(name), 3)
    assert rep.passed


def test_generator_differentials():
    fr = presentation("trias").free
    q = presentation("trias")
    x = fr.derivation(fr.generator("1×2"), q.d_gen)
    assert x == fr.generator("1⊣2") - fr.generator("1⊢2")
    q = presentation("coprod")
    fr = q.free
    assert fr.derivation(fr.generator("[1,2]"), q.d_gen) == fr.generator("⟨1,2⟩") + fr.generator("⟨2,1⟩")


@pytest.mark.parametrize("name", ["pi", "pasc", "kprime"])
def test_integral_quotients_torsion_free(name):
    for n in (3, 4):
        lev = DirectIdeal(presentation(name)).level(n)
        assert lev.torsion_free
        basis = lev.quotient_basis()
        assert len(basis) == sum(lev.quotient_by_degree().values())


def test_membership():
    q = presentation("pi")
    lev = DirectIdeal(q).level(3)
    for r in q.relations:
        assert lev.contains(r)
    for t in lev.quotient_basis():
        assert not lev.contains(LinComb.basis(t))
