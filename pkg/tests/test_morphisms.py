import pytest

from dgoperads.morphisms import (MORPHISMS, ROWS, SQUARES, MorphismSpec, catalan, check_degree_zero_identifications,
                                 check_row_exactness, check_square, check_well_defined, in_ideal,
                                 morphism)
from dgoperads.presentations import presentation


@pytest.mark.parametrize("name", sorted(MORPHISMS))
def test_morphism_well_defined(name):
    rep = check_well_defined(name)
    assert rep.passed, rep.as_dict()


def test_arrow_count():
    assert len(MORPHISMS) == 22
    assert len(SQUARES) == 8


@pytest.mark.parametrize("index", range(len(SQUARES)))
def test_square_commutes(index):
    rep = check_square(*SQUARES[index])
    assert rep.passed, rep.as_dict()


def test_images_of_generators():
    phi = morphism("Lambda->K")
    fr = presentation("lambda").free
    k = presentation("k").free
    assert phi(fr.generator("1↶2")) == k.generator("1<2") - k.generator("2>1")
    assert phi(fr.generator("[1,2]")) == k.generator("1|2") + k.generator("2|1")


def test_flipped_sign_is_rejected():
    bad = MorphismSpec("Lambda->K flipped", "lambda", "k", {
        "1↶2": {"1<2": 1, "2>1": 1}, "[1,2]": {"1|2": 1, "2|1": 1}})
    assert not check_well_defined(bad).passed


def test_swapped_images_are_rejected():
    bad = MorphismSpec("K->Pi swapped", "k", "pi", {
        "1<2": {"2⊗1": 1}, "1>2": {"1⊗2": 1}, "1|2": {"1∧2": 1}})
    assert not check_well_defined(bad).passed


def test_non_commuting_square_is_detected(monkeypatch):
    import dgoperads.morphisms as mm
    swapped = mm.Morphism(MorphismSpec("Dend->Zin", "dend", "zin", {
        "1<2": {"2⊗1": 1}, "1>2": {"1⊗2": 1}}))
    real = mm.morphism
    monkeypatch.setattr(mm, "morphism", lambda n: swapped if n == "Dend->Zin" else real(n))
    assert not check_square(*SQUARES[0]).passed


def test_square_endpoints_must_match():
    with pytest.raises(ValueError):
        check_square("mismatch", ("K->Pi", "Pi->Zin"), ("As->K", "K->Dend"))


def test_ideal_membership():
    q = presentation("pi")
    for r in q.relations:
        assert in_ideal("pi", r)
    assert not in_ideal("pi", q.free.generator("1⊗2"))


def test_catalan():
    assert [catalan(n) for n in range(1, 7)] == [1, 2, 5, 14, 42, 132]


def test_degree_zero_identifications():
    reps = check_degree_zero_identifications(4)
    assert all(r.passed for r in reps), [r.as_dict() for r in reps]
    assert {r.classical for r in reps} == {"zin", "perm", "dend-ns", "dias-ns", "leib"}


@pytest.mark.parametrize("row", sorted(ROWS))
def test_row_exactness(row):
    rep = check_row_exactness(row, 3)
    assert rep.passed, rep.as_dict()
