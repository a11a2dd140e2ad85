import pytest

from dgoperads.koszul import (DUAL_PAIRS, FROZEN_CONVENTIONS, PairingConvention, Weight2Space,
                              dual_generators, generator_identification, orthogonal_complement,
                              pairing_matrix, search_convention, verify_dual_pair,
                              verify_named_pair)
from dgoperads.presentations import (PI_GENS, TRIAS_GENS, TRIAS_RELATIONS, _data, presentation)
from dgoperads.quotient import DirectIdeal


def test_dual_generators():
    d = dual_generators(PI_GENS)
    assert d.dims == PI_GENS.dims
    dd = dual_generators(d)
    assert dd.swap_matrix() == PI_GENS.swap_matrix()
    # the sign twist makes the swap act on the degree-one generator by +1 instead of -1
    assert d.swap_matrix()[2][2] == -PI_GENS.swap_matrix()[2][2]


def test_identification_exists():
    coprod = presentation("coprod").gens
    assert generator_identification(dual_generators(PI_GENS), coprod) == [1, -1, 1]
    assert generator_identification(dual_generators(presentation("kprime").gens), TRIAS_GENS) == [1, 1, 1]


@pytest.fixture(scope="module")
def kprime_spaces():
    p, pd = presentation("kprime"), presentation("trias")
    w, wd = Weight2Space(p.free), Weight2Space(pd.free)
    ident = generator_identification(dual_generators(p.gens), pd.gens)
    return p, pd, w, wd, pairing_matrix(w, wd, ident, FROZEN_CONVENTIONS[False])


def test_weight2_block_sizes(kprime_spaces):
    _, _, w, _, _ = kprime_spaces
    assert len(w) == 18
    assert len(Weight2Space(presentation("pi").free)) == 27


def test_complement_extremes(kprime_spaces):
    p, _, w, wd, pairing = kprime_spaces
    assert len(orthogonal_complement(w, wd, [], pairing)) == len(wd)
    everything = [w.to_tree[k] for k in range(len(w))]
    assert orthogonal_complement(w, wd, everything, pairing) == []


def test_complement_dimension(kprime_spaces):
    p, _, w, wd, pairing = kprime_spaces
    rel = DirectIdeal(p).level(3).ideal_basis()
    assert len(orthogonal_complement(w, wd, rel, pairing)) == 11


def test_degenerate_pairing_rejected(kprime_spaces):
    _, _, w, wd, pairing = kprime_spaces
    broken = dict(list(pairing.items())[1:])
    with pytest.raises(ValueError):
        orthogonal_complement(w, wd, [], broken)


@pytest.mark.parametrize("pair,dims", [
    ("pi-coprod", (14, 13, 27)),
    ("pasc-lambda", (20, 7, 27)),
    ("kprime-trias", (7, 11, 18)),
])
def test_named_pairs(pair, dims):
    rep = verify_named_pair(pair)
    assert rep.passed
    assert (rep.dim_relations, rep.dim_dual_relations, rep.dim_weight2) == dims
    assert rep.defect == 0


def test_frozen_conventions_are_among_the_working_ones():
    res = search_convention([(presentation(a), presentation(b)) for a, b in DUAL_PAIRS.values()])
    for (a, _), trials in res.items():
        conv = FROZEN_CONVENTIONS[presentation(a).symmetric]
        assert (conv, True) in trials


def test_wrong_sign_breaks_duality():
    rels = dict(TRIAS_RELATIONS)
    rels["relT11"] = [(1, 0, "1×2", 1, "1×2"), (-1, 0, "1×2", 2, "1×2")]
    bad = _data("trias-bad", TRIAS_GENS, rels, False)
    rep = verify_dual_pair(presentation("kprime"), bad, FROZEN_CONVENTIONS[False])
    assert not rep.passed


def test_wrong_convention_breaks_duality():
    rep = verify_dual_pair(presentation("kprime"), presentation("trias"), PairingConvention((1, 1), False))
    assert not rep.passed
