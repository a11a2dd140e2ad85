from math import comb, factorial

import pytest

from dgoperads.classical import AS, COM
from dgoperads.exalg import LinComb
from dgoperads.operad import TAU, check_operad_axioms, tau_power
from dgoperads.pasc import (PASC, SimplicesOperad, cell, pasc_basis, pasc_d, pasc_theta,
                            simplex_face_count)
from dgoperads.perm import (PI, PermutohedraOperad, partition, permutohedron_face_count, pi_basis,
                            stirling2)


def brute_ordered_partitions(n):
    """Count ordered set partitions of {1..n} into blocks, by dimension, via block-label words."""
    from itertools import product
    counts = {}
    for word in product(range(n), repeat=n):
        used = sorted(set(word))
        if used != list(range(len(used))):
            continue
        k = n - len(used)
        counts[k] = counts.get(k, 0) + 1
    return counts


# ---------------------------------------------------------------------------
# action conventions


def test_tau_is_the_cycle():
    assert TAU == {3: 2, 2: 1, 1: 3}
    assert tau_power(3) == {1: 1, 2: 2, 3: 3}
    assert tau_power(2) == {3: 1, 1: 2, 2: 3}


def test_relabel_examples():
    assert PASC.relabel(cell((1, 2, 3), 3), tau_power(2)) == cell((1, 2, 3), 1)
    assert PI.relabel(partition([1, 2]), {1: 2, 2: 1}) == partition([2, 1])
    assert partition([2, 1]) == partition([1, 2]) * -1
    x = partition([1], [2, 3])
    assert PI.relabel(x, {1: 1, 2: 2, 3: 3}) == x


def test_relabel_is_functorial():
    x = partition([3], [1, 2]) + partition([2, 1, 3]) * 2
    f = {1: 2, 2: 3, 3: 1}
    g = {1: 3, 2: 1, 3: 2}
    fg = {a: f[g[a]] for a in g}
    assert PI.relabel(PI.relabel(x, g), f) == PI.relabel(x, fg)


def test_relabel_rejects_non_bijection():
    with pytest.raises(ValueError):
        PI.relabel(partition([1], [2]), {1: 1, 2: 1})


# ---------------------------------------------------------------------------
# permutohedra


@pytest.mark.parametrize("n", range(1, 7))
def test_pi_basis_counts(n):
    assert PI.dims(n) == brute_ordered_partitions(n)
    assert PI.dims(n) == {k: permutohedron_face_count(n, k) for k in range(n)}


def test_pi_small_bases():
    assert len(pi_basis(1)) == 1
    assert PI.dims(2) == {0: 2, 1: 1}
    assert PI.dims(3) == {0: 6, 1: 6, 2: 1}
    assert stirling2(5, 2) == 15
    with pytest.raises(ValueError):
        pi_basis(0)


def test_pi_differential_examples():
    assert PI.differential(partition([1], [2])) == partition([1, 2])
    assert not PI.differential(partition([1, 2]))
    assert PI.differential(partition([1], [2], [3])) == partition([1, 2], [3]) + partition([1], [2, 3])
    assert not PI.differential(PI.unit(1))


def test_pi_compose_examples():
    assert (PI.compose(partition([1], [2]), 1, partition([3], [4]))
            == partition([3], [2], [4]) + partition([3], [4], [2]))
    assert PI.compose(partition([1, 2]), 2, partition([3, 4])) == partition([1, 3, 4])
    assert PI.compose(PI.unit(1), 1, partition([2, 3])) == partition([2, 3])
    assert PI.compose(partition([2, 3]), 3, PI.unit(3)) == partition([2, 3])


def test_pi_rel2_chain():
    a = PI.compose_std(partition([1, 2]), 2, partition([1], [2]))
    b = PI.compose_std(partition([1], [2]), 1, partition([1, 2]))
    c = PI.relabel(PI.compose_std(partition([1, 2]), 1, partition([2], [1])), TAU)
    assert a == b == c


def test_compose_errors():
    with pytest.raises(ValueError):
        PI.compose(partition([1], [2]), 5, partition([3]))
    with pytest.raises(ValueError):
        PI.compose(partition([1], [2]), 1, partition([2], [3]))


# ---------------------------------------------------------------------------
# simplices


def test_theta_examples():
    assert not pasc_theta(1, cell((1,), 1))
    assert pasc_theta(2, cell((1, 2), 1, 2)) == cell((1, 2), 1) * -1
    assert pasc_theta(1, cell((1, 2, 3), 1, 2, 3)) == cell((1, 2, 3), 2, 3)


def test_pasc_differential_normalization():
    assert pasc_d(cell((1, 2), 1, 2)) == cell((1, 2), 1) - cell((1, 2), 2)
    assert not pasc_d(cell((1, 2), 1))


@pytest.mark.parametrize("n", range(1, 8))
def test_pasc_counts_and_square(n):
    assert PASC.dims(n) == {k: comb(n, k + 1) for k in range(n)}
    assert PASC.dims(n) == {k: simplex_face_count(n, k) for k in range(n)}
    for c in pasc_basis(n):
        assert not pasc_d(pasc_d(LinComb.basis(c)))


def test_pasc_compose_cases():
    assert PASC.compose_std(cell((1, 2), 1), 1, cell((1, 2), 1)) == cell((1, 2, 3), 1)
    assert PASC.compose_std(cell((1, 2), 1), 2, cell((1, 2), 1)) == cell((1, 2, 3), 1)
    assert not PASC.compose_std(cell((1, 2), 1), 2, cell((1, 2), 1, 2))


def test_pasc_degree_zero_is_perm():
    # closed under composition, n cells in arity n, and the Perm identities hold
    for n in range(1, 6):
        assert PASC.dims(n)[0] == n
    e1, e2 = cell((1, 2), 1), cell((1, 2), 2)
    left = PASC.compose_std(e1, 1, e1)
    assert left == PASC.compose_std(e1, 2, e1)
    assert left == PASC.relabel(PASC.compose_std(e1, 2, e2), {1: 1, 2: 3, 3: 2})
    for x in pasc_basis(2):
        for y in pasc_basis(2):
            if x.dim == y.dim == 0:
                for i in (1, 2):
                    out = PASC.compose_std(LinComb.basis(x), i, LinComb.basis(y))
                    assert all(c.dim == 0 for c in out)


# ---------------------------------------------------------------------------
# axiom harness


def test_pi_axioms_small():
    rep = check_operad_axioms(PI, 4)
    assert rep.passed, rep.witnesses
    assert all(rep.checked[a] > 0 for a in rep.checked)


def test_pasc_axioms_small():
    rep = check_operad_axioms(PASC, 5)
    assert rep.passed, rep.witnesses


@pytest.mark.parametrize("op,N", [(COM, 5), (AS, 4)])
def test_classical_axioms(op, N):
    assert check_operad_axioms(op, N).passed


def test_classical_dimensions():
    for n in range(1, 6):
        assert COM.dims(n) == {0: 1}
        assert AS.dims(n) == {0: factorial(n)}


class SignCorruptedPi(PermutohedraOperad):
    name = "pi-corrupted"

    def compose_cells(self, a, i, b):
        out = super().compose_cells(a, i, b)
        return out * -1 if a.dim == 1 and b.dim == 0 else out


class ShiftedPasc(SimplicesOperad):
    name = "pasc-corrupted"

    def d_cell(self, a):
        return super().d_cell(a) * (-1 if a.dim == 2 else 1)


def test_harness_catches_sign_corruption():
    rep = check_operad_axioms(SignCorruptedPi(), 3)
    assert not rep.passed
    assert not rep.status["chain_map"]
    assert "chain_map" in rep.witnesses


def test_harness_catches_bad_differential():
    rep = check_operad_axioms(ShiftedPasc(), 4)
    assert not rep.passed
    assert not rep.status["chain_map"]
