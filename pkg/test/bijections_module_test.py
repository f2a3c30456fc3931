# -*- coding: utf-8 -*-
import pytest
from hypothesis import given, strategies as st

from laguerrecodec.core.bijections import phi, phi_cap, rho1, rho1_inv, rho2
from laguerrecodec.core.codec import encode
from laguerrecodec.core.datamodel.history import (
    ABSENT, InvalidHistoryError, Label, LaguerreHistory, StepKinds, histories, validate)
from laguerrecodec.core.datamodel.permutation import Permutation, permutations, profile
from running_example_data import (OMEGA, SIGMA, TAU, rho1_history, rho2_history,
                                  sigma_history)

FIXED_POINT = LaguerreHistory(['LC'], [Label(ABSENT, 1)])
TRANSPOSITION = LaguerreHistory(['U', 'D'], [Label(), Label(1, 1)])


def test_rho1_running_example():
    assert rho1(sigma_history()) == rho1_history()
    assert rho1_inv(rho1_history()) == sigma_history()


def test_rho2_running_example():
    assert rho2(sigma_history()) == rho2_history()
    assert rho2(rho2_history()) == sigma_history()


def test_small_histories_are_fixed():
    for operation in (rho1, rho1_inv, rho2):
        assert operation(FIXED_POINT) == FIXED_POINT
        assert operation(TRANSPOSITION) == TRANSPOSITION
        assert operation(LaguerreHistory()) == LaguerreHistory()


def test_invalid_input_is_rejected():
    bad = LaguerreHistory(['D'], [Label(1, 1)])
    for operation in (rho1, rho1_inv, rho2):
        with pytest.raises(InvalidHistoryError):
            operation(bad)


def test_phi_running_example():
    omega = phi(Permutation(SIGMA))
    assert omega == Permutation(OMEGA)

    before, after = profile(Permutation(SIGMA)), profile(omega)
    assert after.cyc == before.arecp == (7, 8, 9, 11, 12, 15, 16, 17)
    assert after.erec() == before.erec()
    assert after.exc() == before.exc()
    assert after.rar == before.rar == (12,)


def test_phi_cap_running_example():
    tau = phi_cap(Permutation(SIGMA))
    assert tau == Permutation(TAU)
    assert phi_cap(tau) == Permutation(SIGMA)

    before, after = profile(Permutation(SIGMA)), profile(tau)
    assert after.cyc == before.arecp
    assert after.arecp == before.cyc == (5, 10, 11, 12, 17)
    assert after.exc() == before.exc()
    assert after.rar == before.rar


def test_small_permutations():
    for operation in (phi, phi_cap):
        assert operation(Permutation.identity(5)) == Permutation.identity(5)
        assert operation(Permutation([2, 1])) == Permutation([2, 1])


def _level_positions(h):
    return [i for i, kind in enumerate(h.get_steps(), start=1)
            if kind in (StepKinds.LB, StepKinds.LC)]


def _check_history(h):
    first, second = rho1(h), rho2(h)
    assert validate(first) is None and validate(second) is None
    assert rho1_inv(first) == h
    assert rho1(rho1_inv(h)) == h
    assert rho2(second) == h

    # U, D and LA steps stay in place; LB and LC may only trade places
    for image in (first, second):
        for kind, new_kind in zip(h.get_steps(), image.get_steps()):
            if kind in (StepKinds.U, StepKinds.D, StepKinds.LA):
                assert new_kind == kind
        assert _level_positions(image) == _level_positions(h)


@pytest.mark.parametrize('n', range(7))
def test_rho_on_all_histories(n):
    for h in histories(n):
        _check_history(h)


@pytest.mark.slow
def test_rho_on_all_histories_n7():
    for h in histories(7):
        _check_history(h)


def _check_theorems(p):
    before = profile(p)

    first = profile(phi(p))
    assert (first.cyc, first.erec(), first.exc(), first.rar) == \
        (before.arecp, before.erec(), before.exc(), before.rar)

    image = phi_cap(p)
    second = profile(image)
    assert (second.cyc, second.arecp, second.exc(), second.rar) == \
        (before.arecp, before.cyc, before.exc(), before.rar)
    assert phi_cap(image) == p


@pytest.mark.parametrize('n', range(7))
def test_theorems_on_all_permutations(n):
    for p in permutations(n):
        _check_theorems(p)


@pytest.mark.parametrize('n', range(7))
def test_phi_is_a_bijection(n):
    images = {phi(p) for p in permutations(n)}
    assert images == set(permutations(n))


@pytest.mark.slow
def test_theorems_n7():
    for p in permutations(7):
        _check_theorems(p)


@given(st.integers(7, 11).flatmap(lambda n: st.permutations(list(range(1, n + 1)))))
def test_theorems_larger(images):
    _check_theorems(Permutation(images))
    h = encode(Permutation(images))
    assert rho1_inv(rho1(h)) == h
