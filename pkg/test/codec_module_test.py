# -*- coding: utf-8 -*-
import pytest
from hypothesis import given, strategies as st

from laguerrecodec.core.codec import decode, decode_graph, encode
from laguerrecodec.core.datamodel.history import (
    ABSENT, InvalidHistoryError, Label, LaguerreHistory, StepKinds, heights,
    histories, history_profile, validate)
from laguerrecodec.core.datamodel.permutation import (
    Permutation, excedance_height, permutations, profile)
from running_example_data import (OMEGA, SIGMA, SIGMA_LABELS, SIGMA_STEPS,
                                  rho1_history, sigma_history)


def test_encode_running_example():
    h = encode(Permutation(SIGMA))
    assert list(h.get_steps()) == SIGMA_STEPS
    assert list(h.get_labels()) == [Label(*label) for label in SIGMA_LABELS]


def test_encode_small():
    h = encode(Permutation.identity(5))
    assert set(h.get_steps()) == {StepKinds.LC}
    assert all(label == Label(ABSENT, 1) for label in h.get_labels())

    assert encode(Permutation([2, 1])) == LaguerreHistory(['U', 'D'], [Label(), Label(1, 1)])
    assert encode(Permutation([])) == LaguerreHistory()


def test_decode_running_example():
    assert decode(sigma_history()) == Permutation(SIGMA)
    assert decode(rho1_history()) == Permutation(OMEGA)
    assert decode(LaguerreHistory(['LC'] * 4, [Label(ABSENT, 1)] * 4)) == Permutation.identity(4)


def test_decode_reports_violation():
    with pytest.raises(InvalidHistoryError) as e:
        decode(LaguerreHistory(['U', 'D'], [Label(), Label(2, 1)]))
    assert e.value.violation.index == 2


def test_edge_order_of_down_steps():
    h = sigma_history()
    assert decode_graph(h, top_edge_first=True) == decode_graph(h, top_edge_first=False)


@pytest.mark.parametrize('n', range(7))
def test_roundtrip(n):
    for p in permutations(n):
        assert decode(encode(p)) == p
    for h in histories(n):
        assert encode(decode(h)) == h


@pytest.mark.slow
def test_roundtrip_n7():
    for p in permutations(7):
        assert decode(encode(p)) == p
    for h in histories(7):
        assert encode(decode(h)) == h


def _check_transport(p):
    h = encode(p)
    assert validate(h) is None

    prof = profile(p)
    assert tuple(history_profile(h)) == (prof.arecp, prof.erecl, prof.erecp,
                                         prof.excp, prof.excl, prof.rar, prof.cyc)
    assert heights(h) == tuple(excedance_height(p, i) for i in range(len(p) + 1))


@pytest.mark.parametrize('n', range(7))
def test_transport(n):
    for p in permutations(n):
        _check_transport(p)


@pytest.mark.slow
def test_transport_n7():
    for p in permutations(7):
        _check_transport(p)


@given(st.integers(7, 12).flatmap(lambda n: st.permutations(list(range(1, n + 1)))))
def test_roundtrip_larger(images):
    p = Permutation(images)
    assert decode(encode(p)) == p
    _check_transport(p)
