# -*- coding: utf-8 -*-
import math
import pytest

from laguerrecodec.core.datamodel.history import (
    ABSENT, InvalidHistoryError, Label, LaguerreHistory, StepKinds, check_valid,
    heights, histories, history_profile, motzkin_words, step_word, validate)
from running_example_data import SIGMA_HEIGHTS, sigma_history


def test_running_example_is_valid():
    h = sigma_history()
    assert validate(h) is None
    assert check_valid(h) is h
    assert heights(h) == SIGMA_HEIGHTS
    assert step_word(h) == 'U U LB LA LC U LB LB D D D LC U U LB D D'


def test_heights_small():
    assert heights(LaguerreHistory()) == (0,)
    h = LaguerreHistory.from_pairs([('U', None, None), ('U', None, None),
                                    ('D', 1, 1), ('D', 1, 1)])
    assert heights(h) == (0, 1, 2, 1, 0)


def test_negative_height_is_reported():
    violation = validate(LaguerreHistory(['D'], [Label(1, 1)]))
    assert violation.index == 1
    assert violation.constraint == 'height'


def test_label_out_of_range_is_reported():
    violation = validate(LaguerreHistory(['U', 'D'], [Label(), Label(2, 1)]))
    assert violation.index == 2
    assert violation.constraint == 'label'


@pytest.mark.parametrize('steps, labels, constraint', [
    (['U'], [Label()], 'final-height'),
    (['X'], [Label()], 'kind'),
    (['U', 'LA', 'D'], [Label(), Label(1, 1), Label(1, 1)], 'label'),
    (['U', 'LB', 'D'], [Label(), Label(ABSENT, 0), Label(1, 1)], 'label'),
    (['LC'], [Label(ABSENT, 2)], 'label'),
    (['LC'], [Label(1, 1)], 'label'),
    (['LC'], [Label(ABSENT, 1.0)], 'label'),
    (['LC'], [Label(ABSENT, True)], 'label'),
    (['U', 'D'], [Label(ABSENT, 1), Label(1, 1)], 'label'),
])
def test_violations(steps, labels, constraint):
    h = LaguerreHistory(steps, labels)
    assert validate(h).constraint == constraint
    with pytest.raises(InvalidHistoryError) as e:
        check_valid(h)
    assert e.value.violation.constraint == constraint


def test_shape_mismatch():
    with pytest.raises(ValueError):
        LaguerreHistory(['U', 'D'], [Label()])


def test_text_form_uses_delta():
    h = LaguerreHistory.from_pairs([('U', None, None), ('D', 1, 1), ('LC', None, 1)])
    assert str(h) == 'U(Δ,Δ) D(1,1) LC(Δ,1)'


def test_history_profile_running_example():
    prof = history_profile(sigma_history())
    assert prof.arecp == (7, 8, 9, 11, 12, 15, 16, 17)
    assert prof.erecl == (4, 9, 11, 16, 17)
    assert prof.erecp == (1, 2, 4, 13, 14)
    assert prof.excp == (1, 2, 4, 6, 13, 14)
    assert prof.excl == (4, 9, 10, 11, 16, 17)
    assert prof.rar == (12,)
    assert prof.cyc == (5, 10, 11, 12, 17)


def test_history_profile_small():
    prof = history_profile(LaguerreHistory(['LC'], [Label(ABSENT, 1)]))
    assert prof.asdict() == {'arecp': (1,), 'erecl': (), 'erecp': (), 'excp': (),
                             'excl': (), 'rar': (1,), 'cyc': (1,)}

    prof = history_profile(LaguerreHistory(['U', 'D'], [Label(), Label(1, 1)]))
    assert prof.asdict() == {'arecp': (2,), 'erecl': (2,), 'erecp': (1,), 'excp': (1,),
                             'excl': (2,), 'rar': (), 'cyc': (2,)}


def test_history_profile_rejects_invalid():
    with pytest.raises(InvalidHistoryError):
        history_profile(LaguerreHistory(['D'], [Label(1, 1)]))


@pytest.mark.parametrize('n, expected', [(0, 1), (1, 3), (2, 10), (3, 36)])
def test_motzkin_word_counts(n, expected):
    # Words with three kinds of level steps that return to height 0
    words = list(motzkin_words(n))
    assert len(words) == expected
    assert len(set(words)) == expected


@pytest.mark.parametrize('n', range(7))
def test_histories_count_is_factorial(n):
    _histories = list(histories(n))
    assert len(_histories) == math.factorial(n)
    assert len(set(_histories)) == math.factorial(n)
    assert all(validate(h) is None for h in _histories)


def test_step_kinds():
    assert StepKinds.to_list() == ['U', 'D', 'LA', 'LB', 'LC']
    assert [StepKinds.height_change(k) for k in StepKinds.to_list()] == [1, -1, 0, 0, 0]
