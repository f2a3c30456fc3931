# -*- coding: utf-8 -*-
import pytest

from laguerrecodec.core.codec import encode
from laguerrecodec.core.contfrac import brute_force_jacobi
from laguerrecodec.core.datamodel.multipoly import MultiPoly
from laguerrecodec.core.datamodel.permutation import Permutation
from laguerrecodec.core.textio import (
    ParseError, format_history, format_permutation, format_polynomial,
    parse_history, parse_permutation, parse_polynomial)
from running_example_data import SIGMA, sigma_history

SIGMA_TEXT = '4 9 2 11 5 10 1 3 6 8 7 12 16 17 13 14 15'


def test_permutation_text():
    assert parse_permutation(SIGMA_TEXT) == Permutation(SIGMA)
    assert format_permutation(Permutation(SIGMA)) == SIGMA_TEXT
    assert parse_permutation('  ') == Permutation([])


@pytest.mark.parametrize('text, position', [
    ('1 2 x', 3),
    ('1 3', 2),
    ('2 2 1', 2),
])
def test_permutation_parse_errors(text, position):
    with pytest.raises(ParseError) as e:
        parse_permutation(text)
    assert e.value.position == position


def test_history_text():
    text = format_history(sigma_history())
    lines = text.splitlines()
    assert lines[0] == '17'
    assert lines[1] == '1 U - -'
    assert lines[5] == '5 LC - 3'
    assert lines[10] == '10 D 2 2'
    assert parse_history(text) == sigma_history()
    assert format_history(parse_history(text)) == text


def test_empty_history_text():
    assert parse_history('0\n') == encode(Permutation([]))
    assert format_history(encode(Permutation([]))) == '0\n'


@pytest.mark.parametrize('text, position', [
    ('', 1),
    ('two\n', 1),
    ('2\n1 U - -\n', 1),
    ('1\n1 LC -\n', 2),
    ('1\n2 LC - 1\n', 2),
    ('1\n1 LX - 1\n', 2),
    ('2\n1 U - -\n2 D a 1\n', 3),
])
def test_history_parse_errors(text, position):
    with pytest.raises(ParseError) as e:
        parse_history(text)
    assert e.value.position == position


def test_history_parse_leaves_ranges_to_validation():
    h = parse_history('1\n1 D 1 1\n')
    assert h.step(1) == 'D'


def test_polynomial_text():
    poly = brute_force_jacobi(3)
    text = format_polynomial(poly)
    assert text.splitlines()[0] == '1 * x^3 y^3 w0^3'
    assert parse_polynomial(text) == poly
    assert parse_polynomial('0\n') == MultiPoly()
    assert parse_polynomial('2 * x y^2\n-1') == MultiPoly({(1, 2, 0, 0, 0, 0): 2,
                                                          (0, 0, 0, 0, 0, 0): -1})


@pytest.mark.parametrize('text', ['2 * t^2', '2 *', 'x^2', '2 * x^-1'])
def test_polynomial_parse_errors(text):
    with pytest.raises(ParseError):
        parse_polynomial(text)
