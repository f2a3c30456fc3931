# -*- coding: utf-8 -*-
"""
Text formats of permutations, Laguerre histories and polynomials.

* permutation: one line of space-separated images, "4 9 2 11 5"
* history: a line "n", then n lines "i KIND xi eta" where "-" is an
  absent coordinate, e.g. "5 LC - 3"
* polynomial: one "coeff * x^a y^b" line per term, graded-lex order
"""
import re
import sys

from .utils.customlogger import logger
from .datamodel.history import ABSENT, LaguerreHistory, StepKinds
from .datamodel.multipoly import VARIABLES, MultiPoly
from .datamodel.permutation import Permutation

# Serialized form of an absent label coordinate
ABSENT_TOKEN = '-'

_POWER = re.compile(r'^([a-z][a-z0-9]*)(?:\^(\d+))?$')


class ParseError(ValueError):
    """ Raised on malformed text. position is the 1-based token number for
    permutations and the 1-based line number otherwise. """
    def __init__(self, message, position):
        super().__init__(f'{message} (at {position})')
        self.position = position


def _parse_int(token, position):
    try:
        return int(token)
    except ValueError:
        raise ParseError(f'Expected an integer, got "{token}"', position)


def format_permutation(p):
    return str(p)


def parse_permutation(text):
    """ Read a permutation. Empty text is the permutation of size 0. """
    tokens = text.split()
    images = [_parse_int(token, position)
              for position, token in enumerate(tokens, start=1)]

    # Report the first repeated or out-of-range image
    seen = set()
    for position, value in enumerate(images, start=1):
        if not 1 <= value <= len(images) or value in seen:
            raise ParseError(
                f'Image {value} is not in 1..{len(images)} or is repeated', position)
        seen.add(value)

    return Permutation(images)


def _format_coord(value):
    return ABSENT_TOKEN if value is ABSENT else str(value)


def format_history(h):
    lines = [str(len(h))]
    for i, (kind, label) in enumerate(h, start=1):
        lines.append(f'{i} {kind} {_format_coord(label.xi)} {_format_coord(label.eta)}')
    return '\n'.join(lines) + '\n'


def parse_history(text):
    """
    Read a history. Only the syntax is checked here; label ranges and
    heights are left to validate().
    """
    lines = [line.strip() for line in text.splitlines()]
    numbered = [(number, line) for number, line in enumerate(lines, start=1) if line]
    if not numbered:
        raise ParseError('Empty history text, expected the length n', 1)

    number, first = numbered[0]
    n = _parse_int(first, number)
    if n < 0:
        raise ParseError(f'Negative history length {n}', number)
    if len(numbered) - 1 != n:
        raise ParseError(f'Expected {n} step lines, got {len(numbered) - 1}', number)

    triples = []
    for i, (number, line) in enumerate(numbered[1:], start=1):
        fields = line.split()
        if len(fields) != 4:
            raise ParseError(f'Expected "i KIND xi eta", got "{line}"', number)

        index, kind, xi, eta = fields
        if _parse_int(index, number) != i:
            raise ParseError(f'Expected step number {i}, got {index}', number)
        if kind not in StepKinds.to_list():
            raise ParseError(f'Unknown step kind "{kind}"', number)

        def _coord(token):
            return ABSENT if token == ABSENT_TOKEN else _parse_int(token, number)

        triples.append((kind, _coord(xi), _coord(eta)))

    return LaguerreHistory.from_pairs(triples)


def format_polynomial(poly):
    return '\n'.join(poly.to_lines()) + '\n'


def parse_polynomial(text):
    """ Read the output of format_polynomial. A bare variable name stands
    for its first power. """
    terms = {}
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue

        coeff_part, _, powers_part = line.partition('*')
        coeff = _parse_int(coeff_part.strip(), number)

        exponents = [0] * len(VARIABLES)
        for token in powers_part.split():
            match = _POWER.match(token)
            if not match or match.group(1) not in VARIABLES:
                raise ParseError(f'Invalid power "{token}"', number)
            exponents[VARIABLES.index(match.group(1))] += int(match.group(2) or 1)

        if '*' in line and not powers_part.split():
            raise ParseError(f'Missing powers after "*" in "{line}"', number)

        key = tuple(exponents)
        terms[key] = terms.get(key, 0) + coeff

    return MultiPoly(terms)


def read_text(source):
    """ Read a whole file, or standard input when source is '-'. """
    if source == '-':
        return sys.stdin.read()
    try:
        with open(source) as f:
            return f.read()
    except OSError as e:
        logger.error(f'Cannot read {source}: {e}')
        raise e
