# -*- coding: utf-8 -*-
"""
Sparse multivariate polynomials with integer coefficients over the fixed
variables x, y, u, v, z, w0.

Terms are kept in a dict from exponent vectors (one entry per variable in
VARIABLES order) to nonzero integer coefficients.
"""
from typing import Dict, Tuple
from ..utils.sorting import graded_lex_key

# Global variable order of every polynomial
VARIABLES = ('x', 'y', 'u', 'v', 'z', 'w0')

_ZERO_EXPONENTS = (0,) * len(VARIABLES)


def _position(name):
    try:
        return VARIABLES.index(name)
    except ValueError:
        raise ValueError(
            f'Unknown variable "{name}", expected one of {", ".join(VARIABLES)}')


class MultiPoly:
    """ An exact polynomial in the variables of VARIABLES. """
    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        self._terms: Dict[Tuple[int, ...], int] = {}

        for exponents, coeff in dict(terms or {}).items():
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) != len(VARIABLES):
                raise ValueError(
                    f'Exponent vector {exponents} must have {len(VARIABLES)} entries')
            if any(e < 0 for e in exponents):
                raise ValueError(f'Negative exponent in {exponents}')
            if coeff:
                self._terms[exponents] = int(coeff)

    @staticmethod
    def constant(c):
        return MultiPoly({_ZERO_EXPONENTS: c})

    @staticmethod
    def variable(name):
        exponents = [0] * len(VARIABLES)
        exponents[_position(name)] = 1
        return MultiPoly({tuple(exponents): 1})

    @staticmethod
    def monomial(coeff=1, **powers):
        """ coeff * prod(name^power), e.g. monomial(2, x=1, w0=3). """
        exponents = [0] * len(VARIABLES)
        for name, power in powers.items():
            exponents[_position(name)] = power
        return MultiPoly({tuple(exponents): coeff})

    def get_terms(self):
        """ (exponents, coeff) pairs in graded-lexicographic order. """
        return sorted(self._terms.items(), key=lambda item: graded_lex_key(item[0]))

    def coefficient(self, **powers):
        exponents = [0] * len(VARIABLES)
        for name, power in powers.items():
            exponents[_position(name)] = power
        return self._terms.get(tuple(exponents), 0)

    def is_zero(self):
        return not self._terms

    def degree(self):
        """ Total degree; -1 for the zero polynomial. """
        return max((sum(e) for e in self._terms), default=-1)

    def evaluate(self, **values):
        """ Value at a point. Every variable occurring in a term must be given. """
        missing = [name for pos, name in enumerate(VARIABLES)
                   if name not in values and any(e[pos] for e in self._terms)]
        if missing:
            raise ValueError(f'No value given for {", ".join(missing)}')

        total = 0
        for exponents, coeff in self._terms.items():
            value = coeff
            for name, e in zip(VARIABLES, exponents):
                if e:
                    value *= values[name] ** e
            total += value
        return total

    def specialize(self, **values):
        """ Substitute integers for some variables, keeping the others. """
        positions = {_position(name): value for name, value in values.items()}

        result = {}
        for exponents, coeff in self._terms.items():
            _exponents = list(exponents)
            for pos, value in positions.items():
                coeff *= value ** _exponents[pos]
                _exponents[pos] = 0
            key = tuple(_exponents)
            result[key] = result.get(key, 0) + coeff
        return MultiPoly(result)

    def swap(self, a, b):
        """ The polynomial with the variables a and b exchanged. """
        i, j = _position(a), _position(b)

        result = {}
        for exponents, coeff in self._terms.items():
            _exponents = list(exponents)
            _exponents[i], _exponents[j] = _exponents[j], _exponents[i]
            result[tuple(_exponents)] = coeff
        return MultiPoly(result)

    def to_lines(self):
        """ One 'coeff * x^a y^b' line per term, graded-lex order, zero
        exponents omitted. The zero polynomial is the single line '0'. """
        if not self._terms:
            return ['0']

        lines = []
        for exponents, coeff in self.get_terms():
            powers = ' '.join(f'{name}^{e}' for name, e in zip(VARIABLES, exponents) if e)
            lines.append(f'{coeff} * {powers}' if powers else str(coeff))
        return lines

    @staticmethod
    def _coerce(other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return MultiPoly.constant(other)
        return None

    def __add__(self, other):
        other = MultiPoly._coerce(other)
        if other is None:
            return NotImplemented

        result = dict(self._terms)
        for exponents, coeff in other._terms.items():
            result[exponents] = result.get(exponents, 0) + coeff
        return MultiPoly(result)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = MultiPoly._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = MultiPoly._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = MultiPoly._coerce(other)
        if other is None:
            return NotImplemented

        result = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                result[key] = result.get(key, 0) + c1 * c2
        return MultiPoly(result)

    __rmul__ = __mul__

    def __pow__(self, power):
        if not isinstance(power, int) or isinstance(power, bool) or power < 0:
            raise ValueError(f'Power must be a nonnegative integer, got {power!r}')

        result = MultiPoly.constant(1)
        base = self
        # Square and multiply
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other):
        other = MultiPoly._coerce(other)
        if other is None:
            return False
        return self._terms == other._terms

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.get_terms())

    def __repr__(self):
        return f'MultiPoly({len(self._terms)} terms, degree {self.degree()})'

    def __str__(self):
        if not self._terms:
            return '0'
        return ' + '.join(self.to_lines())
