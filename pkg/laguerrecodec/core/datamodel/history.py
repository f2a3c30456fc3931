# -*- coding: utf-8 -*-
"""
3-Motzkin words and Laguerre histories.

A Laguerre history of length n is a step word s over {U, D, LA, LB, LC}
whose height never drops below zero and ends at zero, together with a
label (xi, eta) per step. The label domain of step i depends on the
height h_{i-1} before the step; ABSENT stands for a missing coordinate.
"""
import itertools
from typing import NamedTuple, Optional, Tuple
import numpy as np

# Missing label coordinate. Never encoded as 0.
ABSENT = None


class StepKinds:
    """ Dummy enum class for the letters of a 3-Motzkin word """
    U = 'U'
    D = 'D'
    LA = 'LA'
    LB = 'LB'
    LC = 'LC'

    @staticmethod
    def to_list():
        return [StepKinds.U, StepKinds.D,
                StepKinds.LA, StepKinds.LB, StepKinds.LC]

    @staticmethod
    def height_change(kind):
        if kind == StepKinds.U:
            return 1
        if kind == StepKinds.D:
            return -1
        return 0


class Label(NamedTuple):
    """ The pair (xi, eta) attached to a step. """
    xi: Optional[int] = ABSENT
    eta: Optional[int] = ABSENT


class Violation(NamedTuple):
    """ First violated constraint of a history. index is 1-based; it is
    n for the final height condition and 0 for structural problems. """
    index: int
    constraint: str
    message: str

    def __str__(self):
        return f'step {self.index}: {self.message} [{self.constraint}]'


class InvalidHistoryError(ValueError):
    """ Raised when an operation receives an invalid Laguerre history. """
    def __init__(self, violation):
        super().__init__(str(violation))
        self.violation = violation


class LaguerreHistory:
    """ Step word and labels of a Laguerre history. The constructor only
    checks shapes; call validate() for the full set of constraints. """
    __slots__ = ('_steps', '_labels')

    def __init__(self, steps=(), labels=()):
        _steps = tuple(steps)
        _labels = tuple(Label(*label) for label in labels)

        if len(_steps) != len(_labels):
            raise ValueError(
                f'{len(_steps)} steps but {len(_labels)} labels')

        self._steps = _steps
        self._labels = _labels

    @staticmethod
    def from_pairs(pairs):
        """ Build from (kind, xi, eta) triples. """
        pairs = list(pairs)
        return LaguerreHistory([kind for kind, _, _ in pairs],
                               [Label(xi, eta) for _, xi, eta in pairs])

    def get_size(self):
        return len(self._steps)

    def get_steps(self):
        return self._steps

    def get_labels(self):
        return self._labels

    def step(self, i):
        """ Kind of step i, 1-based. """
        return self._steps[i - 1]

    def label(self, i):
        """ Label of step i, 1-based. """
        return self._labels[i - 1]

    def __len__(self):
        return len(self._steps)

    def __iter__(self):
        return iter(zip(self._steps, self._labels))

    def __eq__(self, other):
        if not isinstance(other, LaguerreHistory):
            return False
        return self._steps == other._steps and self._labels == other._labels

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._steps, self._labels))

    def __repr__(self):
        return f'LaguerreHistory({step_word(self)!r})'

    def __str__(self):
        def _coord(value):
            return 'Δ' if value is ABSENT else str(value)

        return ' '.join(f'{kind}({_coord(label.xi)},{_coord(label.eta)})'
                        for kind, label in self)


class HistoryProfile(NamedTuple):
    """ Set-valued statistics read from a Laguerre history. """
    arecp: Tuple[int, ...]
    erecl: Tuple[int, ...]
    erecp: Tuple[int, ...]
    excp: Tuple[int, ...]
    excl: Tuple[int, ...]
    rar: Tuple[int, ...]
    cyc: Tuple[int, ...]

    def asdict(self):
        return self._asdict()


def step_word(h):
    """ The step word as text, e.g. 'U U LB LA LC'. """
    return ' '.join(h.get_steps())


def heights(h):
    """ Heights h_0, ..., h_n of the step word. """
    _changes = [StepKinds.height_change(kind) for kind in h.get_steps()]
    _heights = np.concatenate(([0], np.cumsum(_changes, dtype=np.int64)))
    return tuple(int(value) for value in _heights)


def _in_range(value, low, high):
    return (isinstance(value, (int, np.integer)) and not isinstance(value, bool)
            and low <= value <= high)


def _check_label(kind, label, before):
    """ Message for a label outside the domain of its step, else None. """
    xi, eta = label
    if kind == StepKinds.U:
        if xi is not ABSENT or eta is not ABSENT:
            return f'U step needs label (Δ,Δ), got ({xi},{eta})'
    elif kind == StepKinds.D:
        if not _in_range(xi, 1, before) or not _in_range(eta, 1, before):
            return f'D step needs xi, eta in 1..{before}, got ({xi},{eta})'
    elif kind == StepKinds.LA:
        if not _in_range(xi, 1, before) or eta is not ABSENT:
            return f'LA step needs (1..{before}, Δ), got ({xi},{eta})'
    elif kind == StepKinds.LB:
        if xi is not ABSENT or not _in_range(eta, 1, before):
            return f'LB step needs (Δ, 1..{before}), got ({xi},{eta})'
    elif kind == StepKinds.LC:
        if xi is not ABSENT or not _in_range(eta, before + 1, before + 1):
            return f'LC step needs (Δ, {before + 1}), got ({xi},{eta})'
    return None


def validate(h):
    """
    Check every constraint of a Laguerre history. Returns None when the
    history is valid, otherwise the first Violation in step order.
    """
    height = 0
    for i, (kind, label) in enumerate(h, start=1):
        if kind not in StepKinds.to_list():
            return Violation(i, 'kind', f'unknown step kind {kind!r}')

        before = height
        height += StepKinds.height_change(kind)
        if height < 0:
            return Violation(i, 'height', f'height h_{i} = {height} is negative')

        _message = _check_label(kind, label, before)
        if _message:
            return Violation(i, 'label', _message)

    if height != 0:
        return Violation(len(h), 'final-height',
                         f'final height h_{len(h)} = {height}, expected 0')
    return None


def check_valid(h):
    """ Raise InvalidHistoryError unless the history is valid. """
    violation = validate(h)
    if violation is not None:
        raise InvalidHistoryError(violation)
    return h


def motzkin_words(n):
    """ All 3-Motzkin words of length n that end at height 0. """
    def _extend(prefix, height):
        remaining = n - len(prefix)
        if remaining == 0:
            if height == 0:
                yield tuple(prefix)
            return
        # Not enough steps left to come back down
        if height > remaining:
            return
        for kind in StepKinds.to_list():
            _next = height + StepKinds.height_change(kind)
            if _next < 0:
                continue
            prefix.append(kind)
            yield from _extend(prefix, _next)
            prefix.pop()

    yield from _extend([], 0)


def _label_choices(kind, before):
    if kind == StepKinds.U:
        return [Label(ABSENT, ABSENT)]
    if kind == StepKinds.D:
        return [Label(xi, eta) for xi in range(1, before + 1)
                for eta in range(1, before + 1)]
    if kind == StepKinds.LA:
        return [Label(xi, ABSENT) for xi in range(1, before + 1)]
    if kind == StepKinds.LB:
        return [Label(ABSENT, eta) for eta in range(1, before + 1)]
    return [Label(ABSENT, before + 1)]


def histories(n):
    """ All Laguerre histories of length n: step words first, then the
    product of the label choices at each position. """
    for word in motzkin_words(n):
        _heights = heights(LaguerreHistory(word, [Label()] * n))
        choices = [_label_choices(kind, _heights[i])
                   for i, kind in enumerate(word)]
        for labels in itertools.product(*choices):
            yield LaguerreHistory(word, labels)


def history_profile(h):
    """
    Statistics of a history. arecp, erecl, excp, excl and rar are read off
    the steps and labels; erecp and cyc come from the decoded digraph.
    """
    # Decoding lives in the codec module, which imports this one
    from ..codec import decode_graph

    check_valid(h)

    def _where(predicate):
        return tuple(i for i, (kind, label) in enumerate(h, start=1)
                     if predicate(kind, label))

    arecp = _where(lambda kind, label: kind in (StepKinds.D, StepKinds.LB,
                                                 StepKinds.LC)
                   and label.eta == 1)
    erecl = _where(lambda kind, label: kind in (StepKinds.D, StepKinds.LA)
                   and label.xi == 1)
    excp = _where(lambda kind, _: kind in (StepKinds.U, StepKinds.LA))
    excl = _where(lambda kind, _: kind in (StepKinds.D, StepKinds.LA))
    rar = _where(lambda kind, label: kind == StepKinds.LC and label.eta == 1)

    graph = decode_graph(h)
    erecp = tuple(sorted(graph.bottom_in[j] for j in erecl))

    # i is a cycle maximum iff the walk from the top vertex i closes in g_i
    cyc = tuple(i for i, (kind, _) in enumerate(h, start=1)
                if kind == StepKinds.LC
                or (kind == StepKinds.D
                    and graph.restrict(i).follow_chain_from_top(i).closed))

    return HistoryProfile(arecp=arecp, erecl=erecl, erecp=erecp, excp=excp,
                          excl=excl, rar=rar, cyc=cyc)
