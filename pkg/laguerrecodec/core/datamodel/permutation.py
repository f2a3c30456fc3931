# -*- coding: utf-8 -*-
"""
Permutations of 1..n in one-line form and their set-valued statistics:
records, antirecords, exclusive records, record-antirecords, excedances,
cycle maxima and the cycle classification of every index.

All public indices and values are 1-based. Sets are returned as sorted
tuples without duplicates so that profiles compare by plain equality.
"""
import itertools
import numbers
from typing import Dict, NamedTuple, Tuple


class CycleKinds:
    """ Dummy enum class for the five kinds of an index in its cycle """
    CVAL = 'CVAL'
    CPEAK = 'CPEAK'
    CDRISE = 'CDRISE'
    CDFALL = 'CDFALL'
    FIX = 'FIX'

    @staticmethod
    def to_list():
        return [CycleKinds.CVAL,
                CycleKinds.CPEAK,
                CycleKinds.CDRISE,
                CycleKinds.CDFALL,
                CycleKinds.FIX]


def _as_index(value):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise ValueError(f'Permutation entries must be integers, got {value!r}')
    return int(value)


class Permutation:
    """ A bijection on {1..n} stored by its images sigma(1) ... sigma(n). """
    __slots__ = ('_images',)

    def __init__(self, images=()):
        _images = tuple(_as_index(value) for value in images)

        if sorted(_images) != list(range(1, len(_images) + 1)):
            raise ValueError(
                f'Not a permutation of 1..{len(_images)}: {list(_images)}')

        self._images = _images

    @staticmethod
    def identity(n):
        """ The identity permutation of size n. """
        return Permutation(range(1, n + 1))

    @staticmethod
    def from_cycles(cycles, n=None):
        """
        Build a permutation from a list of cycles, e.g. [(1, 4, 11, 7), (5,)].
        Elements missing from the cycles are fixed points. When n is None,
        the size is the largest element mentioned.
        """
        cycles = [tuple(_as_index(v) for v in cycle) for cycle in cycles]
        if n is None:
            n = max((max(cycle) for cycle in cycles if cycle), default=0)

        images = list(range(1, n + 1))
        seen = set()
        for cycle in cycles:
            for pos, value in enumerate(cycle):
                if value < 1 or value > n or value in seen:
                    raise ValueError(f'Invalid cycle element {value} for n={n}')
                seen.add(value)
                images[value - 1] = cycle[(pos + 1) % len(cycle)]

        return Permutation(images)

    def get_size(self):
        return len(self._images)

    def get_images(self):
        return self._images

    def __call__(self, i):
        """ sigma(i) for 1 <= i <= n """
        if not 1 <= i <= len(self._images):
            raise IndexError(f'Index {i} out of range 1..{len(self._images)}')
        return self._images[i - 1]

    def __len__(self):
        return len(self._images)

    def __iter__(self):
        return iter(self._images)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return False
        return self._images == other._images

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._images)

    def __lt__(self, other):
        return self._images < other._images

    def __repr__(self):
        return f'Permutation({list(self._images)})'

    def __str__(self):
        return ' '.join(str(value) for value in self._images)


class CycleClassification:
    """ The kind (cycle valley, peak, double rise, double fall or fixed
    point) of every index of a permutation. """
    def __init__(self, kind_of=None):
        self.kind_of: Dict[int, str] = dict(kind_of) if kind_of else {}

    def get_kind(self, i):
        return self.kind_of[i]

    def get_set(self, kind):
        """ Sorted indices of the given kind. """
        if kind not in CycleKinds.to_list():
            raise ValueError(f'Invalid cycle kind "{kind}"')
        return tuple(sorted(i for i, k in self.kind_of.items() if k == kind))

    def get_cval(self):
        return self.get_set(CycleKinds.CVAL)

    def get_cpeak(self):
        return self.get_set(CycleKinds.CPEAK)

    def get_cdrise(self):
        return self.get_set(CycleKinds.CDRISE)

    def get_cdfall(self):
        return self.get_set(CycleKinds.CDFALL)

    def get_fix(self):
        return self.get_set(CycleKinds.FIX)

    def asdict(self):
        return {kind: self.get_set(kind) for kind in CycleKinds.to_list()}

    def __len__(self):
        return len(self.kind_of)

    def __eq__(self, other):
        if not isinstance(other, CycleClassification):
            return False
        return self.kind_of == other.kind_of

    def __repr__(self):
        return f'CycleClassification({len(self.kind_of)} indices)'


class StatisticProfile(NamedTuple):
    """ The ten set-valued statistics of a permutation plus its cycle
    maxima. Each field is a sorted tuple of indices. """
    recp: Tuple[int, ...]
    recl: Tuple[int, ...]
    arecp: Tuple[int, ...]
    arecl: Tuple[int, ...]
    erecp: Tuple[int, ...]
    erecl: Tuple[int, ...]
    rar: Tuple[int, ...]
    excp: Tuple[int, ...]
    excl: Tuple[int, ...]
    cyc: Tuple[int, ...]

    def rec(self):
        return self.recp, self.recl

    def arec(self):
        return self.arecp, self.arecl

    def erec(self):
        return self.erecp, self.erecl

    def exc(self):
        return self.excp, self.excl

    def counts(self):
        """ Integer-valued statistics (rec, arec, erec, rar, exc, cyc). """
        return {'rec': len(self.recp), 'arec': len(self.arecp),
                'erec': len(self.erecp), 'rar': len(self.rar),
                'exc': len(self.excp), 'cyc': len(self.cyc)}

    def asdict(self):
        return self._asdict()


def _check_index(p, i):
    if not 1 <= i <= len(p):
        raise IndexError(f'Index {i} out of range 1..{len(p)}')


def inverse(p):
    """ The inverse permutation, so that p(inverse(p)(k)) = k. """
    images = [0] * len(p)
    for i, value in enumerate(p, start=1):
        images[value - 1] = i
    return Permutation(images)


def permutations(n):
    """ All permutations of size n in lexicographic order. """
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


def classify(p):
    """ Label every index by comparing sigma^-1(i), i and sigma(i). """
    p_inv = inverse(p)
    kind_of = {}
    for i in range(1, len(p) + 1):
        before, after = p_inv(i), p(i)
        if after == i:
            kind_of[i] = CycleKinds.FIX
        elif before < i > after:
            kind_of[i] = CycleKinds.CPEAK
        elif before > i < after:
            kind_of[i] = CycleKinds.CVAL
        elif before < i < after:
            kind_of[i] = CycleKinds.CDRISE
        else:
            kind_of[i] = CycleKinds.CDFALL

    return CycleClassification(kind_of)


def cycles(p):
    """
    Cycle decomposition. Each cycle starts at its minimum and the cycles
    are ordered by their minima, e.g. [(1, 4, 11, 7), (2, 9, 6, 10, 8, 3), ...].
    """
    seen = set()
    result = []
    for start in range(1, len(p) + 1):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        current = p(start)
        while current != start:
            cycle.append(current)
            seen.add(current)
            current = p(current)
        result.append(tuple(cycle))
    return result


def to_cycle_notation(p):
    """ Cycle notation string such as '(1,4,11,7)(5)'. Empty for n=0. """
    return ''.join('(' + ','.join(str(v) for v in cycle) + ')'
                   for cycle in cycles(p))


def lownest(p, i):
    """ Number of j > i with sigma(j) < sigma(i). """
    _check_index(p, i)
    value = p(i)
    return sum(1 for j in range(i + 1, len(p) + 1) if p(j) < value)


def upnest(p, i):
    """ Number of j > i with sigma^-1(j) < sigma^-1(i), i.e.
    lownest(inverse(p), i). """
    _check_index(p, i)
    return lownest(inverse(p), i)


def excedance_height(p, i):
    """ #{j <= i : sigma(j) > i}, the height after step i of the history. """
    if not 0 <= i <= len(p):
        raise IndexError(f'Index {i} out of range 0..{len(p)}')
    return sum(1 for j in range(1, i + 1) if p(j) > i)


def profile(p):
    """ All set-valued statistics of the permutation. """
    n = len(p)

    # Records scan left to right with a running maximum
    recp = []
    running_max = 0
    for i in range(1, n + 1):
        if p(i) > running_max:
            recp.append(i)
            running_max = p(i)

    # Antirecords scan right to left with a running minimum
    arecp = []
    running_min = n + 1
    for i in range(n, 0, -1):
        if p(i) < running_min:
            arecp.append(i)
            running_min = p(i)
    arecp.reverse()

    rar = sorted(set(recp) & set(arecp))
    erecp = [i for i in recp if i not in rar]
    excp = [i for i in range(1, n + 1) if p(i) > i]

    def letters(positions):
        return tuple(sorted(p(i) for i in positions))

    return StatisticProfile(
        recp=tuple(recp), recl=letters(recp),
        arecp=tuple(arecp), arecl=letters(arecp),
        erecp=tuple(erecp), erecl=letters(erecp),
        rar=tuple(rar),
        excp=tuple(excp), excl=letters(excp),
        cyc=tuple(sorted(max(cycle) for cycle in cycles(p))))
