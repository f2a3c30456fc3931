# -*- coding: utf-8 -*-
"""
Exhaustive verification suites over S_n and L_n for n = 0..n_max.

Each suite walks the permutations (or histories) of every size in
lexicographic blocks. Blocks may run in worker processes; their results
are merged in block order, so the report only depends on the inputs.
"""
import itertools
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, NamedTuple, Tuple

import numpy as np

from .utils.customlogger import logger
from .utils.sorting import sort_profiles
from .bijections import phi, phi_cap, rho1, rho1_inv, rho2
from .codec import decode, encode
from .contfrac import (MomentStatistics, brute_force_jacobi, brute_force_mu,
                       jacobi_moments, statistic_jacobi_schedule,
                       statistic_stieltjes_schedule, stieltjes_moments)
from .datamodel.history import histories, history_profile, validate
from .datamodel.multipoly import MultiPoly
from .datamodel.permutation import permutations, profile

# n_max used when none is given
DEFAULT_N_MAX = 6

# Above this n_max a run takes minutes; a warning is logged
COSTLY_N_MAX = 8

# Above this n_max a run is refused
MAX_N_MAX = 10

CHECK_NAMES = ('roundtrip', 'transport', 'theorem1', 'theorem2',
               'rho1-bijection', 'rho2-involution', 'cf-stieltjes',
               'cf-jacobi', 'corollary', 'all')

# Suites that walk L_n instead of S_n
_HISTORY_CHECKS = ('rho1-bijection', 'rho2-involution')


class Failure(NamedTuple):
    """ A failed case: its input serialization, expected and actual values. """
    case: str
    expected: str
    actual: str

    def asdict(self):
        return {'input': self.case, 'expected': self.expected, 'actual': self.actual}


class VerificationReport:
    """ Outcome of one suite. passed is True exactly when there are no failures. """
    def __init__(self, check_name, n_range, cases_run=0, failures=(), elapsed_ms=0.0):
        self.check_name = check_name
        self.n_range: Tuple[int, int] = tuple(n_range)
        self.cases_run = cases_run
        self.failures: List[Failure] = list(failures)
        self.elapsed_ms = elapsed_ms

    @property
    def passed(self):
        return not self.failures

    def asdict(self, with_elapsed=True):
        _dict = {
            'check': self.check_name,
            'n_range': list(self.n_range),
            'cases_run': self.cases_run,
            'status': 'passed' if self.passed else 'failed',
            'failures': [failure.asdict() for failure in self.failures],
        }
        if with_elapsed:
            _dict['elapsed_ms'] = round(self.elapsed_ms, 3)
        return _dict

    def to_json(self):
        return json.dumps(self.asdict(), ensure_ascii=False)

    def __eq__(self, other):
        """ Equality ignores the elapsed time. """
        if not isinstance(other, VerificationReport):
            return False
        return self.asdict(with_elapsed=False) == other.asdict(with_elapsed=False)

    def __repr__(self):
        return (f'VerificationReport({self.check_name}, n={self.n_range[0]}..'
                f'{self.n_range[1]}, {self.cases_run} cases, '
                f'{len(self.failures)} failures)')

    def __str__(self):
        status = 'passed' if self.passed else 'FAILED'
        lines = [f'{self.check_name}: {status}, {self.cases_run} cases for '
                 f'n={self.n_range[0]}..{self.n_range[1]} in {self.elapsed_ms:.1f} ms']
        for failure in self.failures:
            lines.append(f'  {failure.case}: expected {failure.expected}, '
                         f'got {failure.actual}')
        return '\n'.join(lines)


class _BlockResult:
    """ What a block of cases reports back to the merging process. """
    def __init__(self):
        self.cases = 0
        self.failures: List[Failure] = []
        # name -> (left profiles, right profiles) compared as multisets
        self.multisets: Dict[str, Tuple[list, list]] = {}
        # name -> partial brute-force polynomial
        self.polys: Dict[str, MultiPoly] = {}

    def collect(self, name, left, right):
        _left, _right = self.multisets.setdefault(name, ([], []))
        _left.append(left)
        _right.append(right)

    def merge(self, other):
        self.cases += other.cases
        self.failures.extend(other.failures)
        for name, (left, right) in other.multisets.items():
            _left, _right = self.multisets.setdefault(name, ([], []))
            _left.extend(left)
            _right.extend(right)
        for name, poly in other.polys.items():
            self.polys[name] = self.polys.get(name, MultiPoly()) + poly
        return self


def _expect(result, case, expected, actual):
    if expected != actual:
        result.failures.append(Failure(str(case), str(expected), str(actual)))


def _one_line(h):
    return str(h) if len(h) else '(empty history)'


def _run_roundtrip(result, n, start, stop):
    _perms = list(itertools.islice(permutations(n), start, stop))
    _histories = list(itertools.islice(histories(n), start, stop))
    _expect(result, f'n={n} block {start}..{stop}', len(_perms), len(_histories))

    for p, h in zip(_perms, _histories):
        result.cases += 1
        _expect(result, p, p, decode(encode(p)))
        _expect(result, _one_line(h), _one_line(h), _one_line(encode(decode(h))))


def _run_transport(result, p):
    h = encode(p)
    _expect(result, p, None, validate(h))

    prof = profile(p)
    expected = (prof.arecp, prof.erecl, prof.erecp, prof.excp, prof.excl,
                prof.rar, prof.cyc)
    _expect(result, p, expected, tuple(history_profile(h)))


def _run_theorem1(result, p):
    before, after = profile(p), profile(phi(p))
    _expect(result, p,
            (before.arecp, before.erec(), before.exc(), before.rar),
            (after.cyc, after.erec(), after.exc(), after.rar))
    result.collect('(Cyc, Erec, Exc, Rar) ~ (Arecp, Erec, Exc, Rar)',
                   (before.cyc, before.erec(), before.exc(), before.rar),
                   (before.arecp, before.erec(), before.exc(), before.rar))


def _run_theorem2(result, p):
    image = phi_cap(p)
    before, after = profile(p), profile(image)
    _expect(result, p,
            (before.arecp, before.cyc, before.exc(), before.rar),
            (after.cyc, after.arecp, after.exc(), after.rar))
    _expect(result, p, p, phi_cap(image))
    result.collect('(Cyc, Arecp, Exc, Rar) ~ (Arecp, Cyc, Exc, Rar)',
                   (before.cyc, before.arecp, before.exc(), before.rar),
                   (before.arecp, before.cyc, before.exc(), before.rar))


def _run_corollary(result, p):
    prof = profile(p)
    first, second = profile(phi(p)), profile(phi_cap(p))

    _expect(result, p, (prof.arecp, prof.rec(), prof.exc()),
            (first.cyc, first.rec(), first.exc()))
    _expect(result, p, (prof.arecp, prof.cyc, prof.exc()),
            (second.cyc, second.arecp, second.exc()))

    counts = prof.counts()
    result.collect('(Cyc, Rec, Exc) ~ (Arecp, Rec, Exc)',
                   (prof.cyc, prof.rec(), prof.exc()),
                   (prof.arecp, prof.rec(), prof.exc()))
    result.collect('(Cyc, Arecp, Exc) ~ (Arecp, Cyc, Exc)',
                   (prof.cyc, prof.arecp, prof.exc()),
                   (prof.arecp, prof.cyc, prof.exc()))
    result.collect('(erec, cyc, exc) ~ (erec, arec, exc)',
                   (counts['erec'], counts['cyc'], counts['exc']),
                   (counts['erec'], counts['arec'], counts['exc']))
    result.collect('(cyc, arec, exc) ~ (arec, cyc, exc)',
                   (counts['cyc'], counts['arec'], counts['exc']),
                   (counts['arec'], counts['cyc'], counts['exc']))


def _run_rho1(result, h):
    image = rho1(h)
    _expect(result, _one_line(h), None, validate(image))
    _expect(result, _one_line(h), _one_line(h), _one_line(rho1_inv(image)))
    _expect(result, _one_line(h), _one_line(h), _one_line(rho1(rho1_inv(h))))


def _run_rho2(result, h):
    image = rho2(h)
    _expect(result, _one_line(h), None, validate(image))
    _expect(result, _one_line(h), _one_line(h), _one_line(rho2(image)))


_PERMUTATION_CASES = {
    'transport': _run_transport,
    'theorem1': _run_theorem1,
    'theorem2': _run_theorem2,
    'corollary': _run_corollary,
}

_HISTORY_CASES = {
    'rho1-bijection': _run_rho1,
    'rho2-involution': _run_rho2,
}


def _run_block(check, n, start, stop):
    """ Run the cases start..stop-1 of size n. Module level so that it can
    be sent to worker processes. """
    result = _BlockResult()

    if check == 'roundtrip':
        _run_roundtrip(result, n, start, stop)
    elif check in _HISTORY_CASES:
        for h in itertools.islice(histories(n), start, stop):
            result.cases += 1
            _HISTORY_CASES[check](result, h)
    elif check in ('cf-stieltjes', 'cf-jacobi'):
        _perms = list(itertools.islice(permutations(n), start, stop))
        result.cases += len(_perms)
        if check == 'cf-stieltjes':
            result.polys[MomentStatistics.AREC] = brute_force_mu(n, MomentStatistics.AREC, _perms)
            result.polys[MomentStatistics.CYC] = brute_force_mu(n, MomentStatistics.CYC, _perms)
        else:
            result.polys['JACOBI'] = brute_force_jacobi(n, _perms)
    else:
        for p in itertools.islice(permutations(n), start, stop):
            result.cases += 1
            _PERMUTATION_CASES[check](result, p)

    return result


def _blocks(total, workers):
    """ (start, stop) ranges splitting 0..total-1 into at most workers parts. """
    if total == 0:
        return []
    parts = np.array_split(np.arange(total), min(workers, total))
    return [(int(part[0]), int(part[-1]) + 1) for part in parts if len(part)]


def _check_polys(merged, check, n, moments):
    """ Compare the merged brute-force sums of size n with the moment. """
    if check == 'cf-stieltjes':
        for which in MomentStatistics.to_list():
            _expect(merged, f'n={n} {which}', moments[n].to_lines(),
                    merged.polys.get(which, MultiPoly()).to_lines())
    else:
        poly = merged.polys.get('JACOBI', MultiPoly())
        _expect(merged, f'n={n} JACOBI', moments[n].to_lines(), poly.to_lines())
        _expect(merged, f'n={n} JACOBI x<->y', poly.to_lines(), poly.swap('x', 'y').to_lines())


def _check_multisets(merged, n):
    for name, (left, right) in sorted(merged.multisets.items()):
        if sort_profiles(left) != sort_profiles(right):
            merged.failures.append(Failure(
                f'n={n} {name}', 'equal multisets', 'multisets differ'))


def check_n_max(n_max):
    """ Refuse negative or too large n_max and warn about costly ones. """
    if not isinstance(n_max, int) or n_max < 0:
        raise ValueError(f'n_max must be a nonnegative integer, got {n_max!r}')
    if n_max > MAX_N_MAX:
        logger.warning(f'n_max={n_max} means {math.factorial(n_max)} permutations '
                       f'for the largest size alone')
        raise ValueError(f'n_max={n_max} is above the limit of {MAX_N_MAX}')
    if n_max > COSTLY_N_MAX:
        logger.warning(f'n_max={n_max} walks {math.factorial(n_max)} permutations, '
                       f'expect a long run')
    return n_max


def run_check(check, n_max=DEFAULT_N_MAX, workers=1):
    """
    Run one suite for n = 0..n_max with the given number of worker
    processes and return its VerificationReport. 'all' runs every suite
    and merges them into a single report.
    """
    if check not in CHECK_NAMES:
        raise ValueError(f'Unknown check "{check}", expected one of {", ".join(CHECK_NAMES)}')
    check_n_max(n_max)
    if workers < 1:
        raise ValueError(f'workers must be at least 1, got {workers}')

    if check == 'all':
        return _run_all(n_max, workers)

    logger.info(f'Running {check} for n=0..{n_max} with {workers} worker(s)')
    _start = time.perf_counter()

    if check == 'cf-stieltjes':
        moments = stieltjes_moments(statistic_stieltjes_schedule(), n_max)
    elif check == 'cf-jacobi':
        moments = jacobi_moments(statistic_jacobi_schedule(), n_max)
    else:
        moments = None

    total = _BlockResult()
    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for n in range(n_max + 1):
            # |L_n| = |S_n| = n!
            blocks = _blocks(math.factorial(n), workers)
            args = ([check] * len(blocks), [n] * len(blocks),
                    [start for start, _ in blocks], [stop for _, stop in blocks])
            results = executor.map(_run_block, *args) if executor else map(_run_block, *args)

            merged = _BlockResult()
            for result in results:
                merged.merge(result)

            if moments is not None:
                _check_polys(merged, check, n, moments)
            _check_multisets(merged, n)

            merged.multisets, merged.polys = {}, {}
            total.merge(merged)
            logger.debug('%s n=%d: %d cases, %d failures',
                         check, n, merged.cases, len(merged.failures))
    finally:
        if executor:
            executor.shutdown()

    elapsed_ms = (time.perf_counter() - _start) * 1000.0
    report = VerificationReport(check, (0, n_max), total.cases, total.failures, elapsed_ms)

    if report.passed:
        logger.ok(f'{check}: {report.cases_run} cases passed in {elapsed_ms / 1000.0:.3f} sec')
    else:
        logger.error(f'{check}: {len(report.failures)} failures in {report.cases_run} cases')
    return report


def _run_all(n_max, workers):
    _start = time.perf_counter()

    cases_run, failures = 0, []
    for check in CHECK_NAMES:
        if check == 'all':
            continue
        report = run_check(check, n_max, workers)
        cases_run += report.cases_run
        failures.extend(Failure(f'[{check}] {failure.case}', failure.expected, failure.actual)
                        for failure in report.failures)

    elapsed_ms = (time.perf_counter() - _start) * 1000.0
    return VerificationReport('all', (0, n_max), cases_run, failures, elapsed_ms)
