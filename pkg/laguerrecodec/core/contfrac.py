# -*- coding: utf-8 -*-
"""
Continued fractions whose Taylor coefficients count permutations, and the
brute-force statistic sums over S_n they equal.

Moments are expanded as weighted lattice paths: Dyck paths for a
Stieltjes fraction, Motzkin paths for a Jacobi fraction. The path weights
are accumulated height by height, one step at a time.
"""
import time
from collections import Counter

from .utils.customlogger import logger
from .datamodel.multipoly import VARIABLES, MultiPoly
from .datamodel.permutation import permutations, profile


class FractionKinds:
    """ Dummy enum class for the supported continued fractions """
    S_FRACTION = 'S'
    J_FRACTION = 'J'

    @staticmethod
    def to_list():
        return [FractionKinds.S_FRACTION, FractionKinds.J_FRACTION]


class MomentStatistics:
    """ Dummy enum class for the two readings of the Stieltjes moments """
    AREC = 'AREC'
    CYC = 'CYC'

    @staticmethod
    def to_list():
        return [MomentStatistics.AREC, MomentStatistics.CYC]


class CoefficientSchedule:
    """
    Coefficient rules of a continued fraction. An S-fraction needs alpha(k)
    for k >= 1; a J-fraction needs gamma(k) for k >= 0 and beta(k) for
    k >= 1. Each rule maps an index to a MultiPoly.
    """
    def __init__(self, kind, alpha=None, gamma=None, beta=None):
        if kind not in FractionKinds.to_list():
            raise ValueError(f'Invalid fraction kind "{kind}"')
        if kind == FractionKinds.S_FRACTION and alpha is None:
            raise ValueError('An S-fraction schedule needs an alpha rule')
        if kind == FractionKinds.J_FRACTION and (gamma is None or beta is None):
            raise ValueError('A J-fraction schedule needs gamma and beta rules')

        self.kind = kind
        self._alpha = alpha
        self._gamma = gamma
        self._beta = beta

    def get_kind(self):
        return self.kind

    def alpha(self, k):
        if self.kind != FractionKinds.S_FRACTION:
            raise TypeError('alpha is only defined for an S-fraction')
        if k < 1:
            raise IndexError(f'alpha_{k} is undefined, k must be >= 1')
        return self._alpha(k)

    def gamma(self, k):
        if self.kind != FractionKinds.J_FRACTION:
            raise TypeError('gamma is only defined for a J-fraction')
        if k < 0:
            raise IndexError(f'gamma_{k} is undefined, k must be >= 0')
        return self._gamma(k)

    def beta(self, k):
        if self.kind != FractionKinds.J_FRACTION:
            raise TypeError('beta is only defined for a J-fraction')
        if k < 1:
            raise IndexError(f'beta_{k} is undefined, k must be >= 1')
        return self._beta(k)

    def __repr__(self):
        return f'CoefficientSchedule({self.kind}-fraction)'


class MomentSequence:
    """ The moments mu_0 ... mu_N of a continued fraction. """
    def __init__(self, polys=()):
        self.polys = tuple(polys)

        if self.polys and self.polys[0] != 1:
            raise ValueError(f'mu_0 must be 1, got {self.polys[0]}')

    def get_order(self):
        return len(self.polys) - 1

    def __getitem__(self, n):
        return self.polys[n]

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __eq__(self, other):
        if not isinstance(other, MomentSequence):
            return False
        return self.polys == other.polys

    def __repr__(self):
        return f'MomentSequence(order {self.get_order()})'


def statistic_stieltjes_schedule():
    """ alpha_{2k-1} = x + (k-1) u, alpha_{2k} = y + (k-1) v """
    x, y, u, v = (MultiPoly.variable(name) for name in ('x', 'y', 'u', 'v'))

    def _alpha(k):
        half = (k + 1) // 2
        if k % 2:
            return x + (half - 1) * u
        return y + (half - 1) * v

    return CoefficientSchedule(FractionKinds.S_FRACTION, alpha=_alpha)


def statistic_jacobi_schedule():
    """
    gamma_0 = x y w0, gamma_n = x + y + n - 1 + n z and
    beta_n = (x + n - 1)(y + n - 1) z for n >= 1.
    """
    x, y, z, w0 = (MultiPoly.variable(name) for name in ('x', 'y', 'z', 'w0'))

    def _gamma(k):
        if k == 0:
            return x * y * w0
        return x + y + (k - 1) + k * z

    def _beta(k):
        return (x + (k - 1)) * (y + (k - 1)) * z

    return CoefficientSchedule(FractionKinds.J_FRACTION, gamma=_gamma, beta=_beta)


def stieltjes_moments(sched, order):
    """
    mu_0 ... mu_order of an S-fraction: mu_n sums over Dyck paths of
    length 2n the product of alpha_h over the down steps from height h.
    """
    if sched.get_kind() != FractionKinds.S_FRACTION:
        raise ValueError(f'Expected an S-fraction schedule, got {sched!r}')
    if order < 0:
        raise ValueError(f'Order must be nonnegative, got {order}')

    alphas = [None] + [sched.alpha(k) for k in range(1, order + 1)]

    # weights[h]: total weight of the path prefixes ending at height h
    weights = [MultiPoly.constant(1)] + [MultiPoly()] * order
    moments = [MultiPoly.constant(1)]
    for step in range(1, 2 * order + 1):
        # Heights that can still return to 0 within 2*order steps
        top = min(step, 2 * order - step)
        _weights = [MultiPoly()] * (order + 1)
        for h in range(top + 1):
            if h > 0:
                _weights[h] = _weights[h] + weights[h - 1]
            if h < order and weights[h + 1]:
                _weights[h] = _weights[h] + weights[h + 1] * alphas[h + 1]
        weights = _weights

        if step % 2 == 0:
            moments.append(weights[0])

    return MomentSequence(moments)


def jacobi_moments(sched, order):
    """
    mu_0 ... mu_order of a J-fraction: mu_n sums over Motzkin paths of
    length n the product of gamma_h over the level steps at height h and
    beta_h over the down steps from height h.
    """
    if sched.get_kind() != FractionKinds.J_FRACTION:
        raise ValueError(f'Expected a J-fraction schedule, got {sched!r}')
    if order < 0:
        raise ValueError(f'Order must be nonnegative, got {order}')

    gammas = [sched.gamma(k) for k in range(order + 1)]
    betas = [None] + [sched.beta(k) for k in range(1, order + 1)]

    weights = [MultiPoly.constant(1)] + [MultiPoly()] * order
    moments = [MultiPoly.constant(1)]
    for step in range(1, order + 1):
        _weights = [MultiPoly()] * (order + 1)
        for h in range(min(step, order) + 1):
            if h > 0:
                _weights[h] = _weights[h] + weights[h - 1]
            if weights[h]:
                _weights[h] = _weights[h] + weights[h] * gammas[h]
            if h < order and weights[h + 1]:
                _weights[h] = _weights[h] + weights[h + 1] * betas[h + 1]
        weights = _weights
        moments.append(weights[0])

    return MomentSequence(moments)


def _exponent_vector(n, **powers):
    """ Exponent tuple in VARIABLES order; a negative entry means the
    statistics are inconsistent. """
    for name, power in powers.items():
        if power < 0:
            raise ArithmeticError(
                f'Negative exponent {name}^{power} for a permutation of size {n}')
    return tuple(powers.get(name, 0) for name in VARIABLES)


def brute_force_mu(n, which=MomentStatistics.AREC, perms=None):
    """
    Sum over S_n of x^arec y^erec u^(n-exc-arec) v^(exc-erec), or with cyc
    in place of arec when which is CYC. perms restricts the sum to a block
    of S_n, which lets callers split the work and add the results.
    """
    if which not in MomentStatistics.to_list():
        raise ValueError(f'Invalid statistic "{which}", expected AREC or CYC')

    terms = Counter()
    for p in permutations(n) if perms is None else perms:
        counts = profile(p).counts()
        first = counts['arec'] if which == MomentStatistics.AREC else counts['cyc']
        terms[_exponent_vector(n, x=first, y=counts['erec'],
                               u=n - counts['exc'] - first,
                               v=counts['exc'] - counts['erec'])] += 1

    return MultiPoly(terms)


def brute_force_jacobi(n, perms=None):
    """ Sum over S_n of x^cyc y^arec z^exc w0^rar. """
    terms = Counter()
    for p in permutations(n) if perms is None else perms:
        counts = profile(p).counts()
        terms[_exponent_vector(n, x=counts['cyc'], y=counts['arec'],
                               z=counts['exc'], w0=counts['rar'])] += 1

    return MultiPoly(terms)


def moments(kind, order):
    """ Moments of the S- or J-fraction with the standard schedules. """
    logger.info(f'Expanding the {kind}-fraction up to order {order}')
    _start = time.perf_counter()

    if kind == FractionKinds.S_FRACTION:
        result = stieltjes_moments(statistic_stieltjes_schedule(), order)
    elif kind == FractionKinds.J_FRACTION:
        result = jacobi_moments(statistic_jacobi_schedule(), order)
    else:
        raise ValueError(f'Invalid fraction kind "{kind}"')

    logger.ok(f'{len(result)} moments in {time.perf_counter() - _start:.3f} sec')
    return result
