# -*- coding: utf-8 -*-
""" The 17-element permutation used across the test modules. """
from laguerrecodec.core.datamodel.history import LaguerreHistory

D = None

SIGMA = [4, 9, 2, 11, 5, 10, 1, 3, 6, 8, 7, 12, 16, 17, 13, 14, 15]
OMEGA = [4, 9, 2, 11, 1, 10, 7, 8, 3, 5, 6, 12, 16, 17, 15, 13, 14]
TAU = [4, 11, 2, 9, 1, 10, 7, 8, 5, 3, 6, 12, 17, 16, 15, 14, 13]

SIGMA_STEPS = ['U', 'U', 'LB', 'LA', 'LC', 'U', 'LB', 'LB', 'D',
               'D', 'D', 'LC', 'U', 'U', 'LB', 'D', 'D']
SIGMA_LABELS = [(D, D), (D, D), (D, 2), (1, D), (D, 3), (D, D), (D, 1), (D, 1), (1, 1),
                (2, 2), (1, 1), (D, 1), (D, D), (D, D), (D, 1), (1, 1), (1, 1)]

RHO1_STEPS = ['U', 'U', 'LB', 'LA', 'LB', 'U', 'LC', 'LC', 'D',
              'D', 'D', 'LC', 'U', 'U', 'LC', 'D', 'D']
RHO1_LABELS = [(D, D), (D, D), (D, 2), (1, D), (D, 1), (D, D), (D, 4), (D, 4), (1, 1),
               (2, 1), (1, 1), (D, 1), (D, D), (D, D), (D, 3), (1, 1), (1, 1)]

RHO2_STEPS = RHO1_STEPS
RHO2_LABELS = [(D, D), (D, D), (D, 2), (1, D), (D, 1), (D, D), (D, 4), (D, 4), (2, 2),
               (2, 1), (1, 1), (D, 1), (D, D), (D, D), (D, 3), (2, 2), (1, 1)]

SIGMA_HEIGHTS = (0, 1, 2, 2, 2, 2, 3, 3, 3, 2, 1, 0, 0, 1, 2, 2, 1, 0)


def sigma_history():
    return LaguerreHistory(SIGMA_STEPS, SIGMA_LABELS)


def rho1_history():
    return LaguerreHistory(RHO1_STEPS, RHO1_LABELS)


def rho2_history():
    return LaguerreHistory(RHO2_STEPS, RHO2_LABELS)
