# -*- coding: utf-8 -*-
"""Encoding of permutations as Laguerre histories and its inverse"""
from .utils.customlogger import logger
from .datamodel.digraph import PartialBipartiteGraph
from .datamodel.history import (ABSENT, Label, LaguerreHistory, StepKinds,
                                check_valid)
from .datamodel.permutation import CycleKinds, classify, inverse, lownest

# Step kind of every cycle kind
_STEP_OF_KIND = {
    CycleKinds.CVAL: StepKinds.U,
    CycleKinds.CPEAK: StepKinds.D,
    CycleKinds.CDRISE: StepKinds.LA,
    CycleKinds.CDFALL: StepKinds.LB,
    CycleKinds.FIX: StepKinds.LC
}


def encode(p):
    """
    The Laguerre history of a permutation. Step i is read from the cycle
    kind of i; the labels are upnest+1 (xi) and lownest+1 (eta), and a
    fixed point gets (Δ, h_{i-1}+1).
    """
    kinds = classify(p)
    p_inv = inverse(p)

    steps = []
    labels = []
    height = 0
    for i in range(1, len(p) + 1):
        kind = _STEP_OF_KIND[kinds.get_kind(i)]
        # upnest(i, p) = lownest(i, p^-1)
        xi = lownest(p_inv, i) + 1
        eta = lownest(p, i) + 1

        if kind == StepKinds.U:
            label = Label(ABSENT, ABSENT)
        elif kind == StepKinds.D:
            label = Label(xi, eta)
        elif kind == StepKinds.LA:
            label = Label(xi, ABSENT)
        elif kind == StepKinds.LB:
            label = Label(ABSENT, eta)
        else:
            label = Label(ABSENT, height + 1)

        steps.append(kind)
        labels.append(label)
        height += StepKinds.height_change(kind)

    return LaguerreHistory(steps, labels)


def apply_step(graph, i, kind, label, top_edge_first=True):
    """
    Insert the edges of step i into a graph whose last column is i. Vacancy
    ranks for a D step are taken before either of its edges is inserted,
    so the insertion order of the two edges does not change the result.
    """
    if kind == StepKinds.D:
        top = graph.kth_vacant_top(label.xi)
        bottom = graph.kth_vacant_bottom(label.eta)
        if top_edge_first:
            graph.add_edge(top, i)
            graph.add_edge(i, bottom)
        else:
            graph.add_edge(i, bottom)
            graph.add_edge(top, i)
    elif kind == StepKinds.LA:
        graph.add_edge(graph.kth_vacant_top(label.xi), i)
    elif kind == StepKinds.LB:
        graph.add_edge(i, graph.kth_vacant_bottom(label.eta))
    elif kind == StepKinds.LC:
        graph.add_edge(i, i)
    return graph


def decode_graph(h, top_edge_first=True):
    """ Rebuild the bipartite digraph of a history column by column. """
    check_valid(h)

    graph = PartialBipartiteGraph()
    for i, (kind, label) in enumerate(h, start=1):
        graph.add_column()
        apply_step(graph, i, kind, label, top_edge_first)

    return graph


def decode(h):
    """ The permutation of a Laguerre history. """
    try:
        return decode_graph(h).to_permutation()
    except ValueError as e:
        logger.error(f'Cannot decode history: {e}')
        raise e
