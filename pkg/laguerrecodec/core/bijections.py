# -*- coding: utf-8 -*-
"""
Bijections on Laguerre histories and the permutation maps they induce.

rho1 is a bijection sending (Arecp, Erec, Exc, Rar) of a history to
(Cyc, Erec, Exc, Rar) of its image; rho2 is an involution exchanging
Arecp and Cyc while keeping Exc and Rar. phi and phi_cap are their
conjugates by the encoding of permutations.

Both maps copy U and LA steps, swap LB/LC steps according to eta, and
recompute the labels of D steps from walks in partially built digraphs.
"""
from .utils.customlogger import logger
from .codec import apply_step, decode, encode
from .datamodel.digraph import PartialBipartiteGraph
from .datamodel.history import (ABSENT, Label, LaguerreHistory, StepKinds,
                                check_valid, heights)


def _level_step_image(kind, label, before):
    """
    Image of a non-D step, shared by rho1, its inverse and rho2:
    U and LA are kept, LB with eta=1 becomes LC, LC above height 0 becomes
    LB with eta=1, every other LB and the LC at height 0 are kept.
    """
    if kind == StepKinds.LB and label.eta == 1:
        return StepKinds.LC, Label(ABSENT, before + 1)
    if kind == StepKinds.LC and before > 0:
        return StepKinds.LB, Label(ABSENT, 1)
    return kind, label


def _shift_from_rank(value, rank):
    """ 1 -> rank, 2..rank -> 1..rank-1, larger values unchanged. """
    if value == 1:
        return rank
    if value > rank:
        return value
    return value - 1


def _shift_to_rank(value, rank):
    """ Inverse of _shift_from_rank: rank -> 1, 1..rank-1 -> 2..rank. """
    if value == rank:
        return 1
    if value > rank:
        return value
    return value + 1


def _bottom_chain_rank(graph, i, xi):
    """
    Connect the xi-th vacant top vertex to i' and walk back from i' to the
    first vacant bottom vertex. Returns the rank of that vertex among the
    vacant bottoms. The edge out of i is not inserted yet, so the walk
    cannot close.
    """
    graph.add_edge(graph.kth_vacant_top(xi), i)
    terminal = graph.follow_chain_from_bottom(i).terminal
    return graph.vacancy_index_bottom(terminal)


def _top_chain_rank(graph, i, eta):
    """
    Connect i to the eta-th vacant bottom vertex and walk forward from i
    to the first vacant top vertex. Returns the rank of that vertex among
    the vacant tops. The edge into i' is not inserted yet, so the walk
    cannot close.
    """
    graph.add_edge(i, graph.kth_vacant_bottom(eta))
    terminal = graph.follow_chain_from_top(i).terminal
    return graph.vacancy_index_top(terminal)


def rho1(h):
    """
    The bijection rho1. The output digraph g' is built column by column.
    For a D step the edge into i' is inserted first with xi' = xi, the
    walk back from i' gives the rank eta*, eta' is obtained by moving eta
    to rank eta* (eta=1 -> eta*, 1<eta<=eta* -> eta-1, eta>eta* -> eta),
    and the edge out of i is inserted last. i is a cycle maximum of the
    image exactly when eta = 1.
    """
    check_valid(h)
    _heights = heights(h)

    steps, labels = [], []
    graph = PartialBipartiteGraph()
    for i, (kind, label) in enumerate(h, start=1):
        graph.add_column()

        if kind == StepKinds.D:
            eta_star = _bottom_chain_rank(graph, i, label.xi)
            new_label = Label(label.xi, _shift_from_rank(label.eta, eta_star))
            graph.add_edge(i, graph.kth_vacant_bottom(new_label.eta))
            logger.debug('rho1 step %d: eta*=%d, eta %d -> %d',
                         i, eta_star, label.eta, new_label.eta)
            new_kind = kind
        else:
            new_kind, new_label = _level_step_image(kind, label, _heights[i - 1])
            apply_step(graph, i, new_kind, new_label)

        steps.append(new_kind)
        labels.append(new_label)

    return LaguerreHistory(steps, labels)


def rho1_inv(h):
    """
    Inverse of rho1. The digraph of the input itself is rebuilt; at a D
    step the same walk as in rho1 gives the rank, and eta is recovered
    from eta' (eta'=rank -> 1, eta'<rank -> eta'+1, eta'>rank -> eta').
    """
    check_valid(h)
    _heights = heights(h)

    steps, labels = [], []
    graph = PartialBipartiteGraph()
    for i, (kind, label) in enumerate(h, start=1):
        graph.add_column()

        if kind == StepKinds.D:
            eta_star = _bottom_chain_rank(graph, i, label.xi)
            graph.add_edge(i, graph.kth_vacant_bottom(label.eta))
            new_kind = kind
            new_label = Label(label.xi, _shift_to_rank(label.eta, eta_star))
        else:
            apply_step(graph, i, kind, label)
            new_kind, new_label = _level_step_image(kind, label, _heights[i - 1])

        steps.append(new_kind)
        labels.append(new_label)

    return LaguerreHistory(steps, labels)


def rho2(h):
    """
    The involution rho2. Input digraph g and output digraph g' are built
    side by side. At a D step:

    * in g, the edge out of i goes first; the walk forward from i ends at
      a vacant top of rank xi*, and eta' = 1 if xi = xi*, xi if xi > xi*,
      xi+1 if xi < xi*. The edge into i' is added afterwards.
    * in g', i is connected to the eta'-th vacant bottom; the walk forward
      from i ends at a vacant top of rank eta*, and xi' = eta* if eta = 1,
      eta if eta > eta*, eta-1 if 1 < eta <= eta*. The edge into i' goes
      last.

    The ranks are always taken among the h_{i-1} vacant vertices left of
    column i, so neither walk can close on itself.
    """
    check_valid(h)
    _heights = heights(h)

    steps, labels = [], []
    graph = PartialBipartiteGraph()
    image = PartialBipartiteGraph()
    for i, (kind, label) in enumerate(h, start=1):
        graph.add_column()
        image.add_column()

        if kind == StepKinds.D:
            top = graph.kth_vacant_top(label.xi)
            xi_star = _top_chain_rank(graph, i, label.eta)
            graph.add_edge(top, i)
            new_eta = _shift_to_rank(label.xi, xi_star)

            eta_star = _top_chain_rank(image, i, new_eta)
            new_xi = _shift_from_rank(label.eta, eta_star)
            image.add_edge(image.kth_vacant_top(new_xi), i)

            logger.debug('rho2 step %d: xi*=%d, eta*=%d, (%d,%d) -> (%d,%d)',
                         i, xi_star, eta_star, label.xi, label.eta,
                         new_xi, new_eta)
            new_kind, new_label = kind, Label(new_xi, new_eta)
        else:
            new_kind, new_label = _level_step_image(kind, label, _heights[i - 1])
            apply_step(graph, i, kind, label)
            apply_step(image, i, new_kind, new_label)

        steps.append(new_kind)
        labels.append(new_label)

    return LaguerreHistory(steps, labels)


def phi(p):
    """ decode . rho1 . encode, the bijection behind the first
    equidistribution (Cyc <-> Arecp with Erec, Exc, Rar kept). """
    return decode(rho1(encode(p)))


def phi_cap(p):
    """ decode . rho2 . encode, an involution exchanging Cyc and Arecp. """
    return decode(rho2(encode(p)))
