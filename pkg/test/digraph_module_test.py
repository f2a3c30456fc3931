# -*- coding: utf-8 -*-
import random
import pytest

from laguerrecodec.core.codec import decode_graph, encode
from laguerrecodec.core.datamodel.digraph import PartialBipartiteGraph
from laguerrecodec.core.datamodel.history import heights
from laguerrecodec.core.datamodel.permutation import Permutation, permutations, profile
from running_example_data import OMEGA, SIGMA, rho1_history, sigma_history


def test_add_column():
    g = PartialBipartiteGraph()
    assert g.add_column() is g
    assert g.vacant_tops() == [1] and g.vacant_bottoms() == [1]

    g.add_column()
    assert g.vacant_tops() == [1, 2] and g.vacant_bottoms() == [1, 2]
    assert g.height() == 2


def test_kth_vacant():
    g = PartialBipartiteGraph(2)
    assert g.kth_vacant_top(2) == 2
    with pytest.raises(IndexError):
        g.kth_vacant_top(3)
    with pytest.raises(IndexError):
        g.kth_vacant_bottom(0)


def test_kth_vacant_while_decoding():
    # Vacancies of g_9 before the edges of step 9 are inserted
    g = decode_graph(sigma_history()).restrict(8).add_column()
    assert g.kth_vacant_top(1) == 2
    assert g.kth_vacant_bottom(1) == 6


def test_vacancy_index():
    g = PartialBipartiteGraph(1)
    assert g.vacancy_index_top(1) == 1

    g = PartialBipartiteGraph(5)
    g.add_edge(1, 1).add_edge(2, 2).add_edge(4, 3)
    assert g.vacant_tops() == [3, 5]
    assert g.vacancy_index_top(5) == 2
    with pytest.raises(ValueError):
        g.vacancy_index_top(4)
    with pytest.raises(ValueError):
        g.vacancy_index_bottom(3)


def test_add_edge_errors():
    g = PartialBipartiteGraph(2)
    g.add_edge(1, 1)
    assert g.has_edge(1, 1)
    with pytest.raises(ValueError):
        g.add_edge(2, 1)
    with pytest.raises(ValueError):
        g.add_edge(1, 2)
    with pytest.raises(ValueError):
        g.add_edge(3, 2)


def test_chains():
    g = PartialBipartiteGraph(1).add_edge(1, 1)
    assert g.follow_chain_from_bottom(1) == (1, True)
    assert g.follow_chain_from_top(1) == (1, True)

    g = PartialBipartiteGraph(1)
    assert g.follow_chain_from_bottom(1) == (1, False)
    assert g.follow_chain_from_top(1) == (1, False)

    # 3 -> 1', 1 -> 2': walking back from 2' reaches the vacant 3'
    g = PartialBipartiteGraph(3).add_edge(3, 1).add_edge(1, 2)
    assert g.follow_chain_from_bottom(2) == (3, False)
    assert g.follow_chain_from_top(3) == (2, False)


def test_chain_closes_at_cycle_maximum_of_image():
    # In the graph of omega, 11 closes the cycle (1,4,11,6,10,5)
    g = PartialBipartiteGraph.from_permutation(Permutation(OMEGA)).restrict(11)
    assert g.follow_chain_from_bottom(11).closed
    assert g.follow_chain_from_top(11).closed


def test_to_permutation():
    assert decode_graph(sigma_history()).to_permutation() == Permutation(SIGMA)
    assert decode_graph(rho1_history()).to_permutation() == Permutation(OMEGA)
    assert PartialBipartiteGraph(1).add_edge(1, 1).to_permutation() == Permutation([1])
    with pytest.raises(ValueError):
        PartialBipartiteGraph(2).add_edge(1, 2).to_permutation()


def test_edge_order_does_not_matter():
    p = Permutation(SIGMA)
    edges = list(enumerate(p, start=1))
    random.Random(17).shuffle(edges)

    g = PartialBipartiteGraph(len(p))
    for top, bottom in edges:
        g.add_edge(top, bottom)
    assert g == PartialBipartiteGraph.from_permutation(p)
    assert g.to_permutation() == p


def test_restrict_to_height_zero_prefix():
    assert decode_graph(sigma_history()).restrict(11).height() == 0


@pytest.mark.parametrize('n', range(1, 7))
def test_heights_and_cycle_maxima(n):
    for p in permutations(n):
        g = PartialBipartiteGraph.from_permutation(p)
        _heights = heights(encode(p))
        cyc = profile(p).cyc
        for i in range(1, n + 1):
            g_i = g.restrict(i)
            assert len(g_i.vacant_tops()) == len(g_i.vacant_bottoms()) == _heights[i]
            is_max = g_i.has_edge(i, i) or g_i.follow_chain_from_bottom(i).closed
            assert is_max == (i in cyc)
