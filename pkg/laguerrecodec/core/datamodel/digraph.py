# -*- coding: utf-8 -*-
"""
The two-row bipartite digraph of a permutation, built one column at a
time. Top vertices are 1..cols, bottom vertices 1'..cols', and an edge
j -> k' means sigma(j) = k. A vertex without its edge is vacant.
"""
from typing import Dict, NamedTuple
from .permutation import Permutation


class ChainResult(NamedTuple):
    """ End of a chain walk. terminal is a column number; when closed is
    False it is a vacant vertex of the row the walk was reading. """
    terminal: int
    closed: bool


class PartialBipartiteGraph:
    """ Incremental restriction g_i of the bipartite digraph. """
    def __init__(self, cols=0):
        self.cols = 0
        self.top_out: Dict[int, int] = {}
        self.bottom_in: Dict[int, int] = {}

        for _ in range(cols):
            self.add_column()

    @staticmethod
    def from_permutation(p):
        """ The complete graph of a permutation. """
        _self = PartialBipartiteGraph(len(p))
        for j, k in enumerate(p, start=1):
            _self.add_edge(j, k)
        return _self

    def copy(self):
        _copy = PartialBipartiteGraph()
        _copy.cols = self.cols
        _copy.top_out = dict(self.top_out)
        _copy.bottom_in = dict(self.bottom_in)
        return _copy

    def add_column(self):
        """ Append column cols+1 with both of its vertices vacant. Returns
        the graph itself so that calls can be chained. """
        self.cols += 1
        return self

    def add_edge(self, top, bottom):
        """ Insert the edge top -> bottom'. """
        if not (1 <= top <= self.cols and 1 <= bottom <= self.cols):
            raise ValueError(
                f'Edge {top}->{bottom}\' outside of the {self.cols} columns')
        if top in self.top_out:
            raise ValueError(
                f'Top vertex {top} already has the edge '
                f'{top}->{self.top_out[top]}\'')
        if bottom in self.bottom_in:
            raise ValueError(
                f'Bottom vertex {bottom}\' already has the edge '
                f'{self.bottom_in[bottom]}->{bottom}\'')

        self.top_out[top] = bottom
        self.bottom_in[bottom] = top
        return self

    def has_edge(self, top, bottom):
        return self.top_out.get(top) == bottom

    def is_vacant_top(self, top):
        return 1 <= top <= self.cols and top not in self.top_out

    def is_vacant_bottom(self, bottom):
        return 1 <= bottom <= self.cols and bottom not in self.bottom_in

    def vacant_tops(self):
        """ Vacant top vertices from left to right. """
        return [j for j in range(1, self.cols + 1) if j not in self.top_out]

    def vacant_bottoms(self):
        """ Vacant bottom vertices from left to right. """
        return [k for k in range(1, self.cols + 1) if k not in self.bottom_in]

    def height(self):
        """ Number of vacant top vertices, which equals the number of
        vacant bottom vertices. """
        return self.cols - len(self.top_out)

    def kth_vacant_top(self, k):
        _vacant = self.vacant_tops()
        if not 1 <= k <= len(_vacant):
            raise IndexError(
                f'No {k}-th vacant top vertex ({len(_vacant)} vacant)')
        return _vacant[k - 1]

    def kth_vacant_bottom(self, k):
        _vacant = self.vacant_bottoms()
        if not 1 <= k <= len(_vacant):
            raise IndexError(
                f'No {k}-th vacant bottom vertex ({len(_vacant)} vacant)')
        return _vacant[k - 1]

    def vacancy_index_top(self, top):
        """ 1-based rank of a vacant top vertex among the vacant tops. """
        if not self.is_vacant_top(top):
            raise ValueError(f'Top vertex {top} is not vacant')
        return sum(1 for j in range(1, top) if j not in self.top_out) + 1

    def vacancy_index_bottom(self, bottom):
        """ 1-based rank of a vacant bottom vertex among the vacant bottoms. """
        if not self.is_vacant_bottom(bottom):
            raise ValueError(f'Bottom vertex {bottom}\' is not vacant')
        return sum(1 for k in range(1, bottom) if k not in self.bottom_in) + 1

    def follow_chain_from_bottom(self, start):
        """
        Walk backwards from the bottom vertex start': take the top vertex
        v1 with v1 -> start', continue from v1', and so on. Stops at the
        first bottom vertex without an incoming edge, or when the walk
        reaches the top vertex of the starting column (closed chain).
        """
        current = start
        while True:
            top = self.bottom_in.get(current)
            if top is None:
                return ChainResult(terminal=current, closed=False)
            if top == start:
                return ChainResult(terminal=start, closed=True)
            current = top

    def follow_chain_from_top(self, start):
        """
        Walk forwards from the top vertex start: start -> v1', then from
        the top vertex v1, and so on. Stops at the first top vertex without
        an outgoing edge, or when an edge enters start' (closed chain).
        """
        current = start
        while True:
            bottom = self.top_out.get(current)
            if bottom is None:
                return ChainResult(terminal=current, closed=False)
            if bottom == start:
                return ChainResult(terminal=start, closed=True)
            current = bottom

    def restrict(self, i):
        """ The restriction g_i to the columns 1..i. """
        if not 0 <= i <= self.cols:
            raise IndexError(f'Cannot restrict {self.cols} columns to {i}')
        _restricted = PartialBipartiteGraph(i)
        for top, bottom in self.top_out.items():
            if top <= i and bottom <= i:
                _restricted.add_edge(top, bottom)
        return _restricted

    def is_complete(self):
        return len(self.top_out) == self.cols

    def to_permutation(self):
        """ The permutation of a complete graph. """
        if not self.is_complete():
            raise ValueError(
                f'Incomplete graph: {self.height()} vacant vertex pairs left')
        return Permutation(self.top_out[j] for j in range(1, self.cols + 1))

    def __len__(self):
        return self.cols

    def __eq__(self, other):
        if not isinstance(other, PartialBipartiteGraph):
            return False
        return self.cols == other.cols and self.top_out == other.top_out

    def __repr__(self):
        return f'PartialBipartiteGraph({self.cols} columns, {len(self.top_out)} edges)'

    def __str__(self):
        _edges = ', '.join(f'{j}->{k}\'' for j, k in sorted(self.top_out.items()))
        return f'Graph with {self.cols} columns: {_edges}'
