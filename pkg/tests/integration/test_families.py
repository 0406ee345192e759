# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Oracle checks of the named hypergraph families."""

import math

import pytest

from constructions import complete_r_graph, star_example, tight_gadget
from hypergraph import min_degree
from hypertree import all_trees, tree_path
from oracles import brute_contains_tree, chromatic_number, independence_number


@pytest.mark.parametrize("r,t", [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)])
def test_tight_gadget_is_a_tightness_pair(r, t):
    """
    arrange: the complete r-graph on (r-1)t vertices.
    act: compute its chromatic number and search for every t-edge r-tree.
    assert: chromatic number exactly t and no tree embeds.
    """
    h = tight_gadget(r, t)

    assert chromatic_number(h) == t
    for tr in all_trees(r, t):
        assert not brute_contains_tree(h, tr).contains


def test_star_example_degree_grows_without_a_loose_3_path():
    """
    arrange: star examples on 6, 7 and 8 vertices.
    act: compute minimum degrees and search for the loose 3-path.
    assert: minimum degree n-2, strictly increasing, and never a copy.
    """
    degrees = []
    for n in (6, 7, 8):
        h = star_example(n)
        degrees.append(min_degree(h))
        assert not brute_contains_tree(h, tree_path(3, 3)).contains

    assert degrees == [4, 5, 6]


@pytest.mark.parametrize("r", [2, 3, 4])
def test_complete_r_graph_chromatic_law(r):
    """
    arrange: complete r-graphs on r..9 vertices.
    act: compute their chromatic numbers.
    assert: each equals ceil(n / (r-1)).
    """
    for n in range(r, 10):
        assert chromatic_number(complete_r_graph(n, r)) == math.ceil(n / (r - 1))


def test_largest_color_class_bounds_independence(corpus_hosts):
    """
    arrange: the bundled corpus.
    act: compute each independence number.
    assert: it is at least n divided by the chromatic number, rounded up.
    """
    for case in corpus_hosts.values():
        h = case.host
        assert independence_number(h).size >= math.ceil(h.n / case.chi)
