# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Exhaustive checks of the clique-versus-tree Ramsey bounds."""

import pytest

from hypertree import all_trees, tree_path
from ramsey import verify_lower, verify_upper


@pytest.mark.parametrize("r", [2, 3])
def test_upper_bound_holds_for_every_coloring(r):
    """
    arrange: k = 3 and t = 2 on (k-1)t + 1 = 5 vertices.
    act: analyse all 1024 two-colorings of the complete r-graph.
    assert: every coloring yields a validated witness.
    """
    report = verify_upper(r, 3, 2, tree_path(r, 2), workers=2)

    assert report.total == 1024
    assert report.failures == ()
    assert report.red_cliques + report.blue_trees == report.total


@pytest.mark.slow
def test_upper_bound_for_graphs_with_three_edge_trees():
    """
    arrange: r = 2, k = 3, t = 3 on 7 vertices.
    act: analyse all 2^21 colorings of K_7 against each 3-edge tree.
    assert: no failures.
    """
    for tr in all_trees(2, 3):
        report = verify_upper(2, 3, 3, tr, allow_slow=True, workers=4)

        assert report.total == 1 << 21
        assert report.failures == ()


@pytest.mark.parametrize("r,k,t", [(3, 3, 2), (2, 3, 2)])
def test_lower_bound_construction(r, k, t):
    """
    arrange: parameters with r-1 dividing k-1.
    act: check the disjoint union of gadgets.
    assert: small blue independence, no blue tree and exactly (k-1)t vertices.
    """
    report = verify_lower(r, k, t)

    assert report.red_clique_free
    assert report.blue_independence <= k - 1
    assert report.tree_free
    assert report.n == (k - 1) * t
    assert report.tightness_certified
