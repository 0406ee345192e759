# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Fixtures for unit tests."""

from pathlib import Path

import pytest

from hypergraph import Hypergraph, make_hypergraph
from hypertree import RTree, recognize_rtree


@pytest.fixture
def write_file(tmp_path):
    """Return a helper writing text to a file under tmp_path."""

    def _write(name: str, text: str) -> Path:
        """Write text to tmp_path/name.

        Args:
            name: File name.
            text: File content.

        Returns:
            The path written.
        """
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write


@pytest.fixture
def two_edge_tree() -> RTree:
    """Return the 3-tree with two edges meeting in one vertex."""
    tr = recognize_rtree(make_hypergraph(5, 3, [(0, 1, 2), (2, 3, 4)]))
    assert isinstance(tr, RTree)
    return tr


@pytest.fixture
def loose_path() -> Hypergraph:
    """Return the 3-uniform loose path with three edges."""
    return make_hypergraph(7, 3, [(0, 1, 2), (2, 3, 4), (4, 5, 6)])


@pytest.fixture
def triangle() -> Hypergraph:
    """Return the triangle graph."""
    return make_hypergraph(3, 2, [(0, 1), (1, 2), (0, 2)])
