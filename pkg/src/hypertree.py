# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""r-tree recognition, preprocessing and generation.

Contains:
 - RTree: a hypergraph checked to be a connected, linear, Berge-acyclic r-graph
 - PreprocessedTree: BFS edge labels e_1..e_t and minimal-label vertex colors
 - generators for loose paths, stars, seeded random trees and small enumerations.
"""

# pylint: disable=no-self-argument
from __future__ import annotations

import itertools
import logging
import random
from collections import deque
from enum import Enum
from typing import Dict, List, Optional, Set, Tuple, Union

from pydantic import BaseModel, ConfigDict, model_validator

from errors import InvalidTreeError, InvariantViolationError
from hypergraph import Edge, Hypergraph, connected_components, make_hypergraph

logger = logging.getLogger(__name__)

MAX_ENUMERATION_EDGES = 4


class RejectionReason(str, Enum):
    """Why a hypergraph is not an r-tree."""

    NOT_CONNECTED = "not-connected"
    NOT_LINEAR = "not-linear"
    HAS_BERGE_CYCLE = "has-berge-cycle"
    WRONG_VERTEX_COUNT = "wrong-vertex-count"


def _rejection_reason(h: Hypergraph) -> Optional[RejectionReason]:
    """Return why h is not an r-tree, or None when it is one.

    Connectivity is judged on the vertices covered by edges; isolated vertices only
    break the vertex count. A connected linear r-graph with t edges covers at most
    1 + (r-1)t vertices, with equality exactly when it has no Berge cycle.
    """
    components = [c for c in connected_components(h) if h.degree(min(c)) > 0]
    if len(components) != 1:
        return RejectionReason.NOT_CONNECTED

    pairs: Set[Tuple[int, int]] = set()
    for edge in h.edges:
        for pair in itertools.combinations(edge, 2):
            if pair in pairs:
                return RejectionReason.NOT_LINEAR
            pairs.add(pair)

    expected = 1 + (h.r - 1) * h.m
    if len(components[0]) < expected:
        return RejectionReason.HAS_BERGE_CYCLE
    if h.n != expected:
        return RejectionReason.WRONG_VERTEX_COUNT
    return None


class RTree(BaseModel):
    """An r-uniform hypertree.

    Attributes:
        model_config: Pydantic config, frozen and forbidding extra fields.
        tree: The underlying hypergraph.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    tree: Hypergraph

    @model_validator(mode="after")
    def _validate_tree(self) -> RTree:
        """Validate that the hypergraph is a non-empty r-tree."""
        if self.tree.m == 0:
            raise ValueError("an r-tree needs at least one edge")
        reason = _rejection_reason(self.tree)
        if reason is not None:
            raise ValueError(f"hypergraph is not an r-tree: {reason.value}")
        return self

    @property
    def t(self) -> int:
        """Return the edge count."""
        return self.tree.m

    @property
    def r(self) -> int:
        """Return the uniformity."""
        return self.tree.r

    @property
    def n(self) -> int:
        """Return the vertex count."""
        return self.tree.n


class PreprocessedTree(BaseModel):
    """An r-tree with BFS edge labels and minimal-label vertex colors.

    Labels are 1-based: label i names the tree edge ``edge_order[i - 1]``.

    Attributes:
        model_config: Pydantic config, frozen and forbidding extra fields.
        rtree: The labeled tree.
        edge_order: Tree edge index of each label, label 1 first.
        vertex_color: Minimal label of an edge containing each tree vertex.
        attachments: Attachment vertex of each label; -1 for label 1.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    rtree: RTree
    edge_order: Tuple[int, ...]
    vertex_color: Tuple[int, ...]
    attachments: Tuple[int, ...]

    @property
    def t(self) -> int:
        """Return the number of labels."""
        return self.rtree.t

    @property
    def root_edge(self) -> int:
        """Return the tree edge index labeled e_1."""
        return self.edge_order[0]

    def edge(self, label: int) -> Edge:
        """Return the vertices of the edge with the given label."""
        return self.rtree.tree.edges[self.edge_order[label - 1]]

    def attachment(self, label: int) -> int:
        """Return the vertex e_label shares with e_1..e_{label-1}.

        Raises:
            InvalidTreeError: For label 1, which has no attachment vertex.
        """
        if label < 2:
            raise InvalidTreeError("the root edge has no attachment vertex")
        return self.attachments[label - 1]

    def parent(self, label: int) -> int:
        """Return the lowest label containing the attachment vertex of label."""
        return self.vertex_color[self.attachment(label)]

    def label_of(self, edge_index: int) -> int:
        """Return the label of a tree edge index."""
        return self.edge_order.index(edge_index) + 1


def recognize_rtree(h: Hypergraph) -> Union[RTree, RejectionReason]:
    """Recognize an r-tree by connectivity, linearity and the vertex count identity.

    Args:
        h: The candidate hypergraph.

    Returns:
        The RTree, or the first failed criterion.

    Raises:
        InvalidTreeError: If h has no edges.
    """
    if h.m == 0:
        raise InvalidTreeError("cannot recognize an r-tree without edges")
    reason = _rejection_reason(h)
    if reason is not None:
        logger.debug("Rejected %s-graph with %s edges: %s", h.r, h.m, reason.value)
        return reason
    return RTree(tree=h)


def canonical_root(tr: RTree) -> int:
    """Return the index of the lexicographically smallest tree edge."""
    return min(range(tr.t), key=lambda index: tr.tree.edges[index])


def _bfs_order(tree: Hypergraph, root: int) -> List[int]:
    """Order edges breadth-first from root, frontier edges in canonical order."""
    order = [root]
    seen = {root}
    queue = deque([root])
    while queue:
        current = queue.popleft()
        frontier = {
            neighbor
            for v in tree.edges[current]
            for neighbor in tree.incidence[v]
            if neighbor not in seen
        }
        for neighbor in sorted(frontier, key=lambda index: tree.edges[index]):
            seen.add(neighbor)
            order.append(neighbor)
            queue.append(neighbor)
    return order


def _check_preprocessing(pt: PreprocessedTree) -> None:
    """Raise InvariantViolationError unless the labeling satisfies every invariant."""
    r = pt.rtree.r
    covered: Set[int] = set(pt.edge(1))
    if any(pt.vertex_color[v] != 1 for v in pt.edge(1)):
        raise InvariantViolationError("root edge vertices must all have color 1")
    for label in range(2, pt.t + 1):
        edge = pt.edge(label)
        shared = covered.intersection(edge)
        if len(shared) != 1:
            raise InvariantViolationError(
                f"edge e_{label} meets earlier edges in {len(shared)} vertices"
            )
        if sum(1 for v in edge if pt.vertex_color[v] == label) != r - 1:
            raise InvariantViolationError(f"edge e_{label} does not own r-1 vertices")
        attachment = pt.attachment(label)
        if attachment not in shared or pt.vertex_color[attachment] >= label:
            raise InvariantViolationError(f"edge e_{label} has a bad attachment vertex")
        # the tree path back to e_1 follows parents, whose labels must decrease
        current = label
        while current != 1:
            parent = pt.parent(current)
            if parent >= current:
                raise InvariantViolationError(f"path from e_{label} to e_1 is not monotone")
            current = parent
        covered.update(edge)


def preprocess(tr: RTree, root_choice: Optional[int] = None) -> PreprocessedTree:
    """Label the tree edges breadth-first from root_choice and color the vertices.

    Args:
        tr: The r-tree.
        root_choice: Tree edge index labeled e_1; the canonically smallest edge when None.

    Returns:
        The preprocessed tree; every invariant is checked before returning.

    Raises:
        InvalidTreeError: If root_choice is not an edge index of the tree.
    """
    if root_choice is None:
        root_choice = canonical_root(tr)
    if not 0 <= root_choice < tr.t:
        raise InvalidTreeError(f"root edge {root_choice} outside 0..{tr.t - 1}")

    tree = tr.tree
    order = _bfs_order(tree, root_choice)
    colors = [0] * tree.n
    attachments = [-1]
    for label, index in enumerate(order, start=1):
        for v in tree.edges[index]:
            if colors[v] == 0:
                colors[v] = label
        if label > 1:
            attachments.append(next(v for v in tree.edges[index] if colors[v] < label))

    pt = PreprocessedTree(
        rtree=tr,
        edge_order=tuple(order),
        vertex_color=tuple(colors),
        attachments=tuple(attachments),
    )
    _check_preprocessing(pt)
    return pt


def _check_parameters(r: int, t: int) -> None:
    """Raise InvalidTreeError for r < 2 or t < 1."""
    if r < 2:
        raise InvalidTreeError(f"uniformity must be at least 2 instead of {r}")
    if t < 1:
        raise InvalidTreeError(f"edge count must be at least 1 instead of {t}")


def _as_rtree(n: int, r: int, edges: List[Edge]) -> RTree:
    """Wrap generated edges, re-checking them with the recognizer."""
    recognized = recognize_rtree(make_hypergraph(n, r, edges))
    if isinstance(recognized, RejectionReason):
        raise InvariantViolationError(f"generated tree rejected: {recognized.value}")
    return recognized


def tree_path(r: int, t: int) -> RTree:
    """Return the loose path with t edges, consecutive edges sharing one vertex.

    Raises:
        InvalidTreeError: If r < 2 or t < 1.
    """
    _check_parameters(r, t)
    edges = [tuple(range(i * (r - 1), i * (r - 1) + r)) for i in range(t)]
    return _as_rtree(1 + (r - 1) * t, r, edges)


def tree_star(r: int, t: int) -> RTree:
    """Return the star with t edges all sharing vertex 0.

    Raises:
        InvalidTreeError: If r < 2 or t < 1.
    """
    _check_parameters(r, t)
    edges = [(0, *range(1 + (r - 1) * i, 1 + (r - 1) * (i + 1))) for i in range(t)]
    return _as_rtree(1 + (r - 1) * t, r, edges)


def random_tree(r: int, t: int, seed: int) -> RTree:
    """Grow a random r-tree: each new edge attaches r-1 fresh vertices at a random vertex.

    Args:
        r: Uniformity.
        t: Edge count.
        seed: Seed of the call-local generator; equal seeds give equal trees.

    Raises:
        InvalidTreeError: If r < 2 or t < 1.
    """
    _check_parameters(r, t)
    rng = random.Random(seed)  # nosec B311
    n = r
    edges: List[Edge] = [tuple(range(r))]
    for _ in range(t - 1):
        attachment = rng.randrange(n)
        edges.append((attachment, *range(n, n + r - 1)))
        n += r - 1
    return _as_rtree(n, r, edges)


def _attachment_candidates(edges: List[Edge], n: int) -> List[int]:
    """Return hub vertices plus the lowest leaf of each edge.

    Degree-one vertices of the same edge are interchangeable, so attaching at any
    one of them covers the others.
    """
    degree: Dict[int, int] = {v: 0 for v in range(n)}
    for edge in edges:
        for v in edge:
            degree[v] += 1
    candidates = {v for v in range(n) if degree[v] > 1}
    for edge in edges:
        leaves = [v for v in edge if degree[v] == 1]
        if leaves:
            candidates.add(min(leaves))
    return sorted(candidates)


def all_trees(r: int, t: int) -> List[RTree]:
    """Enumerate attachment-labeled r-trees with t edges.

    Every isomorphism class is covered at least once; labeled duplicates are removed.

    Raises:
        InvalidTreeError: If r < 2, t < 1 or t exceeds MAX_ENUMERATION_EDGES.
    """
    _check_parameters(r, t)
    if t > MAX_ENUMERATION_EDGES:
        raise InvalidTreeError(
            f"tree enumeration supports at most {MAX_ENUMERATION_EDGES} edges, got {t}"
        )

    found: Dict[Tuple[Edge, ...], List[Edge]] = {}

    def grow(edges: List[Edge], n: int) -> None:
        if len(edges) == t:
            found.setdefault(tuple(sorted(edges)), list(edges))
            return
        for attachment in _attachment_candidates(edges, n):
            grow([*edges, (attachment, *range(n, n + r - 1))], n + r - 1)

    grow([tuple(range(r))], r)
    return [_as_rtree(1 + (r - 1) * t, r, edges) for edges in found.values()]
