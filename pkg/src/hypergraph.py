# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Uniform hypergraph model, colorings and validation primitives.

Contains:
 - Hypergraph: pydantic model of an r-uniform hypergraph on vertices 0..n-1
 - Coloring: palette assignment of integers 1..palette to every vertex
 - Embedding: vertex and edge correspondence from a pattern into a host
 - the validation primitives every other module builds on (properness,
   monochromatic edges, connectivity, degrees, embedding validity).
"""

# pylint: disable=no-self-argument
from __future__ import annotations

import logging
from typing import Any, Dict, FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx
from pydantic import (
    BaseModel,
    ConfigDict,
    PrivateAttr,
    ValidationError,
    ValidationInfo,
    field_validator,
    model_validator,
)

from errors import InvalidColoringError, InvalidHypergraphError

logger = logging.getLogger(__name__)

Edge = Tuple[int, ...]


def format_validation_error(exc: ValidationError) -> str:
    """Format each pydantic error as "<field>: <message>".

    Args:
        exc: The validation error raised by a model constructor.

    Returns:
        The comma-separated error summary.
    """
    return ", ".join(f"{'.'.join(map(str, err['loc']))}: {err['msg']}" for err in exc.errors())


class Hypergraph(BaseModel):
    """An r-uniform hypergraph on the vertices 0..n-1.

    Attributes:
        model_config: Pydantic config, frozen and forbidding extra fields.
        n: Vertex count.
        r: Uniformity, the size of every edge.
        edges: Edges as sorted vertex tuples, in insertion order.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    n: int
    r: int
    edges: Tuple[Edge, ...] = ()

    _incidence: Tuple[Tuple[int, ...], ...] = PrivateAttr(default=())

    @field_validator("n")
    def _validate_n(cls, n: int) -> int:  # noqa: N805
        """Validate that the vertex count is not negative."""
        if n < 0:
            raise ValueError(f"vertex count must be non-negative instead of {n}")
        return n

    @field_validator("r")
    def _validate_r(cls, r: int) -> int:  # noqa: N805
        """Validate that the uniformity is at least 2."""
        if r < 2:
            raise ValueError(f"uniformity must be at least 2 instead of {r}")
        return r

    @field_validator("edges")
    def _validate_edges(
        cls,  # noqa: N805
        edges: Tuple[Edge, ...],
        info: ValidationInfo,
    ) -> Tuple[Edge, ...]:
        """Canonicalize edges and reject wrong sizes, foreign vertices and duplicates."""
        n = info.data.get("n")
        r = info.data.get("r")
        if n is None or r is None:
            return edges

        canonical: List[Edge] = []
        seen: Dict[Edge, int] = {}
        for position, edge in enumerate(edges):
            vertices = tuple(sorted(edge))
            if len(set(vertices)) != len(vertices):
                raise ValueError(f"edge {position} repeats a vertex: {vertices}")
            if len(vertices) != r:
                raise ValueError(f"edge {position} has {len(vertices)} vertices, expected {r}")
            for v in vertices:
                if not 0 <= v < n:
                    raise ValueError(f"edge {position} has vertex {v} outside 0..{n - 1}")
            if vertices in seen:
                raise ValueError(
                    f"duplicate edge {vertices} at positions {seen[vertices]} and {position}"
                )
            seen[vertices] = position
            canonical.append(vertices)
        return tuple(canonical)

    def model_post_init(self, __context: Any) -> None:
        """Build the vertex incidence table."""
        table: List[List[int]] = [[] for _ in range(self.n)]
        for index, edge in enumerate(self.edges):
            for v in edge:
                table[v].append(index)
        self._incidence = tuple(tuple(row) for row in table)

    @property
    def m(self) -> int:
        """Return the number of edges."""
        return len(self.edges)

    @property
    def incidence(self) -> Tuple[Tuple[int, ...], ...]:
        """Return, per vertex, the increasing indices of its incident edges."""
        return self._incidence

    def degree(self, v: int) -> int:
        """Return the number of edges containing vertex v.

        Args:
            v: The vertex index.
        """
        return len(self._incidence[v])

    def prefix(self, k: int) -> Hypergraph:
        """Return the hypergraph on the same vertices with the first k edges.

        Args:
            k: Number of leading edges to keep.
        """
        return Hypergraph(n=self.n, r=self.r, edges=self.edges[:k])


class Coloring(BaseModel):
    """A vertex coloring with palette {1, ..., palette}.

    Attributes:
        model_config: Pydantic config, frozen and forbidding extra fields.
        colors: Color of vertex i at position i.
        palette: The palette bound t.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    colors: Tuple[int, ...]
    palette: int

    @field_validator("palette")
    def _validate_palette(cls, palette: int) -> int:  # noqa: N805
        """Validate that the palette has at least one color."""
        if palette < 1:
            raise ValueError(f"palette must be at least 1 instead of {palette}")
        return palette

    @model_validator(mode="after")
    def _validate_range(self) -> Coloring:
        """Validate that every color lies in 1..palette."""
        for v, color in enumerate(self.colors):
            if not 1 <= color <= self.palette:
                raise ValueError(f"vertex {v} has color {color} outside 1..{self.palette}")
        return self

    def classes(self) -> Tuple[Tuple[int, ...], ...]:
        """Return the vertices of each color, class i holding color i + 1."""
        buckets: List[List[int]] = [[] for _ in range(self.palette)]
        for v, color in enumerate(self.colors):
            buckets[color - 1].append(v)
        return tuple(tuple(bucket) for bucket in buckets)


class Embedding(BaseModel):
    """A pattern-to-host correspondence; validity is checked by embedding_is_valid.

    Attributes:
        model_config: Pydantic config, frozen and forbidding extra fields.
        vertex_map: Host vertex of pattern vertex i at position i.
        edge_map: Host edge index of pattern edge j at position j.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    vertex_map: Tuple[int, ...]
    edge_map: Tuple[int, ...]


def make_hypergraph(
    n: int, r: int, edges: Iterable[Iterable[int]], sort_edges: bool = False
) -> Hypergraph:
    """Build and validate a hypergraph.

    Args:
        n: Vertex count.
        r: Edge size.
        edges: Vertex collections, one per edge.
        sort_edges: Sort the edge list lexicographically (canonical construction).

    Returns:
        The validated hypergraph.

    Raises:
        InvalidHypergraphError: On a wrong edge size, a vertex out of range or a duplicate edge.
    """
    canonical = [tuple(sorted(edge)) for edge in edges]
    if sort_edges:
        canonical.sort()
    try:
        return Hypergraph(n=n, r=r, edges=tuple(canonical))
    except ValidationError as exc:
        raise InvalidHypergraphError(format_validation_error(exc)) from exc


def _check_length(h: Hypergraph, c: Coloring) -> None:
    """Raise when the coloring does not cover exactly the vertices of h."""
    if len(c.colors) != h.n:
        raise InvalidColoringError(
            f"coloring has {len(c.colors)} entries but the hypergraph has {h.n} vertices"
        )


def is_monochromatic(edge: Edge, colors: Sequence[int]) -> bool:
    """Return whether every vertex of edge carries the same color.

    Args:
        edge: The vertex tuple.
        colors: Color per vertex.
    """
    first = colors[edge[0]]
    return all(colors[v] == first for v in edge[1:])


def is_proper(h: Hypergraph, c: Coloring) -> bool:
    """Return whether no edge of h is monochromatic under c.

    Raises:
        InvalidColoringError: If the coloring length differs from the vertex count.
    """
    _check_length(h, c)
    return not any(is_monochromatic(edge, c.colors) for edge in h.edges)


def monochromatic_edges(h: Hypergraph, c: Coloring) -> List[int]:
    """Return the increasing indices of the edges of h that are monochromatic under c.

    Raises:
        InvalidColoringError: If the coloring length differs from the vertex count.
    """
    _check_length(h, c)
    return [index for index, edge in enumerate(h.edges) if is_monochromatic(edge, c.colors)]


def connected_components(h: Hypergraph) -> List[FrozenSet[int]]:
    """Partition the vertices into classes mutually reachable through shared edges.

    Returns:
        The components ordered by their smallest vertex; isolated vertices are singletons.
    """
    graph = nx.Graph()
    graph.add_nodes_from(range(h.n))
    for edge in h.edges:
        graph.add_edges_from(zip(edge, edge[1:]))
    return sorted((frozenset(c) for c in nx.connected_components(graph)), key=min)


def min_degree(h: Hypergraph) -> int:
    """Return the minimum number of edges at a vertex (0 for the empty vertex set)."""
    if h.n == 0:
        return 0
    return min(len(row) for row in h.incidence)


def embedding_is_valid(pattern: Hypergraph, host: Hypergraph, emb: Embedding) -> bool:
    """Check an embedding of pattern into host.

    The vertex map must be total, in range and injective; the edge map must be total,
    in range and injective, and every pattern edge must land exactly on its mapped
    host edge.

    Args:
        pattern: The hypergraph being embedded.
        host: The hypergraph receiving the copy.
        emb: The correspondence to check.

    Returns:
        True when every condition holds.
    """
    if len(emb.vertex_map) != pattern.n or len(emb.edge_map) != pattern.m:
        return False
    if any(not 0 <= hv < host.n for hv in emb.vertex_map):
        return False
    if len(set(emb.vertex_map)) != len(emb.vertex_map):
        return False
    if any(not 0 <= he < host.m for he in emb.edge_map):
        return False
    if len(set(emb.edge_map)) != len(emb.edge_map):
        return False
    for index, edge in enumerate(pattern.edges):
        image = sorted(emb.vertex_map[v] for v in edge)
        if tuple(image) != host.edges[emb.edge_map[index]]:
            return False
    return True
