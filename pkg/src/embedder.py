# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Certifying tree embedder.

Given a host r-graph H and an r-tree T with t edges, produce either a proper
t-coloring of H or a copy of T in H. Host edges are inserted one at a time onto
the edgeless host; whenever an insertion creates a monochromatic edge, the
recoloring loop repairs it:

 1. grow a maximal colored copy of a subtree of T, seeded with e_1 on the bad edge;
 2. if it is complete, the host contains T; otherwise recolor the image of the
    attachment vertex of the lowest unplaced label s to color s, stopping once the
    recolored vertex lies in the bad edge.

The maximality and termination arguments of the loop are re-checked after every
recolor and raise InvariantViolationError if they ever fail.
"""

# pylint: disable=no-self-argument
from __future__ import annotations

import logging
from typing import Annotated, Callable, Dict, List, Literal, Optional, Sequence, Set, Tuple, Union

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator

from errors import InvalidColoringError, InvariantViolationError, ParameterMismatchError
from hypergraph import (
    Coloring,
    Embedding,
    Hypergraph,
    embedding_is_valid,
    is_monochromatic,
    is_proper,
    monochromatic_edges,
)
from hypertree import PreprocessedTree, RTree, preprocess

logger = logging.getLogger(__name__)


class ColoredCopy(BaseModel):
    """A color-preserving injective copy of a subtree T' of T containing e_1.

    Attributes:
        model_config: Pydantic config forbidding extra fields.
        pt: The preprocessed pattern tree.
        placed: Labels of the tree edges in T'.
        phi: Host vertex of each placed tree vertex.
        host_edges: Host edge index of each placed label.
    """

    model_config = ConfigDict(extra="forbid")

    pt: PreprocessedTree
    placed: Set[int] = Field(default_factory=set)
    phi: Dict[int, int] = Field(default_factory=dict)
    host_edges: Dict[int, int] = Field(default_factory=dict)

    def image(self) -> Set[int]:
        """Return the host vertices used by the copy."""
        return set(self.phi.values())

    def is_complete(self) -> bool:
        """Return whether every label of the tree is placed."""
        return len(self.placed) == self.pt.t

    def to_embedding(self) -> Embedding:
        """Return the copy as an embedding of the whole tree.

        Raises:
            InvariantViolationError: If some label is still unplaced.
        """
        if not self.is_complete():
            raise InvariantViolationError("only a complete copy converts to an embedding")
        tree = self.pt.rtree.tree
        return Embedding(
            vertex_map=tuple(self.phi[v] for v in range(tree.n)),
            edge_map=tuple(self.host_edges[self.pt.label_of(index)] for index in range(tree.m)),
        )


class RecolorStep(BaseModel):
    """One recoloring of the image of an attachment vertex.

    Attributes:
        model_config: Pydantic config, frozen and forbidding extra fields.
        s: Label of the blocking tree edge e_s.
        v: The attachment tree vertex of e_s.
        host_vertex: phi(v).
        old_color: Color of phi(v) before the step.
        new_color: Color of phi(v) after the step, always s.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    s: int
    v: int
    host_vertex: int
    old_color: int
    new_color: int

    @model_validator(mode="after")
    def _validate_increase(self) -> RecolorStep:
        """Validate that the step raises the color to s."""
        if self.new_color != self.s:
            raise ValueError(f"new color {self.new_color} must equal s={self.s}")
        if not self.old_color < self.new_color:
            raise ValueError(f"color must increase, got {self.old_color}->{self.new_color}")
        return self


class ProperColoring(BaseModel):
    """Certificate variant: a proper coloring of the host."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["coloring"] = "coloring"
    coloring: Coloring


class TreeCopy(BaseModel):
    """Certificate variant: a copy of the pattern tree in the host."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["embedding"] = "embedding"
    embedding: Embedding


Certificate = Annotated[Union[ProperColoring, TreeCopy], Field(discriminator="kind")]


class EdgeInserted(BaseModel):
    """A host edge joined the working hypergraph."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["edge-inserted"] = "edge-inserted"
    edge: int


class CopyRebuilt(BaseModel):
    """A maximal colored copy was grown with the given placed labels."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["copy-rebuilt"] = "copy-rebuilt"
    placed: Tuple[int, ...]


class Recolor(BaseModel):
    """A recolor step was applied."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["recolor"] = "recolor"
    step: RecolorStep


class Terminated(BaseModel):
    """The run ended."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["terminated"] = "terminated"
    reason: Literal["proper", "copy-found"]


TraceEvent = Annotated[
    Union[EdgeInserted, CopyRebuilt, Recolor, Terminated], Field(discriminator="kind")
]


class Trace(BaseModel):
    """Ordered record of the events of a run.

    Attributes:
        model_config: Pydantic config forbidding extra fields.
        events: Recorded events in order.
        listener: Optional callable invoked with each event as it is recorded.
    """

    model_config = ConfigDict(extra="forbid")

    events: List[TraceEvent] = Field(default_factory=list)
    listener: Optional[Callable[[TraceEvent], None]] = Field(default=None, exclude=True)

    def record(self, event: TraceEvent) -> None:
        """Append an event and notify the listener."""
        self.events.append(event)
        if self.listener is not None:
            self.listener(event)

    def recolors(self) -> List[RecolorStep]:
        """Return the recolor steps in order."""
        return [event.step for event in self.events if isinstance(event, Recolor)]


def render_event(event: TraceEvent) -> str:
    """Render a trace event as a single line.

    Args:
        event: The event to render.

    Returns:
        The text form, e.g. ``recolor v=4 1->2 (s=2)``.
    """
    if isinstance(event, Recolor):
        step = event.step
        return f"recolor v={step.host_vertex} {step.old_color}->{step.new_color} (s={step.s})"
    if isinstance(event, EdgeInserted):
        return f"edge-inserted e={event.edge}"
    if isinstance(event, CopyRebuilt):
        return f"copy-rebuilt placed={','.join(map(str, event.placed))}"
    return f"terminated reason={event.reason}"


def _record(trace: Optional[Trace], event: TraceEvent) -> None:
    if trace is not None:
        trace.record(event)


def _check_uniformity(h: Hypergraph, pt: PreprocessedTree) -> None:
    if h.r != pt.rtree.r:
        raise ParameterMismatchError(
            f"host is {h.r}-uniform but the tree is {pt.rtree.r}-uniform"
        )


def _find_extension(
    h: Hypergraph, colors: Sequence[int], copy: ColoredCopy
) -> Optional[Tuple[int, int]]:
    """Return the first (label, host edge) that extends copy, scanning labels upward."""
    image = copy.image()
    for label in range(2, copy.pt.t + 1):
        if label in copy.placed:
            continue
        anchor = copy.phi.get(copy.pt.attachment(label))
        if anchor is None:
            continue
        for index in h.incidence[anchor]:
            others = [u for u in h.edges[index] if u != anchor]
            if all(colors[u] == label and u not in image for u in others):
                return label, index
    return None


def _place(h: Hypergraph, copy: ColoredCopy, label: int, host_edge: int) -> None:
    """Map e_label onto host_edge, pairing the fresh vertices in sorted order."""
    attachment = copy.pt.attachment(label)
    anchor = copy.phi[attachment]
    fresh = [v for v in copy.pt.edge(label) if v != attachment]
    targets = [u for u in h.edges[host_edge] if u != anchor]
    copy.phi.update(zip(fresh, targets))
    copy.placed.add(label)
    copy.host_edges[label] = host_edge


def _grow_maximal(
    h: Hypergraph, colors: Sequence[int], pt: PreprocessedTree, seed_edge: int
) -> ColoredCopy:
    """Seed e_1 on seed_edge and extend greedily until no extension exists."""
    copy = ColoredCopy(
        pt=pt,
        placed={1},
        phi=dict(zip(pt.edge(1), h.edges[seed_edge])),
        host_edges={1: seed_edge},
    )
    while (extension := _find_extension(h, colors, copy)) is not None:
        _place(h, copy, *extension)
    return copy


def find_extension(
    h: Hypergraph, c: Coloring, copy: ColoredCopy
) -> Optional[Tuple[int, int]]:
    """Find an unplaced label and a host edge that extend the colored copy.

    For each unplaced label i in increasing order whose attachment vertex v is placed,
    host edges are scanned in increasing index for one containing phi(v), with its
    other r-1 vertices colored i and outside the image of phi.

    Args:
        h: The host hypergraph.
        c: The host coloring the copy preserves.
        copy: The current colored copy.

    Returns:
        The first (label, host edge index) found, or None.
    """
    return _find_extension(h, c.colors, copy)


def maximal_colored_copy(
    h: Hypergraph, c: Coloring, pt: PreprocessedTree, seed_edge: int
) -> Union[ColoredCopy, Embedding]:
    """Grow a maximal colored copy seeded with e_1 on seed_edge.

    Args:
        h: The host hypergraph.
        c: The host coloring.
        pt: The preprocessed pattern tree.
        seed_edge: Host edge index carrying e_1; it must be monochromatic in color 1.

    Returns:
        The maximal copy, or the full embedding when every label got placed.

    Raises:
        InvalidColoringError: If the seed edge is not monochromatic in color 1.
        ParameterMismatchError: If host and tree uniformities differ.
    """
    _check_uniformity(h, pt)
    if len(c.colors) != h.n:
        raise InvalidColoringError(f"coloring has {len(c.colors)} entries for {h.n} vertices")
    if not 0 <= seed_edge < h.m:
        raise InvalidColoringError(f"seed edge {seed_edge} outside 0..{h.m - 1}")
    if any(c.colors[v] != 1 for v in h.edges[seed_edge]):
        raise InvalidColoringError(f"seed edge {seed_edge} is not monochromatic in color 1")
    copy = _grow_maximal(h, c.colors, pt, seed_edge)
    return copy.to_embedding() if copy.is_complete() else copy


def _swap_with_one(color: int, other: int) -> int:
    """Apply the palette transposition (1 other)."""
    if color == other:
        return 1
    if color == 1:
        return other
    return color


def _check_no_new_defect(h: Hypergraph, colors: Sequence[int], host_vertex: int, s: int) -> None:
    for index in h.incidence[host_vertex]:
        if is_monochromatic(h.edges[index], colors):
            raise InvariantViolationError(
                f"recoloring vertex {host_vertex} to {s} made edge {index} monochromatic"
            )


def repair(
    h: Hypergraph,
    c: Coloring,
    bad_edge: int,
    pt: PreprocessedTree,
    trace: Optional[Trace] = None,
) -> Certificate:
    """Repair the only monochromatic edge of h, or find a copy of the tree.

    Args:
        h: The host hypergraph.
        c: A coloring that is proper on h minus bad_edge, with palette pt.t.
        bad_edge: The single monochromatic edge.
        pt: The preprocessed pattern tree.
        trace: Optional event sink.

    Returns:
        A proper coloring of h with the same palette, or a copy of the tree.

    Raises:
        InvalidColoringError: If the preconditions on c and bad_edge do not hold.
        ParameterMismatchError: If the palette differs from the tree edge count.
        InvariantViolationError: If a runtime check of the loop fails.
    """
    _check_uniformity(h, pt)
    t = pt.t
    if c.palette != t:
        raise ParameterMismatchError(f"palette {c.palette} differs from tree edge count {t}")
    if monochromatic_edges(h, c) != [bad_edge]:
        raise InvalidColoringError(
            f"edge {bad_edge} must be the only monochromatic edge before repair"
        )

    bad_color = c.colors[h.edges[bad_edge][0]]
    colors = [_swap_with_one(color, bad_color) for color in c.colors]
    bad_vertices = set(h.edges[bad_edge])
    recolor_limit = h.n * (t - 1)
    recolors = 0

    while True:
        copy = _grow_maximal(h, colors, pt, bad_edge)
        _record(trace, CopyRebuilt(placed=tuple(sorted(copy.placed))))
        if copy.is_complete():
            return TreeCopy(embedding=copy.to_embedding())

        s = min(label for label in range(2, t + 1) if label not in copy.placed)
        v = pt.attachment(s)
        host_vertex = copy.phi[v]
        old_color = colors[host_vertex]
        if old_color >= s:
            raise InvariantViolationError(
                f"vertex {host_vertex} has color {old_color}, not below s={s}"
            )
        colors[host_vertex] = s
        recolors += 1
        step = RecolorStep(
            s=s, v=v, host_vertex=host_vertex, old_color=old_color, new_color=s
        )
        _record(trace, Recolor(step=step))
        logger.debug("Recolored vertex %s from %s to %s", host_vertex, old_color, s)
        if recolors > recolor_limit:
            raise InvariantViolationError(f"more than {recolor_limit} recolor steps")

        _check_no_new_defect(h, colors, host_vertex, s)
        defects = [i for i, edge in enumerate(h.edges) if is_monochromatic(edge, colors)]
        if host_vertex in bad_vertices:
            if defects:
                raise InvariantViolationError(f"edges {defects} still monochromatic")
            restored = tuple(_swap_with_one(color, bad_color) for color in colors)
            return ProperColoring(coloring=Coloring(colors=restored, palette=t))
        if defects != [bad_edge]:
            raise InvariantViolationError(f"expected only edge {bad_edge} monochromatic")


def color_or_embed(
    h: Hypergraph,
    tr: RTree,
    t: int,
    root_choice: Optional[int] = None,
    trace: Optional[Trace] = None,
) -> Certificate:
    """Return a proper t-coloring of h or a copy of tr in h.

    Args:
        h: The host hypergraph.
        tr: The pattern r-tree with t edges.
        t: Palette size.
        root_choice: Tree edge labeled e_1; the canonically smallest edge when None.
        trace: Optional event sink.

    Returns:
        The certificate.

    Raises:
        ParameterMismatchError: If tr does not have t edges or the uniformities differ.
    """
    if tr.t != t:
        raise ParameterMismatchError(f"tree has {tr.t} edges but the palette size is {t}")
    if tr.r != h.r:
        raise ParameterMismatchError(f"host is {h.r}-uniform but the tree is {tr.r}-uniform")

    pt = preprocess(tr, root_choice)
    colors = [1] * h.n
    for k, edge in enumerate(h.edges):
        _record(trace, EdgeInserted(edge=k))
        if not is_monochromatic(edge, colors):
            continue
        result = repair(h.prefix(k + 1), Coloring(colors=tuple(colors), palette=t), k, pt, trace)
        if isinstance(result, TreeCopy):
            _record(trace, Terminated(reason="copy-found"))
            logger.info("Found a copy of the %s-edge tree after %s host edges", t, k + 1)
            return result
        colors = list(result.coloring.colors)

    _record(trace, Terminated(reason="proper"))
    logger.info("Properly %s-colored a host with %s edges", t, h.m)
    return ProperColoring(coloring=Coloring(colors=tuple(colors), palette=t))


def validate_certificate(
    h: Hypergraph, tr: RTree, t: int, cert: Certificate
) -> bool:
    """Check a certificate using only the hypergraph primitives.

    Args:
        h: The host hypergraph.
        tr: The pattern tree.
        t: Palette size.
        cert: The certificate to check.

    Returns:
        True when the coloring is proper within t colors, or the embedding is valid.
    """
    if isinstance(cert, ProperColoring):
        coloring = cert.coloring
        if coloring.palette > t or len(coloring.colors) != h.n:
            return False
        if any(not 1 <= color <= t for color in coloring.colors):
            return False
        return is_proper(h, coloring)
    if isinstance(cert, TreeCopy):
        return tr.r == h.r and embedding_is_valid(tr.tree, h, cert.embedding)
    return False


def graph_core_embed(h: Hypergraph, tr: RTree) -> Optional[Embedding]:
    """Embed a tree through the t-core of a graph (the r = 2 route).

    A graph with chromatic number above t has a non-empty t-core, a subgraph of minimum
    degree at least t, and any t-edge tree embeds greedily into it.

    Args:
        h: A 2-uniform host.
        tr: A 2-uniform pattern tree.

    Returns:
        The embedding, or None when the t-core is empty.

    Raises:
        ParameterMismatchError: If either input is not 2-uniform.
        InvariantViolationError: If the greedy step finds no free neighbor.
    """
    if h.r != 2 or tr.r != 2:
        raise ParameterMismatchError("the core route applies to graphs only")
    graph = nx.Graph()
    graph.add_nodes_from(range(h.n))
    graph.add_edges_from(h.edges)
    core = nx.k_core(graph, k=tr.t)
    if core.number_of_nodes() == 0:
        return None

    pt = preprocess(tr)
    start = min(core.nodes)
    a, b = pt.edge(1)
    phi = {a: start, b: min(core.neighbors(start))}
    for label in range(2, tr.t + 1):
        attachment = pt.attachment(label)
        (fresh,) = (v for v in pt.edge(label) if v != attachment)
        used = set(phi.values())
        free = [u for u in core.neighbors(phi[attachment]) if u not in used]
        if not free:
            raise InvariantViolationError(f"no free core neighbor for tree edge e_{label}")
        phi[fresh] = min(free)

    edge_index = {edge: index for index, edge in enumerate(h.edges)}
    tree = tr.tree
    return Embedding(
        vertex_map=tuple(phi[v] for v in range(tree.n)),
        edge_map=tuple(
            edge_index[tuple(sorted(phi[v] for v in edge))] for edge in tree.edges
        ),
    )
