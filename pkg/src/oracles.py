# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Brute-force ground truth.

Exhaustive searches for k-colorability, chromatic number, tree containment, Berge
cycles and independence number. They rely on the hypergraph primitives only and
share no logic with the embedder, so they can referee its certificates. Every
search counts its states against an explicit OracleBudget.
"""

# pylint: disable=no-self-argument
from __future__ import annotations

import itertools
import logging
from typing import Dict, List, Optional, Set, Tuple

from pydantic import BaseModel, ConfigDict, field_validator

from errors import BudgetExceededError, ParameterMismatchError
from hypergraph import Coloring, Embedding, Hypergraph
from hypertree import RTree

logger = logging.getLogger(__name__)

DEFAULT_MAX_VERTICES = 12
DEFAULT_MAX_ASSIGNMENTS = 5_000_000


class OracleBudget(BaseModel):
    """Caps on exhaustive searches.

    Attributes:
        model_config: Pydantic config, frozen and forbidding extra fields.
        max_vertices: Largest vertex count accepted.
        max_assignments: Largest number of search states visited.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    max_vertices: int = DEFAULT_MAX_VERTICES
    max_assignments: int = DEFAULT_MAX_ASSIGNMENTS

    @field_validator("max_vertices", "max_assignments")
    def _validate_positive(cls, value: int) -> int:  # noqa: N805
        """Validate that the cap is positive."""
        if value < 1:
            raise ValueError(f"budget caps must be positive instead of {value}")
        return value


class _Counter:
    """Search state counter enforcing max_assignments."""

    def __init__(self, budget: OracleBudget):
        """Construct.

        Args:
            budget: The budget whose state cap applies.
        """
        self.budget = budget
        self.states = 0

    def tick(self) -> None:
        """Count one state.

        Raises:
            BudgetExceededError: When the cap is passed.
        """
        self.states += 1
        if self.states > self.budget.max_assignments:
            raise BudgetExceededError(
                "max_assignments", self.budget.max_assignments, self.states
            )


def _check_vertices(h: Hypergraph, budget: OracleBudget) -> None:
    if h.n > budget.max_vertices:
        raise BudgetExceededError("max_vertices", budget.max_vertices, h.n)


class ColorabilityResult(BaseModel):
    """Verdict of a k-colorability search, with a witness when colorable."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    colorable: bool
    witness: Optional[Coloring] = None


class ContainmentResult(BaseModel):
    """Verdict of a tree containment search, with a witness when found."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    contains: bool
    witness: Optional[Embedding] = None


class BergeCycle(BaseModel):
    """A Berge cycle (v_1, e_1, ..., v_k, e_k); e_i holds v_i and v_{i+1}, cyclically."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    vertices: Tuple[int, ...]
    edges: Tuple[int, ...]


class BergeCycleResult(BaseModel):
    """Verdict of a Berge cycle search, with a witness when found."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    exists: bool
    witness: Optional[BergeCycle] = None


class IndependenceResult(BaseModel):
    """Independence number with a maximum independent set."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    size: int
    witness: Tuple[int, ...]


def is_k_colorable(
    h: Hypergraph, k: int, budget: Optional[OracleBudget] = None
) -> ColorabilityResult:
    """Decide whether h has a proper coloring with k colors.

    Vertices are colored in index order; vertex i may only use colors up to one more
    than the largest color on vertices 0..i-1, which removes palette permutations.

    Args:
        h: The hypergraph.
        k: Palette size.
        budget: Search caps; the defaults when None.

    Raises:
        BudgetExceededError: If the input or the search exceeds the budget.
    """
    budget = budget or OracleBudget()
    _check_vertices(h, budget)
    if h.n == 0:
        return ColorabilityResult(colorable=True, witness=Coloring(colors=(), palette=max(k, 1)))
    if k < 1:
        return ColorabilityResult(colorable=False)

    closing: List[List[Tuple[int, ...]]] = [[] for _ in range(h.n)]
    for edge in h.edges:
        closing[max(edge)].append(edge)

    counter = _Counter(budget)
    colors = [0] * h.n

    def assign(v: int, highest: int) -> bool:
        if v == h.n:
            return True
        for color in range(1, min(k, highest + 1) + 1):
            counter.tick()
            colors[v] = color
            if any(all(colors[u] == color for u in edge) for edge in closing[v]):
                continue
            if assign(v + 1, max(highest, color)):
                return True
        colors[v] = 0
        return False

    if assign(0, 0):
        return ColorabilityResult(
            colorable=True, witness=Coloring(colors=tuple(colors), palette=k)
        )
    return ColorabilityResult(colorable=False)


def chromatic_number(h: Hypergraph, budget: Optional[OracleBudget] = None) -> int:
    """Return the least k >= 1 admitting a proper k-coloring (1 when edgeless).

    Raises:
        BudgetExceededError: If the input or a search exceeds the budget.
    """
    budget = budget or OracleBudget()
    _check_vertices(h, budget)
    k = 1
    while not is_k_colorable(h, k, budget).colorable:
        k += 1
    logger.debug("Chromatic number of %s-graph on %s vertices: %s", h.r, h.n, k)
    return k


def _connected_order(tree: Hypergraph) -> List[int]:
    """Order tree edges so that every edge after the first meets an earlier one."""
    order = [0]
    covered = set(tree.edges[0])
    remaining = list(range(1, tree.m))
    while remaining:
        nxt = next(i for i in remaining if covered.intersection(tree.edges[i]))
        remaining.remove(nxt)
        order.append(nxt)
        covered.update(tree.edges[nxt])
    return order


def brute_contains_tree(
    h: Hypergraph, tr: RTree, budget: Optional[OracleBudget] = None
) -> ContainmentResult:
    """Search exhaustively for a copy of tr in h.

    Tree edges are mapped one at a time onto unused host edges, trying every
    assignment of the still-unmapped tree vertices to free host vertices.

    Raises:
        BudgetExceededError: If the input or the search exceeds the budget.
        ParameterMismatchError: If the uniformities differ.
    """
    budget = budget or OracleBudget()
    _check_vertices(h, budget)
    if h.r != tr.r:
        raise ParameterMismatchError(f"host is {h.r}-uniform but the tree is {tr.r}-uniform")
    tree = tr.tree
    if h.n < tree.n or h.m < tree.m:
        return ContainmentResult(contains=False)

    order = _connected_order(tree)
    counter = _Counter(budget)
    phi: Dict[int, int] = {}
    used_vertices: Set[int] = set()
    edge_map: Dict[int, int] = {}
    used_edges: Set[int] = set()

    def candidates(tree_edge: int) -> List[int]:
        mapped = [phi[v] for v in tree.edges[tree_edge] if v in phi]
        if not mapped:
            return list(range(h.m))
        return [i for i in h.incidence[mapped[0]] if set(mapped).issubset(h.edges[i])]

    def extend(depth: int) -> bool:
        if depth == len(order):
            return True
        tree_edge = order[depth]
        pattern = tree.edges[tree_edge]
        fresh = [v for v in pattern if v not in phi]
        for host_edge in candidates(tree_edge):
            if host_edge in used_edges:
                continue
            images = {phi[v] for v in pattern if v in phi}
            free = [u for u in h.edges[host_edge] if u not in images]
            if any(u in used_vertices for u in free):
                continue
            for targets in itertools.permutations(free):
                counter.tick()
                phi.update(zip(fresh, targets))
                used_vertices.update(targets)
                edge_map[tree_edge] = host_edge
                used_edges.add(host_edge)
                if extend(depth + 1):
                    return True
                for v in fresh:
                    del phi[v]
                used_vertices.difference_update(targets)
                del edge_map[tree_edge]
                used_edges.discard(host_edge)
        return False

    if not extend(0):
        return ContainmentResult(contains=False)
    return ContainmentResult(
        contains=True,
        witness=Embedding(
            vertex_map=tuple(phi[v] for v in range(tree.n)),
            edge_map=tuple(edge_map[i] for i in range(tree.m)),
        ),
    )


def berge_cycle_exists(h: Hypergraph, budget: Optional[OracleBudget] = None) -> BergeCycleResult:
    """Search for a Berge cycle of length k >= 2.

    The cycle starts at its smallest vertex; the search alternates vertices and edges,
    keeping both distinct, and closes when the current edge contains the start.

    Raises:
        BudgetExceededError: If the input or the search exceeds the budget.
    """
    budget = budget or OracleBudget()
    _check_vertices(h, budget)
    counter = _Counter(budget)

    def walk(vertices: List[int], edges: List[int]) -> Optional[BergeCycle]:
        current = vertices[-1]
        for index in h.incidence[current]:
            if index in edges:
                continue
            counter.tick()
            edge = h.edges[index]
            if len(vertices) >= 2 and vertices[0] in edge:
                return BergeCycle(vertices=tuple(vertices), edges=(*edges, index))
            for nxt in edge:
                if nxt <= vertices[0] or nxt in vertices:
                    continue
                found = walk([*vertices, nxt], [*edges, index])
                if found is not None:
                    return found
        return None

    for start in range(h.n):
        cycle = walk([start], [])
        if cycle is not None:
            return BergeCycleResult(exists=True, witness=cycle)
    return BergeCycleResult(exists=False)


def berge_cycle_is_valid(h: Hypergraph, cycle: BergeCycle) -> bool:
    """Check a cycle witness against the definition: distinct items, e_i holds v_i, v_{i+1}."""
    k = len(cycle.vertices)
    if k < 2 or len(cycle.edges) != k:
        return False
    if len(set(cycle.vertices)) != k or len(set(cycle.edges)) != k:
        return False
    for i in range(k):
        if not 0 <= cycle.edges[i] < h.m:
            return False
        edge = h.edges[cycle.edges[i]]
        if cycle.vertices[i] not in edge or cycle.vertices[(i + 1) % k] not in edge:
            return False
    return True


def independence_number(
    h: Hypergraph, budget: Optional[OracleBudget] = None
) -> IndependenceResult:
    """Return the largest vertex set containing no whole edge.

    Branch on each vertex in index order (include first), pruning when the chosen set
    plus the remaining vertices cannot beat the best found.

    Raises:
        BudgetExceededError: If the input or the search exceeds the budget.
    """
    budget = budget or OracleBudget()
    _check_vertices(h, budget)
    counter = _Counter(budget)
    chosen: List[int] = []
    in_set = [False] * h.n
    best: List[int] = []

    def closes_edge(v: int) -> bool:
        return any(
            all(in_set[u] for u in h.edges[index] if u != v) for index in h.incidence[v]
        )

    def branch(v: int) -> None:
        nonlocal best
        counter.tick()
        if len(chosen) + (h.n - v) <= len(best):
            return
        if v == h.n:
            best = list(chosen)
            return
        if not closes_edge(v):
            in_set[v] = True
            chosen.append(v)
            branch(v + 1)
            chosen.pop()
            in_set[v] = False
        branch(v + 1)

    branch(0)
    return IndependenceResult(size=len(best), witness=tuple(best))
