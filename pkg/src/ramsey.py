# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Desk-scale checks of R(K_k^(r), t-edge r-tree) = (k-1)t + 1.

Upper bound: every red/blue coloring of the complete r-graph on (k-1)t + 1 vertices
is pushed through the embedder on its blue edges. A copy of the tree is a blue
witness; a proper t-coloring has a color class of at least k vertices, which spans
no blue edge and is therefore a red clique.

Lower bound: disjoint tightness gadgets colored blue, everything else red, have no
red K_k^(r) and no blue t-edge tree.
"""

# pylint: disable=no-self-argument
from __future__ import annotations

import functools
import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import Annotated, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from constructions import complete_r_graph, ramsey_lower
from embedder import TreeCopy, color_or_embed
from errors import BudgetExceededError, InvariantViolationError, ParameterMismatchError
from hypergraph import Edge, Embedding, Hypergraph, embedding_is_valid, make_hypergraph
from hypertree import RTree, all_trees
from oracles import OracleBudget, brute_contains_tree, independence_number

logger = logging.getLogger(__name__)

FAST_EDGE_CAP = 16
SLOW_EDGE_CAP = 21
CHUNKS_PER_WORKER = 4


@functools.lru_cache(maxsize=None)
def _complete(n: int, r: int) -> Hypergraph:
    return complete_r_graph(n, r)


@functools.lru_cache(maxsize=None)
def _edge_index(n: int, r: int) -> Dict[Edge, int]:
    return {edge: index for index, edge in enumerate(_complete(n, r).edges)}


class TwoColoring(BaseModel):
    """A red/blue coloring of the edges of the complete r-graph on n vertices.

    Bit i of red_mask is set when edge i (canonical order) is red.

    Attributes:
        model_config: Pydantic config, frozen and forbidding extra fields.
        n: Vertex count.
        r: Uniformity.
        red_mask: Red edges as a bit mask.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    n: int
    r: int
    red_mask: int

    @model_validator(mode="after")
    def _validate_mask(self) -> TwoColoring:
        """Validate the parameters and that the mask fits C(n, r) bits."""
        if not 2 <= self.r <= self.n:
            raise ValueError(f"two-coloring needs 2 <= r <= n, got r={self.r}, n={self.n}")
        if not 0 <= self.red_mask < 1 << math.comb(self.n, self.r):
            raise ValueError(f"mask {self.red_mask} does not fit C({self.n},{self.r}) bits")
        return self

    @property
    def host(self) -> Hypergraph:
        """Return the complete r-graph being colored."""
        return _complete(self.n, self.r)

    def is_red(self, edge_index: int) -> bool:
        """Return whether the edge with the given canonical index is red."""
        return bool(self.red_mask >> edge_index & 1)

    def blue_indices(self) -> List[int]:
        """Return the canonical indices of the blue edges."""
        return [i for i in range(self.host.m) if not self.is_red(i)]

    def blue(self) -> Hypergraph:
        """Return the hypergraph of blue edges on the same vertices."""
        return make_hypergraph(
            self.n, self.r, [self.host.edges[i] for i in self.blue_indices()]
        )

    def spans_red_clique(self, vertices: Tuple[int, ...]) -> bool:
        """Return whether every r-subset of vertices is a red edge."""
        index = _edge_index(self.n, self.r)
        return all(self.is_red(index[sub]) for sub in itertools.combinations(vertices, self.r))


class RedClique(BaseModel):
    """Witness: k vertices all of whose r-subsets are red."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["red-clique"] = "red-clique"
    vertices: Tuple[int, ...]


class BlueTree(BaseModel):
    """Witness: the tree embedded in the complete r-graph using blue edges only."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["blue-tree"] = "blue-tree"
    embedding: Embedding


RamseyWitness = Annotated[Union[RedClique, BlueTree], Field(discriminator="kind")]


def analyze_coloring(tc: TwoColoring, k: int, tr: RTree, t: int) -> RamseyWitness:
    """Extract a red K_k^(r) or a blue copy of tr through the embedder.

    The red clique is the largest color class of the blue coloring (smallest color on
    ties), cut down to its k smallest vertices.

    Args:
        tc: The red/blue coloring.
        k: Clique size.
        tr: The target tree.
        t: Palette size, equal to the tree edge count.

    Returns:
        A validated witness.

    Raises:
        ParameterMismatchError: If n < (k-1)t + 1 or the tree does not match r and t.
        InvariantViolationError: If the extracted witness is not valid.
    """
    if tr.t != t or tr.r != tc.r:
        raise ParameterMismatchError(
            f"tree with r={tr.r}, t={tr.t} does not match r={tc.r}, t={t}"
        )
    if tc.n < (k - 1) * t + 1:
        raise ParameterMismatchError(
            f"n={tc.n} is below (k-1)t+1={(k - 1) * t + 1}; no witness is guaranteed"
        )

    blue_ids = tc.blue_indices()
    cert = color_or_embed(tc.blue(), tr, t)
    if isinstance(cert, TreeCopy):
        emb = cert.embedding
        return BlueTree(
            embedding=Embedding(
                vertex_map=emb.vertex_map,
                edge_map=tuple(blue_ids[j] for j in emb.edge_map),
            )
        )

    classes = cert.coloring.classes()
    largest = min(range(t), key=lambda color: (-len(classes[color]), color))
    clique = classes[largest][:k]
    if len(clique) < k or not tc.spans_red_clique(clique):
        raise InvariantViolationError(f"color class {largest + 1} does not give a red K_{k}")
    return RedClique(vertices=clique)


def validate_witness(tc: TwoColoring, k: int, tr: RTree, witness: RamseyWitness) -> bool:
    """Re-check a witness against the mask.

    Returns:
        True for k distinct vertices spanning only red edges, or a valid embedding of tr
        whose image edges are all blue.
    """
    if isinstance(witness, RedClique):
        vertices = witness.vertices
        if len(vertices) != k or len(set(vertices)) != k:
            return False
        if any(not 0 <= v < tc.n for v in vertices):
            return False
        return tc.spans_red_clique(tuple(sorted(vertices)))
    if isinstance(witness, BlueTree):
        emb = witness.embedding
        if not embedding_is_valid(tr.tree, tc.host, emb):
            return False
        return not any(tc.is_red(index) for index in emb.edge_map)
    return False


class UpperReport(BaseModel):
    """Outcome of the exhaustive upper-bound check.

    Attributes:
        model_config: Pydantic config, frozen and forbidding extra fields.
        r: Uniformity.
        k: Clique size.
        t: Tree edge count.
        n: Vertex count (k-1)t + 1.
        total: Number of colorings analysed.
        red_cliques: Colorings answered with a red clique.
        blue_trees: Colorings answered with a blue tree.
        failures: Masks without a valid witness.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    r: int
    k: int
    t: int
    n: int
    total: int
    red_cliques: int
    blue_trees: int
    failures: Tuple[int, ...]

    def records(self) -> List[str]:
        """Return the report as key=value lines."""
        return [
            f"r={self.r}",
            f"k={self.k}",
            f"t={self.t}",
            f"n={self.n}",
            f"total={self.total}",
            f"red_cliques={self.red_cliques}",
            f"blue_trees={self.blue_trees}",
            f"failures={len(self.failures)}",
            f"summary={self.total} colorings, {len(self.failures)} failures",
        ]


def _scan(
    n: int, r: int, k: int, tr: RTree, t: int, start: int, stop: int
) -> Tuple[int, int, List[int]]:
    """Analyse masks start..stop-1, returning red and blue counts and failed masks."""
    red = blue = 0
    failures: List[int] = []
    for mask in range(start, stop):
        tc = TwoColoring(n=n, r=r, red_mask=mask)
        try:
            witness = analyze_coloring(tc, k, tr, t)
        except InvariantViolationError as exc:
            logger.error("Coloring %s failed: %s", mask, exc)
            failures.append(mask)
            continue
        if not validate_witness(tc, k, tr, witness):
            logger.error("Coloring %s produced an invalid witness", mask)
            failures.append(mask)
        elif isinstance(witness, RedClique):
            red += 1
        else:
            blue += 1
    return red, blue, failures


def verify_upper(
    r: int, k: int, t: int, tr: RTree, allow_slow: bool = False, workers: int = 1
) -> UpperReport:
    """Analyse every red/blue coloring of the complete r-graph on (k-1)t + 1 vertices.

    Args:
        r: Uniformity.
        k: Clique size.
        t: Tree edge count.
        tr: The target tree.
        allow_slow: Raise the edge cap from FAST_EDGE_CAP to SLOW_EDGE_CAP.
        workers: Worker processes; contiguous mask chunks are merged in order, so the
            report does not depend on this value.

    Raises:
        BudgetExceededError: If C(n, r) exceeds the edge cap.
        ParameterMismatchError: If the tree does not match r and t.
    """
    if tr.t != t or tr.r != r:
        raise ParameterMismatchError(f"tree with r={tr.r}, t={tr.t} does not match r={r}, t={t}")
    n = (k - 1) * t + 1
    if n < r:
        raise ParameterMismatchError(f"(k-1)t+1={n} is below r={r}")
    edge_count = math.comb(n, r)
    cap = SLOW_EDGE_CAP if allow_slow else FAST_EDGE_CAP
    if edge_count > cap:
        raise BudgetExceededError("max_edges", cap, edge_count)

    total = 1 << edge_count
    logger.info("Enumerating %s colorings of the complete %s-graph on %s vertices", total, r, n)
    if workers <= 1:
        chunks = [_scan(n, r, k, tr, t, 0, total)]
    else:
        pieces = min(total, workers * CHUNKS_PER_WORKER)
        bounds = [total * i // pieces for i in range(pieces + 1)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(
                pool.map(
                    _scan,
                    *zip(*[(n, r, k, tr, t, lo, hi) for lo, hi in zip(bounds, bounds[1:])]),
                )
            )

    report = UpperReport(
        r=r,
        k=k,
        t=t,
        n=n,
        total=total,
        red_cliques=sum(chunk[0] for chunk in chunks),
        blue_trees=sum(chunk[1] for chunk in chunks),
        failures=tuple(mask for chunk in chunks for mask in chunk[2]),
    )
    logger.info("Upper bound check finished with %s failures", len(report.failures))
    return report


class LowerReport(BaseModel):
    """Outcome of the lower-bound construction check.

    Attributes:
        model_config: Pydantic config, frozen and forbidding extra fields.
        r: Uniformity.
        k: Clique size.
        t: Tree edge count.
        n: Vertex count of the construction.
        blocks: Number of gadget copies.
        upper_bound: (k-1)t + 1.
        blue_independence: Independence number of the blue hypergraph.
        red_clique_free: Whether no k vertices span only red edges.
        tree_free: Whether no enumerated t-edge tree has a blue copy.
        trees_checked: Number of enumerated trees.
        divisible: Whether r-1 divides k-1.
        tightness_certified: Construction valid and one vertex short of the upper bound.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    r: int
    k: int
    t: int
    n: int
    blocks: int
    upper_bound: int
    blue_independence: int
    red_clique_free: bool
    tree_free: bool
    trees_checked: int
    divisible: bool
    tightness_certified: bool

    def records(self) -> List[str]:
        """Return the report as key=value lines."""
        verdict = "tightness certified" if self.tightness_certified else "tightness not certified"
        return [
            f"r={self.r}",
            f"k={self.k}",
            f"t={self.t}",
            f"n={self.n}",
            f"blocks={self.blocks}",
            f"upper_bound={self.upper_bound}",
            f"blue_independence={self.blue_independence}",
            f"red_clique_free={str(self.red_clique_free).lower()}",
            f"tree_free={str(self.tree_free).lower()}",
            f"trees_checked={self.trees_checked}",
            f"divisible={str(self.divisible).lower()}",
            f"summary=construction n={self.n}, {verdict}",
        ]


def verify_lower(r: int, k: int, t: int, budget: Optional[OracleBudget] = None) -> LowerReport:
    """Check the disjoint-gadget construction with the oracles.

    A red K_k^(r) is a set of k vertices spanning no blue edge, so the construction has
    none exactly when the blue independence number is at most k-1.

    Raises:
        InvalidHypergraphError: If the construction parameters are invalid.
        InvalidTreeError: If t exceeds the tree enumeration limit.
        BudgetExceededError: If an oracle search exceeds the budget.
    """
    trees = all_trees(r, t)
    blue = ramsey_lower(r, k, t)
    blocks = (k - 1) // (r - 1)
    alpha = independence_number(blue, budget)
    tree_free = not any(brute_contains_tree(blue, tr, budget).contains for tr in trees)
    upper_bound = (k - 1) * t + 1
    divisible = (k - 1) % (r - 1) == 0
    red_clique_free = alpha.size <= k - 1
    certified = red_clique_free and tree_free and divisible and blue.n == upper_bound - 1
    logger.info("Lower bound construction on %s vertices, certified=%s", blue.n, certified)
    return LowerReport(
        r=r,
        k=k,
        t=t,
        n=blue.n,
        blocks=blocks,
        upper_bound=upper_bound,
        blue_independence=alpha.size,
        red_clique_free=red_clique_free,
        tree_free=tree_free,
        trees_checked=len(trees),
        divisible=divisible,
        tightness_certified=certified,
    )
