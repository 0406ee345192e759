# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Named hypergraph families.

Contains:
 - complete r-graphs and the tightness gadget (complete r-graph on (r-1)t vertices,
   chromatic number t, free of every t-edge r-tree)
 - the star example (all triples through one vertex: large minimum degree, no
   3-edge loose path)
 - the Ramsey lower-bound construction (disjoint copies of the tightness gadget)
 - the Fano plane
 - NamedFamily: validated parameters for any of the above.
"""

# pylint: disable=no-self-argument
from __future__ import annotations

import itertools
import logging
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, model_validator

from errors import InvalidHypergraphError
from hypergraph import Edge, Hypergraph, make_hypergraph

logger = logging.getLogger(__name__)

FANO_LINES = (
    (0, 1, 2),
    (0, 3, 4),
    (0, 5, 6),
    (1, 3, 5),
    (1, 4, 6),
    (2, 3, 6),
    (2, 4, 5),
)


def complete_r_graph(n: int, r: int) -> Hypergraph:
    """Return all r-subsets of 0..n-1 in lexicographic order.

    Raises:
        InvalidHypergraphError: If r < 2 or r > n.
    """
    if r < 2 or r > n:
        raise InvalidHypergraphError(f"complete r-graph needs 2 <= r <= n, got r={r}, n={n}")
    return make_hypergraph(n, r, itertools.combinations(range(n), r))


def tight_gadget(r: int, t: int) -> Hypergraph:
    """Return the complete r-graph on (r-1)t vertices.

    For t = 1 the vertex count r-1 is below r and the result is edgeless.

    Raises:
        InvalidHypergraphError: If r < 2 or t < 1.
    """
    if r < 2 or t < 1:
        raise InvalidHypergraphError(f"tight gadget needs r >= 2 and t >= 1, got r={r}, t={t}")
    n = (r - 1) * t
    if n < r:
        return make_hypergraph(n, r, [])
    return complete_r_graph(n, r)


def star_example(n: int) -> Hypergraph:
    """Return the 3-graph of all triples containing vertex 0.

    Raises:
        InvalidHypergraphError: If n < 3.
    """
    if n < 3:
        raise InvalidHypergraphError(f"star example needs at least 3 vertices, got {n}")
    return make_hypergraph(n, 3, ((0, a, b) for a, b in itertools.combinations(range(1, n), 2)))


def ramsey_lower(r: int, k: int, t: int) -> Hypergraph:
    """Return floor((k-1)/(r-1)) disjoint tightness gadgets on consecutive vertex blocks.

    Raises:
        InvalidHypergraphError: If r < 2, k < 2, t < 1 or no block fits.
    """
    if r < 2 or k < 2 or t < 1:
        raise InvalidHypergraphError(
            f"ramsey construction needs r >= 2, k >= 2, t >= 1, got r={r}, k={k}, t={t}"
        )
    blocks = (k - 1) // (r - 1)
    if blocks < 1:
        raise InvalidHypergraphError(f"floor((k-1)/(r-1)) is 0 for r={r}, k={k}")
    gadget = tight_gadget(r, t)
    size = gadget.n
    edges: List[Edge] = [
        tuple(v + block * size for v in edge) for block in range(blocks) for edge in gadget.edges
    ]
    logger.debug("Built %s gadget blocks of %s vertices", blocks, size)
    return make_hypergraph(blocks * size, r, edges)


def fano_plane() -> Hypergraph:
    """Return the Fano plane: 7 points, 7 lines, chromatic number 3."""
    return make_hypergraph(7, 3, FANO_LINES)


class NamedFamily(BaseModel):
    """A named family member and its parameters.

    Attributes:
        model_config: Pydantic config, frozen and forbidding extra fields.
        family: The family tag.
        r: Uniformity (complete, tight-gadget, ramsey-lower).
        n: Vertex count (complete, star-example).
        t: Edge count of the excluded trees (tight-gadget, ramsey-lower).
        k: Clique size (ramsey-lower).
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    family: Literal["complete", "tight-gadget", "star-example", "ramsey-lower", "fano"]
    r: Optional[int] = None
    n: Optional[int] = None
    t: Optional[int] = None
    k: Optional[int] = None

    @model_validator(mode="after")
    def _validate_parameters(self) -> NamedFamily:
        """Validate that the family's parameters are present."""
        required = {
            "complete": ("n", "r"),
            "tight-gadget": ("r", "t"),
            "star-example": ("n",),
            "ramsey-lower": ("r", "k", "t"),
            "fano": (),
        }[self.family]
        missing = [name for name in required if getattr(self, name) is None]
        if missing:
            raise ValueError(f"family {self.family} needs parameters {', '.join(missing)}")
        return self

    def build(self) -> Hypergraph:
        """Construct the family member.

        Raises:
            InvalidHypergraphError: If the parameters violate the family's preconditions.
        """
        if self.family == "complete":
            return complete_r_graph(self.n or 0, self.r or 0)
        if self.family == "tight-gadget":
            return tight_gadget(self.r or 0, self.t or 0)
        if self.family == "star-example":
            return star_example(self.n or 0)
        if self.family == "ramsey-lower":
            return ramsey_lower(self.r or 0, self.k or 0, self.t or 0)
        return fano_plane()
