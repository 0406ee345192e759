# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Fixtures for the end-to-end corpus runs."""

import itertools
import random
from typing import Dict, List, NamedTuple

import pytest

from hgfile import read_hypergraph
from hypergraph import Hypergraph, make_hypergraph
from oracles import chromatic_number

HOST_SEED = 20251019
HOST_COUNT = 200
EDGE_PROBABILITIES = (0.2, 0.5, 0.8)
MAX_HOST_VERTICES = 9


class OracleHost(NamedTuple):
    """A host hypergraph with its oracle chromatic number.

    Attributes:
        host: The hypergraph.
        chi: Its chromatic number.
    """

    host: Hypergraph
    chi: int


def random_host(rng: random.Random, index: int) -> Hypergraph:
    """Draw a binomial random host with its edges in shuffled order.

    Args:
        rng: The seeded generator.
        index: Position in the corpus; picks the edge probability.

    Returns:
        A 2- or 3-uniform hypergraph on at most nine vertices.
    """
    r = rng.choice((2, 3))
    n = rng.randint(r + 1, MAX_HOST_VERTICES)
    p = EDGE_PROBABILITIES[index % len(EDGE_PROBABILITIES)]
    edges = [edge for edge in itertools.combinations(range(n), r) if rng.random() < p]
    rng.shuffle(edges)
    return make_hypergraph(n, r, edges)


@pytest.fixture(scope="session")
def random_hosts() -> List[OracleHost]:
    """Return the fixed-seed random host corpus with oracle chromatic numbers."""
    rng = random.Random(HOST_SEED)
    hosts = [random_host(rng, index) for index in range(HOST_COUNT)]
    return [OracleHost(host=h, chi=chromatic_number(h)) for h in hosts]


@pytest.fixture(scope="session")
def corpus_hosts(corpus_dir) -> Dict[str, OracleHost]:
    """Return every bundled corpus file keyed by name, with its chromatic number."""
    hosts = {path.name: read_hypergraph(path) for path in sorted(corpus_dir.glob("*.hg"))}
    return {name: OracleHost(host=h, chi=chromatic_number(h)) for name, h in hosts.items()}
