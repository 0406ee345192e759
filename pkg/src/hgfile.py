# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Plain-text hypergraph and certificate files.

Hypergraph file: a header line "n m r", then m lines of r space-separated 0-based
vertex indices. Lines starting with '#' are comments; blank lines are ignored.

Certificate file: either "COLORING t" followed by one line of n colors, or
"EMBEDDING" followed by one "pattern_vertex host_vertex" line per tree vertex and
then one "pattern_edge host_edge" line per tree edge. Both blocks are indexed from 0
in order, so the edge block starts where the leading index returns to 0.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import List, Sequence, Tuple

from pydantic import ValidationError

from embedder import Certificate, ProperColoring, TreeCopy
from errors import FileFormatError, InvalidHypergraphError
from hypergraph import Coloring, Embedding, Hypergraph, make_hypergraph

logger = logging.getLogger(__name__)

STRING_SOURCE = "<string>"


def _content_lines(text: str) -> List[str]:
    """Return the stripped lines that are neither blank nor comments."""
    stripped = (line.strip() for line in text.splitlines())
    return [line for line in stripped if line and not line.startswith("#")]


def _ints(line: str) -> List[int]:
    """Parse a line of space-separated integers.

    Raises:
        ValueError: If a token is not an integer.
    """
    try:
        return [int(token) for token in line.split()]
    except ValueError as exc:
        raise ValueError(f"expected integers, found {line!r}") from exc


def parse_hypergraph(text: str, source: str = STRING_SOURCE) -> Hypergraph:
    """Parse a hypergraph file.

    Args:
        text: The file content.
        source: Name used in error messages.

    Raises:
        FileFormatError: On a malformed header, a wrong number of edge lines, or any
            input make_hypergraph rejects.
    """
    try:
        lines = _content_lines(text)
        if not lines:
            raise ValueError("missing header line 'n m r'")
        header = _ints(lines[0])
        if len(header) != 3:
            raise ValueError(f"header must be 'n m r', found {lines[0]!r}")
        n, m, r = header
        body = lines[1:]
        if len(body) != m:
            raise ValueError(f"header announces {m} edges but {len(body)} edge lines follow")
        return make_hypergraph(n, r, [_ints(line) for line in body])
    except (ValueError, InvalidHypergraphError) as exc:
        raise FileFormatError(exc, source) from exc


def serialize_hypergraph(h: Hypergraph, comments: Sequence[str] = ()) -> str:
    """Render a hypergraph file.

    Args:
        h: The hypergraph.
        comments: Comment lines written before the header, without the leading '#'.
    """
    lines = [f"# {comment}" for comment in comments]
    lines.append(f"{h.n} {h.m} {h.r}")
    lines.extend(" ".join(map(str, edge)) for edge in h.edges)
    return "\n".join(lines) + "\n"


def read_hypergraph(path: Path) -> Hypergraph:
    """Read and parse a hypergraph file.

    Raises:
        OSError: If the file cannot be read.
        FileFormatError: If the content is not UTF-8 text or is malformed.
    """
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise FileFormatError(exc, str(path)) from exc
    return parse_hypergraph(text, str(path))


def write_hypergraph(path: Path, h: Hypergraph, comments: Sequence[str] = ()) -> None:
    """Write a hypergraph file."""
    path.write_text(serialize_hypergraph(h, comments), encoding="utf-8")
    logger.info("Wrote %s-graph with %s vertices and %s edges to %s", h.r, h.n, h.m, path)


def serialize_certificate(cert: Certificate) -> str:
    """Render a certificate file."""
    if isinstance(cert, ProperColoring):
        coloring = cert.coloring
        return f"COLORING {coloring.palette}\n{' '.join(map(str, coloring.colors))}\n"
    emb = cert.embedding
    lines = ["EMBEDDING"]
    lines.extend(f"{pv} {hv}" for pv, hv in enumerate(emb.vertex_map))
    lines.extend(f"{pe} {he}" for pe, he in enumerate(emb.edge_map))
    return "\n".join(lines) + "\n"


def _indexed_block(pairs: Sequence[Tuple[int, int]], what: str) -> Tuple[int, ...]:
    """Check that pairs are indexed 0, 1, 2, ... and return their values."""
    for expected, (index, _) in enumerate(pairs):
        if index != expected:
            raise ValueError(f"{what} line {expected} has index {index}")
    return tuple(value for _, value in pairs)


def parse_certificate(text: str, source: str = STRING_SOURCE) -> Certificate:
    """Parse a certificate file.

    Raises:
        FileFormatError: If the content is not UTF-8 text or is malformed.
    """
    try:
        lines = _content_lines(text)
        if not lines:
            raise ValueError("empty certificate")
        head = lines[0].split()
        if head[0] == "COLORING" and len(head) == 2:
            palette = int(head[1])
            if len(lines) > 2:
                raise ValueError("a coloring certificate has a single line of colors")
            colors = _ints(lines[1]) if len(lines) == 2 else []
            return ProperColoring(coloring=Coloring(colors=tuple(colors), palette=palette))
        if head == ["EMBEDDING"]:
            pairs: List[Tuple[int, int]] = []
            for line in lines[1:]:
                values = _ints(line)
                if len(values) != 2:
                    raise ValueError(f"expected 'pattern host', found {line!r}")
                pairs.append((values[0], values[1]))
            split = next((i for i in range(1, len(pairs)) if pairs[i][0] == 0), None)
            if split is None:
                raise ValueError("embedding needs a vertex block and an edge block")
            return TreeCopy(
                embedding=Embedding(
                    vertex_map=_indexed_block(pairs[:split], "vertex"),
                    edge_map=_indexed_block(pairs[split:], "edge"),
                )
            )
        raise ValueError(f"unknown certificate header {lines[0]!r}")
    except (ValueError, ValidationError) as exc:
        raise FileFormatError(exc, source) from exc


def read_certificate(path: Path) -> Certificate:
    """Read and parse a certificate file.

    Raises:
        OSError: If the file cannot be read.
        FileFormatError: If the content is not UTF-8 text or is malformed.
    """
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise FileFormatError(exc, str(path)) from exc
    return parse_certificate(text, str(path))


def write_certificate(path: Path, cert: Certificate) -> None:
    """Write a certificate file."""
    path.write_text(serialize_certificate(cert), encoding="utf-8")
    logger.info("Wrote %s certificate to %s", cert.kind, path)
