"""Parsing and serialization of matroid descriptions.

Two file formats are understood.  A matrix file starts with a header line
``r n`` and continues with r rows of n space-free 0/1 characters, followed
by an optional line of n whitespace-separated element labels.  A graph
file starts with the word ``graph`` and lists one edge per line as two
whitespace-separated vertex tokens; the edges become the elements, in
order, labeled e0, e1, and so on.  Anything that is not a readable file is
treated as a name spec such as ``s8`` or ``K:4``.
"""

from __future__ import annotations

import os

from .errors import MalformedInputError
from .gf2 import Gf2Matrix
from .matroid import BinaryMatroid
from .zoo import graphic, make

MAX_ELEMENTS = 64


def _meaningful_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line:
            out.append((no, line))
    return out


def parse_matrix_text(text: str) -> BinaryMatroid:
    """Parse the ``r n`` + 0/1 rows format, with an optional label line."""
    lines = _meaningful_lines(text)
    if not lines:
        raise MalformedInputError("empty input", line=1)
    no, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise MalformedInputError("first line must be 'r n'", line=no)
    r, n = int(parts[0]), int(parts[1])
    if n > MAX_ELEMENTS:
        raise MalformedInputError(f"at most {MAX_ELEMENTS} elements supported", line=no)
    body = lines[1:]
    if len(body) < r:
        raise MalformedInputError(
            f"expected {r} matrix rows, found {len(body)}", line=no
        )
    rows = []
    for no, line in body[:r]:
        if len(line) != n or set(line) - {"0", "1"}:
            raise MalformedInputError(
                f"expected {n} characters of 0/1", line=no
            )
        rows.append([int(ch) for ch in line])
    labels = None
    rest = body[r:]
    if rest:
        no, line = rest[0]
        labels = line.split()
        if len(labels) != n:
            raise MalformedInputError(
                f"label line must list {n} labels, found {len(labels)}", line=no
            )
        if len(set(labels)) != n:
            raise MalformedInputError("labels must be distinct", line=no)
        rest = rest[1:]
    if rest:
        raise MalformedInputError("unexpected trailing content", line=rest[0][0])
    return BinaryMatroid(Gf2Matrix.from_rows(rows, num_cols=n), labels)


def parse_graph_text(text: str) -> BinaryMatroid:
    """Parse the ``graph`` + edge-per-line format into a cycle matroid."""
    lines = _meaningful_lines(text)
    if not lines:
        raise MalformedInputError("empty input", line=1)
    no, head = lines[0]
    if head.lower() != "graph":
        raise MalformedInputError("graph input must start with 'graph'", line=no)
    vertex_ids: dict[str, int] = {}
    edges = []
    for no, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 2:
            raise MalformedInputError("edge lines take exactly two vertex tokens", line=no)
        pair = []
        for tok in tokens:
            if tok not in vertex_ids:
                vertex_ids[tok] = len(vertex_ids)
            pair.append(vertex_ids[tok])
        edges.append((pair[0], pair[1]))
        if len(edges) > MAX_ELEMENTS:
            raise MalformedInputError(
                f"at most {MAX_ELEMENTS} edges supported", line=no
            )
    return graphic(edges, num_vertices=max(len(vertex_ids), 1))


def parse_text(text: str) -> BinaryMatroid:
    """Parse file content, dispatching on its first meaningful line."""
    lines = _meaningful_lines(text)
    if not lines:
        raise MalformedInputError("empty input", line=1)
    no, head = lines[0]
    if head.lower() == "graph":
        return parse_graph_text(text)
    parts = head.split()
    if len(parts) == 2 and all(p.isdigit() for p in parts):
        return parse_matrix_text(text)
    raise MalformedInputError(
        "expected a 'graph' header or an 'r n' matrix header", line=no
    )


def parse_input(source: str) -> BinaryMatroid:
    """Turn a file path, ``graph:@file`` reference, or name spec into a matroid."""
    source = source.strip()
    if source.lower().startswith("graph:@"):
        path = source[len("graph:@"):]
        try:
            with open(path, encoding="utf-8") as fh:
                return parse_graph_text(fh.read())
        except OSError as exc:
            raise MalformedInputError(f"cannot read {path}: {exc.strerror}") from exc
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            return parse_text(fh.read())
    return make(source)


def serialize_matrix(m: BinaryMatroid) -> str:
    """Matrix-format text whose re-parse reproduces the matroid exactly."""
    rep = m.rep
    rows = ["%d %d" % (len(rep.rows), rep.num_cols)]
    for row in rep.rows:
        rows.append("".join(str(row >> j & 1) for j in range(rep.num_cols)))
    if any(not lab or lab.split() != [lab] for lab in m.labels):
        raise ValueError("labels with whitespace cannot be serialized")
    if m.labels:
        rows.append(" ".join(m.labels))
    return "\n".join(rows) + "\n"
