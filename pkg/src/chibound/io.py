"""Readers and writers for DIMACS ``.col`` files and plain edge lists.

DIMACS: ``c`` comment lines, one ``p edge N M`` header, ``e U V`` lines with
1-based vertices. Edge list: one ``U V`` pair per line, 0-based, ``#`` starts a
comment. The edge-list writer emits a ``# n N`` header so that trailing
isolated vertices survive a round trip; the reader honours it when present.

Both writers list edges in ascending lexicographic order, so output is
byte-deterministic for a given graph.
"""

from __future__ import annotations

import os
import re
from typing import Optional, Union

from .exceptions import GraphFormatError
from .graph import Graph

PathLike = Union[str, "os.PathLike[str]"]

_N_HEADER = re.compile(r"^#\s*n\s+(\d+)\s*$")


def parse_dimacs(text: str) -> Graph:
    n: Optional[int] = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphFormatError(f"line {lineno}: expected 'p edge N M'")
            n = _int(parts[2], lineno)
            _int(parts[3], lineno)
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'e U V'")
            u, v = _int(parts[1], lineno), _int(parts[2], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"line {lineno}: vertex out of range 1..{n}")
            if u == v:
                raise GraphFormatError(f"line {lineno}: self-loop")
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise GraphFormatError("missing 'p edge N M' line")
    return Graph(n, edges)


def parse_edgelist(text: str) -> Graph:
    n_header: Optional[int] = None
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        match = _N_HEADER.match(raw.strip())
        if match:
            n_header = int(match.group(1))
            continue
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'U V'")
        u, v = _int(parts[0], lineno), _int(parts[1], lineno)
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop")
        edges.append((u, v))
        top = max(top, u, v)
    n = top + 1 if n_header is None else n_header
    if top >= n:
        raise GraphFormatError(f"vertex {top} exceeds declared n={n}")
    return Graph(n, edges)


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: not an integer: {token!r}") from None


def format_dimacs(g: Graph) -> str:
    edges = g.edges()
    lines = [f"p edge {g.n} {len(edges)}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in edges]
    return "\n".join(lines) + "\n"


def format_edgelist(g: Graph) -> str:
    lines = [f"# n {g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def detect_format(text: str) -> str:
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line[0] == "#":
            continue
        return "dimacs" if line[0] in "cpe" else "edges"
    return "edges"


def read_graph(path: PathLike, format: Optional[str] = None) -> Graph:
    """Read a graph file; ``format`` is ``"dimacs"``, ``"edges"`` or ``None``
    to sniff it from the first non-comment line."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except UnicodeDecodeError as exc:
        raise GraphFormatError(f"{path}: not a text file") from exc
    return loads(text, format)


def loads(text: str, format: Optional[str] = None) -> Graph:
    fmt = format or detect_format(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edges":
        return parse_edgelist(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def dumps(g: Graph, format: str = "edges") -> str:
    if format == "dimacs":
        return format_dimacs(g)
    if format == "edges":
        return format_edgelist(g)
    raise ValueError(f"unknown graph format {format!r}")


def write_graph(g: Graph, path: PathLike, format: str = "edges") -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(g, format))
