"""
Graph file I/O
Edge-list text files with an optional YAML metadata header, and graph6
strings (codec from networkx)
"""

from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import networkx as nx
import yaml

from .graph import Graph, GraphError, build_graph

PathLike = Union[str, Path]

GRAPH6_SUFFIXES = (".g6", ".graph6")


class ParseError(GraphError):
    """Malformed graph file; carries the 1-based line number"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


# ============================================
# Edge-list format
# ============================================

def _split_header(text: str) -> Tuple[Dict[str, Any], List[Tuple[int, str]]]:
    """Leading '#' lines form a YAML header; returns (metadata, numbered data lines)."""
    header: List[str] = []
    data: List[Tuple[int, str]] = []
    in_header = True
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            if in_header:
                header.append(stripped[1:].removeprefix(" "))
            continue
        if not stripped:
            continue
        in_header = False
        data.append((number, stripped))

    metadata: Dict[str, Any] = {}
    if header:
        try:
            loaded = yaml.safe_load("\n".join(header))
        except yaml.YAMLError as e:
            raise ParseError(f"bad metadata header: {e}", 1) from e
        if isinstance(loaded, dict):
            metadata = loaded
    return metadata, data


def _parse_int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError as e:
        raise ParseError(f"expected an integer, got {token!r}", line) from e


def parse_edge_list(text: str) -> Tuple[Graph, Dict[str, Any]]:
    """
    Parse "n m" followed by m lines "u v" (0-indexed).

    Returns:
        (graph, metadata from the '#' header)

    Raises:
        ParseError: with the offending line number
    """
    metadata, data = _split_header(text)
    if not data:
        raise ParseError("empty edge list, expected a 'n m' header line", 1)

    first_line, first = data[0]
    tokens = first.split()
    if len(tokens) != 2:
        raise ParseError(f"expected 'n m', got {first!r}", first_line)
    n, m = (_parse_int(t, first_line) for t in tokens)
    if n < 0 or m < 0:
        raise ParseError("n and m must be non-negative", first_line)

    body = data[1:]
    if len(body) != m:
        line = body[-1][0] if body else first_line
        raise ParseError(f"header announces {m} edges, found {len(body)}", line)

    edges = []
    for number, row in body:
        parts = row.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {row!r}", number)
        u, v = (_parse_int(t, number) for t in parts)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) has an endpoint outside [0, {n})", number)
        if u == v:
            raise ParseError(f"self-loop ({u}, {v})", number)
        edges.append((u, v))
    return build_graph(edges, n), metadata


def format_edge_list(g: Graph, metadata: Optional[Dict[str, Any]] = None) -> str:
    lines: List[str] = []
    if metadata:
        dumped = yaml.safe_dump(metadata, sort_keys=False, default_flow_style=False).rstrip("\n")
        lines.extend(f"# {row}" for row in dumped.splitlines())
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ============================================
# graph6
# ============================================

def to_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").strip()


def from_graph6(s: str, line: Optional[int] = None) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    try:
        h = nx.from_graph6_bytes(s.encode("ascii"))
    except (ValueError, nx.NetworkXError, UnicodeEncodeError) as e:
        raise ParseError(f"invalid graph6 string {s!r}: {e}", line) from e
    return Graph.from_networkx(h)


def parse_graph6(text: str) -> List[Graph]:
    """One graph per non-comment line."""
    graphs = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        graphs.append(from_graph6(stripped, number))
    if not graphs:
        raise ParseError("no graph6 line found", 1)
    return graphs


# ============================================
# Files
# ============================================

def _looks_like_graph6(text: str) -> bool:
    for raw in text.splitlines():
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        return len(stripped.split()) == 1
    return False


def read_graph_with_metadata(path: PathLike) -> Tuple[Graph, Dict[str, Any]]:
    """
    Load a graph file; format picked by suffix, then by content.

    Raises:
        ParseError: malformed content
        FileNotFoundError: missing file
    """
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() in GRAPH6_SUFFIXES or _looks_like_graph6(text):
        return parse_graph6(text)[0], {}
    return parse_edge_list(text)


def read_graph(path: PathLike) -> Graph:
    return read_graph_with_metadata(path)[0]


def read_graphs(path: PathLike) -> List[Graph]:
    """Every graph in a file (graph6 files may hold many)."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() in GRAPH6_SUFFIXES or _looks_like_graph6(text):
        return parse_graph6(text)
    return [parse_edge_list(text)[0]]


def write_edge_list(g: Graph, path: PathLike, metadata: Optional[Dict[str, Any]] = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_edge_list(g, metadata), encoding="utf-8")
    return path


def write_graph6(graphs: Union[Graph, List[Graph]], path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    if isinstance(graphs, Graph):
        graphs = [graphs]
    path.write_text("".join(to_graph6(h) + "\n" for h in graphs), encoding="ascii")
    return path


__all__ = [
    "ParseError",
    "parse_edge_list",
    "format_edge_list",
    "to_graph6",
    "from_graph6",
    "parse_graph6",
    "read_graph",
    "read_graph_with_metadata",
    "read_graphs",
    "write_edge_list",
    "write_graph6",
]
