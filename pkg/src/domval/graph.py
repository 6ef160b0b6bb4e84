"""Simple undirected graphs stored as per-vertex neighbor bitmasks.

Vertices are ``0..n-1`` internally.  Everything that crosses the text
boundary (edge-list files, rendered output) uses 1-based labels so that
hand-written fixtures read the same way the usual textbook drawings do.

A vertex set is a plain ``int`` bitmask: bit ``i`` set means vertex ``i``
is a member.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 128


class GraphError(ValueError):
    """Invalid graph construction or query."""


class GraphFormatError(GraphError):
    """Malformed edge-list text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphSizeError(GraphError):
    """Graph exceeds the supported vertex bound."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    """Vertex ids in ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``adj[v]`` is the bitmask of the open neighborhood of ``v``.  Use
    :meth:`from_edges` rather than the raw constructor unless the masks
    are already known to be valid.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        if self.n > MAX_VERTICES:
            raise GraphSizeError(
                f"graph has {self.n} vertices; at most {MAX_VERTICES} supported"
            )
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v + 1} has a neighbor out of range")
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {v + 1}")
            for u in members(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency {v + 1}-{u + 1}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build from 0-based edge pairs; duplicates and loops are errors."""
        if n > MAX_VERTICES:
            raise GraphSizeError(
                f"graph has {n} vertices; at most {MAX_VERTICES} supported"
            )
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u + 1}, {v + 1}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u + 1}")
            if adj[u] >> v & 1:
                raise GraphError(f"duplicate edge {u + 1}-{v + 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted 0-based pairs ``(u, v)`` with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in members(self.adj[u]) if v > u]

    @property
    def num_edges(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v + 1} out of range 1..{self.n}")

    def components(self) -> list[int]:
        """Connected components as bitmasks, ordered by smallest vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in members(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; ``vertices[i]`` becomes vertex ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            adj.append(mask_of(index[u] for u in members(self.adj[v]) if u in index))
        return Graph(len(vertices), tuple(adj))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of the vertices")
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])


def closed_neighborhood(g: Graph, v: int) -> int:
    """Bitmask of ``N[v]``."""
    g._check_vertex(v)
    return g.closed_mask(v)


def open_neighborhood(g: Graph, v: int) -> int:
    g._check_vertex(v)
    return g.adj[v]


def is_dominating(g: Graph, s: int) -> bool:
    """True if every vertex is in ``s`` or adjacent to a member of ``s``."""
    if s & ~g.full_mask:
        raise GraphError("vertex set contains ids outside the graph")
    covered = s
    for v in members(s):
        covered |= g.adj[v]
    return covered == g.full_mask


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~(a | (1 << v)) for v, a in enumerate(g.adj)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """``g2``'s vertices are shifted up by ``g1.n``; no edges between the two."""
    shift = g1.n
    return Graph(g1.n + g2.n, g1.adj + tuple(a << shift for a in g2.adj))


def is_spanning_subgraph(h: Graph, g: Graph) -> bool:
    return h.n == g.n and all(a & ~b == 0 for a, b in zip(h.adj, g.adj))


# -- edge-list text format ---------------------------------------------------

_TOKEN = re.compile(r"\S+")


def parse_graph(text: str) -> Graph:
    """Parse the ``p <n>`` / ``e <u> <v>`` edge-list format (1-based ids)."""
    n = None
    adj: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = _TOKEN.findall(raw)
        if not tokens or tokens[0].startswith("#"):
            continue
        tag = tokens[0]
        if tag == "p":
            if n is not None:
                raise GraphFormatError("repeated 'p' header", lineno)
            if len(tokens) != 2:
                raise GraphFormatError("expected 'p <n>'", lineno)
            n = _parse_int(tokens[1], lineno)
            if n < 0:
                raise GraphFormatError("vertex count must be non-negative", lineno)
            if n > MAX_VERTICES:
                raise GraphSizeError(
                    f"line {lineno}: graph has {n} vertices; "
                    f"at most {MAX_VERTICES} supported"
                )
            adj = [0] * n
        elif tag == "e":
            if n is None:
                raise GraphFormatError("edge before 'p' header", lineno)
            if len(tokens) != 3:
                raise GraphFormatError("expected 'e <u> <v>'", lineno)
            u, v = (_parse_int(t, lineno) for t in tokens[1:])
            for x in (u, v):
                if not 1 <= x <= n:
                    raise GraphFormatError(f"vertex {x} out of range 1..{n}", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            u -= 1
            v -= 1
            if adj[u] >> v & 1:
                raise GraphFormatError(f"duplicate edge {u + 1}-{v + 1}", lineno)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        else:
            raise GraphFormatError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p <n>' header")
    return Graph(n, tuple(adj))


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"expected an integer, got {token!r}", lineno) from None


def render(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"p {g.n}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def iter_labels(mask: int) -> Iterator[int]:
    """1-based labels of the vertices in ``mask``."""
    return (v + 1 for v in members(mask))
