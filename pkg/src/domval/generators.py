"""Named graph families and their generators.

Labeling conventions (1-based, as rendered):

* ``path:n`` and ``cycle:n`` number the vertices 1..n along the path/cycle.
* ``multipartite:a1,...,ak`` places part 1 on vertices 1..a1, part 2 on the
  next a2 vertices, and so on.
* ``petersen`` has outer cycle 1-2-3-4-5-1, spokes i-(i+5) and the inner
  pentagram 6-8-10-7-9-6.  With this labeling the minimum dominating sets
  through vertex 1 are {1,3,7}, {1,4,10} and {1,8,9}.
* ``matching:m`` pairs 2k-1 with 2k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import MAX_VERTICES, Graph, GraphError, GraphSizeError

KINDS = ("path", "cycle", "multipartite", "complete", "petersen", "matching")


class FamilySpecError(GraphError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        k, p = self.kind, self.params
        if k not in KINDS:
            raise FamilySpecError(f"unknown family {k!r}; expected one of {', '.join(KINDS)}")
        if k == "petersen":
            if p:
                raise FamilySpecError("petersen takes no parameters")
        elif k == "multipartite":
            if len(p) < 2:
                raise FamilySpecError("multipartite needs at least two parts")
            if any(a < 1 for a in p):
                raise FamilySpecError("part sizes must be positive")
        else:
            if len(p) != 1:
                raise FamilySpecError(f"{k} takes exactly one integer parameter")
            lo = {"path": 2, "cycle": 3, "complete": 1, "matching": 1}[k]
            if p[0] < lo:
                raise FamilySpecError(f"{k} needs parameter >= {lo}, got {p[0]}")
        if self.order > MAX_VERTICES:
            raise GraphSizeError(
                f"{self} has {self.order} vertices; at most {MAX_VERTICES} supported"
            )

    @classmethod
    def path(cls, n: int) -> "FamilySpec":
        return cls("path", (n,))

    @classmethod
    def cycle(cls, n: int) -> "FamilySpec":
        return cls("cycle", (n,))

    @classmethod
    def multipartite(cls, parts) -> "FamilySpec":
        return cls("multipartite", tuple(parts))

    @classmethod
    def complete(cls, n: int) -> "FamilySpec":
        return cls("complete", (n,))

    @classmethod
    def petersen(cls) -> "FamilySpec":
        return cls("petersen")

    @classmethod
    def matching(cls, m: int) -> "FamilySpec":
        return cls("matching", (m,))

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``name[:comma-separated-ints]``, e.g. ``multipartite:2,3,4``."""
        name, _, rest = text.strip().partition(":")
        name = name.strip().lower()
        params: tuple[int, ...] = ()
        if rest.strip():
            try:
                params = tuple(int(x) for x in rest.split(","))
            except ValueError:
                raise FamilySpecError(f"malformed family parameters in {text!r}") from None
        elif _:
            raise FamilySpecError(f"missing parameters after ':' in {text!r}")
        return cls(name, params)

    @property
    def order(self) -> int:
        if self.kind == "petersen":
            return 10
        if self.kind == "multipartite":
            return sum(self.params)
        if self.kind == "matching":
            return 2 * self.params[0]
        return self.params[0]

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        return f"{self.kind}:{','.join(map(str, self.params))}"


PETERSEN_EDGES = [
    (1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
    (1, 6), (2, 7), (3, 8), (4, 9), (5, 10),
    (6, 8), (8, 10), (10, 7), (7, 9), (9, 6),
]


def generate(spec: FamilySpec) -> Graph:
    k, p = spec.kind, spec.params
    if k == "path":
        n = p[0]
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if k == "cycle":
        n = p[0]
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if k == "complete":
        n = p[0]
        return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if k == "matching":
        m = p[0]
        return Graph.from_edges(2 * m, [(2 * i, 2 * i + 1) for i in range(m)])
    if k == "petersen":
        return Graph.from_edges(10, [(u - 1, v - 1) for u, v in PETERSEN_EDGES])
    # multipartite
    part_of = [i for i, a in enumerate(p) for _ in range(a)]
    n = len(part_of)
    return Graph.from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if part_of[u] != part_of[v]]
    )


def path_graph(n: int) -> Graph:
    return generate(FamilySpec.path(n))


def cycle_graph(n: int) -> Graph:
    return generate(FamilySpec.cycle(n))


def complete_graph(n: int) -> Graph:
    return generate(FamilySpec.complete(n))


def complete_multipartite_graph(parts) -> Graph:
    return generate(FamilySpec.multipartite(parts))


def petersen_graph() -> Graph:
    return generate(FamilySpec.petersen())


def matching_graph(m: int) -> Graph:
    return generate(FamilySpec.matching(m))


def part_ranges(parts) -> list[range]:
    """0-based vertex ranges occupied by each part of a multipartite graph."""
    out, start = [], 0
    for a in parts:
        out.append(range(start, start + a))
        start += a
    return out
