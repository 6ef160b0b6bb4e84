"""Exact domination number, minimum dominating set enumeration and
per-vertex domination values.

Two independent routes produce the same :class:`DominationReport`:

* :func:`domination_report` - bitset branch-and-bound, solved component by
  component and recombined with the disjoint-union product rule.
* :func:`oracle_report` - brute force over all k-subsets for increasing k.
  It shares no search code with the first route and exists to check it.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from math import prod

from .graph import Graph, GraphError, members, popcount

DEFAULT_LIMIT = 100_000
ORACLE_MAX_N = 20


class SolverError(GraphError):
    pass


class OracleRefusal(SolverError):
    """Graph too large for exhaustive search."""


@dataclass(frozen=True)
class DominationReport:
    """Result of a full domination analysis.

    ``dv[v]`` is the number of minimum dominating sets containing vertex
    ``v``.  ``gamma_sets`` holds sorted 0-based id tuples in lexicographic
    order; when there are more than the retention limit, only the
    lexicographically smallest ones are kept and ``truncated`` is set.
    ``tau`` and ``dv`` are exact either way.
    """

    gamma: int
    tau: int
    dv: tuple[int, ...]
    gamma_sets: tuple[tuple[int, ...], ...] = field(default=(), repr=False)
    truncated: bool = False

    @property
    def n(self) -> int:
        return len(self.dv)

    def to_dict(self) -> dict:
        """JSON-friendly view with 1-based vertex labels."""
        return {
            "n": self.n,
            "gamma": self.gamma,
            "tau": self.tau,
            "dv": list(self.dv),
            "gamma_sets": [[v + 1 for v in s] for s in self.gamma_sets],
            "truncated": self.truncated,
        }


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _greedy_upper_bound(closed: list[int], full: int) -> int:
    dominated = 0
    size = 0
    while dominated != full:
        undom = full & ~dominated
        best = max(range(len(closed)), key=lambda v: (popcount(closed[v] & undom), -v))
        dominated |= closed[best]
        size += 1
    return size


def _pick_branch_vertex(closed: list[int], undom: int, forbidden: int) -> tuple[int, int]:
    """Undominated vertex with the fewest non-forbidden dominators."""
    best_u, best_c, best_k = -1, 0, 1 << 30
    for u in members(undom):
        cand = closed[u] & ~forbidden
        k = popcount(cand)
        if k < best_k:
            best_u, best_c, best_k = u, cand, k
            if k <= 1:
                break
    return best_u, best_c


def _min_dominating_size(closed: list[int]) -> int:
    n = len(closed)
    full = (1 << n) - 1
    cover = max(popcount(c) for c in closed)
    best = _greedy_upper_bound(closed, full)

    def search(depth: int, dominated: int, forbidden: int) -> None:
        nonlocal best
        if dominated == full:
            best = depth
            return
        undom = full & ~dominated
        if depth + _ceil_div(popcount(undom), cover) >= best:
            return
        _, cand = _pick_branch_vertex(closed, undom, forbidden)
        for c in members(cand):
            search(depth + 1, dominated | closed[c], forbidden)
            forbidden |= 1 << c
            if depth + 1 >= best:
                return

    search(0, 0, 0)
    return best


class _Enumeration:
    """All dominating sets of a fixed size on a connected graph.

    Branching on N[u] for an undominated u, with earlier candidates
    forbidden in later branches, reaches every set exactly once: a set is
    found only in the branch of its first member within N[u].
    """

    def __init__(self, closed: list[int], gamma: int, limit: int):
        self.closed = closed
        self.n = len(closed)
        self.full = (1 << self.n) - 1
        self.gamma = gamma
        self.limit = limit
        self.cover = max(popcount(c) for c in closed)
        self.tau = 0
        self.dv = [0] * self.n
        self._kept: list[tuple[int, ...]] = []

    def run(self) -> None:
        self._search(0, 0, 0, 0)

    def _record(self, chosen: int) -> None:
        ids = members(chosen)
        self.tau += 1
        for v in ids:
            self.dv[v] += 1
        if self.limit:
            self._kept.append(tuple(ids))
            if len(self._kept) >= 2 * self.limit:
                self._kept.sort()
                del self._kept[self.limit:]

    def _search(self, depth: int, chosen: int, dominated: int, forbidden: int) -> None:
        if dominated == self.full:
            if depth != self.gamma:
                raise SolverError("found a dominating set smaller than gamma")
            self._record(chosen)
            return
        if depth == self.gamma:
            return
        undom = self.full & ~dominated
        if depth + _ceil_div(popcount(undom), self.cover) > self.gamma:
            return
        _, cand = _pick_branch_vertex(self.closed, undom, forbidden)
        closed = self.closed
        for c in members(cand):
            self._search(depth + 1, chosen | 1 << c, dominated | closed[c], forbidden)
            forbidden |= 1 << c

    def kept(self) -> list[tuple[int, ...]]:
        self._kept.sort()
        if any(a == b for a, b in zip(self._kept, self._kept[1:])):
            raise SolverError("enumeration produced a duplicate set")
        return self._kept[: self.limit]


def _smallest_unions(
    left: list[tuple[int, ...]], right: list[tuple[int, ...]], limit: int
) -> list[tuple[int, ...]]:
    """The ``limit`` lexicographically smallest unions ``a | b``.

    ``left`` and ``right`` are sorted lists of equal-size sets over
    disjoint vertex ranges, so the union order is monotone in both
    arguments and a best-first walk of the index grid suffices.
    """
    if not left or not right or limit <= 0:
        return []
    out = []
    heap = [(tuple(sorted(left[0] + right[0])), 0, 0)]
    seen = {(0, 0)}
    while heap and len(out) < limit:
        key, i, j = heapq.heappop(heap)
        out.append(key)
        for a, b in ((i + 1, j), (i, j + 1)):
            if a < len(left) and b < len(right) and (a, b) not in seen:
                seen.add((a, b))
                heapq.heappush(heap, (tuple(sorted(left[a] + right[b])), a, b))
    return out


def _component_closed(g: Graph, comp: list[int]) -> list[int]:
    sub = g.induced(comp)
    return [sub.closed_mask(v) for v in range(sub.n)]


def domination_number(g: Graph) -> int:
    """Size of a smallest dominating set, by branch and bound."""
    if g.n == 0:
        raise SolverError("domination number undefined for the empty graph")
    return sum(
        _min_dominating_size(_component_closed(g, members(c))) for c in g.components()
    )


def enumerate_gamma_sets(g: Graph, limit: int = DEFAULT_LIMIT) -> DominationReport:
    """Enumerate all minimum dominating sets.

    ``limit`` caps how many sets are retained (``0`` counts only); ``tau``
    and ``dv`` are always exact.
    """
    if g.n == 0:
        raise SolverError("domination analysis undefined for the empty graph")
    if limit < 0:
        raise ValueError("limit must be non-negative")
    gamma = 0
    taus: list[int] = []
    parts: list[tuple[list[int], list[int]]] = []
    sets: list[tuple[int, ...]] | None = None
    for comp_mask in g.components():
        comp = members(comp_mask)
        closed = _component_closed(g, comp)
        size = _min_dominating_size(closed)
        run = _Enumeration(closed, size, limit)
        run.run()
        gamma += size
        taus.append(run.tau)
        parts.append((comp, run.dv))
        local = [tuple(comp[v] for v in s) for s in run.kept()]
        sets = local if sets is None else _smallest_unions(sets, local, limit)

    tau = prod(taus)
    dv = [0] * g.n
    for (comp, local_dv), t in zip(parts, taus):
        others = tau // t
        for i, v in enumerate(comp):
            dv[v] = local_dv[i] * others
    if sum(dv) != tau * gamma:
        raise SolverError("domination values do not sum to tau * gamma")
    kept = tuple(sets or ()) if limit else ()
    return DominationReport(gamma, tau, tuple(dv), kept, tau > len(kept))


def domination_report(g: Graph, limit: int = DEFAULT_LIMIT) -> DominationReport:
    return enumerate_gamma_sets(g, limit)


def oracle_report(g: Graph, limit: int = DEFAULT_LIMIT) -> DominationReport:
    """Same contract as :func:`domination_report`, by exhaustive subset scan."""
    n = g.n
    if n == 0:
        raise SolverError("domination analysis undefined for the empty graph")
    if n > ORACLE_MAX_N:
        raise OracleRefusal(f"oracle refuses n={n}; exhaustive search limited to n <= {ORACLE_MAX_N}")
    if limit < 0:
        raise ValueError("limit must be non-negative")
    nbrs = [{v} for v in range(n)]
    for u, v in g.edges():
        nbrs[u].add(v)
        nbrs[v].add(u)
    everything = set(range(n))
    for k in range(1, n + 1):
        found = [
            combo
            for combo in itertools.combinations(range(n), k)
            if set().union(*(nbrs[v] for v in combo)) == everything
        ]
        if found:
            break
    dv = [0] * n
    for combo in found:
        for v in combo:
            dv[v] += 1
    kept = tuple(found[:limit])
    return DominationReport(k, len(found), tuple(dv), kept, len(found) > len(kept))
