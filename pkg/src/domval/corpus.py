"""Test corpus and the full verification sweep.

The corpus is every family instance up to a size cap, a few hand-built
witness graphs for sharpness statements, and seeded Erdos-Renyi graphs.
:func:`run_verify` evaluates every check on it and returns outcomes in a
fixed order, so two runs serialize identically.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Mapping

from . import closed_forms
from .checks import (
    FAIL,
    NOT_APPLICABLE,
    PASS,
    CheckOutcome,
    check_classical_bounds,
    check_disjoint_union,
    check_max_degree_structure,
    check_neighborhood_bounds,
    check_spanning_subgraph,
    check_sum_identity,
)
from .generators import FamilySpec, generate
from .graph import Graph, complement, disjoint_union, render
from .solver import ORACLE_MAX_N, DominationReport, domination_report, oracle_report

DEFAULT_MAX_N = 30
DEFAULT_SEEDS = 200
DEFAULT_ER_PROBS = (0.2, 0.5, 0.8)
RANDOM_MAX_N = 12
ORACLE_CORPUS_MAX_N = 14


def forked_star() -> Graph:
    """Centre (label 1) joined to three vertices that each carry two leaves.

    The three support vertices form the only minimum dominating set, all
    inside N[centre], while the centre is not itself a support vertex.
    """
    edges = []
    for i in range(3):
        hub = 1 + 3 * i
        edges += [(0, hub), (hub, hub + 1), (hub, hub + 2)]
    return Graph.from_edges(10, edges)


def isolated_vertex_witness() -> Graph:
    """K1 + K2 + 2 P3 with the isolated vertex labelled 1: tau 2, gamma 4."""
    g = Graph.empty(1)
    for part in (generate(FamilySpec.complete(2)), generate(FamilySpec.path(3)),
                 generate(FamilySpec.path(3))):
        g = disjoint_union(g, part)
    return g


def zero_dv_max_degree_witness() -> Graph:
    """Order 9, max degree 6 at vertex 1, unique gamma-set {x0, y0}, dv(1) = 0.

    Labels: 1 = v, 2 = x0, 3 = y0, 4..7 = rest of N(v), 8 = alpha, 9 = beta.
    x0 sees alpha, 4, 5; y0 sees beta, 6, 7; x0 and y0 are adjacent.
    """
    v, x0, y0, a, b, c, d, alpha, beta = range(9)
    edges = [(v, u) for u in (x0, y0, a, b, c, d)]
    edges += [(x0, alpha), (x0, a), (x0, b), (y0, beta), (y0, c), (y0, d), (x0, y0)]
    return Graph.from_edges(9, edges)


def witness_graphs() -> dict[str, Graph]:
    return {
        "witness:forked-star": forked_star(),
        "witness:isolated": isolated_vertex_witness(),
        "witness:zero-dv": zero_dv_max_degree_witness(),
    }


def random_graph(seed: int, probs=DEFAULT_ER_PROBS, max_n: int = RANDOM_MAX_N) -> Graph:
    """Seeded G(n, p) with n in 1..max_n and p cycling through ``probs``."""
    rng = random.Random(seed)
    p = probs[seed % len(probs)]
    n = rng.randint(1, max_n)
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def family_specs(max_n: int = DEFAULT_MAX_N) -> list[FamilySpec]:
    specs = [FamilySpec.path(n) for n in range(2, max_n + 1)]
    specs += [FamilySpec.cycle(n) for n in range(3, max_n + 1)]
    for k in (2, 3):
        for parts in itertools.product(range(1, 6), repeat=k):
            if sum(parts) <= max_n:
                specs.append(FamilySpec.multipartite(parts))
    specs += [FamilySpec.complete(n) for n in range(1, min(max_n, 8) + 1)]
    specs += [FamilySpec.matching(m) for m in range(1, 7) if 2 * m <= max_n]
    if max_n >= 10:
        specs.append(FamilySpec.petersen())
    return specs


@dataclass
class CorpusEntry:
    name: str
    graph: Graph
    spec: FamilySpec | None = None
    _reports: dict = field(default_factory=dict, repr=False)

    def report(self) -> DominationReport:
        if "g" not in self._reports:
            self._reports["g"] = domination_report(self.graph, limit=0)
        return self._reports["g"]

    def complement_report(self) -> DominationReport:
        if "c" not in self._reports:
            self._reports["c"] = domination_report(complement(self.graph), limit=0)
        return self._reports["c"]


def build_corpus(
    max_n: int = DEFAULT_MAX_N, seeds: int = DEFAULT_SEEDS, er_probs=DEFAULT_ER_PROBS
) -> list[CorpusEntry]:
    entries = [CorpusEntry(f"family:{s}", generate(s), s) for s in family_specs(max_n)]
    entries += [CorpusEntry(k, g) for k, g in witness_graphs().items() if g.n <= max_n]
    rmax = min(RANDOM_MAX_N, max_n)
    entries += [
        CorpusEntry(f"random:{seed}", random_graph(seed, tuple(er_probs), rmax))
        for seed in range(seeds)
    ]
    return entries


Formulas = Mapping[str, Callable]

DEFAULT_FORMULAS: dict[str, Callable] = {
    "cycle": closed_forms.cycle_report,
    "path": closed_forms.path_report,
    "multipartite_paper": closed_forms.multipartite_report_paper,
    "multipartite_corrected": closed_forms.multipartite_report_corrected,
    "complete": closed_forms.complete_report,
    "matching": closed_forms.matching_report,
    "petersen": closed_forms.petersen_report,
    "matching_complement": closed_forms.matching_complement_identity,
}


def _agreement(subject: str, name: str, formula, report: DominationReport) -> CheckOutcome:
    got = (report.gamma, report.tau, report.dv)
    want = (formula.gamma, formula.tau, formula.dv)
    details = {"formula": {"gamma": want[0], "tau": want[1], "dv": list(want[2])}}
    if got != want:
        details["solver"] = {"gamma": got[0], "tau": got[1], "dv": list(got[2])}
    return CheckOutcome(name, PASS if got == want else FAIL, details, subject)


def _formula_checks(entry: CorpusEntry, formulas: Formulas) -> list[CheckOutcome]:
    spec = entry.spec
    r = entry.report()
    out = []
    k, p = spec.kind, spec.params
    if k in ("cycle", "path", "complete", "matching"):
        out.append(_agreement(entry.name, f"formula_{k}", formulas[k](p[0]), r))
    elif k == "petersen":
        out.append(_agreement(entry.name, "formula_petersen", formulas["petersen"](), r))
    elif k == "multipartite":
        if min(p) >= 3 or min(p) == 1:
            out.append(_agreement(entry.name, "formula_multipartite_paper",
                                  formulas["multipartite_paper"](p), r))
        if min(p) >= 2:
            out.append(_agreement(entry.name, "formula_multipartite_corrected",
                                  formulas["multipartite_corrected"](p), r))
    if k == "matching" and p[0] >= 2:
        dv_g, dv_gbar, total = formulas["matching_complement"](p[0])
        rc = entry.complement_report()
        n = entry.graph.n
        ok = all(r.dv[v] == dv_g and rc.dv[v] == dv_gbar and r.dv[v] + rc.dv[v] == total
                 for v in range(n)) and total == n - 1 + 2 ** (n // 2 - 1)
        details = {"dv_g": dv_g, "dv_complement": dv_gbar, "total": total}
        if not ok:
            details["solver_dv_g"] = list(r.dv)
            details["solver_dv_complement"] = list(rc.dv)
        out.append(CheckOutcome("matching_complement_identity", PASS if ok else FAIL,
                                details, entry.name))
    return out


def _oracle_check(entry: CorpusEntry) -> CheckOutcome:
    fast = domination_report(entry.graph)
    slow = oracle_report(entry.graph)
    ok = fast == slow
    details = {"gamma": fast.gamma, "tau": fast.tau}
    if not ok:
        details.update(graph=render(entry.graph), solver=fast.to_dict(), oracle=slow.to_dict())
    return CheckOutcome("oracle_equivalence", PASS if ok else FAIL, details, entry.name)


def _with_subject(o: CheckOutcome, subject: str) -> CheckOutcome:
    return CheckOutcome(o.name, o.status, o.details, subject)


def _graph_checks(entry: CorpusEntry) -> list[CheckOutcome]:
    g, r = entry.graph, entry.report()
    out = [
        check_sum_identity(g, r),
        check_classical_bounds(g, r, entry.complement_report()),
        check_max_degree_structure(g, r),
    ]
    out += [check_neighborhood_bounds(g, v, r) for v in range(g.n)]
    return [_with_subject(o, entry.name) for o in out]


def _random_spanning_checks(entry: CorpusEntry) -> list[CheckOutcome]:
    g = entry.graph
    edges = g.edges()
    if not edges:
        return []
    # drop the lexicographically first edge
    h = Graph.from_edges(g.n, edges[1:])
    return [_with_subject(check_spanning_subgraph(h, g, domination_report(h, limit=0),
                                                  entry.report()), entry.name)]


def run_verify(
    max_n: int = DEFAULT_MAX_N,
    seeds: int = DEFAULT_SEEDS,
    er_probs=DEFAULT_ER_PROBS,
    formulas: Formulas | None = None,
) -> list[CheckOutcome]:
    """Run every check over the corpus.

    ``formulas`` overrides entries of :data:`DEFAULT_FORMULAS`, which is how
    a deliberately broken formula can be fed through the sweep.
    """
    if max_n < 1 or seeds < 0:
        raise ValueError("max_n must be >= 1 and seeds >= 0")
    formulas = {**DEFAULT_FORMULAS, **(formulas or {})}
    corpus = build_corpus(max_n, seeds, er_probs)
    by_name = {e.name: e for e in corpus}
    outcomes: list[CheckOutcome] = []

    for entry in corpus:
        outcomes += _graph_checks(entry)
        if entry.spec is not None:
            outcomes += _formula_checks(entry, formulas)
        if entry.graph.n <= ORACLE_CORPUS_MAX_N and entry.graph.n <= ORACLE_MAX_N:
            outcomes.append(_oracle_check(entry))
        if entry.name.startswith("random:"):
            outcomes += _random_spanning_checks(entry)

    for n in range(3, max_n + 1):
        p, c = by_name[f"family:path:{n}"], by_name[f"family:cycle:{n}"]
        o = check_spanning_subgraph(p.graph, c.graph, p.report(), c.report())
        outcomes.append(_with_subject(o, f"family:path:{n}<cycle:{n}"))

    small = [e for e in corpus if e.spec is not None and e.graph.n <= 6]
    small += [e for e in corpus if e.name.startswith("random:") and 1 <= e.graph.n <= 6][:20]
    for a, b in zip(small, small[1:]):
        o = check_disjoint_union(a.graph, b.graph, a.report(), b.report())
        outcomes.append(_with_subject(o, f"{a.name}+{b.name}"))

    outcomes += _sharpness_checks(outcomes)
    outcomes.sort(key=_order_key)
    return outcomes


def _order_key(o: CheckOutcome):
    return (o.subject, o.name, o.details.get("v0", 0))


def _sharpness_checks(outcomes: list[CheckOutcome]) -> list[CheckOutcome]:
    """Confirm each neighborhood-sum bound is attained somewhere in the corpus."""
    want = {
        "lower": "family:path:3",
        "tau_gamma": "witness:forked-star",
        "degree": "witness:isolated",
    }
    out = []
    for bound, subject in want.items():
        hits = [o for o in outcomes if o.name == "neighborhood_bounds" and o.subject == subject
                and bound in o.details["tight"]]
        if not any(e.subject == subject for e in outcomes):
            out.append(CheckOutcome(f"sharpness_{bound}", NOT_APPLICABLE, {}, subject))
            continue
        ok = any(o.details["v0"] == 1 for o in hits)
        out.append(CheckOutcome(f"sharpness_{bound}", PASS if ok else FAIL,
                                {"v0": 1, "tight_at": [o.details["v0"] for o in hits]}, subject))
    return out


def summarize(outcomes: list[CheckOutcome]) -> dict[str, int]:
    counts = {PASS: 0, FAIL: 0, NOT_APPLICABLE: 0}
    for o in outcomes:
        counts[o.status] += 1
    return counts
