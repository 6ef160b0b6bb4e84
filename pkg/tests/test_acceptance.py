"""Exit criteria.  Each test prints one PASS/FAIL line."""

import io
import itertools
import time
from contextlib import redirect_stdout

import pytest

from domval import cli
from domval.closed_forms import (
    cycle_report,
    matching_complement_identity,
    multipartite_report_corrected,
    multipartite_report_paper,
    path_report,
)
from domval.corpus import build_corpus, family_specs, run_verify
from domval.generators import (
    complete_multipartite_graph,
    cycle_graph,
    generate,
    matching_graph,
    path_graph,
    petersen_graph,
)
from domval.graph import complement
from domval.solver import domination_report, oracle_report


@pytest.fixture
def verdict(capsys):
    def _verdict(number, label, ok, extra=""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {label}{extra}")
        assert ok

    return _verdict


def triple(r):
    return r.gamma, r.tau, r.dv


def test_1_paper_fixtures(verdict):
    start = time.perf_counter()
    ok = (
        triple(domination_report(cycle_graph(4))) == (2, 6, (3,) * 4)
        and triple(domination_report(cycle_graph(6))) == (2, 3, (1,) * 6)
        and triple(domination_report(path_graph(4))) == (2, 4, (2,) * 4)
        and triple(domination_report(path_graph(5))) == (2, 3, (1, 2, 0, 2, 1))
    )
    pet = domination_report(petersen_graph())
    through_1 = [{v + 1 for v in s} for s in pet.gamma_sets if 0 in s]
    pet_ok = (
        pet.gamma == 3
        and pet.dv == (3,) * 10
        and through_1 == [{1, 3, 7}, {1, 4, 10}, {1, 8, 9}]
        and sum(pet.dv) // pet.gamma == 10 == pet.tau
        and oracle_report(petersen_graph()).tau == 10
    )
    elapsed = time.perf_counter() - start
    verdict(1, "paper fixtures C4, C6, P4, P5, Petersen", ok and pet_ok and elapsed < 1.0,
            f" ({elapsed:.3f}s < 1s)")


def test_2_cycle_path_sweep(verdict):
    start = time.perf_counter()
    bad = []
    for n in range(3, 31):
        if triple(cycle_report(n)) != triple(domination_report(cycle_graph(n), 0)):
            bad.append(f"C{n}")
        if triple(path_report(n)) != triple(domination_report(path_graph(n), 0)):
            bad.append(f"P{n}")
    elapsed = time.perf_counter() - start
    verdict(2, "closed forms equal solver for C_n, P_n, n=3..30", not bad and elapsed < 60.0,
            f" ({elapsed:.2f}s < 60s, mismatches={bad})")


def test_3_oracle_equivalence(verdict):
    families = [generate(s) for s in family_specs(30) if s.order <= 14]
    randoms = [e.graph for e in build_corpus(max_n=12, seeds=200) if e.name.startswith("random:")]
    assert len(randoms) == 200 and max(g.n for g in randoms) <= 12
    mismatches = sum(domination_report(g) != oracle_report(g) for g in families + randoms)
    verdict(3, "solver == oracle on families (n<=14) and 200 random graphs", mismatches == 0,
            f" ({len(families)} families, {len(randoms)} random, {mismatches} mismatches)")


def test_4_multipartite(verdict):
    def agrees(formula, parts):
        return triple(formula(parts)) == triple(domination_report(complete_multipartite_graph(parts), 0))

    vectors = lambda sizes: [p for k in (2, 3) for p in itertools.product(sizes, repeat=k)]
    paper_ok = all(agrees(multipartite_report_paper, p) for p in vectors(range(3, 6)))
    corrected_ok = all(agrees(multipartite_report_corrected, p) for p in vectors(range(2, 6)))
    k22 = domination_report(complete_multipartite_graph([2, 2]), 0)
    k22_ok = (
        k22.tau == 6 == multipartite_report_corrected([2, 2]).tau
        and multipartite_report_paper([2, 2]).tau == 4
        and k22.tau == domination_report(cycle_graph(4), 0).tau
    )
    verdict(4, "multipartite paper (3..5) and corrected (2..5) formulas; K22 tau 6 vs 4",
            paper_ok and corrected_ok and k22_ok)


def test_5_matching_identity(verdict):
    ok = True
    for m in range(2, 7):
        n = 2 * m
        g = matching_graph(m)
        r, rc = domination_report(g, 0), domination_report(complement(g), 0)
        ok &= all(r.dv[v] + rc.dv[v] == n - 1 + 2 ** (n // 2 - 1) for v in range(n))
        ok &= matching_complement_identity(m)[2] == n - 1 + 2 ** (n // 2 - 1)
    verdict(5, "DV_G(v) + DV_complement(v) = n-1+2^(n/2-1) for mK2, m=2..6", ok)


PROPERTY_CHECKS = {
    "sum_identity",
    "neighborhood_bounds",
    "disjoint_union",
    "spanning_subgraph",
    "classical_bounds",
    "max_degree_structure",
}


def test_6_property_suite(verdict):
    outcomes = run_verify()
    props = [o for o in outcomes if o.name in PROPERTY_CHECKS]
    failures = [o for o in props if o.failed]
    seen = {o.name for o in props if o.passed}
    nb_small = {(o.subject, o.details["v0"]) for o in props
                if o.name == "neighborhood_bounds"}
    corpus = build_corpus()
    every_vertex = all((e.name, v + 1) in nb_small for e in corpus if e.graph.n <= 12
                       for v in range(e.graph.n))
    path_cycle = [o for o in outcomes if o.name == "spanning_subgraph" and "<cycle:" in o.subject]
    gaps = {o.details["max_degree"] - o.details["n"] for o in props
            if o.name == "max_degree_structure" and o.passed}
    sharp = {o.name: o.status for o in outcomes if o.name.startswith("sharpness_")}
    ok = (
        not failures
        and seen == PROPERTY_CHECKS
        and every_vertex
        and len(path_cycle) == 28 and all(o.passed for o in path_cycle)
        and gaps == {-1, -2, -3}
        and sharp == {"sharpness_lower": "pass", "sharpness_tau_gamma": "pass",
                      "sharpness_degree": "pass"}
    )
    verdict(6, "property suite on corpus, sharpness witnesses tight", ok,
            f" ({len(props)} property outcomes, {len(failures)} failures)")


def test_7_determinism(verdict):
    runs = []
    for _ in range(2):
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = cli.main(["--format", "json", "verify"])
        runs.append((code, buf.getvalue().encode()))
    ok = runs[0] == runs[1] and runs[0][0] == 0 and len(runs[0][1]) > 0
    verdict(7, "two full verify runs produce byte-identical JSON", ok,
            f" ({len(runs[0][1])} bytes)")
