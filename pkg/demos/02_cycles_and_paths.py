"""
Closed forms for cycles and paths
=================================

tau and dv depend only on n mod 3 (and, for paths, on the position of the
vertex mod 3).  Here the formulas are laid next to exhaustive enumeration.
"""

from domval.closed_forms import cycle_report, path_report
from domval.generators import cycle_graph, path_graph
from domval.solver import domination_report

print(" n  tau(C_n)  dv(C_n)  tau(P_n)  dv(P_n)")
for n in range(3, 16):
    c, p = cycle_report(n), path_report(n)
    solved_c = domination_report(cycle_graph(n), 0)
    assert (c.tau, c.dv) == (solved_c.tau, solved_c.dv)
    assert p.dv == domination_report(path_graph(n), 0).dv
    print(f"{n:>2}  {c.tau:>8}  {c.dv[0]:>7}  {p.tau:>8}  {' '.join(map(str, p.dv))}")

# P_n is a spanning subgraph of C_n with the same gamma, so it has no more gamma-sets
assert all(path_report(n).tau <= cycle_report(n).tau for n in range(3, 31))
