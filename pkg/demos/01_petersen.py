"""
Domination values on the Petersen graph
=======================================

Every vertex of the Petersen graph lies in the same number of minimum
dominating sets, because the graph is vertex-transitive.
"""

from domval.generators import petersen_graph
from domval.solver import domination_report, oracle_report

g = petersen_graph()
report = domination_report(g)
print(f"gamma = {report.gamma}, tau = {report.tau}")
print("dv per vertex:", report.dv)

# the minimum dominating sets that contain vertex 1 (labels are 1-based)
for s in report.gamma_sets:
    if 0 in s:
        print("  ", sorted(v + 1 for v in s))

# the brute-force oracle agrees field for field
assert oracle_report(g) == report
