"""
Complete multipartite graphs
============================

The published formula for K_{a1,...,ak} with every part of size at least 2
says dv(v) = deg(v).  That misses the fact that a part of size exactly 2 is
itself a dominating pair.  K_{2,2} is the 4-cycle, which makes the gap easy
to see.
"""

import itertools

from domval.closed_forms import multipartite_report_corrected, multipartite_report_paper
from domval.generators import complete_multipartite_graph
from domval.solver import domination_report

for parts in [(2, 2), (2, 3), (3, 3), (2, 2, 4), (3, 4, 5)]:
    solved = domination_report(complete_multipartite_graph(parts), 0)
    paper = multipartite_report_paper(parts)
    fixed = multipartite_report_corrected(parts)
    print(f"K{parts}: solver tau={solved.tau:>3}  published={paper.tau:>3}  corrected={fixed.tau:>3}")

# the corrected form agrees everywhere it applies
for parts in itertools.product(range(2, 6), repeat=3):
    assert multipartite_report_corrected(parts).dv == domination_report(
        complete_multipartite_graph(parts), 0).dv
