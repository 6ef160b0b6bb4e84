"""
Neighborhood sums, sharpness and the max-degree theorem
=======================================================

For any vertex v0, the domination values over N[v0] sum to at least tau and
at most min(tau * gamma, tau * (1 + deg v0)).  Small witness graphs attain
each bound.  The last part shows a graph where the published max-degree
n-3 bound for disconnected graphs is one too small.
"""

from domval.checks import check_max_degree_structure, check_neighborhood_bounds
from domval.corpus import forked_star, isolated_vertex_witness, zero_dv_max_degree_witness
from domval.generators import cycle_graph, path_graph
from domval.graph import Graph, disjoint_union

for name, g in [
    ("end of P6", path_graph(6)),
    ("centre of forked star", forked_star()),
    ("isolated vertex", isolated_vertex_witness()),
]:
    out = check_neighborhood_bounds(g, 0)
    print(f"{name:<24} sum={out.details['sum']}  tau={out.details['tau']}  "
          f"gamma={out.details['gamma']}  tight={out.details['tight']}")

# max degree n-3 with a vertex that lies in no minimum dominating set
out = check_max_degree_structure(zero_dv_max_degree_witness())
print("zero-dv witness:", out.status, out.details)

# C4 + K1: max degree n-3, disconnected, gamma 3, dv 3 > n-3
g = disjoint_union(cycle_graph(4), Graph.empty(1))
print("published bound:", check_max_degree_structure(g, published_bounds=True).status)
print("corrected bound:", check_max_degree_structure(g).status)
