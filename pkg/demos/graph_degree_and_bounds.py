"""Local homology generalizes vertex degree, and clustering bounds it.

On a graph seen as a 1-dimensional complex, the first local Betti number at
a vertex star is exactly the degree minus one. On the flag complex of a
planar graph, the same quantity counts neighborhood components minus one
and is pinched between two functions of the clustering coefficient.

Run: python3 demos/graph_degree_and_bounds.py
"""

from fractions import Fraction

from localhomology import (
    SimplicialComplex,
    flag_complex,
    local_betti_at,
    planar_grid_graph,
)

graph = planar_grid_graph(4, 4, diag_prob=0.6, seed=11)
one_complex = SimplicialComplex.from_maximal(
    [[v] for v in range(graph.n)] + [list(e) for e in graph.edges]
)
flag = flag_complex(graph)

print(f"planar grid with diagonals: {graph.n} vertices, {graph.edge_count} edges\n")
header = f"{'v':>3} {'deg':>4} {'b1 (1-cx)':>10} {'b1 (flag)':>10} {'CC':>8} {'lower':>8} {'upper':>8}"
print(header)
print("-" * len(header))
for v in range(graph.n):
    d = graph.degree(v)
    b1_graph = local_betti_at(one_complex, (v,))[1]
    b1_flag = local_betti_at(flag, (v,))[1]
    assert b1_graph == d - 1
    if d < 2:
        print(f"{v:>3} {d:>4} {b1_graph:>10} {b1_flag:>10} {'-':>8} {'-':>8} {'-':>8}")
        continue
    cc = graph.clustering_coefficient(v)
    lower = d - 1 - Fraction(d * (d - 1), 2) * cc
    upper = d - 1 - Fraction(d * (d - 1), 6) * cc
    assert lower <= b1_flag <= upper
    print(
        f"{v:>3} {d:>4} {b1_graph:>10} {b1_flag:>10} "
        f"{str(cc):>8} {str(lower):>8} {str(upper):>8}"
    )

print(
    "\nEvery row satisfies: 1-complex count = degree - 1, and the flag-complex"
    "\ncount sits inside the clustering-coefficient sandwich."
)
