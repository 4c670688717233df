"""Tour of stratification detection with local homology.

Three small spaces tell the whole story: a closed surface looks the same
everywhere, a surface with boundary is flagged along its rim, and a branched
space is caught at the branching cells.

Run: python3 demos/stratification_tour.py
"""

from localhomology import (
    SimplicialComplex,
    classify,
    global_betti,
    is_homology_n_manifold,
    local_betti_at,
)


def show(title, complex, n):
    print(f"\n== {title} (dimension {complex.dim}, {len(complex)} faces) ==")
    print("global Betti numbers:", global_betti(complex))
    ok, offenders = is_homology_n_manifold(complex, n)
    if ok:
        print(f"homology {n}-manifold: yes, every simplex has the interior signature")
        return
    print(f"homology {n}-manifold: no, {len(offenders)} simplices deviate:")
    for simplex in offenders[:8]:
        values = local_betti_at(complex, simplex)
        print(f"  {simplex}: local Betti {values} -> {classify(complex, simplex, n)}")
    if len(offenders) > 8:
        print(f"  ... and {len(offenders) - 8} more")


# A hollow tetrahedron: the smallest triangulated 2-sphere.
sphere = SimplicialComplex.from_maximal([[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
show("sphere", sphere, 2)

# An annulus built from two concentric octagons (16 triangles). The rim
# simplices all report the all-zero boundary signature.
triangles = []
for k in range(8):
    k1 = (k + 1) % 8
    triangles.append([k, k1, 8 + k1])
    triangles.append([k, 8 + k, 8 + k1])
annulus = SimplicialComplex.from_maximal(triangles)
show("annulus", annulus, 2)

# Three triangles glued along one edge: the shared edge carries a local
# 2-cycle count of two, the signature of a ramification.
book = SimplicialComplex.from_maximal([[0, 1, 2], [0, 1, 3], [0, 1, 4]])
show("three sheets on a spine", book, 2)
spine = book.simplex_with_labels([0, 1])
print("\nlocal Betti numbers at the spine edge:", local_betti_at(book, spine))
