"""Neighborhood filtrations as a persistence-like sequence.

Growing neighborhoods of a simplex give a sequence of local homology
spaces connected by restriction maps from each level to the one before.
Features that survive the maps are stable local structure; features that
die are artifacts of the window size.

Run: python3 demos/neighborhood_filtration.py
"""

from localhomology import (
    SimplicialComplex,
    filtration_persistence,
    local_betti,
    neighborhood_filtration,
)

# A path on five vertices, watched from its midpoint.
path = SimplicialComplex.from_maximal([[i, i + 1] for i in range(4)])
mid = (2,)

print("path on five vertices, filtration around the midpoint:")
filtration = neighborhood_filtration(path, [mid], 2)
for m, level in enumerate(filtration.levels):
    members = ", ".join(str(s) for s in level)
    print(f"  level {m}: {len(level)} faces: {members}")
    print(f"           local Betti {local_betti(path, level)}")

print("\ncircle count along the filtration (value, rank of map from next level):")
for m, (value, rank) in enumerate(filtration_persistence(path, mid, 1, 2)):
    arrow = "-" if rank is None else str(rank)
    print(f"  level {m}: count {value}, incoming rank {arrow}")

print(
    "\nThe relative circle at level 0 persists to level 1 (rank 1) and dies"
    "\nat level 2, where the window has swallowed the whole tree."
)

# The same machinery on a closed surface: nothing changes level to level.
sphere = SimplicialComplex.from_maximal([[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
print("\nhollow tetrahedron, filtration around one vertex:")
for m, (value, rank) in enumerate(filtration_persistence(sphere, (0,), 2, 2)):
    arrow = "-" if rank is None else str(rank)
    print(f"  level {m}: 2-cycle count {value}, incoming rank {arrow}")
