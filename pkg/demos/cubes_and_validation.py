"""
Building cubes and checking the face relations
==============================================

A precubical set is a graded family of cells with face maps d[i, a]
sending an n-cell to the (n-1)-cells on its boundary.  This script
builds the standard cubes, reads off faces, and shows what the
validator reports when the relations are broken.
"""

from precubical import (
    PrecubicalSet,
    boundary_cube,
    skeleton,
    standard_cube,
    validate,
)

# The standard n-cube has C(n, k) * 2^(n-k) cells in dimension k.
# Its cells are words over {0, 1, *} and the stars mark free axes.
for n in range(5):
    cube = standard_cube(n)
    print(f"cube {n}: cell counts {cube.cell_counts()}")

# Faces of the square: setting the i-th star to 0 or 1 picks out the
# four boundary edges.
square = standard_cube(2)
print("\nsquare faces:")
for i in (1, 2):
    for alpha in (0, 1):
        print(f"  d[{i},{alpha}] ** = {square.face_label(2, '**', i, alpha)}")

# The boundary cube drops the unique top cell, nothing else.
hollow = boundary_cube(3)
print(f"\nhollow cube counts: {hollow.cell_counts()}")
print(f"skeleton agrees: {skeleton(standard_cube(3), 2) == hollow}")

# Every healthy complex validates to an empty report.
print(f"\nviolations in cube 4: {validate(standard_cube(4))}")

# Now break one face on purpose.  The true d[1,0] face of the solid
# cube *** is the square 0**; pointing it at *0* makes two iterated
# boundaries disagree, and the report names the offending cell.
faces = standard_cube(3).face_map
faces[(3, 1, 0, "***")] = "*0*"
broken = PrecubicalSet(
    {d: standard_cube(3).cells(d) for d in range(4)}, faces
)
print("\nreport for the corrupted cube:")
for violation in validate(broken):
    print(f"  {violation}")
