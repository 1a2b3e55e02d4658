"""
Execution paths, square moves, and the state order
==================================================

Realizing a precubical set as a flow turns vertices into states and
edge paths into executions.  Two paths count as the same execution
when square moves connect them: a 2-cell says its two boundary
composites are interchangeable.  This script walks through the small
cases where the answers are easy to see by hand.
"""

from precubical import (
    CellId,
    boundary_cube,
    circle,
    count_flow_morphisms,
    enumerate_path_classes,
    path_equal,
    realize_states,
    staircase,
    standard_cube,
    state_order,
)

# States of the cube are its 2^n vertices.
for n in range(4):
    print(f"cube {n}: {len(realize_states(standard_cube(n)))} states")

# The square has two paths around its boundary.  With the filling
# 2-cell present they merge into one class; remove it and they stay
# distinct executions.
square = standard_cube(2)
low = ("*0", "1*")
high = ("0*", "*1")
print(f"\nfilled square merges the boundary paths: {path_equal(square, low, high)}")
print(f"hollow square keeps them apart: {not path_equal(boundary_cube(2), low, high)}")

# Path classes between opposite corners of the hollow cube: all six
# staircases around the missing 3-cell collapse to a single class.
classes = enumerate_path_classes(boundary_cube(3), "000", "111", 3)
print(f"\nhollow cube corner-to-corner classes: {len(classes)}")
print(f"members of the class: {sorted(classes[0].members)}")

# The staircase of a cell raises one axis at a time, in order.
solid = standard_cube(3)
stairs = staircase(solid, CellId(3, "***"))
print(f"\nstaircase of the solid cube: {stairs.edges}")

# Counting classes over all ordered state pairs recovers the morphism
# count of the realized flow: 3^n - 2^n for the n-cube.
for n in range(1, 4):
    print(f"cube {n}: {count_flow_morphisms(standard_cube(n), n)} morphisms "
          f"(3^{n} - 2^{n} = {3**n - 2**n})")

# Reachability on a loopless flow is a partial order on the states.
poset = state_order(standard_cube(2))
print(f"\nsquare order pairs: {sorted(poset.pairs)}")

# A directed circle is not loopless; instead of an order we get a
# report naming one loop.
report = state_order(circle())
print(f"circle loop: cycle {report.cycle} through states {report.states}")
