"""The socle grid that decides S4.

The hom dimensions from the antidominant Verma module into the linear tilting
coresolution of the dominant one bound all graded extensions of that pair.
In S4 the grid has three cells off the expected edge; the refinement that
accounts for the differential kills what it can, and what remains is exactly
compensated inside the alternating sums, so all extensions stay expected.
"""

from vermaext import (
    KLTable,
    RTable,
    build_system,
    expected_dims,
    hom_grid,
    refined_bound,
)

sy = build_system("A3")
kl = KLTable(sy)
rt = RTable(sy)

grid = hom_grid(kl, 0, sy.w0)
d = sy.lengths[sy.w0]

print("hom(antidominant<b>, coresolution_a(dominant)) for S4:\n")
bs = sorted({b for (_, b) in grid.cells})
print("  b\\a " + "".join("%4d" % a for a in range(d + 1)))
for b in reversed(bs):
    row = ["%4d" % grid.value(a, b) if grid.value(a, b) else "   ." for a in range(d + 1)]
    print("%5d" % b + "".join(row))

print("\nOn the expected edge b = 2a - %d the values are the chain" % d)
print("1, 3, 5, 6, 5, 3, 1 of length-stratum sizes; off the edge:")
for (a, b), v in sorted(grid.cells.items()):
    if b != 2 * a - d and v:
        print("  cell (%d, %+d): bound %d, refined bound %d"
              % (a, b, v, refined_bound(kl, sy.w0, 0, a, b)))

print("\nExpected dimensions from the R-coefficients:")
print(" ", {a: v for (a, b), v in sorted(expected_dims(rt, sy.w0, 0).cells.items())})

print("\nThe two nontrivial KL polynomials that create the off-edge cells:")
for y, p in kl.nontrivial_from(0):
    print("  p(e, %s) = %s" % (sy.word_name(y), p))
