"""Walk through the rank-2 picture, where everything is decided.

In rank at most 2 every Kazhdan-Lusztig polynomial is a single monomial, so
every graded extension between Verma modules sits on the expected edge and its
dimension is the absolute value of an R-polynomial coefficient.  This script
prints the full R table, turns it into the table of expected dimensions and
checks the alternating-sum identity that glues the two together.
"""

from vermaext import RTable, build_system, expected_dims

sy = build_system("A2")
rt = RTable(sy)
order = sorted(range(sy.order), key=lambda w: (sy.lengths[w], w))
names = [sy.word_name(w) for w in order]
width = max(len(n) for n in names) + 2

print("R-polynomial table (rows x, columns y):\n")
print(" " * width + " | ".join(n.ljust(24) for n in names))
for x in order:
    row = []
    for y in order:
        row.append(str(rt.r_poly(x, y)).ljust(24))
    print(sy.word_name(x).ljust(width) + " | ".join(row))

print("\nEvery entry specializes to 0 at v=1 (1 on the diagonal):",
      all(rt.delorme_check(x, y) for x in order for y in order))

print("\nExpected graded extension dimensions for the extreme pair (w0, e):")
grid = expected_dims(rt, sy.w0, 0)
for (a, b), dim in sorted(grid.cells.items()):
    kind = "hom" if a == 0 else "ext^%d" % a
    print("  %s at internal shift %+d: dimension %d" % (kind, b, dim))

print("\nReading the R-coefficients back from the dimensions:")
p = rt.r_poly(sy.w0, 0)
d = sy.lengths[sy.w0]
for a in range(d + 1):
    signed = grid.value(a, 2 * a - d) * (-1) ** a
    print("  coefficient at v^%+d: %+d (table says %+d)"
          % (d - 2 * a, signed, p.coeff(d - 2 * a)))
