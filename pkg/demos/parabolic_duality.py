"""Singular and parabolic R-polynomials are two shadows of one duality.

For a parabolic subset J, the singular family lives on minimal coset
representatives of W/W_J and is a twisted coset sum of ordinary
R-polynomials; the parabolic family lives on W_J\\W representatives and obeys
its own recursion with a third, sign-twisting case.  Substituting v -> -1/v
and inverting the indices turns one family into the other, and both satisfy
the delta specialization at v = 1.
"""

from itertools import combinations

from vermaext import ParabolicRTable, RTable, build_system

sy = build_system("A3")
rt = RTable(sy)

for size in range(sy.rank + 1):
    for J in combinations(range(sy.rank), size):
        par = sy.parabolic(J)
        sr = ParabolicRTable(rt, par, "singular")
        pr = ParabolicRTable(rt, par, "parabolic")
        pairs = [(x, y) for x in pr.reps for y in pr.reps]
        match = sum(
            pr.poly(x, y) == sr.poly(sy.inverse[x], sy.inverse[y]).subst_neg_inv()
            for x, y in pairs
        )
        delta = all(
            tab.poly(x, y).eval_at_one() == (x == y)
            for tab in (sr, pr)
            for x in tab.reps
            for y in tab.reps
        )
        jname = "{" + ",".join(sy.gen_names[j] for j in J) + "}"
        print("J=%-12s %2d reps: duality %d/%d, delta at v=1: %s"
              % (jname, len(pr.reps), match, len(pairs), delta))

par = sy.parabolic([0])
sr = ParabolicRTable(rt, par, "singular")
pr = ParabolicRTable(rt, par, "parabolic")
print("\nSample, J={s1}:")
x = sy.element("s2*s1")
print("  parabolic entry (s2*s1, e):", pr.poly(x, 0))
print("  singular entry (s1*s2, e):", sr.poly(sy.inverse[x], 0))
print("  after v -> -1/v:           ", sr.poly(sy.inverse[x], 0).subst_neg_inv())
