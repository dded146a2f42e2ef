"""The smallest sign anomaly: D4.

If every graded extension between two Verma modules were expected, the
R-coefficients of the pair would alternate in sign along the exponent line.
For the extreme pair in D4 they do not: the coefficient at exponent 0 is -4
where the alternating pattern demands a nonnegative value.  That single entry
is a certificate that some extension lives strictly inside the triangle.
"""

from vermaext import RTable, build_system
from vermaext.refdata import E7_R_W0_E

sy = build_system("D4")
rt = RTable(sy)
d = sy.lengths[sy.w0]

coeffs = rt.r_coeff_list(sy.w0, 0)
print("D4, pair (w0, e), length gap %d" % d)
print("exponent:    " + "".join("%5d" % k for k in range(-d, d + 1, 2)))
print("coefficient: " + "".join("%5d" % c for c in coeffs))
want = ["+" if ((d - k) // 2) % 2 == 0 else "-" for k in range(-d, d + 1, 2)]
print("sign rule:   " + "".join("%5s" % w for w in want))

violations = rt.sign_compatibility(sy.w0, 0)
print("\nviolating exponents:", violations)
print("alternating sum (must be 0):", sum(coeffs))

print("\nFor comparison, the stored E7 list (never recomputed, order 2903040)")
print("breaks the rule at %d exponents and still sums to %d."
      % (len([1 for i, c in enumerate(E7_R_W0_E) if c and
              (1 if c > 0 else -1) != (1 if ((63 - (-63 + 2 * i)) // 2) % 2 == 0 else -1)]),
         sum(E7_R_W0_E)))
