"""Predicting a first extension that the R-coefficients cannot see.

In S6 take w = s3.  The only Bruhat-maximal bigrassmannian below it is s3
itself, with descent pair (3, 3); its penultimate partner s3*w0 has length 14.
The chain dictionary places the witness at occurrence degree 10, which is two
steps away from the expected slot, so the predicted ext^1 at internal shift
-9 is additional: no coefficient of r alone reveals it.  The expected slot at
shift -11 carries dimension 5, read straight off the R-polynomial.
"""

from vermaext import (
    RTable,
    bigrassmannian_chain,
    bm_set,
    build_system,
    penultimate_element,
    phi_degree,
    predict_ext1,
)
from vermaext.typea import expected_ext1_shift

sy = build_system("A5")
w = sy.element("s3")

print("Bruhat-maximal bigrassmannians below s3:",
      [sy.word_name(u) for u in bm_set(sy, w)])

pen = penultimate_element(sy, 3, 3)
chain = bigrassmannian_chain(sy, 3, 3)
print("descent pair (3,3): q = %d, chain of %d elements:" % (pen.q, len(chain)))
for u in chain:
    print("  %-28s degree %2d" % (sy.word_name(u), phi_degree(sy, 3, 3, u)))

print("\npenultimate partner: %s (length %d)"
      % (sy.word_name(pen.w_pen), sy.lengths[pen.w_pen]))

for rec in predict_ext1(sy, w):
    print("\nprediction: ext^1 from the penultimate Verma at shift %d [%s]"
          % (rec.shift, "expected" if rec.expected else "additional"))

rt = RTable(sy)
m = expected_ext1_shift(sy, pen.w_pen, w)
print("expected slot: shift %d with dimension |r^(%d)| = %d"
      % (m, m, abs(rt.r_poly(pen.w_pen, w).coeff(m))))

print("\nSanity: scanning all of S4 the same way flags nothing additional:",
      all(rec.expected
          for w4 in range(24)
          for rec in predict_ext1(build_system("A3"), w4)))
