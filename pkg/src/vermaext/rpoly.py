"""R-polynomials in the w0-shifted indexing, with parabolic and singular kin.

r_{x,y} is the (x,y) entry of the change of basis from graded Verma classes
to graded dual Verma classes, so r_{x,y} = 0 unless x >= y, r_{x,x} = 1, and
r_{x,w0} is the Kronecker delta.  The family is computed by a two-term
recursion that walks the second index up towards w0.

Sign conventions are pinned so that the full rank-2 reference tables are
reproduced cell for cell; see RTable.r_poly for the exact recursion step.
The same convention makes r^(k) the alternating sum over homological degrees
of graded ext dimensions at internal shift -k, which is what the sign
compatibility detector and the expected-dimension reconstruction assume.
"""

from __future__ import annotations

import random

from .coxeter import CoxeterSystem, ParabolicSubset
from .hecke import KLTable
from .poly import ONE, LaurentPoly

_ZERO = LaurentPoly()


class RTable:
    """Memoized ordinary R-polynomials for one Coxeter system.

    Concurrent reads are safe and duplicated computation is benign: entries
    are deterministic and inserted whole, so scans may share a table across
    threads.
    """

    def __init__(self, system: CoxeterSystem):
        self.system = system
        self._memo: dict[tuple[int, int], LaurentPoly] = {}

    def r_poly(self, x: int, y: int) -> LaurentPoly:
        """r_{x,y}.  Zero unless x >= y.

        For y != w0, with s the lowest-numbered generator such that ys > y:

            r_{x,y} = r_{xs,ys}                       if xs > x,
            r_{x,y} = r_{xs,ys} + (v - v^-1) r_{x,ys} if xs < x.
        """
        sy = self.system
        if not sy.bruhat_leq(y, x):
            return _ZERO
        if x == y:
            return ONE
        memo = self._memo
        key = (x, y)
        hit = memo.get(key)
        if hit is not None:
            return hit
        # y != w0 here: y < x <= w0.
        s = self._lowest_ascent(y)
        val = self._step(x, y, s)
        memo[key] = val
        return val

    def _lowest_ascent(self, y: int) -> int:
        sy = self.system
        ly = sy.lengths[y]
        for s in range(sy.rank):
            if sy.lengths[sy.right[s][y]] > ly:
                return s
        raise AssertionError("only w0 has no ascent")

    def _step(self, x: int, y: int, s: int) -> LaurentPoly:
        sy = self.system
        xs = sy.right[s][x]
        ys = sy.right[s][y]
        if sy.lengths[xs] > sy.lengths[x]:
            return self.r_poly(xs, ys)
        tail = self.r_poly(x, ys)
        val = self.r_poly(xs, ys)
        if tail:
            val = val + tail.shift(1) - tail.shift(-1)
        return val

    def r_poly_random_ascents(self, x: int, y: int, rng: random.Random) -> LaurentPoly:
        """Recompute r_{x,y} choosing a random ascent at every recursion node.

        Uses a private memo so the shared table is untouched; the result
        must not depend on the choices.
        """
        sy = self.system
        memo: dict[tuple[int, int], LaurentPoly] = {}

        def rec(a: int, b: int) -> LaurentPoly:
            if not sy.bruhat_leq(b, a):
                return _ZERO
            if a == b:
                return ONE
            hit = memo.get((a, b))
            if hit is not None:
                return hit
            lb = sy.lengths[b]
            ascents = [s for s in range(sy.rank) if sy.lengths[sy.right[s][b]] > lb]
            s = rng.choice(ascents)
            asx = sy.right[s][a]
            bs = sy.right[s][b]
            if sy.lengths[asx] > sy.lengths[a]:
                val = rec(asx, bs)
            else:
                val = rec(asx, bs)
                tail = rec(a, bs)
                if tail:
                    val = val + tail.shift(1) - tail.shift(-1)
            memo[(a, b)] = val
            return val

        return rec(x, y)

    def r_coeff_list(self, x: int, y: int) -> list[int]:
        """Dense coefficients of r_{x,y} over exponents -d..d in steps of 2."""
        sy = self.system
        if not sy.bruhat_leq(y, x):
            raise ValueError("r_coeff_list needs x >= y")
        d = sy.lengths[x] - sy.lengths[y]
        p = self.r_poly(x, y)
        return [p.coeff(k) for k in range(-d, d + 1, 2)]

    def delorme_check(self, x: int, y: int) -> bool:
        """Specialization at v=1 must be the Kronecker delta."""
        return self.r_poly(x, y).eval_at_one() == (1 if x == y else 0)

    def sign_compatibility(self, x: int, y: int) -> list[int]:
        """Exponents where the coefficient sign breaks the alternating rule.

        With d = l(x) - l(y), a nonzero coefficient at exponent k must have
        sign (-1)^((d-k)/2) for all extensions of the pair to sit on the
        expected edge.  An empty list is consistency; a nonempty list is a
        certificate that the pair has an additional extension.
        """
        sy = self.system
        if not sy.bruhat_leq(y, x):
            raise ValueError("sign_compatibility needs x >= y")
        d = sy.lengths[x] - sy.lengths[y]
        bad = []
        for k, c in self.r_poly(x, y).items():
            want = 1 if ((d - k) // 2) % 2 == 0 else -1
            if (1 if c > 0 else -1) != want:
                bad.append(k)
        return bad


def r_oracle_table(kl: KLTable) -> dict[tuple[int, int], LaurentPoly]:
    """All R-polynomials by an independent linear-algebra route.

    Expand each graded Verma class in the simple basis (the canonical basis
    coefficients), apply the bar involution coefficientwise to model the
    simple-preserving duality, and solve the triangular system expressing
    Verma classes in dual Verma classes.  No R-recursion is used, so this is
    a genuine second route for equality testing.
    """
    sy = kl.system
    n = sy.order

    # delta[y][x] = p_{y,x}: multiplicity polynomial of the simple indexed by
    # x inside the Verma indexed by y.  nabla is its bar twist.
    delta = [{x: kl.kl_poly(y, x) for x in range(n) if kl.kl_poly(y, x)} for y in range(n)]
    nabla = [{x: p.bar() for x, p in row.items()} for row in delta]

    by_length = sorted(range(n), key=lambda w: (sy.lengths[w], w))
    table: dict[tuple[int, int], LaurentPoly] = {}
    for y in range(n):
        target = dict(delta[y])
        sol: dict[int, LaurentPoly] = {}
        for x in by_length:
            c = target.get(x, _ZERO) - sum(
                (nabla[z].get(x, _ZERO) * sol[z] for z in sol), _ZERO
            )
            if c:
                sol[x] = c
        for x, c in sol.items():
            table[(x, y)] = c
    return table


class ParabolicRTable:
    """Singular or parabolic R-polynomials attached to a parabolic subset.

    kind="singular": indexed by minimal representatives of W/W_J, computed
    from the ordinary table by summing the first index over its coset,

        sr_{x,y} = sum over w in W_J of r_{xw,y} v^(l(w) - 2 l(w0_J)).

    kind="parabolic": indexed by minimal representatives of W_J\\W, computed
    by its own recursion from the delta base at the top representative
    w0_J w0; when xs leaves the representative set the step contributes
    -v^-1 times the parent value.
    """

    def __init__(self, rtable: RTable, parabolic: ParabolicSubset, kind: str):
        if kind not in ("singular", "parabolic"):
            raise ValueError("kind must be 'singular' or 'parabolic'")
        self.rtable = rtable
        self.system = rtable.system
        self.parabolic = parabolic
        self.kind = kind
        sy = self.system
        if kind == "singular":
            self.reps = parabolic.coset_reps_right
        else:
            self.reps = parabolic.coset_reps_left
        self._rep_set = frozenset(self.reps)
        self.top = max(self.reps, key=lambda w: sy.lengths[w])
        self._memo: dict[tuple[int, int], LaurentPoly] = {}

    def _require_rep(self, w: int):
        if w not in self._rep_set:
            raise ValueError(
                "%s is not a minimal %s coset representative"
                % (self.system.word_name(w), self.kind)
            )

    def poly(self, x: int, y: int) -> LaurentPoly:
        self._require_rep(x)
        self._require_rep(y)
        key = (x, y)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._sr(x, y) if self.kind == "singular" else self._pr(x, y)
            self._memo[key] = hit
        return hit

    def _sr(self, x: int, y: int) -> LaurentPoly:
        sy = self.system
        shift = -2 * sy.lengths[self.parabolic.longest]
        acc = _ZERO
        for w in self.parabolic.subgroup:
            r = self.rtable.r_poly(sy.mult(x, w), y)
            if r:
                acc = acc + r.shift(sy.lengths[w] + shift)
        return acc

    def _pr(self, x: int, y: int) -> LaurentPoly:
        sy = self.system
        if y == self.top:
            return ONE if x == self.top else _ZERO
        # lowest generator with ys > y staying inside the representative set
        s = None
        ly = sy.lengths[y]
        for j in range(sy.rank):
            yj = sy.right[j][y]
            if sy.lengths[yj] > ly and yj in self._rep_set:
                s = j
                break
        if s is None:
            raise AssertionError(
                "no representative-preserving ascent at %s" % sy.word_name(y)
            )
        ys = sy.right[s][y]
        xs = sy.right[s][x]
        if xs not in self._rep_set:
            parent = self.poly(x, ys)
            return LaurentPoly({-1: -1}) * parent
        if sy.lengths[xs] > sy.lengths[x]:
            return self.poly(xs, ys)
        val = self.poly(xs, ys)
        tail = self.poly(x, ys)
        if tail:
            val = val + tail.shift(1) - tail.shift(-1)
        return val


def sr_poly(rtable: RTable, parabolic: ParabolicSubset, x: int, y: int) -> LaurentPoly:
    return ParabolicRTable(rtable, parabolic, "singular").poly(x, y)


def pr_poly(rtable: RTable, parabolic: ParabolicSubset, x: int, y: int) -> LaurentPoly:
    return ParabolicRTable(rtable, parabolic, "parabolic").poly(x, y)
