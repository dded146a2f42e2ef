"""Bruhat-pair equivalence classes and interval comparisons.

Two comparable pairs are linked when one simple reflection shortens both
coordinates simultaneously on the same side; the equivalence closure of
these moves preserves the whole bigraded ext picture of a pair, so class
invariants (the R-polynomial, boolean membership of a coordinate) transfer
across a class.  Equivalent pairs need not have isomorphic Bruhat intervals,
which poset_isomorphic decides by brute force.
"""

from __future__ import annotations

from .coxeter import CoxeterSystem
from .rpoly import RTable


class EquivPartition:
    """Union-find closure of the simultaneous-descent moves on pairs x >= y."""

    def __init__(self, system: CoxeterSystem):
        self.system = system
        pairs = system.comparable_pairs()
        self.pairs = pairs
        index = {p: i for i, p in enumerate(pairs)}
        parent = list(range(len(pairs)))

        def find(i):
            root = i
            while parent[root] != root:
                root = parent[root]
            while parent[i] != root:
                parent[i], i = root, parent[i]
            return root

        def union(i, j):
            ri, rj = find(i), find(j)
            if ri != rj:
                if rj < ri:
                    ri, rj = rj, ri
                parent[rj] = ri

        lengths = system.lengths
        for (x, y), i in index.items():
            for s in range(system.rank):
                xs, ys = system.right[s][x], system.right[s][y]
                if lengths[xs] < lengths[x] and lengths[ys] < lengths[y]:
                    union(i, index[(xs, ys)])
                sx, sy_ = system.left[s][x], system.left[s][y]
                if lengths[sx] < lengths[x] and lengths[sy_] < lengths[y]:
                    union(i, index[(sx, sy_)])

        roots = {}
        self.class_id = {}
        self.classes: list[list[tuple[int, int]]] = []
        for i, p in enumerate(pairs):
            r = find(i)
            cid = roots.get(r)
            if cid is None:
                cid = len(self.classes)
                roots[r] = cid
                self.classes.append([])
            self.class_id[p] = cid
            self.classes[cid].append(p)

    def class_of(self, x: int, y: int) -> list[tuple[int, int]]:
        return self.classes[self.class_id[(x, y)]]

    def same_class(self, pair1, pair2) -> bool:
        return self.class_id[pair1] == self.class_id[pair2]

    def class_sizes(self) -> list[int]:
        return sorted(len(c) for c in self.classes)

    def boolean_member(self, x: int, y: int):
        """Search the class of (x, y) for a coordinate that settles the pair.

        Returns ("x-boolean", x', y') when some member has boolean x', or
        ("w0y-boolean", x', y') when some member has boolean w0*y'; None if
        neither occurs anywhere in the class.
        """
        sy = self.system
        for (wx, wy) in self.class_of(x, y):
            if sy.is_boolean(wx):
                return ("x-boolean", wx, wy)
        for (wx, wy) in self.class_of(x, y):
            if sy.is_boolean(sy.mult(sy.w0, wy)):
                return ("w0y-boolean", wx, wy)
        return None


def equiv_classes(system: CoxeterSystem) -> EquivPartition:
    return EquivPartition(system)


def class_r_constancy(partition: EquivPartition, rt: RTable):
    """Check that the R-polynomial is constant across every class.

    Returns (ok, violations); violations lists (pair, pair, poly, poly).
    """
    violations = []
    for members in partition.classes:
        x0, y0 = members[0]
        ref = rt.r_poly(x0, y0)
        for (x, y) in members[1:]:
            p = rt.r_poly(x, y)
            if p != ref:
                violations.append(((x0, y0), (x, y), ref, p))
    return not violations, violations


def boolean_r_determined(partition: EquivPartition, x: int, y: int):
    """Certificate that the pair is settled by a boolean/coboolean member.

    Returns ("x-boolean" | "w0y-boolean", witness pair) or None.
    """
    if not partition.system.bruhat_leq(y, x):
        raise ValueError("boolean_r_determined needs x >= y")
    hit = partition.boolean_member(x, y)
    if hit is None:
        return None
    clause, wx, wy = hit
    return clause, (wx, wy)


# -- graded poset isomorphism ---------------------------------------------------

POSET_SIZE_CAP = 64


class IntervalTooLargeError(ValueError):
    pass


def _interval_poset(system: CoxeterSystem, y: int, x: int):
    """Elements, rank function and cover lists of the Bruhat interval [y, x]."""
    elems = system.bruhat_interval(y, x)
    if len(elems) > POSET_SIZE_CAP:
        raise IntervalTooLargeError(
            "interval [%s, %s] has %d elements, cap is %d"
            % (system.word_name(y), system.word_name(x), len(elems), POSET_SIZE_CAP)
        )
    pos = {z: i for i, z in enumerate(elems)}
    base = system.lengths[y]
    ranks = [system.lengths[z] - base for z in elems]
    n = len(elems)
    up = [[] for _ in range(n)]
    down = [[] for _ in range(n)]
    for i, zi in enumerate(elems):
        for j, zj in enumerate(elems):
            if ranks[j] == ranks[i] + 1 and system.bruhat_leq(zi, zj):
                up[i].append(j)
                down[j].append(i)
    return ranks, up, down


def poset_isomorphic(
    system1: CoxeterSystem, interval1: tuple[int, int],
    system2: CoxeterSystem | None = None, interval2: tuple[int, int] | None = None,
) -> bool:
    """Graded-poset isomorphism of two Bruhat intervals, by backtracking.

    Intervals are given as (y, x) with y <= x.  Degree profiles per rank act
    as a cheap filter before the level-by-level search.
    """
    if system2 is None:
        system2 = system1
    y1, x1 = interval1
    y2, x2 = interval2
    r1, up1, down1 = _interval_poset(system1, y1, x1)
    r2, up2, down2 = _interval_poset(system2, y2, x2)
    if len(r1) != len(r2) or max(r1, default=0) != max(r2, default=0):
        return False

    height = max(r1, default=0)
    lev1 = [[i for i, r in enumerate(r1) if r == k] for k in range(height + 1)]
    lev2 = [[i for i, r in enumerate(r2) if r == k] for k in range(height + 1)]
    if any(len(a) != len(b) for a, b in zip(lev1, lev2)):
        return False

    def profile(i, up, down):
        return (len(up[i]), len(down[i]))

    for k in range(height + 1):
        p1 = sorted(profile(i, up1, down1) for i in lev1[k])
        p2 = sorted(profile(i, up2, down2) for i in lev2[k])
        if p1 != p2:
            return False

    mapping = {}

    def extend(level: int) -> bool:
        if level > height:
            return True
        a_side = lev1[level]
        b_side = lev2[level]

        def assign(idx: int) -> bool:
            if idx == len(a_side):
                return extend(level + 1)
            i = a_side[idx]
            want_down = sorted(mapping[d] for d in down1[i])
            for j in b_side:
                if j in mapping.values():
                    continue
                if profile(i, up1, down1) != profile(j, up2, down2):
                    continue
                if sorted(down2[j]) != want_down:
                    continue
                mapping[i] = j
                if assign(idx + 1):
                    return True
                del mapping[i]
            return False

        return assign(0)

    return extend(0)
