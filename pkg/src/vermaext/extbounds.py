"""Bounds and classifications for graded extensions between Verma modules.

Nothing here computes a true ext dimension at an interior point (that is an
open problem); the module computes what is forced by the combinatorics:

* the triangle of bidegrees where extensions between a fixed pair can live,
* hom-dimension grids into linear tilting coresolutions (upper bounds),
* a refinement subtracting the contribution that can never survive the
  differential,
* the expected dimensions read off the R-coefficients along the solid edge,
* certificates that a pair is completely determined by those coefficients.

Coordinates: a cell (a, b) holds data about ext^a(source<b>, target), and the
expected edge is b = 2a - d with d the length gap.  A coefficient r^(k) of
the pair aggregates, with sign (-1)^a, the extensions at internal shift -k.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coxeter import CoxeterSystem
from .hecke import KLTable
from .poly import BiPoly
from .rpoly import RTable


@dataclass(frozen=True)
class TrianglePoint:
    a: int
    b: int
    expected: bool
    south: bool
    east: bool

    @property
    def interior(self) -> bool:
        return not self.expected


@dataclass(frozen=True)
class TriangleRegion:
    """Potentially-nonzero bidegrees for extensions of a pair with x >= y.

    Contains the lattice points (a, b) with 0 <= a <= d, 2a-d <= b <= a and
    b = d mod 2, minus the two dashed edges (b = a with a < d, and a = 0
    with b > -d).  The solid edge b = 2a-d is the expected edge; its two
    endpoints are the south vertex (0, -d) and the east vertex (d, d).
    """

    d: int
    points: tuple[TrianglePoint, ...]

    def point(self, a: int, b: int) -> TrianglePoint | None:
        for p in self.points:
            if p.a == a and p.b == b:
                return p
        return None

    def expected_points(self) -> list[TrianglePoint]:
        return [p for p in self.points if p.expected]

    def interior_points(self) -> list[TrianglePoint]:
        return [p for p in self.points if p.interior]

    def shifts_on_line(self, b: int) -> list[TrianglePoint]:
        return [p for p in self.points if p.b == b]


def triangle_region(system: CoxeterSystem, x: int, y: int) -> TriangleRegion:
    if not system.bruhat_leq(y, x):
        raise ValueError("triangle_region needs x >= y")
    d = system.lengths[x] - system.lengths[y]
    pts = []
    for a in range(d + 1):
        for b in range(2 * a - d, a + 1):
            if (b - d) % 2:
                continue
            south = (a, b) == (0, -d)
            east = (a, b) == (d, d)
            if b == a and a < d and not south:
                continue  # dashed diagonal edge
            if a == 0 and b > -d:
                continue  # dashed vertical edge
            pts.append(TrianglePoint(a, b, expected=(b == 2 * a - d), south=south, east=east))
    pts.sort(key=lambda p: (p.a, p.b))
    return TriangleRegion(d, tuple(pts))


@dataclass
class ExtGrid:
    """A bigraded grid of nonnegative integers attached to a (target, source) pair."""

    system: CoxeterSystem
    target: int
    source: int
    meaning: str
    cells: dict[tuple[int, int], int] = field(default_factory=dict)
    untrusted: bool = False

    def value(self, a: int, b: int) -> int:
        return self.cells.get((a, b), 0)

    def nonzero(self) -> list[tuple[int, int, int]]:
        return sorted((a, b, v) for (a, b), v in self.cells.items() if v)

    def __repr__(self):
        sy = self.system
        return "ExtGrid(%s: %s -> %s, %d cells)" % (
            self.meaning,
            sy.word_name(self.source),
            sy.word_name(self.target),
            len(self.cells),
        )


def kl_bound_poly(kl: KLTable, x_target: int, y_source: int) -> BiPoly:
    """Generating function of hom dimensions from the source Verma into the
    linear tilting coresolution of the target:

        sum over z of p_{y w0, z w0}(u) * p_{x, z}(v),

    nonzero summands have x <= z <= y.  Coefficientwise it bounds every
    graded ext between the pair.
    """
    sy = kl.system
    w0 = sy.w0
    yw0 = sy.mult(y_source, w0)
    out = BiPoly()
    for z in range(sy.order):
        pv = kl.kl_poly(x_target, z)
        if not pv:
            continue
        pu = kl.kl_poly(yw0, sy.mult(z, w0))
        if not pu:
            continue
        out = out + BiPoly.from_uv_product(pu, pv)
    return out


def hom_grid(kl: KLTable, target: int, source: int) -> ExtGrid:
    """Hom dimensions from the source Verma into each term of the linear
    tilting coresolution of the target Verma:

        cell (a, b) = sum over z of p^(a)_{target, z} * p^(a-b)_{source w0, z w0}.

    The placement reproduces the reference socle grid exactly: expected-edge
    cells sit at b = 2a - d and every extension of the pair at bidegree
    (a, b) is bounded by cell (a, b).
    """
    sy = kl.system
    w0 = sy.w0
    sw0 = sy.mult(source, w0)
    cells: dict[tuple[int, int], int] = {}
    for z in range(sy.order):
        pt = kl.kl_poly(target, z)
        if not pt:
            continue
        ps = kl.kl_poly(sw0, sy.mult(z, w0))
        if not ps:
            continue
        for a, ca in pt.items():
            for k, cs in ps.items():
                key = (a, a - k)
                cells[key] = cells.get(key, 0) + ca * cs
    return ExtGrid(
        sy, target, source, "HomToTiltingComplex",
        {k: v for k, v in cells.items() if v},
    )


def refined_bound(kl: KLTable, x: int, y: int, a: int, b: int) -> int:
    """Sharper bound off the expected edge: the hom-grid value minus the
    largest single contribution from a summand indexed by some w >= y with
    l(w) = l(y) + a, since a hom landing there cannot survive the
    differential.  Expected-edge cells are out of scope (guard below); the
    subtracted maximum over an empty witness set is zero.  Clamped at 0.
    """
    sy = kl.system
    if not sy.bruhat_leq(y, x):
        raise ValueError("refined_bound needs x >= y")
    d = sy.lengths[x] - sy.lengths[y]
    if 2 * a - b == d:
        raise ValueError("refined_bound only applies off the expected edge")
    w0 = sy.w0
    xw0 = sy.mult(x, w0)
    total = 0
    best = 0
    ly = sy.lengths[y]
    for w in range(sy.order):
        pk = kl.kl_poly(y, w).coeff(a)
        c = kl.kl_poly(xw0, sy.mult(w, w0)).coeff(a - b)
        if pk and c:
            total += pk * c
        if c and sy.lengths[w] == ly + a and sy.bruhat_leq(y, w):
            best = max(best, c)
    return max(total - best, 0)


def expected_dims(rt: RTable, x: int, y: int) -> ExtGrid:
    """Dimensions along the expected edge read off the R-coefficients:
    value (-1)^a r^(d-2a) at the point (a, 2a-d).

    When the pair passes the sign compatibility screen these are exactly the
    alternating-sum-forced dimensions; otherwise the grid is marked
    untrusted (some honest dimension off the edge is hidden in the sums).
    """
    sy = rt.system
    if not sy.bruhat_leq(y, x):
        raise ValueError("expected_dims needs x >= y")
    d = sy.lengths[x] - sy.lengths[y]
    p = rt.r_poly(x, y)
    violations = rt.sign_compatibility(x, y)
    cells = {}
    for a in range(d + 1):
        val = p.coeff(d - 2 * a)
        if a % 2:
            val = -val
        if val:
            cells[(a, 2 * a - d)] = val
    grid = ExtGrid(sy, y, x, "ExpectedDims", cells, untrusted=bool(violations))
    if not violations:
        assert all(v >= 0 for v in cells.values())
    return grid


# -- certificates -------------------------------------------------------------

RANK2 = "Rank2"
SMALL_LENGTH_GAP = "SmallLengthGap"
TRIVIAL_KL = "TrivialKL"
BOOLEAN = "Boolean"
TYPE_A3_THEOREM = "TypeA3Theorem"


@dataclass(frozen=True)
class Certificate:
    kind: str
    detail: str = ""


def determined_shifts(system: CoxeterSystem, x: int, y: int) -> list[int]:
    """Internal shifts at which the pair's ext dimension is always forced:
    the line meets the triangle in a single live point there.
    """
    d = system.lengths[x] - system.lengths[y]
    shifts = {d, d - 2, 2 - d, -d}
    return sorted(i for i in shifts if -d <= i <= d and (i - d) % 2 == 0)


def trivial_kl_certificate(kl: KLTable, y: int) -> bool:
    """All p_{y,w} and p_{e,w w0} trivial for w >= y: every tilting summand in
    sight has the expected position and a simple socle, so nothing off the
    edge can occur for any x >= y.
    """
    sy = kl.system
    w0 = sy.w0
    for w in range(sy.order):
        if not sy.bruhat_leq(y, w):
            continue
        if not kl.is_trivial(y, w):
            return False
        if not kl.is_trivial(0, sy.mult(w0, w)):
            return False
    return True


def r_determined(
    system: CoxeterSystem,
    x: int,
    y: int,
    kl: KLTable | None = None,
    partition=None,
) -> Certificate | None:
    """Strongest available certificate that every graded extension of the
    pair is the expected-edge dimension given by the R-coefficients.

    Clauses, strongest first: rank at most 2; length gap at most 3; trivial
    KL data above y; a boolean or coboolean member in the pair's descent
    equivalence class (needs the partition); the proven type A3 statement.
    Returns None when nothing applies.
    """
    if not system.bruhat_leq(y, x):
        raise ValueError("r_determined needs x >= y")
    if system.rank <= 2:
        return Certificate(RANK2)
    if system.lengths[x] - system.lengths[y] <= 3:
        return Certificate(SMALL_LENGTH_GAP)
    if kl is not None and trivial_kl_certificate(kl, y):
        return Certificate(TRIVIAL_KL, detail="y=%s" % system.word_name(y))
    if partition is not None:
        hit = partition.boolean_member(x, y)
        if hit is not None:
            clause, wx, wy = hit
            return Certificate(
                BOOLEAN,
                detail="clause %s via (%s, %s)"
                % (clause, system.word_name(wx), system.word_name(wy)),
            )
    if system.type_label == "A3":
        return Certificate(TYPE_A3_THEOREM)
    return None


@dataclass
class AllExpectedReport:
    system: CoxeterSystem
    sign_violations: list[tuple[int, int, list[int]]]
    uncertified: list[tuple[int, int]]

    @property
    def verdict(self) -> bool:
        return not self.sign_violations and not self.uncertified

    @property
    def signs_consistent(self) -> bool:
        return not self.sign_violations

    def summary(self) -> str:
        sy = self.system
        lines = []
        if self.verdict:
            lines.append("%s: every pair certified; all extensions expected." % sy.type_label)
        elif self.sign_violations:
            lines.append(
                "%s: %d pair(s) violate sign compatibility (additional extensions exist)."
                % (sy.type_label, len(self.sign_violations))
            )
            for x, y, ks in self.sign_violations[:10]:
                lines.append(
                    "  (%s, %s) at exponents %s" % (sy.word_name(x), sy.word_name(y), ks)
                )
        else:
            lines.append(
                "%s: signs consistent with all-expected, but %d pair(s) lack a certificate."
                % (sy.type_label, len(self.uncertified))
            )
        return "\n".join(lines)


def all_expected_predicate(
    system: CoxeterSystem,
    kl: KLTable | None = None,
    rt: RTable | None = None,
    partition=None,
) -> AllExpectedReport:
    """Screen the whole group: verdict True means every comparable pair both
    passes the sign rule and carries a determination certificate, i.e. all
    graded extensions between Vermas are the expected ones.  A True verdict
    is a proof only where a certificate clause is itself a proof (it is, for
    every clause used here); sign consistency alone is only necessary.
    """
    rt = rt or RTable(system)
    kl = kl or KLTable(system)
    violations = []
    uncertified = []
    for x, y in system.comparable_pairs():
        bad = rt.sign_compatibility(x, y)
        if bad:
            violations.append((x, y, bad))
        if r_determined(system, x, y, kl=kl, partition=partition) is None:
            uncertified.append((x, y))
    return AllExpectedReport(system, violations, uncertified)
