import pytest

from vermaext.coxeter import build_system
from vermaext.intervals import (
    IntervalTooLargeError,
    boolean_r_determined,
    class_r_constancy,
    equiv_classes,
    poset_isomorphic,
)
from vermaext.refdata import A3_CLASS_COUNT, A3_CLASS_SIZES, A3_PAIR_COUNT
from vermaext.rpoly import RTable


@pytest.fixture(scope="module")
def a3():
    return build_system("A3")


@pytest.fixture(scope="module")
def part3(a3):
    return equiv_classes(a3)


class TestPartition:
    def test_pairs_are_comparable(self, a3, part3):
        for x, y in part3.pairs:
            assert a3.bruhat_leq(y, x)
        assert len(part3.pairs) == A3_PAIR_COUNT

    def test_diagonal_single_class(self, a3, part3):
        base = part3.class_id[(0, 0)]
        for w in range(a3.order):
            assert part3.class_id[(w, w)] == base

    def test_paper_move(self, a3, part3):
        rts = a3.element("r*t*s")
        srts = a3.element("s*r*t*s")
        assert part3.same_class((rts, 0), (srts, a3.element("s")))

    def test_golden_class_structure(self, part3):
        assert len(part3.classes) == A3_CLASS_COUNT
        assert part3.class_sizes() == A3_CLASS_SIZES

    def test_length_gap_is_class_invariant(self, a3, part3):
        for members in part3.classes:
            gaps = {a3.lengths[x] - a3.lengths[y] for x, y in members}
            assert len(gaps) == 1

    def test_moves_stay_inside_classes(self, a3, part3):
        for (x, y) in part3.pairs:
            for s in range(a3.rank):
                xs, ys = a3.right[s][x], a3.right[s][y]
                if a3.lengths[xs] < a3.lengths[x] and a3.lengths[ys] < a3.lengths[y]:
                    assert part3.same_class((x, y), (xs, ys))

    def test_w0_e_is_singleton(self, a3, part3):
        assert part3.class_of(a3.w0, 0) == [(a3.w0, 0)]


class TestRConstancy:
    @pytest.mark.parametrize("label", ["A3", "B3"])
    def test_exhaustive(self, label):
        sy = build_system(label)
        ok, violations = class_r_constancy(equiv_classes(sy), RTable(sy))
        assert ok and violations == []

    def test_diagonal_class_all_one(self, a3, part3):
        rt = RTable(a3)
        from vermaext.poly import LaurentPoly

        for x, y in part3.class_of(0, 0):
            assert rt.r_poly(x, y) == LaurentPoly({0: 1})


class TestBooleanCertificate:
    def test_paper_pair(self, a3, part3):
        cert = boolean_r_determined(part3, a3.element("r*t*s"), 0)
        assert cert is not None
        clause, (wx, wy) = cert
        assert clause == "x-boolean"
        assert a3.is_boolean(wx)

    def test_near_longest(self, a3, part3):
        w0s = a3.right[1][a3.w0]
        cert = boolean_r_determined(part3, a3.w0, w0s)
        assert cert is not None
        clause, (wx, wy) = cert
        if clause == "x-boolean":
            assert a3.is_boolean(wx)
        else:
            assert a3.is_boolean(a3.mult(a3.w0, wy))

    def test_d4_top_pair_unknown(self):
        d4 = build_system("D4")
        part = equiv_classes(d4)
        assert boolean_r_determined(part, d4.w0, 0) is None

    def test_requires_comparable(self, a3, part3):
        with pytest.raises(ValueError):
            boolean_r_determined(part3, 0, a3.w0)

    def test_sound_against_signs(self, a3, part3):
        # every boolean-certified pair also passes the sign screen
        rt = RTable(a3)
        for x, y in part3.pairs:
            if boolean_r_determined(part3, x, y) is not None:
                assert rt.sign_compatibility(x, y) == []


class TestPosetIso:
    def test_self(self, a3):
        rts = a3.element("r*t*s")
        assert poset_isomorphic(a3, (0, rts), a3, (0, rts))

    def test_two_chains(self, a3):
        assert poset_isomorphic(
            a3, (0, a3.element("s1")), a3, (0, a3.element("s3"))
        )

    def test_paper_nonisomorphism(self, a3):
        rts = a3.element("r*t*s")
        srts = a3.element("s*r*t*s")
        assert not poset_isomorphic(a3, (0, rts), a3, (a3.element("s"), srts))

    def test_interval_sizes_differ(self, a3):
        rts = a3.element("r*t*s")
        srts = a3.element("s*r*t*s")
        assert len(a3.bruhat_interval(0, rts)) == 8
        assert len(a3.bruhat_interval(a3.element("s"), srts)) == 10

    def test_boolean_cube(self, a3):
        # [e, rts] is the poset of subsets of a 3-set: compare against [e, sub]
        b3 = build_system("B3")
        cube1 = (0, a3.element("r*t*s"))
        cube2 = (0, b3.element("s0*s2"))
        assert not poset_isomorphic(a3, cube1, b3, cube2)  # 8 vs 4 elements
        square_a = (0, a3.element("s1*s3"))
        assert poset_isomorphic(a3, square_a, b3, cube2)

    def test_cross_system(self, a3):
        b3 = build_system("B3")
        assert poset_isomorphic(
            a3, (0, a3.element("s1")), b3, (0, b3.element("s2"))
        )

    def test_cap(self, a3):
        d4 = build_system("D4")
        with pytest.raises(IntervalTooLargeError):
            poset_isomorphic(d4, (0, d4.w0), d4, (0, d4.w0))

    def test_rank_profile_filter(self, a3):
        # intervals of equal size but different rank profiles
        i1 = (0, a3.element("r*t*s"))  # ranks 1,3,3,1
        chain = (0, a3.element("s1*s2*s1"))
        assert not poset_isomorphic(a3, i1, a3, chain)
