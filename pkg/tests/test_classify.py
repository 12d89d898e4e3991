from fractions import Fraction

import pytest

from treespectra import (
    LambdaParam,
    admissible_q,
    classify_m1,
    extremal_lambda_set,
    family_membership,
    free_trees,
    from_edge_list,
    has_unit_extremal,
    in_gamma,
    is_extremal,
    pendant_distance_gcd,
    single_vertex,
)
from treespectra.errors import NotExtremal, TooFewPendants


def path(n):
    return from_edge_list([(i, i + 1) for i in range(1, n)])


def star(k):
    return from_edge_list([(1, i) for i in range(2, k + 2)])


def spider(*legs):
    edges = []
    nxt = 2
    for length in legs:
        prev = 1
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return from_edge_list(edges)


class TestCongruenceCertificate:
    def test_star_gcd(self):
        assert pendant_distance_gcd(star(3)) == 3

    def test_asymmetric_spider_gcd(self):
        assert pendant_distance_gcd(spider(1, 1, 4)) == 3
        assert pendant_distance_gcd(spider(1, 2, 2)) == 1

    def test_too_few_pendants(self):
        with pytest.raises(TooFewPendants):
            pendant_distance_gcd(single_vertex())

    def test_spider222_certificate(self):
        cert = admissible_q(spider(2, 2, 2))
        assert cert.g == 5
        assert cert.admissible_moduli == (5,)
        assert cert.q_list == (2,)
        assert not cert.is_path

    def test_long_path_moduli(self):
        cert = admissible_q(path(15))
        assert cert.g == 15
        assert cert.admissible_moduli == (3, 5, 15)
        assert cert.q_list == (1, 2, 7)
        assert cert.is_path


class TestIsExtremal:
    def test_paths_always(self):
        for n in (2, 3, 7):
            flag, cert = is_extremal(path(n))
            assert flag and cert.is_path

    def test_star(self):
        flag, cert = is_extremal(star(3))
        assert flag
        assert cert.q_list == (1,)

    def test_negative(self):
        flag, cert = is_extremal(spider(1, 2, 2))
        assert not flag
        assert cert.g == 1


class TestLambdaSet:
    def test_star_single_value(self):
        assert extremal_lambda_set(star(3)) == (LambdaParam(1, 0),)

    def test_spider444_dedup(self):
        # moduli 3 and 9 overlap at ratio 1/3; four distinct values remain
        params = extremal_lambda_set(spider(4, 4, 4))
        ratios = [p.ratio for p in params]
        assert ratios == [
            Fraction(1, 9),
            Fraction(1, 3),
            Fraction(5, 9),
            Fraction(7, 9),
        ]
        values = [p.value for p in params]
        assert values == sorted(values)
        assert all(0 < v < 4 for v in values)

    def test_paths_rejected(self):
        with pytest.raises(NotExtremal):
            extremal_lambda_set(path(9))

    def test_non_extremal_rejected(self):
        with pytest.raises(NotExtremal):
            extremal_lambda_set(spider(1, 2, 2))


class TestUnitExtremal:
    def test_paths(self):
        assert has_unit_extremal(path(6))
        assert not has_unit_extremal(path(5))

    def test_non_paths(self):
        assert has_unit_extremal(star(3))
        assert has_unit_extremal(spider(1, 1, 4))
        assert not has_unit_extremal(spider(2, 2, 2))


class TestFamilyMembership:
    def test_in_q(self):
        assert family_membership(star(3)).in_q
        assert not family_membership(spider(1, 2, 2)).in_q

    def test_in_p(self):
        assert family_membership(path(5)).in_p
        assert not family_membership(path(6)).in_p
        assert not family_membership(star(3)).in_p

    def test_omega_types(self):
        assert family_membership(spider(1, 1, 2)).omega == "A"
        assert family_membership(spider(2, 3, 3)).omega == "B"
        assert family_membership(spider(1, 2, 2)).omega is None
        assert family_membership(spider(1, 1, 1)).omega is None

    def test_omega_needs_three_legs(self):
        assert family_membership(spider(1, 1, 1, 2)).omega is None


class TestInGamma:
    def test_core_only_spider(self):
        verdict, witness = in_gamma(spider(1, 1, 2))
        assert verdict
        assert witness.major == 1
        assert witness.endpoints == (2, 3, 5)
        assert witness.leg_residues == (1, 1, 2)
        assert witness.omega == "A"
        assert witness.attachments == ()

    def test_attachment_at_major(self):
        verdict, witness = in_gamma(spider(1, 1, 1, 2))
        assert verdict
        assert witness.endpoints == (2, 3, 6)
        att, = witness.attachments
        assert att.anchor == 1
        assert att.vertices == (4,)
        assert att.family == "P"

    def test_not_gamma(self):
        assert in_gamma(spider(1, 2, 2)) == (False, None)
        assert in_gamma(star(3)) == (False, None)
        assert in_gamma(path(7)) == (False, None)


class TestClassifyM1:
    def test_star_report(self):
        rep = classify_m1(star(3))
        assert (rep.n, rep.p) == (4, 3)
        assert rep.extremal
        assert rep.lambda_set == (LambdaParam(1, 0),)
        assert rep.m1_class == "p-1"
        assert rep.m1_exact == 2
        assert rep.gamma_witness is None

    def test_gamma_report(self):
        rep = classify_m1(spider(1, 1, 2))
        assert rep.m1_class == "p-2"
        assert rep.m1_exact == 1
        assert rep.gamma_witness is not None

    def test_other_report(self):
        rep = classify_m1(spider(1, 2, 2))
        assert rep.m1_class == "other"
        assert rep.m1_exact == 0
        assert not rep.extremal

    def test_path_reports(self):
        assert classify_m1(path(6)).m1_class == "p-1"
        assert classify_m1(path(5)).m1_class == "p-2"
        assert classify_m1(path(2)).m1_class == "p-2"

    def test_too_few_pendants(self):
        with pytest.raises(TooFewPendants):
            classify_m1(single_vertex())

    def test_cross_check_holds_small(self):
        # classify_m1 raises OracleDisagreement internally on any mismatch
        for n in range(2, 9):
            for tree in free_trees(n):
                classify_m1(tree)
