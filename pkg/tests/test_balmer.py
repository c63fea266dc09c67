import random
from itertools import combinations

import pytest

from ttsupport.balmer import (
    NotPrimeError,
    gamma_point,
    gamma_v,
    l_v,
    localization_triangle_check,
    ltg_check,
    point_to_prime,
    prime_to_point,
    residue_check,
    residue_field,
    sigma_loc,
    sigma_of_tau,
    supp_object,
    tau_is_prime,
    tau_loc,
    thick_membership,
)
from ttsupport.homalg import ChainMap, IntMatrix, cone, homology, scalar_cone, smith_factors, unit_complex
from ttsupport.modcalc import Cyclic, GradedModule, kunneth
from ttsupport.randgen import (
    compact_catalogue,
    random_chain_map,
    random_complex,
    random_engineered_graded,
    random_graded,
    random_spcl,
)
from ttsupport.znum import (
    GENERIC,
    PointSet,
    PrimeSet,
    SpclSubset,
    SpecZPoint,
)

Z = Cyclic.free(PrimeSet.none())
Q = Cyclic.rationals()


def closed(*primes):
    return SpclSubset.closed_points(PrimeSet.of(primes))


def closed_except(*primes):
    return SpclSubset.closed_points(PrimeSet.cofinite(primes))


class TestClosedForms:
    def test_gamma_at_single_prime_vs_koszul_tower(self):
        for p in (2, 3, 5, 7):
            got = gamma_v(closed(p)).value
            assert got == GradedModule.of({1: [Cyclic.prufer(PrimeSet.of([p]))]})
            # the two-term complex Z -> Z[1/p]: degree 0 kernel vanishes and
            # the cokernel is the rising union of Z/p^k; each stage is the
            # cokernel of multiplication by p^k
            assert got.module_in(0).is_zero()
            for k in range(1, 9):
                assert smith_factors(IntMatrix.of([[p**k]])) == (p**k,)

    def test_localisation_at_p(self):
        got = l_v(closed_except(2)).value
        assert got == GradedModule.of({0: [Cyclic.free(PrimeSet.cofinite([2]))]})

    def test_extremes(self):
        assert gamma_v(SpclSubset.whole_space()).value == GradedModule.unit()
        assert l_v(SpclSubset.whole_space()).value.is_zero()
        assert gamma_v(SpclSubset.empty()).value.is_zero()
        assert l_v(SpclSubset.empty()).value == GradedModule.unit()

    def test_disjoint_gammas_annihilate(self):
        got = kunneth(gamma_v(closed(2)).value, gamma_v(closed(3)).value)
        assert got.is_zero()

    def test_cofinite_gamma_per_prime(self):
        s = PrimeSet.cofinite([2, 5])
        val = gamma_v(SpclSubset.closed_points(s)).value
        fam = val.module_in(1)
        for q in (2, 3, 5, 7, 11, 97):
            in_family = any(c.kind == "prufer" and c.primes.contains(q) for c, _ in fam.parts)
            assert in_family == s.contains(q)


class TestGammaPoint:
    def test_closed_point(self):
        assert gamma_point(SpecZPoint.closed(2)).value == GradedModule.of(
            {1: [Cyclic.prufer(PrimeSet.of([2]))]}
        )

    def test_generic_point(self):
        assert gamma_point(GENERIC).value == GradedModule.of({0: [Q]})

    def test_computed_from_factors(self):
        from ttsupport.znum import v_of_point, z_of_point

        for x in [GENERIC, SpecZPoint.closed(3)]:
            direct = gamma_point(x).value
            assembled = kunneth(gamma_v(v_of_point(x)).value, l_v(z_of_point(x)).value)
            assert direct == assembled

    def test_idempotency(self):
        for x in [SpecZPoint.closed(2), SpecZPoint.closed(3), SpecZPoint.closed(5), GENERIC]:
            v = gamma_point(x).value
            assert kunneth(v, v) == v

    def test_uniqueness_against_alternative_pairs(self):
        for p in (2, 3, 5):
            want = gamma_point(SpecZPoint.closed(p)).value
            others = [q for q in (2, 3, 5, 7, 11) if q != p][:2]
            pairs = [
                (closed(p), SpclSubset.empty()),
                (closed(p, *others), closed(*others)),
                (closed_except(*others), closed_except(p, *others)),
                (closed_except(), closed_except(p)),
            ]
            for v, w in pairs:
                isolated = v.point_set().intersect(w.point_set().complement())
                assert isolated == PointSet.singleton(SpecZPoint.closed(p))
                assert kunneth(gamma_v(v).value, l_v(w).value) == want
        # the generic point admits exactly one such pair
        got = kunneth(
            gamma_v(SpclSubset.whole_space()).value, l_v(closed_except()).value
        )
        assert got == gamma_point(GENERIC).value


class TestIdempotentLaws:
    def test_exhaustive_family(self):
        first10 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)
        family = [SpclSubset.whole_space(), SpclSubset.empty()]
        for r in range(len(first10) + 1):
            for combo in combinations(first10, r):
                family.append(SpclSubset.closed_points(PrimeSet.of(combo)))
                family.append(SpclSubset.closed_points(PrimeSet.cofinite(combo)))
        for v in family:
            g, l = gamma_v(v).value, l_v(v).value
            assert kunneth(g, g) == g
            assert kunneth(l, l) == l
            assert kunneth(g, l).is_zero()


class TestSupportObject:
    def test_unit(self):
        assert supp_object(GradedModule.unit()).is_everything()

    def test_zero(self):
        assert supp_object(GradedModule.zero()).is_empty()

    def test_mixed_torsion_with_gamma_probes(self):
        x = GradedModule.of({0: [Cyclic.torsion(2, 2), Cyclic.torsion(3, 1)]})
        assert supp_object(x) == PointSet(False, PrimeSet.of([2, 3]))
        for pt, expect in [
            (SpecZPoint.closed(2), True),
            (SpecZPoint.closed(3), True),
            (SpecZPoint.closed(5), False),
            (GENERIC, False),
        ]:
            assert (not kunneth(gamma_point(pt).value, x).is_zero()) == expect

    def test_agreement_with_homological_support(self):
        from ttsupport.modcalc import supp_mod

        rng = random.Random(29)
        for _ in range(500):
            c, _ = random_complex(rng, max_cells=3)
            h = homology(c)
            union = PointSet.empty()
            for n in h.degrees():
                union = union.union(supp_mod(h.module_in(n)))
            assert supp_object(h) == union

    def test_separation_axiom(self):
        rng = random.Random(31)
        for _ in range(200):
            v = random_spcl(rng)
            x = random_graded(rng)
            sx = supp_object(x)
            assert supp_object(kunneth(gamma_v(v).value, x)) == sx.intersect(v.point_set())
            assert supp_object(kunneth(l_v(v).value, x)) == sx.intersect(v.complement())

    def test_zero_detection(self):
        rng = random.Random(37)
        for _ in range(300):
            x = random_engineered_graded(rng)
            assert x.is_zero() == supp_object(x).is_empty()

    def test_triangle_subadditivity(self):
        rng = random.Random(41)
        for _ in range(60):
            a, _ = random_complex(rng, max_cells=3)
            b, _ = random_complex(rng, max_cells=3)
            f = random_chain_map(rng, a, b)
            sa, sb = supp_object(homology(a)), supp_object(homology(b))
            sc = supp_object(homology(cone(f)))
            assert sc.leq(sa.union(sb))
            assert sb.leq(sa.union(sc))


class TestTriangleCheck:
    def test_single_prime(self):
        assert localization_triangle_check(closed(2)).passed

    def test_whole_space_trivial(self):
        assert localization_triangle_check(SpclSubset.whole_space()).passed

    def test_all_closed_points_gives_q_mod_z(self):
        v = closed_except()
        rep = localization_triangle_check(v)
        assert rep.passed
        assert gamma_v(v).value == GradedModule.of(
            {1: [Cyclic.prufer(PrimeSet.all_primes())]}
        )


class TestLtg:
    def test_six_torsion(self):
        x = GradedModule.of({0: [Cyclic.torsion(2, 1), Cyclic.torsion(3, 1)]})
        assert ltg_check(x).passed
        assert kunneth(gamma_point(SpecZPoint.closed(2)).value, x) == GradedModule.of(
            {0: [Cyclic.torsion(2, 1)]}
        )
        assert kunneth(gamma_point(SpecZPoint.closed(3)).value, x) == GradedModule.of(
            {0: [Cyclic.torsion(3, 1)]}
        )
        assert kunneth(gamma_point(SpecZPoint.closed(5)).value, x).is_zero()
        assert kunneth(gamma_point(GENERIC).value, x).is_zero()

    def test_zero_object(self):
        assert ltg_check(GradedModule.zero()).passed

    def test_rationals(self):
        x = GradedModule.of({0: [Q]})
        assert supp_object(x) == PointSet.singleton(GENERIC)
        assert kunneth(gamma_point(GENERIC).value, x) == x
        assert ltg_check(x).passed

    def test_random(self):
        rng = random.Random(43)
        for _ in range(60):
            assert ltg_check(random_engineered_graded(rng)).passed


class TestResidue:
    def test_torsion_square_decomposes(self):
        rep = residue_check(SpecZPoint.closed(2), GradedModule.of({0: [Cyclic.torsion(2, 2)]}))
        assert rep.passed
        got = kunneth(residue_field(SpecZPoint.closed(2)), GradedModule.of({0: [Cyclic.torsion(2, 2)]}))
        assert got == GradedModule.of(
            {-1: [Cyclic.torsion(2, 1)], 0: [Cyclic.torsion(2, 1)]}
        )

    def test_prufer_detected(self):
        x = GradedModule.of({1: [Cyclic.prufer(PrimeSet.of([2]))]})
        got = kunneth(residue_field(SpecZPoint.closed(2)), x)
        assert got == GradedModule.of({0: [Cyclic.torsion(2, 1)]})
        assert residue_check(SpecZPoint.closed(2), x).passed

    def test_generic(self):
        assert residue_check(GENERIC, GradedModule.of({0: [Q]})).passed
        assert kunneth(residue_field(GENERIC), GradedModule.of({0: [Q]})) == GradedModule.of(
            {0: [Q]}
        )

    def test_random(self):
        rng = random.Random(47)
        points = [SpecZPoint.closed(2), SpecZPoint.closed(3), GENERIC]
        for i in range(200):
            x = points[i % 3]
            if rng.random() < 0.5:
                obj = kunneth(gamma_point(x).value, random_graded(rng))
            else:
                obj = random_graded(rng)
            assert residue_check(x, obj).passed


class TestSigmaTau:
    def test_roundtrip_on_representables(self):
        first6 = (2, 3, 5, 7, 11, 13)
        for generic in (False, True):
            for r in range(len(first6) + 1):
                for combo in combinations(first6, r):
                    for finite in (True, False):
                        w = PointSet(generic, PrimeSet.of(combo, finite=finite))
                        assert sigma_of_tau(w) == w

    def test_tau_membership(self):
        w = PointSet(False, PrimeSet.of([2]))
        assert tau_loc(w, GradedModule.of({0: [Cyclic.torsion(2, 5)]}))
        assert not tau_loc(w, GradedModule.unit())

    def test_sigma_of_generators(self):
        code = sigma_loc(
            [
                GradedModule.of({0: [Cyclic.torsion(2, 1)]}),
                GradedModule.of({2: [Cyclic.torsion(3, 4)]}),
            ]
        )
        assert code == PointSet(False, PrimeSet.of([2, 3]))

    def test_tau_sigma_membership_probes(self):
        rng = random.Random(53)
        catalogue = compact_catalogue()
        for _ in range(20):
            gens = rng.sample(catalogue, rng.randint(1, 4))
            code = sigma_loc([homology(g) for g in gens])
            for y in catalogue:
                inside = supp_object(homology(y)).leq(code)
                assert thick_membership(y, gens) == inside
                assert tau_loc(code, homology(y)) == inside


class TestPointPrimeDictionary:
    def test_membership_of_cones(self):
        prime2 = point_to_prime(SpecZPoint.closed(2))
        assert prime2.contains(scalar_cone(3))
        assert not prime2.contains(scalar_cone(2))

    def test_generic_is_torsion_ideal(self):
        v = closed_except()  # all closed points: complexes with torsion homology
        assert prime_to_point(v) == GENERIC

    def test_composition_identity(self):
        for x in [SpecZPoint.closed(p) for p in (2, 3, 5, 7)] + [GENERIC]:
            assert prime_to_point(point_to_prime(x).defining) == x

    def test_not_prime_with_witness(self):
        with pytest.raises(NotPrimeError) as exc:
            prime_to_point(closed(2))
        a, b = exc.value.witness
        # both cones outside, tensor inside: supports are disjoint points
        assert not supp_object(homology(a)).leq(closed(2).point_set())
        assert supp_object(
            kunneth(homology(a), homology(b))
        ).leq(closed(2).point_set())
        with pytest.raises(NotPrimeError):
            prime_to_point(SpclSubset.empty())
        with pytest.raises(NotPrimeError, match="proper"):
            prime_to_point(SpclSubset.whole_space())
        assert tau_is_prime(closed_except(3, 5)) is None

    def test_tau_primality_decision(self):
        assert tau_is_prime(closed_except(7)) == SpecZPoint.closed(7)
        assert tau_is_prime(closed_except()) == GENERIC
        assert tau_is_prime(closed(2, 3)) is None


class TestThickMembership:
    def test_four_in_two_with_witness_triangle(self):
        assert thick_membership(scalar_cone(4), [scalar_cone(2)])
        # explicit triangle Z/2 -> Z/4 -> Z/2 realised as a cone
        f = ChainMap.of(scalar_cone(2), scalar_cone(4), {-1: [[1]], 0: [[2]]})
        assert homology(cone(f)) == GradedModule.of({0: [Cyclic.torsion(2, 1)]})

    def test_disjoint_supports(self):
        assert not thick_membership(scalar_cone(2), [scalar_cone(3)])

    def test_unit_not_in_torsion(self):
        assert not thick_membership(unit_complex(), [scalar_cone(2)])
