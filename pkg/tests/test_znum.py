import pytest
from hypothesis import given, strategies as st

from oracles import primeset_members
from ttsupport.znum import (
    GENERIC,
    PointSet,
    PrimeSet,
    SpclSubset,
    SpecZPoint,
    is_prime,
    primeset_algebra,
    primes_up_to,
    v_of_point,
    z_of_point,
)

POOL = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]

primesets = st.builds(
    lambda ps, fin: PrimeSet.of(ps, finite=fin),
    st.sets(st.sampled_from(POOL), max_size=4),
    st.booleans(),
)
subsets = st.one_of(
    st.just(SpclSubset.whole_space()),
    st.builds(SpclSubset.closed_points, primesets),
)


class TestPrimality:
    def test_small(self):
        assert [p for p in range(60) if is_prime(p)] == primes_up_to(59)

    def test_carmichael_and_powers(self):
        assert not is_prime(561)  # Carmichael
        assert not is_prime(1)
        assert not is_prime(0)
        assert not is_prime(-7)
        assert not is_prime(7**2)

    def test_large(self):
        assert is_prime(2**61 - 1)
        assert not is_prime((2**31 - 1) * (2**19 - 1))


class TestPrimeSet:
    def test_canonicalisation(self):
        assert PrimeSet.of([5, 2, 2, 3]).primes == (2, 3, 5)

    def test_rejects_composites(self):
        with pytest.raises(ValueError):
            PrimeSet.of([4])
        with pytest.raises(ValueError):
            PrimeSet(True, (3, 2))

    def test_union_finite(self):
        assert PrimeSet.of([2, 3]).union(PrimeSet.of([3, 5])) == PrimeSet.of([2, 3, 5])

    def test_intersect_cofinite(self):
        got = PrimeSet.cofinite([2]).intersect(PrimeSet.cofinite([3]))
        assert got == PrimeSet.cofinite([2, 3])

    def test_difference_cofinite_finite(self):
        got = PrimeSet.cofinite([2]).difference(PrimeSet.of([3, 5]))
        assert got == PrimeSet.cofinite([2, 3, 5])
        # membership of small primes matches the brute-force model
        model = primeset_members(PrimeSet.cofinite([2]), 100) - primeset_members(
            PrimeSet.of([3, 5]), 100
        )
        for p in [2, 3, 5, 7, 11]:
            assert got.contains(p) == (p in model)

    @given(primesets, primesets, st.sampled_from(["union", "intersect", "difference"]))
    def test_bruteforce_semantics(self, a, b, op):
        got = primeset_algebra(a, b, op)
        model = {
            "union": primeset_members(a, 1000) | primeset_members(b, 1000),
            "intersect": primeset_members(a, 1000) & primeset_members(b, 1000),
            "difference": primeset_members(a, 1000) - primeset_members(b, 1000),
        }[op]
        assert primeset_members(got, 1000) == model

    @given(primesets)
    def test_complement_involution(self, a):
        assert a.complement().complement() == a

    def test_json_roundtrip(self):
        for ps in [PrimeSet.of([2, 97]), PrimeSet.cofinite([3]), PrimeSet.none()]:
            assert PrimeSet.from_json(ps.to_json()) == ps
        assert PrimeSet.from_json({"mode": "finite", "primes": ["101"]}) == PrimeSet.of([101])
        with pytest.raises(ValueError, match="mode"):
            PrimeSet.from_json({"mode": "open", "primes": []})


class TestPoints:
    def test_v_of_point(self):
        assert v_of_point(SpecZPoint.closed(2)) == SpclSubset.closed_points(PrimeSet.of([2]))
        assert v_of_point(SpecZPoint.closed(7)) == SpclSubset.closed_points(PrimeSet.of([7]))
        assert v_of_point(GENERIC) == SpclSubset.whole_space()

    def test_z_of_point_by_enumeration(self):
        # y lies in Z(x) exactly when x is outside the closure of y
        sample = [GENERIC] + [SpecZPoint.closed(p) for p in (2, 3, 5)]
        for x in sample:
            z = z_of_point(x)
            for y in sample:
                assert z.contains_point(y) == (not v_of_point(y).contains_point(x))
        assert z_of_point(SpecZPoint.closed(2)) == SpclSubset.closed_points(
            PrimeSet.cofinite([2])
        )
        assert z_of_point(GENERIC) == SpclSubset.closed_points(PrimeSet.all_primes())

    def test_point_isolation(self):
        for x in [GENERIC] + [SpecZPoint.closed(p) for p in (2, 3, 5, 31)]:
            v, z = v_of_point(x), z_of_point(x)
            assert v.contains_point(x)
            assert not z.contains_point(x)
            isolated = v.point_set().intersect(z.point_set().complement())
            assert isolated == PointSet.singleton(x)

    def test_closed_needs_prime(self):
        with pytest.raises(ValueError):
            SpecZPoint.closed(6)


class TestSpclLattice:
    def test_examples(self):
        a = SpclSubset.closed_points(PrimeSet.of([2]))
        b = SpclSubset.closed_points(PrimeSet.of([3]))
        assert a.join(b) == SpclSubset.closed_points(PrimeSet.of([2, 3]))
        five = SpclSubset.closed_points(PrimeSet.cofinite([5]))
        assert SpclSubset.whole_space().meet(five) == five
        assert not SpclSubset.closed_points(PrimeSet.cofinite([2])).contains_point(GENERIC)

    @given(subsets, subsets, subsets)
    def test_lattice_laws(self, a, b, c):
        assert a.join(b) == b.join(a)
        assert a.meet(b) == b.meet(a)
        assert a.join(b).join(c) == a.join(b.join(c))
        assert a.meet(b).meet(c) == a.meet(b.meet(c))
        assert a.join(a.meet(b)) == a
        assert a.meet(a.join(b)) == a
        assert a.meet(b.join(c)) == a.meet(b).join(a.meet(c))

    @given(subsets)
    def test_bounds(self, a):
        top, bottom = SpclSubset.whole_space(), SpclSubset.empty()
        assert a.meet(top) == a and a.join(top) == top
        assert a.join(bottom) == a and a.meet(bottom) == bottom
        assert bottom.leq(a) and a.leq(top)

    @given(subsets, subsets)
    def test_leq_is_subset_order(self, a, b):
        assert a.leq(b) == (a.join(b) == b)

    def test_json_roundtrip(self):
        for v in [SpclSubset.whole_space(), SpclSubset.closed_points(PrimeSet.cofinite([2]))]:
            assert SpclSubset.from_json(v.to_json()) == v


class TestPointSet:
    @given(subsets, subsets)
    def test_spcl_conversions(self, a, b):
        assert a.point_set().union(a.complement()).is_everything()
        assert a.point_set().intersect(a.complement()).is_empty()
        assert a.leq(b) == a.point_set().leq(b.point_set())

    def test_json_roundtrip(self):
        w = PointSet(True, PrimeSet.cofinite([2, 11]))
        assert PointSet.from_json(w.to_json()) == w


class TestDispatchers:
    def test_spcl_lattice_dispatch(self):
        from ttsupport.znum import spcl_lattice

        a = SpclSubset.closed_points(PrimeSet.of([2]))
        b = SpclSubset.closed_points(PrimeSet.of([3]))
        assert spcl_lattice(a, "join", b) == SpclSubset.closed_points(PrimeSet.of([2, 3]))
        assert spcl_lattice(a, "meet", b) == SpclSubset.empty()
        assert spcl_lattice(a, "leq", SpclSubset.whole_space()) is True
        assert spcl_lattice(a, "contains_point", x=SpecZPoint.closed(2)) is True
        assert spcl_lattice(a, "contains_point", x=GENERIC) is False
        with pytest.raises(ValueError):
            spcl_lattice(a, "xor", b)
        with pytest.raises(ValueError):
            spcl_lattice(a, "join")
