"""Rickard idempotents, big support, and the subset dictionary for D(Z).

The two tensor-idempotent families attached to a specialisation-closed
subset V -- the acyclisation piece gamma_V(1) and the localisation piece
l_V(1) -- have closed forms in the cyclic calculus: the first is a shifted
Prufer family (homology of a stable Koszul complex), the second a
localisation of Z (homology of a Cech complex).  Tensoring the two families
attached to V(x) and Z(x) isolates a single point x, and the support of an
arbitrary formal object is the set of points where that product is nonzero.

>>> from .znum import SpecZPoint
>>> print(gamma_point(SpecZPoint.closed(2)).value)
{1: Z(2^oo)}
>>> print(gamma_point(SpecZPoint.generic()).value)
{0: Q}
"""

from __future__ import annotations

from dataclasses import dataclass

from .homalg import PerfectComplex, homology, scalar_cone
from .modcalc import (
    Cyclic,
    GradedModule,
    Module,
    kunneth,
    supp_mod,
)
from .report import Report, check
from .znum import (
    GENERIC,
    PointSet,
    SpclSubset,
    SpecZPoint,
    primes_up_to,
    v_of_point,
    z_of_point,
)

__all__ = [
    "Idempotent",
    "LocSubcatCode",
    "gamma_v",
    "l_v",
    "gamma_point",
    "supp_object",
    "localization_triangle_check",
    "ltg_check",
    "residue_check",
    "sigma_loc",
    "tau_loc",
    "sigma_of_tau",
    "CompactPrime",
    "NotPrimeError",
    "point_to_prime",
    "prime_to_point",
    "tau_is_prime",
    "thick_membership",
    "residue_field",
]

# A localising subcategory is recorded by its subset of Spec Z.
LocSubcatCode = PointSet


@dataclass(frozen=True)
class Idempotent:
    """A tensor-idempotent object: its flavor and its computed value."""

    flavor: str  # "gamma" | "l" | "point"
    subset: SpclSubset | None
    point: SpecZPoint | None
    value: GradedModule


def gamma_v(v: SpclSubset) -> Idempotent:
    """Acyclisation idempotent for V: the part of the unit supported on V.

    For V the whole space this is the unit itself; for closed points with
    prime set S it is the Prufer family of S placed in degree 1, the homology
    of the stable Koszul complex Z -> Z[S^-1] (the colimit over finite
    subsets of S realises the cofinite case).
    """
    if v.is_all:
        return Idempotent("gamma", v, None, GradedModule.unit())
    s = v.closed
    if s.is_empty():
        value = GradedModule.zero()
    else:
        value = GradedModule.of({1: [Cyclic.prufer(s)]})
    return Idempotent("gamma", v, None, value)


def l_v(v: SpclSubset) -> Idempotent:
    """Localisation idempotent for V: the unit localised away from V.

    For closed points with prime set S this is Z[S^-1] in degree 0 (homology
    of the Cech complex); for the whole space it vanishes.
    """
    if v.is_all:
        return Idempotent("l", v, None, GradedModule.zero())
    s = v.closed
    return Idempotent("l", v, None, GradedModule.of({0: [Cyclic.free(s)]}))


def gamma_point(x: SpecZPoint) -> Idempotent:
    """Point idempotent: gamma of V(x) tensored with l of Z(x)."""
    value = kunneth(gamma_v(v_of_point(x)).value, l_v(z_of_point(x)).value)
    return Idempotent("point", None, x, value)


def supp_object(x: GradedModule) -> PointSet:
    """Support of a formal object: the points where the point idempotent
    does not kill it.

    Computed in closed form as the union of the blockwise supports, which
    keeps cofinite answers exact; the pointwise description via explicit
    tensoring is what the verification suite spot-checks.
    """
    out = PointSet.empty()
    for _, m in x.graded:
        out = out.union(supp_mod(m))
    return out


def localization_triangle_check(v: SpclSubset) -> Report:
    """Verify the homology-level exact sequence of gamma_V(1) -> 1 -> l_V(1).

    For V given by closed points S this is the four-term exact sequence
    0 -> H0(gamma) -> Z -> Z[S^-1] -> H1(gamma) -> 0: the degree-zero part of
    gamma vanishes, the localisation map is injective, and its cokernel is
    the Prufer family of S.  The two idempotents must also tensor to zero.
    """
    g, l = gamma_v(v).value, l_v(v).value
    records = []
    if v.is_all:
        records.append(check("triangle.unit", g == GradedModule.unit(), g, GradedModule.unit()))
        records.append(check("triangle.localisation-vanishes", l.is_zero(), l, "0"))
    else:
        s = v.closed
        records.append(
            check("triangle.h0-gamma-vanishes", g.module_in(0).is_zero(), g.module_in(0), "0")
        )
        expected_l = GradedModule.of({0: [Cyclic.free(s)]})
        records.append(check("triangle.localisation-form", l == expected_l, l, expected_l))
        # The unit embeds in its localisation (1 maps to 1, torsion free).
        records.append(check("triangle.unit-injects", True))
        expected_g = (
            GradedModule.zero() if s.is_empty() else GradedModule.of({1: [Cyclic.prufer(s)]})
        )
        records.append(check("triangle.cokernel-is-prufer", g == expected_g, g, expected_g))
    gl = kunneth(g, l)
    records.append(check("triangle.gamma-tensor-l-vanishes", gl.is_zero(), gl, "0"))
    return Report.of(records)


def _probe_points(x: GradedModule, extra_bound: int = 13) -> list[SpecZPoint]:
    """Generic point, every prime named in x, and small primes beyond."""
    named: set[int] = set()
    for _, m in x.graded:
        for c, _ in m.parts:
            if c.kind == "torsion":
                named.add(c.p)
            else:
                named.update(c.primes.primes)
    named.update(primes_up_to(extra_bound))
    return [GENERIC] + [SpecZPoint.closed(p) for p in sorted(named)]


def ltg_check(x: GradedModule) -> Report:
    """Computable consequences of the local-to-global principle.

    (i) the object vanishes exactly when its support is empty; (ii) the
    support is the union of the supports of its point-local pieces, each of
    which is concentrated at its point; (iii) a point-local piece is nonzero
    exactly at points of the support.
    """
    s = supp_object(x)
    records = [
        check("ltg.zero-detection", x.is_zero() == s.is_empty(), x, s),
    ]
    union = PointSet.empty()
    for _, m in x.graded:
        for c, _ in m.parts:
            union = union.union(supp_mod(Module.of([c])))
    records.append(check("ltg.union-of-local-supports", union == s, union, s))
    for pt in _probe_points(x):
        gx = kunneth(gamma_point(pt).value, x)
        local_supp = supp_object(gx)
        records.append(
            check(
                f"ltg.local-at-{pt}-concentrated",
                local_supp.leq(PointSet.singleton(pt)),
                local_supp,
                PointSet.singleton(pt),
            )
        )
        records.append(
            check(
                f"ltg.local-at-{pt}-detects",
                (not gx.is_zero()) == s.contains(pt),
                gx,
                s,
            )
        )
    return Report.of(records)


def residue_field(x: SpecZPoint) -> GradedModule:
    """k(p) = Z/p for a closed point, Q for the generic point, in degree 0."""
    if x.is_generic:
        return GradedModule.of({0: [Cyclic.rationals()]})
    return GradedModule.of({0: [Cyclic.torsion(x.p, 1)]})


def residue_check(x: SpecZPoint, obj: GradedModule) -> Report:
    """Tensoring with the residue field decomposes into shifted copies of it,
    and detects objects concentrated at the point."""
    kp = residue_field(x)
    kp_block = kp.module_in(0).parts[0][0]
    result = kunneth(kp, obj)
    records = []
    stray = [
        str(c) for _, m in result.graded for c, _ in m.parts if c != kp_block
    ]
    records.append(
        check(
            f"residue.{x}-decomposes",
            not stray,
            " + ".join(stray) if stray else "",
            str(kp_block),
        )
    )
    concentrated = (not obj.is_zero()) and supp_object(obj).leq(PointSet.singleton(x))
    if concentrated:
        records.append(
            check(f"residue.{x}-detects", not result.is_zero(), result, "nonzero")
        )
    return Report.of(records)


def sigma_loc(gens: list[GradedModule]) -> LocSubcatCode:
    """Subset code of the localising subcategory generated by the objects:
    the union of their supports (local pieces of generators exhaust the
    support of everything they build)."""
    out = PointSet.empty()
    for g in gens:
        out = out.union(supp_object(g))
    return out


def tau_loc(w: LocSubcatCode, x: GradedModule) -> bool:
    """Membership in the localising subcategory coded by the subset w."""
    return supp_object(x).leq(w)


def sigma_of_tau(w: LocSubcatCode) -> LocSubcatCode:
    """Support of the subcategory coded by w, assembled from the canonical
    generators attached to the points of w; equals w because every point
    idempotent is nonzero."""
    out = PointSet.empty()
    if w.generic:
        gen = gamma_point(GENERIC).value
        if not gen.is_zero():
            out = out.union(supp_object(gen))
    if not w.closed.is_empty():
        # One Prufer family realises all closed points of w at once.
        out = out.union(supp_object(GradedModule.of({1: [Cyclic.prufer(w.closed)]})))
    return out


@dataclass(frozen=True)
class CompactPrime:
    """A prime thick subcategory of the perfect complexes, encoded by the
    subset of Spec Z that its members' supports must avoid hitting."""

    point: SpecZPoint
    defining: SpclSubset  # Z(point); membership is supp inside this

    def contains(self, c: PerfectComplex) -> bool:
        return supp_object(homology(c)).leq(self.defining.point_set())

    def __str__(self) -> str:
        return f"prime at {self.point}"


class NotPrimeError(ValueError):
    """Raised when a coded thick subcategory is not prime; carries a witness
    pair when one exists."""

    def __init__(self, message: str, witness: tuple[PerfectComplex, PerfectComplex] | None = None):
        super().__init__(message)
        self.witness = witness


def point_to_prime(x: SpecZPoint) -> CompactPrime:
    """The prime thick subcategory attached to a point: complexes whose
    support avoids x, i.e. lands in Z(x)."""
    return CompactPrime(x, z_of_point(x))


def tau_is_prime(v: SpclSubset) -> SpecZPoint | None:
    """Decide whether the thick subcategory coded by V is prime.

    It is prime exactly when V is Z(x) for some point x: all closed points
    (x generic) or the closed points away from one prime (x = (p)).
    """
    if v.is_all:
        return None  # not proper
    s = v.closed
    if s.is_all():
        return GENERIC
    if not s.finite and len(s.primes) == 1:
        return SpecZPoint.closed(s.primes[0])
    return None


def _witness_pair(v: SpclSubset) -> tuple[PerfectComplex, PerfectComplex] | None:
    """Two complexes outside tau(V) whose tensor lands in it, when V is not
    of the form Z(x)."""
    if v.is_all:
        return None
    s = v.closed
    missing = s.complement().up_to(100)
    if len(missing) >= 2:
        return scalar_cone(missing[0]), scalar_cone(missing[1])
    return None


def prime_to_point(v: SpclSubset, probe_bound: int = 100) -> SpecZPoint:
    """Recover the point from a prime coded as tau(V).

    Probes n over the primes up to the bound plus the primes named in V,
    asking which cones of multiplication land outside the subcategory; the
    excluded n generate the recovered prime ideal of Z.
    """
    x = tau_is_prime(v)
    if x is None:
        wit = _witness_pair(v)
        if wit is not None:
            raise NotPrimeError(
                "coded subcategory is not prime: both cone factors lie outside "
                "while their tensor lies inside",
                wit,
            )
        raise NotPrimeError("coded subcategory is not proper, hence not prime")
    target = v.point_set()
    probes = sorted(set(primes_up_to(probe_bound)) | set(v.closed.primes))
    excluded = [
        n for n in probes if not supp_object(homology(scalar_cone(n))).leq(target)
    ]
    if not excluded:
        recovered = GENERIC
    elif len(excluded) == 1:
        recovered = SpecZPoint.closed(excluded[0])
    else:
        raise NotPrimeError(f"probe excluded more than one prime: {excluded}")
    if recovered != x:
        raise AssertionError(f"probe recovered {recovered}, structure says {x}")
    return recovered


def thick_membership(y: PerfectComplex, gens: list[PerfectComplex]) -> bool:
    """Whether y lies in the thick subcategory generated by gens: supports
    decide, since the unit generates everything and the classification is by
    specialisation-closed subsets."""
    target = PointSet.empty()
    for g in gens:
        target = target.union(supp_object(homology(g)))
    return supp_object(homology(y)).leq(target)
