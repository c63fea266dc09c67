"""The reproducible property suite behind the ``verify`` CLI command.

Every module invariant is a named check producing one record; checks draw
independent seeded generators, so sharding across workers cannot change the
output.  Randomised case counts scale with the requested ``cases``.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from . import balmer, homalg, modcalc, randgen, supportdata, znum
from .homalg import IntMatrix, determinant, homology, smith_factors, snf, tensor_chain
from .modcalc import Cyclic, GradedModule, kunneth
from .report import CheckRecord, Report
from .znum import GENERIC, PointSet, PrimeSet, SpclSubset, SpecZPoint

FIRST_TEN = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)


@dataclass(frozen=True)
class VerifyContext:
    seed: int
    cases: int
    primes_bound: int

    def rng(self, name: str) -> random.Random:
        return random.Random(f"{self.seed}:{name}")


def _record(name: str, failures: list[str], cases: int) -> CheckRecord:
    if failures:
        return CheckRecord(name, False, failures[0])
    return CheckRecord(name, True, f"{cases} cases")


# --- znum ---------------------------------------------------------------


def check_primeset_bruteforce(ctx: VerifyContext) -> CheckRecord:
    rng = ctx.rng("primeset")
    bound = min(ctx.primes_bound, 1000)
    universe = znum.primes_up_to(bound)
    failures = []
    modes = [(True, True), (True, False), (False, True), (False, False)]
    ops = ["union", "intersect", "difference"]
    cases = 0
    for i in range(max(ctx.cases // 4, len(modes) * len(ops))):
        fa, fb = modes[i % 4]
        a = randgen.random_primeset(rng)
        b = randgen.random_primeset(rng)
        a = PrimeSet(fa, a.primes)
        b = PrimeSet(fb, b.primes)
        sa = set(a.up_to(bound))
        sb = set(b.up_to(bound))
        for op, model in (
            ("union", sa | sb),
            ("intersect", sa & sb),
            ("difference", sa - sb),
        ):
            got = set(znum.primeset_algebra(a, b, op).up_to(bound))
            cases += 1
            if got != model:
                failures.append(f"{op}({a}, {b}): {sorted(got)} != {sorted(model)}")
    # tail behaviour beyond listed primes must match the mode arithmetic
    return _record("znum.primeset-bruteforce", failures, cases)


def check_spcl_lattice(ctx: VerifyContext) -> CheckRecord:
    rng = ctx.rng("lattice")
    failures = []
    top, bottom = SpclSubset.whole_space(), SpclSubset.empty()
    cases = 0
    for _ in range(max(ctx.cases // 3, 50)):
        a, b, c = (randgen.random_spcl(rng) for _ in range(3))
        checks = [
            ("join-comm", a.join(b) == b.join(a)),
            ("meet-comm", a.meet(b) == b.meet(a)),
            ("join-assoc", a.join(b).join(c) == a.join(b.join(c))),
            ("meet-assoc", a.meet(b).meet(c) == a.meet(b.meet(c))),
            ("absorb-1", a.join(a.meet(b)) == a),
            ("absorb-2", a.meet(a.join(b)) == a),
            ("distributes", a.meet(b.join(c)) == a.meet(b).join(a.meet(c))),
            ("top", a.meet(top) == a and a.join(top) == top),
            ("bottom", a.join(bottom) == a and a.meet(bottom) == bottom),
            ("leq-join", a.leq(a.join(b)) and b.leq(a.join(b))),
        ]
        cases += len(checks)
        failures.extend(f"{name} on ({a}; {b}; {c})" for name, ok in checks if not ok)
    return _record("znum.spcl-lattice-laws", failures, cases)


def check_point_functors(ctx: VerifyContext) -> CheckRecord:
    failures = []
    points = [GENERIC] + [SpecZPoint.closed(p) for p in FIRST_TEN]
    for x in points:
        v = znum.v_of_point(x)
        z = znum.z_of_point(x)
        if not v.contains_point(x):
            failures.append(f"{x} not in V({x})")
        if z.contains_point(x):
            failures.append(f"{x} in Z({x})")
        isolated = v.point_set().intersect(z.point_set().complement())
        if isolated != PointSet.singleton(x):
            failures.append(f"V\\(Z meet V) at {x}: {isolated}")
        for y in points:
            if z.contains_point(y) != (not znum.v_of_point(y).contains_point(x)):
                failures.append(f"Z({x}) membership of {y} disagrees with closure test")
    return _record("znum.point-functors", failures, len(points) * (3 + len(points)))


# --- homalg -------------------------------------------------------------


def _minor_gcds(m: IntMatrix) -> list[int]:
    out = []
    for k in range(1, min(m.rows, m.cols) + 1):
        g = 0
        for rows in combinations(range(m.rows), k):
            for cols in combinations(range(m.cols), k):
                sub = IntMatrix.of([[m[i, j] for j in cols] for i in rows])
                g = math.gcd(g, determinant(sub))
        out.append(g)
    return out


def check_snf(ctx: VerifyContext) -> CheckRecord:
    rng = ctx.rng("snf")
    failures = []
    cases = 0
    for _ in range(ctx.cases):
        r, c = rng.randint(0, 4), rng.randint(0, 4)
        m = IntMatrix.of([[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)])
        res = snf(m)
        cases += 1
        if res.u.mul(m).mul(res.v) != res.d:
            failures.append(f"UMV != D for {m.entries}")
            continue
        if abs(determinant(res.u)) != 1 or abs(determinant(res.v)) != 1:
            failures.append(f"transforms not unimodular for {m.entries}")
        f = res.invariant_factors
        if any(f[i + 1] % f[i] for i in range(len(f) - 1)):
            failures.append(f"divisibility chain broken: {f}")
        gcds = _minor_gcds(m)
        prod = 1
        for i, d in enumerate(f):
            prod *= d
            if prod != gcds[i]:
                failures.append(f"minor oracle: prod d_1..d_{i+1} = {prod} != {gcds[i]}")
        if any(g != 0 for g in gcds[len(f) :]):
            failures.append(f"rank disagrees with minors for {m.entries}")
    for _ in range(max(ctx.cases // 50, 5)):
        m = IntMatrix.of([[rng.randint(-9, 9) for _ in range(6)] for _ in range(6)])
        res = snf(m)
        cases += 1
        if res.u.mul(m).mul(res.v) != res.d:
            failures.append("UMV != D on a 6x6 case")
        f = res.invariant_factors
        if any(f[i + 1] % f[i] for i in range(len(f) - 1)):
            failures.append(f"6x6 divisibility chain broken: {f}")
    return _record("homalg.snf", failures, cases)


def check_homology_oracle(ctx: VerifyContext) -> CheckRecord:
    rng = ctx.rng("homology")
    failures = []
    for _ in range(ctx.cases // 2):
        c, expected = randgen.random_complex(rng)
        got = homology(c)
        if got != expected:
            failures.append(f"{got} != {expected} for ranks {dict(c.ranks)}")
    return _record("homalg.homology-oracle", failures, ctx.cases // 2)


def check_shift_homology(ctx: VerifyContext) -> CheckRecord:
    rng = ctx.rng("shift")
    failures = []
    for _ in range(ctx.cases // 4):
        c, _ = randgen.random_complex(rng)
        k = rng.randint(-3, 3)
        lhs = homology(homalg.shift(c, k))
        rhs = homology(c).shift(k)
        if lhs != rhs:
            failures.append(f"shift {k}: {lhs} != {rhs}")
        if homalg.shift(homalg.shift(c, k), -k) != c:
            failures.append(f"shift inverse failed at {k}")
    return _record("homalg.shift-homology", failures, ctx.cases // 4)


def check_tensor_commutes(ctx: VerifyContext) -> CheckRecord:
    rng = ctx.rng("tensor-comm")
    failures = []
    for _ in range(ctx.cases // 10):
        a, _ = randgen.random_complex(rng, max_cells=3)
        b, _ = randgen.random_complex(rng, max_cells=3)
        if homology(tensor_chain(a, b)) != homology(tensor_chain(b, a)):
            failures.append("graded commutativity failed")
    return _record("homalg.tensor-commutes", failures, ctx.cases // 10)


# --- modcalc ------------------------------------------------------------


def _generator_cyclics() -> list[Cyclic]:
    return [
        Cyclic.free(PrimeSet.none()),
        Cyclic.free(PrimeSet.of([2])),
        Cyclic.free(PrimeSet.of([3, 5])),
        Cyclic.free(PrimeSet.cofinite([2])),
        Cyclic.rationals(),
        Cyclic.torsion(2, 1),
        Cyclic.torsion(2, 3),
        Cyclic.torsion(3, 2),
        Cyclic.torsion(5, 1),
        Cyclic.prufer(PrimeSet.of([2])),
        Cyclic.prufer(PrimeSet.of([2, 7])),
        Cyclic.prufer(PrimeSet.cofinite([3])),
        Cyclic.prufer(PrimeSet.all_primes()),
    ]


def check_table_symmetry(ctx: VerifyContext) -> CheckRecord:
    gens = _generator_cyclics()
    failures = []
    for a in gens:
        for b in gens:
            if modcalc.tensor_mod(a, b) != modcalc.tensor_mod(b, a):
                failures.append(f"tensor not symmetric at ({a}, {b})")
            if modcalc.tor_mod(a, b) != modcalc.tor_mod(b, a):
                failures.append(f"tor not symmetric at ({a}, {b})")
    return _record("modcalc.table-symmetry", failures, len(gens) ** 2 * 2)


def check_kunneth_laws(ctx: VerifyContext) -> CheckRecord:
    rng = ctx.rng("kunneth-laws")
    unit = GradedModule.unit()
    failures = []
    for _ in range(ctx.cases // 10):
        x = randgen.random_graded(rng)
        y = randgen.random_graded(rng)
        z = randgen.random_graded(rng)
        if kunneth(unit, x) != x:
            failures.append(f"unit law failed on {x}")
        if kunneth(x, y) != kunneth(y, x):
            failures.append(f"commutativity failed on ({x}, {y})")
        if kunneth(kunneth(x, y), z) != kunneth(x, kunneth(y, z)):
            failures.append(f"associativity failed on ({x}, {y}, {z})")
    return _record("modcalc.kunneth-laws", failures, 3 * (ctx.cases // 10))


def check_kunneth_chain_oracle(ctx: VerifyContext) -> CheckRecord:
    rng = ctx.rng("kunneth-chain")
    failures = []
    for _ in range(ctx.cases):
        a, _ = randgen.random_complex(rng, max_cells=3)
        b, _ = randgen.random_complex(rng, max_cells=3)
        lhs = homology(tensor_chain(a, b))
        rhs = kunneth(homology(a), homology(b))
        if lhs != rhs:
            failures.append(f"{lhs} != {rhs}")
    return _record("modcalc.kunneth-chain-oracle", failures, ctx.cases)


def check_supp_laws(ctx: VerifyContext) -> CheckRecord:
    rng = ctx.rng("supp-laws")
    failures = []
    cases = 0
    for _ in range(ctx.cases // 3):
        x = randgen.random_module(rng)
        y = randgen.random_module(rng)
        cases += 2
        if modcalc.supp_mod(x.plus(y)) != modcalc.supp_mod(x).union(modcalc.supp_mod(y)):
            failures.append(f"sum law failed on ({x}, {y})")
        prod_supp = modcalc.supp_mod(
            modcalc.tensor_modules(x, y).plus(modcalc.tor_modules(x, y))
        )
        meet = modcalc.supp_mod(x).intersect(modcalc.supp_mod(y))
        if not prod_supp.leq(meet):
            failures.append(f"product support not inside intersection on ({x}, {y})")
        fg = all(
            c.kind == "torsion" or (c.kind == "free" and c.primes.is_empty())
            for m in (x, y)
            for c, _ in m.parts
        )
        if fg and prod_supp != meet:
            failures.append(f"finitely generated equality failed on ({x}, {y})")
    return _record("modcalc.supp-laws", failures, cases)


# --- balmer -------------------------------------------------------------


def _idempotent_family() -> list[SpclSubset]:
    family = [SpclSubset.whole_space(), SpclSubset.empty()]
    for r in range(len(FIRST_TEN) + 1):
        for combo in combinations(FIRST_TEN, r):
            family.append(SpclSubset.closed_points(PrimeSet.of(combo)))
            family.append(SpclSubset.closed_points(PrimeSet.cofinite(combo)))
    return family


def check_idempotent_laws(ctx: VerifyContext) -> CheckRecord:
    failures = []
    family = _idempotent_family()
    for v in family:
        g = balmer.gamma_v(v).value
        l = balmer.l_v(v).value
        if kunneth(g, g) != g:
            failures.append(f"gamma not idempotent at {v}")
        if kunneth(l, l) != l:
            failures.append(f"l not idempotent at {v}")
        if not kunneth(g, l).is_zero():
            failures.append(f"gamma x l nonzero at {v}")
    return _record("balmer.idempotent-laws", failures, 3 * len(family))


def check_closed_forms(ctx: VerifyContext) -> CheckRecord:
    """Koszul-complex and truncation validation of the idempotent values."""
    failures = []
    cases = 0
    for p in (2, 3, 5, 7):
        v = SpclSubset.closed_points(PrimeSet.of([p]))
        val = balmer.gamma_v(v).value
        # degree-0 part vanishes (the unit embeds into its localisation)
        if not val.module_in(0).is_zero():
            failures.append(f"H0 of the Koszul complex at {p} nonzero")
        # tower: coker(Z --p^k--> Z) = Z/p^k, transition maps injective
        for k in range(1, 9):
            cases += 1
            facs = smith_factors(IntMatrix.of([[p**k]]))
            if facs != (p**k,):
                failures.append(f"truncation step {p}^{k} has factors {facs}")
        if val != GradedModule.of({1: [Cyclic.prufer(PrimeSet.of([p]))]}):
            failures.append(f"gamma value at {p} is {val}")
    for excluded in ((), (2,), (2, 5)):
        s = PrimeSet.cofinite(excluded)
        val = balmer.gamma_v(SpclSubset.closed_points(s)).value
        fam = val.module_in(1)
        for q in znum.primes_up_to(min(ctx.primes_bound, 100)):
            cases += 1
            in_family = any(
                c.kind == "prufer" and c.primes.contains(q) for c, _ in fam.parts
            )
            if in_family != s.contains(q):
                failures.append(f"cofinite gamma at {s}: prime {q} mismatch")
            if not s.contains(q):
                # q stays invertible on every truncation: gcd certificate
                if any(math.gcd(q, p**8) != 1 for p in s.up_to(30)):
                    failures.append(f"invertibility certificate failed at {q}")
    return _record("balmer.closed-forms", failures, cases)


def check_separation(ctx: VerifyContext) -> CheckRecord:
    rng = ctx.rng("separation")
    failures = []
    n = max(ctx.cases // 2, 200)
    for _ in range(n):
        v = randgen.random_spcl(rng)
        x = randgen.random_graded(rng)
        sx = balmer.supp_object(x)
        g = balmer.supp_object(kunneth(balmer.gamma_v(v).value, x))
        l = balmer.supp_object(kunneth(balmer.l_v(v).value, x))
        if g != sx.intersect(v.point_set()):
            failures.append(f"gamma separation failed: V={v}, X={x}")
        if l != sx.intersect(v.complement()):
            failures.append(f"l separation failed: V={v}, X={x}")
    return _record("balmer.separation", failures, 2 * n)


def check_zero_detection(ctx: VerifyContext) -> CheckRecord:
    rng = ctx.rng("zero-detect")
    failures = []
    for _ in range(ctx.cases):
        x = randgen.random_engineered_graded(rng)
        if x.is_zero() != balmer.supp_object(x).is_empty():
            failures.append(f"zero detection failed on {x}")
    return _record("balmer.zero-detection", failures, ctx.cases)


def check_gamma_uniqueness(ctx: VerifyContext) -> CheckRecord:
    failures = []
    cases = 0
    for p in (2, 3, 5):
        others = [q for q in FIRST_TEN if q != p][:2]
        pairs = [
            (SpclSubset.closed_points(PrimeSet.of([p])), SpclSubset.empty()),
            (
                SpclSubset.closed_points(PrimeSet.of([p] + others)),
                SpclSubset.closed_points(PrimeSet.of(others)),
            ),
            (
                SpclSubset.closed_points(PrimeSet.cofinite(others)),
                SpclSubset.closed_points(PrimeSet.cofinite(others + [p])),
            ),
            (
                SpclSubset.closed_points(PrimeSet.all_primes()),
                SpclSubset.closed_points(PrimeSet.cofinite([p])),
            ),
        ]
        want = balmer.gamma_point(SpecZPoint.closed(p)).value
        for v, w in pairs:
            cases += 1
            got = kunneth(balmer.gamma_v(v).value, balmer.l_v(w).value)
            isolated = v.point_set().intersect(w.point_set().complement())
            if isolated != PointSet.singleton(SpecZPoint.closed(p)):
                failures.append(f"pair ({v}; {w}) does not isolate ({p})")
            elif got != want:
                failures.append(f"pair ({v}; {w}) gives {got}, expected {want}")
    cases += 1
    got = kunneth(
        balmer.gamma_v(SpclSubset.whole_space()).value,
        balmer.l_v(SpclSubset.closed_points(PrimeSet.all_primes())).value,
    )
    if got != balmer.gamma_point(GENERIC).value:
        failures.append("generic pair mismatch")
    return _record("balmer.gamma-uniqueness", failures, cases)


def check_triangle_subadditivity(ctx: VerifyContext) -> CheckRecord:
    rng = ctx.rng("triangles")
    failures = []
    n = ctx.cases // 3
    for _ in range(n):
        a, _ = randgen.random_complex(rng, max_cells=3)
        b, _ = randgen.random_complex(rng, max_cells=3)
        f = randgen.random_chain_map(rng, a, b)
        c = homalg.cone(f)
        sa = balmer.supp_object(homology(a))
        sb = balmer.supp_object(homology(b))
        sc = balmer.supp_object(homology(c))
        if not sc.leq(sa.union(sb)):
            failures.append(f"supp(cone) escapes union: {sc} vs {sa} u {sb}")
        if not sb.leq(sa.union(sc)):
            failures.append(f"supp(middle) escapes union: {sb} vs {sa} u {sc}")
    return _record("balmer.triangle-subadditivity", failures, 2 * n)


def check_sigma_tau(ctx: VerifyContext) -> CheckRecord:
    failures = []
    cases = 0
    first_six = FIRST_TEN[:6]
    for generic in (False, True):
        for r in range(len(first_six) + 1):
            for combo in combinations(first_six, r):
                for finite in (True, False):
                    w = PointSet(generic, PrimeSet.of(combo, finite=finite))
                    cases += 1
                    if balmer.sigma_of_tau(w) != w:
                        failures.append(f"sigma(tau(W)) != W at {w}")
    catalogue = randgen.compact_catalogue()
    rng = ctx.rng("sigma-tau")
    for _ in range(20):
        gens = rng.sample(catalogue, rng.randint(1, 4))
        code = balmer.sigma_loc([homology(g) for g in gens])
        for y in catalogue:
            cases += 1
            inside = balmer.supp_object(homology(y)).leq(code)
            if balmer.thick_membership(y, gens) != inside:
                failures.append("membership probe disagrees with subset code")
            if balmer.tau_loc(code, homology(y)) != inside:
                failures.append("tau membership disagrees with subset code")
    for x in [SpecZPoint.closed(p) for p in (2, 3, 5, 7)] + [GENERIC]:
        cases += 1
        prime = balmer.point_to_prime(x)
        if balmer.prime_to_point(prime.defining, ctx.primes_bound) != x:
            failures.append(f"phi-inverse of phi({x}) is not {x}")
    return _record("balmer.sigma-tau-roundtrips", failures, cases)


def check_residue(ctx: VerifyContext) -> CheckRecord:
    rng = ctx.rng("residue")
    failures = []
    cases = 0
    points = [SpecZPoint.closed(2), SpecZPoint.closed(3), GENERIC]
    n = max(ctx.cases // 2, 200)
    for i in range(n):
        x = points[i % 3]
        if rng.random() < 0.4:
            obj = kunneth(balmer.gamma_point(x).value, randgen.random_graded(rng))
        else:
            obj = randgen.random_graded(rng)
        rep = balmer.residue_check(x, obj)
        cases += len(rep.records)
        failures.extend(r.detail or r.name for r in rep.failures())
    return _record("balmer.residue-lemma", failures, cases)


def check_ltg(ctx: VerifyContext) -> CheckRecord:
    rng = ctx.rng("ltg")
    failures = []
    cases = 0
    for _ in range(ctx.cases // 5):
        x = randgen.random_engineered_graded(rng)
        rep = balmer.ltg_check(x)
        cases += len(rep.records)
        failures.extend(r.detail or r.name for r in rep.failures())
    return _record("balmer.local-to-global", failures, cases)


def check_localization_triangles(ctx: VerifyContext) -> CheckRecord:
    failures = []
    cases = 0
    subsets = [
        SpclSubset.whole_space(),
        SpclSubset.empty(),
        SpclSubset.closed_points(PrimeSet.of([2])),
        SpclSubset.closed_points(PrimeSet.of([2, 3, 7])),
        SpclSubset.closed_points(PrimeSet.cofinite([])),
        SpclSubset.closed_points(PrimeSet.cofinite([5])),
    ]
    for v in subsets:
        rep = balmer.localization_triangle_check(v)
        cases += len(rep.records)
        failures.extend(f"{v}: {r.name}" for r in rep.failures())
    return _record("balmer.localization-triangles", failures, cases)


def check_supp_agreement(ctx: VerifyContext) -> CheckRecord:
    rng = ctx.rng("supp-agree")
    failures = []
    cases = 0
    probe = [GENERIC] + [SpecZPoint.closed(p) for p in (2, 3, 5, 31)]
    for _ in range(ctx.cases):
        c, _ = randgen.random_complex(rng, max_cells=3)
        h = homology(c)
        supp = balmer.supp_object(h)
        hom_supp = PointSet.empty()
        for n in h.degrees():
            hom_supp = hom_supp.union(modcalc.supp_mod(h.module_in(n)))
        cases += 1
        if supp != hom_supp:
            failures.append(f"abstract vs homological support differ on {h}")
        for x in probe:
            cases += 1
            via_gamma = not kunneth(balmer.gamma_point(x).value, h).is_zero()
            via_stalk = any(
                not modcalc.localize_point(x, h.module_in(n)).is_zero()
                for n in h.degrees()
            )
            if via_gamma != supp.contains(x) or via_stalk != supp.contains(x):
                failures.append(f"pointwise probes disagree at {x} on {h}")
    return _record("balmer.supp-agreement", failures, cases)


# --- supportdata --------------------------------------------------------


def check_model5(ctx: VerifyContext) -> CheckRecord:
    failures = []
    cat = supportdata.five_object_model()
    primes = supportdata.enumerate_primes(cat)
    if len(primes) != 2:
        failures.append(f"expected 2 primes, got {len(primes)}")
    datum = supportdata.spc_support(cat)
    rep = supportdata.check_axioms(datum, cat)
    if not rep.passed:
        failures.append("axioms failed on the canonical datum")
    um = supportdata.universal_map(datum, cat)
    if not um.report.passed:
        failures.append("universal map verification failed")
    if any(um.apply(x) != x for x in datum.space.points):
        failures.append("universal map from the spectrum is not the identity")
    if not supportdata.classify(cat).passed:
        failures.append("classification bijection failed")
    return _record("supportdata.model5", failures, 5)


def check_random_catalogues(ctx: VerifyContext) -> CheckRecord:
    rng = ctx.rng("catalogues")
    failures = []
    cases = 0
    for _ in range(max(ctx.cases // 100, 3)):
        cat = supportdata.random_subset_catalogue(rng, rng.choice([6, 8, 12]))
        ideals = supportdata.enumerate_ideals(cat)
        primes = set(supportdata.enumerate_primes(cat))
        cases += 4
        if not primes:
            failures.append("spectrum of a random catalogue is empty")
        proper = [i for i in ideals if len(i) < cat.size]
        maximal = [
            i for i in proper if not any(i < j for j in proper)
        ]
        if any(m not in primes for m in maximal):
            failures.append("a maximal proper ideal is not prime")
        datum = supportdata.spc_support(cat)
        if not supportdata.check_axioms(datum, cat).passed:
            failures.append("axioms failed on a random catalogue")
        if not supportdata.classify(cat).passed:
            failures.append("classification failed on a random catalogue")
    return _record("supportdata.random-catalogues", failures, cases)


CHECKS = [
    check_primeset_bruteforce,
    check_spcl_lattice,
    check_point_functors,
    check_snf,
    check_homology_oracle,
    check_shift_homology,
    check_tensor_commutes,
    check_table_symmetry,
    check_kunneth_laws,
    check_kunneth_chain_oracle,
    check_supp_laws,
    check_idempotent_laws,
    check_closed_forms,
    check_separation,
    check_zero_detection,
    check_gamma_uniqueness,
    check_triangle_subadditivity,
    check_sigma_tau,
    check_residue,
    check_ltg,
    check_localization_triangles,
    check_supp_agreement,
    check_model5,
    check_random_catalogues,
]


def run_verify(seed: int, cases: int, primes_bound: int, workers: int = 1) -> Report:
    ctx = VerifyContext(seed, cases, primes_bound)
    if workers <= 1:
        records = [f(ctx) for f in CHECKS]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(lambda f: f(ctx), CHECKS))
    # case ids are registry positions; the merge is deterministic by sort
    indexed = sorted(
        (f"{i:02d}.{rec.name}", rec) for i, rec in enumerate(records)
    )
    return Report.of(
        CheckRecord(case_id, rec.passed, rec.detail) for case_id, rec in indexed
    )
