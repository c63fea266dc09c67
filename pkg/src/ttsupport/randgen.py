"""Seeded generators of random test data for the verification suites.

Random perfect complexes are built as direct sums of elementary cells
(free summands and two-term multiplication cells) mixed by unimodular basis
shears, so their homology is known by construction; random chain maps are
sampled from the integer solution lattice of the chain-map equations.
Everything is driven by an explicit ``random.Random`` so runs reproduce
byte for byte.
"""

from __future__ import annotations

import random
from typing import Sequence

from .homalg import ChainMap, IntMatrix, PerfectComplex, snf
from .modcalc import Cyclic, GradedModule, Module, kunneth
from .znum import PrimeSet, SpclSubset

SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)

__all__ = [
    "SMALL_PRIMES",
    "random_primeset",
    "random_spcl",
    "random_cyclic",
    "random_module",
    "random_graded",
    "random_engineered_graded",
    "random_complex",
    "random_chain_map",
    "compact_catalogue",
]


def random_primeset(rng: random.Random, pool: Sequence[int] = SMALL_PRIMES, max_len: int = 3) -> PrimeSet:
    n = rng.randint(0, max_len)
    picked = rng.sample(list(pool), min(n, len(pool)))
    return PrimeSet.of(picked, finite=rng.random() < 0.5)


def random_spcl(rng: random.Random, pool: Sequence[int] = SMALL_PRIMES) -> SpclSubset:
    if rng.random() < 0.15:
        return SpclSubset.whole_space()
    return SpclSubset.closed_points(random_primeset(rng, pool))


def random_cyclic(rng: random.Random, pool: Sequence[int] = SMALL_PRIMES) -> Cyclic:
    roll = rng.random()
    if roll < 0.34:
        return Cyclic.free(random_primeset(rng, pool))
    if roll < 0.72:
        return Cyclic.torsion(rng.choice(list(pool)), rng.randint(1, 4))
    fam = random_primeset(rng, pool)
    if fam.is_empty():
        fam = PrimeSet.of([rng.choice(list(pool))])
    return Cyclic.prufer(fam)


def random_module(rng: random.Random, max_parts: int = 3) -> Module:
    return Module.of(
        (random_cyclic(rng), rng.randint(1, 2)) for _ in range(rng.randint(0, max_parts))
    )


def random_graded(rng: random.Random, max_degrees: int = 3) -> GradedModule:
    degrees = rng.sample(range(-3, 4), rng.randint(0, max_degrees))
    return GradedModule.of({n: random_module(rng) for n in degrees})


def random_engineered_graded(rng: random.Random) -> GradedModule:
    """Objects produced by computations that often collapse to zero:
    tensors of blocks with disjoint loci, fully localised torsion, and the
    acyclisation/localisation product for one subset."""
    roll = rng.random()
    if roll < 0.15:
        p, q = rng.sample(list(SMALL_PRIMES), 2)
        return kunneth(
            GradedModule.of({rng.randint(-2, 2): [Cyclic.torsion(p, rng.randint(1, 3))]}),
            GradedModule.of({rng.randint(-2, 2): [Cyclic.torsion(q, rng.randint(1, 3))]}),
        )
    if roll < 0.3:
        from .balmer import gamma_v, l_v

        v = random_spcl(rng)
        return kunneth(gamma_v(v).value, l_v(v).value)
    if roll < 0.4:
        s = random_primeset(rng)
        x = GradedModule.of({0: [Cyclic.prufer(s)]} if not s.is_empty() else {})
        return kunneth(x, GradedModule.of({0: [Cyclic.rationals()]}))
    return random_graded(rng)


def _primary_parts(m: int) -> list[Cyclic]:
    out = []
    m = abs(m)
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append(Cyclic.torsion(p, e))
        p += 1
    if m > 1:
        out.append(Cyclic.torsion(m, 1))
    return out


def random_complex(
    rng: random.Random,
    max_cells: int = 4,
    max_rank: int = 4,
    entry_bound: int = 9,
    degree_span: tuple[int, int] = (-2, 2),
    shears: int = 3,
) -> tuple[PerfectComplex, GradedModule]:
    """A bounded complex with known homology.

    Returns the complex and its homology (computed from the cell structure,
    independently of any Smith-form machinery).
    """
    lo, hi = degree_span
    for _ in range(64):
        ranks: dict[int, int] = {}
        cells = []  # ("free", d) or ("mult", d, m)
        for _ in range(rng.randint(1, max_cells)):
            if rng.random() < 0.35:
                d = rng.randint(lo, hi)
                if ranks.get(d, 0) >= max_rank:
                    continue
                cells.append(("free", d, 0))
                ranks[d] = ranks.get(d, 0) + 1
            else:
                d = rng.randint(lo, hi - 1)
                if ranks.get(d, 0) >= max_rank or ranks.get(d + 1, 0) >= max_rank:
                    continue
                m = rng.choice([x for x in range(-entry_bound, entry_bound + 1) if x != 0])
                cells.append(("mult", d, m))
                ranks[d] = ranks.get(d, 0) + 1
                ranks[d + 1] = ranks.get(d + 1, 0) + 1
        if not cells:
            continue
        # Slot layout: positions per degree in cell order.
        counters = {d: 0 for d in ranks}
        diffs = {
            d: [[0] * ranks[d] for _ in range(ranks.get(d + 1, 0))]
            for d in ranks
            if ranks.get(d + 1, 0)
        }
        homology_parts: dict[int, list[Cyclic]] = {}
        for kind, d, m in cells:
            if kind == "free":
                counters[d] += 1
                homology_parts.setdefault(d, []).append(Cyclic.free(PrimeSet.none()))
            else:
                src = counters[d]
                dst = counters[d + 1]
                counters[d] += 1
                counters[d + 1] += 1
                diffs[d][dst][src] = m
                if abs(m) >= 2:
                    homology_parts.setdefault(d + 1, []).extend(_primary_parts(m))
        mats = {d: [row[:] for row in rows] for d, rows in diffs.items()}
        ok = True
        for _ in range(rng.randint(0, shears)):
            d = rng.choice(list(ranks))
            r = ranks[d]
            if r < 2:
                continue
            i, j = rng.sample(range(r), 2)
            s = rng.choice([-2, -1, 1, 2])
            # basis change at degree d: columns of d^d, rows of d^{d-1}
            if d in mats:
                for row in mats[d]:
                    row[j] += s * row[i]
            if d - 1 in mats:
                rows = mats[d - 1]
                rows[i] = [x - s * y for x, y in zip(rows[i], rows[j])]
        for rows in mats.values():
            if any(abs(x) > entry_bound for row in rows for x in row):
                ok = False
                break
        if not ok:
            continue
        complex_ = PerfectComplex.of(ranks, {d: m for d, m in mats.items()})
        expected = GradedModule.of({d: Module.of(parts) for d, parts in homology_parts.items()})
        return complex_, expected
    raise RuntimeError("failed to sample a complex within the entry bound")


def random_chain_map(rng: random.Random, a: PerfectComplex, b: PerfectComplex) -> ChainMap:
    """A random integer chain map a -> b, sampled from the solution lattice
    of the commutation equations via Smith normal form."""
    degrees = sorted(set(a.degrees()) | set(b.degrees()))
    layout = []  # (degree, rows, cols, offset)
    offset = 0
    for n in degrees:
        r, c = b.rank(n), a.rank(n)
        if r and c:
            layout.append((n, r, c, offset))
            offset += r * c
    nvars = offset
    if nvars == 0:
        return ChainMap.of(a, b, {})
    pos = {n: (r, c, off) for n, r, c, off in layout}
    rows: list[list[int]] = []
    for n in degrees:
        # d_B^n . f_n - f_{n+1} . d_A^n = 0, one row per target entry
        db, da = b.differential(n), a.differential(n)
        tr, tc = b.rank(n + 1), a.rank(n)
        if tr == 0 or tc == 0:
            continue
        for i in range(tr):
            for j in range(tc):
                row = [0] * nvars
                touched = False
                if n in pos:
                    r, c, off = pos[n]
                    for k in range(r):
                        if db[i, k]:
                            row[off + k * c + j] += db[i, k]
                            touched = True
                if n + 1 in pos:
                    r, c, off = pos[n + 1]
                    for k in range(c):
                        if da[k, j]:
                            row[off + i * c + k] -= da[k, j]
                            touched = True
                if touched:
                    rows.append(row)
    if not rows:
        sol = [rng.randint(-2, 2) for _ in range(nvars)]
    else:
        m = IntMatrix.of(rows)
        res = snf(m)
        rank = len(res.invariant_factors)
        basis = [
            [res.v[i, j] for i in range(nvars)] for j in range(rank, nvars)
        ]
        sol = [0] * nvars
        for vec in basis:
            coeff = rng.randint(-2, 2)
            if coeff:
                sol = [x + coeff * y for x, y in zip(sol, vec)]
    maps = {}
    for n, r, c, off in layout:
        maps[n] = [[sol[off + i * c + j] for j in range(c)] for i in range(r)]
    return ChainMap.of(a, b, maps)


def compact_catalogue() -> list[PerfectComplex]:
    """Twenty perfect complexes with varied supports, for membership probes."""
    from .homalg import direct_sum, scalar_cone, shift, unit_complex

    u = unit_complex()
    out = [
        u,
        shift(u, 1),
        shift(u, -2),
        scalar_cone(2),
        scalar_cone(3),
        scalar_cone(4),
        scalar_cone(5),
        scalar_cone(6),
        scalar_cone(9),
        scalar_cone(30),
        shift(scalar_cone(2), 2),
        shift(scalar_cone(7), -1),
        direct_sum(scalar_cone(2), scalar_cone(3)),
        direct_sum(scalar_cone(4), shift(scalar_cone(2), 1)),
        direct_sum(u, scalar_cone(5)),
        direct_sum(scalar_cone(7), scalar_cone(11)),
        scalar_cone(13),
        direct_sum(shift(u, 1), scalar_cone(6)),
        direct_sum(scalar_cone(25), scalar_cone(2)),
        PerfectComplex.of({}),
    ]
    assert len(out) == 20
    return out
