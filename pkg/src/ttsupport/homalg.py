"""Exact integer linear algebra and perfect complexes over Z.

Matrices carry arbitrary-precision integers; Smith normal form with
unimodular transforms is the engine behind every homology computation.
Complexes use the cohomological convention: the differential in degree n
maps C^n to C^{n+1}, and the shift moves degrees down, (shift C)^n = C^{n+1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from sympy import factorint

from .modcalc import Cyclic, GradedModule, Module
from .znum import PrimeSet

__all__ = [
    "IntMatrix",
    "SNFResult",
    "xgcd",
    "snf",
    "smith_factors",
    "determinant",
    "PerfectComplex",
    "ChainMap",
    "homology",
    "tensor_chain",
    "cone",
    "shift",
    "direct_sum",
    "unit_complex",
    "scalar_cone",
]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


@dataclass(frozen=True)
class IntMatrix:
    """Dense row-major integer matrix."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.entries) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.entries)}")
        for i, row in enumerate(self.entries):
            if len(row) != self.cols:
                raise ValueError(f"row {i} has {len(row)} entries, expected {self.cols}")

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        data = tuple(tuple(int(x) for x in row) for row in rows)
        ncols = len(data[0]) if data else 0
        return cls(len(data), ncols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries[ij[0]][ij[1]]

    def is_zero(self) -> bool:
        return all(all(x == 0 for x in row) for row in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.entries else ())

    def neg(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(tuple(-x for x in row) for row in self.entries))

    def add(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in add")
        return IntMatrix(
            self.rows,
            self.cols,
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)),
        )

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch in mul: {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        bt = list(zip(*other.entries)) if other.entries else [()] * other.cols
        out = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in bt) for row in self.entries
        )
        if not self.entries:
            out = ()
        return IntMatrix(self.rows, other.cols, out)

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(tuple(c * x for x in row) for row in self.entries))

    def kron(self, other: "IntMatrix") -> "IntMatrix":
        """Kronecker product; row-major on both index pairs."""
        rows = []
        for r1 in self.entries:
            for r2 in other.entries:
                rows.append(tuple(a * b for a in r1 for b in r2))
        return IntMatrix(self.rows * other.rows, self.cols * other.cols, tuple(rows))

    @classmethod
    def block(
        cls,
        grid: list[list["IntMatrix | None"]],
        row_dims: list[int],
        col_dims: list[int],
    ) -> "IntMatrix":
        """Assemble a block matrix; None blocks are zero."""
        total_r, total_c = sum(row_dims), sum(col_dims)
        data = [[0] * total_c for _ in range(total_r)]
        r0 = 0
        for bi, rdim in enumerate(row_dims):
            c0 = 0
            for bj, cdim in enumerate(col_dims):
                blk = grid[bi][bj]
                if blk is not None:
                    if (blk.rows, blk.cols) != (rdim, cdim):
                        raise ValueError(f"block ({bi},{bj}) has wrong shape")
                    for i in range(rdim):
                        row = blk.entries[i]
                        dest = data[r0 + i]
                        for j in range(cdim):
                            dest[c0 + j] = row[j]
                c0 += cdim
            r0 += rdim
        return cls(total_r, total_c, tuple(tuple(r) for r in data))

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.entries]

    @classmethod
    def from_json(cls, data: object, rows: int, cols: int, where: str = "matrix") -> "IntMatrix":
        if not isinstance(data, list):
            raise ValueError(f"{where}: expected a list of rows")
        if len(data) != rows:
            raise ValueError(f"{where}: expected {rows} rows, got {len(data)}")
        out = []
        for i, row in enumerate(data):
            if not isinstance(row, list) or len(row) != cols:
                raise ValueError(f"{where}[{i}]: expected a row of {cols} entries")
            try:
                out.append(tuple(int(x) for x in row))
            except (TypeError, ValueError):
                raise ValueError(f"{where}[{i}]: entries must be integers") from None
        return cls(rows, cols, tuple(out))


@dataclass(frozen=True)
class SNFResult:
    """Smith normal form data: u * m * v = d with u, v unimodular.

    The diagonal of d is the divisibility chain; invariant_factors lists its
    nonzero (positive) entries, each dividing the next.
    """

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix
    invariant_factors: tuple[int, ...]


def _swap_rows(m: list[list[int]], i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]


def _swap_cols(m: list[list[int]], i: int, j: int) -> None:
    for row in m:
        row[i], row[j] = row[j], row[i]


def _diagonalize(a: list[list[int]], track: bool) -> tuple[list[int], list[list[int]] | None, list[list[int]] | None]:
    """Reduce a in place to diagonal form with divisibility chain.

    Returns (diagonal, u, v); u and v are None when track is False.
    """
    nrows, ncols = len(a), len(a[0]) if a else 0
    u = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)] if track else None
    v = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)] if track else None

    def row_combine(i1: int, i2: int, col: int) -> None:
        # Zero a[i2][col] using a[i1][col]; keeps u in sync.
        p, q = a[i1][col], a[i2][col]
        if q == 0:
            return
        if p != 0 and q % p == 0:
            f = -(q // p)
            a[i2] = [x + f * y for x, y in zip(a[i2], a[i1])]
            if track:
                u[i2] = [x + f * y for x, y in zip(u[i2], u[i1])]
            return
        g, x, y = xgcd(p, q)
        pg, qg = p // g, q // g
        r1, r2 = a[i1], a[i2]
        a[i1] = [x * s + y * t for s, t in zip(r1, r2)]
        a[i2] = [-qg * s + pg * t for s, t in zip(r1, r2)]
        if track:
            s1, s2 = u[i1], u[i2]
            u[i1] = [x * s + y * t for s, t in zip(s1, s2)]
            u[i2] = [-qg * s + pg * t for s, t in zip(s1, s2)]

    def col_combine(j1: int, j2: int, row: int) -> None:
        p, q = a[row][j1], a[row][j2]
        if q == 0:
            return
        if p != 0 and q % p == 0:
            f = -(q // p)
            for r in a:
                r[j2] += f * r[j1]
            if track:
                for r in v:
                    r[j2] += f * r[j1]
            return
        g, x, y = xgcd(p, q)
        pg, qg = p // g, q // g
        for r in a:
            s, t = r[j1], r[j2]
            r[j1] = x * s + y * t
            r[j2] = -qg * s + pg * t
        if track:
            for r in v:
                s, t = r[j1], r[j2]
                r[j1] = x * s + y * t
                r[j2] = -qg * s + pg * t

    t = 0
    limit = min(nrows, ncols)
    while t < limit:
        # Minimal-absolute-value pivot keeps intermediate entries tame.
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        _swap_rows(a, t, best[0])
        if track:
            _swap_rows(u, t, best[0])
        _swap_cols(a, t, best[1])
        if track:
            _swap_cols(v, t, best[1])
        while True:
            for i in range(t + 1, nrows):
                row_combine(t, i, t)
            if any(a[t][j] for j in range(t + 1, ncols)):
                for j in range(t + 1, ncols):
                    col_combine(t, j, t)
                if any(a[i][t] for i in range(t + 1, nrows)):
                    continue
            # Pivot must divide the rest of the submatrix for the chain.
            pivot = a[t][t]
            bad = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if a[i][j] % pivot:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
            if track:
                u[t] = [x + y for x, y in zip(u[t], u[bad])]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if track:
                u[t] = [-x for x in u[t]]
        t += 1
    diag = [a[i][i] for i in range(limit)]
    return diag, u, v


def snf(m: IntMatrix) -> SNFResult:
    """Smith normal form with transforms: u*m*v = d, both unimodular."""
    a = [list(row) for row in m.entries]
    diag, u, v = _diagonalize(a, track=True)
    d = IntMatrix.of(a) if a else IntMatrix.zeros(m.rows, m.cols)
    if m.rows == 0 or m.cols == 0:
        d = IntMatrix.zeros(m.rows, m.cols)
    um = IntMatrix.of(u) if u else IntMatrix.identity(m.rows)
    vm = IntMatrix.of(v) if v else IntMatrix.identity(m.cols)
    if m.rows == 0:
        um = IntMatrix.identity(0)
    if m.cols == 0:
        vm = IntMatrix.identity(0)
    factors = tuple(x for x in diag if x != 0)
    result = SNFResult(um, d, vm, factors)
    if um.mul(m).mul(vm) != d:
        raise AssertionError("smith normal form internal check failed")
    return result


def smith_factors(m: IntMatrix) -> tuple[int, ...]:
    """Invariant factors only (no transforms); faster path for homology."""
    if m.rows == 0 or m.cols == 0:
        return ()
    a = [list(row) for row in m.entries]
    diag, _, _ = _diagonalize(a, track=False)
    return tuple(x for x in diag if x != 0)


def determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant needs a square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class PerfectComplex:
    """Bounded complex of finite-rank free Z-modules.

    ``ranks`` maps degree n to the rank of C^n; ``diffs`` maps n to the
    matrix of d^n : C^n -> C^{n+1}, of shape ranks[n+1] x ranks[n].
    d(n+1) . d(n) = 0 is validated at construction.
    """

    ranks: tuple[tuple[int, int], ...]
    diffs: tuple[tuple[int, IntMatrix], ...]

    @classmethod
    def of(
        cls,
        ranks: Mapping[int, int],
        differentials: Mapping[int, IntMatrix | Iterable[Iterable[int]]] | None = None,
    ) -> "PerfectComplex":
        rk = {int(n): int(r) for n, r in ranks.items() if int(r) != 0}
        for n, r in rk.items():
            if r < 0:
                raise ValueError(f"rank at degree {n} is negative")
        dd: dict[int, IntMatrix] = {}
        for n, mat in (differentials or {}).items():
            n = int(n)
            m = mat if isinstance(mat, IntMatrix) else IntMatrix.of(mat)
            want = (rk.get(n + 1, 0), rk.get(n, 0))
            if (m.rows, m.cols) != want:
                raise ValueError(
                    f"differential at degree {n} has shape {m.rows}x{m.cols}, expected {want[0]}x{want[1]}"
                )
            if not m.is_zero():
                dd[n] = m
        c = cls(tuple(sorted(rk.items())), tuple(sorted(dd.items())))
        for n in dd:
            if n + 1 in dd:
                if not dd[n + 1].mul(dd[n]).is_zero():
                    raise ValueError(f"d twice is nonzero between degrees {n} and {n + 2}")
        return c

    @property
    def lo(self) -> int:
        return self.ranks[0][0] if self.ranks else 0

    @property
    def hi(self) -> int:
        return self.ranks[-1][0] if self.ranks else 0

    def rank(self, n: int) -> int:
        return dict(self.ranks).get(n, 0)

    def differential(self, n: int) -> IntMatrix:
        d = dict(self.diffs).get(n)
        if d is not None:
            return d
        return IntMatrix.zeros(self.rank(n + 1), self.rank(n))

    def degrees(self) -> list[int]:
        return [n for n, _ in self.ranks]

    def total_rank(self) -> int:
        return sum(r for _, r in self.ranks)

    def is_zero(self) -> bool:
        return not self.ranks

    def to_json(self) -> dict:
        return {
            "ranks": {str(n): r for n, r in self.ranks},
            "differentials": {str(n): m.to_json() for n, m in self.diffs},
        }

    @classmethod
    def from_json(cls, data: object, where: str = "complex") -> "PerfectComplex":
        if not isinstance(data, dict) or "ranks" not in data:
            raise ValueError(f"{where}: expected an object with 'ranks'")
        raw_ranks = data["ranks"]
        if not isinstance(raw_ranks, dict):
            raise ValueError(f"{where}.ranks: expected an object")
        ranks = {}
        for key, val in raw_ranks.items():
            try:
                ranks[int(key)] = int(val)
            except (TypeError, ValueError):
                raise ValueError(f"{where}.ranks.{key}: bad degree or rank") from None
        diffs = {}
        raw_diffs = data.get("differentials", {})
        if not isinstance(raw_diffs, dict):
            raise ValueError(f"{where}.differentials: expected an object")
        for key, val in raw_diffs.items():
            try:
                n = int(key)
            except ValueError:
                raise ValueError(f"{where}.differentials.{key}: bad degree key") from None
            diffs[n] = IntMatrix.from_json(
                val, ranks.get(n + 1, 0), ranks.get(n, 0), f"{where}.differentials.{key}"
            )
        try:
            return cls.of(ranks, diffs)
        except ValueError as exc:
            raise ValueError(f"{where}: {exc}") from None


@dataclass(frozen=True)
class ChainMap:
    """A degreewise map between perfect complexes commuting with d."""

    src: PerfectComplex
    dst: PerfectComplex
    components: tuple[tuple[int, IntMatrix], ...]

    @classmethod
    def of(
        cls,
        src: PerfectComplex,
        dst: PerfectComplex,
        maps: Mapping[int, IntMatrix | Iterable[Iterable[int]]],
    ) -> "ChainMap":
        comps: dict[int, IntMatrix] = {}
        for n, mat in maps.items():
            n = int(n)
            m = mat if isinstance(mat, IntMatrix) else IntMatrix.of(mat)
            want = (dst.rank(n), src.rank(n))
            if (m.rows, m.cols) != want:
                raise ValueError(f"component at degree {n} has shape {m.rows}x{m.cols}, expected {want}")
            if not m.is_zero():
                comps[n] = m
        f = cls(src, dst, tuple(sorted(comps.items())))
        degrees = set(src.degrees()) | set(dst.degrees())
        for n in sorted(degrees):
            lhs = dst.differential(n).mul(f.component(n))
            rhs = f.component(n + 1).mul(src.differential(n))
            if lhs != rhs:
                raise ValueError(f"not a chain map at degree {n}: d.f != f.d")
        return f

    def component(self, n: int) -> IntMatrix:
        c = dict(self.components).get(n)
        if c is not None:
            return c
        return IntMatrix.zeros(self.dst.rank(n), self.src.rank(n))


def unit_complex() -> PerfectComplex:
    """Z concentrated in degree 0 (the tensor unit)."""
    return PerfectComplex.of({0: 1})


def scalar_cone(n: int) -> PerfectComplex:
    """cone(Z --n--> Z); homology Z/n in degree 0 for |n| >= 2."""
    u = unit_complex()
    return cone(ChainMap.of(u, u, {0: [[n]]}))


def _torsion_cyclics(factor: int) -> list[Cyclic]:
    return [Cyclic.torsion(int(p), int(e)) for p, e in sorted(factorint(factor).items())]


def homology(c: PerfectComplex) -> GradedModule:
    """Cohomology of the complex, in the cyclic-module calculus.

    H^n = ker d^n / im d^{n-1}.  Over Z the image of d^{n-1} sits inside the
    kernel as a full sublattice plus torsion data, so the free rank is
    rank C^n - rank d^n - rank d^{n-1} and the torsion is read off the
    invariant factors of d^{n-1}.
    """
    factors: dict[int, tuple[int, ...]] = {}
    for n, _ in c.diffs:
        factors[n] = smith_factors(c.differential(n))
    graded: dict[int, Module] = {}
    for n, r in c.ranks:
        below = factors.get(n - 1, ())
        here = factors.get(n, ())
        free = r - len(here) - len(below)
        parts: list[Cyclic] = [Cyclic.free(PrimeSet.none())] * free
        for f in below:
            if f > 1:
                parts.extend(_torsion_cyclics(f))
        if parts:
            graded[n] = Module.of(parts)
    return GradedModule.of(graded)


def shift(c: PerfectComplex, k: int) -> PerfectComplex:
    """(shift^k C)^n = C^{n+k}, differential scaled by (-1)^k."""
    sign = -1 if k % 2 else 1
    ranks = {n - k: r for n, r in c.ranks}
    diffs = {n - k: (m if sign == 1 else m.neg()) for n, m in c.diffs}
    return PerfectComplex.of(ranks, diffs)


def tensor_chain(a: PerfectComplex, b: PerfectComplex) -> PerfectComplex:
    """Total tensor complex with the Koszul sign.

    (A x B)^n = sum over i+j=n of A^i x B^j, ordered by increasing i, bases
    row-major; the differential is dA x 1 + (-1)^i 1 x dB on the (i, j) block.
    """
    if a.is_zero() or b.is_zero():
        return PerfectComplex.of({})

    def blocks(n: int) -> list[tuple[int, int, int, int]]:
        out = []
        for i, ra in a.ranks:
            rb = b.rank(n - i)
            if rb:
                out.append((i, n - i, ra, rb))
        return out

    lo, hi = a.lo + b.lo, a.hi + b.hi
    ranks = {}
    for n in range(lo, hi + 1):
        ranks[n] = sum(ra * rb for _, _, ra, rb in blocks(n))
    diffs = {}
    for n in range(lo, hi):
        src = blocks(n)
        dst = blocks(n + 1)
        if not src or not dst:
            continue
        dst_pos = {(i, j): bi for bi, (i, j, _, _) in enumerate(dst)}
        grid: list[list[IntMatrix | None]] = [[None] * len(src) for _ in dst]
        for sj, (i, j, ra, rb) in enumerate(src):
            da = a.differential(i)
            if not da.is_zero() and (i + 1, j) in dst_pos:
                grid[dst_pos[(i + 1, j)]][sj] = da.kron(IntMatrix.identity(rb))
            db = b.differential(j)
            if not db.is_zero() and (i, j + 1) in dst_pos:
                m = IntMatrix.identity(ra).kron(db)
                grid[dst_pos[(i, j + 1)]][sj] = m if i % 2 == 0 else m.neg()
        diffs[n] = IntMatrix.block(
            grid, [ra * rb for _, _, ra, rb in dst], [ra * rb for _, _, ra, rb in src]
        )
    return PerfectComplex.of(ranks, diffs)


def direct_sum(a: PerfectComplex, b: PerfectComplex) -> PerfectComplex:
    """Degreewise direct sum, block-diagonal differential."""
    degrees = sorted(set(a.degrees()) | set(b.degrees()))
    ranks = {n: a.rank(n) + b.rank(n) for n in degrees}
    diffs = {}
    for n in degrees:
        da, db = a.differential(n), b.differential(n)
        if da.is_zero() and db.is_zero():
            continue
        diffs[n] = IntMatrix.block(
            [[da, None], [None, db]], [da.rows, db.rows], [da.cols, db.cols]
        )
    return PerfectComplex.of(ranks, diffs)


def cone(f: ChainMap) -> PerfectComplex:
    """Mapping cone: cone(f)^n = A^{n+1} + B^n, d = [[-dA, 0], [f, dB]].

    A -> B -> cone(f) -> shift(A) is then a distinguished triangle.
    """
    a, b = f.src, f.dst
    degrees = sorted(set(n - 1 for n in a.degrees()) | set(b.degrees()))
    ranks = {n: a.rank(n + 1) + b.rank(n) for n in degrees}
    diffs = {}
    for n in degrees:
        ra1, rb = a.rank(n + 1), b.rank(n)
        ra2, rb1 = a.rank(n + 2), b.rank(n + 1)
        if ra2 + rb1 == 0 or ra1 + rb == 0:
            continue
        grid = [
            [a.differential(n + 1).neg(), None],
            [f.component(n + 1), b.differential(n)],
        ]
        diffs[n] = IntMatrix.block(grid, [ra2, rb1], [ra1, rb])
    return PerfectComplex.of(ranks, diffs)
