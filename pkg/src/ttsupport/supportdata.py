"""Finite abstract tensor-triangulated models and their spectra.

A catalogue is a finite multiplication table with a shift permutation,
a summand relation and a rotation-closed triangle list.  Prime thick
tensor-ideals are found by exhaustive subset enumeration (growing from the
closure of zero), the support datum they induce is checked against the five
support axioms, and the terminal-datum map and the ideal/subset lattice
bijection are verified by brute force.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .report import CheckRecord, Report, check

__all__ = [
    "CatalogueError",
    "Catalogue",
    "FiniteSpace",
    "SupportDatum",
    "enumerate_ideals",
    "enumerate_primes",
    "spc_support",
    "check_axioms",
    "universal_map",
    "thomason_lattice",
    "classify",
    "five_object_model",
    "random_subset_catalogue",
]

MAX_OBJECTS = 24


class CatalogueError(ValueError):
    pass


@dataclass(frozen=True)
class Catalogue:
    """Finite model: object names, unit/zero, shift, tensor table,
    summand relation, triangles (closed under rotation (k,l,m) -> (l,m,Sk))."""

    objects: tuple[str, ...]
    zero: int
    unit: int
    shift: tuple[int, ...]
    tensor: tuple[tuple[int, ...], ...]
    summands: frozenset[tuple[int, int]]
    triangles: frozenset[tuple[int, int, int]]

    @classmethod
    def of(
        cls,
        objects: Sequence[str],
        zero: str,
        unit: str,
        tensor: Mapping[str, Mapping[str, str]],
        shift: Mapping[str, str] | None = None,
        summands: Iterable[tuple[str, str]] = (),
        triangles: Iterable[tuple[str, str, str]] = (),
    ) -> "Catalogue":
        names = tuple(objects)
        if len(set(names)) != len(names):
            raise CatalogueError("objects: duplicate names")
        if len(names) > MAX_OBJECTS:
            raise CatalogueError(f"objects: {len(names)} exceeds the bound {MAX_OBJECTS}")
        index = {name: i for i, name in enumerate(names)}

        def look(name: str, where: str) -> int:
            if name not in index:
                raise CatalogueError(f"{where}: unknown object {name!r}")
            return index[name]

        z = look(zero, "zero")
        u = look(unit, "unit")
        n = len(names)
        shift_map = list(range(n))
        if shift is not None:
            for a, b in shift.items():
                shift_map[look(a, "shift")] = look(b, f"shift.{a}")
        table = [[0] * n for _ in range(n)]
        for a in names:
            row = tensor.get(a)
            if row is None:
                raise CatalogueError(f"tensor: missing row for {a!r}")
            for b in names:
                if b not in row:
                    raise CatalogueError(f"tensor.{a}: missing entry for {b!r}")
                table[index[a]][index[b]] = look(row[b], f"tensor.{a}.{b}")
        sm = frozenset(
            (look(a, "summands"), look(b, "summands")) for a, b in summands
        )
        # Close the triangle list under rotation; the rotation is forced by
        # the shift table so listing one representative is enough.
        tri: set[tuple[int, int, int]] = set()
        for a, b, c in triangles:
            t = (look(a, "triangles"), look(b, "triangles"), look(c, "triangles"))
            for _ in range(3 * n):
                if t in tri:
                    break
                tri.add(t)
                t = (t[1], t[2], shift_map[t[0]])
        cat = cls(names, z, u, tuple(shift_map), tuple(map(tuple, table)), sm, frozenset(tri))
        cat.validate()
        return cat

    def validate(self) -> None:
        n = len(self.objects)
        if sorted(self.shift) != list(range(n)):
            raise CatalogueError("shift: not a permutation")
        if self.shift[self.zero] != self.zero:
            raise CatalogueError("shift: must fix zero")
        t = self.tensor
        for i in range(n):
            if t[self.unit][i] != i or t[i][self.unit] != i:
                raise CatalogueError(f"tensor: unit not neutral at {self.objects[i]}")
            if t[self.zero][i] != self.zero or t[i][self.zero] != self.zero:
                raise CatalogueError(f"tensor: zero not absorbing at {self.objects[i]}")
            for j in range(n):
                if t[i][j] != t[j][i]:
                    raise CatalogueError(
                        f"tensor: not commutative at ({self.objects[i]}, {self.objects[j]})"
                    )
        for i in range(n):
            for j in range(n):
                tij = t[i][j]
                for k in range(n):
                    if t[tij][k] != t[i][t[j][k]]:
                        raise CatalogueError(
                            "tensor: not associative at "
                            f"({self.objects[i]}, {self.objects[j]}, {self.objects[k]})"
                        )
        for a, b, c in self.triangles:
            if (b, c, self.shift[a]) not in self.triangles:
                raise CatalogueError(
                    f"triangles: rotation of ({self.objects[a]}, {self.objects[b]}, "
                    f"{self.objects[c]}) is missing"
                )

    @property
    def size(self) -> int:
        return len(self.objects)

    def names_of(self, subset: frozenset[int]) -> tuple[str, ...]:
        return tuple(self.objects[i] for i in sorted(subset))

    def to_json(self) -> dict:
        return {
            "objects": list(self.objects),
            "zero": self.objects[self.zero],
            "unit": self.objects[self.unit],
            "shift": {self.objects[i]: self.objects[s] for i, s in enumerate(self.shift)},
            "tensor": {
                self.objects[i]: {
                    self.objects[j]: self.objects[self.tensor[i][j]] for j in range(self.size)
                }
                for i in range(self.size)
            },
            "summands": sorted([self.objects[a], self.objects[b]] for a, b in self.summands),
            "triangles": sorted(
                [self.objects[a], self.objects[b], self.objects[c]]
                for a, b, c in self.triangles
            ),
        }

    @classmethod
    def from_json(cls, data: object, where: str = "catalogue") -> "Catalogue":
        if not isinstance(data, dict):
            raise CatalogueError(f"{where}: expected an object")
        for key in ("objects", "zero", "unit", "tensor"):
            if key not in data:
                raise CatalogueError(f"{where}.{key}: missing")
        try:
            return cls.of(
                data["objects"],
                data["zero"],
                data["unit"],
                data["tensor"],
                data.get("shift"),
                [tuple(p) for p in data.get("summands", [])],
                [tuple(t) for t in data.get("triangles", [])],
            )
        except (TypeError, KeyError) as exc:
            raise CatalogueError(f"{where}: malformed table ({exc})") from None
        except CatalogueError as exc:
            raise CatalogueError(f"{where}.{exc}") from None


@dataclass(frozen=True)
class FiniteSpace:
    """Finite space given by its specialisation order: leq(x, y) holds when
    y lies in the closure of x."""

    points: tuple
    order: frozenset[tuple]

    @classmethod
    def of(cls, points: Sequence, order: Iterable[tuple]) -> "FiniteSpace":
        pts = tuple(points)
        rel = set(order)
        for x in pts:
            rel.add((x, x))
        for x, y in rel:
            if x not in pts or y not in pts:
                raise ValueError(f"order: unknown point in pair ({x}, {y})")
        for x, y in rel:
            if x != y and (y, x) in rel:
                raise ValueError(f"order: not antisymmetric at ({x}, {y})")
        for x, y in list(rel):
            for y2, z in list(rel):
                if y == y2 and (x, z) not in rel:
                    raise ValueError(f"order: not transitive at ({x}, {y}, {z})")
        return cls(pts, frozenset(rel))

    def leq(self, x, y) -> bool:
        return (x, y) in self.order

    def specialisations(self, x) -> set:
        return {y for y in self.points if self.leq(x, y)}

    def is_spcl_closed(self, subset: frozenset) -> bool:
        return all(self.leq(x, y) <= (y in subset) for x in subset for y in self.points)


@dataclass(frozen=True)
class SupportDatum:
    """A space together with a specialisation-closed subset for each object."""

    space: FiniteSpace
    sigma: tuple[frozenset, ...]

    @classmethod
    def of(cls, space: FiniteSpace, sigma: Sequence[Iterable]) -> "SupportDatum":
        values = tuple(frozenset(s) for s in sigma)
        for i, s in enumerate(values):
            for x in s:
                if x not in space.points:
                    raise ValueError(f"sigma[{i}]: {x} is not a point of the space")
            if not space.is_spcl_closed(s):
                raise ValueError(f"sigma[{i}]: value is not specialisation closed")
        return cls(space, values)


def _closure_mask(c: Catalogue, mask: int) -> int:
    """Close a subset under zero, shift, summands, rotationally-closed
    triangles (two out of three) and tensoring; used for pruning."""
    mask |= 1 << c.zero
    changed = True
    while changed:
        changed = False
        new = mask
        for i in range(c.size):
            if new >> i & 1:
                new |= 1 << c.shift[i]
        for a, b in c.summands:
            if new >> a & 1:
                new |= 1 << b
        for a, b, t in c.triangles:
            if (new >> a & 1) and (new >> b & 1):
                new |= 1 << t
        for l in range(c.size):
            if new >> l & 1:
                for k in range(c.size):
                    new |= 1 << c.tensor[k][l]
        if new != mask:
            mask = new
            changed = True
    return mask


def _is_ideal_mask(c: Catalogue, mask: int, row_mask: list[int], shift_fwd: list[int]) -> bool:
    if not mask >> c.zero & 1:
        return False
    m = mask
    for i in range(c.size):
        if m >> i & 1:
            if not m >> shift_fwd[i] & 1:
                return False
            if row_mask[i] & ~m:
                return False
    for a, b in c.summands:
        if (m >> a & 1) and not (m >> b & 1):
            return False
    for a, b, t in c.triangles:
        if (m >> a & 1) and (m >> b & 1) and not (m >> t & 1):
            return False
    return True


def enumerate_ideals(c: Catalogue) -> list[frozenset[int]]:
    """All thick tensor-ideals, by exhaustive scan over supersets of the
    closure of {zero}."""
    if c.size > MAX_OBJECTS:
        raise CatalogueError(f"catalogue size {c.size} exceeds bound {MAX_OBJECTS}")
    base = _closure_mask(c, 0)
    free_bits = [i for i in range(c.size) if not base >> i & 1]
    row_mask = [0] * c.size
    for l in range(c.size):
        acc = 0
        for k in range(c.size):
            acc |= 1 << c.tensor[k][l]
        row_mask[l] = acc
    shift_fwd = list(c.shift)
    found = []
    for combo in range(1 << len(free_bits)):
        mask = base
        for bit, i in enumerate(free_bits):
            if combo >> bit & 1:
                mask |= 1 << i
        if _is_ideal_mask(c, mask, row_mask, shift_fwd):
            found.append(frozenset(i for i in range(c.size) if mask >> i & 1))
    found.sort(key=lambda s: (len(s), sorted(s)))
    return found


def _is_prime(c: Catalogue, ideal: frozenset[int]) -> bool:
    if len(ideal) == c.size:
        return False
    for k in range(c.size):
        if k in ideal:
            continue
        for l in range(c.size):
            if l in ideal:
                continue
            if c.tensor[k][l] in ideal:
                return False
    return True


def enumerate_primes(c: Catalogue) -> list[frozenset[int]]:
    return [p for p in enumerate_ideals(c) if _is_prime(c, p)]


def spc_support(c: Catalogue) -> SupportDatum:
    """The spectrum with its universal support: points are the primes,
    specialisation is reverse inclusion, and an object is supported at the
    primes that omit it."""
    primes = enumerate_primes(c)
    order = [(p, q) for p in primes for q in primes if q <= p]
    space = FiniteSpace.of(primes, order)
    sigma = [frozenset(p for p in primes if i not in p) for i in range(c.size)]
    return SupportDatum.of(space, sigma)


def check_axioms(d: SupportDatum, c: Catalogue) -> Report:
    """The five support axioms, read off the catalogue tables.

    Sums are encoded by the summand relation (each summand supported inside
    its sum) together with the triangle containments, which give the reverse
    inclusion for listed split triangles.
    """
    s = d.sigma
    everything = frozenset(d.space.points)
    records = [
        check("axiom.a.unit", s[c.unit] == everything, set(s[c.unit]), set(everything)),
        check("axiom.a.zero", s[c.zero] == frozenset(), set(s[c.zero]), set()),
    ]
    bad = [
        (a, b)
        for a, b in sorted(c.summands)
        if not s[b] <= s[a]
    ]
    records.append(
        check(
            "axiom.b.summands",
            not bad,
            "; ".join(f"{c.objects[a]} !>= {c.objects[b]}" for a, b in bad),
            "containment",
        )
    )
    bad = [i for i in range(c.size) if s[c.shift[i]] != s[i]]
    records.append(
        check(
            "axiom.c.shift",
            not bad,
            ", ".join(c.objects[i] for i in bad),
            "shift-invariance",
        )
    )
    bad_tri = [
        (a, b, t)
        for a, b, t in sorted(c.triangles)
        if not s[b] <= (s[a] | s[t])
    ]
    records.append(
        check(
            "axiom.d.triangles",
            not bad_tri,
            "; ".join(
                f"({c.objects[a]},{c.objects[b]},{c.objects[t]})" for a, b, t in bad_tri
            ),
            "subadditivity",
        )
    )
    bad_pairs = [
        (i, j)
        for i in range(c.size)
        for j in range(c.size)
        if s[c.tensor[i][j]] != (s[i] & s[j])
    ]
    records.append(
        check(
            "axiom.e.tensor",
            not bad_pairs,
            "; ".join(f"({c.objects[i]},{c.objects[j]})" for i, j in bad_pairs[:4]),
            "intersection",
        )
    )
    advisory = [
        c.objects[i]
        for i in range(c.size)
        if i != c.zero and not s[i]
    ]
    records.append(
        CheckRecord(
            "advisory.empty-support-nonzero",
            not advisory,
            f"nonzero objects with empty support: {', '.join(advisory)}" if advisory else "",
            advisory=True,
        )
    )
    return Report.of(records)


def point_label(x, c: Catalogue) -> str:
    """Readable name for a point of a support datum's space; prime ideals
    are shown by their member objects."""
    if isinstance(x, frozenset):
        return "{" + ", ".join(c.names_of(x)) + "}"
    return str(x)


@dataclass(frozen=True)
class UniversalMapResult:
    mapping: tuple[tuple[object, frozenset[int]], ...]
    report: Report

    def apply(self, x) -> frozenset[int]:
        return dict(self.mapping)[x]


def universal_map(d: SupportDatum, c: Catalogue, uniqueness_limit: int = 2_000_000) -> UniversalMapResult:
    """The canonical comparison with the spectrum: x goes to the objects not
    supported at x.  Verifies the image is prime, the support identity, and
    (by exhaustive search at desk scale) that no other map satisfies it."""
    primes = enumerate_primes(c)
    prime_set = set(primes)
    records = []
    mapping = []
    spc = spc_support(c)
    supp = spc.sigma
    for x in d.space.points:
        fx = frozenset(i for i in range(c.size) if x not in d.sigma[i])
        mapping.append((x, fx))
        records.append(
            check(
                f"universal.prime[{point_label(x, c)}]",
                fx in prime_set,
                sorted(c.objects[i] for i in fx),
                "a prime of the catalogue",
            )
        )
    fdict = dict(mapping)
    for i in range(c.size):
        preimage = frozenset(x for x in d.space.points if fdict[x] in supp[i])
        records.append(
            check(
                f"universal.support-identity[{c.objects[i]}]",
                preimage == d.sigma[i],
                set(preimage),
                set(d.sigma[i]),
            )
        )
    npts = len(d.space.points)
    total = len(primes) ** npts if primes else 0
    if 0 < total <= uniqueness_limit:
        solutions = 0
        match = True
        stack = [dict()]
        points = list(d.space.points)

        def consistent(g: dict) -> bool:
            for i in range(c.size):
                for x, gx in g.items():
                    if (gx in supp[i]) != (x in d.sigma[i]):
                        return False
            return True

        def search(idx: int, g: dict) -> None:
            nonlocal solutions, match
            if idx == npts:
                solutions += 1
                if any(g[x] != fdict[x] for x in points):
                    match = False
                return
            for p in primes:
                g[points[idx]] = p
                if consistent({points[idx]: p}):
                    search(idx + 1, g)
                del g[points[idx]]

        search(0, {})
        records.append(
            check("universal.unique", solutions == 1 and match, solutions, 1)
        )
    else:
        records.append(check("universal.unique(skipped: beyond desk scale)", True))
    return UniversalMapResult(tuple(mapping), Report.of(records))


def thomason_lattice(s: FiniteSpace) -> list[frozenset]:
    """All specialisation-closed subsets of a finite space."""
    pts = list(s.points)
    out = []
    for combo in range(1 << len(pts)):
        subset = frozenset(p for i, p in enumerate(pts) if combo >> i & 1)
        if s.is_spcl_closed(subset):
            out.append(subset)
    out.sort(key=lambda x: (len(x), sorted(map(repr, x))))
    return out


def classify(c: Catalogue) -> Report:
    """Verify the lattice bijection between thick tensor-ideals and
    specialisation-closed subsets of the spectrum."""
    ideals = enumerate_ideals(c)
    datum = spc_support(c)
    subsets = thomason_lattice(datum.space)
    supp = datum.sigma

    def sigma_of(ideal: frozenset[int]) -> frozenset:
        out: frozenset = frozenset()
        for i in ideal:
            out |= supp[i]
        return out

    def tau_of(subset: frozenset) -> frozenset[int]:
        return frozenset(i for i in range(c.size) if supp[i] <= subset)

    records = [
        check("classify.counts", len(ideals) == len(subsets), len(ideals), len(subsets)),
    ]
    bad = [i for i in ideals if tau_of(sigma_of(i)) != i]
    records.append(
        check(
            "classify.tau-sigma-identity",
            not bad,
            [sorted(c.objects[k] for k in b) for b in bad[:3]],
            "every ideal hit",
        )
    )
    bad_sub = [v for v in subsets if sigma_of(tau_of(v)) != v]
    records.append(
        check(
            "classify.sigma-tau-identity",
            not bad_sub,
            [sorted(map(repr, b)) for b in bad_sub[:3]],
            "every subset hit",
        )
    )
    image = {sigma_of(i) for i in ideals}
    records.append(
        check("classify.sigma-onto", image == set(subsets), len(image), len(subsets))
    )
    # Order preservation both ways on all comparable pairs.
    mono = all(
        (sigma_of(a) <= sigma_of(b)) == (a <= b) for a in ideals for b in ideals
    )
    records.append(check("classify.order-isomorphism", mono))
    return Report.of(records)


def five_object_model() -> Catalogue:
    """The two-point worked example: unit decomposes as A + B, with A and B
    orthogonal idempotent objects.  Both sum decompositions are recorded as
    triangles, so the ideal lattice is the four specialisation-closed
    subsets of a discrete two-point space."""
    names = ["0", "U", "A", "B", "S"]
    tensor = {
        "0": {"0": "0", "U": "0", "A": "0", "B": "0", "S": "0"},
        "U": {"0": "0", "U": "U", "A": "A", "B": "B", "S": "S"},
        "A": {"0": "0", "U": "A", "A": "A", "B": "0", "S": "A"},
        "B": {"0": "0", "U": "B", "A": "0", "B": "B", "S": "B"},
        "S": {"0": "0", "U": "S", "A": "A", "B": "B", "S": "S"},
    }
    return Catalogue.of(
        names,
        zero="0",
        unit="U",
        tensor=tensor,
        summands=[("S", "A"), ("S", "B"), ("U", "A"), ("U", "B")],
        triangles=[("A", "S", "B"), ("A", "U", "B")],
    )


def random_subset_catalogue(rng: random.Random, n_objects: int, max_points: int = 6) -> Catalogue:
    """A random valid catalogue: the lattice of specialisation-closed subsets
    of a random finite poset, with intersection as tensor, unions as
    triangles and containments as summands."""
    while True:
        npts = rng.randint(2, max_points)
        pts = list(range(npts))
        rel = {(x, x) for x in pts}
        for x in pts:
            for y in pts:
                if x < y and rng.random() < 0.4:
                    rel.add((x, y))
        # transitive closure; x < y in the random order, so antisymmetry holds
        changed = True
        while changed:
            changed = False
            for a, b in list(rel):
                for b2, c in list(rel):
                    if b == b2 and (a, c) not in rel:
                        rel.add((a, c))
                        changed = True
        up_sets = []
        for combo in range(1 << npts):
            subset = frozenset(p for i, p in enumerate(pts) if combo >> i & 1)
            if all((y in subset) for x in subset for (x2, y) in rel if x2 == x):
                up_sets.append(subset)
        if len(up_sets) != n_objects:
            continue
        up_sets.sort(key=lambda s: (len(s), sorted(s)))
        names = ["v" + "".join(str(p) for p in sorted(s)) if s else "empty" for s in up_sets]
        index = {s: names[i] for i, s in enumerate(up_sets)}
        tensor = {
            index[a]: {index[b]: index[a & b] for b in up_sets} for a in up_sets
        }
        summands = [
            (index[a], index[b]) for a in up_sets for b in up_sets if b < a
        ]
        triangles = [
            (index[a], index[a | b], index[b]) for a in up_sets for b in up_sets
        ]
        return Catalogue.of(
            names,
            zero=index[frozenset()],
            unit=index[frozenset(pts)],
            tensor=tensor,
            summands=summands,
            triangles=triangles,
        )
