"""Closed calculus of cyclic modules over Z with exact tensor/Tor tables.

The calculus knows three kinds of building block: localisations Z[T^-1]
(``free``, T the set of inverted primes, so Z itself is free with T empty and
Q is free with every prime inverted), primary torsion Z/p^k (``torsion``),
and sums of Prufer groups indexed by a prime set (``prufer``).  Finite direct
sums of these are closed under tensor and Tor, which is what makes derived
tensor products of formal objects computable degree by degree:

>>> X = GradedModule.of({0: [Cyclic.torsion(2, 1)]})
>>> print(kunneth(X, X))
{-1: Z/2, 0: Z/2}
>>> print(kunneth(GradedModule.of({0: [Cyclic.free()]}), X))
{0: Z/2}

Canonical forms are unique, so structural equality is isomorphism: the block
types listed above have no isomorphisms across kinds or parameters, and
multiplicities of indecomposables in a finite direct sum are determined
(Krull-Schmidt-style uniqueness, taken as given for this module class).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .znum import GENERIC, PointSet, PrimeSet, SpecZPoint, is_prime

__all__ = [
    "Cyclic",
    "Module",
    "GradedModule",
    "tensor_mod",
    "tor_mod",
    "tensor_modules",
    "tor_modules",
    "kunneth",
    "supp_cyclic",
    "supp_mod",
    "shift_graded",
    "sum_graded",
    "is_zero",
]

_KIND_ORDER = {"free": 0, "torsion": 1, "prufer": 2}


@dataclass(frozen=True)
class Cyclic:
    """One indecomposable block of the calculus.

    kind "free":    Z[T^-1] where T = ``primes`` (inverted primes).
    kind "torsion": Z/p^k.
    kind "prufer":  the sum of Prufer groups Z(p^oo) for p in ``primes``;
                    the empty family is forbidden (normalise to absence).
    """

    kind: str
    primes: PrimeSet | None = None
    p: int | None = None
    k: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "free":
            if self.primes is None or self.p is not None or self.k is not None:
                raise ValueError("free block takes exactly a prime set")
        elif self.kind == "torsion":
            if self.primes is not None or self.p is None or self.k is None:
                raise ValueError("torsion block takes a prime and an exponent")
            if not is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
            if self.k < 1:
                raise ValueError("torsion exponent must be >= 1")
        elif self.kind == "prufer":
            if self.primes is None or self.p is not None or self.k is not None:
                raise ValueError("prufer block takes exactly a prime set")
            if self.primes.is_empty():
                raise ValueError("empty prufer family is forbidden; omit the block")
        else:
            raise ValueError(f"unknown kind {self.kind!r}")

    @classmethod
    def free(cls, inverted: PrimeSet | None = None) -> "Cyclic":
        return cls("free", primes=inverted if inverted is not None else PrimeSet.none())

    @classmethod
    def torsion(cls, p: int, k: int) -> "Cyclic":
        return cls("torsion", p=p, k=k)

    @classmethod
    def prufer(cls, family: PrimeSet) -> "Cyclic":
        return cls("prufer", primes=family)

    @classmethod
    def rationals(cls) -> "Cyclic":
        return cls.free(PrimeSet.all_primes())

    def sort_key(self) -> tuple:
        if self.kind == "free":
            return (0, self.primes.sort_key())
        if self.kind == "torsion":
            return (1, self.p, self.k)
        return (2, self.primes.sort_key())

    def __str__(self) -> str:
        if self.kind == "free":
            if self.primes.is_empty():
                return "Z"
            if self.primes.is_all():
                return "Q"
            if self.primes.finite:
                return "Z[" + ",".join(f"1/{p}" for p in self.primes.primes) + "]"
            return "Z_(" + ",".join(str(p) for p in self.primes.primes) + ")"
        if self.kind == "torsion":
            return f"Z/{self.p ** self.k}"
        if self.primes.is_all():
            return "Q/Z"
        if self.primes.finite:
            return "+".join(f"Z({p}^oo)" for p in self.primes.primes)
        missing = ",".join(str(p) for p in self.primes.primes)
        return f"Z(p^oo: p not in {{{missing}}})"

    def to_json(self) -> dict:
        if self.kind == "free":
            return {"kind": "free", "invert": self.primes.to_json()}
        if self.kind == "torsion":
            return {"kind": "torsion", "p": str(self.p), "k": self.k}
        return {"kind": "prufer", "primes": self.primes.to_json()}

    @classmethod
    def from_json(cls, data: object, where: str = "cyclic") -> "Cyclic":
        if not isinstance(data, dict):
            raise ValueError(f"{where}: expected an object")
        kind = data.get("kind")
        if kind == "free":
            return cls.free(PrimeSet.from_json(data.get("invert"), f"{where}.invert"))
        if kind == "torsion":
            try:
                p, k = int(data.get("p")), int(data.get("k"))
            except (TypeError, ValueError):
                raise ValueError(f"{where}: torsion needs integer p and k") from None
            return cls.torsion(p, k)
        if kind == "prufer":
            return cls.prufer(PrimeSet.from_json(data.get("primes"), f"{where}.primes"))
        raise ValueError(f"{where}.kind: expected 'free', 'torsion' or 'prufer'")


@dataclass(frozen=True)
class Module:
    """Finite multiset of cyclic blocks, canonically ordered."""

    parts: tuple[tuple[Cyclic, int], ...]

    @classmethod
    def of(cls, items: Iterable[Cyclic | tuple[Cyclic, int]]) -> "Module":
        counts: dict[Cyclic, int] = {}
        for item in items:
            if isinstance(item, tuple):
                c, mult = item
            else:
                c, mult = item, 1
            if mult < 0:
                raise ValueError("negative multiplicity")
            if mult:
                counts[c] = counts.get(c, 0) + mult
        ordered = sorted(counts.items(), key=lambda cm: cm[0].sort_key())
        return cls(tuple(ordered))

    @classmethod
    def zero(cls) -> "Module":
        return cls(())

    def is_zero(self) -> bool:
        return not self.parts

    def plus(self, other: "Module") -> "Module":
        return Module.of(list(self.parts) + list(other.parts))

    def cyclics(self) -> list[Cyclic]:
        out = []
        for c, mult in self.parts:
            out.extend([c] * mult)
        return out

    def __str__(self) -> str:
        if not self.parts:
            return "0"
        bits = []
        for c, mult in self.parts:
            bits.append(str(c) if mult == 1 else f"{mult}*{c}")
        return " + ".join(bits)


@dataclass(frozen=True)
class GradedModule:
    """A formal object of D(Z): cohomological degree -> nonzero Module."""

    graded: tuple[tuple[int, Module], ...]

    @classmethod
    def of(cls, data: Mapping[int, Module | Iterable[Cyclic]]) -> "GradedModule":
        out = []
        for n, m in data.items():
            mod = m if isinstance(m, Module) else Module.of(m)
            if not mod.is_zero():
                out.append((int(n), mod))
        return cls(tuple(sorted(out)))

    @classmethod
    def zero(cls) -> "GradedModule":
        return cls(())

    @classmethod
    def unit(cls) -> "GradedModule":
        return cls.of({0: [Cyclic.free()]})

    def module_in(self, n: int) -> Module:
        for d, m in self.graded:
            if d == n:
                return m
        return Module.zero()

    def degrees(self) -> list[int]:
        return [n for n, _ in self.graded]

    def is_zero(self) -> bool:
        return not self.graded

    def shift(self, k: int) -> "GradedModule":
        return GradedModule(tuple((n - k, m) for n, m in self.graded))

    def plus(self, other: "GradedModule") -> "GradedModule":
        degrees = set(self.degrees()) | set(other.degrees())
        return GradedModule.of(
            {n: self.module_in(n).plus(other.module_in(n)) for n in degrees}
        )

    def __str__(self) -> str:
        if not self.graded:
            return "0"
        return "{" + ", ".join(f"{n}: {m}" for n, m in self.graded) + "}"

    def to_json(self) -> dict:
        return {str(n): [c.to_json() for c in m.cyclics()] for n, m in self.graded}

    @classmethod
    def from_json(cls, data: object, where: str = "object") -> "GradedModule":
        if not isinstance(data, dict):
            raise ValueError(f"{where}: expected a degree-keyed object")
        out: dict[int, Module] = {}
        for key, val in data.items():
            try:
                n = int(key)
            except ValueError:
                raise ValueError(f"{where}.{key}: degree keys must be integers") from None
            if not isinstance(val, list):
                raise ValueError(f"{where}.{key}: expected a list of cyclics")
            out[n] = Module.of(
                Cyclic.from_json(item, f"{where}.{key}[{i}]") for i, item in enumerate(val)
            )
        return cls.of(out)


def _pair(a: Cyclic, b: Cyclic) -> tuple[Cyclic, Cyclic]:
    if _KIND_ORDER[a.kind] <= _KIND_ORDER[b.kind]:
        return a, b
    return b, a


def tensor_mod(a: Cyclic, b: Cyclic) -> Module:
    """Tensor product of two blocks, as a Module (possibly zero)."""
    x, y = _pair(a, b)
    if x.kind == "free":
        if y.kind == "free":
            return Module.of([Cyclic.free(x.primes.union(y.primes))])
        if y.kind == "torsion":
            if x.primes.contains(y.p):
                return Module.zero()
            return Module.of([y])
        rest = y.primes.difference(x.primes)
        return Module.zero() if rest.is_empty() else Module.of([Cyclic.prufer(rest)])
    if x.kind == "torsion":
        if y.kind == "torsion":
            if x.p != y.p:
                return Module.zero()
            return Module.of([Cyclic.torsion(x.p, min(x.k, y.k))])
        return Module.zero()  # torsion x prufer: prufer groups are divisible
    return Module.zero()  # prufer x prufer


def tor_mod(a: Cyclic, b: Cyclic) -> Module:
    """Tor_1 of two blocks, as a Module (possibly zero)."""
    x, y = _pair(a, b)
    if x.kind == "free":
        return Module.zero()  # localisations are flat
    if x.kind == "torsion":
        if y.kind == "torsion":
            if x.p != y.p:
                return Module.zero()
            return Module.of([Cyclic.torsion(x.p, min(x.k, y.k))])
        if y.primes.contains(x.p):
            return Module.of([x])
        return Module.zero()
    common = x.primes.intersect(y.primes)
    return Module.zero() if common.is_empty() else Module.of([Cyclic.prufer(common)])


def _bilinear(op, x: Module, y: Module) -> Module:
    total = Module.zero()
    for a, ma in x.parts:
        for b, mb in y.parts:
            piece = op(a, b)
            if not piece.is_zero():
                total = total.plus(Module.of((c, m * ma * mb) for c, m in piece.parts))
    return total


def tensor_modules(x: Module, y: Module) -> Module:
    return _bilinear(tensor_mod, x, y)


def tor_modules(x: Module, y: Module) -> Module:
    return _bilinear(tor_mod, x, y)


def kunneth(x: GradedModule, y: GradedModule) -> GradedModule:
    """Derived tensor of formal objects.

    H^n(X x Y) collects the tensors of H^i X and H^j Y with i + j = n and
    the Tor terms with i + j = n + 1.
    """
    out: dict[int, Module] = {}

    def put(n: int, m: Module) -> None:
        if not m.is_zero():
            out[n] = out.get(n, Module.zero()).plus(m)

    for i, mi in x.graded:
        for j, mj in y.graded:
            put(i + j, tensor_modules(mi, mj))
            put(i + j - 1, tor_modules(mi, mj))
    return GradedModule.of(out)


def supp_cyclic(c: Cyclic) -> PointSet:
    """Support of one block as a subset of Spec Z.

    A localisation Z[T^-1] survives at the generic point and at every closed
    point not inverted; torsion lives at its prime; a Prufer family lives at
    the primes of the family (all torsion, no generic point).
    """
    if c.kind == "free":
        return PointSet(True, c.primes.complement())
    if c.kind == "torsion":
        return PointSet(False, PrimeSet.of([c.p]))
    return PointSet(False, c.primes)


def supp_mod(m: Module) -> PointSet:
    out = PointSet.empty()
    for c, _ in m.parts:
        out = out.union(supp_cyclic(c))
    return out


def shift_graded(x: GradedModule, k: int) -> GradedModule:
    return x.shift(k)


def sum_graded(x: GradedModule, y: GradedModule) -> GradedModule:
    return x.plus(y)


def is_zero(x: GradedModule) -> bool:
    return x.is_zero()


def localize_point(x: SpecZPoint, m: Module) -> Module:
    """The stalk of a module at a point; the localisation oracle for supports.

    At a closed point (p) every block keeps only its p-local content; at the
    generic point only the free blocks survive (as Q).
    """
    out: list[tuple[Cyclic, int]] = []
    for c, mult in m.parts:
        if x.is_generic:
            if c.kind == "free":
                out.append((Cyclic.rationals(), mult))
            continue
        p = x.p
        if c.kind == "free" and not c.primes.contains(p):
            out.append((Cyclic.free(PrimeSet.cofinite([p])), mult))
        elif c.kind == "torsion" and c.p == p:
            out.append((c, mult))
        elif c.kind == "prufer" and c.primes.contains(p):
            out.append((Cyclic.prufer(PrimeSet.of([p])), mult))
    return Module.of(out)


GENERIC_POINT = GENERIC
