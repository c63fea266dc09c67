"""Prime sets, points of Spec Z, and specialisation-closed subsets.

Finite and cofinite sets of rational primes are the computable fragment of
Spec Z used by the rest of the toolkit: localisation loci, torsion loci and
specialisation-closed subsets are all built from them.  Every value here is
immutable and every operation is pure, so unrestricted concurrent use is safe.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "is_prime",
    "primes_up_to",
    "PrimeSet",
    "SpecZPoint",
    "GENERIC",
    "SpclSubset",
    "PointSet",
    "v_of_point",
    "z_of_point",
    "primeset_algebra",
    "spcl_lattice",
]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Miller-Rabin with the witness set below is a proven deterministic test for
# every n under this bound; larger candidates fall back to trial division,
# which stays exact but is slow for big inputs (a performance boundary, not a
# correctness one).
_MR_PROVEN_BOUND = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    """Deterministic primality test for arbitrary-precision integers."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < _MR_PROVEN_BOUND:
        d = n - 1
        r = (d & -d).bit_length() - 1
        d >>= r
        for a in _SMALL_PRIMES:
            x = pow(a, d, n)
            if x == 1 or x == n - 1:
                continue
            for _ in range(r - 1):
                x = x * x % n
                if x == n - 1:
                    break
            else:
                return False
        return True
    f = 41
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_up_to(bound: int) -> list[int]:
    """All primes <= bound, by sieve."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(bound**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, b in enumerate(sieve) if b]


@dataclass(frozen=True)
class PrimeSet:
    """A finite or cofinite set of rational primes, in canonical form.

    ``finite=True`` means the set is exactly ``primes``; ``finite=False``
    means the set is all primes except ``primes``.  The listed primes are
    strictly increasing and individually verified prime, so equality of
    canonical forms is equality of the underlying sets.
    """

    finite: bool
    primes: tuple[int, ...]

    def __post_init__(self) -> None:
        prev = 1
        for p in self.primes:
            if p <= prev:
                raise ValueError(f"prime list not strictly increasing at {p}")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            prev = p

    @classmethod
    def of(cls, primes: Iterable[int] = (), finite: bool = True) -> "PrimeSet":
        return cls(finite, tuple(sorted(set(primes))))

    @classmethod
    def cofinite(cls, excluded: Iterable[int] = ()) -> "PrimeSet":
        return cls.of(excluded, finite=False)

    @classmethod
    def none(cls) -> "PrimeSet":
        return cls(True, ())

    @classmethod
    def all_primes(cls) -> "PrimeSet":
        return cls(False, ())

    @property
    def mode(self) -> str:
        return "finite" if self.finite else "cofinite"

    def is_empty(self) -> bool:
        return self.finite and not self.primes

    def is_all(self) -> bool:
        return not self.finite and not self.primes

    def contains(self, n: int) -> bool:
        if not is_prime(n):
            return False
        i = bisect_left(self.primes, n)
        listed = i < len(self.primes) and self.primes[i] == n
        return listed if self.finite else not listed

    def union(self, other: "PrimeSet") -> "PrimeSet":
        a, b = set(self.primes), set(other.primes)
        if self.finite and other.finite:
            return PrimeSet.of(a | b)
        if self.finite:
            return PrimeSet.of(b - a, finite=False)
        if other.finite:
            return PrimeSet.of(a - b, finite=False)
        return PrimeSet.of(a & b, finite=False)

    def intersect(self, other: "PrimeSet") -> "PrimeSet":
        a, b = set(self.primes), set(other.primes)
        if self.finite and other.finite:
            return PrimeSet.of(a & b)
        if self.finite:
            return PrimeSet.of(a - b)
        if other.finite:
            return PrimeSet.of(b - a)
        return PrimeSet.of(a | b, finite=False)

    def complement(self) -> "PrimeSet":
        return PrimeSet(not self.finite, self.primes)

    def difference(self, other: "PrimeSet") -> "PrimeSet":
        return self.intersect(other.complement())

    def leq(self, other: "PrimeSet") -> bool:
        """Subset order on the underlying sets."""
        return self.intersect(other) == self

    def up_to(self, bound: int) -> list[int]:
        """Member primes <= bound."""
        if self.finite:
            return [p for p in self.primes if p <= bound]
        excluded = set(self.primes)
        return [p for p in primes_up_to(bound) if p not in excluded]

    def sort_key(self) -> tuple:
        return (0 if self.finite else 1, self.primes)

    def __str__(self) -> str:
        body = "{" + ", ".join(str(p) for p in self.primes) + "}"
        if self.finite:
            return body
        return "all primes" if not self.primes else f"all primes except {body}"

    def to_json(self) -> dict:
        return {"mode": self.mode, "primes": [str(p) for p in self.primes]}

    @classmethod
    def from_json(cls, data: object, where: str = "primeset") -> "PrimeSet":
        if not isinstance(data, dict):
            raise ValueError(f"{where}: expected an object")
        mode = data.get("mode")
        if mode not in ("finite", "cofinite"):
            raise ValueError(f"{where}.mode: expected 'finite' or 'cofinite'")
        raw = data.get("primes", [])
        if not isinstance(raw, list):
            raise ValueError(f"{where}.primes: expected a list")
        primes = []
        for i, item in enumerate(raw):
            try:
                primes.append(int(item))
            except (TypeError, ValueError):
                raise ValueError(f"{where}.primes[{i}]: not an integer") from None
        try:
            return cls.of(primes, finite=(mode == "finite"))
        except ValueError as exc:
            raise ValueError(f"{where}.primes: {exc}") from None


@dataclass(frozen=True)
class SpecZPoint:
    """A point of Spec Z: the generic point (zero ideal) or a closed point (p)."""

    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"closed point needs a prime, got {self.p}")

    @classmethod
    def generic(cls) -> "SpecZPoint":
        return cls(None)

    @classmethod
    def closed(cls, p: int) -> "SpecZPoint":
        return cls(p)

    @property
    def is_generic(self) -> bool:
        return self.p is None

    def __str__(self) -> str:
        return "(0)" if self.p is None else f"({self.p})"


GENERIC = SpecZPoint.generic()


@dataclass(frozen=True)
class SpclSubset:
    """A specialisation-closed subset of Spec Z.

    ``closed=None`` is the whole space (the only specialisation-closed set
    containing the generic point, whose closure is everything); otherwise the
    set is the closed points {(p) : p in closed}.
    """

    closed: PrimeSet | None = None

    @classmethod
    def whole_space(cls) -> "SpclSubset":
        return cls(None)

    @classmethod
    def closed_points(cls, primes: PrimeSet) -> "SpclSubset":
        return cls(primes)

    @classmethod
    def empty(cls) -> "SpclSubset":
        return cls(PrimeSet.none())

    @property
    def is_all(self) -> bool:
        return self.closed is None

    def join(self, other: "SpclSubset") -> "SpclSubset":
        if self.is_all or other.is_all:
            return SpclSubset(None)
        return SpclSubset(self.closed.union(other.closed))

    def meet(self, other: "SpclSubset") -> "SpclSubset":
        if self.is_all:
            return other
        if other.is_all:
            return self
        return SpclSubset(self.closed.intersect(other.closed))

    def leq(self, other: "SpclSubset") -> bool:
        if other.is_all:
            return True
        if self.is_all:
            return False
        return self.closed.leq(other.closed)

    def contains_point(self, x: SpecZPoint) -> bool:
        if self.is_all:
            return True
        if x.is_generic:
            return False
        return self.closed.contains(x.p)

    def point_set(self) -> "PointSet":
        if self.is_all:
            return PointSet(True, PrimeSet.all_primes())
        return PointSet(False, self.closed)

    def complement(self) -> "PointSet":
        if self.is_all:
            return PointSet(False, PrimeSet.none())
        return PointSet(True, self.closed.complement())

    def __str__(self) -> str:
        if self.is_all:
            return "Spec Z"
        return f"closed points of {self.closed}"

    def to_json(self) -> dict:
        if self.is_all:
            return {"kind": "all"}
        return {"kind": "closed", "primes": self.closed.to_json()}

    @classmethod
    def from_json(cls, data: object, where: str = "subset") -> "SpclSubset":
        if not isinstance(data, dict):
            raise ValueError(f"{where}: expected an object")
        kind = data.get("kind")
        if kind == "all":
            return cls(None)
        if kind == "closed":
            return cls(PrimeSet.from_json(data.get("primes"), f"{where}.primes"))
        raise ValueError(f"{where}.kind: expected 'all' or 'closed'")


@dataclass(frozen=True)
class PointSet:
    """An arbitrary representable subset of Spec Z.

    Unlike :class:`SpclSubset` this need not be specialisation closed; it is
    the value type for supports and for subset codes of localising
    subcategories: a generic-point flag plus a finite/cofinite set of closed
    points.
    """

    generic: bool
    closed: PrimeSet

    @classmethod
    def empty(cls) -> "PointSet":
        return cls(False, PrimeSet.none())

    @classmethod
    def everything(cls) -> "PointSet":
        return cls(True, PrimeSet.all_primes())

    @classmethod
    def singleton(cls, x: SpecZPoint) -> "PointSet":
        if x.is_generic:
            return cls(True, PrimeSet.none())
        return cls(False, PrimeSet.of([x.p]))

    def is_empty(self) -> bool:
        return not self.generic and self.closed.is_empty()

    def is_everything(self) -> bool:
        return self.generic and self.closed.is_all()

    def contains(self, x: SpecZPoint) -> bool:
        if x.is_generic:
            return self.generic
        return self.closed.contains(x.p)

    def union(self, other: "PointSet") -> "PointSet":
        return PointSet(self.generic or other.generic, self.closed.union(other.closed))

    def intersect(self, other: "PointSet") -> "PointSet":
        return PointSet(self.generic and other.generic, self.closed.intersect(other.closed))

    def complement(self) -> "PointSet":
        return PointSet(not self.generic, self.closed.complement())

    def leq(self, other: "PointSet") -> bool:
        if self.generic and not other.generic:
            return False
        return self.closed.leq(other.closed)

    def __str__(self) -> str:
        if self.is_empty():
            return "{}"
        if self.is_everything():
            return "all of Spec Z"
        parts = []
        if self.generic:
            parts.append("(0)")
        if not self.closed.is_empty():
            if self.closed.finite:
                parts.extend(f"({p})" for p in self.closed.primes)
            elif self.closed.is_all():
                parts.append("every (p)")
            else:
                missing = ", ".join(str(p) for p in self.closed.primes)
                parts.append(f"every (p) except p in {{{missing}}}")
        return "{" + ", ".join(parts) + "}"

    def to_json(self) -> dict:
        return {"generic": self.generic, "closed": self.closed.to_json()}

    @classmethod
    def from_json(cls, data: object, where: str = "points") -> "PointSet":
        if not isinstance(data, dict):
            raise ValueError(f"{where}: expected an object")
        generic = data.get("generic")
        if not isinstance(generic, bool):
            raise ValueError(f"{where}.generic: expected a boolean")
        return cls(generic, PrimeSet.from_json(data.get("closed"), f"{where}.closed"))


def v_of_point(x: SpecZPoint) -> SpclSubset:
    """Closure of the point: V(x)."""
    if x.is_generic:
        return SpclSubset.whole_space()
    return SpclSubset.closed_points(PrimeSet.of([x.p]))


def z_of_point(x: SpecZPoint) -> SpclSubset:
    """The points whose closure misses x: Z(x) = {y : x not in V(y)}.

    Together with V(x) this isolates the point:
    V(x) minus (Z(x) meet V(x)) is exactly {x}.
    """
    if x.is_generic:
        return SpclSubset.closed_points(PrimeSet.all_primes())
    return SpclSubset.closed_points(PrimeSet.cofinite([x.p]))


def primeset_algebra(a: PrimeSet, b: PrimeSet, op: str) -> PrimeSet:
    """Set algebra dispatcher: op in {'union', 'intersect', 'difference'}."""
    if op == "union":
        return a.union(b)
    if op == "intersect":
        return a.intersect(b)
    if op == "difference":
        return a.difference(b)
    raise ValueError(f"unknown op {op!r}")


def spcl_lattice(
    a: SpclSubset,
    op: str,
    b: SpclSubset | None = None,
    x: SpecZPoint | None = None,
) -> SpclSubset | bool:
    """Lattice dispatcher: 'join', 'meet' and 'leq' take a second subset,
    'contains_point' takes a point."""
    if op in ("join", "meet", "leq"):
        if b is None:
            raise ValueError(f"{op} needs a second subset")
        return getattr(a, op)(b)
    if op == "contains_point":
        if x is None:
            raise ValueError("contains_point needs a point")
        return a.contains_point(x)
    raise ValueError(f"unknown op {op!r}")
