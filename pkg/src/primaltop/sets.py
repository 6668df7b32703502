"""Finite-universe set algebra.

Subsets are bit masks over an ordered :class:`Universe`; point ``i`` of the
universe occupies bit ``i``.  The canonical order of subsets is the numeric
order of their masks, and the canonical order of families is the numeric
order of their characteristic masks (bit ``m`` set iff subset ``m`` is a
member).
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from functools import cached_property, total_ordering
from typing import Iterable, Iterator

from .errors import UniverseError, UniverseMismatch, UniverseTooLarge, UnknownPoint

MAX_POINTS = 16


@dataclass(frozen=True)
class Universe:
    points: tuple[str, ...]

    def __post_init__(self):
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        if not 1 <= len(pts) <= MAX_POINTS:
            raise UniverseError(
                f"universe must have between 1 and {MAX_POINTS} points, got {len(pts)}"
            )
        for p in pts:
            if not isinstance(p, str) or not p:
                raise UniverseError(f"point names must be non-empty strings, got {p!r}")
        if len(set(pts)) != len(pts):
            raise UniverseError(f"duplicate point names in {list(pts)}")

    @classmethod
    def of_size(cls, n: int) -> "Universe":
        """Universe with points named a, b, c, ..."""
        if not 1 <= n <= MAX_POINTS:
            raise UniverseTooLarge(f"universe size {n} outside 1..{MAX_POINTS}")
        return cls(tuple(string.ascii_lowercase[:n]))

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def full(self) -> int:
        return (1 << len(self.points)) - 1

    @cached_property
    def _index(self) -> dict:
        return {p: i for i, p in enumerate(self.points)}

    def index(self, point: str) -> int:
        try:
            return self._index[point]
        except KeyError:
            raise UnknownPoint(f"unknown point {point!r}", witness=(point,)) from None

    def subset(self, names: Iterable[str] = ()) -> "Subset":
        bits = 0
        for name in names:
            bits |= 1 << self.index(name)
        return Subset(self, bits)

    def from_bits(self, bits: int) -> "Subset":
        if bits < 0 or bits & ~self.full:
            raise UniverseMismatch(f"mask {bits:#x} has bits outside the universe")
        return Subset(self, bits)

    @property
    def empty(self) -> "Subset":
        return Subset(self, 0)

    @property
    def whole(self) -> "Subset":
        return Subset(self, self.full)

    def names(self, bits: int) -> list[str]:
        return [p for i, p in enumerate(self.points) if bits >> i & 1]

    def render(self, bits: int) -> str:
        return "{" + ",".join(self.names(bits)) + "}"

    def parse(self, text: str) -> "Subset":
        """Parse ``"{a,c}"``, ``"a,c"`` or ``"{}"``."""
        body = text.strip()
        if body.startswith("{") and body.endswith("}"):
            body = body[1:-1]
        names = [t.strip() for t in body.split(",") if t.strip()]
        return self.subset(names)


@total_ordering
@dataclass(frozen=True, eq=True)
class Subset:
    universe: Universe
    bits: int

    def _check(self, other: "Subset") -> None:
        if not isinstance(other, Subset):
            raise TypeError(f"expected Subset, got {type(other).__name__}")
        if other.universe != self.universe:
            raise UniverseMismatch("subsets belong to different universes")

    def complement(self) -> "Subset":
        return Subset(self.universe, self.universe.full & ~self.bits)

    def union(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.universe, self.bits | other.bits)

    def intersection(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.universe, self.bits & other.bits)

    def difference(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.universe, self.bits & ~other.bits)

    def issubset(self, other: "Subset") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __invert__ = complement
    __le__ = issubset

    def __lt__(self, other: "Subset") -> bool:
        # canonical order, not proper inclusion
        self._check(other)
        return self.bits < other.bits

    def __contains__(self, point: str) -> bool:
        return bool(self.bits >> self.universe.index(point) & 1)

    def __iter__(self) -> Iterator[str]:
        return iter(self.universe.names(self.bits))

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def names(self) -> list[str]:
        return self.universe.names(self.bits)

    def __str__(self) -> str:
        return self.universe.render(self.bits)

    def __repr__(self) -> str:
        return f"Subset({self})"


def complement(a: Subset) -> Subset:
    return a.complement()


def union(a: Subset, b: Subset) -> Subset:
    return a.union(b)


def intersection(a: Subset, b: Subset) -> Subset:
    return a.intersection(b)


def difference(a: Subset, b: Subset) -> Subset:
    return a.difference(b)


def powerset(u: Universe) -> Iterator[Subset]:
    """All ``2**u.size`` subsets in canonical order, from the empty set to X."""
    if u.size > MAX_POINTS:
        raise UniverseTooLarge(f"powerset of {u.size} points exceeds {MAX_POINTS}")
    for bits in range(u.full + 1):
        yield Subset(u, bits)


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` in increasing numeric order."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


class SetFamily:
    """Duplicate-free, canonically ordered family of subsets of one universe."""

    __slots__ = ("universe", "masks", "_set")

    def __init__(self, universe: Universe, members: Iterable = ()):
        masks = set()
        for m in members:
            if isinstance(m, Subset):
                if m.universe != universe:
                    raise UniverseMismatch("family member from a different universe")
                masks.add(m.bits)
            else:
                m = int(m)
                if m < 0 or m & ~universe.full:
                    raise UniverseMismatch(f"mask {m:#x} has bits outside the universe")
                masks.add(m)
        self.universe = universe
        self.masks: tuple[int, ...] = tuple(sorted(masks))
        self._set = frozenset(masks)

    @classmethod
    def of_names(cls, universe: Universe, sets: Iterable[Iterable[str]]) -> "SetFamily":
        return cls(universe, (universe.subset(s) for s in sets))

    @property
    def members(self) -> tuple[Subset, ...]:
        return tuple(Subset(self.universe, m) for m in self.masks)

    @property
    def characteristic(self) -> int:
        """Bit ``m`` set iff mask ``m`` is a member; orders families canonically."""
        return sum(1 << m for m in self.masks)

    def __contains__(self, a) -> bool:
        if isinstance(a, Subset):
            if a.universe != self.universe:
                raise UniverseMismatch("subset from a different universe")
            return a.bits in self._set
        return a in self._set

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.masks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.universe == other.universe and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.universe, self.masks))

    def __le__(self, other: "SetFamily") -> bool:
        return self._set <= other._set

    def __str__(self) -> str:
        return "{" + ", ".join(self.universe.render(m) for m in self.masks) + "}"

    def __repr__(self) -> str:
        return f"SetFamily({self})"

    def render(self) -> list[str]:
        return [self.universe.render(m) for m in self.masks]


def family_contains(f: SetFamily, a: Subset) -> bool:
    return a in f


def family_union(f: SetFamily) -> Subset:
    bits = 0
    for m in f.masks:
        bits |= m
    return Subset(f.universe, bits)


def family_intersection(f: SetFamily) -> Subset:
    """Intersection of the members; the empty family gives X."""
    bits = f.universe.full
    for m in f.masks:
        bits &= m
    return Subset(f.universe, bits)


def popcount(mask: int) -> int:
    return bin(mask).count("1")
