"""Primals on a finite universe and primal topological spaces."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import PrimalAxiomError, UniverseMismatch, UniverseTooLarge
from .sets import SetFamily, Subset, Universe, popcount, submasks
from .topology import MAX_ENUM_POINTS, Topology


class Primal:
    """A validated primal.  Build with :func:`validate_primal`."""

    __slots__ = ("family", "universe", "table")

    def __init__(self, family: SetFamily):
        self.family = family
        self.universe = family.universe
        # bit m set iff mask m is a member
        self.table = family.characteristic

    def __contains__(self, a) -> bool:
        if isinstance(a, Subset):
            return a in self.family
        return bool(self.table >> a & 1)

    def __iter__(self):
        return iter(self.family)

    def __len__(self):
        return len(self.family)

    def __eq__(self, other):
        if not isinstance(other, Primal):
            return NotImplemented
        return self.family == other.family

    def __hash__(self):
        return hash(self.family)

    def __le__(self, other: "Primal") -> bool:
        return self.family <= other.family

    def __repr__(self):
        return f"Primal({self.family})"


@dataclass(frozen=True)
class PrimalSpace:
    topology: Topology
    primal: Primal
    name: str | None = None

    def __post_init__(self):
        if self.topology.universe != self.primal.universe:
            raise UniverseMismatch("topology and primal belong to different universes")

    @property
    def universe(self) -> Universe:
        return self.topology.universe


def _first_violation(f: SetFamily):
    u = f.universe
    if u.full in f:
        return PrimalAxiomError(
            f"the universe {u.render(u.full)} is a member", kind="contains-universe",
            witness=(Subset(u, u.full),),
        )
    for a in f.masks:
        for b in submasks(a):
            if b not in f:
                return PrimalAxiomError(
                    f"{u.render(a)} is a member but its subset {u.render(b)} is not",
                    kind="not-downward-closed",
                    witness=(Subset(u, a), Subset(u, b)),
                )
    outside = [m for m in range(u.full + 1) if m not in f]
    for a, b in combinations(outside, 2):
        if a & b in f:
            return PrimalAxiomError(
                f"{u.render(a)} ∩ {u.render(b)} = {u.render(a & b)} is a member "
                "but neither set is",
                kind="intersection-violation",
                witness=(Subset(u, a), Subset(u, b)),
            )
    return None


def validate_primal(f: SetFamily, u: Universe | None = None) -> Primal:
    if u is not None and f.universe != u:
        raise UniverseMismatch("family is not over the given universe")
    err = _first_violation(f)
    if err is not None:
        raise err
    return Primal(f)


def is_primal(f: SetFamily) -> bool:
    return _first_violation(f) is None


def validate_primal_dual(f: SetFamily, u: Universe | None = None) -> bool:
    """The complement-form conditions: X is not a member, non-members are
    closed upwards, and non-members are closed under intersection."""
    if u is not None and f.universe != u:
        raise UniverseMismatch("family is not over the given universe")
    u = f.universe
    if u.full in f:
        return False
    outside = [m for m in range(u.full + 1) if m not in f]
    for b in outside:
        for a in range(u.full + 1):
            if b & ~a == 0 and a in f:
                return False
    for a in outside:
        for b in outside:
            if a & b in f:
                return False
    return True


def point_primal(u: Universe, p: str) -> Primal:
    """All subsets missing the point ``p``."""
    bit = 1 << u.index(p)
    return Primal(SetFamily(u, (m for m in range(u.full + 1) if not m & bit)))


def empty_primal(u: Universe) -> Primal:
    return Primal(SetFamily(u))


def maximal_primal(u: Universe) -> Primal:
    """Every proper subset of X."""
    return Primal(SetFamily(u, range(u.full)))


def _down_sets(u: Universe) -> Iterator[int]:
    """Characteristic masks of the downward-closed families not containing X."""
    order = sorted(range(u.full), key=lambda m: (popcount(m), m))
    n = u.size

    def extend(i: int, chosen: int) -> Iterator[int]:
        if i == len(order):
            yield chosen
            return
        yield from extend(i + 1, chosen)
        m = order[i]
        # all maximal proper subsets already present
        if all(chosen >> (m & ~(1 << x)) & 1 for x in range(n) if m >> x & 1):
            yield from extend(i + 1, chosen | 1 << m)

    yield from extend(0, 0)


def enumerate_primals(u: Universe) -> Iterator[Primal]:
    """Every primal on ``u`` exactly once, in canonical family order.

    Downward-closed families without X are generated first and then
    filtered by the intersection condition.
    """
    if u.size > MAX_ENUM_POINTS:
        raise UniverseTooLarge(f"primal enumeration is limited to {MAX_ENUM_POINTS} points")
    found = []
    for chi in _down_sets(u):
        outside = [m for m in range(u.full + 1) if not chi >> m & 1]
        if all(not chi >> (a & b) & 1 for a in outside for b in outside):
            found.append(chi)
    for chi in sorted(found):
        yield Primal(SetFamily(u, (m for m in range(u.full + 1) if chi >> m & 1)))
