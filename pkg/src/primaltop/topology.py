"""Topologies on a finite universe, regular-open sets and the delta operators."""

from __future__ import annotations

import warnings
from itertools import combinations, product
from typing import Iterator

from .errors import BaseError, TopologyAxiomError, UniverseMismatch, UniverseTooLarge
from .sets import SetFamily, Subset, Universe

MAX_ENUM_POINTS = 4


class Topology:
    """A validated open-set family plus eagerly derived families.

    Build instances with :func:`validate_topology`.  All derived families
    (closed, regular open, regular closed, delta-open) are computed once on
    construction; the per-point neighbourhood masks are kept for the
    pointwise operators.
    """

    def __init__(self, opens: SetFamily):
        self.universe = opens.universe
        self.opens = opens
        u = self.universe
        full = u.full
        self._open_masks = opens.masks
        self.closed = SetFamily(u, (full & ~m for m in opens.masks))
        self._closed_masks = self.closed.masks

        self._int = [self._interior(a) for a in range(full + 1)]
        self._cl = [self._closure(a) for a in range(full + 1)]
        ro = [a for a in range(full + 1) if self._int[self._cl[a]] == a]
        self.regular_open = SetFamily(u, ro)
        self.regular_closed = SetFamily(u, (full & ~m for m in ro))
        self._ro_masks = self.regular_open.masks

        self._nbhd = tuple(
            tuple(m for m in opens.masks if m >> x & 1) for x in range(u.size)
        )
        self._ro_nbhd = tuple(
            tuple(m for m in self._ro_masks if m >> x & 1) for x in range(u.size)
        )
        self._dint = [self._delta_interior(a) for a in range(full + 1)]
        self.delta_open = SetFamily(u, (a for a in range(full + 1) if self._dint[a] == a))

    def _interior(self, a: int) -> int:
        out = 0
        for m in self._open_masks:
            if m & ~a == 0:
                out |= m
        return out

    def _closure(self, a: int) -> int:
        out = self.universe.full
        for c in self._closed_masks:
            if a & ~c == 0:
                out &= c
        return out

    def _delta_interior(self, a: int) -> int:
        out = 0
        for m in self._ro_masks:
            if m & ~a == 0:
                out |= m
        return out

    # mask-level accessors used by the operator layer
    def interior_mask(self, a: int) -> int:
        return self._int[a]

    def closure_mask(self, a: int) -> int:
        return self._cl[a]

    def delta_interior_mask(self, a: int) -> int:
        return self._dint[a]

    def delta_closure_mask(self, a: int) -> int:
        out = 0
        for x, nb in enumerate(self._ro_nbhd):
            if all(u & a for u in nb):
                out |= 1 << x
        return out

    def nbhd_masks(self, x: int) -> tuple[int, ...]:
        return self._nbhd[x]

    def ro_nbhd_masks(self, x: int) -> tuple[int, ...]:
        return self._ro_nbhd[x]

    def is_open_mask(self, a: int) -> bool:
        return a in self.opens

    def __eq__(self, other):
        if not isinstance(other, Topology):
            return NotImplemented
        return self.opens == other.opens

    def __hash__(self):
        return hash(self.opens)

    def __repr__(self):
        return f"Topology({self.opens})"

    def delta_topology(self) -> "Topology":
        return validate_topology(self.delta_open, self.universe)


def _check_universe(t: Topology, a: Subset) -> int:
    if a.universe != t.universe:
        raise UniverseMismatch("subset and topology belong to different universes")
    return a.bits


def validate_topology(f: SetFamily, u: Universe | None = None) -> Topology:
    """Check the open-set axioms and return a :class:`Topology`.

    Raises :class:`TopologyAxiomError` with ``kind`` one of
    ``missing-empty``, ``missing-universe``, ``not-closed-under-union`` or
    ``not-closed-under-intersection``; the witness is the first offending
    pair in canonical order.
    """
    if u is not None and f.universe != u:
        raise UniverseMismatch("family is not over the given universe")
    u = f.universe
    if 0 not in f:
        raise TopologyAxiomError("the empty set is not open", kind="missing-empty")
    if u.full not in f:
        raise TopologyAxiomError(
            f"the universe {u.render(u.full)} is not open", kind="missing-universe"
        )
    masks = f.masks
    for a, b in combinations(masks, 2):
        if a | b not in f:
            raise TopologyAxiomError(
                f"{u.render(a)} ∪ {u.render(b)} = {u.render(a | b)} is not open",
                kind="not-closed-under-union",
                witness=(Subset(u, a), Subset(u, b)),
            )
    for a, b in combinations(masks, 2):
        if a & b not in f:
            raise TopologyAxiomError(
                f"{u.render(a)} ∩ {u.render(b)} = {u.render(a & b)} is not open",
                kind="not-closed-under-intersection",
                witness=(Subset(u, a), Subset(u, b)),
            )
    return Topology(f)


def is_topology(f: SetFamily) -> bool:
    try:
        validate_topology(f)
    except TopologyAxiomError:
        return False
    return True


def indiscrete(u: Universe) -> Topology:
    return validate_topology(SetFamily(u, [0, u.full]))


def discrete(u: Universe) -> Topology:
    return validate_topology(SetFamily(u, range(u.full + 1)))


def interior(t: Topology, a: Subset) -> Subset:
    return Subset(t.universe, t.interior_mask(_check_universe(t, a)))


def closure(t: Topology, a: Subset) -> Subset:
    return Subset(t.universe, t.closure_mask(_check_universe(t, a)))


def open_neighborhoods(t: Topology, x: str) -> SetFamily:
    return SetFamily(t.universe, t.nbhd_masks(t.universe.index(x)))


def regular_open_neighborhoods(t: Topology, x: str) -> SetFamily:
    return SetFamily(t.universe, t.ro_nbhd_masks(t.universe.index(x)))


def is_regular_open(t: Topology, a: Subset) -> bool:
    return _check_universe(t, a) in t.regular_open


def regular_open_family(t: Topology) -> SetFamily:
    return t.regular_open


def regular_closed_family(t: Topology) -> SetFamily:
    return t.regular_closed


def delta_interior(t: Topology, a: Subset) -> Subset:
    """Union of the regular-open subsets of ``a``."""
    return Subset(t.universe, t.delta_interior_mask(_check_universe(t, a)))


def delta_closure(t: Topology, a: Subset) -> Subset:
    """Points whose every regular-open neighbourhood meets ``a``."""
    return Subset(t.universe, t.delta_closure_mask(_check_universe(t, a)))


# Second routes to the delta operators.  The theorem suite and the tests
# compare these against the primary definitions above.

def delta_interior_pointwise(t: Topology, a: Subset, via: str = "regular-open") -> Subset:
    """``{x : some U in RO(X,x) lies in a}``, or with ``via="open"``
    ``{x : some open U containing x has int(cl(U)) inside a}``."""
    m = _check_universe(t, a)
    out = 0
    for x in range(t.universe.size):
        if via == "open":
            hit = any(t.interior_mask(t.closure_mask(u)) & ~m == 0 for u in t.nbhd_masks(x))
        else:
            hit = any(u & ~m == 0 for u in t.ro_nbhd_masks(x))
        if hit:
            out |= 1 << x
    return Subset(t.universe, out)


def delta_closure_pointwise(t: Topology, a: Subset, via: str = "regular-open") -> Subset:
    m = _check_universe(t, a)
    out = 0
    for x in range(t.universe.size):
        if via == "open":
            ok = all(t.interior_mask(t.closure_mask(u)) & m for u in t.nbhd_masks(x))
        else:
            ok = all(u & m for u in t.ro_nbhd_masks(x))
        if ok:
            out |= 1 << x
    return Subset(t.universe, out)


def delta_closure_by_regular_closed(t: Topology, a: Subset) -> Subset:
    """Intersection of the regular-closed supersets of ``a``."""
    m = _check_universe(t, a)
    out = t.universe.full
    for c in t.regular_closed.masks:
        if m & ~c == 0:
            out &= c
    return Subset(t.universe, out)


def delta_open_family(t: Topology) -> SetFamily:
    return t.delta_open


def is_delta_open(t: Topology, a: Subset) -> bool:
    return _check_universe(t, a) in t.delta_open


def is_delta_closed(t: Topology, a: Subset) -> bool:
    return t.universe.full & ~_check_universe(t, a) in t.delta_open


def is_regular_space(t: Topology) -> bool:
    """Points and closed sets not containing them have disjoint open
    neighbourhoods.  No T1 assumption."""
    opens = t.opens.masks
    for x in range(t.universe.size):
        bit = 1 << x
        for c in t.closed.masks:
            if c & bit:
                continue
            if not any(
                u & v == 0 for u in t.nbhd_masks(x) for v in opens if c & ~v == 0
            ):
                return False
    return True


def is_t1_space(t: Topology) -> bool:
    return all(t.universe.full & ~(1 << x) in t.opens for x in range(t.universe.size))


def is_hausdorff(t: Topology) -> bool:
    n = t.universe.size
    for x, y in combinations(range(n), 2):
        if not any(u & v == 0 for u in t.nbhd_masks(x) for v in t.nbhd_masks(y)):
            return False
    return True


def is_regular_t1(t: Topology) -> bool:
    return is_regular_space(t) and is_t1_space(t)


class BaseConditionWarning(UserWarning):
    pass


def topology_from_base(b: SetFamily, u: Universe | None = None) -> Topology:
    """The topology whose open sets are the unions of members of ``b``.

    ``b`` must cover the universe.  If ``b`` misses the base intersection
    condition, a :class:`BaseConditionWarning` is issued and ``b`` is
    treated as a subbase instead.
    """
    if u is not None and b.universe != u:
        raise UniverseMismatch("base is not over the given universe")
    u = b.universe
    cover = 0
    for m in b.masks:
        cover |= m
    if cover != u.full:
        missing = u.full & ~cover
        raise BaseError(
            f"base does not cover {u.render(missing)}", witness=(Subset(u, missing),)
        )
    gens = b.masks
    bad = base_condition_violation(b)
    if bad is not None:
        b1, b2, x = bad
        warnings.warn(
            f"{b1} ∩ {b2} contains no base member around {x}; generating from a subbase",
            BaseConditionWarning,
            stacklevel=2,
        )
        inter = {u.full}
        for m in gens:
            inter |= {m & s for s in inter}
        gens = tuple(sorted(inter))
    opens = {0}
    for m in gens:
        opens |= {m | s for s in opens}
    return validate_topology(SetFamily(u, opens))


def base_condition_violation(b: SetFamily):
    """First ``(B1, B2, x)`` with ``x`` in ``B1 ∩ B2`` but no member of ``b``
    between ``x`` and ``B1 ∩ B2``; ``None`` if the condition holds."""
    u = b.universe
    masks = b.masks
    for b1, b2 in combinations(masks, 2):
        both = b1 & b2
        for x in range(u.size):
            if both >> x & 1 and not any(m >> x & 1 and m & ~both == 0 for m in masks):
                return Subset(u, b1), Subset(u, b2), u.points[x]
    return None


def _preorders(n: int) -> Iterator[list[int]]:
    """Reflexive transitive relations as upper-set masks ``up[x]``."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for choice in product((0, 1), repeat=len(pairs)):
        up = [1 << i for i in range(n)]
        for (i, j), on in zip(pairs, choice):
            if on:
                up[i] |= 1 << j
        # transitive iff every up-set is closed under taking up-sets
        if all(
            all(up[j] & ~up[i] == 0 for j in range(n) if up[i] >> j & 1) for i in range(n)
        ):
            yield up


def enumerate_topologies(u: Universe) -> Iterator[Topology]:
    """Every topology on ``u`` exactly once, in canonical family order.

    Uses the correspondence between finite topologies and preorders: the
    open sets are the up-closed sets of the specialisation preorder.
    """
    n = u.size
    if n > MAX_ENUM_POINTS:
        raise UniverseTooLarge(f"topology enumeration is limited to {MAX_ENUM_POINTS} points")
    families = []
    for up in _preorders(n):
        opens = [
            a
            for a in range(u.full + 1)
            if all(up[x] & ~a == 0 for x in range(n) if a >> x & 1)
        ]
        families.append(SetFamily(u, opens))
    families.sort(key=lambda f: f.characteristic)
    for f in families:
        yield Topology(f)
