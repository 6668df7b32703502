"""Diamond operators, primal closure operators and the topologies they induce.

Everything is evaluated from the pointwise definitions: ``x`` belongs to
``A^⋄`` (resp. ``A^⋄_R``) when ``A^c ∪ U^c`` is in the primal for every open
(resp. regular-open) ``U`` containing ``x``.  An :class:`OperatorTable`
holds the value of an operator on every subset of the universe.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .errors import InvariantBreach, TopologyAxiomError, UniverseMismatch
from .primal import PrimalSpace
from .sets import SetFamily, Subset, Universe
from .topology import Topology, topology_from_base, validate_topology

OPERATOR_NAMES = ("diamond", "diamond_R", "cl_diamond", "cl_diamond_R")


@dataclass(frozen=True)
class OperatorTable:
    name: str
    universe: Universe
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.universe.full + 1:
            raise ValueError("operator table must cover the whole powerset")

    def __getitem__(self, a: Subset) -> Subset:
        if a.universe != self.universe:
            raise UniverseMismatch("subset from a different universe")
        return Subset(self.universe, self.values[a.bits])

    def __call__(self, a: Subset) -> Subset:
        return self[a]

    def mask(self, a: int) -> int:
        return self.values[a]

    def items(self):
        u = self.universe
        return [(Subset(u, a), Subset(u, v)) for a, v in enumerate(self.values)]

    @classmethod
    def from_function(cls, name: str, universe: Universe, fn: Callable[[Subset], Subset]):
        return cls(name, universe, tuple(fn(Subset(universe, a)).bits for a in range(universe.full + 1)))


def _diamond_mask(space: PrimalSpace, a: int, regular: bool) -> int:
    t = space.topology
    table = space.primal.table
    full = t.universe.full
    ac = full & ~a
    nbhd = t.ro_nbhd_masks if regular else t.nbhd_masks
    out = 0
    for x in range(t.universe.size):
        if all(table >> (ac | full & ~u) & 1 for u in nbhd(x)):
            out |= 1 << x
    return out


@lru_cache(maxsize=8192)
def _tables(space: PrimalSpace) -> dict:
    full = space.universe.full
    d = tuple(_diamond_mask(space, a, False) for a in range(full + 1))
    dr = tuple(_diamond_mask(space, a, True) for a in range(full + 1))
    return {
        "diamond": d,
        "diamond_R": dr,
        "cl_diamond": tuple(a | v for a, v in enumerate(d)),
        "cl_diamond_R": tuple(a | v for a, v in enumerate(dr)),
    }


def _bits(space: PrimalSpace, a: Subset) -> int:
    if a.universe != space.universe:
        raise UniverseMismatch("subset and space belong to different universes")
    return a.bits


def diamond(space: PrimalSpace, a: Subset) -> Subset:
    return Subset(space.universe, _diamond_mask(space, _bits(space, a), regular=False))


def diamond_R(space: PrimalSpace, a: Subset) -> Subset:
    return Subset(space.universe, _diamond_mask(space, _bits(space, a), regular=True))


def cl_diamond(space: PrimalSpace, a: Subset) -> Subset:
    return a | diamond(space, a)


def cl_diamond_R(space: PrimalSpace, a: Subset) -> Subset:
    return a | diamond_R(space, a)


def operator_table(space: PrimalSpace, name: str) -> OperatorTable:
    if name not in OPERATOR_NAMES:
        raise ValueError(f"unknown operator {name!r}; expected one of {OPERATOR_NAMES}")
    return OperatorTable(name, space.universe, _tables(space)[name])


def diamond_table(space: PrimalSpace) -> OperatorTable:
    return operator_table(space, "diamond")


def diamond_R_table(space: PrimalSpace) -> OperatorTable:
    return operator_table(space, "diamond_R")


def cl_diamond_table(space: PrimalSpace) -> OperatorTable:
    return operator_table(space, "cl_diamond")


def cl_diamond_R_table(space: PrimalSpace) -> OperatorTable:
    return operator_table(space, "cl_diamond_R")


def closed_sets_family(table: OperatorTable) -> SetFamily:
    """Subsets fixed by a closure-like operator."""
    return SetFamily(table.universe, (a for a, v in enumerate(table.values) if v == a))


def open_sets_family(table: OperatorTable) -> SetFamily:
    """``{A : op(A^c) = A^c}``."""
    full = table.universe.full
    return SetFamily(
        table.universe, (a for a in range(full + 1) if table.values[full & ~a] == full & ~a)
    )


def _checked_topology(f: SetFamily, what: str) -> SetFamily:
    try:
        validate_topology(f)
    except TopologyAxiomError as exc:
        raise InvariantBreach(f"{what} is not a topology: {exc}") from exc
    return f


def tau_diamond_R(space: PrimalSpace) -> SetFamily:
    return _checked_topology(open_sets_family(cl_diamond_R_table(space)), "tau_diamond_R")


def tau_diamond(space: PrimalSpace) -> SetFamily:
    return _checked_topology(open_sets_family(cl_diamond_table(space)), "tau_diamond")


def base_family(space: PrimalSpace) -> SetFamily:
    """``{T ∩ P : T delta-open, P not in the primal}``."""
    u = space.universe
    outside = [m for m in range(u.full + 1) if m not in space.primal]
    return SetFamily(u, {t & p for t in space.topology.delta_open.masks for p in outside})


def generated_topology(space: PrimalSpace) -> Topology:
    return topology_from_base(base_family(space))


@dataclass
class AxiomResult:
    axiom: str
    witnesses: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.witnesses

    @property
    def witness(self):
        return self.witnesses[0] if self.witnesses else None


@dataclass
class KuratowskiReport:
    operator: str
    axioms: dict

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.axioms.values())

    def failed(self) -> list[str]:
        return [name for name, r in self.axioms.items() if not r.passed]


KURATOWSKI_AXIOMS = ("empty", "extensive", "additive", "idempotent")


def kuratowski_check(table: OperatorTable) -> KuratowskiReport:
    """Check the four closure axioms on a full operator table.

    Each failing axiom lists every witness in canonical order: subsets ``A``
    for the unary axioms, pairs ``(A, B)`` with ``A <= B`` numerically for
    additivity.
    """
    u = table.universe
    v = table.values
    rng = range(u.full + 1)
    S = lambda m: Subset(u, m)  # noqa: E731
    res = {name: AxiomResult(name) for name in KURATOWSKI_AXIOMS}
    if v[0] != 0:
        res["empty"].witnesses.append(S(0))
    for a in rng:
        if a & ~v[a]:
            res["extensive"].witnesses.append(S(a))
        if v[v[a]] != v[a]:
            res["idempotent"].witnesses.append(S(a))
    for a in rng:
        for b in range(a, u.full + 1):
            if v[a | b] != v[a] | v[b]:
                res["additive"].witnesses.append((S(a), S(b)))
    return KuratowskiReport(table.name, res)


@dataclass
class InducedTopologyReport:
    universe: Universe
    tau: SetFamily
    tau_delta: SetFamily
    tau_diamond_R: SetFamily
    tau_diamond: SetFamily
    base: SetFamily

    @property
    def comparisons(self) -> dict[str, bool]:
        fams = {
            "tau": self.tau,
            "tau_delta": self.tau_delta,
            "tau_diamond_R": self.tau_diamond_R,
            "tau_diamond": self.tau_diamond,
        }
        return {
            f"{x}<={y}": fams[x] <= fams[y]
            for x in fams
            for y in fams
            if x != y
        }


def induced_report(space: PrimalSpace) -> InducedTopologyReport:
    return InducedTopologyReport(
        universe=space.universe,
        tau=space.topology.opens,
        tau_delta=space.topology.delta_open,
        tau_diamond_R=tau_diamond_R(space),
        tau_diamond=tau_diamond(space),
        base=base_family(space),
    )
