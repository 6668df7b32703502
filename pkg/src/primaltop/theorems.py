"""Executable theorem catalog, exhaustive sweeps and counterexample search.

Each catalog entry is a generator over one space that yields the tuples of
subsets violating the stated property.  Direct entries are expected to yield
nothing on every valid space.  Converse entries (ids ``CONV-*``,
``INDEP-*`` and ``OPEN-*``) state the converse or independence claim as a
property and yield its counterexamples, so a witness there is a *finding*,
not a bug.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product
from typing import Callable, Iterable, Iterator

from .errors import UniverseTooLarge, UnknownTheorem
from .operators import _tables, kuratowski_check, operator_table
from .primal import Primal, PrimalSpace, enumerate_primals, is_primal, validate_primal_dual
from .sets import SetFamily, Subset, Universe
from .topology import (
    MAX_ENUM_POINTS,
    Topology,
    delta_closure_by_regular_closed,
    delta_closure_pointwise,
    delta_interior_pointwise,
    enumerate_topologies,
    is_hausdorff,
    is_regular_space,
    is_topology,
    topology_from_base,
)

MAX_EXHAUSTIVE_POINTS = 3


class Ctx:
    """Mask-level view of one primal space, shared by all checks."""

    def __init__(self, space: PrimalSpace):
        self.space = space
        self.t: Topology = space.topology
        self.P: Primal = space.primal
        self.u: Universe = space.universe
        self.n = self.u.size
        self.full = self.u.full
        self.rng = range(self.full + 1)
        tabs = _tables(space)
        self.d = tabs["diamond"]
        self.dr = tabs["diamond_R"]
        self.cl = tabs["cl_diamond"]
        self.clr = tabs["cl_diamond_R"]

    def c(self, a: int) -> int:
        return self.full & ~a

    def inP(self, a: int) -> bool:
        return bool(self.P.table >> a & 1)

    @cached_property
    def tau(self) -> frozenset:
        return frozenset(self.t.opens.masks)

    @cached_property
    def delta(self) -> frozenset:
        return frozenset(self.t.delta_open.masks)

    @cached_property
    def ro(self) -> tuple:
        return self.t.regular_open.masks

    @cached_property
    def tau_R(self) -> frozenset:
        return frozenset(a for a in self.rng if self.clr[self.c(a)] == self.c(a))

    @cached_property
    def tau_D(self) -> frozenset:
        return frozenset(a for a in self.rng if self.cl[self.c(a)] == self.c(a))

    def pairs(self) -> Iterator[tuple[int, int]]:
        return product(self.rng, repeat=2)


Found = Iterator[tuple[dict, str]]


@dataclass(frozen=True)
class Theorem:
    id: str
    description: str
    check: Callable[[Ctx], Found]
    kind: str = "direct"

    @property
    def is_direct(self) -> bool:
        return self.kind == "direct"


CATALOG: dict[str, Theorem] = {}


def theorem(tid: str, description: str, kind: str = "direct"):
    def register(fn):
        if tid in CATALOG:
            raise ValueError(f"duplicate theorem id {tid}")
        CATALOG[tid] = Theorem(tid, description, fn, kind)
        return fn

    return register


def converse(tid: str, description: str):
    return theorem(tid, description, kind="converse")


def get_theorem(tid: str) -> Theorem:
    try:
        return CATALOG[tid]
    except KeyError:
        raise UnknownTheorem(f"unknown theorem id {tid!r}", witness=(tid,)) from None


def _sub(a: int, b: int) -> bool:
    return a & ~b == 0


# ---------------------------------------------------------------- topology

@theorem("TOP-DUAL", "cl(A) = (int(A^c))^c")
def _top_dual(c: Ctx) -> Found:
    for a in c.rng:
        if c.t.closure_mask(a) != c.c(c.t.interior_mask(c.c(a))):
            yield {"A": a}, "closure is not dual to interior"


@theorem("TOP-RO", "regular-open sets are open and closed under finite intersection")
def _top_ro(c: Ctx) -> Found:
    for a in c.ro:
        if a not in c.tau:
            yield {"A": a}, "regular-open set is not open"
    for a, b in product(c.ro, repeat=2):
        if a & b not in c.ro:
            yield {"A": a, "B": b}, "intersection of regular-open sets is not regular open"


@theorem("TOP-DELTA", "delta-open sets are open and form a topology")
def _top_delta(c: Ctx) -> Found:
    for a in c.delta:
        if a not in c.tau:
            yield {"A": a}, "delta-open set is not open"
    if not is_topology(c.t.delta_open):
        yield {}, "delta-open family is not a topology"


@theorem("T2.1a", "delta-int(A) = {x : some U in RO(X,x) lies in A} = {x : some open U at x has int(cl(U)) in A}")
def _t21a(c: Ctx) -> Found:
    for a in c.rng:
        s = Subset(c.u, a)
        base = c.t.delta_interior_mask(a)
        for via in ("regular-open", "open"):
            if delta_interior_pointwise(c.t, s, via).bits != base:
                yield {"A": a}, f"pointwise delta-interior via {via} differs"


@theorem("T2.1b", "delta-cl(A) = {x : every U in RO(X,x) meets A} = {x : int(cl(U)) meets A for every open U at x}")
def _t21b(c: Ctx) -> Found:
    for a in c.rng:
        s = Subset(c.u, a)
        base = delta_closure_by_regular_closed(c.t, s).bits
        for via in ("regular-open", "open"):
            if delta_closure_pointwise(c.t, s, via).bits != base:
                yield {"A": a}, f"pointwise delta-closure via {via} differs"


@theorem("T2.1c", "delta-cl(A^c) = (delta-int(A))^c")
def _t21c(c: Ctx) -> Found:
    for a in c.rng:
        if c.t.delta_closure_mask(c.c(a)) != c.c(c.t.delta_interior_mask(a)):
            yield {"A": a}, "duality fails"


@theorem("T2.1d", "delta-int(A^c) = (delta-cl(A))^c")
def _t21d(c: Ctx) -> Found:
    for a in c.rng:
        if c.t.delta_interior_mask(c.c(a)) != c.c(c.t.delta_closure_mask(a)):
            yield {"A": a}, "duality fails"


# ------------------------------------------------------------------ primal

@theorem("C2.3", "the primal conditions and their complement forms agree")
def _c23(c: Ctx) -> Found:
    if is_primal(c.P.family) != validate_primal_dual(c.P.family):
        yield {}, "primal and dual-form validation disagree"


# --------------------------------------------------------- diamond_R facts

@theorem("T3.6a", "A^⋄ ⊆ A^⋄_R")
def _t36a(c: Ctx) -> Found:
    for a in c.rng:
        if not _sub(c.d[a], c.dr[a]):
            yield {"A": a}, "diamond not inside diamond_R"


@theorem("T3.6b", "A delta-closed implies A^⋄_R ⊆ A")
def _t36b(c: Ctx) -> Found:
    for a in c.rng:
        if c.c(a) in c.delta and not _sub(c.dr[a], a):
            yield {"A": a}, "diamond_R escapes a delta-closed set"


@theorem("T3.6c", "∅^⋄_R = ∅")
def _t36c(c: Ctx) -> Found:
    if c.dr[0]:
        yield {"A": 0}, "diamond_R of the empty set is nonempty"


@theorem("T3.6d", "A^⋄_R is delta-closed")
def _t36d(c: Ctx) -> Found:
    for a in c.rng:
        if c.c(c.dr[a]) not in c.delta:
            yield {"A": a}, "diamond_R value is not delta-closed"


@theorem("T3.6e", "(A^⋄_R)^⋄_R ⊆ A^⋄_R")
def _t36e(c: Ctx) -> Found:
    for a in c.rng:
        if not _sub(c.dr[c.dr[a]], c.dr[a]):
            yield {"A": a}, "iterated diamond_R grows"


@theorem("T3.6f", "A ⊆ B implies A^⋄_R ⊆ B^⋄_R")
def _t36f(c: Ctx) -> Found:
    for a, b in c.pairs():
        if _sub(a, b) and not _sub(c.dr[a], c.dr[b]):
            yield {"A": a, "B": b}, "diamond_R not monotone"


@theorem("T3.6g", "(A ∪ B)^⋄_R = A^⋄_R ∪ B^⋄_R")
def _t36g(c: Ctx) -> Found:
    for a, b in c.pairs():
        if c.dr[a | b] != c.dr[a] | c.dr[b]:
            yield {"A": a, "B": b}, "diamond_R not additive"


@theorem("T3.6h", "(A ∩ B)^⋄_R ⊆ A^⋄_R ∩ B^⋄_R")
def _t36h(c: Ctx) -> Found:
    for a, b in c.pairs():
        if not _sub(c.dr[a & b], c.dr[a] & c.dr[b]):
            yield {"A": a, "B": b}, "diamond_R of intersection too large"


@theorem("TMT", "A delta-open implies A ∩ B^⋄_R ⊆ (A ∩ B)^⋄_R")
def _tmt(c: Ctx) -> Found:
    for a in c.delta:
        for b in c.rng:
            if not _sub(a & c.dr[b], c.dr[a & b]):
                yield {"A": a, "B": b}, "delta-open set does not pass through diamond_R"


@theorem("TEQ", "X^⋄_R = X iff RC(X)∖{X} ⊆ P iff A ⊆ A^⋄_R for every regular-open A")
def _teq(c: Ctx) -> Found:
    first = c.dr[c.full] == c.full
    second = all(c.inP(r) for r in c.t.regular_closed.masks if r != c.full)
    third = all(_sub(a, c.dr[a]) for a in c.ro)
    if not first == second == third:
        yield {}, f"conditions disagree: {first}, {second}, {third}"


@theorem("T5", "A^⋄_R ≠ ∅ implies A^c ∈ P")
def _t5(c: Ctx) -> Found:
    for a in c.rng:
        if c.dr[a] and not c.inP(c.c(a)):
            yield {"A": a}, "nonempty diamond_R with complement outside the primal"


@theorem("C20", "A^c ∉ P implies A^⋄_R = ∅")
def _c20(c: Ctx) -> Found:
    for a in c.rng:
        if not c.inP(c.c(a)) and c.dr[a]:
            yield {"A": a}, "complement outside the primal but diamond_R nonempty"


@theorem("T4", "A^⋄_R ∖ B^⋄_R = (A ∖ B)^⋄_R ∖ B^⋄_R")
def _t4(c: Ctx) -> Found:
    for a, b in c.pairs():
        if c.dr[a] & ~c.dr[b] != c.dr[a & ~b] & ~c.dr[b]:
            yield {"A": a, "B": b}, "difference identity fails"


@theorem("T14", "B^c ∉ P implies (A ∪ B)^⋄_R = A^⋄_R = (A ∖ B)^⋄_R")
def _t14(c: Ctx) -> Found:
    for a, b in c.pairs():
        if not c.inP(c.c(b)) and not c.dr[a | b] == c.dr[a] == c.dr[a & ~b]:
            yield {"A": a, "B": b}, "negligible set changes diamond_R"


# ------------------------------------------------------------ cl_diamond_R

@theorem("T4.4a", "cl^⋄_R(∅) = ∅")
def _t44a(c: Ctx) -> Found:
    if c.clr[0]:
        yield {"A": 0}, "closure of the empty set is nonempty"


@theorem("T4.4b", "cl^⋄_R(X) = X")
def _t44b(c: Ctx) -> Found:
    if c.clr[c.full] != c.full:
        yield {"A": c.full}, "closure of X is not X"


@theorem("T4.4c", "A ⊆ cl^⋄(A) ⊆ cl^⋄_R(A)")
def _t44c(c: Ctx) -> Found:
    for a in c.rng:
        if not (_sub(a, c.cl[a]) and _sub(c.cl[a], c.clr[a])):
            yield {"A": a}, "closure chain broken"


@theorem("T4.4d", "A ⊆ B implies cl^⋄_R(A) ⊆ cl^⋄_R(B)")
def _t44d(c: Ctx) -> Found:
    for a, b in c.pairs():
        if _sub(a, b) and not _sub(c.clr[a], c.clr[b]):
            yield {"A": a, "B": b}, "closure not monotone"


@theorem("T4.4e", "cl^⋄_R(A ∪ B) = cl^⋄_R(A) ∪ cl^⋄_R(B)")
def _t44e(c: Ctx) -> Found:
    for a, b in c.pairs():
        if c.clr[a | b] != c.clr[a] | c.clr[b]:
            yield {"A": a, "B": b}, "closure not additive"


@theorem("T4.4f", "cl^⋄_R(cl^⋄_R(A)) = cl^⋄_R(A)")
def _t44f(c: Ctx) -> Found:
    for a in c.rng:
        if c.clr[c.clr[a]] != c.clr[a]:
            yield {"A": a}, "closure not idempotent"


@theorem("C4.5", "cl^⋄_R satisfies the four Kuratowski closure axioms")
def _c45(c: Ctx) -> Found:
    rep = kuratowski_check(operator_table(c.space, "cl_diamond_R"))
    for name, res in rep.axioms.items():
        if not res.passed:
            w = res.witness
            subs = {"A": w[0].bits, "B": w[1].bits} if isinstance(w, tuple) else {"A": w.bits}
            yield subs, f"axiom {name} fails"


# ------------------------------------------------------ induced topologies

@theorem("TAU", "τ_δ ⊆ τ_R^⋄ ⊆ τ^⋄, τ_δ ⊆ τ ⊆ τ^⋄, and all four are topologies")
def _tau(c: Ctx) -> Found:
    chain = [
        ("tau_delta", c.delta, "tau_diamond_R", c.tau_R),
        ("tau_diamond_R", c.tau_R, "tau_diamond", c.tau_D),
        ("tau_delta", c.delta, "tau", c.tau),
        ("tau", c.tau, "tau_diamond", c.tau_D),
    ]
    for lo_name, lo, hi_name, hi in chain:
        for a in sorted(lo - hi):
            yield {"A": a}, f"in {lo_name} but not in {hi_name}"
    for name, fam in (("tau_diamond_R", c.tau_R), ("tau_diamond", c.tau_D)):
        if not is_topology(SetFamily(c.u, fam)):
            yield {}, f"{name} is not a topology"


@theorem("TMEM", "A ∈ τ_R^⋄ iff every x in A has U ∈ RO(X,x) with U^c ∪ A ∉ P; A ∉ P implies A ∈ τ_R^⋄")
def _tmem(c: Ctx) -> Found:
    for a in c.rng:
        pointwise = all(
            any(not c.inP(c.c(u) | a) for u in c.t.ro_nbhd_masks(x))
            for x in range(c.n)
            if a >> x & 1
        )
        if pointwise != (a in c.tau_R):
            yield {"A": a}, "membership characterisation fails"
        if not c.inP(a) and a not in c.tau_R:
            yield {"A": a}, "non-member of the primal is not τ_R^⋄-open"


@theorem("TEXT", "P = ∅ implies τ_R^⋄ = 2^X; P = 2^X∖{X} implies τ_R^⋄ = τ_δ")
def _text(c: Ctx) -> Found:
    if c.P.table == 0 and len(c.tau_R) != c.full + 1:
        yield {}, "empty primal but τ_R^⋄ is not the powerset"
    if c.P.table == (1 << c.full) - 1 and c.tau_R != c.delta:
        yield {}, "maximal primal but τ_R^⋄ differs from τ_δ"


@theorem("TBASE", "{T ∩ P : T ∈ τ_δ, P ∉ P} is a base for τ_R^⋄")
def _tbase(c: Ctx) -> Found:
    outside = [m for m in c.rng if not c.inP(m)]
    base = SetFamily(c.u, {t & p for t in c.delta for p in outside})
    generated = frozenset(topology_from_base(base).opens.masks)
    for a in sorted(generated ^ c.tau_R):
        yield {"A": a}, "generated topology differs from τ_R^⋄"


@lru_cache(maxsize=None)
def _primals_of(u: Universe) -> tuple:
    return tuple(enumerate_primals(u))


@theorem("TMONO", "P ⊆ Q implies τ_R^⋄(Q) ⊆ τ_R^⋄(P)")
def _tmono(c: Ctx) -> Found:
    for q in _primals_of(c.u):
        if not c.P <= q or q == c.P:
            continue
        other = Ctx(PrimalSpace(c.t, q))
        for a in sorted(other.tau_R - c.tau_R):
            yield {"A": a}, f"open under the larger primal {q.family}"


@theorem("REG", "regular space implies A^⋄ = A^⋄_R, cl^⋄ = cl^⋄_R and τ^⋄ = τ_R^⋄")
def _reg(c: Ctx) -> Found:
    if not is_regular_space(c.t):
        return
    for a in c.rng:
        if c.d[a] != c.dr[a] or c.cl[a] != c.clr[a]:
            yield {"A": a}, "operators differ on a regular space"
    if c.tau_D != c.tau_R:
        yield {}, "induced topologies differ on a regular space"


@theorem("REG-HAUS", "a finite Hausdorff space is discrete, hence regular")
def _reg_haus(c: Ctx) -> Found:
    if is_hausdorff(c.t) and (len(c.tau) != c.full + 1 or not is_regular_space(c.t)):
        yield {}, "Hausdorff but not discrete and regular"


# -------------------------------------------------------- converse search

@converse("CONV-INCL-a", "A ⊆ A^⋄_R for all A (refutable)")
def _conv_incl_a(c: Ctx) -> Found:
    for a in c.rng:
        if not _sub(a, c.dr[a]):
            yield {"A": a}, f"A^⋄_R = {c.u.render(c.dr[a])}"


@converse("CONV-INCL-b", "A^⋄_R ⊆ A for all A (refutable)")
def _conv_incl_b(c: Ctx) -> Found:
    for a in c.rng:
        if not _sub(c.dr[a], a):
            yield {"A": a}, f"A^⋄_R = {c.u.render(c.dr[a])}"


@converse("CONV-T3.6h", "(A ∩ B)^⋄_R = A^⋄_R ∩ B^⋄_R (refutable)")
def _conv_t36h(c: Ctx) -> Found:
    for a, b in c.pairs():
        left = c.dr[a] & c.dr[b]
        right = c.dr[a & b]
        if left != right:
            yield {"A": a, "B": b}, (
                f"A^⋄_R ∩ B^⋄_R = {c.u.render(left)}, (A ∩ B)^⋄_R = {c.u.render(right)}"
            )


@converse("CONV-KUR-DR", "(·)^⋄_R is a Kuratowski closure operator (refutable)")
def _conv_kur_dr(c: Ctx) -> Found:
    rep = kuratowski_check(operator_table(c.space, "diamond_R"))
    for name, res in rep.axioms.items():
        for w in res.witnesses:
            subs = {"A": w[0].bits, "B": w[1].bits} if isinstance(w, tuple) else {"A": w.bits}
            yield subs, f"axiom {name} fails"


@converse("OPEN-CLD-KUR", "cl^⋄ is a Kuratowski closure operator (informative, not claimed)")
def _open_cld_kur(c: Ctx) -> Found:
    rep = kuratowski_check(operator_table(c.space, "cl_diamond"))
    for name, res in rep.axioms.items():
        for w in res.witnesses:
            subs = {"A": w[0].bits, "B": w[1].bits} if isinstance(w, tuple) else {"A": w.bits}
            yield subs, f"axiom {name} fails"


@converse("CONV-T3.3b", "A ∈ τ_R^⋄ implies A ∉ P, for nonempty A (refutable)")
def _conv_t33b(c: Ctx) -> Found:
    for a in sorted(c.tau_R):
        if a and c.inP(a):
            yield {"A": a}, "τ_R^⋄-open and a member of the primal"


@converse("CONV-TEXT-a", "τ_R^⋄ = 2^X implies P = ∅ (refutable)")
def _conv_text_a(c: Ctx) -> Found:
    if len(c.tau_R) == c.full + 1 and c.P.table != 0:
        yield {}, "τ_R^⋄ = 2^X with a nonempty primal"


@converse("CONV-TEXT-b", "τ_R^⋄ = τ_δ implies P = 2^X∖{X} (refutable)")
def _conv_text_b(c: Ctx) -> Found:
    if c.tau_R == c.delta and c.P.table != (1 << c.full) - 1:
        yield {}, "τ_R^⋄ = τ_δ with a primal other than 2^X∖{X}"


@converse("CONV-TAU-a", "τ_R^⋄ ⊆ τ_δ (refutable)")
def _conv_tau_a(c: Ctx) -> Found:
    for a in sorted(c.tau_R - c.delta):
        yield {"A": a}, "τ_R^⋄-open but not τ_δ-open"


@converse("CONV-TAU-b", "τ^⋄ ⊆ τ_R^⋄ (refutable)")
def _conv_tau_b(c: Ctx) -> Found:
    for a in sorted(c.tau_D - c.tau_R):
        yield {"A": a}, "τ^⋄-open but not τ_R^⋄-open"


@converse("CONV-DIAG-a", "τ ⊆ τ_δ (refutable)")
def _conv_diag_a(c: Ctx) -> Found:
    for a in sorted(c.tau - c.delta):
        yield {"A": a}, "τ-open but not τ_δ-open"


@converse("CONV-DIAG-b", "τ^⋄ ⊆ τ (outcome not asserted)")
def _conv_diag_b(c: Ctx) -> Found:
    for a in sorted(c.tau_D - c.tau):
        yield {"A": a}, "τ^⋄-open but not τ-open"


@converse("INDEP-TAU", "τ and τ_R^⋄ are comparable (refutable)")
def _indep_tau(c: Ctx) -> Found:
    for a in sorted(c.tau - c.tau_R):
        for b in sorted(c.tau_R - c.tau):
            yield {"A": a, "B": b}, "A is τ-open but not τ_R^⋄-open; B is τ_R^⋄-open but not τ-open"


@converse("CONV-REG", "A^⋄ = A^⋄_R on every space (refutable without regularity)")
def _conv_reg(c: Ctx) -> Found:
    for a in c.rng:
        if c.d[a] != c.dr[a]:
            yield {"A": a}, (
                f"A^⋄ = {c.u.render(c.d[a])}, A^⋄_R = {c.u.render(c.dr[a])}"
            )


DIRECT_IDS = tuple(k for k, v in CATALOG.items() if v.is_direct)
CONVERSE_IDS = tuple(k for k, v in CATALOG.items() if not v.is_direct)


# ----------------------------------------------------------------- reports

@dataclass
class Witness:
    topology: SetFamily
    primal: SetFamily
    subsets: dict
    note: str = ""
    space: str | None = None

    def to_dict(self) -> dict:
        return {
            "space": self.space,
            "topology": self.topology.render(),
            "primal": self.primal.render(),
            "subsets": {k: str(v) for k, v in self.subsets.items()},
            "note": self.note,
        }


@dataclass
class CheckReport:
    theorem_id: str
    kind: str
    n: int
    strategy: str
    spaces_checked: int = 0
    failures: int = 0
    witnesses: list = field(default_factory=list)
    seed: int | None = None
    elapsed: float = 0.0

    @property
    def status(self) -> str:
        return "fail" if self.witnesses else "pass"

    @property
    def ok(self) -> bool:
        """Direct theorems must pass; converse searches never break a run."""
        return self.kind != "direct" or self.status == "pass"

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "theorem": self.theorem_id,
            "kind": self.kind,
            "n": self.n,
            "strategy": self.strategy,
            "seed": self.seed,
            "spaces_checked": self.spaces_checked,
            "failures": self.failures,
            "status": self.status,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out


def _collect(th: Theorem, space: PrimalSpace, ctx: Ctx, report: CheckReport,
             limit: int | None, first_only: bool = False) -> None:
    u = space.universe
    for subs, note in th.check(ctx):
        report.failures += 1
        if limit is None or len(report.witnesses) < limit:
            report.witnesses.append(Witness(
                topology=space.topology.opens,
                primal=space.primal.family,
                subsets={k: Subset(u, m) for k, m in subs.items()},
                note=note,
                space=space.name,
            ))
        if first_only:
            return


def check_theorem(tid: str, space: PrimalSpace, limit: int | None = None) -> CheckReport:
    """Evaluate one catalog entry on one space, collecting every witness
    (up to ``limit``) in canonical order."""
    th = get_theorem(tid)
    start = time.perf_counter()
    report = CheckReport(tid, th.kind, space.universe.size, "single")
    report.spaces_checked = 1
    _collect(th, space, Ctx(space), report, limit)
    report.elapsed = time.perf_counter() - start
    return report


@dataclass(frozen=True)
class Strategy:
    kind: str = "exhaustive"
    k: int = 0
    seed: int | None = None

    @classmethod
    def exhaustive(cls) -> "Strategy":
        return cls("exhaustive")

    @classmethod
    def sampled(cls, k: int, seed: int) -> "Strategy":
        return cls("sampled", k, seed)

    def label(self) -> str:
        return "exhaustive" if self.kind == "exhaustive" else f"sampled({self.k})"


@lru_cache(maxsize=None)
def topologies_of(n: int) -> tuple:
    return tuple(enumerate_topologies(Universe.of_size(n)))


def _check_bounds(n: int, strategy: Strategy) -> None:
    if not 1 <= n <= MAX_ENUM_POINTS:
        raise UniverseTooLarge(f"sweeps support 1..{MAX_ENUM_POINTS} points, got {n}")
    if strategy.kind == "exhaustive" and n > MAX_EXHAUSTIVE_POINTS:
        raise UniverseTooLarge(
            f"exhaustive sweeps are limited to {MAX_EXHAUSTIVE_POINTS} points; use a sampled strategy"
        )


def spaces(n: int, strategy: Strategy) -> Iterator[PrimalSpace]:
    """The (topology, primal) grid on ``n`` points in canonical order, or a
    seeded sample of it (drawn without replacement, then sorted)."""
    _check_bounds(n, strategy)
    tops = topologies_of(n)
    prims = _primals_of(Universe.of_size(n))
    grid = len(tops) * len(prims)
    if strategy.kind == "exhaustive":
        picks: Iterable[int] = range(grid)
    elif strategy.kind == "sampled":
        if strategy.seed is None:
            raise ValueError("a sampled strategy needs a seed")
        rnd = random.Random(strategy.seed)
        picks = sorted(rnd.sample(range(grid), min(strategy.k, grid)))
    else:
        raise ValueError(f"unknown strategy {strategy.kind!r}")
    for i in picks:
        t, p = divmod(i, len(prims))
        yield PrimalSpace(tops[t], prims[p])


def _family_sweep(report: CheckReport, n: int, strategy: Strategy, limit: int) -> None:
    """Primal-condition equivalence over raw families instead of spaces."""
    u = Universe.of_size(n)
    size = u.full + 1
    if strategy.kind == "exhaustive":
        chis: Iterable[int] = range(1 << size)
    else:
        rnd = random.Random(strategy.seed)
        chis = [rnd.getrandbits(size) for _ in range(strategy.k)]
        chis += [p.family.characteristic for p in _primals_of(u)]
    for chi in chis:
        fam = SetFamily(u, (m for m in range(size) if chi >> m & 1))
        report.spaces_checked += 1
        if is_primal(fam) != validate_primal_dual(fam):
            report.failures += 1
            if len(report.witnesses) < limit:
                report.witnesses.append(Witness(SetFamily(u, [0, u.full]), fam, {},
                                                "primal and dual-form validation disagree"))


def run_sweep(ids: Iterable[str], n: int, strategy: Strategy,
              limit: int = 5) -> list[CheckReport]:
    """Run several catalog entries over one grid, sharing the per-space work.

    ``C2.3`` is swept over raw families on ``n`` points rather than over
    spaces.
    """
    _check_bounds(n, strategy)
    theorems = [get_theorem(i) for i in ids]
    reports = {
        th.id: CheckReport(th.id, th.kind, n, strategy.label(), seed=strategy.seed)
        for th in theorems
    }
    start = time.perf_counter()
    space_ths = [th for th in theorems if th.id != "C2.3"]
    if "C2.3" in reports:
        _family_sweep(reports["C2.3"], n, strategy, limit)
    if space_ths:
        for space in spaces(n, strategy):
            ctx = Ctx(space)
            for th in space_ths:
                rep = reports[th.id]
                rep.spaces_checked += 1
                _collect(th, space, ctx, rep, limit)
    elapsed = time.perf_counter() - start
    for rep in reports.values():
        rep.elapsed = elapsed
    return [reports[th.id] for th in theorems]


def sweep(tid: str, n: int, strategy: Strategy | None = None, limit: int = 5) -> CheckReport:
    return run_sweep([tid], n, strategy or Strategy.exhaustive(), limit)[0]


def find_counterexample(tid: str, n: int, strategy: Strategy | None = None) -> CheckReport:
    """First witness for a converse/independence entry, in canonical
    topology, primal, subset order."""
    th = get_theorem(tid)
    if th.is_direct:
        raise UnknownTheorem(f"{tid} is not a converse or independence claim", witness=(tid,))
    strategy = strategy or Strategy.exhaustive()
    report = CheckReport(tid, th.kind, n, strategy.label(), seed=strategy.seed)
    start = time.perf_counter()
    for space in spaces(n, strategy):
        report.spaces_checked += 1
        _collect(th, space, Ctx(space), report, limit=1, first_only=True)
        if report.witnesses:
            break
    report.elapsed = time.perf_counter() - start
    return report
