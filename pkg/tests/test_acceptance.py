"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line that pytest prints in the
"acceptance criteria" section of its terminal summary.
"""

import warnings

import oracle
from conftest import ACCEPTANCE_RESULTS, EX_A, EX_B, EX_C, EX_D, EX_E, EX_F, space
from primaltop.operators import (
    base_family,
    cl_diamond_R_table,
    diamond_R,
    diamond_R_table,
    diamond_table,
    kuratowski_check,
    tau_diamond,
    tau_diamond_R,
)
from primaltop.primal import enumerate_primals
from primaltop.sets import Universe, powerset
from primaltop.theorems import DIRECT_IDS, Strategy, run_sweep, spaces
from primaltop.topology import BaseConditionWarning, enumerate_topologies, topology_from_base


def record(name: str, ok: bool, detail: str) -> None:
    ACCEPTANCE_RESULTS.append((name, ok, detail))
    assert ok, f"{name}: {detail}"


U3 = Universe(("a", "b", "c"))


def S(s):
    return U3.subset(s)


def fam(*sets):
    return {S(s) for s in sets}


def all_spaces(max_n=3):
    for n in range(1, max_n + 1):
        yield from spaces(n, Strategy.exhaustive())


def test_01_ex_a_diamond_R_empty():
    got = diamond_R(space(*EX_A), S("bc"))
    ok = got == S("") and not S("bc") <= got
    record("1-EX-A", ok, f"diamond_R({{b,c}}) = {got}")


def test_02_ex_b_diamond_R_whole():
    got = diamond_R(space(*EX_B), S("a"))
    record("2-EX-B", got == S("abc"), f"diamond_R({{a}}) = {got}")


def test_03_ex_c_strictness():
    c = space(*EX_C)
    b_, c_, bc = diamond_R(c, S("b")), diamond_R(c, S("c")), diamond_R(c, S("b") & S("c"))
    ok = b_ == S("b") and c_ == S("bc") and bc == S("") and (b_ & c_) != bc
    record("3-EX-C", ok, f"{b_}, {c_}, {bc}")


def test_04_ex_d_induced_topologies():
    d = space(*EX_D)
    t, td = d.topology.opens, d.topology.delta_open
    tr, tdia = tau_diamond_R(d), tau_diamond(d)
    ok = (
        set(td) == fam("", "abc")
        and set(tr) == fam("", "abc", "c", "ac", "bc")
        and set(tdia) == set(powerset(U3))
        and S("c") in tr and S("c") not in td
        and S("a") in tdia and S("a") not in tr
        and S("c") in tr and S("c") not in t
        and S("b") in t and S("b") not in tr
    )
    record("4-EX-D", ok, f"tau_delta={td.render()} tau_R={tr.render()} |tau_diamond|={len(tdia)}")


def test_05_extreme_primal_converses():
    e, f = space(*EX_E), space(*EX_F)
    full = len(list(powerset(U3)))
    e_ok = len(tau_diamond_R(e)) == full and len(e.primal.family) > 0
    f_ok = (
        f.topology.opens == f.topology.delta_open == tau_diamond_R(f)
        and len(f.primal.family) != full - 1
    )
    record("5-EX-E/F", e_ok and f_ok, f"EX-E powerset={e_ok} EX-F tau=tau_delta=tau_R={f_ok}")


def test_06_kuratowski():
    bad = []
    count = 0
    for s in all_spaces():
        count += 1
        rep = kuratowski_check(cl_diamond_R_table(s))
        if not rep.passed:
            bad.append((s, rep.failed()))
    raw = kuratowski_check(diamond_R_table(space(*EX_A)))
    ext = raw.axioms["extensive"]
    ok = not bad and not ext.passed and S("bc") in ext.witnesses
    record("6-Kuratowski", ok,
           f"{count} spaces, {len(bad)} failures; EX-A extensivity witnesses "
           f"{[str(w) for w in ext.witnesses]}")


def test_07_direct_sweep_n3():
    reports = run_sweep(DIRECT_IDS, 3, Strategy.exhaustive())
    failed = [r.theorem_id for r in reports if r.status != "pass"]
    checked = max(r.spaces_checked for r in reports if r.theorem_id != "C2.3")
    ok = not failed and checked == 29 * 8
    record("7-sweep-n3", ok, f"{len(reports)} properties over {checked} spaces, failed={failed}")


def _base_theorem_holds(s) -> bool:
    with warnings.catch_warnings():
        warnings.simplefilter("error", BaseConditionWarning)
        return topology_from_base(base_family(s)).opens == tau_diamond_R(s)


def test_08_base_theorem():
    small = [s for s in all_spaces() if not _base_theorem_holds(s)]
    sample = list(spaces(4, Strategy.sampled(1000, 7)))
    large = [s for s in sample if not _base_theorem_holds(s)]
    ok = not small and not large and len(sample) == 1000
    record("8-base", ok, f"n<=3 failures={len(small)}; n=4 seed=7 k={len(sample)} failures={len(large)}")


def _o(fam_):
    return {frozenset(x.names()) for x in fam_}


def test_09_oracle_equivalence():
    mismatches = 0
    count = 0
    for s in all_spaces():
        count += 1
        pts = s.universe.points
        opens = [frozenset(x.names()) for x in s.topology.opens]
        prim = {frozenset(x.names()) for x in s.primal.family}
        if _o(s.topology.regular_open) != oracle.regular_open(pts, opens):
            mismatches += 1
        if _o(s.topology.delta_open) != oracle.delta_open(pts, opens):
            mismatches += 1
        d, dr = diamond_table(s), diamond_R_table(s)
        for a in powerset(s.universe):
            fa = frozenset(a.names())
            mismatches += set(d[a].names()) != oracle.diamond(pts, opens, prim, fa)
            mismatches += set(dr[a].names()) != oracle.diamond_R(pts, opens, prim, fa)
    record("9-oracle", mismatches == 0, f"{count} spaces, {mismatches} mismatches")


def test_10_enumeration_regressions(regressions):
    tops = {str(n): len(list(enumerate_topologies(Universe.of_size(n)))) for n in range(1, 5)}
    prims = {str(n): len(list(enumerate_primals(Universe.of_size(n)))) for n in range(1, 4)}
    brute = {str(n): len(oracle.all_primals(Universe.of_size(n).points)) for n in range(1, 4)}
    ok = (
        tops == regressions["topology_counts"] == {"1": 1, "2": 4, "3": 29, "4": 355}
        and prims == regressions["primal_counts"] == brute
    )
    record("10-enumeration", ok, f"topologies={tops} primals={prims}")
