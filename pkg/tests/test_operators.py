import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from conftest import EX_A, EX_B, EX_C, EX_D, EX_E, EX_F, space
from primaltop.errors import UniverseMismatch
from primaltop.operators import (
    OperatorTable,
    base_family,
    cl_diamond,
    cl_diamond_R,
    cl_diamond_R_table,
    cl_diamond_table,
    diamond,
    diamond_R,
    diamond_R_table,
    diamond_table,
    induced_report,
    kuratowski_check,
    tau_diamond,
    tau_diamond_R,
)
from primaltop.primal import PrimalSpace, enumerate_primals, maximal_primal
from primaltop.sets import Universe, powerset
from primaltop.topology import enumerate_topologies, indiscrete, topology_from_base


def names(fam):
    return sorted("".join(s.names()) for s in fam)


def S(u, s):
    return u.subset(s)


def test_diamond_examples(U3):
    d = space(*EX_D)
    assert diamond(d, U3.empty) == U3.empty
    assert diamond(d, S(U3, "c")) == S(U3, "c")
    # τ^⋄ is the powerset here, so A^c is always ⋄-closed
    for a in powerset(U3):
        assert diamond(d, ~a) <= ~a
    b = space(*EX_B)
    assert diamond(b, S(U3, "a")) == U3.whole


def test_diamond_R_examples(U3):
    assert diamond_R(space(*EX_A), S(U3, "bc")) == U3.empty
    assert diamond_R(space(*EX_B), S(U3, "a")) == U3.whole
    c = space(*EX_C)
    assert diamond_R(c, S(U3, "b")) == S(U3, "b")
    assert diamond_R(c, S(U3, "c")) == S(U3, "bc")
    assert diamond_R(c, S(U3, "b") & S(U3, "c")) == U3.empty


def test_closures(U3):
    for fx in (EX_A, EX_B, EX_C, EX_D):
        s = space(*fx)
        assert cl_diamond(s, U3.empty) == U3.empty
        assert cl_diamond(s, U3.whole) == U3.whole
        assert cl_diamond_R(s, U3.empty) == U3.empty
        assert cl_diamond_R(s, U3.whole) == U3.whole
    assert cl_diamond_R(space(*EX_A), S(U3, "bc")) == S(U3, "bc")
    b = space(*EX_B)
    assert cl_diamond_table(b) == OperatorTable("cl_diamond", U3, cl_diamond_R_table(b).values)


def test_universe_mismatch(U3):
    other = Universe(("x", "y", "z"))
    with pytest.raises(UniverseMismatch):
        diamond_R(space(*EX_A), other.subset("x"))


def test_induced_topologies(U3):
    d = space(*EX_D)
    assert names(tau_diamond_R(d)) == ["", "abc", "ac", "bc", "c"]
    assert len(tau_diamond(d)) == 8
    assert len(tau_diamond_R(space(*EX_E))) == 8
    f = space(*EX_F)
    assert tau_diamond_R(f) == f.topology.opens == f.topology.delta_open


def test_induced_report_flags(U3):
    rep = induced_report(space(*EX_D))
    cmp = rep.comparisons
    assert cmp["tau_delta<=tau_diamond_R"] and cmp["tau_diamond_R<=tau_diamond"]
    assert cmp["tau<=tau_diamond"]
    assert not cmp["tau<=tau_diamond_R"] and not cmp["tau_diamond_R<=tau"]
    assert not cmp["tau_diamond_R<=tau_delta"]


def test_base_family(U3):
    d = space(*EX_D)
    assert names(base_family(d)) == ["", "abc", "ac", "bc", "c"]
    assert topology_from_base(base_family(d)).opens == tau_diamond_R(d)
    t = space(*EX_D).topology
    m = PrimalSpace(t, maximal_primal(U3))
    assert base_family(m) == t.delta_open


def test_kuratowski(U3):
    a = space(*EX_A)
    assert kuratowski_check(cl_diamond_R_table(a)).passed
    rep = kuratowski_check(diamond_R_table(a))
    assert not rep.passed
    assert S(U3, "bc") in rep.axioms["extensive"].witnesses
    ident = OperatorTable("identity", U3, tuple(range(8)))
    assert kuratowski_check(ident).passed


def _oracle_space(s):
    pts = s.universe.points
    opens = [frozenset(x.names()) for x in s.topology.opens]
    prim = {frozenset(x.names()) for x in s.primal.family}
    return pts, opens, prim


@pytest.mark.parametrize("n", [1, 2, 3])
def test_tables_match_oracle(n):
    u = Universe.of_size(n)
    for t in enumerate_topologies(u):
        for p in enumerate_primals(u):
            s = PrimalSpace(t, p)
            pts, opens, prim = _oracle_space(s)
            d, dr = diamond_table(s), diamond_R_table(s)
            for a in powerset(u):
                fa = frozenset(a.names())
                assert set(d[a].names()) == oracle.diamond(pts, opens, prim, fa)
                assert set(dr[a].names()) == oracle.diamond_R(pts, opens, prim, fa)
            ours_r = {frozenset(x.names()) for x in tau_diamond_R(s)}
            ours = {frozenset(x.names()) for x in tau_diamond(s)}
            assert ours_r == oracle.tau_from(pts, lambda a: oracle.diamond_R(pts, opens, prim, a))
            assert ours == oracle.tau_from(pts, lambda a: oracle.diamond(pts, opens, prim, a))


U4 = Universe.of_size(4)
TOPS4 = list(enumerate_topologies(U4))
PRIMS4 = list(enumerate_primals(U4))
spaces4 = st.builds(PrimalSpace, st.sampled_from(TOPS4), st.sampled_from(PRIMS4))
subsets4 = st.integers(0, 15).map(U4.from_bits)


@settings(max_examples=300, deadline=None)
@given(spaces4, subsets4, subsets4)
def test_diamond_R_laws_n4(s, a, b):
    assert diamond(s, a) <= diamond_R(s, a)
    assert diamond_R(s, a | b) == diamond_R(s, a) | diamond_R(s, b)
    assert diamond_R(s, a & b) <= diamond_R(s, a) & diamond_R(s, b)
    if not diamond_R(s, a) == U4.empty:
        assert ~a in s.primal
    assert diamond_R(s, diamond_R(s, a)) <= diamond_R(s, a)


@settings(max_examples=300, deadline=None)
@given(spaces4, subsets4, subsets4)
def test_cl_diamond_R_is_closure_n4(s, a, b):
    cl = lambda x: cl_diamond_R(s, x)  # noqa: E731
    assert a <= cl_diamond(s, a) <= cl(a)
    assert cl(a | b) == cl(a) | cl(b)
    assert cl(cl(a)) == cl(a)


@settings(max_examples=100, deadline=None)
@given(spaces4)
def test_tau_chain_n4(s):
    tr = tau_diamond_R(s)
    assert s.topology.delta_open <= tr <= tau_diamond(s)
    assert s.topology.opens <= tau_diamond(s)
    assert topology_from_base(base_family(s)).opens == tr


def test_indiscrete_is_regular_so_tables_coincide(U3):
    for p in enumerate_primals(U3):
        s = PrimalSpace(indiscrete(U3), p)
        assert diamond_table(s).values == diamond_R_table(s).values
