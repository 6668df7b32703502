import pytest

import oracle
from conftest import family
from primaltop.errors import BaseError, TopologyAxiomError, UnknownPoint
from primaltop.sets import SetFamily, Universe, powerset
from primaltop.topology import (
    BaseConditionWarning,
    closure,
    delta_closure,
    delta_closure_by_regular_closed,
    delta_closure_pointwise,
    delta_interior,
    delta_interior_pointwise,
    delta_open_family,
    discrete,
    enumerate_topologies,
    indiscrete,
    interior,
    is_delta_closed,
    is_delta_open,
    is_hausdorff,
    is_regular_open,
    is_regular_space,
    is_t1_space,
    is_topology,
    open_neighborhoods,
    regular_closed_family,
    regular_open_family,
    topology_from_base,
    validate_topology,
)

# τ = {∅, X, {a,b}, {b,c}, {b}}
D_OPENS = ("", "abc", "ab", "bc", "b")


def names(fam):
    return sorted("".join(s.names()) for s in fam)


def as_oracle(t):
    return [frozenset(s.names()) for s in t.opens]


def test_validate_examples(U3):
    t = validate_topology(family(U3, "", "abc"))
    assert len(t.opens) == 2
    validate_topology(family(U3, "", "b", "c", "bc", "ac", "abc"))


@pytest.mark.parametrize(
    "sets,kind,witness",
    [
        (("", "a", "b", "abc"), "not-closed-under-union", ("a", "b")),
        (("", "ab", "bc", "abc"), "not-closed-under-intersection", ("ab", "bc")),
        (("a", "abc"), "missing-empty", ()),
        (("", "a"), "missing-universe", ()),
    ],
)
def test_validate_errors(U3, sets, kind, witness):
    with pytest.raises(TopologyAxiomError) as exc:
        validate_topology(family(U3, *sets))
    assert exc.value.kind == kind
    assert tuple("".join(w.names()) for w in exc.value.witness) == witness


def test_interior_closure(U3):
    assert interior(indiscrete(U3), U3.subset("a")) == U3.empty
    t = validate_topology(family(U3, "", "a", "c", "ac", "abc"))
    assert closure(t, U3.subset("a")) == U3.subset("ab")
    assert closure(t, U3.whole) == U3.whole
    assert closure(indiscrete(U3), U3.whole) == U3.whole


def test_open_neighborhoods(U3):
    assert names(open_neighborhoods(indiscrete(U3), "a")) == ["abc"]
    t = validate_topology(family(U3, "", "a", "c", "ac", "abc"))
    assert names(open_neighborhoods(t, "b")) == ["abc"]
    assert names(open_neighborhoods(t, "a")) == ["a", "abc", "ac"]
    with pytest.raises(UnknownPoint):
        open_neighborhoods(t, "q")


def test_regular_open_examples(U3):
    t = validate_topology(family(U3, "", "b", "c", "bc", "ac", "abc"))
    assert names(regular_open_family(t)) == ["", "abc", "ac", "b"]
    assert names(regular_closed_family(t)) == ["", "abc", "ac", "b"]
    d = validate_topology(family(U3, *D_OPENS))
    assert names(regular_open_family(d)) == ["", "abc"]
    assert is_regular_open(d, U3.empty)


def test_delta_examples(U3):
    d = validate_topology(family(U3, *D_OPENS))
    assert delta_interior(d, U3.whole) == U3.whole
    assert delta_interior(d, U3.subset("ab")) == U3.empty
    assert delta_closure(d, U3.subset("c")) == U3.whole
    assert names(delta_open_family(d)) == ["", "abc"]
    assert is_delta_closed(d, U3.empty) and not is_delta_open(d, U3.subset("b"))
    e = validate_topology(family(U3, "", "abc", "a", "b", "ab"))
    assert delta_open_family(e) == e.opens
    assert names(delta_open_family(indiscrete(U3))) == ["", "abc"]


def test_regular_space_examples(U3):
    assert is_regular_space(discrete(U3))
    assert is_regular_space(indiscrete(U3))
    assert not is_regular_space(validate_topology(family(U3, *D_OPENS)))
    assert is_t1_space(discrete(U3)) and not is_t1_space(indiscrete(U3))
    assert is_hausdorff(discrete(U3)) and not is_hausdorff(indiscrete(U3))


def test_single_point_space():
    u = Universe(("a",))
    t = indiscrete(u)
    assert t == discrete(u)
    assert names(regular_open_family(t)) == ["", "a"]
    assert delta_closure(t, u.whole) == u.whole
    assert is_regular_space(t)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumeration_matches_brute_force(n, regressions):
    u = Universe.of_size(n)
    ours = [t.opens for t in enumerate_topologies(u)]
    assert len(ours) == regressions["topology_counts"][str(n)]
    brute = {frozenset(f) for f in oracle.all_topologies(u.points)}
    assert {frozenset(frozenset(s.names()) for s in f) for f in ours} == brute
    chars = [f.characteristic for f in ours]
    assert chars == sorted(chars)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_against_oracle(n):
    u = Universe.of_size(n)
    for t in enumerate_topologies(u):
        opens = as_oracle(t)
        assert {frozenset(s.names()) for s in t.regular_open} == oracle.regular_open(u.points, opens)
        assert {frozenset(s.names()) for s in t.delta_open} == oracle.delta_open(u.points, opens)
        assert is_regular_space(t) == oracle.is_regular_space(u.points, opens)
        for a in powerset(u):
            fa = frozenset(a.names())
            assert set(interior(t, a).names()) == oracle.interior(u.points, opens, fa)
            assert set(closure(t, a).names()) == oracle.closure(u.points, opens, fa)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_delta_invariants_exhaustive(n):
    u = Universe.of_size(n)
    for t in enumerate_topologies(u):
        assert t.regular_open <= t.opens
        assert t.delta_open <= t.opens
        assert is_topology(t.delta_open)
        ro = t.regular_open.masks
        assert all(a & b in t.regular_open for a in ro for b in ro)
        for a in powerset(u):
            assert delta_closure(t, ~a) == ~delta_interior(t, a)
            assert delta_interior(t, ~a) == ~delta_closure(t, a)
            assert closure(t, a) == ~interior(t, ~a)
            for via in ("regular-open", "open"):
                assert delta_interior_pointwise(t, a, via) == delta_interior(t, a)
                assert delta_closure_pointwise(t, a, via) == delta_closure(t, a)
            assert delta_closure_by_regular_closed(t, a) == delta_closure(t, a)


def test_topology_from_base(U3):
    assert names(topology_from_base(family(U3, "abc")).opens) == ["", "abc"]
    t = topology_from_base(family(U3, "a", "b", "abc"))
    assert names(t.opens) == ["", "a", "ab", "abc", "b"]


def test_topology_from_base_errors(U3):
    with pytest.raises(BaseError):
        topology_from_base(family(U3, "a", "b"))
    with pytest.warns(BaseConditionWarning):
        t = topology_from_base(family(U3, "ab", "bc"))
    assert "b" in names(t.opens)


def test_delta_topology_is_cached_family(U3):
    d = validate_topology(family(U3, *D_OPENS))
    assert d.delta_topology().opens == SetFamily(U3, [0, 7])
