import pytest

from metacause import check_well_labeled, encode, validate_network
from metacause.cgf import (DELAY, INPUT, OUTPUT, BasicAction, CgfSpec, MoleculeDef, Summand,
                           decode, lookup)
from metacause.errors import UnknownLabel


def _shape(spec, reagent):
    return [(s.action.kind, s.action.channel, s.continuation)
            for s in spec.environment[reagent].summands]


def test_ex1_environment(ex1):
    # (δ,η) lists A before C, so A carries the input summand
    spec = ex1.spec
    assert _shape(spec, "A") == [(INPUT, "(λ,μ)", ("D",)), (INPUT, "(δ,η)", ("E",))]
    assert _shape(spec, "B") == [(OUTPUT, "(λ,μ)", ()), (OUTPUT, "(β,γ)", ())]
    assert _shape(spec, "D") == [(INPUT, "(β,γ)", ("A",)), (DELAY, None, ("C",)),
                                 (INPUT, "(ψ,ν)", ("E",))]
    assert _shape(spec, "C") == [(OUTPUT, "(δ,η)", ()), (OUTPUT, "(ψ,ν)", ())]
    assert _shape(spec, "E") == []


def test_binary_rule_encoding(ex2):
    spec = ex2.spec
    for r in ex2.network.rules:
        a, b = r.premises
        assert (INPUT, r.id, (r.conclusion,)) in _shape(spec, a)
        assert (OUTPUT, r.id, ()) in _shape(spec, b)


def test_empty_network():
    spec = encode(validate_network([]), {"A"})
    assert list(spec.environment) == ["A"] and not spec.rule_index


def test_ex2_environment(ex2):
    env = ex2.spec.environment
    assert len(env) == 10
    assert len(env["A"].summands) == 2 and len(env["D"].summands) == 4


def test_well_labeled(ex1, ex2, glyco):
    assert all(check_well_labeled(g.spec) for g in (ex1, ex2, glyco))
    a = BasicAction(DELAY, "λ")
    bad = CgfSpec({"A": MoleculeDef("A", (Summand(a, ("B",)),)),
                   "B": MoleculeDef("B", (Summand(a, ("A",)),))}, frozenset("A"), {}, None)
    assert not check_well_labeled(bad)


def test_lookup(ex1):
    spec = ex1.spec
    s = lookup(spec, "A", "(λ,μ)/in")
    assert s.action.kind == INPUT and s.continuation == ("D",)
    s = lookup(spec, "D", "ξ/tau")
    assert s.action.kind == DELAY and s.continuation == ("C",)
    with pytest.raises(UnknownLabel):
        lookup(spec, "A", "(ψ,ν)/in")


def test_decode_round_trip(glyco):
    spec = glyco.spec
    for theta, (prem, concl) in decode(spec).items():
        r = spec.rule_index[theta]
        assert prem == set(r.premises) and concl == r.conclusion


def test_action_invariants():
    with pytest.raises(ValueError):
        BasicAction("bogus", "x")
    with pytest.raises(ValueError):
        BasicAction(INPUT, "x")
