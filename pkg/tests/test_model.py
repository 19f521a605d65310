import pytest

from metacause import (Explanation, Rule, is_explanation, is_uniform, leaf, metabolites_of,
                       node, rules_of, split_reaction, validate_network)
from metacause.errors import BimolecularViolation, DuplicateRuleId, EmptyPremise, UnknownRule
from metacause.model import universe


def test_split_two_products():
    rs = split_reaction(["A", "B"], ["C", "D"], "r")
    assert [(r.id, r.premises, r.conclusion) for r in rs] == [
        ("r.1", ("A", "B"), "C"), ("r.2", ("A", "B"), "D")]
    assert {r.reaction for r in rs} == {"r"}


def test_split_single_product_keeps_id():
    (r,) = split_reaction(["A"], ["C"], "r")
    assert r.id == "r" and not r.is_binary


def test_split_glycolysis_rule_4():
    rs = split_reaction(["β-D-Fructose-1,6bP"], ["G3P", "DHAP"], "r4")
    assert [r.id for r in rs] == ["r4.1", "r4.2"]


def test_split_errors():
    with pytest.raises(BimolecularViolation):
        split_reaction(["A", "B", "C"], ["D"], "r")
    with pytest.raises(EmptyPremise):
        split_reaction([], ["D"], "r")


def test_validate_network(ex1):
    assert len(validate_network(ex1.network.rules)) == 5
    assert len(validate_network([])) == 0
    with pytest.raises(DuplicateRuleId):
        validate_network([Rule("r1", ("A",), "B"), Rule("r1", ("B",), "C")])


def test_universe(ex1, ex2):
    assert universe(ex1.network, ex1.initial) == set("ABCDE")
    assert universe(validate_network([]), {"A"}) == {"A"}
    assert universe(ex2.network, ex2.initial) == set("ABCDEFHLOP")


def test_resolve_groups(glyco):
    net = glyco.network
    assert net.resolve("r4") == {"r4.1", "r4.2"}
    assert net.resolve("r4.1") == {"r4.1"}
    assert net.resolve(["r5", "r6"]) == {"r5", "r6"}
    with pytest.raises(UnknownRule):
        net.resolve("r99")


E_PRIME = node("E", "(ψ,ν)", leaf("D"), node("H", "(ξ,θ)", leaf("B"), leaf("D")))
E_FIRST = node("E", "(δ,η)", leaf("A"), node("C", "ξ", node("D", "(λ,μ)", leaf("A"), leaf("B"))))


def test_metabolites_of():
    assert metabolites_of(leaf("C")) == {"C"}
    assert metabolites_of(E_PRIME) == {"D", "H", "B"}
    assert metabolites_of(E_FIRST) == {"A", "C", "D", "B"}


def test_rules_of():
    assert rules_of(leaf("C")) == frozenset()
    assert rules_of(E_PRIME) == {"(ψ,ν)", "(ξ,θ)"}
    assert rules_of(E_FIRST) == {"(δ,η)", "ξ", "(λ,μ)"}


def test_is_uniform():
    d = node("D", "(λ,μ)", leaf("A"), leaf("B"))
    assert is_uniform(node("E", "(ψ,ν)", d, node("C", "ξ", d)))
    assert is_uniform(leaf("C"))
    assert not is_uniform(node("E", "(ψ,ν)", leaf("D"), node("C", "ξ", d)))


def test_is_explanation(ex1):
    assert is_explanation(E_FIRST, ex1.network, ex1.initial)
    assert not is_explanation(leaf("E"), ex1.network, ex1.initial)
    swapped = node("E", "(δ,η)", E_FIRST.children[1], leaf("A"))
    assert not is_explanation(swapped, ex1.network, ex1.initial)


def test_explanation_shape_checks():
    with pytest.raises(ValueError):
        Explanation("A", None, (leaf("B"),))
    with pytest.raises(ValueError):
        Explanation("A", "r", ())
    assert str(E_PRIME) == "E_{(ψ,ν)}[D[], H_{(ξ,θ)}[B[], D[]]]"
