import pytest

from conftest import T2
from metacause import (LimitExceeded, LtsGraph, Path, Rule, chi_paths_to, chi_rule_sets,
                       count_chi_paths, count_rho_paths, forward_path, leaf, node,
                       paths_of_explanation, rho_paths_to, tr_p, validate_network)
from metacause.errors import InvalidExplanation, UnknownMetabolite
from metacause.paths import iter_chi_paths, leads_to, relevant_steps


def _prefix(g, rule_ids):
    for p in iter_chi_paths(g, "E"):
        if p.rules[:len(rule_ids)] == tuple(rule_ids):
            return Path(p.steps[:len(rule_ids)], g.initial)
    raise AssertionError(rule_ids)


def test_leads_to(ex1):
    p = chi_paths_to(ex1, "E")[0]
    assert leads_to(p, "E")
    assert leads_to(_prefix(ex1, ["(λ,μ)"]), "D")
    assert not leads_to(_prefix(ex1, ["(λ,μ)", "ξ"]), "E")


def test_chi_paths_ex1(ex1):
    assert len(chi_paths_to(ex1, "E")) == 2
    assert chi_paths_to(ex1, "A") == []


def test_chi_paths_ex2_include_p_and_p_prime(ex2):
    got = {p.rules for p in chi_paths_to(ex2, "E")}
    assert tuple(T2[t] for t in ("t2", "t1", "t8", "t9")) in got
    assert tuple(T2[t] for t in ("t3", "t4")) in got
    assert count_chi_paths(ex2, "E") == len(got) == 29


def test_rho_paths(ex1, ex2):
    chi = {p.rules for p in chi_paths_to(ex2, "E")}
    rho = rho_paths_to(ex2, "E")
    assert chi <= {p.rules for p in rho} and len(rho) == 99
    assert all(p.is_rho for p in rho)
    for p in rho_paths_to(ex1, "E"):
        assert not any(t.is_self_loop and t.produced == "D" for t in p.steps)


def test_repeated_rule_is_not_a_rho_path(ex2):
    # firing t1 a second time re-produces C, which no rho-path allows
    assert not any(p.rules[:3] == (T2["t1"], T2["t7"], T2["t1"]) for p in rho_paths_to(ex2, "E"))


def test_tr_p_ex2(ex2):
    p = next(p for p in chi_paths_to(ex2, "E") if p.rules == (T2["t3"], T2["t4"]))
    assert tr_p(p, "E") == node("E", "(ψ,ν)", leaf("D"), node("H", "(ξ,θ)", leaf("B"), leaf("D")))


def test_used_initial(ex2):
    p = next(p for p in chi_paths_to(ex2, "E") if p.rules == (T2["t3"], T2["t4"]))
    assert "A" not in p.used_initial()
    assert Path((), ex2.initial).used_initial() == frozenset()


def test_linearizations():
    net = validate_network([Rule("t2", ("B", "D"), "A"), Rule("t3", ("E", "G"), "F"),
                            Rule("t1", ("A", "F"), "C")])
    g = LtsGraph.from_network(net, set("BDEG"))
    e = node("C", "t1", node("A", "t2", leaf("B"), leaf("D")), node("F", "t3", leaf("E"), leaf("G")))
    assert sorted(p.rules for p in paths_of_explanation(g, e)) == [
        ("t2", "t3", "t1"), ("t3", "t2", "t1")]
    assert paths_of_explanation(g, leaf("B")) == []


def test_invalid_explanation_rejected(ex1):
    with pytest.raises(InvalidExplanation):
        paths_of_explanation(ex1, leaf("E"))


def test_tight_round_trip(ex2):
    for c in sorted(ex2.universe - ex2.initial):
        for p in chi_paths_to(ex2, c):
            tight = relevant_steps(p, c)
            assert tight in paths_of_explanation(ex2, tr_p(p, c))


def test_forward_path(ex2):
    p = forward_path(ex2, "E", without={"(ψ,ν)"})
    assert p.is_chi and leads_to(p, "E") and "(ψ,ν)" not in p.rule_set
    assert forward_path(ex2, "H", without={"(ξ,θ)"}) is None


def test_limit_exceeded(glyco, ex2):
    with pytest.raises(LimitExceeded) as info:
        chi_paths_to(glyco, "Pyruvate")
    assert info.value.count > 10**10
    with pytest.raises(LimitExceeded):
        rho_paths_to(ex2, "E", limit=10)


def test_counts_match_enumeration(ex2):
    for c in sorted(ex2.universe - ex2.initial):
        assert count_chi_paths(ex2, c) == len(chi_paths_to(ex2, c))
        assert count_rho_paths(ex2, c) == len(rho_paths_to(ex2, c))


def test_rule_sets(ex2):
    assert chi_rule_sets(ex2, "E") == {p.rule_set for p in chi_paths_to(ex2, "E")}


def test_unknown_target(ex1):
    with pytest.raises(UnknownMetabolite):
        chi_paths_to(ex1, "Z")


def test_glycolysis_counts(glyco, glyco_tpi):
    assert count_chi_paths(glyco, "Glyceraldehyde-3-P") == 1_048_581
    assert count_chi_paths(glyco_tpi, "Glyceraldehyde-3-P") == 752_406


def test_path_continuity(ex1):
    p = chi_paths_to(ex1, "E")[0]
    with pytest.raises(ValueError):
        Path(p.steps[1:], ex1.initial)
