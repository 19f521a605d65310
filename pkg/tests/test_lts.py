from metacause import LtsGraph, closure, derivable, validate_network
from metacause.lts import enabled


def test_enabled_initial(ex1):
    (t,) = enabled(ex1.spec, {"A", "B"})
    assert t.rule.id == "(λ,μ)" and t.s_hat == {"A", "B"} and t.produced == "D"
    assert t.target == {"A", "B", "D"}


def test_enabled_nothing(ex1):
    assert enabled(ex1.spec, {"A"}) == []


def test_enabled_two_producers_of_E(ex1):
    got = {t.rule.id for t in enabled(ex1.spec, set("ABCD")) if t.produced == "E"}
    assert got == {"(δ,η)", "(ψ,ν)"}


def test_build_counts(ex1, ex2):
    assert len(ex1.states) == 4 and len(ex1.transitions) == 14
    assert len(ex2.states) == 21 and ex2.maximal_state() == ex2.universe


def test_empty_network():
    g = LtsGraph.from_network(validate_network([]), {"A"})
    assert g.states == (frozenset("A"),) and g.transitions == ()


def test_states_grow_and_self_loops_kept(ex2):
    loops = [t for t in ex2.transitions if t.is_self_loop]
    assert loops
    for t in ex2.transitions:
        assert ex2.initial <= t.source <= t.target
        assert len(t.target - t.source) <= 1


def test_state_names(ex1):
    assert ex1.state_name(ex1.initial) == "S0"
    assert ex1.state_name(ex1.maximal_state()) == "S3"


def test_closure_matches_top(ex2, glyco):
    for g in (ex2, glyco):
        assert closure(g.network.rules, g.initial) == g.maximal_state()


def test_closure_blocked(ex1):
    assert closure(ex1.network.rules, {"A", "B"}, blocked={"C"}) == {"A", "B", "D"}


def test_derivable_without(ex2):
    assert derivable(ex2.network, ex2.initial, "H")
    assert not derivable(ex2.network, ex2.initial, "H", without={"(ξ,θ)"})


def test_glycolysis_sizes(glyco, glyco_sbeta, glyco_tpi):
    assert (len(glyco.states), len(glyco.transitions)) == (2080, 42852)
    assert (len(glyco_sbeta.states), len(glyco_sbeta.transitions)) == (3072, 57920)
    assert (len(glyco_tpi.states), len(glyco_tpi.transitions)) == (1536, 29264)
