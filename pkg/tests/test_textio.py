import json

import pytest

from metacause import LtsGraph, export_dot, export_json, parse_network, serialize_network
from metacause.errors import BimolecularViolation, DuplicateRuleId, ParseError
from metacause.textio import explanation_from_obj, explanation_to_obj, load_network, quote
from metacause.paths import chi_paths_to, tr_p

SMALL = """\
# comment
network demo
solution: A, "x y"
rule r1: A + "x y" -> C + D   # two products
rule r2: C -> E
"""


def test_parse_splits_products():
    net, sol = parse_network(SMALL)
    assert net.name == "demo" and sol == {"A", "x y"}
    assert net.ids == ("r1.1", "r1.2", "r2")
    assert serialize_network(net, sol).splitlines()[2] == 'rule r1: A + "x y" -> C + D'


@pytest.mark.parametrize("text,line,col", [
    ("solution: A\nrule r1 A -> B\n", 2, 9),
    ("solution: A\nrule r1: A -> \n", 2, None),
    ('solution: "A\n', 1, 11),
    ("solution: A\nfoo\n", 2, 1),
    ("solution: A\nrule r1: A => B\n", 2, 12),
])
def test_parse_errors_positioned(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_network(text, source="t.mnet")
    assert info.value.line == line and info.value.column == col
    assert "t.mnet" in str(info.value)


def test_missing_solution():
    with pytest.raises(ParseError, match="solution"):
        parse_network("rule r1: A -> B\n")


def test_duplicate_and_arity():
    with pytest.raises(DuplicateRuleId) as info:
        parse_network("solution: A\nrule r: A -> B\nrule r: B -> C\n")
    assert info.value.line == 3
    with pytest.raises(BimolecularViolation):
        parse_network("solution: A\nrule r: A + B + C -> D\n")


def test_quote():
    assert quote("ATP") == "ATP"
    assert quote("NADP+") == '"NADP+"'
    assert quote('a"b\\c') == '"a\\"b\\\\c"'
    assert quote("rule") == '"rule"'
    net, sol = parse_network('solution: "a\\"b\\\\c"\nrule r: "a\\"b\\\\c" -> X\n')
    assert sol == {'a"b\\c'}


def test_load_network_uses_stem(tmp_path):
    f = tmp_path / "mynet.mnet"
    f.write_text("solution: A\nrule r: A -> B\n", encoding="utf-8")
    net, _ = load_network(f)
    assert net.name == "mynet"


def test_dot(ex1):
    dot = export_dot(ex1)
    assert dot.startswith('digraph "ex1"') and dot.count("->") == 14
    collapsed = export_dot(ex1, collapse_self_loops=True)
    assert collapsed.count("S3 -> S3") == 1
    assert 'label="S1\\n+ D"' in dot
    assert '"(λ,μ) / D"' in dot


def test_json_graph(ex1):
    obj = json.loads(export_json(ex1))
    assert len(obj["states"]) == 4 and len(obj["transitions"]) == 14
    assert export_json(ex1) == export_json(LtsGraph.from_network(ex1.network, ex1.initial))


def test_explanation_json_round_trip(ex2):
    for p in chi_paths_to(ex2, "E"):
        e = tr_p(p, "E")
        assert explanation_from_obj(json.loads(json.dumps(explanation_to_obj(e)))) == e
