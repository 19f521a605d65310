"""The ``.mnet`` network format and DOT/JSON exporters.

Format (line oriented, ``#`` comments)::

    network glycolysis
    solution: "beta-D-Glucose", ATP, "NADP+"
    rule r1: "beta-D-Glucose" + ATP -> "beta-D-Glucose-6P" + ADP

Bare terms match ``[A-Za-z0-9_.'-]+``; anything else is double-quoted with
``\\"`` and ``\\\\`` escapes. Reactions are written before splitting; a
reaction ``r`` with several products loads as rules ``r.1``, ``r.2``, ...
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path as FsPath
from typing import Iterable, Optional

from .errors import BimolecularViolation, DuplicateRuleId, ParseError
from .model import Explanation, MNetwork, Rule, split_reaction, validate_network

BARE_RE = re.compile(r"[A-Za-z0-9_.'-]+\Z")
_BARE_SCAN = re.compile(r"(?:[A-Za-z0-9_.']|-(?!>))+")


@dataclass
class ReactionLine:
    id: str
    premises: tuple[str, ...]
    products: tuple[str, ...]
    line: int


@dataclass
class NetworkDocument:
    name: Optional[str]
    solution: tuple[str, ...] = ()
    reactions: list[ReactionLine] = field(default_factory=list)
    solution_line: Optional[int] = None


def _tokenize(text, lineno, source):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch in " \t\r":
            i += 1
        elif ch == "#":
            break
        elif text.startswith("->", i):
            toks.append(("->", "->", i + 1))
            i += 2
        elif ch in ":,+":
            toks.append((ch, ch, i + 1))
            i += 1
        elif ch == '"':
            start = i
            i += 1
            buf = []
            while True:
                if i >= n:
                    raise ParseError("unterminated quoted name", lineno, start + 1, source)
                c = text[i]
                if c == "\\":
                    if i + 1 >= n or text[i + 1] not in '"\\':
                        raise ParseError("invalid escape in quoted name", lineno, i + 1, source)
                    buf.append(text[i + 1])
                    i += 2
                elif c == '"':
                    i += 1
                    break
                else:
                    buf.append(c)
                    i += 1
            if not buf:
                raise ParseError("empty quoted name", lineno, start + 1, source)
            toks.append(("term", "".join(buf), start + 1))
        else:
            m = _BARE_SCAN.match(text, i)
            if not m:
                raise ParseError(f"unexpected character {ch!r}", lineno, i + 1, source)
            toks.append(("term", m.group(), i + 1))
            i = m.end()
    return toks


class _Line:
    def __init__(self, toks, lineno, source):
        self.toks = toks
        self.pos = 0
        self.lineno = lineno
        self.source = source

    def error(self, msg):
        col = self.toks[self.pos][2] if self.pos < len(self.toks) else None
        return ParseError(msg, self.lineno, col, self.source)

    def take(self, kind):
        if self.pos >= len(self.toks) or self.toks[self.pos][0] != kind:
            what = "end of line" if self.pos >= len(self.toks) else repr(self.toks[self.pos][1])
            raise self.error(f"expected {'a name' if kind == 'term' else repr(kind)}, got {what}")
        tok = self.toks[self.pos]
        self.pos += 1
        return tok[1]

    def peek(self):
        return self.toks[self.pos][0] if self.pos < len(self.toks) else None

    def terms(self, sep):
        out = [self.take("term")]
        while self.peek() == sep:
            self.pos += 1
            out.append(self.take("term"))
        return out

    def end(self):
        if self.pos != len(self.toks):
            raise self.error(f"unexpected {self.toks[self.pos][1]!r}")


def parse_document(text: str, source: Optional[str] = None) -> NetworkDocument:
    doc = NetworkDocument(name=None)
    ids: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokenize(raw, lineno, source)
        if not toks:
            continue
        ln = _Line(toks, lineno, source)
        if toks[0][0] != "term":
            raise ln.error("expected 'network', 'solution' or 'rule'")
        keyword = toks[0][1]
        # quoted keywords are names, not keywords
        if raw.lstrip().startswith('"'):
            keyword = None
        ln.pos = 1
        if keyword == "network":
            if doc.name is not None or doc.reactions or doc.solution_line is not None:
                raise ParseError("'network' must be the first statement", lineno, 1, source)
            doc.name = ln.take("term")
            ln.end()
        elif keyword == "solution":
            if doc.solution_line is not None:
                raise ParseError(f"second solution line (first on line {doc.solution_line})",
                                 lineno, 1, source)
            ln.take(":")
            doc.solution = tuple(ln.terms(",")) if ln.peek() is not None else ()
            ln.end()
            doc.solution_line = lineno
        elif keyword == "rule":
            rid = ln.take("term")
            ln.take(":")
            premises = ln.terms("+")
            ln.take("->")
            products = ln.terms("+")
            ln.end()
            if rid in ids:
                raise DuplicateRuleId(rid, lineno)
            if len(premises) > 2:
                raise BimolecularViolation(rid, len(premises), lineno)
            ids[rid] = lineno
            doc.reactions.append(ReactionLine(rid, tuple(premises), tuple(products), lineno))
        else:
            raise ParseError(f"unknown statement {toks[0][1]!r}", lineno, toks[0][2], source)
    if doc.solution_line is None:
        raise ParseError("missing 'solution:' line", None, None, source)
    return doc


def parse_network(text: str, name: Optional[str] = None,
                  source: Optional[str] = None) -> tuple[MNetwork, frozenset]:
    """Parse ``.mnet`` text into a split, validated network and its solution."""
    doc = parse_document(text, source)
    rules: list[Rule] = []
    seen: dict[str, int] = {}
    for rl in doc.reactions:
        for r in split_reaction(rl.premises, rl.products, rl.id):
            if r.id in seen:
                raise DuplicateRuleId(r.id, rl.line)
            seen[r.id] = rl.line
            rules.append(r)
    net = validate_network(rules, doc.name or name or "network")
    return net, frozenset(doc.solution)


def load_network(path) -> tuple[MNetwork, frozenset]:
    path = FsPath(path)
    return parse_network(path.read_text(encoding="utf-8"), name=path.stem, source=str(path))


def quote(name: str) -> str:
    if BARE_RE.match(name) and name not in ("network", "solution", "rule"):
        return name
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _reaction_lines(network: MNetwork):
    rules = list(network.rules)
    i = 0
    while i < len(rules):
        r = rules[i]
        group = [r]
        if r.reaction != r.id:
            j = i + 1
            while (j < len(rules) and rules[j].reaction == r.reaction
                   and rules[j].premises == r.premises):
                group.append(rules[j])
                j += 1
            expected = [f"{r.reaction}.{k}" for k in range(1, len(group) + 1)]
            if len(group) < 2 or [g.id for g in group] != expected:
                group = [r]
        if len(group) > 1:
            yield group[0].reaction, r.premises, [g.conclusion for g in group]
        else:
            yield r.id, r.premises, [r.conclusion]
        i += len(group)


def serialize_network(network: MNetwork, solution: Iterable[str]) -> str:
    out = [f"network {quote(network.name)}",
           "solution: " + ", ".join(quote(m) for m in sorted(solution))]
    for rid, premises, products in _reaction_lines(network):
        out.append(f"rule {quote(rid)}: {' + '.join(map(quote, premises))} -> "
                   f"{' + '.join(map(quote, products))}")
    return "\n".join(out) + "\n"


# -- DOT ------------------------------------------------------------------

def _dot_str(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def export_dot(graph, collapse_self_loops: bool = False) -> str:
    s0 = graph.initial
    lines = [f"digraph {_dot_str(graph.network.name)} {{", "  rankdir=LR;"]
    for st in graph.states:
        added = sorted(st - s0)
        label = graph.state_name(st)
        label += "\n" + ("S0" if not added else "+ " + ", ".join(added))
        lines.append(f"  {graph.state_name(st)} [label={_dot_str(label)}];")
    for st in graph.states:
        loops = []
        for t in graph.outgoing(st):
            if t.is_self_loop and collapse_self_loops:
                loops.append(t)
                continue
            lines.append(f"  {graph.state_name(t.source)} -> {graph.state_name(t.target)}"
                         f" [label={_dot_str(t.rule.id + ' / ' + t.produced)}];")
        if loops:
            label = ", ".join(f"{t.rule.id} / {t.produced}" for t in loops)
            name = graph.state_name(st)
            lines.append(f"  {name} -> {name} [label={_dot_str(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- JSON -----------------------------------------------------------------

def explanation_to_obj(e: Explanation) -> dict:
    obj = {"metabolite": e.root, "children": [explanation_to_obj(c) for c in e.children]}
    if e.rule is not None:
        obj["rule"] = e.rule
    return obj


def explanation_from_obj(obj: dict) -> Explanation:
    return Explanation(obj["metabolite"], obj.get("rule"),
                       tuple(explanation_from_obj(c) for c in obj["children"]))


def _theta_obj(theta):
    return list(theta) if isinstance(theta, tuple) else theta


def transition_to_obj(t, graph=None) -> dict:
    def st(s):
        if graph is not None:
            return graph.state_name(s)
        return sorted(s)
    return {"rule": t.rule.id, "theta": _theta_obj(t.theta), "s_hat": sorted(t.s_hat),
            "produced": t.produced, "from": st(t.source), "to": st(t.target)}


def path_to_obj(p, graph=None) -> dict:
    return {"kind": p.kind, "steps": [transition_to_obj(t, graph) for t in p.steps],
            "used_initial": sorted(p.used_initial())}


def graph_to_obj(graph) -> dict:
    return {
        "network": graph.network.name,
        "initial": sorted(graph.initial),
        "states": [{"name": graph.state_name(s), "contents": sorted(s)} for s in graph.states],
        "transitions": [transition_to_obj(t, graph) for t in graph.transitions],
    }


def to_obj(value):
    from .lts import LtsGraph, Transition
    from .paths import Path
    from .properties import PropertyVerdict

    if isinstance(value, Explanation):
        return explanation_to_obj(value)
    if isinstance(value, Path):
        return path_to_obj(value)
    if isinstance(value, Transition):
        return transition_to_obj(value)
    if isinstance(value, LtsGraph):
        return graph_to_obj(value)
    if isinstance(value, PropertyVerdict):
        return value.to_obj()
    if isinstance(value, (list, tuple)):
        return [to_obj(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(to_obj(v) for v in value)
    if isinstance(value, dict):
        return {str(k): to_obj(v) for k, v in value.items()}
    return value


def export_json(value, indent: Optional[int] = None) -> str:
    """Serialize a graph, path(s), explanation or verdict; keys are sorted."""
    return json.dumps(to_obj(value), sort_keys=True, ensure_ascii=False, indent=indent)
