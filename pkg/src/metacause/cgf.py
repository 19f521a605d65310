"""Rate-free Chemical Ground Form specifications and the rule encoder.

A binary rule ``A o B -> C`` becomes an input summand ``a^lam.C`` in the
definition of ``A`` and an output summand ``~a^mu.0`` in the definition of
``B``; its reaction id is the label pair ``(lam, mu)``. A unary rule
``A -> C`` becomes a delay summand ``tau^xi.C`` in ``A``, with reaction id
``xi``. Labels derive from rule ids (``r4.1/in``, ``r4.1/out``, ``r5/tau``)
so encodings are stable across runs and networks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Union

from .errors import UnknownLabel
from .model import Metabolite, MNetwork, Rule

INPUT = "in"
OUTPUT = "out"
DELAY = "tau"

ReactionId = Union[str, tuple[str, str]]


@dataclass(frozen=True)
class BasicAction:
    kind: str
    label: str
    channel: Optional[str] = None

    def __post_init__(self):
        if self.kind not in (INPUT, OUTPUT, DELAY):
            raise ValueError(f"unknown action kind {self.kind!r}")
        if (self.kind == DELAY) != (self.channel is None):
            raise ValueError("input/output actions carry a channel, delays do not")

    def __str__(self):
        if self.kind == DELAY:
            return f"tau^{self.label}"
        bar = "~" if self.kind == OUTPUT else ""
        return f"{bar}{self.channel}^{self.label}"


@dataclass(frozen=True)
class Summand:
    action: BasicAction
    continuation: tuple[Metabolite, ...] = ()

    def __str__(self):
        cont = " | ".join(self.continuation) if self.continuation else "0"
        return f"{self.action}.{cont}"


@dataclass(frozen=True)
class MoleculeDef:
    reagent: Metabolite
    summands: tuple[Summand, ...] = ()

    def __str__(self):
        body = " + ".join(map(str, self.summands)) if self.summands else "0"
        return f"{self.reagent} = {body}"


@dataclass(frozen=True)
class CgfSpec:
    """A reagent environment, its initial solution and the reaction index.

    ``rule_index`` maps every reaction id to the rule it encodes; ``network``
    is the source m_network.
    """

    environment: Mapping[Metabolite, MoleculeDef]
    initial: frozenset[Metabolite]
    rule_index: Mapping[ReactionId, Rule]
    network: MNetwork

    @property
    def theta_of(self) -> dict[str, ReactionId]:
        return {r.id: theta for theta, r in self.rule_index.items()}

    @property
    def universe(self) -> frozenset[Metabolite]:
        return frozenset(self.environment)

    def __str__(self):
        lines = [str(self.environment[m]) for m in sorted(self.environment)]
        lines.append("S0 = " + (" | ".join(sorted(self.initial)) or "0"))
        return "\n".join(lines)


def labels_for(rule: Rule) -> ReactionId:
    if rule.is_binary:
        return f"{rule.id}/in", f"{rule.id}/out"
    return f"{rule.id}/tau"


def theta_str(theta: ReactionId) -> str:
    if isinstance(theta, tuple):
        return f"({theta[0]},{theta[1]})"
    return theta


def encode(network: MNetwork, solution: Iterable[Metabolite]) -> CgfSpec:
    solution = frozenset(solution)
    defs: dict[Metabolite, list[Summand]] = {m: [] for m in sorted(solution)}
    index: dict[ReactionId, Rule] = {}

    def slot(m):
        return defs.setdefault(m, [])

    for rule in network.rules:
        theta = labels_for(rule)
        if rule.is_binary:
            a, b = rule.premises
            lam, mu = theta
            channel = rule.id
            slot(a).append(Summand(BasicAction(INPUT, lam, channel), (rule.conclusion,)))
            slot(b).append(Summand(BasicAction(OUTPUT, mu, channel)))
        else:
            (a,) = rule.premises
            slot(a).append(Summand(BasicAction(DELAY, theta), (rule.conclusion,)))
        slot(rule.conclusion)
        index[theta] = rule
    env = {m: MoleculeDef(m, tuple(s)) for m, s in defs.items()}
    return CgfSpec(env, solution, index, network)


def all_labels(spec: CgfSpec) -> list[str]:
    return [s.action.label for d in spec.environment.values() for s in d.summands]


def check_well_labeled(spec: CgfSpec) -> bool:
    labels = all_labels(spec)
    return len(labels) == len(set(labels))


def lookup(spec: CgfSpec, reagent: Metabolite, label: str) -> Summand:
    """The summand ``pi^label.S`` in the definition of ``reagent``."""
    d = spec.environment.get(reagent)
    if d is not None:
        for s in d.summands:
            if s.action.label == label:
                return s
    raise UnknownLabel(reagent, label)


def decode(spec: CgfSpec) -> dict[ReactionId, tuple[frozenset, Metabolite]]:
    """Rebuild (premise set, conclusion) per reaction id from the summands alone."""
    by_label = {}
    for d in spec.environment.values():
        for s in d.summands:
            by_label[s.action.label] = (d.reagent, s)
    out = {}
    for theta in spec.rule_index:
        if isinstance(theta, tuple):
            (a, s_in), (b, _) = by_label[theta[0]], by_label[theta[1]]
            out[theta] = (frozenset([a, b]), s_in.continuation[0])
        else:
            a, s = by_label[theta]
            out[theta] = (frozenset([a]), s.continuation[0])
    return out
