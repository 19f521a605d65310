"""Labeled transition system of a CGF specification.

States are sets of reagents. A (Delay) move fires a unary rule whose premise is
present, a (Sync) move fires a binary rule whose two premises are present; both
add the rule's conclusion to the state and never remove anything.

The forward-chaining ``closure`` is the cheap derivability oracle used by the
reachability-based property checkers: the maximal reachable state is exactly
the closure of the initial solution.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .cgf import CgfSpec, ReactionId, encode, theta_str
from .model import Metabolite, MNetwork, Rule

State = frozenset


@dataclass(frozen=True)
class Transition:
    source: State
    target: State
    theta: ReactionId
    s_hat: frozenset
    produced: Metabolite
    rule: Rule

    @property
    def is_self_loop(self) -> bool:
        return self.source == self.target

    def __str__(self):
        return f"{self.rule.id}/{self.produced}"


def _key(state):
    return len(state), tuple(sorted(state))


def fire(spec: CgfSpec, state: State, theta: ReactionId) -> Transition:
    """The transition obtained by firing ``theta`` from ``state``.

    The caller is responsible for the premises being present.
    """
    rule = spec.rule_index[theta]
    return Transition(state, state | {rule.conclusion}, theta,
                      frozenset(rule.premises) & spec.initial, rule.conclusion, rule)


def enabled(spec: CgfSpec, state: Iterable[Metabolite]) -> list[Transition]:
    state = frozenset(state)
    out = []
    for theta, rule in spec.rule_index.items():
        if all(p in state for p in rule.premises):
            out.append(fire(spec, state, theta))
    return out


class LtsGraph:
    """Reachable fragment of the LTS from the initial solution.

    States and transitions are computed on first access and cached; the
    reachability checkers that only need ``spec`` never pay for the build.
    """

    def __init__(self, spec: CgfSpec):
        self.spec = spec
        self.initial: State = frozenset(spec.initial)

    @classmethod
    def from_network(cls, network: MNetwork, solution: Iterable[Metabolite]) -> LtsGraph:
        return cls(encode(network, solution))

    @property
    def network(self) -> MNetwork:
        return self.spec.network

    @property
    def universe(self) -> frozenset:
        return self.spec.universe

    @cached_property
    def _built(self):
        compiled = [(theta, rule, frozenset(rule.premises))
                    for theta, rule in self.spec.rule_index.items()]
        seen = {self.initial}
        queue = deque([self.initial])
        out: dict[State, list[Transition]] = {}
        while queue:
            s = queue.popleft()
            moves = []
            for theta, rule, prem in compiled:
                if prem <= s:
                    t = Transition(s, s | {rule.conclusion}, theta,
                                   prem & self.initial, rule.conclusion, rule)
                    moves.append(t)
                    if t.target not in seen:
                        seen.add(t.target)
                        queue.append(t.target)
            moves.sort(key=lambda t: theta_str(t.theta))
            out[s] = moves
        states = tuple(sorted(seen, key=_key))
        return states, out

    @property
    def states(self) -> tuple[State, ...]:
        return self._built[0]

    @cached_property
    def transitions(self) -> tuple[Transition, ...]:
        out = self._built[1]
        return tuple(t for s in self.states for t in out[s])

    def outgoing(self, state: State) -> tuple[Transition, ...]:
        return tuple(self._built[1][state])

    @cached_property
    def _names(self) -> dict[State, str]:
        return {s: f"S{i}" for i, s in enumerate(self.states)}

    def state_name(self, state: State) -> str:
        return self._names[state]

    def maximal_state(self) -> State:
        return self.states[-1]

    def __repr__(self):
        return f"LtsGraph({self.network.name!r}, S0={sorted(self.initial)})"


def build_graph(spec: CgfSpec) -> LtsGraph:
    return LtsGraph(spec)


def closure(rules: Iterable[Rule], solution: Iterable[Metabolite],
            blocked: Iterable[Metabolite] = ()) -> frozenset[Metabolite]:
    """Least fixpoint of forward chaining from ``solution``.

    Rules concluding a metabolite in ``blocked`` are never fired.
    """
    blocked = set(blocked)
    pending = [r for r in rules if r.conclusion not in blocked]
    have = set(solution)
    changed = True
    while changed:
        changed = False
        rest = []
        for r in pending:
            if r.conclusion in have:
                continue
            if all(p in have for p in r.premises):
                have.add(r.conclusion)
                changed = True
            else:
                rest.append(r)
        pending = rest
    return frozenset(have)


def derivable(network: MNetwork, solution: Iterable[Metabolite], metabolite: Metabolite,
              without: Optional[Iterable[str]] = None) -> bool:
    rules = network.rules
    if without is not None:
        drop = set(without)
        rules = [r for r in rules if r.id not in drop]
    return metabolite in closure(rules, solution)
