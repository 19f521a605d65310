"""Chi-paths, rho-paths, and the translation between paths and explanations.

A chi-path never takes a self-loop, so every step adds exactly one metabolite.
A rho-path may also take a self-loop that re-produces a metabolite of the
initial solution, provided that metabolite was neither produced nor required
earlier on the path. Both kinds are finite, and the enumerators here are
exhaustive. They count first (memoized over states) and refuse with
``LimitExceeded`` rather than return a truncated set.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .errors import InvalidExplanation, LimitExceeded, UnknownMetabolite
from .lts import LtsGraph, Transition, fire
from .model import Explanation, Metabolite, MNetwork, is_explanation, is_uniform

DEFAULT_MAX_PATHS = int(os.environ.get("METACAUSE_MAX_PATHS", 1_000_000))

CHI = "chi"
RHO = "rho"


@dataclass(frozen=True)
class Path:
    steps: tuple[Transition, ...]
    initial: frozenset

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        state = self.initial
        for t in self.steps:
            if t.source != state:
                raise ValueError(f"step {t} does not start where the previous one ended")
            state = t.target

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    @property
    def rules(self) -> tuple[str, ...]:
        return tuple(t.rule.id for t in self.steps)

    @property
    def rule_set(self) -> frozenset[str]:
        return frozenset(self.rules)

    @property
    def produced(self) -> tuple[Metabolite, ...]:
        return tuple(t.produced for t in self.steps)

    @property
    def final(self) -> frozenset:
        return self.steps[-1].target if self.steps else self.initial

    @property
    def is_chi(self) -> bool:
        return not any(t.is_self_loop for t in self.steps)

    @property
    def is_rho(self) -> bool:
        produced: set = set()
        required: set = set()
        for t in self.steps:
            if t.is_self_loop and not _qualifies(t, self.initial, produced, required):
                return False
            produced.add(t.produced)
            required |= t.s_hat
        return True

    @property
    def kind(self) -> Optional[str]:
        if self.is_chi:
            return CHI
        return RHO if self.is_rho else None

    def used_initial(self) -> frozenset[Metabolite]:
        return used_initial(self)

    def skeleton(self) -> tuple[str, ...]:
        """Rule ids of the non-self-loop steps, in order."""
        return tuple(t.rule.id for t in self.steps if not t.is_self_loop)

    def __str__(self):
        return " . ".join(t.rule.id for t in self.steps) or "<empty>"


def _qualifies(t, initial, produced, required) -> bool:
    # The produced metabolite must come from S0 and be neither produced nor
    # required before; a rule that needs its own conclusion never qualifies.
    x = t.produced
    return x in initial and x not in produced and x not in required and x not in t.s_hat


def used_initial(p: Path) -> frozenset[Metabolite]:
    """Initial-solution metabolites the path needs from the start."""
    used: set = set()
    for t in p.steps:
        used |= t.s_hat
    return frozenset(used - set(p.produced))


def leads_to(p: Path, c: Metabolite) -> bool:
    if not p.steps:
        return False
    last = p.steps[-1]
    if last.produced != c:
        return False
    if p.is_chi:
        return c not in last.source
    return True


def _memo(graph: LtsGraph, key, factory):
    cache = graph.__dict__.setdefault("_path_cache", {})
    if key not in cache:
        cache[key] = factory()
    return cache[key]


def _check_target(graph: LtsGraph, c: Metabolite):
    if c not in graph.universe:
        raise UnknownMetabolite(c)


# -- chi-paths ----------------------------------------------------------------

def _chi_counter(graph: LtsGraph, c: Metabolite):
    return _memo(graph, ("chi", c), lambda: _make_chi_counter(graph, c))


def _make_chi_counter(graph, c):
    @lru_cache(maxsize=None)
    def count(state) -> int:
        n = 0
        for t in graph.outgoing(state):
            if t.is_self_loop:
                continue
            n += 1 if t.produced == c else count(t.target)
        return n
    return count


def count_chi_paths(graph: LtsGraph, c: Metabolite) -> int:
    _check_target(graph, c)
    if c in graph.initial:
        return 0
    return _chi_counter(graph, c)(graph.initial)


def iter_chi_paths(graph: LtsGraph, c: Metabolite) -> Iterator[Path]:
    """Lazily yield every chi-path leading to ``c`` in deterministic order."""
    _check_target(graph, c)
    if c in graph.initial:
        return
    count = _chi_counter(graph, c)
    stack: list[Transition] = []

    def walk(state):
        for t in graph.outgoing(state):
            if t.is_self_loop:
                continue
            stack.append(t)
            if t.produced == c:
                yield Path(tuple(stack), graph.initial)
            elif count(t.target):
                yield from walk(t.target)
            stack.pop()

    yield from walk(graph.initial)


def chi_paths_to(graph: LtsGraph, c: Metabolite, limit: int = DEFAULT_MAX_PATHS) -> list[Path]:
    n = count_chi_paths(graph, c)
    if n > limit:
        raise LimitExceeded(f"chi-paths to {c!r}", n, limit)
    return list(iter_chi_paths(graph, c))


def chi_rule_sets(graph: LtsGraph, c: Metabolite,
                  limit: int = DEFAULT_MAX_PATHS) -> frozenset[frozenset[str]]:
    """Distinct rule sets over all chi-paths leading to ``c``.

    Computed per state without listing paths, so it scales past the path cap.
    ``limit`` bounds the size of any intermediate family of sets.
    """
    _check_target(graph, c)
    if c in graph.initial:
        return frozenset()

    @lru_cache(maxsize=None)
    def sets(state) -> frozenset:
        out = set()
        for t in graph.outgoing(state):
            if t.is_self_loop:
                continue
            rid = t.rule.id
            if t.produced == c:
                out.add(frozenset([rid]))
            else:
                for s in sets(t.target):
                    out.add(s | {rid})
            if len(out) > limit:
                raise LimitExceeded(f"chi-path rule sets to {c!r}", len(out), limit)
        return frozenset(out)

    return sets(graph.initial)


# -- rho-paths ----------------------------------------------------------------

def _rho_moves(graph, state, produced, required):
    """Allowed rho-steps from a search node, with the successor node."""
    s0 = graph.initial
    for t in graph.outgoing(state):
        if t.is_self_loop:
            if not _qualifies(t, s0, produced, required):
                continue
            yield t, (state, produced | {t.produced}, required | t.s_hat)
        else:
            yield t, (t.target, produced, required | t.s_hat)


def _rho_counter(graph: LtsGraph, c: Metabolite):
    return _memo(graph, ("rho", c), lambda: _make_rho_counter(graph, c))


def _make_rho_counter(graph, c):
    @lru_cache(maxsize=None)
    def count(node) -> int:
        n = 0
        for t, nxt in _rho_moves(graph, *node):
            n += 1 if t.produced == c else count(nxt)
        return n
    return count


def count_rho_paths(graph: LtsGraph, c: Metabolite) -> int:
    _check_target(graph, c)
    return _rho_counter(graph, c)((graph.initial, frozenset(), frozenset()))


def iter_rho_paths(graph: LtsGraph, c: Metabolite) -> Iterator[Path]:
    _check_target(graph, c)
    count = _rho_counter(graph, c)
    stack: list[Transition] = []

    def walk(node):
        for t, nxt in _rho_moves(graph, *node):
            stack.append(t)
            if t.produced == c:
                yield Path(tuple(stack), graph.initial)
            elif count(nxt):
                yield from walk(nxt)
            stack.pop()

    yield from walk((graph.initial, frozenset(), frozenset()))


def rho_paths_to(graph: LtsGraph, c: Metabolite, limit: int = DEFAULT_MAX_PATHS) -> list[Path]:
    n = count_rho_paths(graph, c)
    if n > limit:
        raise LimitExceeded(f"rho-paths to {c!r}", n, limit)
    return list(iter_rho_paths(graph, c))


# -- paths <-> explanations -------------------------------------------------

def tr_p(p: Path, c: Metabolite) -> Explanation:
    """Translate a path leading to ``c`` into an explanation of ``c``.

    A metabolite is explained by the step that produced it before it was
    needed, otherwise it must be an initial-solution leaf.
    """
    first: dict[Metabolite, int] = {}
    for i, t in enumerate(p.steps):
        first.setdefault(t.produced, i)

    def tr(b, before):
        i = first.get(b)
        if i is not None and i < before:
            t = p.steps[i]
            return Explanation(b, t.rule.id, tuple(tr(a, i) for a in t.rule.premises))
        if b in p.initial:
            return Explanation(b)
        raise InvalidExplanation(f"{b!r} is neither initial nor produced before it is needed")

    if c not in first:
        if c in p.initial:
            return Explanation(c)
        raise InvalidExplanation(f"path does not produce {c!r}")
    return tr(c, len(p.steps))


def relevant_steps(p: Path, c: Metabolite) -> Path:
    """The sub-path of the steps the explanation ``tr_p(p, c)`` actually uses."""
    e = tr_p(p, c)
    used = {sub.root for sub in e.subtrees() if not sub.is_leaf}
    state = p.initial
    keep = []
    for t in p.steps:
        if t.produced in used and not t.is_self_loop and t.produced not in state:
            nt = Transition(state, state | {t.produced}, t.theta, t.s_hat, t.produced, t.rule)
            keep.append(nt)
            state = nt.target
            used.discard(t.produced)
    return Path(tuple(keep), p.initial)


def paths_of_explanation(graph: LtsGraph, e: Explanation,
                         limit: int = DEFAULT_MAX_PATHS) -> list[Path]:
    """Every chi-path serializing the rule applications of ``e``.

    Independent sub-explanations may fire in any order, so one explanation
    generally yields several paths.
    """
    if not is_explanation(e, graph.network, graph.initial):
        raise InvalidExplanation(f"{e} is not an explanation for this network and solution")
    if not is_uniform(e):
        raise InvalidExplanation(f"{e} is not uniform")
    nodes: dict[Metabolite, Explanation] = {}
    for sub in e.subtrees():
        if not sub.is_leaf:
            nodes[sub.root] = sub
    for m in nodes:
        if m in graph.initial:
            raise InvalidExplanation(
                f"{m!r} is re-produced although initial; not realizable as a chi-path")
    if not nodes:
        return []
    deps = {m: {c.root for c in sub.children if not c.is_leaf} for m, sub in nodes.items()}
    spec = graph.spec
    theta_of = spec.theta_of
    out: list[Path] = []

    def walk(done, state, steps):
        if len(done) == len(nodes):
            out.append(Path(tuple(steps), graph.initial))
            if len(out) > limit:
                raise LimitExceeded("linearizations", len(out), limit)
            return
        for m in sorted(nodes):
            if m in done or not deps[m] <= done:
                continue
            rule = graph.network.rule(nodes[m].rule)
            if not set(rule.premises) <= state:
                raise InvalidExplanation(f"premises of {rule.id} unavailable")
            t = fire(spec, state, theta_of[rule.id])
            steps.append(t)
            walk(done | {m}, t.target, steps)
            steps.pop()

    walk(frozenset(), graph.initial, [])
    return out


def forward_path(graph: LtsGraph, c: Metabolite, without: Iterable[str] = (),
                 initial: Optional[Iterable[Metabolite]] = None) -> Optional[Path]:
    """A chi-path to ``c`` found by forward chaining, trimmed to relevant steps.

    Rules in ``without`` are not used. ``initial`` overrides the starting set
    (the transitions still record the graph's own initial solution). Returns
    ``None`` when ``c`` is not derivable.
    """
    spec = graph.spec
    theta_of = spec.theta_of
    drop = set(without)
    rules = [r for r in graph.network.rules if r.id not in drop]
    state = frozenset(graph.initial if initial is None else initial)
    start = state
    steps: list[Transition] = []
    while c not in state:
        for r in rules:
            if r.conclusion not in state and all(p in state for p in r.premises):
                t = fire(spec, state, theta_of[r.id])
                steps.append(t)
                state = t.target
                break
        else:
            return None
    return relevant_steps(Path(tuple(steps), start), c)
