"""Deciding causality-based properties of an m_network.

Every theorem-backed property has two decision procedures:

* ``reachability``: forward-chaining fixpoints over (possibly pruned) rule
  sets, polynomial in the network size;
* ``enumeration``: the literal quantification over chi- or rho-paths of the
  transition graph, exponential and bounded by a path cap.

``method="both"`` runs the two and raises :class:`OracleDisagreement` if they
differ.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional, Union

from .errors import (LimitExceeded, MismatchedSolutions, NotInSolution, OracleDisagreement,
                     TargetInSolution, UnknownMetabolite, UnknownRule)
from .lts import LtsGraph, Transition, closure, fire
from .model import Explanation, Metabolite, MNetwork, metabolites_of, rules_of
from .paths import (DEFAULT_MAX_PATHS, Path, chi_paths_to, count_chi_paths, forward_path,
                    rho_paths_to, tr_p)

REACH = "reachability"
ENUM = "enumeration"
BOTH = "both"

_METHODS = {"reach": REACH, "reachability": REACH, "enum": ENUM, "enumeration": ENUM,
            "both": BOTH}

ESSENTIAL = "Essential"
UNIVERSAL_ESSENTIAL = "UniversalEssential"
MUTUALLY_ESSENTIAL = "MutuallyEssential"
VICARIATE = "Vicariate"
CHECKPOINT = "Checkpoint"
CAUSES = "Causes"
REDUNDANT = "Redundant"
EXCLUDABLE = "Excludable"
STRONG_ROBUST = "StrongRobust"
WEAK_ROBUST = "WeakRobust"


@dataclass
class PropertyVerdict:
    property: str
    holds: bool
    method: str
    inputs: dict = field(default_factory=dict)
    witnesses: tuple = ()
    paths_cap: Optional[int] = None
    exceeded: bool = False

    def __bool__(self):
        return self.holds

    def to_obj(self) -> dict:
        from .textio import to_obj

        return {
            "property": self.property,
            "inputs": to_obj(self.inputs),
            "holds": self.holds,
            "method": self.method,
            "witnesses": [to_obj(w) for w in self.witnesses],
            "limits": {"paths_cap": self.paths_cap, "exceeded": self.exceeded},
        }


def _method(method: str) -> str:
    try:
        return _METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; use reach, enum or both") from None


def _decide(name, inputs, method, limit, reach, enum) -> PropertyVerdict:
    method = _method(method)
    if method == REACH:
        holds, wit = reach()
        return PropertyVerdict(name, holds, REACH, inputs, tuple(wit))
    if method == ENUM:
        holds, wit = enum()
        return PropertyVerdict(name, holds, ENUM, inputs, tuple(wit), paths_cap=limit)
    h1, w1 = reach()
    h2, w2 = enum()
    if h1 != h2:
        raise OracleDisagreement(
            f"{name}{inputs}: reachability says {h1}, enumeration says {h2}")
    return PropertyVerdict(name, h1, BOTH, inputs, tuple(w1) or tuple(w2), paths_cap=limit)


def resolve(graph_or_network, ref) -> frozenset[str]:
    """Rule ids denoted by a rule id, a raw reaction id, or a reaction id ``theta``."""
    if isinstance(graph_or_network, LtsGraph):
        net = graph_or_network.network
        index = graph_or_network.spec.rule_index
        if not isinstance(ref, (list, set, frozenset)) and ref in index:
            return frozenset([index[ref].id])
    else:
        net = graph_or_network
    return net.resolve(ref)


def _target(graph: LtsGraph, c: Metabolite, allow_initial=False):
    if c not in graph.universe:
        raise UnknownMetabolite(c)
    if not allow_initial and c in graph.initial:
        raise TargetInSolution(c)


def _rules(graph: LtsGraph, without: Iterable[str] = ()):
    drop = set(without)
    return [r for r in graph.network.rules if r.id not in drop]


def _derivable(graph, c, without=(), initial=None, blocked=()):
    start = graph.initial if initial is None else initial
    return c in closure(_rules(graph, without), start, blocked)


def _trim(steps, start, needed) -> list:
    """Keep only the steps whose product is (transitively) needed."""
    needed = set(needed)
    keep = []
    for t in reversed(steps):
        if t.produced in needed and t.produced not in start:
            keep.append(t)
            needed.discard(t.produced)
            needed.update(t.rule.premises)
    keep.reverse()
    return keep


def _replay(graph: LtsGraph, rule_ids, start=None) -> Path:
    spec = graph.spec
    theta_of = spec.theta_of
    state = graph.initial if start is None else frozenset(start)
    init = state
    steps = []
    for rid in rule_ids:
        t = fire(spec, state, theta_of[rid])
        steps.append(t)
        state = t.target
    return Path(tuple(steps), init)


def _chain(graph, rules, state, goal, blocked=()):
    """Forward-chain from ``state`` with ``rules`` until ``goal(state)``; None if stuck."""
    blocked = set(blocked)
    order = []
    while not goal(state):
        for r in rules:
            if r.conclusion not in state and r.conclusion not in blocked \
                    and all(p in state for p in r.premises):
                order.append(r)
                state = state | {r.conclusion}
                break
        else:
            return None, state
    return order, state


def _path_through(graph, allowed, blocked, final_rule, target) -> Optional[Path]:
    """A chi-path that fires ``final_rule`` (prefix drawn from ``allowed`` with
    ``blocked`` never produced) and then goes on to produce ``target``."""
    prem = set(final_rule.premises)
    pre, state = _chain(graph, allowed, graph.initial, lambda s: prem <= s, blocked)
    if pre is None or final_rule.conclusion in state:
        return None
    order = pre + [final_rule]
    state = state | {final_rule.conclusion}
    post, state = _chain(graph, graph.network.rules, state, lambda s: target in s)
    if post is None:
        return None
    order += post
    p = _replay(graph, [r.id for r in order])
    keep = _trim(p.steps, graph.initial, {target, final_rule.conclusion})
    return _replay(graph, [t.rule.id for t in keep])


# -- reaction properties ----------------------------------------------------

def essential(graph: LtsGraph, theta, c: Metabolite, method: str = "reach",
              limit: int = DEFAULT_MAX_PATHS) -> PropertyVerdict:
    """Is the rule (or rule group) ``theta`` needed for every derivation of ``c``?"""
    ids = resolve(graph, theta)
    _target(graph, c)
    inputs = {"rule": sorted(ids), "target": c}

    def reach():
        if not _derivable(graph, c):
            return False, ()
        w = forward_path(graph, c, without=ids)
        if w is not None:
            return False, (w,)
        return True, (forward_path(graph, c),)

    def enum():
        paths = chi_paths_to(graph, c, limit)
        if not paths:
            return False, ()
        avoid = [p for p in paths if not p.rule_set & ids]
        return (False, avoid[:1]) if avoid else (True, paths[:1])

    return _decide(ESSENTIAL, inputs, method, limit, reach, enum)


def universal_essential(network: Union[MNetwork, LtsGraph], theta, c: Metabolite) -> bool:
    """Syntactic essentiality for every possible solution.

    ``theta`` must be the only producer of ``c`` among the rules that do not
    already need ``c``.
    """
    ids = resolve(network, theta)
    net = network.network if isinstance(network, LtsGraph) else network
    producers = {r.id for r in net.rules if r.conclusion == c and c not in r.premises}
    return bool(producers) and producers <= ids


def mutually_essential(graph: LtsGraph, t1, t2, c: Metabolite, method: str = "reach",
                       limit: int = DEFAULT_MAX_PATHS) -> PropertyVerdict:
    ids1, ids2 = resolve(graph, t1), resolve(graph, t2)
    _target(graph, c)
    inputs = {"first": sorted(ids1), "second": sorted(ids2), "target": c}

    def reach():
        w1 = forward_path(graph, c, without=ids1)
        w2 = forward_path(graph, c, without=ids2)
        if w1 is None or w2 is None:
            return False, ()
        both = forward_path(graph, c, without=ids1 | ids2)
        if both is not None:
            return False, (both,)
        return True, (w1, w2)

    def enum():
        paths = chi_paths_to(graph, c, limit)
        w1 = [p for p in paths if not p.rule_set & ids1]
        w2 = [p for p in paths if not p.rule_set & ids2]
        if not w1 or not w2:
            return False, ()
        both = [p for p in paths if not p.rule_set & (ids1 | ids2)]
        if both:
            return False, both[:1]
        return True, (w1[0], w2[0])

    return _decide(MUTUALLY_ESSENTIAL, inputs, method, limit, reach, enum)


def vicarious(a: Union[Path, Explanation], b: Union[Path, Explanation]) -> bool:
    """Two derivations of the same metabolite are vicarious when their rule sets differ."""
    def rs(x):
        return rules_of(x) if isinstance(x, Explanation) else x.rule_set
    return rs(a) != rs(b)


def checkpoint(graph: LtsGraph, b: Metabolite, c: Metabolite, method: str = "reach",
               limit: int = DEFAULT_MAX_PATHS) -> PropertyVerdict:
    """Is ``b`` required by every explanation of ``c``?

    An underivable ``c`` is reported as not holding.
    """
    _target(graph, c)
    if b not in graph.universe:
        raise UnknownMetabolite(b)
    inputs = {"necessary": b, "target": c}
    users = {r.id for r in graph.network.rules if b in r.premises}

    def reach():
        if not _derivable(graph, c):
            return False, ()
        w = forward_path(graph, c, without=users)
        if w is not None:
            return False, (tr_p(w, c),)
        return True, ()

    def enum():
        paths = chi_paths_to(graph, c, limit)
        if not paths:
            return False, ()
        for p in paths:
            e = tr_p(p, c)
            if b not in metabolites_of(e):
                return False, (e,)
        return True, ()

    return _decide(CHECKPOINT, inputs, method, limit, reach, enum)


def checkpoint_path_conditions(graph: LtsGraph, b: Metabolite, c: Metabolite,
                               limit: int = DEFAULT_MAX_PATHS) -> bool:
    """The per-path test: on every chi-path to ``c``, ``b`` is present before
    the last step and, if initial, appears among the consumed initial
    reagents. Implied by :func:`checkpoint`; the converse can fail when a path
    takes steps irrelevant to ``c``."""
    _target(graph, c)
    paths = chi_paths_to(graph, c, limit)
    if not paths:
        return False
    for p in paths:
        if b not in p.steps[-1].source:
            return False
        if b in graph.initial and not any(b in t.s_hat for t in p.steps):
            return False
    return True


def causes(graph: LtsGraph, t1, t2, method: str = "reach",
           limit: int = DEFAULT_MAX_PATHS) -> PropertyVerdict:
    """Is every firing of ``t2`` on a chi-path preceded by a firing of ``t1``?

    The reachability test asks whether some rule of ``t2`` can fire as a
    state-changing step once every rule of ``t1`` is removed: its premises must
    be derivable without ever producing its own conclusion.
    """
    ids1, ids2 = resolve(graph, t1), resolve(graph, t2)
    inputs = {"first": sorted(ids1), "second": sorted(ids2)}
    rest = _rules(graph, ids1)

    def reach():
        for rid in sorted(ids2):
            r = graph.network.rule(rid)
            if r.conclusion in graph.initial:
                continue
            cl = closure(rest, graph.initial, blocked={r.conclusion})
            if set(r.premises) <= cl:
                return False, (_path_through(graph, rest, {r.conclusion}, r, r.conclusion),)
        return True, ()

    def enum():
        for rid in sorted(ids2):
            x = graph.network.rule(rid).conclusion
            if x in graph.initial:
                continue
            for p in chi_paths_to(graph, x, limit):
                if p.rules[-1] == rid and not set(p.rules[:-1]) & ids1:
                    return False, (p,)
        return True, ()

    return _decide(CAUSES, inputs, method, limit, reach, enum)


def excludable(graph: LtsGraph, b: Metabolite, c: Metabolite, method: str = "reach",
               limit: int = DEFAULT_MAX_PATHS) -> PropertyVerdict:
    """Can ``b`` be dropped from the initial solution while ``c`` stays derivable?"""
    if b not in graph.initial:
        raise NotInSolution(b)
    _target(graph, c)
    inputs = {"excluded": b, "target": c}
    reduced = graph.initial - {b}

    def reach():
        w = forward_path(graph, c, initial=reduced)
        if w is None:
            return False, ()
        return True, (_replay(graph, w.rules),)

    def enum():
        for p in rho_paths_to(graph, c, limit):
            if b not in p.used_initial():
                return True, (p,)
        return False, ()

    return _decide(EXCLUDABLE, inputs, method, limit, reach, enum)


def _redundancy_breaker(graph: LtsGraph, b: Metabolite, c: Metabolite) -> Optional[Path]:
    """A chi-path to ``c`` on which ``b`` is needed before any rule could re-make it.

    Searches the states reachable without producing ``c`` and without using
    ``b``; returns ``None`` when no such path exists.
    """
    net = graph.network
    s0 = graph.initial
    users = [r for r in net.rules if b in r.premises]
    makers = [r for r in net.rules if r.conclusion == b and b not in r.premises]
    free = [r for r in net.rules if b not in r.premises and r.conclusion != c]
    parent: dict = {s0: None}
    queue = deque([s0])
    while queue:
        s = queue.popleft()
        if not any(all(p in s for p in m.premises) for m in makers):
            for r in users:
                if r.conclusion not in s and all(p in s for p in r.premises):
                    prefix = []
                    cur = s
                    while parent[cur] is not None:
                        prev, rid = parent[cur]
                        prefix.append(rid)
                        cur = prev
                    prefix.reverse()
                    order = prefix + [r.id]
                    state = s | {r.conclusion}
                    post, _ = _chain(graph, net.rules, state, lambda x: c in x)
                    return _replay(graph, order + [q.id for q in post or []])
        for r in free:
            if r.conclusion not in s and all(p in s for p in r.premises):
                nxt = s | {r.conclusion}
                if nxt not in parent:
                    parent[nxt] = (s, r.id)
                    queue.append(nxt)
    return None


def redundant(graph: LtsGraph, c: Metabolite, method: str = "reach",
              limit: int = DEFAULT_MAX_PATHS) -> PropertyVerdict:
    """Is some initial metabolite dispensable on every chi-path to ``c``?

    ``b`` is dispensable for a chi-path when inserting qualifying self-loops
    into it yields a rho-path that does not need ``b`` from the start. The
    witnesses are the dispensable metabolites.
    """
    _target(graph, c)
    inputs = {"target": c}
    s0 = sorted(graph.initial)

    def reach():
        if not _derivable(graph, c):
            return False, ()
        spare = [b for b in s0 if _redundancy_breaker(graph, b, c) is None]
        return bool(spare), spare

    def enum():
        rhos = rho_paths_to(graph, c, limit)
        chis = [p for p in rhos if p.is_chi]
        if not chis:
            return False, ()
        free_by_skeleton: dict[tuple, set] = {}
        for q in rhos:
            free = free_by_skeleton.setdefault(q.skeleton(), set())
            free |= graph.initial - q.used_initial()
        spare = [b for b in s0 if all(b in free_by_skeleton[p.rules] for p in chis)]
        return bool(spare), spare

    return _decide(REDUNDANT, inputs, method, limit, reach, enum)


def redundancy_union(graph: LtsGraph, c: Metabolite,
                     limit: int = DEFAULT_MAX_PATHS) -> frozenset[Metabolite]:
    """Union of the initial metabolites needed by the rho-paths leading to ``c``."""
    _target(graph, c)
    out: set = set()
    for p in rho_paths_to(graph, c, limit):
        out |= p.used_initial()
    return frozenset(out)


# -- network properties -------------------------------------------------------

def _same_solution(g1: LtsGraph, g2: LtsGraph):
    if g1.initial != g2.initial:
        raise MismatchedSolutions(
            f"initial solutions differ: {sorted(g1.initial)} vs {sorted(g2.initial)}")


def replay(p: Path, graph: LtsGraph) -> Optional[Path]:
    """Re-run ``p`` step for step in another network, matching rules structurally.

    Returns ``None`` when some rule is missing or some step would not change
    the state.
    """
    by_sig = {r.signature: r for r in graph.network.rules}
    theta_of = graph.spec.theta_of
    state = graph.initial
    steps = []
    for t in p.steps:
        r = by_sig.get(t.rule.signature)
        if r is None or not set(r.premises) <= state:
            return None
        nt = fire(graph.spec, state, theta_of[r.id])
        if nt.is_self_loop != t.is_self_loop:
            return None
        steps.append(nt)
        state = nt.target
    return Path(tuple(steps), graph.initial)


def strong_robust(g1: LtsGraph, g2: LtsGraph, c: Metabolite, method: str = "reach",
                  limit: int = DEFAULT_MAX_PATHS) -> PropertyVerdict:
    """Does every chi-path of ``g1`` leading to ``c`` replay in ``g2``?"""
    _same_solution(g1, g2)
    _target(g1, c)
    inputs = {"from": g1.network.name, "to": g2.network.name, "target": c}

    def reach():
        if not _derivable(g1, c):
            return True, ()
        sigs = g2.network.signatures
        for d in g1.network.rules:
            if d.signature in sigs or d.conclusion in g1.initial:
                continue
            blocked = {c, d.conclusion}
            if set(d.premises) <= closure(g1.network.rules, g1.initial, blocked):
                return False, (_path_through(g1, g1.network.rules, blocked, d, c),)
        return True, ()

    def enum():
        for p in chi_paths_to(g1, c, limit):
            q = replay(p, g2)
            if q is None or q.produced[-1] != c:
                return False, (p,)
        return True, ()

    return _decide(STRONG_ROBUST, inputs, method, limit, reach, enum)


def weak_robust(g1: LtsGraph, g2: LtsGraph, c: Metabolite, method: str = "reach",
                limit: int = DEFAULT_MAX_PATHS) -> PropertyVerdict:
    """If ``g1`` derives ``c``, does ``g2`` derive it too?"""
    _same_solution(g1, g2)
    _target(g1, c)
    inputs = {"from": g1.network.name, "to": g2.network.name, "target": c}

    def reach():
        if not _derivable(g1, c):
            return True, ()
        if c not in g2.universe:
            return False, ()
        w = forward_path(g2, c)
        return (w is not None), ((w,) if w else ())

    def enum():
        if not count_chi_paths(g1, c):
            return True, ()
        if c not in g2.universe:
            return False, ()
        return count_chi_paths(g2, c) > 0, ()

    return _decide(WEAK_ROBUST, inputs, method, limit, reach, enum)


# -- batch what-if sweep ------------------------------------------------------

def screen(graph: LtsGraph, c: Metabolite, method: str = "reach",
           limit: int = DEFAULT_MAX_PATHS) -> dict[str, Any]:
    """Essentiality of every rule, exclusion of every initial metabolite and
    every checkpoint for ``c``."""
    _target(graph, c)
    return {
        "target": c,
        "derivable": _derivable(graph, c),
        "essential": {r.id: essential(graph, r.id, c, method, limit) for r in graph.network.rules},
        "excludable": {b: excludable(graph, b, c, method, limit) for b in sorted(graph.initial)},
        "checkpoints": {b: checkpoint(graph, b, c, method, limit)
                        for b in sorted(graph.universe - {c})},
    }
