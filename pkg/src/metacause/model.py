"""Metabolites, rules, m_networks, initial solutions and explanation trees.

Metabolites are plain strings: name equality is metabolite identity. An
initial solution is a ``frozenset`` of metabolite names.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import BimolecularViolation, DuplicateRuleId, EmptyPremise, UnknownRule

Metabolite = str
Solution = frozenset


@dataclass(frozen=True)
class Rule:
    """An abstract reaction ``A1 o A2 -> C`` or ``A -> C``.

    ``reaction`` names the raw (pre-splitting) reaction the rule came from and
    does not take part in equality.
    """

    id: str
    premises: tuple[Metabolite, ...]
    conclusion: Metabolite
    reaction: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "premises", tuple(self.premises))
        if self.reaction is None:
            object.__setattr__(self, "reaction", self.id)

    @property
    def is_binary(self) -> bool:
        return len(self.premises) == 2

    @property
    def signature(self) -> tuple[tuple[Metabolite, ...], Metabolite]:
        """Structural identity used to match rules across networks."""
        return tuple(sorted(self.premises)), self.conclusion

    def __str__(self):
        return f"{self.id}: {' o '.join(self.premises)} -> {self.conclusion}"


@dataclass(frozen=True)
class MNetwork:
    rules: tuple[Rule, ...] = ()
    name: str = "network"

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))

    @cached_property
    def _by_id(self) -> dict[str, Rule]:
        return {r.id: r for r in self.rules}

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(r.id for r in self.rules)

    def __len__(self):
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def __contains__(self, rule_id):
        return rule_id in self._by_id

    def rule(self, rule_id: str) -> Rule:
        try:
            return self._by_id[rule_id]
        except KeyError:
            raise UnknownRule(rule_id) from None

    def resolve(self, ref: str | Iterable[str]) -> frozenset[str]:
        """Map a rule reference to the set of rule ids it denotes.

        A reference is a rule id (``r4.2``), a raw reaction id naming every
        rule split from it (``r4``), or an iterable of such references.
        """
        if not isinstance(ref, str):
            out: set[str] = set()
            for r in ref:
                out |= self.resolve(r)
            return frozenset(out)
        if ref in self._by_id:
            return frozenset([ref])
        group = frozenset(r.id for r in self.rules if r.reaction == ref)
        if not group:
            raise UnknownRule(ref)
        return group

    def producers(self, metabolite: Metabolite) -> tuple[Rule, ...]:
        return tuple(r for r in self.rules if r.conclusion == metabolite)

    def without(self, rule_ids: Iterable[str]) -> MNetwork:
        drop = set(rule_ids)
        return MNetwork(tuple(r for r in self.rules if r.id not in drop), self.name)

    @property
    def signatures(self) -> frozenset:
        return frozenset(r.signature for r in self.rules)


def split_reaction(premises: Sequence[Metabolite], products: Sequence[Metabolite],
                   base_id: str) -> list[Rule]:
    """Normalize a raw reaction into single-conclusion rules.

    One rule per product, all sharing the raw premises. A single product keeps
    ``base_id``; otherwise ids are ``base_id.1``, ``base_id.2``, ... in product
    order.
    """
    premises = tuple(premises)
    if len(premises) > 2:
        raise BimolecularViolation(base_id, len(premises))
    if not premises:
        raise EmptyPremise(base_id)
    if not products:
        raise ValueError(f"reaction {base_id!r} has no products")
    if len(products) == 1:
        return [Rule(base_id, premises, products[0], reaction=base_id)]
    return [Rule(f"{base_id}.{k}", premises, p, reaction=base_id)
            for k, p in enumerate(products, start=1)]


def validate_network(rules: Iterable[Rule], name: str = "network") -> MNetwork:
    seen = set()
    rules = tuple(rules)
    for r in rules:
        if r.id in seen:
            raise DuplicateRuleId(r.id)
        seen.add(r.id)
        if not r.premises:
            raise EmptyPremise(r.id)
        if len(r.premises) > 2:
            raise BimolecularViolation(r.id, len(r.premises))
    return MNetwork(rules, name)


def universe(network: MNetwork, solution: Iterable[Metabolite]) -> frozenset[Metabolite]:
    """Every metabolite mentioned by a rule or by the solution."""
    out = set(solution)
    for r in network.rules:
        out.update(r.premises)
        out.add(r.conclusion)
    return frozenset(out)


@dataclass(frozen=True)
class Explanation:
    """A causal derivation tree.

    A leaf (``rule is None``) stands for a metabolite taken from the initial
    solution; an inner node applies ``rule`` to the explanations of its
    premises, in the rule's declared premise order.
    """

    root: Metabolite
    rule: Optional[str] = None
    children: tuple[Explanation, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if self.rule is None and self.children:
            raise ValueError("a leaf explanation has no children")
        if self.rule is not None and not 1 <= len(self.children) <= 2:
            raise ValueError("a rule node has one or two children")

    @property
    def is_leaf(self) -> bool:
        return self.rule is None

    def subtrees(self):
        yield self
        for c in self.children:
            yield from c.subtrees()

    def __str__(self):
        if self.is_leaf:
            return f"{self.root}[]"
        return f"{self.root}_{{{self.rule}}}[{', '.join(map(str, self.children))}]"


def leaf(metabolite: Metabolite) -> Explanation:
    return Explanation(metabolite)


def node(metabolite: Metabolite, rule: str, *children: Explanation) -> Explanation:
    return Explanation(metabolite, rule, children)


def metabolites_of(e: Explanation) -> frozenset[Metabolite]:
    """The metabolites an explanation requires.

    A leaf requires its own metabolite; a rule node requires its premises and
    whatever their explanations require.
    """
    if e.is_leaf:
        return frozenset([e.root])
    out = {c.root for c in e.children}
    for c in e.children:
        out |= metabolites_of(c)
    return frozenset(out)


def rules_of(e: Explanation) -> frozenset[str]:
    # A leaf uses no reaction; the empty set is the only reading that is a set of rules.
    if e.is_leaf:
        return frozenset()
    out = {e.rule}
    for c in e.children:
        out |= rules_of(c)
    return frozenset(out)


def is_uniform(e: Explanation) -> bool:
    """True iff no metabolite receives two different sub-explanations."""
    seen: dict[Metabolite, Explanation] = {}
    for sub in e.subtrees():
        prev = seen.setdefault(sub.root, sub)
        if prev != sub:
            return False
    return True


def is_explanation(e: Explanation, network: MNetwork, solution: Iterable[Metabolite]) -> bool:
    """Check ``e`` is a well-formed explanation w.r.t. ``solution`` and ``network``."""
    solution = frozenset(solution)
    for sub in e.subtrees():
        if sub.is_leaf:
            if sub.root not in solution:
                return False
            continue
        if sub.rule not in network:
            return False
        r = network.rule(sub.rule)
        if r.conclusion != sub.root:
            return False
        if tuple(c.root for c in sub.children) != r.premises:
            return False
    return True
