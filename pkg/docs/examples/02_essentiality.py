"""Which rules and metabolites every derivation depends on.

Each question is answered twice: by forward chaining over a pruned rule set,
and by quantifying over every path of the transition graph. ``method="both"``
insists that the answers match.
"""

from metacause import LtsGraph, corpus
from metacause import properties as P

graph = LtsGraph.from_network(*corpus.load("ex2"))
print(f"{len(graph.states)} states; the last one holds all {len(graph.maximal_state())} metabolites")

v = P.essential(graph, "(ξ,θ)", "H", method="both")
print(f"\n(ξ,θ) essential for H: {v.holds}")

# E has two unrelated derivations, so neither final rule is indispensable...
for rule in ("(ψ,ν)", "(α,ζ)"):
    v = P.essential(graph, rule, "E", method="both")
    print(f"{rule} essential for E: {v.holds}; E still made by {v.witnesses[0]}")

# ...but removing both kills E.
v = P.mutually_essential(graph, "(ψ,ν)", "(α,ζ)", "E", method="both")
print(f"(ψ,ν) and (α,ζ) mutually essential for E: {v.holds}")
a, b = v.witnesses
print(f"surviving derivations are vicarious: {P.vicarious(a, b)}")

v = P.checkpoint(graph, "H", "L", method="both")
print(f"\nH needed by every explanation of L: {v.holds}")
