"""A five-rule network: the transition graph, its paths and their explanations.

Starting from {A, B}, reactions never consume anything, so each state is the
previous one plus a single new metabolite.
"""

from metacause import LtsGraph, chi_paths_to, corpus, export_dot, rules_of, tr_p

network, solution = corpus.load("ex1")
print(f"{len(network)} rules, initial solution {sorted(solution)}")

graph = LtsGraph.from_network(network, solution)
for state in graph.states:
    print(f"  {graph.state_name(state)} = {sorted(state)}")
print(f"{len(graph.transitions)} transitions, self-loops included")

# Two self-loop-free paths reach E. Each one reads back as a derivation tree.
for p in chi_paths_to(graph, "E"):
    e = tr_p(p, "E")
    print(f"\npath   {p}")
    print(f"tree   {e}")
    print(f"rules  {sorted(rules_of(e))}")

# Graphviz source; self-loops folded into one arc per state.
print("\n" + export_dot(graph, collapse_self_loops=True))
