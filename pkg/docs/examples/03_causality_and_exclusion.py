"""Rule ordering and trimming the initial solution.

Causality asks whether one rule always fires before another. Exclusion asks
whether an initial metabolite can be dropped, while redundancy asks whether
some initial metabolite can be regenerated on every route to the target.
"""

from metacause import LtsGraph, corpus, rho_paths_to
from metacause import properties as P

graph = LtsGraph.from_network(*corpus.load("ex2"))

for first, second in [("(λ,μ)", "(β,γ)"), ("(β,γ)", "(λ,μ)"), ("(λ,μ)", "(φ,π)")]:
    v = P.causes(graph, first, second, method="both")
    extra = f"; counterexample {v.witnesses[0]}" if v.witnesses else ""
    print(f"{first} before every {second}: {v.holds}{extra}")

v = P.redundant(graph, "E", method="both")
print(f"\ninitial solution redundant for E: {v.holds}, spare {list(v.witnesses)}")

# O can be regenerated by (ο,ι) before anything needs it.
for p in rho_paths_to(graph, "E"):
    if "O" not in p.used_initial() and not p.is_chi:
        print(f"rho-path not needing O: {p}")
        break

variant = LtsGraph.from_network(*corpus.load("ex3_modified"))
print("\nvariant where E is made from O and H:")
print(f"  O needed by every explanation of E: {P.checkpoint(variant, 'O', 'E', 'both').holds}")
print(f"  initial solution redundant for E:  {P.redundant(variant, 'E', 'both').holds}")
print(f"  O excludable for E:                {P.excludable(variant, 'O', 'E', 'both').holds}")
