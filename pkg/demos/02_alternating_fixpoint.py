"""
Three ways to the well-founded model
====================================

guarded_chain(n) makes the alternating fixpoint crawl: b(i) can only be
refuted once c(i-1) is known true. All three solvers agree, but they
spend their effort differently.
"""

from wfs import SolveStats, solve_alg2, solve_alg3, solve_vg
from wfs.generators import guarded_chain
from wfs.textio import format_program, serialize_result

p = guarded_chain(4)
print(format_program(p))

# %%
# Iterate and print what each round adds.


def trace(event):
    if event["event"] == "iter":
        dt = sorted(p.name(a) for a in event["dt"])
        df = sorted(p.name(a) for a in event["df"])
        print(f"  round {event['i']}: +T {dt}  +F {df}")


for name, run in (("vg", solve_vg), ("alg2", solve_alg2)):
    print(name)
    stats = SolveStats()
    r = run(p, stats, trace)
    print(f"  {stats.iterations} rounds, {stats.rule_visits} rule visits")

print("topdown")
r, stats = solve_alg3(p, trace=trace)
print(f"  {stats.iterations} rounds, {stats.in_list_inspections} IN-list entries, "
      f"{stats.rules_deleted} rules deleted")

print()
print(serialize_result(r, "text"), end="")
