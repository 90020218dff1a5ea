"""
Finding an unfounded set top-down
=================================

A small Horn program with one positive body atom per rule. We watch the
search glue atoms into pf-sets until one of them has no rule reaching
outside it.
"""

from wfs import ShrinkingProgram, false_subset
from wfs.generators import PAPER_EXAMPLE, paper_example

print(PAPER_EXAMPLE)
p = paper_example()
q = ShrinkingProgram(p)
s = p.n_atoms


def show(atom):
    return "s" if atom == s else p.name(atom)


# IN lists: tails of the rules for each head, facts first as s
for a in range(p.n_atoms):
    print(f"IN({p.name(a)}) = ({', '.join(show(t) for t in q.in_tails(a))})")

# %%
# Run the search with a trace hook and print what happens.


def trace(event):
    kind = event["event"]
    if kind == "merge":
        print("merge    ", sorted(p.name(a) for a in event["members"]))
    elif kind == "back_edge":
        src = "{s}" if event["from"] is None else sorted(p.name(a) for a in event["from"])
        print("back edge", sorted(p.name(a) for a in event["to"]), "<-", src)
    else:
        print("report   ", sorted(p.name(a) for a in event["v"]))


v = false_subset(q, trace)
print("\nunfounded:", sorted(p.name(a) for a in v))
print("IN-list entries examined:", q.in_list_inspections, "of", len(p.rules))
