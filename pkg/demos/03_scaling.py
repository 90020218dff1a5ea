"""
How the work grows
==================

Ballast rules make the program large without adding much to solve. The
bottom-up alternation pays for them on every round; the top-down search
only deletes them once.
"""

import numpy as np

from wfs.bench import growth_exponent, run

sizes = [25, 50, 100, 200]
rows = list(run("ballast", sizes, ["vg", "topdown"]))

for row in rows:
    print(f"{row['algorithm']:8s} n={row['n']:4d} size={row['size']:7d} "
          f"work={row['in_list_inspections']:10d} time={row['wall_time_ns'] / 1e9:7.3f}s")

# %%
# Slopes on a log-log scale.

for algorithm in ("vg", "topdown"):
    work = np.array([r["in_list_inspections"] for r in rows if r["algorithm"] == algorithm])
    print(f"{algorithm}: work ~ n^{growth_exponent(sizes, work):.2f}")

t_vg = np.array([r["wall_time_ns"] for r in rows if r["algorithm"] == "vg"], float)
t_td = np.array([r["wall_time_ns"] for r in rows if r["algorithm"] == "topdown"], float)
print("time ratio vg/topdown:", np.round(t_vg / t_td, 1))
