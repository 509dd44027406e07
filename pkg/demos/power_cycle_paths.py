"""Walk through the zig-zag construction on C_10^3 plus a matching.

Run: python3 demos/power_cycle_paths.py
"""

from pathdecomp import Matching, PowerCycleInstance, decompose_power_cycle, q_path, verify_decomposition
from pathdecomp.powers import power_instance_graph

n, k = 10, 3
M = Matching([(2, 8), (0, 5), (1, 6), (3, 7), (4, 9)])
inst = PowerCycleInstance(n, k, M)

# every vertex grows a path using one edge of each circular length 1..k
for v in (2, 8):
    print(f"Q_{v} =", q_path(v, k, n))

D = decompose_power_cycle(inst)
print(f"\n{len(D)} paths of length {D.length}:")
for t in D:
    mid = t[k], t[k + 1]
    print("  ", " ".join(map(str, t)), f"   middle edge {mid[0]}-{mid[1]}")

rep = verify_decomposition(power_instance_graph(inst), D, 2 * k + 1, M)
print()
print(rep)
