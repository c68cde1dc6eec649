"""Compare toggle words with cactus elements on B(n omega_1) for D4."""
from heapcrys.dynkin import build_diagram
from heapcrys.toggles import check_conjectures

d = build_diagram("D4")
for r in check_conjectures(d, d.fundamental_weight(1), 2):
    print(f"n={r.n}: {r.lhs:>16} vs {r.rhs:<10} {'EQUAL' if r.equal else 'UNEQUAL'}")
