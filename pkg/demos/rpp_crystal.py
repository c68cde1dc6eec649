"""B(2 omega_2) for A3 as reverse plane partitions; compare with the Demazure closure."""
from heapcrys.crystal import RppCrystal, check_axioms, verify_gravsort
from heapcrys.dynkin import build_diagram
from heapcrys.heap import build_heap

d = build_diagram("A3")
lam = d.fundamental_weight(2)
h = build_heap(d, "2,3,1,2")
c = RppCrystal(h, lam, 2)
els = c.elements()
print(len(els), "RPPs; axiom violations:", check_axioms(c, els))
for phi in els[:5]:
    print(" ", phi.values, "wt", c.wt(phi))
rep = verify_gravsort(d, "2,3,1,2", lam, 2)
print("Demazure closure:", rep.demazure_size, "chains:", rep.chain_count, "ok:", rep.ok)
