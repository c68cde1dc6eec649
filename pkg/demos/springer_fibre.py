"""Type A: flag tableaux of Springer fibre points versus the RPP tableau."""
from heapcrys.grassmannian import springer_compare

for n in (1, 2):
    rep = springer_compare(4, 2, n, seeds=3)
    print(f"n={n}: checked {rep.checked} points, failures {len(rep.failures)}")
