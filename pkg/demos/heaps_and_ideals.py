"""Build the A3 diamond heap, list its ideals and print a 4-colouring as DOT."""
from heapcrys.dynkin import build_diagram
from heapcrys.export import heap_dot
from heapcrys.heap import build_heap, four_colouring, good_order_word, order_ideals

d = build_diagram("A3")
h = build_heap(d, "2,3,1,2")
print("beads:", [h.label(x) for x in range(len(h))])
for mask in order_ideals(h):
    print("  ideal", [h.label(x) for x in range(len(h)) if mask >> x & 1])
print("good order:", [h.label(x) for x in good_order_word(h)])
print(heap_dot(h, four_colouring(h)))
