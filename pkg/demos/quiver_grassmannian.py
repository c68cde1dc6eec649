"""Sample points of Z(Phi)° in CH(w)^{(+)2} and recover Phi from kernels and socles."""
from heapcrys.crystal import all_rpps
from heapcrys.grassmannian import phi_of_module, sample_z_phi
from heapcrys.preproj import build_heap_module, socle_dim_matrix

m = build_heap_module("A3", "2,3,1,2")
for phi in list(all_rpps(m.heap, 2))[:6]:
    M = sample_z_phi(m, phi, seed=1)
    got, _ = phi_of_module(M)
    sd = socle_dim_matrix(M).on_heap()
    print(phi.values, "-> Phi_M", got.values, "SD_M", sd, "dim", M.dim)
