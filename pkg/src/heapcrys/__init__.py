"""
Heaps of dominant minuscule Weyl group elements, the crystals they carry
(ideals, reverse plane partitions, tableaux), toggles and cactus actions,
and the preprojective heap modules whose quiver Grassmannians realise the
same crystals.
"""
from .config import DEFAULTS, Bounds, derive_seed
from .crystal import (IdealCrystal, Rpp, RppCrystal, TensorCrystal, all_rpps, demazure,
                      demazure_tensor_comparison, generate_demazure, verify_gravsort)
from .dynkin import DynkinDiagram, build_diagram
from .grassmannian import (filtration, phi_of_module, sample_z_phi, springer_compare,
                           verify_main_theorem)
from .heap import Heap, build_heap, four_colouring, good_order_word, order_ideals
from .preproj import HeapModule, Submodule, build_heap_module, socle_dim_matrix
from .tableaux import Tableau, TableauCrystal, schuetzenberger
from .toggles import ActionContext, check_identity, runner_toggle, toggle_rpp
from .weyl import (dominant_minuscule_words, is_dominant_minuscule, is_lambda_minuscule,
                   is_minuscule, minimal_coset_rep, parse_word, weyl_dimension)

__version__ = "0.1.0"

__all__ = [
    "DEFAULTS", "Bounds", "derive_seed",
    "IdealCrystal", "Rpp", "RppCrystal", "TensorCrystal", "all_rpps", "demazure",
    "demazure_tensor_comparison", "generate_demazure", "verify_gravsort",
    "DynkinDiagram", "build_diagram",
    "filtration", "phi_of_module", "sample_z_phi", "springer_compare", "verify_main_theorem",
    "Heap", "build_heap", "four_colouring", "good_order_word", "order_ideals",
    "HeapModule", "Submodule", "build_heap_module", "socle_dim_matrix",
    "Tableau", "TableauCrystal", "schuetzenberger",
    "ActionContext", "check_identity", "runner_toggle", "toggle_rpp",
    "dominant_minuscule_words", "is_dominant_minuscule", "is_lambda_minuscule", "is_minuscule",
    "minimal_coset_rep", "parse_word", "weyl_dimension",
]
