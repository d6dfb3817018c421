"""Conductor prediction: Igusa invariants, Liu's criterion and the conductor tables."""
from .igusa import (IgusaVec, ReductionClass, clebsch_invariants, igusa_clebsch, igusa_J,
                    liu_classify, liu_quantities, transvectant)
from .reduction import Reduction53, fifth_cube_shape, reduction_53
from .tables import (ConductorProfile, catalan_cond, cond2_minus, cond3_table, cond_q_table,
                     cond_r_table, d_of_poly, d_valuation, eps_53, is_reducible, predict_53,
                     table31, trivial_cond)

__all__ = [
    "IgusaVec", "ReductionClass", "clebsch_invariants", "igusa_clebsch", "igusa_J",
    "liu_classify", "liu_quantities", "transvectant",
    "Reduction53", "fifth_cube_shape", "reduction_53",
    "ConductorProfile", "catalan_cond", "cond2_minus", "cond3_table", "cond_q_table",
    "cond_r_table", "d_of_poly", "d_valuation", "eps_53", "is_reducible", "predict_53",
    "table31", "trivial_cond",
]
