"""Exact arithmetic: Q(sqrt5), cyclotomic integers, finite fields, polynomials."""
from .cyclo import Cyc, cyclotomic_poly, min_poly_over_Q, totient
from .ffield import Fq, cyclotomic_factors, field_build, field_extension
from .kfield import (KElt, PrimeSlotK, is_prime, multiplicative_order, recognize, slot_kind,
                     slots_up_to, sqrt_mod)
from .padic import valuation, content_valuation, INF

__all__ = [
    "Cyc", "cyclotomic_poly", "min_poly_over_Q", "totient",
    "Fq", "cyclotomic_factors", "field_build", "field_extension",
    "KElt", "PrimeSlotK", "is_prime", "multiplicative_order", "recognize", "slot_kind",
    "slots_up_to", "sqrt_mod", "valuation", "content_valuation", "INF",
]
