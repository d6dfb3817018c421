"""Curve models, point counting, Euler factors and Tate's algorithm."""
from .congruence import SlotCheck, congruence_check, twist
from .models import (
    DomainError,
    EllipticModel,
    F_integral,
    SexticModel,
    build_f_r,
    c53,
    cv25b,
    darmon_minus,
    darmon_plus,
    e2,
    e3_minus,
    e3_plus,
    e_t_remark25,
    euler_sextic_c5,
    frey_ppp,
    integral_model,
)
from .points import (
    BadReductionError,
    LPoly2,
    count_points,
    elliptic_charpoly,
    euler_factor,
    split_over_K,
)
from .tate import LocalData, conductor, tate_algorithm
