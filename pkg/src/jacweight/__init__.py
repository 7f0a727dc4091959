"""Exact weight-enumerator invariants of linear codes.

Complete weight enumerators, Jacobi polynomials, joint variants,
their duality transforms, closed-form permutation averages, average
intersection numbers, and support-design checks, all in exact
arithmetic over prime-power fields and modular integer rings.
"""

from .averages import (
    AverageResult,
    avg_jacobi,
    avg_joint_jacobi,
    avg_joint_jacobi_value,
    brute_avg_jacobi,
    brute_avg_joint_jacobi,
    brute_delta,
    delta,
    delta_closed,
    intersection_point,
    intersection_size,
    monte_carlo_delta,
)
from .codes import (
    BudgetExceeded,
    CodeFormatError,
    LinearCode,
    code_from_json,
    code_to_json,
    load_code,
)
from .designs import (
    BlockMultiset,
    DesignReport,
    is_t_design,
    is_t_homogeneous,
    supports,
)
from .enumerators import (
    collapse,
    cwe,
    cwe_genus,
    jacobi,
    joint_cwe,
    joint_jacobi,
    macwilliams_both,
    macwilliams_first,
    macwilliams_second,
    macwilliams_single,
)
from .exactnum import Cyclotomic, NonRationalValue, root_of_unity, simplify
from .polynomials import SparsePolynomial
from .rings import RingSpec, field_ring, make_ring, modular_ring

__version__ = "0.1.0"
