"""Exact and asymptotic counting of restricted compositions over finite abelian groups."""
from .group_core import Group, make_group, cyclic
from .group_algebra import GroupVector, ga_delta, ga_add, ga_mul, ga_coeff
from .finite_field import FieldSpec, make_field, fmul, finv, fpow, power_set
from .restriction import (
    ClassSpec, WindowRule, RestrictionDigraph, build_class, build_mullen, build_carlitz,
    build_window_sum, build_window_product_ne_one, build_unrestricted, is_strongly_connected,
    cycle_gcd, check_condition2, degree_constants, load_digraph, save_digraph,
)
from .transfer import TransferSystem, build_transfer, count, count_all, count_table, multisection_crosscheck
from .closed_forms import (
    AsymptoticEstimate, unrestricted_count, weak_unrestricted_count, corollary1_constants,
    corollary2_constants, theorem3_constants, theorem1_main_term, gcd_condition, falling_factorial,
)
from .spectral import PerronData, perron, asymptotic_constants
from .oracle import brute_count, brute_count_all, brute_subset_count, brute_diagonal_count
from .bijections import phi, phi_inv, check_bijection_prop5, check_s_independence
from .subset_waring import (
    count_subset_restricted, check_theorem1_hypothesis, diagonal_count, waring_number, NotReached,
)

__version__ = "0.1.0"
