"""Exact combinatorics of specialized non-symmetric Macdonald polynomials:
coinversion-free fillings, a Burge-word RSK, charge, crystal operators,
vertical-strip LLT polynomials, and cyclic sieving verification."""

from .core import (
    CyclotomicValue,
    QPoly,
    conjugate,
    cyclotomic,
    eval_at_unity,
    mult_count,
    parse_partition,
    partition,
    partitions_of,
    q_binomial,
    q_factorial,
    q_int,
    q_lucas_check,
    q_multinomial,
    scale,
)
from .fillings import (
    Filling,
    NoValidFilling,
    SkewShape,
    enumerate_cof,
    enumerate_cof_content,
    extended_filling,
    from_column_sets,
    is_cof,
    macdonald_e,
    maj,
    principal_maj_poly,
)
from .symfunc import (
    SymPoly,
    coeff_monomial,
    elementary,
    complete,
    from_schur,
    kostka_number,
    omega_on_schur,
    plethysm_pk,
    power_sum,
    principal_spec,
    schur_polynomial,
    to_schur,
)
from .rsk_charge import (
    BurgeWord,
    Tableau,
    burge_word,
    charge,
    charge_perm,
    charge_tableau,
    charge_word,
    kq_coefficient,
    mahonian_check,
    postfix_charge,
    rsk,
    rsk_inverse,
    schur_expansion_via_charge,
    standard_subwords,
)
from .crystal import (
    cof_e,
    cof_f,
    crystal_biword,
    crystal_graph,
    rsk_equivariance_check,
    s_involution,
    word_e,
    word_f,
)
from .csp import (
    macdonald_csp_suite,
    orbits,
    phi,
    refined_csp_suite,
    sigma_action,
    sigma_csp_suite,
    unity_formula,
    verify_csp,
)
from .llt import VStripTuple, llt_poly, mininv, strips_from_skew, verify_llt_theorem
from .hall_littlewood import (
    hl_rect_unity_check,
    hl_root_factorization_check,
    kostka_foulkes,
    refined_coefficient_check,
    transformed_hl,
    verify_e_as_hl,
)

__version__ = "0.1.0"
