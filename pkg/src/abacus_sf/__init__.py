"""Exact abacus core/quotient calculus, power-sum symmetric functions,
and machine verification of the rectangular plethysm identities."""

from .partitions import (
    Abacus,
    BarAbacus,
    Partition,
    bar_core3,
    bar_quotient3,
    bar_sign3,
    beta_sequence,
    complementary_pairs,
    conjugate,
    double,
    enumerate_balanced,
    from_quotients,
    from_two_quotient,
    is_balanced,
    partitions_of,
    r_core,
    r_quotient,
    r_sign,
    strict_partitions_of,
)
from .characters import mn_character, z_factor
from .powersum import (
    hall_inner,
    omega_specialize,
    plethysm_pr,
    reduce_mod3,
    schur_p,
    schur_q,
    schur_small_p,
    to_schur_basis,
)
from .lr import (
    lr_coeff,
    plethysm_rect_balanced,
    plethysm_via_quotients,
    rectangle,
    schur_difference_expansion,
)
from .fock import (
    Filling,
    add_one_nodes,
    apply_e,
    apply_f,
    charge,
    homogeneous_degree,
    indent_nodes,
    lambda_ell,
    leidwanger_phi,
    p_exponent,
    removable_nodes,
    staircase_delta,
    weight_counts,
)
from .verifier import (
    VerificationReport,
    alpha_gamma_sequences,
    epsilon,
    verify_a11,
    verify_all,
    verify_balanced_plethysm,
    verify_littlewood,
    verify_main,
    verify_plethysm_quotient,
    verify_quotient_balance,
    verify_sign_lemma,
)

__version__ = "0.1.0"
