"""Exact-arithmetic engine for the rank-1 Heisenberg and Virasoro vertex
algebras over p-adic scalars: mode actions, axiom defect checks, graded-trace
characters as q-series, and Kummer-congruence families whose characters are
p-adic Eisenstein series.
"""

from .axioms import (
    DefectReport,
    associator_defect,
    commutator_defect,
    isometry_probe,
    jacobi_defect,
    locality_profile,
)
from .fock import HeisenbergState, Partition, grade_basis, partition_count, partitions_of
from .kummer import (
    KummerFamily,
    kummer_check,
    kummer_index,
    limit_character_check,
    square_bracket_state,
    square_bracket_state_by_substitution,
    u_state,
    v_state,
)
from .modes import (
    h_mode,
    mode_action,
    residue_product_mode,
    translation,
    virasoro_mode,
    zero_mode,
)
from .qchar import (
    QSeries,
    character,
    coprime_divisor_sum,
    divisor_power_sum,
    eisenstein_G,
    eisenstein_G2_star,
    eta_series,
    normalized_character,
    qseries_padic_distance,
)
from .scalars import (
    DEFAULT_PRECISION,
    PadicScalar,
    bernoulli,
    c_coefficient,
    gen_binomial,
    is_prime,
    padic_reduce,
    stirling2,
    valuation,
)
from .virasoro import (
    VirasoroState,
    L_action,
    vir_bracket_defect,
    vir_grade_basis,
    vir_mode_action,
)

__version__ = "0.1.0"
