"""symlevel: exact level/rank invariants, tensor coefficients and growth
reports for representations of symmetric groups."""

from .characters import (
    CharacterTable,
    ClassFunction,
    character,
    character_table,
    character_value,
    class_size,
    inner_product,
    specht_dim,
)
from .crystal import (
    SignatureString,
    e_tilde,
    epsilon,
    good_node,
    i_signature,
    is_jantzen_seitz,
    normal_nodes,
    rank_formula,
    reduced_signature,
    specht_rank_formula,
)
from .errors import (
    ArithmeticBugError,
    DomainError,
    InvalidCharacteristicError,
    SizeLimitError,
    SymlevelError,
)
from .growth import (
    GrowthRecord,
    G_of,
    F_prod,
    an_plancherel,
    check_dim_bound_char0,
    check_F_submultiplicative,
    check_G_submultiplicative,
    check_lambda_upper,
    check_lambda_vs_bar,
    dim_lower_bound,
    f_pair,
    growth_report,
    growth_sweep,
    observe_degree_vs_hook_products,
    observe_sum_triple_degree_ratios,
    plancherel,
)
from .partitions import (
    Partition,
    addable_nodes,
    bar,
    conjugate,
    dominates,
    enumerate_partitions,
    is_p_regular,
    level,
    parse_partition,
    partitions_of,
    removable_nodes,
    residue,
    sum_partitions,
)
from .rank import (
    TypeProfile,
    module_rank2,
    rank2_oracle,
    rank3_oracle,
    restriction_minus_character,
    type_profile_e2,
    type_profile_e3,
    verify_specht_rank,
    verify_tensor_rank_additivity,
)
from .reports import VerificationReport
from .tensor import (
    Decomposition,
    kronecker_coeff,
    kronecker_decompose,
    lr_coeff_characters,
    lr_coeff_tableaux,
    verify_murnaghan_littlewood,
)

__version__ = "0.1.0"
