"""Supercharacter theories of small finite groups, in exact arithmetic.

The package computes character tables (modular method), enumerates all
supercharacter theories of a group, builds the induced theories on
S-normal subgroups and quotients, evaluates the Camina / vanishing-off /
VZ structure theory, and mechanically verifies the full set of structural
theorems over a corpus of groups.  Every value lives in a cyclotomic
field with exact rational coordinates; no predicate is tolerance-based.
"""

from .chartab import (
    CharacterTable,
    character_table_of,
    class_mult_coefficients,
    dixon_character_table,
    ingest_table,
    validate_table,
)
from .cyclotomic import Cyclotomic, cyclotomic_polynomial, euler_phi, hermitian_term
from .errors import (
    CharacterTableError,
    ConsistencyError,
    GroupConstructionError,
    SuperTheoryError,
)
from .groups import (
    ElementPartition,
    GroupTable,
    SubgroupSet,
    build_group,
    catalog_group,
    conjugacy_classes,
    coset_saturation,
    derived_subgroup,
    full_subgroup,
    generated_subgroup,
    group_center,
    group_from_table_text,
    permutation_group,
    quotient_group,
    subgroup_group,
    subgroup_product,
    trivial_subgroup,
)
from .reports import Check, CheckReport
from .structure import (
    SeriesResult,
    deflated_gamma_check,
    hypercenter,
    irr_over,
    irr_quotient,
    is_s_abelian,
    is_s_normal,
    lower_series,
    s_center,
    s_commutator,
    s_commutator_full,
    s_nilpotence_class,
    s_normal_closure,
    s_normal_subgroups,
    super_kernel,
    upper_series,
)
from .supertheory import (
    SuperCharacter,
    SuperTheory,
    check_column_orthogonality,
    check_row_orthogonality,
    coarsest,
    deflation,
    delta_coarsen,
    enumerate_scts,
    finest,
    is_delta_product,
    is_star_product,
    restriction,
    sct_from_character_partition,
    sct_from_class_partition,
    star_construct,
    subquotient,
)
from .vanishing import (
    CaminaVerdict,
    is_camina_element,
    is_camina_pair,
    is_camina_triple,
    is_s_gcp,
    is_vz,
    nonvanishing_set,
    scd_check,
    u_chain,
    u_kernel_check,
    u_membership_check,
    u_quotient_check,
    u_rel,
    u_theory,
    v_rel,
    v_series,
    v_series_checks,
    v_theory,
    vanish_off,
)
from .verifier import (
    DEFAULT_CATALOG,
    THEOREM_DESCRIPTIONS,
    THEOREM_IDS,
    TheoremReport,
    corpus_json_bytes,
    failing_reports,
    run_corpus,
    run_suite,
)

__version__ = "0.1.0"
