"""Exact computational algebra for finite Gelfand pairs: character tables,
double-coset algebras, zonal spherical functions, and brute-force oracles
for their structure coefficients."""

from .chartab import (
    CharTable,
    IntegralityError,
    RootMultiset,
    character_table,
    class_constants,
    eval_complex,
    frobenius_center_coeff,
)
from .grouptab import (
    DoubleCosetPartition,
    EnumerationOverflow,
    GroupTable,
    Subgroup,
    double_cosets,
    generate_group,
    group_from_spec,
    opposite_product,
    product_with_opposite,
    subgroup_from_generators,
)
from .pairs import (
    ConsistencyError,
    NotGelfandError,
    PairData,
    build_pair,
    induced_multiplicities,
    is_gelfand,
    structure_coeff,
    structure_coeff_multi,
)
from .partitions import (
    PairLabel,
    coset_type,
    mn_character,
    partition_stats,
    partitions_of,
    sn_sn1_label,
)
from .perm import compose, identity, inverse, parse_cycles

__version__ = "0.1.0"
