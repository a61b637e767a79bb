"""Exact rooted and unrooted hypermap counts for face type (m 1^(n-m)).

The package computes, in exact integer/rational arithmetic:

* rooted quasi-one-face map counts (weighted Hurwitz numbers times n),
* unrooted counts assembled over cyclic quotient orbifolds,
* the genus-zero plane-tree counts underlying both,
* order-preserving epimorphism counts onto cyclic groups,

and cross-validates every formula against a brute-force enumeration of
transitive permutation pairs.
"""

from .arith import (
    divisors,
    epi0_count,
    euler_phi,
    jordan_phi,
    mobius,
    orbicyclic,
    von_sterneck,
)
from .oracle import (
    CapExceeded,
    count_numbered_maps,
    is_transitive,
    oracle_fix,
    oracle_rooted,
    oracle_unrooted,
    permutations_of_type,
    verify_witness_table,
)
from .orbifolds import (
    OrbifoldSymbol,
    SigmaEntry,
    SigmaLabeledPassport,
    divide_passport,
    divide_quasi_one_face,
    enumerate_symbols,
    harvey_check,
    multiply,
    parse_symbol,
)
from .partitions import Partition, parse_partition, partitions_of
from .passports import (
    FilledPassport,
    Passport,
    QuasiOneFacePassport,
    ValidationReport,
    WeightDistribution,
    WeightEntry,
    enumerate_quasi_one_face,
    fill,
    passport_factorial,
    validate_passport,
)
from .rooted import (
    CycleData,
    RowRefinedPassport,
    enumerate_cycle_data,
    enumerate_row_refinements,
    exists_quasi_one_face,
    r_weight,
    rooted_count,
    weighted_hurwitz,
)
from .trees import (
    TreePassport,
    enumerate_passport_partitions,
    kochetkov_count,
    rooted_tree_count,
    rooted_weighted_tree_count,
    tree_exists,
)
from .unrooted import (
    QuotientTerm,
    assemble_unrooted,
    burnside_total,
    fix_count,
    quotient_terms,
    unrooted_count,
)

__version__ = "0.1.0"

__all__ = [
    "Partition",
    "parse_partition",
    "partitions_of",
    "WeightEntry",
    "WeightDistribution",
    "Passport",
    "QuasiOneFacePassport",
    "FilledPassport",
    "ValidationReport",
    "validate_passport",
    "fill",
    "passport_factorial",
    "enumerate_quasi_one_face",
    "euler_phi",
    "mobius",
    "jordan_phi",
    "von_sterneck",
    "orbicyclic",
    "epi0_count",
    "divisors",
    "TreePassport",
    "tree_exists",
    "enumerate_passport_partitions",
    "kochetkov_count",
    "rooted_tree_count",
    "rooted_weighted_tree_count",
    "CycleData",
    "RowRefinedPassport",
    "enumerate_cycle_data",
    "r_weight",
    "enumerate_row_refinements",
    "rooted_count",
    "weighted_hurwitz",
    "exists_quasi_one_face",
    "OrbifoldSymbol",
    "parse_symbol",
    "harvey_check",
    "enumerate_symbols",
    "SigmaEntry",
    "SigmaLabeledPassport",
    "multiply",
    "divide_passport",
    "divide_quasi_one_face",
    "QuotientTerm",
    "quotient_terms",
    "unrooted_count",
    "fix_count",
    "burnside_total",
    "assemble_unrooted",
    "CapExceeded",
    "permutations_of_type",
    "is_transitive",
    "count_numbered_maps",
    "oracle_rooted",
    "oracle_fix",
    "oracle_unrooted",
    "verify_witness_table",
]
