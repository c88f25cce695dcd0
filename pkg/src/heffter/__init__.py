"""Tight Heffter arrays over finite fields: constructions, verification, search."""

from .constructions import (
    AgreeableParams,
    PairClass,
    agreeable_parameters,
    classify_pair,
    construct,
    construct_agreeable,
    construct_perfect,
    odd_part_radical,
)
from .core import (
    HeffterArray,
    MultiplierGroup,
    RankOneFactors,
    VerificationReport,
    array_from_factors,
    is_globally_simple,
    is_isomorphic_prime,
    multiplier_group,
    multiplier_group_brute,
    multiplier_group_rank_one,
    partial_sums,
    perm_equivalent,
    rank_one_factors,
    verify_heffter,
)
from .cyclotomy import (
    ElementSet,
    cyclotomic_class,
    is_half_set,
    is_zero_sum,
    product_factorization,
    stabilizer,
    subgroup_of_order,
)
from .field import FieldElement, FieldSpec, discrete_log, make_field, prime_power_decompose
from .io import parse, render_text, serialize
from .search import SearchConfig, SearchOutcome, scan_pairs, search_rank_one

__version__ = "0.1.0"
