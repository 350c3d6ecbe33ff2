"""Subgroup enumeration, classification, and counting for Z_m x Z_n."""

from .arith import (
    dirichlet,
    divisors,
    euler_phi,
    factorize,
    mobius,
    multiplicative_eval_2var,
    tau,
)
from .counting import (
    SubgroupTable,
    TypeKey,
    build_table,
    count_by_order,
    count_by_order_prime_power,
    count_by_type,
    count_cyclic,
    count_cyclic_reference,
    count_cyclic_by_order,
    count_total,
    count_total_fast,
    count_total_prime_power,
    count_total_reference,
)
from .goursat import (
    ElementSet,
    GoursatTuple,
    InvariantPair,
    SubgroupDescriptor,
    describe,
    enumerate_tuples,
    find_tuple,
    materialize,
    offset_form,
)
from .oracle import OracleReport, brute_subgroups, classify, cross_check

__all__ = [
    "ElementSet",
    "GoursatTuple",
    "InvariantPair",
    "OracleReport",
    "SubgroupDescriptor",
    "SubgroupTable",
    "TypeKey",
    "brute_subgroups",
    "build_table",
    "classify",
    "count_by_order",
    "count_by_order_prime_power",
    "count_by_type",
    "count_cyclic",
    "count_cyclic_reference",
    "count_cyclic_by_order",
    "count_total",
    "count_total_fast",
    "count_total_prime_power",
    "count_total_reference",
    "cross_check",
    "describe",
    "dirichlet",
    "divisors",
    "enumerate_tuples",
    "euler_phi",
    "factorize",
    "find_tuple",
    "materialize",
    "mobius",
    "multiplicative_eval_2var",
    "offset_form",
    "tau",
]
