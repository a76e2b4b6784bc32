# -*- coding: utf-8 -*-

from fuzzjack.fuzzy.number import (
    AlphaGrid,
    FuzzyNumber,
    from_trapezoidal,
    from_triangular,
    crisp,
    add,
    scale,
    d_infty,
    includes,
    fuzzy_inclusion,
    gh_cases,
    gh_exists,
    gh_difference,
    g_difference,
    parse_fuzzy_literal,
)
from fuzzjack.fuzzy.function import (
    FuzzyFunction,
    CallableFuzzyFunction,
    SampledFuzzyFunction,
    IntervalFunction,
    ModulusValue,
    evaluate,
    alpha_slice,
    modulus_fuzzy,
    modulus_interval,
    modulus_upper,
    modulus,
    modulus_of_interval,
    check_nested_decreasing,
    check_nested_increasing,
    check_gh_chain,
    gh_chain_breaks,
    check_length_monotone,
    check_level_modulus,
    check_modulus_properties,
    sup_metric,
)
from fuzzjack.fuzzy.catalog import (
    catalog,
    catalog_names,
    interval_catalog,
    interval_catalog_names,
    scaled,
    translated,
)
from fuzzjack.fuzzy.io import (
    load_function,
    dump_function,
    load_fuzzy_number,
    dump_fuzzy_number,
)
