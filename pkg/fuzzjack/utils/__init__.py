# -*- coding: utf-8 -*-

from fuzzjack.utils.utils import fmt17, unit_points
from fuzzjack.utils.configs import (
    Method,
    ModulusKind,
    Verdict,
    ApproxConfig,
    ExperimentConfig,
)
from fuzzjack.utils.errors import (
    FuzzjackError,
    GridMismatch,
    GHDifferenceUndefined,
    DomainError,
    InvalidParams,
    HypothesisViolated,
    SearchExhausted,
    UnknownCatalogEntry,
    ConfigError,
    SchemaError,
    InvariantError,
    NonNestedCuts,
)
