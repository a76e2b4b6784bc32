# -*- coding: utf-8 -*-

"""
Exceptions raised by fuzzjack.

Each error also derives from the built-in exception a caller would expect,
so ``except ValueError`` keeps working for parameter and data problems.
"""


class FuzzjackError(Exception):
    pass


class GridMismatch(FuzzjackError, ValueError):
    pass


class GHDifferenceUndefined(FuzzjackError, ArithmeticError):
    pass


class DomainError(FuzzjackError, ValueError):
    pass


class InvalidParams(FuzzjackError, ValueError):
    pass


class HypothesisViolated(FuzzjackError, ValueError):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class SearchExhausted(FuzzjackError, RuntimeError):
    pass


class UnknownCatalogEntry(FuzzjackError, KeyError):
    def __str__(self):
        # KeyError quotes its argument otherwise
        return str(self.args[0]) if self.args else ""


class ConfigError(FuzzjackError, ValueError):
    pass


class SchemaError(ConfigError):
    def __init__(self, path: str, msg: str):
        super().__init__(f"{path}: {msg}")
        self.path = path


class InvariantError(FuzzjackError, ValueError):
    pass


class NonNestedCuts(InvariantError):
    pass
