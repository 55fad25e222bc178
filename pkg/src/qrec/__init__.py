"""Exact Q-system tables, minimal recurrence detection, and structural checks."""

from .cartan import LieType, cartan_data, growth_degree, predicted_order
from .linrec import RecurrencePoly, find_min_recurrence, multi_prime_detect
from .qsystem import (CharacterPoint, DimensionMode, QTable, RawQ, generate,
                      required_depths)
from .weights import dimension, elementary_symmetric, evaluate, weight_system

__all__ = [
    "LieType", "cartan_data", "growth_degree", "predicted_order",
    "RecurrencePoly", "find_min_recurrence", "multi_prime_detect",
    "RawQ", "CharacterPoint", "DimensionMode", "QTable", "generate",
    "required_depths",
    "dimension", "elementary_symmetric", "evaluate", "weight_system",
]
__version__ = "0.1.0"
