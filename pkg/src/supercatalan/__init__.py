"""Super-Catalan numbers, aligned cubic trees and the hidden-node bijection."""

from ._accel import BACKEND
from .codec import CtreeCode, canonical, enumerate_planted, enumerate_unrooted, parse_code, reroot, validate
from .numbers import catalan, ctree_count, hidden_class_count, recurrence_rhs, super_catalan

__all__ = [
    "BACKEND",
    "CtreeCode",
    "canonical",
    "catalan",
    "ctree_count",
    "enumerate_planted",
    "enumerate_unrooted",
    "hidden_class_count",
    "parse_code",
    "recurrence_rhs",
    "reroot",
    "super_catalan",
    "validate",
]
