"""Exact list-coloring counts and n-monophilic graph checks."""

from .counting import ListAssignment, Pin, col, col_pinned, col_uniform, induce
from .errors import BudgetExceeded, InputError
from .graph import Graph
from .search import is_choosable, is_monophilic, min_colorings

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "Graph",
    "InputError",
    "ListAssignment",
    "Pin",
    "col",
    "col_pinned",
    "col_uniform",
    "induce",
    "is_choosable",
    "is_monophilic",
    "min_colorings",
]
