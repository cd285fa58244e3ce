"""Exact constructions and checks for grid drawings of graphs."""
from .errors import BudgetExceeded, DegenerateSegment, FormatError, InconsistentSystem
from .graph import NORMAL, PATH, Graph, PartClass, VertexPartition
from .verify import GridDrawing, gp, is_proper, is_valid_drawing

__all__ = [
    "BudgetExceeded",
    "DegenerateSegment",
    "FormatError",
    "InconsistentSystem",
    "NORMAL",
    "PATH",
    "Graph",
    "PartClass",
    "VertexPartition",
    "GridDrawing",
    "gp",
    "is_proper",
    "is_valid_drawing",
]
