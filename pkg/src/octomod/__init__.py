"""Exact computation with octonionic bimodules and para-linear maps."""

from .bimodule import Element, ModuleShape, O1
from .homalg import (
    HomModuleIso, odot_left, odot_right, regular_compose, right_mult_operator,
    left_mult_operator, transpose,
)
from .octonion import E, Octonion, format_octonion, parse_octonion
from .paralinear import LEFT, RIGHT, Chirality, ParaLinearMap, RealLinearMap

__version__ = "0.1.0"

__all__ = [
    "Element", "ModuleShape", "O1", "HomModuleIso", "odot_left", "odot_right",
    "regular_compose", "right_mult_operator", "left_mult_operator", "transpose",
    "E", "Octonion", "format_octonion", "parse_octonion",
    "LEFT", "RIGHT", "Chirality", "ParaLinearMap", "RealLinearMap",
]
