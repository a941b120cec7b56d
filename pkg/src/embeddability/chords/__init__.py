"""Chord diagrams, their blown-up configuration spaces and type-1 invariants."""

from .config import BlownUpComplex, build_config_space, gamma1_rank, theta0
from .derivative import (
    ArrowFormula,
    DerivativeData,
    DerivativeError,
    arrow_formula_obstruction,
    half_integer_formula,
    integral_arrow_formula,
    lift_cycle,
    propto,
    type1_basis,
    validate_derivative,
)
from .diagram import ChordDiagram, all_diagrams, interlacement, irreducible_factors, parse_diagram
from .h1 import h1_structure
from .knots import SingularKnotDiagram, crossing_change_pairs, evaluate_arrow_formula
from .planarity import manturov_pairs, planarity, realizable, v_ab_derivative
