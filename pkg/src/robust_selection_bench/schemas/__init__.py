"""Pydantic schemas shared by every layer of robust-selection-bench.

Schemas are the interchange format between layers: operations accept and
return these models, and validation failures are wrapped in ParameterError at
the boundary.
"""

from .base import CostVector, FrozenModel, Rational, format_rational, to_cost_vector, to_fraction
from .uncertainty import BudgetMode, BudgetedSet, DiscreteSet, IntervalSet, UncertaintySet
from .instances import (
    Criterion,
    DeltaSemantics,
    EvaluationReport,
    HiroLineage,
    NOMINAL_EQUIVALENT_PAIRINGS,
    Pairing,
    ProblemInstance,
    Provenance,
    SelectionSolution,
    SolutionRole,
    Witness,
    resolve_pairing,
)
from .solver import BranchingRule, SOLUTION_STATUSES, SolveResult, SolveStatus, SolverConfig
from .hiro import BOX_MODES, ITERATIVE_MODES, HiroConfig, HiroIteration, HiroMode, HiroTrace
from .samplers import GeneratorId, ShapeParams
from .bench import ERROR_STATUS, RESULT_COLUMNS, ExperimentConfig, ParameterTuple, ResultRecord

__all__ = [
    # Base
    "CostVector",
    "FrozenModel",
    "Rational",
    "format_rational",
    "to_cost_vector",
    "to_fraction",

    # Uncertainty
    "BudgetMode",
    "BudgetedSet",
    "DiscreteSet",
    "IntervalSet",
    "UncertaintySet",

    # Instances
    "Criterion",
    "DeltaSemantics",
    "EvaluationReport",
    "HiroLineage",
    "NOMINAL_EQUIVALENT_PAIRINGS",
    "Pairing",
    "ProblemInstance",
    "Provenance",
    "SelectionSolution",
    "SolutionRole",
    "Witness",
    "resolve_pairing",

    # Solver
    "BranchingRule",
    "SOLUTION_STATUSES",
    "SolveResult",
    "SolveStatus",
    "SolverConfig",

    # Hardening
    "BOX_MODES",
    "ITERATIVE_MODES",
    "HiroConfig",
    "HiroIteration",
    "HiroMode",
    "HiroTrace",

    # Samplers
    "GeneratorId",
    "ShapeParams",

    # Bench
    "ERROR_STATUS",
    "RESULT_COLUMNS",
    "ExperimentConfig",
    "ParameterTuple",
    "ResultRecord",
]
