"""Exact Einstein adapted metrics on bisymmetric fibrations of compact
simple Lie groups.

Modules
-------
exact        exact arithmetic: rationals, quadratic surds, certified root isolation
roots        integer-coordinate root systems with the Killing normalization
subalgebra   regular subalgebras, symmetric pairs, triple decompositions
casimir      Casimir eigenvalues (gamma, b, c_kn) via root strings
catalog      the catalog of maximal-rank bisymmetric triples
einstein     exact solvers for the Einstein system (s = 1 and s = 2)
tables       result-table regeneration and golden regression data
cli          command-line interface
"""

from .casimir import CasimirReport, casimir_report, scalarity_test
from .catalog import CATALOG, DomainError, TripleSpec, enumerate_triples, get
from .einstein import EinsteinMetric, ResidualReport, SolveReport, full_solve, verify_metric
from .exact import IsolatedRoot, Polynomial, QuadraticSurd
from .roots import RootSystem, SimpleType, build_root_system, dual_coxeter
from .subalgebra import Ideal, RegularSubalgebra, TripleDecomposition
from .tables import TableDiff, compute_table, load_golden, regenerate_table, table_ids

__version__ = "0.1.0"

__all__ = [
    "CATALOG",
    "CasimirReport",
    "DomainError",
    "EinsteinMetric",
    "Ideal",
    "IsolatedRoot",
    "Polynomial",
    "QuadraticSurd",
    "RegularSubalgebra",
    "ResidualReport",
    "RootSystem",
    "SimpleType",
    "SolveReport",
    "TableDiff",
    "TripleDecomposition",
    "TripleSpec",
    "build_root_system",
    "casimir_report",
    "compute_table",
    "dual_coxeter",
    "enumerate_triples",
    "full_solve",
    "get",
    "load_golden",
    "regenerate_table",
    "scalarity_test",
    "table_ids",
    "verify_metric",
    "__version__",
]
