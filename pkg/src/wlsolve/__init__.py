"""Degree-bounded solvers for weakly linear fuzzy relation systems over
complete residuated lattices, and aggregation of fuzzy networks."""
from .degree import RelationFamily, SystemKind, family_equality_degree, in_cut, sd
from .lattice import (
    FiniteLattice,
    LatticeError,
    ResiduatedLattice,
    generate_subalgebra,
    godel,
    is_heyting,
    lukasiewicz,
    product,
)
from .network import FactorNetwork, FuzzyNetwork, aggregate, factor
from .problem import Problem, ProblemError, fixture_path, load_problem
from .relation import (
    FuzzyRelation,
    FuzzySet,
    NotAPreorderError,
    Universe,
    UniverseMismatchError,
)
from .solver import (
    SolveReport,
    SolverConfig,
    SolveStatus,
    solve_equivalence,
    solve_greatest,
    solve_preorder,
)

__version__ = "0.1.0"
