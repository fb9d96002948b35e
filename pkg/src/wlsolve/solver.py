"""Iterative solvers for approximate solutions of weakly linear systems.

:func:`solve_greatest` computes the greatest relation below ``X0`` whose
solution degree is at least ``x``.  :func:`solve_preorder` and
:func:`solve_equivalence` compute *some* fuzzy preorder (equivalence) below
``X0`` with solution degree at least ``x``; no maximality is claimed for
those, and in general no greatest one exists.

All comparisons are exact.  Termination is not guaranteed over infinite
lattices, so every loop is bounded by ``max_iterations`` and running out is
reported as a status rather than raised.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Callable, Iterable

from .degree import RelationFamily, SystemKind, sd
from .lattice import ResiduatedLattice
from .relation import (
    FuzzyRelation,
    NotAPreorderError,
    Universe,
    UniverseMismatchError,
    compose,
    double_left,
    double_right,
    equality_degree,
    is_equivalence,
    is_preorder,
    left_residual,
    right_residual,
    scalar_to,
)

__all__ = [
    "DEFAULT_MAX_ITERATIONS",
    "SolveStatus",
    "SolverConfig",
    "SolveReport",
    "greatest_step",
    "preorder_step",
    "equivalence_step",
    "solve_greatest",
    "solve_preorder",
    "solve_equivalence",
]

DEFAULT_MAX_ITERATIONS = 1000


class SolveStatus(str, enum.Enum):
    CONVERGED = "converged"
    CAP_REACHED = "iteration_cap_reached"


@dataclass(frozen=True)
class SolverConfig:
    """Run parameters.

    ``degree`` may be a lattice value or anything the lattice can coerce
    (``"4/5"``, an element name).  ``x0=None`` means the universal relation.
    """

    degree: Any
    x0: FuzzyRelation | None = None
    kind: SystemKind = SystemKind.WLS3
    max_iterations: int = DEFAULT_MAX_ITERATIONS
    trace: bool = False

    def __post_init__(self):
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")
        object.__setattr__(self, "kind", SystemKind.parse(self.kind))


@dataclass(frozen=True)
class SolveReport:
    algorithm: str
    status: SolveStatus
    iterations: int
    relation: FuzzyRelation
    degree: Any
    kind: SystemKind
    # equality degree between each iterate and its successor, in order
    equality_degrees: tuple
    solution_degree: Any
    iterates: tuple[FuzzyRelation, ...] = ()

    @property
    def converged(self) -> bool:
        return self.status is SolveStatus.CONVERGED


def _context(family, config: SolverConfig) -> tuple[ResiduatedLattice, Universe, list[FuzzyRelation]]:
    members = list(family)
    if isinstance(family, RelationFamily):
        lattice, universe = family.lattice, family.universe
    elif config.x0 is not None:
        lattice, universe = config.x0.lattice, config.x0.universe
    elif members:
        lattice, universe = members[0].lattice, members[0].universe
    else:
        raise ValueError("cannot infer lattice and universe from an empty family without x0")
    for R in members:
        if R.universe != universe or R.lattice != lattice:
            raise UniverseMismatchError("family members must share universe and lattice")
    if config.x0 is not None and (config.x0.universe != universe or config.x0.lattice != lattice):
        raise UniverseMismatchError("x0 does not match the family's universe and lattice")
    return lattice, universe, members


def _coerce_degree(lattice: ResiduatedLattice, x):
    return lattice.coerce(x)


def greatest_step(members: list[FuzzyRelation], X: FuzzyRelation, x, kind: SystemKind) -> FuzzyRelation:
    """One update ``X & meet_i (x -> R_i o X) / R_i & meet_i R_i \\ (x -> X o R_i)``.

    Kind 1 keeps only the ``/`` terms, kind 2 only the ``\\`` terms.
    """
    result = X
    for R in members:
        if kind in (SystemKind.WLS1, SystemKind.WLS3):
            result = result & left_residual(scalar_to(x, compose(R, X)), R)
        if kind in (SystemKind.WLS2, SystemKind.WLS3):
            result = result & right_residual(R, scalar_to(x, compose(X, R)))
    return result


def _closure_step(members, X, kind, left, right):
    result = X
    for R in members:
        if kind in (SystemKind.WLS1, SystemKind.WLS3):
            RX = compose(R, X)
            result = result & left(RX, RX)
        if kind in (SystemKind.WLS2, SystemKind.WLS3):
            XR = compose(X, R)
            result = result & right(XR, XR)
    return result


def preorder_step(members: list[FuzzyRelation], X: FuzzyRelation, kind: SystemKind) -> FuzzyRelation:
    """``X & meet_i (R_i o X)/(R_i o X) & meet_i (X o R_i)\\(X o R_i)``; maps preorders to preorders."""
    return _closure_step(members, X, kind, left_residual, right_residual)


def equivalence_step(members: list[FuzzyRelation], X: FuzzyRelation, kind: SystemKind) -> FuzzyRelation:
    """As :func:`preorder_step` with the symmetric residuals; maps equivalences to equivalences."""
    return _closure_step(members, X, kind, double_left, double_right)


def solve_greatest(family: Iterable[FuzzyRelation], config: SolverConfig) -> SolveReport:
    """Greatest ``X <= X0`` with ``x <= sd(kind, family, X)``.

    Iterates :func:`greatest_step` from ``X0`` until two consecutive iterates
    are identical.  The sequence is non-increasing and its fixed point is the
    greatest member of the cut.
    """
    lattice, universe, members = _context(family, config)
    x = _coerce_degree(lattice, config.degree)
    X = config.x0 if config.x0 is not None else FuzzyRelation.universal(lattice, universe)

    def step(current):
        return greatest_step(members, current, x, config.kind)

    def done(current, nxt, eq):
        return nxt == current

    return _iterate("greatest", members, X, x, config, step, done, return_earlier=False)


def solve_preorder(family: Iterable[FuzzyRelation], config: SolverConfig) -> SolveReport:
    """A fuzzy preorder ``X <= X0`` with ``x <= sd(kind, family, X)``.

    Stops at the first iterate whose equality degree with its successor is at
    least ``x`` and returns that (earlier) iterate, which is certified to be
    in the cut.  ``X0`` must be a fuzzy preorder.
    """
    lattice, universe, members = _context(family, config)
    x = _coerce_degree(lattice, config.degree)
    X = config.x0 if config.x0 is not None else FuzzyRelation.universal(lattice, universe)
    if not is_preorder(X):
        raise NotAPreorderError("x0 must be a fuzzy preorder")

    def step(current):
        return preorder_step(members, current, config.kind)

    def done(current, nxt, eq):
        return lattice.leq(x, eq)

    return _iterate("preorder", members, X, x, config, step, done, return_earlier=True)


def solve_equivalence(family: Iterable[FuzzyRelation], config: SolverConfig) -> SolveReport:
    """A fuzzy equivalence ``X <= X0`` with ``x <= sd(kind, family, X)``; ``X0`` must be an equivalence."""
    lattice, universe, members = _context(family, config)
    x = _coerce_degree(lattice, config.degree)
    X = config.x0 if config.x0 is not None else FuzzyRelation.universal(lattice, universe)
    if not is_equivalence(X):
        raise NotAPreorderError("x0 must be a fuzzy equivalence")

    def step(current):
        return equivalence_step(members, current, config.kind)

    def done(current, nxt, eq):
        return lattice.leq(x, eq)

    return _iterate("equivalence", members, X, x, config, step, done, return_earlier=True)


def _iterate(
    algorithm: str,
    members: list[FuzzyRelation],
    X: FuzzyRelation,
    x,
    config: SolverConfig,
    step: Callable[[FuzzyRelation], FuzzyRelation],
    done: Callable[[FuzzyRelation, FuzzyRelation, Any], bool],
    return_earlier: bool,
) -> SolveReport:
    iterates = [X] if config.trace else []
    degrees = []

    def report(status, iterations, relation):
        return SolveReport(
            algorithm=algorithm,
            status=status,
            iterations=iterations,
            relation=relation,
            degree=x,
            kind=config.kind,
            equality_degrees=tuple(degrees),
            solution_degree=sd(config.kind, members, relation),
            iterates=tuple(iterates),
        )

    # a one-node universe or an empty family makes every relation a solution
    if not members or X.size == 1:
        return report(SolveStatus.CONVERGED, 0, X)

    for n in range(1, config.max_iterations + 1):
        nxt = step(X)
        eq = equality_degree(X, nxt)
        degrees.append(eq)
        if config.trace:
            iterates.append(nxt)
        if done(X, nxt, eq):
            return report(SolveStatus.CONVERGED, n, X if return_earlier else nxt)
        X = nxt
    return report(SolveStatus.CAP_REACHED, config.max_iterations, X)
