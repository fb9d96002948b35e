"""Fuzzy networks and their aggregation into factor networks."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .degree import RelationFamily, SystemKind
from .relation import (
    FuzzyRelation,
    NotAPreorderError,
    Universe,
    compose,
    is_preorder,
    natural_equivalence,
)
from .solver import (
    DEFAULT_MAX_ITERATIONS,
    SolveReport,
    SolverConfig,
    solve_equivalence,
    solve_preorder,
)

__all__ = ["FuzzyNetwork", "FactorNetwork", "factor", "aggregate", "block_name"]


@dataclass(frozen=True)
class FuzzyNetwork:
    """Named nodes plus a family of edge-label relations."""

    family: RelationFamily

    @property
    def universe(self) -> Universe:
        return self.family.universe

    @property
    def lattice(self):
        return self.family.lattice


@dataclass(frozen=True)
class FactorNetwork:
    blocks: tuple[tuple[str, ...], ...]
    family: RelationFamily  # over the quotient universe, same labels as the input
    preorder: FuzzyRelation
    equivalence: FuzzyRelation

    @property
    def names(self) -> tuple[str, ...]:
        return self.family.universe.names

    def __len__(self):
        return len(self.blocks)


def block_name(members) -> str:
    return "+".join(sorted(members))


def _blocks(X: FuzzyRelation) -> list[list[int]]:
    # nodes with identical rows of X, i.e. equal aftersets
    groups: dict[tuple, list[int]] = {}
    for i, row in enumerate(X.rows):
        groups.setdefault(row, []).append(i)
    return list(groups.values())


def factor(network: FuzzyNetwork, X: FuzzyRelation) -> FactorNetwork:
    """Quotient of ``network`` by the value-1 classes of ``X``'s natural equivalence.

    The label between blocks ``[u]`` and ``[v]`` is ``(X o R_i o X)(u, v)``;
    a ``ValueError`` is raised if this depends on the chosen representatives.
    """
    if X.universe != network.universe or X.lattice != network.lattice:
        raise ValueError("preorder and network do not share universe and lattice")
    if not is_preorder(X):
        raise NotAPreorderError("factoring needs a fuzzy preorder")
    E = natural_equivalence(X)
    U = network.universe
    groups = _blocks(X)
    blocks = tuple(tuple(U.names[i] for i in g) for g in groups)
    quotient = Universe(tuple(block_name(b) for b in blocks))
    L = network.lattice
    members = []
    for R in network.family:
        XRX = compose(compose(X, R), X)
        rows = []
        for gu in groups:
            row = []
            for gv in groups:
                values = {XRX.rows[u][v] for u in gu for v in gv}
                if len(values) != 1:
                    raise ValueError("factor relation depends on block representatives")
                row.append(values.pop())
            rows.append(tuple(row))
        members.append(FuzzyRelation(L, quotient, tuple(rows)))
    fam = RelationFamily(L, quotient, tuple(members), network.family.labels)
    return FactorNetwork(blocks, fam, X, E)


def aggregate(
    network: FuzzyNetwork,
    x: Any,
    kind: SystemKind | int = SystemKind.WLS3,
    method: str = "preorder",
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
) -> tuple[FactorNetwork | None, SolveReport]:
    """Compute an approximate regular preorder (or equivalence) from the
    universal relation and factor the network by it.

    When the solver hits its iteration cap no factor network is produced and
    ``None`` is returned alongside the report.
    """
    solvers = {"preorder": solve_preorder, "equivalence": solve_equivalence}
    if method not in solvers:
        raise ValueError(f"unknown method {method!r}")
    config = SolverConfig(x, None, SystemKind.parse(kind), max_iterations)
    report = solvers[method](network.family, config)
    if not report.converged:
        return None, report
    return factor(network, report.relation), report
