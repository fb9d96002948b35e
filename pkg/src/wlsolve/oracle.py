"""Brute-force verification over small finite lattices.

Everything here works by enumerating every relation on a tiny universe and
evaluating the solution degrees directly from their definitions.  Nothing in
this module calls the iterative solvers except :func:`verify_greatest`, which
exists to compare the two.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .degree import SystemKind, sd
from .lattice import ResiduatedLattice
from .relation import FuzzyRelation, Universe, is_equivalence, is_preorder
from .solver import SolverConfig, solve_greatest

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceededError",
    "OracleInconsistencyError",
    "NoGreatestMemberError",
    "EnumerationSpec",
    "enumerate_relations",
    "solution_degree_table",
    "enumerate_cut",
    "greatest_cut_member",
    "check_join_closure",
    "AgreementReport",
    "check_cut_agreement",
    "VerificationReport",
    "verify_greatest",
]

DEFAULT_BUDGET = 10**6


class BudgetExceededError(RuntimeError):
    pass


class OracleInconsistencyError(AssertionError):
    """The join of a cut is not in the cut; the cut theory would be falsified."""


class NoGreatestMemberError(LookupError):
    pass


@dataclass(frozen=True)
class EnumerationSpec:
    lattice: ResiduatedLattice
    universe: Universe
    restrict: str | None = None  # None, "preorder" or "equivalence"
    bound: FuzzyRelation | None = None
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if not self.lattice.is_finite:
            raise ValueError("enumeration needs a finite lattice")
        if self.restrict not in (None, "preorder", "equivalence"):
            raise ValueError(f"unknown restriction {self.restrict!r}")
        if self.size > self.budget:
            raise BudgetExceededError(
                f"{len(self.lattice.elements())}^{len(self.universe) ** 2} = {self.size} "
                f"relations exceeds the budget of {self.budget}"
            )

    @property
    def size(self) -> int:
        return len(self.lattice.elements()) ** (len(self.universe) ** 2)

    def with_bound(self, bound: FuzzyRelation | None) -> "EnumerationSpec":
        return EnumerationSpec(self.lattice, self.universe, self.restrict, bound, self.budget)

    def admits(self, X: FuzzyRelation) -> bool:
        if self.bound is not None and not X <= self.bound:
            return False
        if self.restrict == "preorder":
            return is_preorder(X)
        if self.restrict == "equivalence":
            return is_equivalence(X)
        return True


def enumerate_relations(spec: EnumerationSpec) -> Iterator[FuzzyRelation]:
    """All relations admitted by ``spec``, in lexicographic order of entries."""
    L, U = spec.lattice, spec.universe
    n = len(U)
    for flat in itertools.product(L.elements(), repeat=n * n):
        X = FuzzyRelation(L, U, tuple(flat[i * n : (i + 1) * n] for i in range(n)))
        if spec.admits(X):
            yield X


def solution_degree_table(
    spec: EnumerationSpec, family: Sequence[FuzzyRelation], kind: int
) -> list[tuple[FuzzyRelation, object]]:
    """``(X, sd(kind, family, X))`` for every admitted ``X``; reusable across degrees and bounds."""
    family = list(family)
    return [(X, sd(kind, family, X)) for X in enumerate_relations(spec)]


def enumerate_cut(
    spec: EnumerationSpec,
    family: Sequence[FuzzyRelation],
    kind: int,
    x,
    table: list[tuple[FuzzyRelation, object]] | None = None,
) -> list[FuzzyRelation]:
    """Relations ``X <= bound`` with ``x <= sd(kind, family, X)``, in enumeration order.

    A precomputed ``table`` (from :func:`solution_degree_table` on an
    unbounded spec) may be passed to avoid re-evaluating degrees.
    """
    L = spec.lattice
    x = L.coerce(x)
    if table is None:
        table = solution_degree_table(spec, family, kind)
    return [X for X, d in table if L.leq(x, d) and spec.admits(X)]


def greatest_cut_member(
    spec: EnumerationSpec,
    family: Sequence[FuzzyRelation],
    kind: int,
    x,
    table: list[tuple[FuzzyRelation, object]] | None = None,
) -> FuzzyRelation:
    """The greatest member of the cut.

    Without a restriction this is the join of all members, which must itself
    be a member.  With a preorder/equivalence restriction a member above all
    others is searched for, and :class:`NoGreatestMemberError` is raised when
    there is none.
    """
    L, U = spec.lattice, spec.universe
    members = enumerate_cut(spec, family, kind, x, table)
    if spec.restrict is None:
        top = FuzzyRelation.empty(L, U)
        for X in members:
            top = top | X
        if not (L.leq(L.coerce(x), sd(kind, list(family), top)) and spec.admits(top)):
            raise OracleInconsistencyError("join of the cut is not a cut member")
        return top
    for X in members:
        if all(Y <= X for Y in members):
            return X
    raise NoGreatestMemberError(f"no greatest {spec.restrict} in the cut")


def check_join_closure(
    spec: EnumerationSpec,
    family: Sequence[FuzzyRelation],
    kind: int,
    x,
    table: list[tuple[FuzzyRelation, object]] | None = None,
) -> list[tuple[FuzzyRelation, FuzzyRelation]]:
    """Pairs of cut members whose join falls outside the cut (expected: none)."""
    members = enumerate_cut(spec, family, kind, x, table)
    inside = set(members)
    return [(A, B) for A, B in itertools.combinations(members, 2) if (A | B) not in inside]


@dataclass
class AgreementReport:
    checked: int = 0
    violations: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_cut_agreement(spec: EnumerationSpec, family: Sequence[FuzzyRelation]) -> AgreementReport:
    """For every fuzzy preorder ``P``, every degree and ``k`` in 1..3, check that
    cut membership for kinds ``k``, ``k+3`` and ``k+6`` coincides.

    Each violation is recorded as ``(P, x, k, (in_k, in_k3, in_k6))``.
    """
    L = spec.lattice
    family = list(family)
    report = AgreementReport()
    pre_spec = EnumerationSpec(L, spec.universe, "preorder", spec.bound, spec.budget)
    for P in enumerate_relations(pre_spec):
        degrees = {k: sd(k, family, P) for k in range(1, 10)}
        for x in L.elements():
            for k in (1, 2, 3):
                member = tuple(L.leq(x, degrees[j]) for j in (k, k + 3, k + 6))
                report.checked += 1
                if len(set(member)) != 1:
                    report.violations.append((P, x, k, member))
    return report


@dataclass
class VerificationReport:
    instances: int = 0
    mismatches: list[tuple] = field(default_factory=list)
    join_failures: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.join_failures


def verify_greatest(
    lattice: ResiduatedLattice,
    universe: Universe,
    families: Iterable[Sequence[FuzzyRelation]],
    kinds: Iterable[int] = (1, 2, 3),
    degrees: Iterable | None = None,
    bounds: Iterable[FuzzyRelation] | None = None,
    max_iterations: int = 1000,
) -> VerificationReport:
    """Compare :func:`solve_greatest` with the oracle on every combination.

    ``degrees`` defaults to every lattice element and ``bounds`` to every
    relation on the universe.  Each mismatch is recorded as
    ``(family, kind, x, X0, solver_result, oracle_result)``.
    """
    spec = EnumerationSpec(lattice, universe)
    degrees = list(lattice.elements() if degrees is None else degrees)
    bounds = list(enumerate_relations(spec) if bounds is None else bounds)
    kinds = [SystemKind(k) for k in kinds]
    report = VerificationReport()
    for family in families:
        family = list(family)
        for kind in kinds:
            table = solution_degree_table(spec, family, kind)
            for x in degrees:
                in_cut = [X for X, d in table if lattice.leq(x, d)]
                for X0 in bounds:
                    expected = FuzzyRelation.empty(lattice, universe)
                    for X in in_cut:
                        if X <= X0:
                            expected = expected | X
                    if not (expected <= X0 and lattice.leq(x, sd(kind, family, expected))):
                        report.join_failures += 1
                    result = solve_greatest(
                        family, SolverConfig(x, x0=X0, kind=kind, max_iterations=max_iterations)
                    )
                    report.instances += 1
                    if not result.converged or result.relation != expected:
                        report.mismatches.append((family, kind, x, X0, result.relation, expected))
    return report
