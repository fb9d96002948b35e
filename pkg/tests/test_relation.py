from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from wlsolve.lattice import FiniteLattice, godel, product
from wlsolve.relation import (
    FuzzyRelation,
    FuzzySet,
    NotAPreorderError,
    Universe,
    UniverseMismatchError,
    afterset,
    compose,
    double_left,
    double_right,
    equality_degree,
    foreset,
    inclusion_degree,
    inverse,
    is_equivalence,
    is_preorder,
    left_residual,
    natural_equivalence,
    power,
    reflexive_transitive_closure,
    right_residual,
)

from conftest import rel

F = Fraction


def naive_compose(L, A, B):
    n = len(A)
    return [[max(L.otimes(A[u][w], B[w][v]) for w in range(n)) for v in range(n)] for u in range(n)]


def test_compose_worked_example():
    L = product()
    R = rel(L, [["1", "1/2"], ["0", "1"]])
    P = rel(L, [["1/2", "0"], ["1", "1"]])
    assert compose(R, P) == rel(L, [["1/2", "1/2"], ["1", "1"]])
    assert (R @ P).rows == tuple(map(tuple, naive_compose(L, R.rows, P.rows)))


def test_compose_against_naive_loop():
    L = product()
    rng = random.Random(7)
    grid = [F(p, 10) for p in range(11)]
    for _ in range(50):
        A = [[rng.choice(grid) for _ in range(4)] for _ in range(4)]
        B = [[rng.choice(grid) for _ in range(4)] for _ in range(4)]
        got = compose(FuzzyRelation.from_rows(L, A), FuzzyRelation.from_rows(L, B))
        assert [list(r) for r in got.rows] == naive_compose(L, A, B)


def test_identity_is_neutral():
    L = product()
    R = rel(L, [["1/3", "1/2"], ["0", "1/5"]])
    I = FuzzyRelation.identity(L, R.universe)
    assert compose(I, R) == R == compose(R, I)
    assert right_residual(I, R) == R == left_residual(R, I)


def test_residuals_worked_example():
    L = product()
    R = rel(L, [["1/2", "1"], ["1", "1/2"]])
    Q = FuzzyRelation.universal(L, R.universe)
    assert right_residual(R, Q) == Q == left_residual(Q, R)


def test_residuals_against_definition():
    L = product()
    R = rel(L, [["1/2", "1/5"], ["1", "1/4"]])
    Q = rel(L, [["1/4", "1/2"], ["1/5", "1"]])
    n = 2
    for u, v in itertools.product(range(n), repeat=2):
        col_u = [R.rows[w][u] for w in range(n)]
        col_v = [Q.rows[w][v] for w in range(n)]
        assert right_residual(R, Q).rows[u][v] == min(L.residuum(a, b) for a, b in zip(col_u, col_v))
        assert left_residual(Q, R).rows[u][v] == min(
            L.residuum(a, b) for a, b in zip(R.rows[v], Q.rows[u])
        )
        assert double_right(R, Q).rows[u][v] == min(L.biresiduum(a, b) for a, b in zip(col_u, col_v))
        assert double_left(Q, R).rows[u][v] == min(
            L.biresiduum(a, b) for a, b in zip(R.rows[v], Q.rows[u])
        )


def test_residuation_exhaustive_two_nodes():
    L = FiniteLattice.chain(3)
    U = Universe.of_size(2)
    rels = [
        FuzzyRelation(L, U, ((a, b), (c, d)))
        for a, b, c, d in itertools.product(L.elements(), repeat=4)
    ]
    rng = random.Random(1)
    for R in rels:
        for Q in rng.sample(rels, 10):
            right, left = right_residual(R, Q), left_residual(Q, R)
            for X in rels:
                assert (compose(R, X) <= Q) == (X <= right)
                assert (compose(X, R) <= Q) == (X <= left)


def test_sets_and_degrees():
    L = product()
    U = Universe.of_size(3)
    A = FuzzySet(L, U, (F(1, 2), F(1), F(0)))
    B = FuzzySet(L, U, (F(1, 4), F(1), F(1, 2)))
    assert inclusion_degree(A, B) == F(1, 2)
    assert inclusion_degree(B, A) == F(0)
    assert equality_degree(A, B) == F(0)
    assert (A & B).values == (F(1, 4), F(1), F(0))
    assert (A | B).values == (F(1, 2), F(1), F(1, 2))


def test_aftersets_and_foresets():
    L = product()
    R = rel(L, [["1", "1/2"], ["1/5", "0"]])
    assert afterset(R, 0).values == (F(1), F(1, 2))
    assert foreset(R, 0).values == (F(1), F(1, 5))
    assert afterset(R, "n2").values == (F(1, 5), F(0))


def test_power_and_inverse():
    L = product()
    R = rel(L, [["0", "1/2"], ["1/2", "0"]])
    assert power(R, 0) == FuzzyRelation.identity(L, R.universe)
    assert power(R, 2) == rel(L, [["1/4", "0"], ["0", "1/4"]])
    assert inverse(rel(L, [["0", "1"], ["0", "0"]])) == rel(L, [["0", "0"], ["1", "0"]])


def test_relation_predicates():
    L = product()
    P = rel(L, [["1", "1/2"], ["0", "1"]])
    assert is_preorder(P) and not is_equivalence(P)
    E = rel(L, [["1", "1/2"], ["1/2", "1"]])
    assert is_equivalence(E)
    assert not is_preorder(rel(L, [["1/2", "0"], ["0", "1"]]))


def test_closure_worked_example():
    L = product()
    R = rel(L, [["0", "1/2", "0"], ["0", "0", "1/2"], ["0", "0", "0"]])
    C = reflexive_transitive_closure(R)
    assert C == rel(L, [["1", "1/2", "1/4"], ["0", "1", "1/2"], ["0", "0", "1"]])


def test_natural_equivalence():
    L = godel()
    P = rel(L, [["1", "1", "1/2"], ["1", "1", "1/2"], ["1/3", "1/3", "1"]])
    E = natural_equivalence(P)
    assert E == rel(L, [["1", "1", "1/3"], ["1", "1", "1/3"], ["1/3", "1/3", "1"]])
    assert is_equivalence(E)
    with pytest.raises(NotAPreorderError):
        natural_equivalence(rel(L, [["0", "1"], ["1", "1"]]))


def test_universe_checks():
    L = product()
    A = FuzzyRelation.identity(L, Universe.of_size(2))
    B = FuzzyRelation.identity(L, Universe(("a", "b")))
    with pytest.raises(UniverseMismatchError):
        compose(A, B)
    with pytest.raises(ValueError):
        Universe(("a", "a"))
    with pytest.raises(ValueError):
        Universe(())


def test_malformed_rows_rejected():
    with pytest.raises(ValueError):
        FuzzyRelation.from_rows(product(), [["1", "0"], ["1"]])


def test_formatting_round_trip():
    L = product()
    R = rel(L, [["625/648", "0"], ["1", "1/2"]])
    assert R.formatted() == [["625/648", "0/1"], ["1/1", "1/2"]]
    assert FuzzyRelation.from_rows(L, R.formatted()) == R
