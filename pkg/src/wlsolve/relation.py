"""Fuzzy sets and square fuzzy relations over a finite universe.

Rows of a relation are aftersets and columns are foresets:
``afterset(R, u)(v) = R(u, v)`` and ``foreset(R, u)(v) = R(v, u)``.
All residuals are computed from these two views.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterator, Sequence

from .lattice import ResiduatedLattice

__all__ = [
    "UniverseMismatchError",
    "NotAPreorderError",
    "Universe",
    "FuzzySet",
    "FuzzyRelation",
    "compose",
    "power",
    "inverse",
    "scalar_otimes",
    "scalar_to",
    "inclusion_degree",
    "equality_degree",
    "right_residual",
    "left_residual",
    "double_right",
    "double_left",
    "is_reflexive",
    "is_symmetric",
    "is_transitive",
    "is_preorder",
    "is_equivalence",
    "natural_equivalence",
    "reflexive_transitive_closure",
    "afterset",
    "foreset",
]


class UniverseMismatchError(ValueError):
    """Operands live on different universes or over different lattices."""


class NotAPreorderError(ValueError):
    """A fuzzy preorder (or equivalence) was required."""


@dataclass(frozen=True)
class Universe:
    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(str(n) for n in self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("a universe must be nonempty")
        if len(set(names)) != len(names):
            raise ValueError("universe node names must be unique")

    @classmethod
    def of_size(cls, n: int, prefix: str = "n") -> "Universe":
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)))

    def index(self, node: str | int) -> int:
        if isinstance(node, int):
            if 0 <= node < len(self.names):
                return node
            raise KeyError(f"node index {node} out of range")
        try:
            return self.names.index(node)
        except ValueError:
            raise KeyError(f"unknown node {node!r}") from None

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)


@dataclass(frozen=True)
class FuzzySet:
    lattice: ResiduatedLattice
    universe: Universe
    values: tuple

    def __post_init__(self):
        if len(self.values) != len(self.universe):
            raise ValueError("fuzzy set length must match the universe")

    def __getitem__(self, u):
        return self.values[self.universe.index(u)]

    def __le__(self, other: "FuzzySet") -> bool:
        _check(self, other)
        return all(self.lattice.leq(a, b) for a, b in zip(self.values, other.values))

    def __and__(self, other: "FuzzySet") -> "FuzzySet":
        _check(self, other)
        m = self.lattice.meet
        return FuzzySet(self.lattice, self.universe, tuple(map(m, self.values, other.values)))

    def __or__(self, other: "FuzzySet") -> "FuzzySet":
        _check(self, other)
        j = self.lattice.join
        return FuzzySet(self.lattice, self.universe, tuple(map(j, self.values, other.values)))


@dataclass(frozen=True)
class FuzzyRelation:
    """An immutable ``|U| x |U|`` matrix of lattice values."""

    lattice: ResiduatedLattice
    universe: Universe
    rows: tuple[tuple, ...]

    def __post_init__(self):
        n = len(self.universe)
        if len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise ValueError(f"relation must be {n}x{n} to match the universe")

    @classmethod
    def from_rows(
        cls, lattice: ResiduatedLattice, rows: Sequence[Sequence[Any]], universe: Universe | None = None
    ) -> "FuzzyRelation":
        """Build a relation, coercing each entry (``"p/q"``, decimal string, element name)."""
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("relation matrix must be square")
        if universe is None:
            universe = Universe.of_size(n)
        return cls(lattice, universe, tuple(tuple(lattice.coerce(v) for v in r) for r in rows))

    @classmethod
    def from_function(
        cls, lattice: ResiduatedLattice, universe: Universe, f: Callable[[int, int], Any]
    ) -> "FuzzyRelation":
        n = len(universe)
        return cls(lattice, universe, tuple(tuple(f(i, j) for j in range(n)) for i in range(n)))

    @classmethod
    def identity(cls, lattice: ResiduatedLattice, universe: Universe) -> "FuzzyRelation":
        one, zero = lattice.top, lattice.bottom
        return cls.from_function(lattice, universe, lambda i, j: one if i == j else zero)

    @classmethod
    def universal(cls, lattice: ResiduatedLattice, universe: Universe) -> "FuzzyRelation":
        return cls.constant(lattice, universe, lattice.top)

    @classmethod
    def empty(cls, lattice: ResiduatedLattice, universe: Universe) -> "FuzzyRelation":
        return cls.constant(lattice, universe, lattice.bottom)

    @classmethod
    def constant(cls, lattice: ResiduatedLattice, universe: Universe, value) -> "FuzzyRelation":
        n = len(universe)
        return cls(lattice, universe, tuple((value,) * n for _ in range(n)))

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, key):
        u, v = key
        return self.rows[self.universe.index(u)][self.universe.index(v)]

    def entries(self) -> Iterator:
        for row in self.rows:
            yield from row

    def map(self, f: Callable[[Any], Any]) -> "FuzzyRelation":
        return FuzzyRelation(self.lattice, self.universe, tuple(tuple(map(f, r)) for r in self.rows))

    def zip_with(self, other: "FuzzyRelation", f: Callable[[Any, Any], Any]) -> "FuzzyRelation":
        _check(self, other)
        rows = tuple(tuple(map(f, a, b)) for a, b in zip(self.rows, other.rows))
        return FuzzyRelation(self.lattice, self.universe, rows)

    def __and__(self, other: "FuzzyRelation") -> "FuzzyRelation":
        return self.zip_with(other, self.lattice.meet)

    def __or__(self, other: "FuzzyRelation") -> "FuzzyRelation":
        return self.zip_with(other, self.lattice.join)

    def __le__(self, other: "FuzzyRelation") -> bool:
        _check(self, other)
        leq = self.lattice.leq
        return all(leq(a, b) for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    def __ge__(self, other: "FuzzyRelation") -> bool:
        return other <= self

    def __lt__(self, other: "FuzzyRelation") -> bool:
        return self <= other and self != other

    def __gt__(self, other: "FuzzyRelation") -> bool:
        return other < self

    def __matmul__(self, other: "FuzzyRelation") -> "FuzzyRelation":
        return compose(self, other)

    @property
    def T(self) -> "FuzzyRelation":
        return inverse(self)

    def formatted(self) -> list[list[str]]:
        return [[self.lattice.format(v) for v in r] for r in self.rows]

    def __str__(self):
        cells = self.formatted()
        width = max(len(c) for r in cells for c in r)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)


def _check(a, b):
    if a.universe != b.universe:
        raise UniverseMismatchError("operands are defined on different universes")
    if a.lattice != b.lattice:
        raise UniverseMismatchError("operands are defined over different lattices")


def compose(R: FuzzyRelation, P: FuzzyRelation) -> FuzzyRelation:
    """``(R o P)(u, v) = join_w R(u, w) otimes P(w, v)``."""
    _check(R, P)
    L = R.lattice
    ot, join_all = L.otimes, L.join_all
    cols = list(zip(*P.rows))
    rows = tuple(tuple(join_all(map(ot, r, c)) for c in cols) for r in R.rows)
    return FuzzyRelation(L, R.universe, rows)


def power(R: FuzzyRelation, n: int) -> FuzzyRelation:
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    result = FuzzyRelation.identity(R.lattice, R.universe)
    for _ in range(n):
        result = compose(R, result)
    return result


def inverse(R: FuzzyRelation) -> FuzzyRelation:
    return FuzzyRelation(R.lattice, R.universe, tuple(zip(*R.rows)))


def scalar_otimes(x, R: FuzzyRelation) -> FuzzyRelation:
    ot = R.lattice.otimes
    return R.map(lambda v: ot(x, v))


def scalar_to(x, R: FuzzyRelation) -> FuzzyRelation:
    to = R.lattice.residuum
    return R.map(lambda v: to(x, v))


def _flat(A):
    if isinstance(A, FuzzyRelation):
        return A.entries()
    return iter(A.values)


def inclusion_degree(A, B):
    """Degree to which ``A`` is contained in ``B``: meet of pointwise residua.

    Works on fuzzy sets and, over all ``|U|^2`` entries, on relations.
    """
    _check(A, B)
    L = A.lattice
    return L.meet_all(map(L.residuum, _flat(A), _flat(B)))


def equality_degree(A, B):
    """Degree to which ``A`` and ``B`` are equal: meet of pointwise biresidua."""
    _check(A, B)
    L = A.lattice
    return L.meet_all(map(L.biresiduum, _flat(A), _flat(B)))


def afterset(R: FuzzyRelation, u) -> FuzzySet:
    return FuzzySet(R.lattice, R.universe, R.rows[R.universe.index(u)])


def foreset(R: FuzzyRelation, u) -> FuzzySet:
    i = R.universe.index(u)
    return FuzzySet(R.lattice, R.universe, tuple(r[i] for r in R.rows))


def _residual_table(left_vectors, right_vectors, L, pointwise) -> tuple:
    return tuple(
        tuple(L.meet_all(map(pointwise, a, b)) for b in right_vectors)
        for a in left_vectors
    )


def right_residual(R: FuzzyRelation, Q: FuzzyRelation) -> FuzzyRelation:
    """``R \\ Q``: the greatest ``X`` with ``R o X <= Q``; entry ``(u, v)`` is ``Ru <~ Qv``."""
    _check(R, Q)
    L = R.lattice
    rows = _residual_table(list(zip(*R.rows)), list(zip(*Q.rows)), L, L.residuum)
    return FuzzyRelation(L, R.universe, rows)


def left_residual(Q: FuzzyRelation, R: FuzzyRelation) -> FuzzyRelation:
    """``Q / R``: the greatest ``X`` with ``X o R <= Q``; entry ``(u, v)`` is ``vR <~ uQ``."""
    _check(Q, R)
    L = R.lattice
    # entry (u, v) pairs afterset v of R with afterset u of Q
    transposed = _residual_table(R.rows, Q.rows, L, L.residuum)
    return FuzzyRelation(L, R.universe, tuple(zip(*transposed)))


def double_right(R: FuzzyRelation, Q: FuzzyRelation) -> FuzzyRelation:
    """``R \\\\ Q``; entry ``(u, v)`` is ``Ru ~ Qv`` (equality degree of foresets)."""
    _check(R, Q)
    L = R.lattice
    rows = _residual_table(list(zip(*R.rows)), list(zip(*Q.rows)), L, L.biresiduum)
    return FuzzyRelation(L, R.universe, rows)


def double_left(Q: FuzzyRelation, R: FuzzyRelation) -> FuzzyRelation:
    """``Q // R``; entry ``(u, v)`` is ``vR ~ uQ`` (equality degree of aftersets)."""
    _check(Q, R)
    L = R.lattice
    transposed = _residual_table(R.rows, Q.rows, L, L.biresiduum)
    return FuzzyRelation(L, R.universe, tuple(zip(*transposed)))


def is_reflexive(R: FuzzyRelation) -> bool:
    return all(R.rows[i][i] == R.lattice.top for i in range(R.size))


def is_symmetric(R: FuzzyRelation) -> bool:
    return inverse(R) <= R


def is_transitive(R: FuzzyRelation) -> bool:
    return compose(R, R) <= R


def is_preorder(R: FuzzyRelation) -> bool:
    return is_reflexive(R) and is_transitive(R)


def is_equivalence(R: FuzzyRelation) -> bool:
    return is_preorder(R) and is_symmetric(R)


def natural_equivalence(P: FuzzyRelation) -> FuzzyRelation:
    """``P & P^-1`` for a fuzzy preorder ``P``."""
    if not is_preorder(P):
        raise NotAPreorderError("natural equivalence needs a fuzzy preorder")
    return P & inverse(P)


def reflexive_transitive_closure(R: FuzzyRelation) -> FuzzyRelation:
    """Least fuzzy preorder containing ``R``.

    Since ``x otimes y <= x meet y``, paths longer than ``|U| - 1`` steps never
    beat a simple path, so the join of the first ``|U|`` powers of
    ``identity | R`` is already closed.
    """
    step = FuzzyRelation.identity(R.lattice, R.universe) | R
    result = acc = step
    for _ in range(R.size - 2):
        acc = compose(acc, step)
        result = result | acc
    return result
