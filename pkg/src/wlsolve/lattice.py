"""Complete residuated lattices.

Two families of structures are provided:

* the three standard structures on the unit interval (Goedel, product and
  Lukasiewicz), whose values are exact :class:`fractions.Fraction` objects;
* :class:`FiniteLattice`, a residuated lattice given by explicit tables, whose
  values are integer indices into its element list.

Every structure exposes the same small interface (``meet``, ``join``,
``otimes``, ``residuum``, ``biresiduum``, ``leq``, ``top``, ``bottom``), so the
relational calculus built on top never needs to know which one it works with.
"""
from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from fractions import Fraction
from functools import reduce
from typing import Any, Hashable, Iterable, Sequence

__all__ = [
    "LatticeError",
    "ResiduatedLattice",
    "UnitInterval",
    "GodelStructure",
    "ProductStructure",
    "LukasiewiczStructure",
    "FiniteLattice",
    "godel",
    "product",
    "lukasiewicz",
    "is_heyting",
    "generate_subalgebra",
    "format_fraction",
    "parse_fraction",
]

Value = Hashable


class LatticeError(ValueError):
    """Raised for malformed lattice definitions or values outside a carrier."""


def parse_fraction(text: Any) -> Fraction:
    """Parse ``"p/q"``, a decimal string, an int or a Fraction into a Fraction."""
    if isinstance(text, bool):
        raise LatticeError(f"not a rational value: {text!r}")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if isinstance(text, str):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise LatticeError(f"not a rational value: {text!r}") from exc
    raise LatticeError(f"not a rational value: {text!r}")


def format_fraction(value: Fraction) -> str:
    """Canonical ``"p/q"`` form; integers are written ``"0/1"`` and ``"1/1"``."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


class ResiduatedLattice(ABC):
    """A complete residuated lattice ``(L, meet, join, otimes, residuum, 0, 1)``."""

    name: str = "abstract"

    @property
    @abstractmethod
    def top(self) -> Value: ...

    @property
    @abstractmethod
    def bottom(self) -> Value: ...

    @abstractmethod
    def leq(self, a: Value, b: Value) -> bool: ...

    @abstractmethod
    def meet(self, a: Value, b: Value) -> Value: ...

    @abstractmethod
    def join(self, a: Value, b: Value) -> Value: ...

    @abstractmethod
    def otimes(self, a: Value, b: Value) -> Value: ...

    @abstractmethod
    def residuum(self, a: Value, b: Value) -> Value: ...

    def biresiduum(self, a: Value, b: Value) -> Value:
        return self.meet(self.residuum(a, b), self.residuum(b, a))

    def meet_all(self, values: Iterable[Value]) -> Value:
        return reduce(self.meet, values, self.top)

    def join_all(self, values: Iterable[Value]) -> Value:
        return reduce(self.join, values, self.bottom)

    @property
    def is_finite(self) -> bool:
        return False

    def elements(self) -> tuple:
        raise LatticeError(f"{self.name} structure has an infinite carrier")

    @abstractmethod
    def coerce(self, value: Any) -> Value:
        """Convert a user-supplied value (string, number, name) into a carrier element."""

    @abstractmethod
    def format(self, value: Value) -> str:
        """Serialize a carrier element to a string that :meth:`coerce` reads back."""

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"


class UnitInterval(ResiduatedLattice):
    """Shared order structure of the three standard structures on [0, 1]."""

    @property
    def top(self) -> Fraction:
        return Fraction(1)

    @property
    def bottom(self) -> Fraction:
        return Fraction(0)

    def leq(self, a, b):
        return a <= b

    def meet(self, a, b):
        return a if a <= b else b

    def join(self, a, b):
        return b if a <= b else a

    def coerce(self, value):
        v = parse_fraction(value)
        if not 0 <= v <= 1:
            raise LatticeError(f"value {value!r} is outside [0, 1]")
        return v

    def format(self, value):
        return format_fraction(value)

    def __eq__(self, other):
        return type(self) is type(other)

    def __hash__(self):
        return hash(type(self))


class GodelStructure(UnitInterval):
    name = "godel"

    def otimes(self, a, b):
        return a if a <= b else b

    def residuum(self, a, b):
        return Fraction(1) if a <= b else b

    def biresiduum(self, a, b):
        if a == b:
            return Fraction(1)
        return a if a <= b else b


class ProductStructure(UnitInterval):
    name = "product"

    def otimes(self, a, b):
        return a * b

    def residuum(self, a, b):
        return Fraction(1) if a <= b else b / a

    def biresiduum(self, a, b):
        if a == b:
            return Fraction(1)
        lo, hi = (a, b) if a <= b else (b, a)
        return lo / hi


class LukasiewiczStructure(UnitInterval):
    name = "lukasiewicz"

    def otimes(self, a, b):
        s = a + b - 1
        return s if s > 0 else Fraction(0)

    def residuum(self, a, b):
        s = 1 - a + b
        return s if s < 1 else Fraction(1)

    def biresiduum(self, a, b):
        return 1 - abs(a - b)


_GODEL = GodelStructure()
_PRODUCT = ProductStructure()
_LUKASIEWICZ = LukasiewiczStructure()


def godel() -> GodelStructure:
    return _GODEL


def product() -> ProductStructure:
    return _PRODUCT


def lukasiewicz() -> LukasiewiczStructure:
    return _LUKASIEWICZ


class FiniteLattice(ResiduatedLattice):
    """A finite residuated lattice given by tables.

    ``elements`` names the carrier; ``order`` lists pairs ``(a, b)`` meaning
    ``a <= b`` (the reflexive-transitive closure is taken); ``otimes`` is an
    ``n x n`` table of element names indexed in the order of ``elements``.
    When ``residuum`` is omitted it is derived as
    ``y -> z = join{x : x otimes y <= z}``.  Either way residuation is checked
    on every triple, so a table that admits no residuum is rejected.

    Values of this lattice are integer indices into ``elements``.
    """

    def __init__(
        self,
        elements: Sequence[str],
        order: Iterable[tuple[str, str]],
        otimes: Sequence[Sequence[str]],
        residuum: Sequence[Sequence[str]] | None = None,
        name: str = "finite",
    ):
        names = tuple(str(e) for e in elements)
        if not names:
            raise LatticeError("a lattice needs at least one element")
        if len(set(names)) != len(names):
            raise LatticeError("duplicate element names")
        self.name = name
        self.names = names
        self._index = {e: i for i, e in enumerate(names)}
        n = len(names)

        leq = [[i == j for j in range(n)] for i in range(n)]
        for a, b in order:
            leq[self._lookup(a)][self._lookup(b)] = True
        for k in range(n):
            for i in range(n):
                if leq[i][k]:
                    for j in range(n):
                        if leq[k][j]:
                            leq[i][j] = True
        for i in range(n):
            for j in range(i + 1, n):
                if leq[i][j] and leq[j][i]:
                    raise LatticeError(f"order is not antisymmetric: {names[i]} and {names[j]}")
        self._leq = tuple(tuple(row) for row in leq)

        self._meet = self._bound_table(lower=True)
        self._join = self._bound_table(lower=False)
        bottoms = [i for i in range(n) if all(leq[i][j] for j in range(n))]
        tops = [i for i in range(n) if all(leq[j][i] for j in range(n))]
        self._bottom, self._top = bottoms[0], tops[0]

        for a, b, c in itertools.product(range(n), repeat=3):
            if self._meet[a][self._join[b][c]] != self._join[self._meet[a][b]][self._meet[a][c]]:
                raise LatticeError("lattice is not distributive")

        self._otimes = self._read_table(otimes, "otimes")
        t = self._otimes
        for a, b in itertools.product(range(n), repeat=2):
            if t[a][b] != t[b][a]:
                raise LatticeError("otimes is not commutative")
        for a in range(n):
            if t[a][self._top] != a:
                raise LatticeError("top is not the unit of otimes")
        for a, b, c in itertools.product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise LatticeError("otimes is not associative")

        if residuum is None:
            self._residuum = tuple(
                tuple(
                    reduce(
                        lambda acc, x: self._join[acc][x],
                        (x for x in range(n) if leq[t[x][y]][z]),
                        self._bottom,
                    )
                    for z in range(n)
                )
                for y in range(n)
            )
        else:
            self._residuum = self._read_table(residuum, "residuum")
        r = self._residuum
        for x, y, z in itertools.product(range(n), repeat=3):
            if leq[t[x][y]][z] != leq[x][r[y][z]]:
                raise LatticeError(
                    f"residuation fails for ({names[x]}, {names[y]}, {names[z]})"
                )

    def _lookup(self, name) -> int:
        try:
            return self._index[str(name)]
        except KeyError:
            raise LatticeError(f"unknown lattice element {name!r}") from None

    def _read_table(self, table, label):
        n = len(self.names)
        if len(table) != n or any(len(row) != n for row in table):
            raise LatticeError(f"{label} table must be {n}x{n}")
        return tuple(tuple(self._lookup(v) for v in row) for row in table)

    def _bound_table(self, lower: bool):
        n = len(self.names)
        leq = self._leq
        below = (lambda a, b: leq[a][b]) if lower else (lambda a, b: leq[b][a])
        table = []
        for a in range(n):
            row = []
            for b in range(n):
                common = [c for c in range(n) if below(c, a) and below(c, b)]
                best = [c for c in common if all(below(d, c) for d in common)]
                if not best:
                    kind = "meet" if lower else "join"
                    raise LatticeError(f"no {kind} for {self.names[a]} and {self.names[b]}")
                row.append(best[0])
            table.append(tuple(row))
        return tuple(table)

    @classmethod
    def chain(cls, n: int, tnorm: str = "godel") -> "FiniteLattice":
        """The chain ``0 < 1/(n-1) < ... < 1`` with the Goedel or Lukasiewicz product."""
        if n < 2:
            raise LatticeError("a chain needs at least two elements")
        names = [str(Fraction(i, n - 1)) for i in range(n)]
        order = [(names[i], names[i + 1]) for i in range(n - 1)]
        if tnorm == "godel":
            table = [[names[min(i, j)] for j in range(n)] for i in range(n)]
        elif tnorm == "lukasiewicz":
            table = [[names[max(i + j - (n - 1), 0)] for j in range(n)] for i in range(n)]
        else:
            raise LatticeError(f"unknown chain product {tnorm!r}")
        return cls(names, order, table, name=f"{tnorm}-chain-{n}")

    @classmethod
    def boolean(cls) -> "FiniteLattice":
        return cls(["0", "1"], [("0", "1")], [["0", "0"], ["0", "1"]], name="boolean")

    @property
    def top(self) -> int:
        return self._top

    @property
    def bottom(self) -> int:
        return self._bottom

    def leq(self, a, b):
        return self._leq[a][b]

    def meet(self, a, b):
        return self._meet[a][b]

    def join(self, a, b):
        return self._join[a][b]

    def otimes(self, a, b):
        return self._otimes[a][b]

    def residuum(self, a, b):
        return self._residuum[a][b]

    @property
    def is_finite(self) -> bool:
        return True

    def elements(self) -> tuple[int, ...]:
        return tuple(range(len(self.names)))

    def coerce(self, value):
        if isinstance(value, int) and not isinstance(value, bool):
            if 0 <= value < len(self.names):
                return value
            raise LatticeError(f"element index {value} out of range")
        return self._lookup(value)

    def format(self, value):
        return self.names[value]

    def tables(self) -> dict[str, Any]:
        """Plain-data description, suitable for JSON."""
        n = len(self.names)
        return {
            "elements": list(self.names),
            "order": [
                [self.names[a], self.names[b]]
                for a in range(n)
                for b in range(n)
                if a != b and self._leq[a][b]
            ],
            "otimes": [[self.names[v] for v in row] for row in self._otimes],
            "residuum": [[self.names[v] for v in row] for row in self._residuum],
        }

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return (
            self.names == other.names
            and self._leq == other._leq
            and self._otimes == other._otimes
        )

    def __hash__(self):
        return hash((self.names, self._leq, self._otimes))

    def __repr__(self):
        return f"FiniteLattice({self.name!r}, {list(self.names)})"


def is_heyting(lattice: ResiduatedLattice) -> bool:
    """True iff otimes is idempotent, i.e. coincides with meet."""
    if isinstance(lattice, GodelStructure):
        return True
    if isinstance(lattice, (ProductStructure, LukasiewiczStructure)):
        return False
    if lattice.is_finite:
        return all(lattice.otimes(a, a) == a for a in lattice.elements())
    raise LatticeError(f"cannot decide idempotence on {lattice!r}")


def generate_subalgebra(
    lattice: ResiduatedLattice, seeds: Iterable[Value], cap: int = 1000
) -> tuple[frozenset, bool]:
    """Close ``seeds`` (plus 0 and 1) under meet, join, otimes and residuum.

    Returns ``(elements, exhausted)``.  ``exhausted`` is False when the closure
    grew past ``cap`` elements; the returned set is then a truncated prefix and
    says nothing about whether the true closure is finite.
    """
    seeds = [lattice.coerce(s) if not _is_value(lattice, s) else s for s in seeds]
    if cap < len(set(seeds)):
        raise ValueError("cap must be at least the number of seeds")
    found = list(dict.fromkeys([lattice.bottom, lattice.top, *seeds]))
    seen = set(found)
    ops = (lattice.meet, lattice.join, lattice.otimes, lattice.residuum)
    done = 0
    # every new element is combined with all earlier ones exactly once
    while done < len(found):
        a = found[done]
        for b in found[: done + 1]:
            for op in ops:
                for v in (op(a, b), op(b, a)):
                    if v not in seen:
                        if len(found) >= cap:
                            return frozenset(found), False
                        seen.add(v)
                        found.append(v)
        done += 1
    return frozenset(found), True


def _is_value(lattice: ResiduatedLattice, v: Any) -> bool:
    if lattice.is_finite:
        return isinstance(v, int) and not isinstance(v, bool)
    return isinstance(v, Fraction)
