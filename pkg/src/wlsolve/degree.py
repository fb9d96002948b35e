"""Solution degrees of weakly linear systems.

A weakly linear system over a family ``{R_i}`` asks for ``X`` with
``X o R_i <= R_i o X`` (kind 1), ``R_i o X <= X o R_i`` (kind 2) or
``X o R_i = R_i o X`` (kind 3).  :func:`sd` measures, as a lattice value, how
well a relation satisfies one of these, in nine variants; kinds 4-9 are the
forms used for fuzzy preorders.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .lattice import ResiduatedLattice
from .relation import (
    FuzzyRelation,
    Universe,
    UniverseMismatchError,
    compose,
    equality_degree,
    inclusion_degree,
    left_residual,
    right_residual,
)

__all__ = [
    "SystemKind",
    "RelationFamily",
    "sd",
    "in_cut",
    "family_equality_degree",
]


class SystemKind(enum.IntEnum):
    WLS1 = 1
    WLS2 = 2
    WLS3 = 3

    @classmethod
    def parse(cls, text: str | int) -> "SystemKind":
        if isinstance(text, int):
            return cls(text)
        key = str(text).strip().upper().replace("-", "")
        if key.isdigit():
            return cls(int(key))
        return cls[key]


@dataclass(frozen=True)
class RelationFamily:
    """An indexed family of relations on one universe over one lattice."""

    lattice: ResiduatedLattice
    universe: Universe
    members: tuple[FuzzyRelation, ...] = ()
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        members = tuple(self.members)
        object.__setattr__(self, "members", members)
        labels = tuple(self.labels) or tuple(f"R{i}" for i in range(1, len(members) + 1))
        if len(labels) != len(members):
            raise ValueError("one label per family member is required")
        if len(set(labels)) != len(labels):
            raise ValueError("family labels must be unique")
        object.__setattr__(self, "labels", labels)
        for R in members:
            if R.universe != self.universe or R.lattice != self.lattice:
                raise UniverseMismatchError("family members must share universe and lattice")

    @classmethod
    def of(cls, *members: FuzzyRelation, labels: Sequence[str] = ()) -> "RelationFamily":
        if not members:
            raise ValueError("use the constructor to build an empty family")
        return cls(members[0].lattice, members[0].universe, members, tuple(labels))

    def __iter__(self) -> Iterator[FuzzyRelation]:
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __getitem__(self, i):
        if isinstance(i, str):
            return self.members[self.labels.index(i)]
        return self.members[i]

    def items(self):
        return zip(self.labels, self.members)


def _sd_single(kind: int, R: FuzzyRelation, X: FuzzyRelation):
    L = X.lattice
    if kind <= 3:
        XR, RX = compose(X, R), compose(R, X)
        if kind == 1:
            return inclusion_degree(XR, RX)
        if kind == 2:
            return inclusion_degree(RX, XR)
        return equality_degree(XR, RX)
    if kind <= 6:
        RX, XR = compose(R, X), compose(X, R)
        XRX = compose(X, RX)
        if kind == 4:
            return equality_degree(XRX, RX)
        if kind == 5:
            return equality_degree(XRX, XR)
        return L.meet(equality_degree(XRX, RX), equality_degree(XRX, XR))
    if kind == 7:
        RX = compose(R, X)
        return inclusion_degree(X, left_residual(RX, RX))
    if kind == 8:
        XR = compose(X, R)
        return inclusion_degree(X, right_residual(XR, XR))
    return L.meet(_sd_single(7, R, X), _sd_single(8, R, X))


def sd(kind: int, family: Iterable[FuzzyRelation], X: FuzzyRelation):
    """Solution degree of ``X`` for the family, ``kind`` in 1..9.

    The degree of a family is the meet over its members, so an empty family
    gives the top element.
    """
    kind = int(kind)
    if not 1 <= kind <= 9:
        raise ValueError(f"solution degree kind must be in 1..9, got {kind}")
    L = X.lattice
    result = L.top
    for R in family:
        if R.universe != X.universe or R.lattice != L:
            raise UniverseMismatchError("family member and X do not share universe and lattice")
        result = L.meet(result, _sd_single(kind, R, X))
    return result


def in_cut(kind: int, family: Iterable[FuzzyRelation], X: FuzzyRelation, x, X0: FuzzyRelation | None = None) -> bool:
    """Whether ``X`` lies in the ``x``-cut of the solution degree, bounded above by ``X0``."""
    if X0 is not None and not X <= X0:
        return False
    return X.lattice.leq(X.lattice.coerce(x), sd(kind, family, X))


def family_equality_degree(S: Sequence[FuzzyRelation], S2: Sequence[FuzzyRelation], lattice: ResiduatedLattice | None = None):
    """``meet_i (R_i ~ R'_i)`` over two equally indexed families."""
    for fam in (S, S2):
        if isinstance(fam, RelationFamily) and lattice is None:
            lattice = fam.lattice
    S, S2 = list(S), list(S2)
    if len(S) != len(S2):
        raise UniverseMismatchError("families have different index sets")
    if not S:
        if lattice is None:
            raise ValueError("lattice is required to compare empty families")
        return lattice.top
    L = S[0].lattice
    return L.meet_all(equality_degree(a, b) for a, b in zip(S, S2))
