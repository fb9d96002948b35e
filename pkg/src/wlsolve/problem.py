"""JSON problem files and report serialization.

A problem file looks like::

    {
      "lattice": "product",
      "universe": ["n1", "n2"],
      "family": {"R": [["1/2", "0"], ["1", "1"]]},
      "relations": {"X0": [["1", "0"], ["0", "1"]]},
      "x0": "X0"
    }

``lattice`` is ``"godel"``, ``"product"``, ``"lukasiewicz"``, a chain
shorthand ``{"chain": 3, "product": "godel"}`` or explicit tables
``{"elements": [...], "order": [[a, b], ...], "otimes": [[...]], "residuum": [[...]]}``
(``residuum`` optional).  Unit-interval entries are ``"p/q"`` strings (decimal
strings and integers are accepted on input); finite-lattice entries are element
names.  ``relations`` and ``x0`` are optional.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

from .degree import RelationFamily
from .lattice import (
    FiniteLattice,
    LatticeError,
    ResiduatedLattice,
    godel,
    lukasiewicz,
    product,
)
from .network import FactorNetwork
from .relation import FuzzyRelation, Universe
from .solver import SolveReport

__all__ = [
    "ProblemError",
    "Problem",
    "parse_lattice",
    "lattice_to_json",
    "parse_problem",
    "problem_to_json",
    "dump_problem",
    "load_problem",
    "fixture_path",
    "fixture_names",
    "report_to_json",
    "factor_to_json",
    "dumps",
]

_NAMED = {"godel": godel, "product": product, "lukasiewicz": lukasiewicz}


class ProblemError(ValueError):
    """Malformed problem file."""


@dataclass(frozen=True)
class Problem:
    lattice: ResiduatedLattice
    universe: Universe
    family: RelationFamily
    relations: dict[str, FuzzyRelation] = field(default_factory=dict)
    x0: str | None = None

    def relation(self, ref: str) -> FuzzyRelation:
        """Resolve ``identity``, ``universal``, a named relation or a family label."""
        if ref == "identity":
            return FuzzyRelation.identity(self.lattice, self.universe)
        if ref == "universal":
            return FuzzyRelation.universal(self.lattice, self.universe)
        if ref in self.relations:
            return self.relations[ref]
        if ref in self.family.labels:
            return self.family[ref]
        raise ProblemError(f"unknown relation {ref!r}")


def parse_lattice(desc: Any) -> ResiduatedLattice:
    try:
        if isinstance(desc, str):
            if desc == "boolean":
                return FiniteLattice.boolean()
            if desc not in _NAMED:
                raise ProblemError(f"unknown lattice {desc!r}")
            return _NAMED[desc]()
        if isinstance(desc, dict):
            if "chain" in desc:
                return FiniteLattice.chain(int(desc["chain"]), desc.get("product", "godel"))
            return FiniteLattice(
                desc["elements"],
                [tuple(p) for p in desc.get("order", [])],
                desc["otimes"],
                desc.get("residuum"),
                name=desc.get("name", "finite"),
            )
    except (KeyError, TypeError) as exc:
        raise ProblemError(f"malformed lattice description: {exc}") from exc
    except LatticeError as exc:
        raise ProblemError(str(exc)) from exc
    raise ProblemError(f"malformed lattice description: {desc!r}")


def lattice_to_json(lattice: ResiduatedLattice) -> Any:
    if isinstance(lattice, FiniteLattice):
        return {"name": lattice.name, **lattice.tables()}
    return lattice.name


def _matrix(lattice, universe, rows, label) -> FuzzyRelation:
    n = len(universe)
    if not isinstance(rows, list) or len(rows) != n or any(
        not isinstance(r, list) or len(r) != n for r in rows
    ):
        raise ProblemError(f"relation {label!r} must be a {n}x{n} matrix")
    try:
        return FuzzyRelation.from_rows(lattice, rows, universe)
    except LatticeError as exc:
        raise ProblemError(f"relation {label!r}: {exc}") from exc


def parse_problem(obj: Any) -> Problem:
    if not isinstance(obj, dict):
        raise ProblemError("problem must be a JSON object")
    for key in ("lattice", "universe", "family"):
        if key not in obj:
            raise ProblemError(f"missing key {key!r}")
    lattice = parse_lattice(obj["lattice"])
    try:
        universe = Universe(tuple(obj["universe"]))
    except (TypeError, ValueError) as exc:
        raise ProblemError(f"bad universe: {exc}") from exc
    fam = obj["family"]
    if not isinstance(fam, dict):
        raise ProblemError("family must map labels to matrices")
    members = tuple(_matrix(lattice, universe, rows, label) for label, rows in fam.items())
    family = RelationFamily(lattice, universe, members, tuple(fam))
    extra = obj.get("relations", {})
    if not isinstance(extra, dict):
        raise ProblemError("relations must map names to matrices")
    relations = {name: _matrix(lattice, universe, rows, name) for name, rows in extra.items()}
    x0 = obj.get("x0")
    problem = Problem(lattice, universe, family, relations, x0)
    if x0 is not None:
        problem.relation(x0)
    return problem


def problem_to_json(problem: Problem) -> dict[str, Any]:
    out: dict[str, Any] = {
        "lattice": lattice_to_json(problem.lattice),
        "universe": list(problem.universe.names),
        "family": {label: R.formatted() for label, R in problem.family.items()},
    }
    if problem.relations:
        out["relations"] = {name: R.formatted() for name, R in problem.relations.items()}
    if problem.x0 is not None:
        out["x0"] = problem.x0
    return out


def dump_problem(problem: Problem) -> str:
    # insertion order, not sorted: family order is the index order
    return json.dumps(problem_to_json(problem), indent=2)


def load_problem(path: str | Path) -> Problem:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ProblemError(f"cannot read {path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemError(f"{path}: invalid JSON: {exc}") from exc
    return parse_problem(obj)


def fixture_names() -> list[str]:
    root = resources.files("wlsolve") / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def fixture_path(name: str) -> Path:
    """Filesystem path of a bundled problem file, e.g. ``"six_node_network"``."""
    path = Path(str(resources.files("wlsolve") / "fixtures" / f"{name}.json"))
    if not path.exists():
        raise ProblemError(f"no bundled fixture named {name!r}")
    return path


def report_to_json(report: SolveReport) -> dict[str, Any]:
    L = report.relation.lattice
    out = {
        "algorithm": report.algorithm,
        "status": report.status.value,
        "iterations": report.iterations,
        "degree": L.format(report.degree),
        "kind": f"wls{int(report.kind)}",
        "universe": list(report.relation.universe.names),
        "relation": report.relation.formatted(),
        "equality_degrees": [L.format(d) for d in report.equality_degrees],
        "solution_degree": L.format(report.solution_degree),
    }
    if report.iterates:
        out["trace"] = [X.formatted() for X in report.iterates]
    return out


def factor_to_json(fn: FactorNetwork) -> dict[str, Any]:
    return {
        "blocks": [{"name": name, "members": list(b)} for name, b in zip(fn.names, fn.blocks)],
        "family": {label: R.formatted() for label, R in fn.family.items()},
        "preorder": fn.preorder.formatted(),
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)
