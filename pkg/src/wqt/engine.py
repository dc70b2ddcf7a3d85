"""Breadth-first monomial expansion with exact coefficients.

Starting from a dominant, generic, regular monomial, every admissible variable
Y_j(z a) of a monomial is replaced by Y_j(z a q^-2r_j t^2)^-1 through
multiplication by A_j(z a q^-r_j t)^-1.  Work proceeds one height level at a
time.  Before a level is expanded, each of its monomials is checked for
genericity and regularity; if any fails, the run stops and every defective
monomial of that level is reported.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from . import coeff as _coeff
from .cartan import LieType, RootData, build_root_data
from .coeff import FactoredCoeff
from .errors import ConfigurationError, InternalConsistencyError, ParseError, PreconditionError
from .monomial import (
    Monomial,
    Spectral,
    admissible_variables,
    apply_A_inverse,
    is_dominant,
    is_generic,
    is_regular,
    render_monomial,
)

COMPLETED = "Completed"
FAILED = "Failed"
TRUNCATED = "Truncated"

NON_GENERIC = "NonGeneric"
NON_REGULAR = "NonRegular"


@dataclass(frozen=True)
class ExpansionConfig:
    max_height: int = 256
    max_monomials: int = 200_000
    check_path_independence: bool = True
    equality_seed: int = 0

    def __post_init__(self):
        if self.max_height < 1 or self.max_monomials < 1:
            raise ConfigurationError("expansion caps must be positive")


@dataclass(frozen=True)
class Entry:
    coeff: FactoredCoeff
    height: int


@dataclass(frozen=True)
class Edge:
    """``target = source * A_node(z color)^-1``."""

    source: Monomial
    target: Monomial
    node: int
    color: Spectral


@dataclass(frozen=True)
class Witness:
    monomial: Monomial
    defects: Tuple[str, ...]


@dataclass
class FieldExpansion:
    root_data: RootData
    start: Monomial
    config: ExpansionConfig
    status: str = COMPLETED
    table: Dict[Monomial, Entry] = field(default_factory=dict)
    edges: List[Edge] = field(default_factory=list)
    witnesses: List[Witness] = field(default_factory=list)
    cap: Optional[str] = None
    path_checks: int = 0

    def ordered(self) -> List[Monomial]:
        """Monomials sorted by height, then canonical order."""
        return sorted(self.table, key=lambda m: (self.table[m].height, m.sort_key()))

    def coefficient(self, m: Monomial) -> FactoredCoeff:
        return self.table[m].coeff

    def height(self, m: Monomial) -> int:
        return self.table[m].height

    def __len__(self) -> int:
        return len(self.table)


def defects_of(rd: RootData, m: Monomial) -> Tuple[str, ...]:
    out = []
    if not is_generic(m):
        out.append(NON_GENERIC)
    if not is_regular(rd, m):
        out.append(NON_REGULAR)
    return tuple(out)


def expand(rd: RootData, start: Monomial, cfg: Optional[ExpansionConfig] = None) -> FieldExpansion:
    """Run the expansion from ``start``; see the module docstring."""
    cfg = cfg or ExpansionConfig()
    if not is_dominant(start):
        raise PreconditionError(f"start monomial {start} is not dominant")
    if defects_of(rd, start):
        raise PreconditionError(f"start monomial {start} is {' and '.join(defects_of(rd, start))}")
    for node, _, _ in start.entries:
        rd.check_node(node)

    fe = FieldExpansion(rd, start, cfg)
    fe.table[start] = Entry(_coeff.one(), 0)
    frontier = [start]
    height = 0
    while True:
        if height > 0:
            bad = [Witness(m, d) for m in frontier if (d := defects_of(rd, m))]
            if bad:
                fe.status = FAILED
                fe.witnesses = bad
                return fe
        fresh: List[Monomial] = []
        for m in frontier:
            lam = fe.table[m].coeff
            for j, a in admissible_variables(rd, m):
                child = apply_A_inverse(rd, m, j, a)
                color = a.shift(-rd.r_of(j), 1)
                known = fe.table.get(child)
                if known is not None:
                    if known.height != height + 1:
                        raise InternalConsistencyError(
                            f"{child} reached at height {height + 1} but recorded at {known.height}"
                        )
                    if cfg.check_path_independence:
                        again = _coeff.step_coefficient(rd, lam, m, j, a)
                        fe.path_checks += 1
                        if not _coeff.equals(known.coeff, again, seed=cfg.equality_seed):
                            raise InternalConsistencyError(
                                f"coefficient of {child} depends on the path: {known.coeff} vs {again}"
                            )
                else:
                    if height + 1 > cfg.max_height:
                        fe.status, fe.cap = TRUNCATED, "max_height"
                        return fe
                    if len(fe.table) >= cfg.max_monomials:
                        fe.status, fe.cap = TRUNCATED, "max_monomials"
                        return fe
                    fe.table[child] = Entry(_coeff.step_coefficient(rd, lam, m, j, a), height + 1)
                    fresh.append(child)
                fe.edges.append(Edge(m, child, j, color))
        if not fresh:
            fe.status = COMPLETED
            return fe
        frontier = sorted(fresh, key=Monomial.sort_key)
        height += 1


def fundamental(rd: RootData, node: int, cfg: Optional[ExpansionConfig] = None) -> FieldExpansion:
    """Expansion from the single variable Y_node(z)."""
    rd.check_node(node)
    return expand(rd, Monomial.Y(node), cfg)


def field_monomial_set(fe: FieldExpansion) -> Set[Monomial]:
    return set(fe.table)


# ---------------------------------------------------------------------------
# serialization

def encode_monomial(m: Monomial) -> List[List[int]]:
    return [[n, s.orbit, s.q, s.t, e] for n, s, e in m.entries]


def decode_monomial(rows) -> Monomial:
    try:
        return Monomial((int(n), Spectral(int(o), int(q), int(t)), int(e)) for n, o, q, t, e in rows)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed monomial encoding {rows!r}") from exc


def to_dict(fe: FieldExpansion) -> dict:
    order = fe.ordered()
    index = {m: k for k, m in enumerate(order)}
    edges = sorted(
        (index[e.source], index[e.target], e.node, e.color.orbit, e.color.q, e.color.t)
        for e in fe.edges
    )
    return {
        "lie_type": fe.root_data.lie_type.series,
        "rank": fe.root_data.rank,
        "status": fe.status,
        "cap": fe.cap,
        "config": {
            "max_height": fe.config.max_height,
            "max_monomials": fe.config.max_monomials,
            "check_path_independence": fe.config.check_path_independence,
            "equality_seed": fe.config.equality_seed,
        },
        "start": encode_monomial(fe.start),
        "monomials": [
            {"m": encode_monomial(m), "height": fe.table[m].height, "coeff": fe.table[m].coeff.to_json()}
            for m in order
        ],
        "edges": [
            {"from": s, "to": t, "node": n, "orbit": o, "q": q, "t": tt} for s, t, n, o, q, tt in edges
        ],
        "witnesses": [
            {"monomial": index[w.monomial], "defects": list(w.defects)} for w in fe.witnesses
        ],
    }


def to_json(fe: FieldExpansion) -> str:
    return json.dumps(to_dict(fe), indent=1, sort_keys=True) + "\n"


def from_dict(data: dict) -> FieldExpansion:
    try:
        rd = build_root_data(LieType(str(data["lie_type"]), int(data["rank"])))
        cfg = ExpansionConfig(**data.get("config", {}))
        fe = FieldExpansion(rd, decode_monomial(data["start"]), cfg)
        fe.status = data["status"]
        if fe.status not in (COMPLETED, FAILED, TRUNCATED):
            raise ParseError(f"unknown status {fe.status!r}")
        fe.cap = data.get("cap")
        order = []
        for row in data["monomials"]:
            m = decode_monomial(row["m"])
            fe.table[m] = Entry(FactoredCoeff.from_json(row["coeff"]), int(row["height"]))
            order.append(m)
        for e in data["edges"]:
            fe.edges.append(
                Edge(order[e["from"]], order[e["to"]], int(e["node"]), Spectral(e["orbit"], e["q"], e["t"]))
            )
        fe.witnesses = [Witness(order[w["monomial"]], tuple(w["defects"])) for w in data["witnesses"]]
    except (KeyError, TypeError, IndexError, AttributeError) as exc:
        raise ParseError(f"malformed expansion document: {exc!r}") from exc
    return fe


def from_json(text: str) -> FieldExpansion:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError("expansion document must be a JSON object")
    return from_dict(data)


def edge_label(node: int, color: Spectral) -> str:
    return f"A{node}({color})^-1"


def to_dot(fe: FieldExpansion) -> str:
    order = fe.ordered()
    index = {m: k for k, m in enumerate(order)}
    lines = [f'digraph "{fe.root_data.lie_type}" {{', "  rankdir=TB;"]
    for k, m in enumerate(order):
        lines.append(f'  n{k} [label="{render_monomial(m)}"];')
    for s, t, node, color in sorted(
        ((index[e.source], index[e.target], e.node, e.color) for e in fe.edges)
    ):
        lines.append(f'  n{s} -> n{t} [label="{edge_label(node, color)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
