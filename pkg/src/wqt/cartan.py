"""Root-system tables and the (q,t)-deformed Cartan matrix.

Nodes are numbered from 1.  The conventions below fix which end of a
non-simply-laced diagram carries the short roots, and where the fork of a
type D diagram sits, because the closed-form catalogs depend on them:

* ``B``: nodes 1..l-1 long, node l short (symmetrizer diag(2,...,2,1)).
* ``C``: nodes 1..l-1 short, node l long (symmetrizer diag(1,...,1,2)).
* ``D``: a chain 1-2-...-(l-2) with nodes l-1 and l both attached to l-2.
* ``E``: a chain 1-2-...-(l-1) with node l attached to node 3.
* ``F4``: nodes 1, 2 long, nodes 3, 4 short.
* ``G2``: node 1 long, node 2 short.

Cartan entries follow ``C[i, j] = 2 (a_i, a_j) / (a_i, a_i)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np

from .errors import ConfigurationError
from .monomial import Monomial, Spectral

# A Laurent polynomial in (q, t): {(q_exponent, t_exponent): integer coefficient}.
LaurentPoly = Dict[Tuple[int, int], int]

_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True, order=True)
class LieType:
    """A simple Lie type such as ``LieType("B", 3)``."""

    series: str
    rank: int

    def __post_init__(self):
        if self.series not in _RANK_BOUNDS:
            raise ConfigurationError(f"unknown series {self.series!r}")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise ConfigurationError(f"rank must be an integer, got {self.rank!r}")
        lo, hi = _RANK_BOUNDS[self.series]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise ConfigurationError(f"invalid rank {self.rank} for series {self.series}")

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "LieType":
        """Parse a fused token such as ``"B3"`` or ``"g2"``."""
        match = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if match is None:
            raise ConfigurationError(f"cannot parse Lie type {text!r}; expected e.g. 'B3'")
        return cls(match.group(1).upper(), int(match.group(2)))


def _simply_laced_from_edges(rank: int, edges) -> np.ndarray:
    cartan = 2 * np.eye(rank, dtype=np.int64)
    for i, j in edges:
        cartan[i - 1, j - 1] = -1
        cartan[j - 1, i - 1] = -1
    return cartan


def _chain(rank: int):
    return [(k, k + 1) for k in range(1, rank)]


def _cartan_and_symmetrizer(lt: LieType) -> Tuple[np.ndarray, Tuple[int, ...]]:
    n = lt.rank
    s = lt.series
    if s == "A":
        return _simply_laced_from_edges(n, _chain(n)), (1,) * n
    if s == "B":
        cartan = _simply_laced_from_edges(n, _chain(n))
        cartan[n - 1, n - 2] = -2
        return cartan, (2,) * (n - 1) + (1,)
    if s == "C":
        cartan = _simply_laced_from_edges(n, _chain(n))
        cartan[n - 2, n - 1] = -2
        return cartan, (1,) * (n - 1) + (2,)
    if s == "D":
        edges = _chain(n - 1) + [(n - 2, n)]
        return _simply_laced_from_edges(n, edges), (1,) * n
    if s == "E":
        edges = _chain(n - 1) + [(3, n)]
        return _simply_laced_from_edges(n, edges), (1,) * n
    if s == "F":
        cartan = _simply_laced_from_edges(4, _chain(4))
        cartan[2, 1] = -2
        return cartan, (2, 2, 1, 1)
    # G2
    cartan = np.array([[2, -1], [-3, 2]], dtype=np.int64)
    return cartan, (3, 1)


@dataclass(frozen=True, eq=False)
class RootData:
    """Cartan data of one simple Lie type.

    ``cartan`` and ``incidence`` are read-only integer arrays indexed from 0;
    ``r`` holds the integers r_i indexed from 0 as well, while every public
    function of the package takes 1-based node labels.
    """

    lie_type: LieType
    cartan: np.ndarray
    incidence: np.ndarray
    r: Tuple[int, ...]
    lacing: int
    _a_templates: Tuple[Tuple[Tuple[int, int, int, int], ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def r_of(self, node: int) -> int:
        """The integer r_i attached to a 1-based node."""
        return self.r[node - 1]

    def check_node(self, node: int) -> None:
        if not isinstance(node, (int, np.integer)) or not 1 <= node <= self.rank:
            raise ConfigurationError(f"node {node!r} out of range for {self.lie_type}")


def q_integer(n: int) -> LaurentPoly:
    """The quantum integer [n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n)."""
    return {(n - 1 - 2 * k, 0): 1 for k in range(n)}


def _deformed_entry(cartan, r, i: int, j: int) -> LaurentPoly:
    poly: LaurentPoly = {}
    if i == j:
        ri = r[i - 1]
        poly[(ri, -1)] = 1
        poly[(-ri, 1)] = 1
    else:
        incidence = -int(cartan[i - 1, j - 1])
        for key, c in q_integer(incidence).items():
            poly[key] = poly.get(key, 0) - c
    return poly


def deformed_cartan_entry(rd: RootData, i: int, j: int) -> LaurentPoly:
    """Entry (i, j) of the deformed Cartan matrix as a Laurent polynomial in q, t.

    >>> deformed_cartan_entry(build_root_data(LieType("B", 2)), 2, 1)
    {(1, 0): -1, (-1, 0): -1}
    """
    rd.check_node(i)
    rd.check_node(j)
    return _deformed_entry(rd.cartan, rd.r, i, j)


def evaluate_laurent(poly: LaurentPoly, q, t):
    """Evaluate a Laurent polynomial at exact or floating values of q and t."""
    return sum(c * q**a * t**b for (a, b), c in poly.items())


def _a_template(cartan, r, i: int):
    # Column i of the deformed Cartan matrix: a term c * q^k t^l in entry (j, i)
    # contributes Y_j(z a q^-k t^-l)^c to A_i(z a).
    rank = len(r)
    out = []
    for j in range(1, rank + 1):
        for (k, l), c in sorted(_deformed_entry(cartan, r, j, i).items()):
            if c:
                out.append((j, -k, -l, c))
    return tuple(out)


def build_root_data(lie_type: LieType) -> RootData:
    """Tabulated root data for ``lie_type``.

    >>> rd = build_root_data(LieType("G", 2))
    >>> rd.r, rd.lacing
    ((3, 1), 3)
    """
    if not isinstance(lie_type, LieType):
        raise ConfigurationError(f"expected a LieType, got {lie_type!r}")
    cartan, r = _cartan_and_symmetrizer(lie_type)
    incidence = 2 * np.eye(lie_type.rank, dtype=np.int64) - cartan
    cartan.setflags(write=False)
    incidence.setflags(write=False)
    templates = tuple(_a_template(cartan, r, i) for i in range(1, lie_type.rank + 1))
    return RootData(
        lie_type=lie_type,
        cartan=cartan,
        incidence=incidence,
        r=tuple(r),
        lacing=max(r),
        _a_templates=templates,
    )


def root_data(text: str) -> RootData:
    """Shortcut: ``root_data("B3")``."""
    return build_root_data(LieType.parse(text))


def a_monomial(rd: RootData, i: int, a: Spectral) -> Monomial:
    """The monomial A_i(z a) expanded in the variables Y_j.

    For type A1 this is ``Y(z a q t^-1) Y(z a q^-1 t)``.
    """
    rd.check_node(i)
    entries = {}
    for node, dq, dt, c in rd._a_templates[i - 1]:
        key = (node, Spectral(a.orbit, a.q + dq, a.t + dt))
        entries[key] = entries.get(key, 0) + c
    return Monomial.from_mapping(entries)


def symmetrized_cartan(rd: RootData) -> np.ndarray:
    """diag(r_i) times the Cartan matrix; symmetric for every supported type."""
    return np.diag(rd.r) @ rd.cartan


def classical_determinant(rd: RootData) -> int:
    return int(round(np.linalg.det(rd.cartan.astype(float))))
