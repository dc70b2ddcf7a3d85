"""Closed-form monomial sets of fundamental fields in classical types.

Each builder returns the monomials of the field whose dominant monomial is
Y_i(z), obtained from products of small building blocks evaluated at
prescribed spectral shifts.  Products go through :func:`multiply`, so
cancellations between neighbouring blocks happen automatically.

The sets are compared with an engine expansion up to one global spectral
shift that aligns the two dominant monomials.

Covered cases: type A (every node), B (every node, node l being the spinor
node), C (every node) and D (nodes 1, l-1, l).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from .cartan import LieType
from .engine import COMPLETED, FieldExpansion
from .errors import PreconditionError, UnsupportedError
from .monomial import Monomial, Spectral, is_dominant, multiply, shift


def _y(node: int, q: int, t: int, exp: int = 1) -> Monomial:
    # Y_0 and Y_{l+1} stand for 1 in the boundary blocks of the formulas.
    if node < 1:
        return Monomial()
    return Monomial.Y(node, q, t, exp)


def _prod(*parts: Monomial) -> Monomial:
    out = Monomial()
    for p in parts:
        out = multiply(out, p)
    return out


@dataclass(frozen=True)
class CatalogEntry:
    lie_type: LieType
    node: int
    terms: Tuple[Tuple[tuple, Monomial], ...]

    @property
    def monomials(self) -> FrozenSet[Monomial]:
        return frozenset(m for _, m in self.terms)

    @property
    def index_data(self) -> List[tuple]:
        return [idx for idx, _ in self.terms]

    def __len__(self) -> int:
        return len(self.monomials)


# ---------------------------------------------------------------------------
# building blocks

def type_a_block(ell: int, j: int, t_offset: int = -1) -> Monomial:
    """Y_j(z q^(1-j) t^(j+t_offset)) Y_(j-1)(z q^-j t^j)^-1, with Y_0 = Y_(l+1) = 1.

    ``t_offset=-1`` gives the normalization that agrees with the expansion;
    ``t_offset=+1`` is kept so the alternative can be tested and rejected.
    """
    top = _y(j, 1 - j, j + t_offset) if j <= ell else Monomial()
    return _prod(top, _y(j - 1, -j, j, -1))


def type_c_block(ell: int, j: int) -> Monomial:
    """Blocks for 1 <= j <= 2l, the index 2l+1-i standing for i-bar."""
    if j <= ell:
        return _prod(_y(j, 1 - j, j - 1), _y(j - 1, -j, j, -1))
    i = 2 * ell + 1 - j
    return _prod(
        _y(i - 1, -2 * ell + i - 2, 2 * ell - i),
        _y(i, -2 * ell + i - 3, 2 * ell - i + 1, -1),
    )


def type_b_block(ell: int, j: int) -> Monomial:
    """Blocks for 1 <= j <= 2l+1, the index 2l+2-i standing for i-bar."""
    if j < ell:
        return _prod(_y(j, -2 * j + 2, j - 1), _y(j - 1, -2 * j, j, -1))
    if j == ell:
        return _prod(
            _y(ell, -2 * ell + 3, ell - 1),
            _y(ell, -2 * ell + 1, ell - 1),
            _y(ell - 1, -2 * ell, ell, -1),
        )
    if j == ell + 1:
        return _prod(_y(ell, -2 * ell + 3, ell - 1), _y(ell, -2 * ell - 1, ell + 1, -1))
    if j == ell + 2:
        return _prod(
            _y(ell - 1, -2 * ell + 2, ell),
            _y(ell, -2 * ell + 1, ell + 1, -1),
            _y(ell, -2 * ell - 1, ell + 1, -1),
        )
    i = 2 * ell + 2 - j
    return _prod(
        _y(i - 1, -4 * ell + 2 * i + 2, 2 * ell - i),
        _y(i, -4 * ell + 2 * i, 2 * ell - i + 1, -1),
    )


def type_d_block(ell: int, j: int) -> Monomial:
    """Blocks for 1 <= j <= 2l, the index 2l+1-i standing for i-bar."""
    if j <= ell - 2:
        return _prod(_y(j, 1 - j, j - 1), _y(j - 1, -j, j, -1))
    if j == ell - 1:
        return _prod(
            _y(ell, -ell + 2, ell - 2),
            _y(ell - 1, -ell + 2, ell - 2),
            _y(ell - 2, -ell + 1, ell - 1, -1),
        )
    if j == ell:
        return _prod(_y(ell, -ell + 2, ell - 2), _y(ell - 1, -ell, ell, -1))
    if j == ell + 1:
        return _prod(_y(ell - 1, -ell + 2, ell - 2), _y(ell, -ell, ell, -1))
    if j == ell + 2:
        return _prod(
            _y(ell - 2, -ell + 1, ell - 1),
            _y(ell - 1, -ell, ell, -1),
            _y(ell, -ell, ell, -1),
        )
    i = 2 * ell + 1 - j
    return _prod(
        _y(i - 1, -2 * ell + i + 2, 2 * ell - i - 2),
        _y(i, -2 * ell + i + 1, 2 * ell - i - 1, -1),
    )


def tuple_height(index: Iterable[int]) -> int:
    """sum over alpha of (j_alpha - alpha), for a tuple indexed from 1."""
    return sum(j - a for a, j in enumerate(index, start=1))


def _staggered(blocks, index: Tuple[int, ...], dq: int, dt: int) -> Monomial:
    """prod_alpha block(j_alpha) at z q^(dq (i-1-2(alpha-1))) t^(-dt ...)."""
    i = len(index)
    out = Monomial()
    for alpha, j in enumerate(index):
        k = i - 1 - 2 * alpha
        out = multiply(out, shift(blocks(j), -dq * k, dt * k))
    return out


def _c_allowed(ell: int, index: Tuple[int, ...]) -> bool:
    pos = {j: a for a, j in enumerate(index, start=1)}
    for k in range(1, ell + 1):
        if k in pos and (2 * ell - k + 1) in pos:
            if k == ell + pos[k] - pos[2 * ell - k + 1] + 1:
                return False
    return True


def _b_allowed(ell: int, index: Tuple[int, ...]) -> bool:
    return all(
        x < y or x == y == ell + 1 for x, y in zip(index, index[1:])
    )


def _b_spinor(ell: int):
    """Sign vectors sigma in {+1,-1}^l; sigma = (-1,...,-1) gives Y_l(z)."""
    def block(k: int, s: int) -> Monomial:
        if k < ell:
            if s == 1:
                return Monomial()
            return _prod(_y(k - 1, -2 * ell + 1, ell, -1), _y(k, -2 * ell + 3, ell - 1))
        if s == 1:
            return _y(ell, -2 * ell, ell + 1, -1)
        return _prod(_y(ell - 1, -2 * ell + 1, ell, -1), _y(ell, -2 * ell + 2, ell - 1))

    for sigma in itertools.product((-1, 1), repeat=ell):
        out, run = Monomial(), 0
        for k, s in enumerate(sigma, start=1):
            out = multiply(out, shift(block(k, s), -2 * run, run))
            run += s
        yield sigma, out


def _d_spinor(ell: int, target: int):
    """Sign vectors sigma in {+1,-1}^(l-1) for the spinor node ``target``.

    The last block lives on node ``target`` when sigma_1 ... sigma_(l-2) has
    the same sign as (-1)^(l-2), and on the other fork node otherwise.
    """
    other = ell - 1 if target == ell else ell

    def block(k: int, s: int, fork: int) -> Monomial:
        if k <= ell - 2:
            if s == 1:
                return Monomial()
            return _prod(_y(k - 1, -ell + k - 1, ell - k + 1, -1), _y(k, -ell + k, ell - k))
        if s == 1:
            return _y(fork, -3, 3, -1)
        return _prod(_y(ell - 2, -2, 2, -1), _y(fork, -1, 1))

    for sigma in itertools.product((-1, 1), repeat=ell - 1):
        parity = 1
        for s in sigma[:-1]:
            parity *= s
        fork = target if parity == (-1) ** (ell - 2) else other
        out, run = Monomial(), 0
        for k, s in enumerate(sigma, start=1):
            p = (k - 1) + run
            out = multiply(out, shift(block(k, s, fork), -p, p))
            run += s
        yield sigma, out


# ---------------------------------------------------------------------------
# public interface

def is_covered(lie_type: LieType, node: int) -> bool:
    ell = lie_type.rank
    if not 1 <= node <= ell:
        return False
    if lie_type.series in ("A", "B", "C"):
        return True
    if lie_type.series == "D":
        return node in (1, ell - 1, ell)
    return False


def catalog(lie_type: LieType, node: int) -> CatalogEntry:
    """Closed-form monomial set of the fundamental field with dominant monomial Y_node(z)."""
    if not is_covered(lie_type, node):
        raise UnsupportedError(f"no closed-form catalog for {lie_type} node {node}")
    ell, series = lie_type.rank, lie_type.series
    if series == "A":
        terms = [
            (idx, _staggered(lambda j: type_a_block(ell, j), idx, 1, 1))
            for idx in itertools.combinations(range(1, ell + 2), node)
        ]
    elif series == "C":
        terms = [
            (idx, _staggered(lambda j: type_c_block(ell, j), idx, 1, 1))
            for idx in itertools.combinations(range(1, 2 * ell + 1), node)
            if _c_allowed(ell, idx)
        ]
    elif series == "B" and node < ell:
        terms = [
            (idx, _staggered(lambda j: type_b_block(ell, j), idx, 2, 1))
            for idx in itertools.combinations_with_replacement(range(1, 2 * ell + 2), node)
            if _b_allowed(ell, idx)
        ]
    elif series == "B":
        terms = list(_b_spinor(ell))
    elif node == 1:
        terms = [((j,), type_d_block(ell, j)) for j in range(1, 2 * ell + 1)]
    else:
        terms = list(_d_spinor(ell, node))
    return CatalogEntry(lie_type, node, tuple(terms))


@dataclass
class CompareReport:
    shift: Tuple[int, int]
    only_in_field: Set[Monomial] = field(default_factory=set)
    only_in_catalog: Set[Monomial] = field(default_factory=set)

    @property
    def match(self) -> bool:
        return not self.only_in_field and not self.only_in_catalog


def _unique_dominant(monomials: Iterable[Monomial], what: str) -> Monomial:
    dom = [m for m in monomials if is_dominant(m) and len(m)]
    if len(dom) != 1:
        raise PreconditionError(f"{what} has {len(dom)} non-trivial dominant monomials, expected 1")
    return dom[0]


def alignment_shift(source: Monomial, target: Monomial) -> Optional[Tuple[int, int]]:
    """The (dq, dt) with shift(source) == target, or None when there is none."""
    if len(source) != len(target) or len(source) == 0:
        return None
    (_, s0, _), (_, t0, _) = source.entries[0], target.entries[0]
    dq, dt = t0.q - s0.q, t0.t - s0.t
    return (dq, dt) if shift(source, dq, dt) == target else None


def compare(fe: FieldExpansion, entry: CatalogEntry) -> CompareReport:
    """Set difference, both ways, after aligning the dominant monomials."""
    if fe.status != COMPLETED:
        raise PreconditionError(f"cannot compare an expansion with status {fe.status}")
    field_dom = _unique_dominant(fe.table, "expansion")
    cat_dom = _unique_dominant(entry.monomials, "catalog entry")
    delta = alignment_shift(cat_dom, field_dom)
    if delta is None:
        raise PreconditionError(f"dominant monomials {cat_dom} and {field_dom} differ beyond a shift")
    aligned = {shift(m, *delta) for m in entry.monomials}
    have = set(fe.table)
    return CompareReport(delta, have - aligned, aligned - have)
