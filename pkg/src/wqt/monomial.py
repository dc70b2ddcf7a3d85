"""Normally ordered monomials in the variables Y_i(z a)^(+-1).

A spectral parameter ``a = u_k q^m t^n`` is stored as the integer triple
``Spectral(orbit=k, q=m, t=n)``; orbit 0 stands for the plain lattice
``q^Z t^Z``.  A :class:`Monomial` is an immutable, canonically sorted map
from ``(node, Spectral)`` to a nonzero integer exponent.

Text form, used by the command line and by ``repr``::

    Y[1](q^0 t^0) * Y[1](q^-4 t^2)^-1
    Y[2](q^1 t^-1, u_1)^2
"""

from __future__ import annotations

import re
from typing import Dict, Iterable, Iterator, List, NamedTuple, Tuple, TYPE_CHECKING

from .errors import ParseError

if TYPE_CHECKING:  # pragma: no cover
    from .cartan import RootData


class Spectral(NamedTuple):
    """Exponent triple of ``u_orbit * q^q * t^t``."""

    orbit: int = 0
    q: int = 0
    t: int = 0

    def shift(self, dq: int = 0, dt: int = 0) -> "Spectral":
        return Spectral(self.orbit, self.q + dq, self.t + dt)

    def __str__(self) -> str:
        base = f"q^{self.q} t^{self.t}"
        return base if self.orbit == 0 else f"{base}, u_{self.orbit}"


Key = Tuple[int, Spectral]


class Monomial:
    """An immutable product of Y variables with integer exponents.

    Equality and hashing use the sorted entry tuple, so two monomials are equal
    exactly when they contain the same variables with the same exponents.
    """

    __slots__ = ("_entries", "_map", "_hash")

    def __init__(self, entries: Iterable[Tuple[int, Spectral, int]] = ()):
        acc: Dict[Key, int] = {}
        for node, sp, exp in entries:
            key = (int(node), Spectral(*sp))
            acc[key] = acc.get(key, 0) + int(exp)
        self._set(acc)

    def _set(self, acc: Dict[Key, int]) -> None:
        items = sorted((k, e) for k, e in acc.items() if e != 0)
        self._map = dict(items)
        self._entries = tuple((node, sp, e) for (node, sp), e in items)
        self._hash = hash(self._entries)

    @classmethod
    def from_mapping(cls, mapping: Dict[Key, int]) -> "Monomial":
        m = cls.__new__(cls)
        m._set({(node, Spectral(*sp)): e for (node, sp), e in mapping.items()})
        return m

    @classmethod
    def identity(cls) -> "Monomial":
        return cls()

    @classmethod
    def Y(cls, node: int, q: int = 0, t: int = 0, exp: int = 1, orbit: int = 0) -> "Monomial":
        """The single variable ``Y_node(z u_orbit q^q t^t)^exp``."""
        return cls([(node, Spectral(orbit, q, t), exp)])

    @property
    def entries(self) -> Tuple[Tuple[int, Spectral, int], ...]:
        return self._entries

    def items(self) -> Iterator[Tuple[Key, int]]:
        return iter(self._map.items())

    def degree(self, node: int, a: Spectral) -> int:
        return self._map.get((node, a), 0)

    def __len__(self) -> int:
        return len(self._entries)

    def __bool__(self) -> bool:
        # The identity monomial is still a valid monomial; truthiness is not
        # used to mean "non-empty" anywhere in the package.
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self) -> Tuple[Tuple[int, int, int, int, int], ...]:
        return tuple((n, s.orbit, s.q, s.t, e) for n, s, e in self._entries)

    def __lt__(self, other: "Monomial") -> bool:
        return self.sort_key() < other.sort_key()

    def __mul__(self, other: "Monomial") -> "Monomial":
        return multiply(self, other)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return multiply(self, inverse(other))

    def __pow__(self, n: int) -> "Monomial":
        out = Monomial.__new__(Monomial)
        out._set({k: e * n for k, e in self._map.items()})
        return out

    def __invert__(self) -> "Monomial":
        return inverse(self)

    def __repr__(self) -> str:
        return f"Monomial({render_monomial(self)!r})"

    def __str__(self) -> str:
        return render_monomial(self)


def multiply(m1: Monomial, m2: Monomial) -> Monomial:
    """Exponentwise sum; variables whose exponents cancel are dropped."""
    acc = dict(m1._map)
    for k, e in m2._map.items():
        acc[k] = acc.get(k, 0) + e
    out = Monomial.__new__(Monomial)
    out._set(acc)
    return out


def inverse(m: Monomial) -> Monomial:
    return m**-1


def shift(m: Monomial, dq: int = 0, dt: int = 0) -> Monomial:
    """Replace z by z q^dq t^dt in every variable."""
    out = Monomial.__new__(Monomial)
    out._set({(n, s.shift(dq, dt)): e for (n, s), e in m._map.items()})
    return out


def degree(m: Monomial, i: int, a: Spectral) -> int:
    return m.degree(i, a)


def is_dominant(m: Monomial) -> bool:
    return all(e > 0 for _, _, e in m.entries)


def is_antidominant(m: Monomial) -> bool:
    return all(e < 0 for _, _, e in m.entries)


def is_generic(m: Monomial) -> bool:
    return all(e in (1, -1) for _, _, e in m.entries)


def is_regular(rd: "RootData", m: Monomial) -> bool:
    """Check the shift conditions tying degrees at a, a q^-2r, a t^2 and a q^-2r t^2.

    Only variables present in ``m`` can trigger a clause, so it suffices to
    scan the support.
    """
    for (i, a), d in m.items():
        step = -2 * rd.r_of(i)
        down = m.degree(i, a.shift(step, 0))
        up = m.degree(i, a.shift(0, 2))
        diag = m.degree(i, a.shift(step, 2))
        if d > 0:
            if down < 0 or up < 0:
                return False
            if diag > 0 and not (down > 0 and up > 0):
                return False
        elif diag < 0 and not (down < 0 and up < 0):
            return False
    return True


def satisfies_condition_r(rd: "RootData", m: Monomial) -> bool:
    """Equal nonzero degrees at a and a q^-2r t^2 force equal degrees at a q^-2r and a t^2."""
    for (i, a), d in m.items():
        step = -2 * rd.r_of(i)
        if m.degree(i, a.shift(step, 2)) == d:
            if m.degree(i, a.shift(step, 0)) != d or m.degree(i, a.shift(0, 2)) != d:
                return False
    return True


def is_admissible(rd: "RootData", m: Monomial, i: int, a: Spectral) -> bool:
    return (
        m.degree(i, a) > 0
        and m.degree(i, a.shift(-2 * rd.r_of(i), 0)) == 0
        and m.degree(i, a.shift(0, 2)) == 0
    )


def admissible_variables(rd: "RootData", m: Monomial) -> List[Key]:
    """All (node, spectral) pairs where the algorithm may expand, in canonical order."""
    return [(i, a) for (i, a), _ in m.items() if is_admissible(rd, m, i, a)]


def apply_A_inverse(rd: "RootData", m: Monomial, i: int, a: Spectral) -> Monomial:
    """Multiply by A_i(z a q^-r_i t)^-1, which turns Y_i(z a) into Y_i(z a q^-2r_i t^2)^-1."""
    from .cartan import a_monomial

    return multiply(m, inverse(a_monomial(rd, i, a.shift(-rd.r_of(i), 1))))


def weight(m: Monomial, rank: int) -> Tuple[int, ...]:
    """Coordinates in the fundamental-weight basis: total exponent per node."""
    out = [0] * rank
    for node, _, e in m.entries:
        out[node - 1] += e
    return tuple(out)


# ---------------------------------------------------------------------------
# text form

def _render_factor(node: int, sp: Spectral, exp: int) -> str:
    text = f"Y[{node}]({sp})"
    return text if exp == 1 else f"{text}^{exp}"


def render_monomial(m: Monomial) -> str:
    if len(m) == 0:
        return "1"
    return " * ".join(_render_factor(n, s, e) for n, s, e in m.entries)


_INT = r"[+-]?\d+"
_FACTOR = re.compile(
    rf"Y\[\s*(?P<node>\d+)\s*\]\(\s*q\^(?P<q>{_INT})\s+t\^(?P<t>{_INT})"
    rf"\s*(?:,\s*u_(?P<orbit>\d+)\s*)?\)(?:\s*\^\s*(?P<exp>{_INT}))?"
)


def parse_monomial(text: str) -> Monomial:
    """Parse the text form produced by :func:`render_monomial`.

    Factors are separated by ``*`` or whitespace; ``1`` denotes the identity.
    """
    src = text.strip()
    if src in ("", "1"):
        return Monomial()
    pos = 0
    entries = []
    expect_factor = True
    while pos < len(src):
        ch = src[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch == "*":
            if expect_factor:
                raise ParseError(f"unexpected '*' at position {pos} in {text!r}")
            expect_factor = True
            pos += 1
            continue
        match = _FACTOR.match(src, pos)
        if match is None:
            raise ParseError(f"cannot parse monomial {text!r} at position {pos}")
        node = int(match.group("node"))
        if node < 1:
            raise ParseError(f"node labels start at 1, got {node} in {text!r}")
        sp = Spectral(int(match.group("orbit") or 0), int(match.group("q")), int(match.group("t")))
        exp = int(match.group("exp")) if match.group("exp") is not None else 1
        entries.append((node, sp, exp))
        pos = match.end()
        expect_factor = False
    if expect_factor:
        raise ParseError(f"dangling '*' in {text!r}")
    return Monomial(entries)
