"""Exact factored coefficients.

Every coefficient produced by the expansion is a signed Laurent monomial times
a product of factors ``(1 - q^a t^b u^kappa)^(+-1)``.  Only multiplication and
division are ever needed, so this is the whole arithmetic surface.  A factor
is kept in canonical orientation, with ``(a, b, *kappa)`` lexicographically
positive, by rewriting ``1 - x^-1 = -x^-1 (1 - x)`` and moving the sign and the
monomial into the prefactor.

Two coefficients can be equal as rational functions without having the same
factor multiset, e.g. ``(1 - q^4) = (1 - q^2)(1 + q^2)``.  :func:`equals`
therefore falls back on exact evaluation at seeded random rational points.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, TYPE_CHECKING

from .errors import EvaluationError, LimitError, ParseError, PreconditionError, ResonanceError
from .monomial import Monomial, Spectral

if TYPE_CHECKING:  # pragma: no cover
    from .cartan import RootData

DEFAULT_POINTS = 8
DEFAULT_BOUND = 10**4

Kappa = Tuple[int, ...]


def _trim(vec: Iterable[int]) -> Kappa:
    out = list(vec)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _add(u: Kappa, v: Kappa, scale: int = 1) -> Kappa:
    n = max(len(u), len(v))
    return _trim(
        (u[k] if k < len(u) else 0) + scale * (v[k] if k < len(v) else 0) for k in range(n)
    )


def orbit_difference(a: Spectral, b: Spectral) -> Kappa:
    """Exponent vector of u_1, u_2, ... in the ratio a / b (orbit 0 carries no generator)."""
    size = max(a.orbit, b.orbit)
    vec = [0] * size
    if a.orbit:
        vec[a.orbit - 1] += 1
    if b.orbit:
        vec[b.orbit - 1] -= 1
    return _trim(vec)


@dataclass(frozen=True, order=True)
class Factor:
    """The factor ``1 - q^a t^b u^kappa`` in canonical (positive) orientation."""

    a: int
    b: int
    kappa: Kappa = ()

    def __post_init__(self):
        lead = next((x for x in (self.a, self.b) + self.kappa if x != 0), 0)
        if lead <= 0:
            raise ValueError(f"factor exponents {self.exponents()} are not positively oriented")

    def exponents(self) -> Tuple[int, ...]:
        return (self.a, self.b) + self.kappa

    def value(self, q: Fraction, t: Fraction, orbit_values: Sequence[Fraction] = ()) -> Fraction:
        return 1 - _power_product(q, t, orbit_values, self.a, self.b, self.kappa)

    def __str__(self) -> str:
        parts = []
        if self.a:
            parts.append(f"q^{self.a}")
        if self.b:
            parts.append(f"t^{self.b}")
        parts += [f"u_{k + 1}^{e}" for k, e in enumerate(self.kappa) if e]
        return f"(1 - {' '.join(parts)})"


def _power_product(q, t, orbit_values, a: int, b: int, kappa: Kappa) -> Fraction:
    x = Fraction(q) ** a * Fraction(t) ** b
    for k, e in enumerate(kappa):
        if e:
            if k >= len(orbit_values):
                raise EvaluationError(f"no value supplied for orbit generator u_{k + 1}")
            x *= Fraction(orbit_values[k]) ** e
    return x


def orient(a: int, b: int, kappa: Iterable[int] = ()) -> Tuple[int, int, int, Kappa, Factor]:
    """Write ``1 - q^a t^b u^kappa`` as ``sign * q^qa t^tb u^ku * Factor``.

    Returns ``(sign, qa, tb, ku, factor)``.  Raises :class:`ResonanceError`
    when every exponent is zero, since the factor would vanish identically.
    """
    kappa = _trim(kappa)
    exps = (a, b) + kappa
    lead = next((x for x in exps if x != 0), 0)
    if lead == 0:
        raise ResonanceError("the factor (1 - q^0 t^0) vanishes identically")
    if lead > 0:
        return 1, 0, 0, (), Factor(a, b, kappa)
    neg = tuple(-k for k in kappa)
    return -1, a, b, kappa, Factor(-a, -b, neg)


class FactoredCoeff:
    """``sign * q^q t^t u^orbits * prod Factor^e`` with cancelled multiplicities."""

    __slots__ = ("sign", "q", "t", "orbits", "_factors", "_hash")

    def __init__(
        self,
        sign: int = 1,
        q: int = 0,
        t: int = 0,
        orbits: Iterable[int] = (),
        factors: Optional[Dict[Factor, int]] = None,
    ):
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign!r}")
        self.sign = sign
        self.q = int(q)
        self.t = int(t)
        self.orbits = _trim(orbits)
        self._factors = tuple(sorted((f, e) for f, e in (factors or {}).items() if e != 0))
        self._hash = hash(self._key())

    # -- construction -------------------------------------------------------

    @classmethod
    def one(cls) -> "FactoredCoeff":
        return cls()

    @classmethod
    def from_factors(
        cls,
        num: Iterable[Sequence[int]] = (),
        den: Iterable[Sequence[int]] = (),
        sign: int = 1,
        q: int = 0,
        t: int = 0,
        orbits: Iterable[int] = (),
    ) -> "FactoredCoeff":
        """Build ``sign q^q t^t * prod(1 - x_num) / prod(1 - x_den)``.

        Each factor is given by its exponents ``(a, b, *kappa)`` in either
        orientation.
        """
        acc = _Accumulator(sign, q, t, orbits)
        for exps in num:
            acc.push(exps[0], exps[1], exps[2:], 1)
        for exps in den:
            acc.push(exps[0], exps[1], exps[2:], -1)
        return acc.build()

    @property
    def factors(self) -> Tuple[Tuple[Factor, int], ...]:
        return self._factors

    @property
    def num(self) -> List[Factor]:
        return [f for f, e in self._factors for _ in range(e) if e > 0]

    @property
    def den(self) -> List[Factor]:
        return [f for f, e in self._factors for _ in range(-e) if e < 0]

    def n_orbits(self) -> int:
        return max([len(self.orbits)] + [len(f.kappa) for f, _ in self._factors])

    def is_orbit_free(self) -> bool:
        return self.n_orbits() == 0

    # -- arithmetic ---------------------------------------------------------

    def __mul__(self, other: "FactoredCoeff") -> "FactoredCoeff":
        return mul(self, other)

    def __truediv__(self, other: "FactoredCoeff") -> "FactoredCoeff":
        return div(self, other)

    def __pow__(self, n: int) -> "FactoredCoeff":
        return FactoredCoeff(
            self.sign**n,
            self.q * n,
            self.t * n,
            tuple(k * n for k in self.orbits),
            {f: e * n for f, e in self._factors},
        )

    def _key(self):
        return (self.sign, self.q, self.t, self.orbits, self._factors)

    def __eq__(self, other) -> bool:
        """Structural equality of canonical forms; see :func:`equals` for identity testing."""
        if not isinstance(other, FactoredCoeff):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"FactoredCoeff({self})"

    def __str__(self) -> str:
        head = "-" if self.sign < 0 else ""
        mono = []
        if self.q:
            mono.append(f"q^{self.q}")
        if self.t:
            mono.append(f"t^{self.t}")
        mono += [f"u_{k + 1}^{e}" for k, e in enumerate(self.orbits) if e]
        num = [str(f) if e == 1 else f"{f}^{e}" for f, e in self._factors if e > 0]
        den = [str(f) if e == -1 else f"{f}^{-e}" for f, e in self._factors if e < 0]
        top = " ".join(mono + num) or "1"
        text = head + top
        if den:
            text += " / " + (den[0] if len(den) == 1 else "(" + " ".join(den) + ")")
        return text

    def to_json(self) -> dict:
        return {
            "sign": self.sign,
            "q": self.q,
            "t": self.t,
            "orbits": list(self.orbits),
            "num": [list(f.exponents()) for f in self.num],
            "den": [list(f.exponents()) for f in self.den],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FactoredCoeff":
        try:
            return cls.from_factors(
                num=[tuple(x) for x in data["num"]],
                den=[tuple(x) for x in data["den"]],
                sign=int(data["sign"]),
                q=int(data["q"]),
                t=int(data["t"]),
                orbits=[int(k) for k in data.get("orbits", [])],
            )
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise ParseError(f"malformed coefficient {data!r}: {exc}") from exc


class _Accumulator:
    """Mutable scratch space for assembling a FactoredCoeff."""

    def __init__(self, sign=1, q=0, t=0, orbits=()):
        self.sign = sign
        self.q = q
        self.t = t
        self.orbits = _trim(orbits)
        self.factors: Counter = Counter()

    def push(self, a: int, b: int, kappa: Iterable[int], power: int) -> None:
        sign, qa, tb, ku, factor = orient(a, b, kappa)
        if sign < 0 and power % 2:
            self.sign = -self.sign
        self.q += qa * power
        self.t += tb * power
        if ku:
            self.orbits = _add(self.orbits, ku, power)
        self.factors[factor] += power

    def absorb(self, c: FactoredCoeff, power: int = 1) -> None:
        if c.sign < 0 and power % 2:
            self.sign = -self.sign
        self.q += c.q * power
        self.t += c.t * power
        self.orbits = _add(self.orbits, c.orbits, power)
        for f, e in c.factors:
            self.factors[f] += e * power

    def build(self) -> FactoredCoeff:
        return FactoredCoeff(self.sign, self.q, self.t, self.orbits, dict(self.factors))


def one() -> FactoredCoeff:
    """The multiplicative identity."""
    return FactoredCoeff()


def mul(c1: FactoredCoeff, c2: FactoredCoeff) -> FactoredCoeff:
    acc = _Accumulator()
    acc.absorb(c1)
    acc.absorb(c2)
    return acc.build()


def div(c1: FactoredCoeff, c2: FactoredCoeff) -> FactoredCoeff:
    acc = _Accumulator()
    acc.absorb(c1)
    acc.absorb(c2, -1)
    return acc.build()


def monomial_difference(first: Tuple[int, int], second: Tuple[int, int]) -> FactoredCoeff:
    """``q^a1 t^b1 - q^a2 t^b2`` as a factored coefficient."""
    (a1, b1), (a2, b2) = first, second
    return FactoredCoeff.from_factors(num=[(a2 - a1, b2 - b1)], q=a1, t=b1)


def monomial_sum(first: Tuple[int, int], second: Tuple[int, int]) -> FactoredCoeff:
    """``q^a1 t^b1 + q^a2 t^b2``, using ``1 + x = (1 - x^2) / (1 - x)``."""
    (a1, b1), (a2, b2) = first, second
    da, db = a2 - a1, b2 - b1
    return FactoredCoeff.from_factors(num=[(2 * da, 2 * db)], den=[(da, db)], q=a1, t=b1)


# ---------------------------------------------------------------------------
# evaluation and identity testing

def evaluate(
    c: FactoredCoeff, q, t, orbit_values: Sequence = ()
) -> Fraction:
    """Exact value of ``c`` at rational ``q``, ``t`` and orbit generators."""
    q = Fraction(q)
    t = Fraction(t)
    orbit_values = [Fraction(u) for u in orbit_values]
    if q == 0 or t == 0 or any(u == 0 for u in orbit_values):
        raise EvaluationError("q, t and orbit generators must be nonzero")
    value = Fraction(c.sign) * _power_product(q, t, orbit_values, c.q, c.t, c.orbits)
    for f, e in c.factors:
        fv = f.value(q, t, orbit_values)
        if fv == 0:
            kind = "pole" if e < 0 else "zero"
            raise EvaluationError(f"{kind} of factor {f} at q={q}, t={t}")
        value *= fv**e
    return value


# ``eval`` is the name used in the module contract; keep both spellings.
eval = evaluate  # noqa: A001


def _random_rational(rng: random.Random, bound: int) -> Fraction:
    while True:
        x = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if x not in (0, 1, -1):
            return x


def sample_points(
    seed: int,
    count: int = DEFAULT_POINTS,
    n_orbits: int = 0,
    bound: int = DEFAULT_BOUND,
    avoid: Sequence[FactoredCoeff] = (),
) -> List[Tuple[Fraction, Fraction, Tuple[Fraction, ...]]]:
    """Seeded rational points where no factor of ``avoid`` vanishes."""
    rng = random.Random(seed)
    points = []
    while len(points) < count:
        q = _random_rational(rng, bound)
        t = _random_rational(rng, bound)
        us = tuple(_random_rational(rng, bound) for _ in range(n_orbits))
        if any(f.value(q, t, us) == 0 for c in avoid for f, _ in c.factors):
            continue
        points.append((q, t, us))
    return points


def equals(
    c1: FactoredCoeff,
    c2: FactoredCoeff,
    seed: int = 0,
    points: int = DEFAULT_POINTS,
    bound: int = DEFAULT_BOUND,
) -> bool:
    """Decide whether two coefficients are the same rational function.

    Identical canonical forms short-circuit; otherwise both sides are evaluated
    exactly at ``points`` seeded random rational points.
    """
    if c1 == c2:
        return True
    n_orbits = max(c1.n_orbits(), c2.n_orbits())
    for q, t, us in sample_points(seed, points, n_orbits, bound, avoid=(c1, c2)):
        if evaluate(c1, q, t, us) != evaluate(c2, q, t, us):
            return False
    return True


# ---------------------------------------------------------------------------
# the expansion step

def _same_node_block(
    acc: _Accumulator, x: Tuple[int, int, Kappa], step: int, positive: bool, power: int
) -> None:
    """Multiply in the ratio attached to one other variable on the expanded node.

    With ``x = a / b``, a positive variable ``Y(z b)`` contributes
    ``(1 - q^step x)(1 - t^2 x) / ((1 - x)(1 - q^step t^2 x))`` and a negative
    one contributes the reciprocal.
    """
    dq, dt, kappa = x
    sgn = 1 if positive else -1
    acc.push(dq + step, dt, kappa, sgn * power)
    acc.push(dq, dt + 2, kappa, sgn * power)
    acc.push(dq, dt, kappa, -sgn * power)
    acc.push(dq + step, dt + 2, kappa, -sgn * power)


def step_coefficient(
    rd: "RootData", lambda_prev: FactoredCoeff, m: Monomial, i: int, a: Spectral
) -> FactoredCoeff:
    """Coefficient of the monomial created by expanding Y_i(z a) in ``m``.

    Raises :class:`ResonanceError` if a factor would vanish identically, which
    cannot happen when ``m`` is generic and regular and Y_i(z a) is admissible.
    """
    rd.check_node(i)
    step = -2 * rd.r_of(i)
    acc = _Accumulator()
    acc.absorb(lambda_prev)
    for (node, b), e in m.items():
        if node != i or b == a:
            continue
        x = (a.q - b.q, a.t - b.t, orbit_difference(a, b))
        _same_node_block(acc, x, step, e > 0, abs(e))
    return acc.build()


# ---------------------------------------------------------------------------
# t -> 1

def limit_t1(c: FactoredCoeff, seed: int = 0, checks: int = 3) -> Fraction:
    """The value of ``c`` at t = 1, required to be independent of q.

    A factor ``1 - t^b`` vanishes to first order with leading coefficient
    ``-b``; the numerator and denominator must contain equally many such
    factors.  Every other factor becomes ``1 - q^a``.
    """
    if not c.is_orbit_free():
        raise PreconditionError("t -> 1 limits are only defined for orbit-free coefficients")
    balance = 0
    ratio = Fraction(1)
    residual = _Accumulator(c.sign, c.q, 0)
    for f, e in c.factors:
        if f.a == 0:
            balance += e
            ratio *= Fraction(f.b) ** e
        else:
            # canonical orientation makes a > 0 whenever it is nonzero
            residual.factors[Factor(f.a, 0)] += e
    if balance > 0:
        raise LimitError(f"{c} vanishes at t = 1")
    if balance < 0:
        raise LimitError(f"{c} has a pole at t = 1")
    rest = residual.build()
    rng = random.Random(seed)
    values = set()
    for _ in range(checks):
        while True:
            q = _random_rational(rng, DEFAULT_BOUND)
            if all(f.value(q, 1) != 0 for f, _ in rest.factors):
                break
        values.add(ratio * evaluate(rest, q, 1))
    if len(values) != 1:
        raise LimitError(f"t -> 1 limit of {c} depends on q", residual=(ratio, rest))
    return values.pop()
