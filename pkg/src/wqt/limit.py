"""Specialization t -> 1 of a finished expansion.

Every variable Y_i(z q^m t^n) becomes Y_{i, q^m}, every coefficient is replaced
by its value at t = 1, and terms whose collapsed monomials coincide are added.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from .coeff import limit_t1
from .engine import COMPLETED, FieldExpansion
from .errors import LimitError, PreconditionError
from .monomial import Monomial, Spectral, weight


def collapse(m: Monomial) -> Monomial:
    """Drop every t-exponent; exponents landing on the same variable add up."""
    return Monomial((n, Spectral(s.orbit, s.q, 0), e) for n, s, e in m.entries)


@dataclass
class QCharacter:
    rank: int
    terms: Dict[Monomial, Fraction] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.terms)

    def render(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{render_collapsed(m)}" for m, c in self.terms.items())


def render_collapsed(m: Monomial) -> str:
    if len(m) == 0:
        return "1"
    parts = []
    for n, s, e in m.entries:
        sp = f"q^{s.q}" if s.orbit == 0 else f"q^{s.q} u_{s.orbit}"
        parts.append(f"Y[{n},{sp}]" + ("" if e == 1 else f"^{e}"))
    return " * ".join(parts)


def specialize_t1(fe: FieldExpansion, seed: int = 0) -> QCharacter:
    """The q-character-style image of ``fe``; terms follow the height order of ``fe``."""
    if fe.status != COMPLETED:
        raise PreconditionError(f"cannot specialize an expansion with status {fe.status}")
    qc = QCharacter(fe.root_data.rank)
    for m in fe.ordered():
        try:
            value = limit_t1(fe.table[m].coeff, seed=seed)
        except LimitError as exc:
            raise LimitError(f"coefficient of {m}: {exc}", residual=exc.residual) from exc
        key = collapse(m)
        qc.terms[key] = qc.terms.get(key, Fraction(0)) + value
    qc.terms = {m: c for m, c in qc.terms.items() if c != 0}
    return qc


def weight_multiset(qc: QCharacter) -> Counter:
    """Weights of the terms counted with their (positive integer) coefficients."""
    out: Counter = Counter()
    for m, c in qc.terms.items():
        if c.denominator != 1 or c < 0:
            raise ValueError(f"coefficient {c} of {render_collapsed(m)} is not a non-negative integer")
        out[weight(m, qc.rank)] += int(c)
    return out


def weight_sum(weights: Counter) -> Tuple[int, ...]:
    total: List[int] = []
    for w, k in weights.items():
        if not total:
            total = [0] * len(w)
        for idx, x in enumerate(w):
            total[idx] += k * x
    return tuple(total)
