"""Screening-cancellation certificate for a finished expansion.

For a monomial M and a node i, the set R holds the spectral parameters a with
degree 1 at a and degree 0 at a q^-2r_i; the set S holds the b with degree -1
at b and degree 0 at b q^2r_i.  Each a in R is paired with a partner N
obtained by walking down the t^2-string starting at a, and the partner must
carry a q^-2r_i t^(2s+2) in its own S set with a coefficient related to that of
M by an explicit product.  The pairing must be a bijection between all R
elements and all S elements of the table.

Only the (monomial, coefficient) table is used; edges are never consulted,
so the certificate does not depend on how the table was built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from . import coeff as _coeff
from .cartan import RootData, a_monomial
from .coeff import FactoredCoeff, orbit_difference
from .engine import COMPLETED, FieldExpansion
from .errors import PreconditionError
from .monomial import Monomial, Spectral, inverse, multiply


@dataclass(frozen=True)
class Pairing:
    monomial: Monomial
    node: int
    spectral: Spectral
    partner: Monomial
    string_length: int  # the integer s: degrees are 1 at a t^(2u) for 0 <= u <= s


@dataclass(frozen=True)
class Violation:
    monomial: Monomial
    node: int
    spectral: Spectral
    reason: str


@dataclass
class ResidueReport:
    pairings: List[Pairing] = field(default_factory=list)
    violations: List[Violation] = field(default_factory=list)
    r_count: int = 0
    s_count: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self, order: Optional[List[Monomial]] = None) -> dict:
        index = {m: k for k, m in enumerate(order or [])}
        rows = [
            {
                "monomial": index.get(v.monomial, -1),
                "node": v.node,
                "spectral": [v.spectral.orbit, v.spectral.q, v.spectral.t],
                "reason": v.reason,
            }
            for v in self.violations
        ]
        return {"pairings": len(self.pairings), "violations": rows}


def residue_sets(rd: RootData, m: Monomial, i: int) -> Tuple[Set[Spectral], Set[Spectral]]:
    """The sets R and S of ``m`` at node ``i``."""
    step = 2 * rd.r_of(i)
    r_set, s_set = set(), set()
    for (node, a), d in m.items():
        if node != i:
            continue
        if d == 1 and m.degree(i, a.shift(-step, 0)) == 0:
            r_set.add(a)
        elif d == -1 and m.degree(i, a.shift(step, 0)) == 0:
            s_set.add(a)
    return r_set, s_set


def _string_length(m: Monomial, i: int, a: Spectral) -> int:
    s = 0
    while m.degree(i, a.shift(0, 2 * (s + 1))) == 1:
        s += 1
    return s


def partner_of(rd: RootData, m: Monomial, i: int, a: Spectral, s: int) -> Monomial:
    """``m * prod_{u=0..s} A_i(z a q^-r_i t^(2u+1))^-1``."""
    r = rd.r_of(i)
    out = m
    for u in range(s + 1):
        out = multiply(out, inverse(a_monomial(rd, i, a.shift(-r, 2 * u + 1))))
    return out


def expected_ratio(rd: RootData, m: Monomial, i: int, a: Spectral, s: int) -> FactoredCoeff:
    """The factor relating the coefficient of the partner to that of ``m``."""
    step = -2 * rd.r_of(i)
    shift_t = 2 * s + 2
    string = {a.shift(0, 2 * u) for u in range(s + 1)}
    num, den = [], []
    for (node, b), d in m.items():
        if node != i or b in string:
            continue
        x = (a.q - b.q, a.t - b.t) + orbit_difference(a, b)
        dq, dt, kappa = x[0], x[1], x[2:]
        terms = [
            (dq + step, dt) + kappa,
            (dq, dt + shift_t) + kappa,
        ]
        cross = [
            (dq + step, dt + shift_t) + kappa,
            (dq, dt) + kappa,
        ]
        top, bottom = (terms, cross) if d > 0 else (cross, terms)
        for _ in range(abs(d)):
            num.extend(top)
            den.extend(bottom)
    return FactoredCoeff.from_factors(num=num, den=den)


def verify_cancellation(fe: FieldExpansion, seed: Optional[int] = None) -> ResidueReport:
    """Check every R element against its partner and the R <-> S bijection."""
    if fe.status != COMPLETED:
        raise PreconditionError(f"cannot certify an expansion with status {fe.status}")
    rd = fe.root_data
    seed = fe.config.equality_seed if seed is None else seed
    report = ResidueReport()
    coeffs: Dict[Monomial, FactoredCoeff] = {m: e.coeff for m, e in fe.table.items()}
    order = sorted(coeffs, key=Monomial.sort_key)

    s_side: Set[Tuple[Monomial, int, Spectral]] = set()
    for m in order:
        for i in rd.nodes:
            r_set, s_set = residue_sets(rd, m, i)
            report.r_count += len(r_set)
            report.s_count += len(s_set)
            s_side.update((m, i, b) for b in s_set)

    hit: Dict[Tuple[Monomial, int, Spectral], Tuple[Monomial, int, Spectral]] = {}
    for m in order:
        for i in rd.nodes:
            r_set, _ = residue_sets(rd, m, i)
            for a in sorted(r_set):
                bad = _check_one(rd, coeffs, m, i, a, seed, report, hit)
                for reason in bad:
                    report.violations.append(Violation(m, i, a, reason))

    for key in sorted(s_side - set(hit), key=lambda k: (k[0].sort_key(), k[1], k[2])):
        m, i, b = key
        report.violations.append(Violation(m, i, b, "S element not reached by any R element"))
    return report


def _check_one(rd, coeffs, m, i, a, seed, report, hit) -> List[str]:
    step = -2 * rd.r_of(i)
    s = _string_length(m, i, a)
    reasons = []
    if m.degree(i, a.shift(0, 2 * s + 2)) != 0:
        reasons.append(f"t^2-string from a ends at a nonzero degree after s={s}")
    if any(m.degree(i, a.shift(step, 2 * u)) != 0 for u in range(s + 1)):
        reasons.append("degree below the t^2-string is nonzero")
    partner = partner_of(rd, m, i, a, s)
    if partner not in coeffs:
        reasons.append(f"partner {partner} is missing from the table")
        return reasons
    b = a.shift(step, 2 * s + 2)
    if partner.degree(i, b) != -1 or partner.degree(i, b.shift(-step, 0)) != 0:
        reasons.append(f"partner does not carry {b} in its S set")
    else:
        key = (partner, i, b)
        if key in hit:
            reasons.append(f"S element {b} of {partner} is reached twice")
        hit[key] = (m, i, a)
    expected = coeffs[m] * expected_ratio(rd, m, i, a, s)
    if not _coeff.equals(coeffs[partner], expected, seed=seed):
        reasons.append("coefficient relation with the partner fails")
    if not reasons:
        report.pairings.append(Pairing(m, i, a, partner, s))
    return reasons
