"""Ring presentations checked by evaluation.

Each relation is built as a polynomial in the special classes (and q),
evaluated in the ring computed by the Pieri engines, and compared with
zero.  Nothing here uses normal forms or ideal membership.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from .core import GrassmannianSpec, Label, basis_key, enumerate_basis
from .gw import (SpecialPolynomial, evaluate_special_polynomial, label_monomial,
                 product_of_specials)
from .pieri import SpecialClass
from .ring import RingElement, render_terms, zero_q

GeneratorPolynomial = SpecialPolynomial


def one(spec: GrassmannianSpec) -> SpecialPolynomial:
    return SpecialPolynomial(spec, {((), zero_q(spec)): 1})


def gen(spec: GrassmannianSpec, p: int, primed: bool = False) -> SpecialPolynomial:
    """The generator tau_p (tau'_k when primed), with tau_0 = 1 and tau_p = 0 out of range."""
    if p == 0:
        return one(spec)
    if p < 0 or p > spec.width:
        return SpecialPolynomial(spec)
    return SpecialPolynomial(spec, {((SpecialClass(p, primed),), zero_q(spec)): 1})


def qvar(spec: GrassmannianSpec, i: int = 0) -> SpecialPolynomial:
    q = [0] * spec.nq
    q[i] = 1
    return SpecialPolynomial(spec, {((), tuple(q)): 1})


def _delta(spec: GrassmannianSpec, p: int) -> int:
    return 1 if p <= spec.k else 2


def chern(spec: GrassmannianSpec, p: int, flavor: str) -> SpecialPolynomial:
    """The entries a_p of the Schur determinants."""
    if flavor == "C_d" or p == 0:
        return gen(spec, p)
    if flavor == "B_weighted":
        return gen(spec, p).scale(_delta(spec, p))
    if flavor == "D_Delta":
        k = spec.k
        if p < k:
            return gen(spec, p)
        if p == k:
            return gen(spec, k) + gen(spec, k, True)
        return gen(spec, p).scale(2)
    raise ValueError(f"unknown flavor {flavor!r}")


def default_flavor(spec: GrassmannianSpec) -> str:
    return {"C": "C_d", "B": "B_weighted"}.get(spec.lie_type, "D_Delta")


def schur_determinants(spec: GrassmannianSpec, top: int, flavor: str | None = None) -> list[SpecialPolynomial]:
    """[d_0, ..., d_top] with d_r = a_1 d_{r-1} - a_2 d_{r-2} + ... + (-1)^{r-1} a_r."""
    flavor = flavor or default_flavor(spec)
    a = [chern(spec, p, flavor) for p in range(top + 1)]
    d = [one(spec)]
    for r in range(1, top + 1):
        acc = SpecialPolynomial(spec)
        for i in range(1, r + 1):
            acc = acc + (a[i] * d[r - i]).scale((-1) ** (i - 1))
        d.append(acc)
    return d


def schur_determinant(spec: GrassmannianSpec, r: int, flavor: str | None = None) -> SpecialPolynomial:
    return schur_determinants(spec, r, flavor)[r]


def evaluate(spec: GrassmannianSpec, poly: SpecialPolynomial, mode: str = "classical") -> RingElement:
    return evaluate_special_polynomial(spec, poly, None, mode)


@dataclass(frozen=True)
class Relation:
    name: str
    degree: int
    lhs: SpecialPolynomial
    rhs: SpecialPolynomial


@dataclass
class RelationResult:
    name: str
    degree: int
    residual: RingElement
    passed: bool

    def as_dict(self) -> dict:
        return {"relation": self.name, "degree": self.degree, "passed": self.passed,
                "residual": render_terms(self.residual)}


@dataclass
class Report:
    spec: GrassmannianSpec
    mode: str
    results: list[RelationResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def as_dict(self) -> dict:
        return {"mode": self.mode, "passed": self.passed,
                "relations": [r.as_dict() for r in self.results]}


def relations(spec: GrassmannianSpec, mode: str = "classical") -> list[Relation]:
    quantum = mode == "quantum"
    n, k, m = spec.n, spec.k, spec.m
    zero = SpecialPolynomial(spec)
    rels: list[Relation] = []
    g = lambda p, primed=False: gen(spec, p, primed)  # noqa: E731

    if spec.lie_type == "C":
        d = schur_determinants(spec, n + k)
        for r in range(m + 1, n + k + 1):
            rels.append(Relation(f"R1[r={r}]", r, d[r], zero))
        for r in range(k + 1, n + 1):
            lhs = g(r) * g(r)
            for i in range(1, n + k - r + 1):
                lhs = lhs + (g(r + i) * g(r - i)).scale(2 * (-1) ** i)
            rhs = zero
            if quantum:
                rhs = (g(2 * r - n - k - 1) * qvar(spec)).scale((-1) ** (n + k - r)) \
                    if 2 * r - n - k - 1 >= 0 else zero
            rels.append(Relation(f"{'Q' if quantum else ''}R2[r={r}]", 2 * r, lhs, rhs))
        return rels

    if spec.lie_type == "B":
        h = schur_determinants(spec, n + k)
        for r in range(n - k + 1, n + 1):
            rels.append(Relation(f"R1[r={r}]", r, h[r], zero))
        for r in range(n + 1, n + k + 1):
            lhs = zero
            for p in range(k + 1, r + 1):
                lhs = lhs + (g(p) * h[r - p]).scale((-1) ** p)
            if quantum and r == n + k:
                rels.append(Relation("QR1''", r, lhs, qvar(spec)))
            else:
                rels.append(Relation(f"R1'[r={r}]", r, lhs, zero))
        for r in range(k + 1, n + 1):
            lhs = g(r) * g(r)
            for i in range(1, r + 1):
                lhs = lhs + (g(r + i) * g(r - i)).scale((-1) ** i * _delta(spec, r - i))
            rels.append(Relation(f"R2[r={r}]", 2 * r, lhs, zero))
        return rels

    D = schur_determinants(spec, n + k)
    c = lambda p: chern(spec, p, "D_Delta")  # noqa: E731
    for r in range(n - k + 2, n + 1):
        rels.append(Relation(f"R1[r={r}]", r, D[r], zero))
    S = zero
    for p in range(k + 1, n + 2):
        S = S + (g(p) * D[n + 1 - p]).scale((-1) ** (p + k + 1))
    top = D[n + 1 - k]
    if spec.lie_type == "Dmax" and quantum:
        rels.append(Relation("R1'[tau_1]", n + 1, g(1) * top - qvar(spec, 0), S))
        rels.append(Relation("R1'[tau'_1]", n + 1, g(1, True) * top - qvar(spec, 1), S))
    else:
        rels.append(Relation("R1'[tau_k]", n + 1, g(k) * top, S))
        rels.append(Relation("R1'[tau'_k]", n + 1, g(k, True) * top, S))
    for r in range(n + 2, n + k + 1):
        lhs = zero
        for p in range(k + 1, r + 1):
            lhs = lhs + (g(p) * D[r - p]).scale((-1) ** p)
        if quantum and r == n + k:
            rels.append(Relation("QR1q", r, lhs, qvar(spec).scale(-1)))
        else:
            rels.append(Relation(f"R1''[r={r}]", r, lhs, zero))
    for r in range(k + 1, n + 1):
        lhs = g(r) * g(r)
        for i in range(1, r + 1):
            lhs = lhs + (g(r + i) * c(r - i)).scale((-1) ** i)
        rels.append(Relation(f"R2[r={r}]", 2 * r, lhs, zero))
    lhs = g(k) * g(k, True)
    for i in range(1, k + 1):
        lhs = lhs + (g(k + i) * g(k - i)).scale((-1) ** i)
    rels.append(Relation("R2'", 2 * k, lhs, zero))
    return rels


def verify_presentation(spec: GrassmannianSpec, mode: str = "classical") -> Report:
    report = Report(spec, mode)
    for rel in relations(spec, mode):
        residual = evaluate(spec, rel.lhs - rel.rhs, mode)
        report.results.append(RelationResult(rel.name, rel.degree, residual, not residual))
    return report


def generator_degrees(spec: GrassmannianSpec) -> list[int]:
    degs = list(range(1, spec.width + 1))
    if spec.is_even:
        degs.append(spec.k)
    return degs


def rank_from_degrees(spec: GrassmannianSpec) -> Fraction:
    """prod(deg relations) / prod(deg generators) for the classical presentation."""
    rel_degs = [r.degree for r in relations(spec, "classical")]
    return Fraction(prod(rel_degs), prod(generator_degrees(spec)))


@dataclass
class BasisReport:
    spec: GrassmannianSpec
    basis_size: int
    rank_formula: int
    degree_ratio: Fraction
    unitriangular: bool

    @property
    def passed(self) -> bool:
        return self.unitriangular and self.basis_size == self.rank_formula == self.degree_ratio

    def as_dict(self) -> dict:
        return {"basis_size": self.basis_size, "rank_formula": self.rank_formula,
                "degree_ratio": str(self.degree_ratio), "unitriangular": self.unitriangular,
                "passed": self.passed}


def basis_check(spec: GrassmannianSpec) -> BasisReport:
    basis = enumerate_basis(spec)
    tri = True
    z = zero_q(spec)
    for lab in basis:
        value = product_of_specials(spec, label_monomial(spec, lab), "classical")
        if value.coefficient(lab, z) != 1:
            tri = False
            break
        for (mu, q), c in value.items():
            if mu != lab and mu.weight == lab.weight and basis_key(mu) > basis_key(lab):
                tri = False
    return BasisReport(spec, len(basis), spec.rank(), rank_from_degrees(spec), tri)


def power_series_identity(spec: GrassmannianSpec) -> bool:
    """(sum a_i t^i)(sum (-1)^i a_i t^i) = sum (-1)^i b_i t^(2i) as polynomials (type C)."""
    top = spec.width
    a = [gen(spec, p) for p in range(top + 1)]
    zero = SpecialPolynomial(spec)
    for e in range(0, 2 * top + 1):
        coeff = zero
        for i in range(max(0, e - top), min(e, top) + 1):
            coeff = coeff + (a[i] * a[e - i]).scale((-1) ** (e - i))
        if e % 2:
            expected = zero
        else:
            r = e // 2
            b = a[r] * a[r] if r <= top else zero
            for i in range(1, r + 1):
                if r + i <= top:
                    b = b + (a[r + i] * a[r - i]).scale(2 * (-1) ** i)
            expected = b.scale((-1) ** r)
        if coeff != expected:
            return False
    return True
