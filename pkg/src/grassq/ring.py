"""Sparse elements of H* and QH*: maps (label, q-exponent) -> integer."""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .core import GrassmannianSpec, Label, SpecError, basis_key, format_label

QExponent = tuple[int, ...]
Term = tuple[Label, QExponent]


def zero_q(spec: GrassmannianSpec) -> QExponent:
    return (0,) * spec.nq


class RingElement:
    """An immutable, finitely supported integer combination of q^d * [X_label]."""

    __slots__ = ("spec", "_terms")

    def __init__(self, spec: GrassmannianSpec, terms: Mapping[Term, int] | Iterable[tuple[Term, int]] = ()):
        self.spec = spec
        acc: dict[Term, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (label, q), c in items:
            if len(q) != spec.nq:
                raise SpecError(f"q-exponent {q} has wrong length for {spec}")
            key = (label, tuple(q))
            acc[key] = acc.get(key, 0) + c
        self._terms = {t: c for t, c in acc.items() if c}

    @classmethod
    def basis(cls, spec: GrassmannianSpec, label: Label, q: QExponent | None = None, coeff: int = 1):
        return cls(spec, {(label, q if q is not None else zero_q(spec)): coeff})

    @classmethod
    def one(cls, spec: GrassmannianSpec):
        return cls.basis(spec, Label(()))

    @property
    def terms(self) -> dict[Term, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Term, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check(self, other: "RingElement") -> None:
        if other.spec != self.spec:
            raise SpecError(f"spec mismatch: {self.spec} vs {other.spec}")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        acc = dict(self._terms)
        for t, c in other._terms.items():
            acc[t] = acc.get(t, 0) + c
        return RingElement(self.spec, acc)

    def __neg__(self) -> "RingElement":
        return self.scale(-1)

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + other.scale(-1)

    def scale(self, c: int) -> "RingElement":
        return RingElement(self.spec, {t: c * v for t, v in self._terms.items()})

    def shift_q(self, d: QExponent) -> "RingElement":
        """Multiply by q^d."""
        return RingElement(self.spec, {(lab, tuple(a + b for a, b in zip(q, d))): c
                                       for (lab, q), c in self._terms.items()})

    def coefficient(self, label: Label, q: QExponent | None = None) -> int:
        return self._terms.get((label, q if q is not None else zero_q(self.spec)), 0)

    def classical_part(self) -> "RingElement":
        z = zero_q(self.spec)
        return RingElement(self.spec, {t: c for t, c in self._terms.items() if t[1] == z})

    def q_part(self, q: QExponent) -> dict[Label, int]:
        q = tuple(q)
        return {lab: c for (lab, qq), c in self._terms.items() if qq == q}

    def degrees(self) -> set[int]:
        qd = self.spec.q_degrees
        return {lab.weight + sum(a * b for a, b in zip(q, qd)) for (lab, q) in self._terms}

    def sorted_terms(self) -> list[tuple[Term, int]]:
        return sorted(self._terms.items(), key=lambda it: (basis_key(it[0][0]), it[0][1]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.spec == other.spec and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.spec, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"RingElement({self.spec}, {render_terms(self)})"


def add(x: RingElement, y: RingElement) -> RingElement:
    return x + y


def scale(x: RingElement, c: int) -> RingElement:
    return x.scale(c)


def extract_coefficient(x: RingElement, label: Label, q: QExponent | None = None) -> int:
    return x.coefficient(label, q)


def render_q(q: QExponent) -> str:
    if len(q) == 1:
        d = q[0]
        return "" if d == 0 else ("*q" if d == 1 else f"*q^{d}")
    out = ""
    for i, d in enumerate(q, start=1):
        if d == 1:
            out += f"*q{i}"
        elif d > 1:
            out += f"*q{i}^{d}"
    return out


def render_terms(x: RingElement) -> str:
    if not x:
        return "0"
    pieces = [f"{c}*s[{format_label(lab)}]{render_q(q)}" for (lab, q), c in x.sorted_terms()]
    return " + ".join(pieces).replace("+ -", "- ")
