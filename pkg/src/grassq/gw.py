"""Quantum products and three-point Gromov-Witten invariants.

Every Schubert class is written as a polynomial in the special classes and
q by peeling off the leading term of the monomial in its parts:

    sigma_{lam_1} ... sigma_{lam_l} = sigma_lam + (classes that dominate lam
                                      or have smaller weight, times q^d)

Evaluating that polynomial with iterated Pieri products against another
class gives any product in the ring.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Iterable, Mapping

from .core import (GrassmannianSpec, Label, SpecError, basis_key, check_label, dual,
                   enumerate_basis, make_spec)
from .pieri import SpecialClass, check_special, classical_pieri
from .index_pieri import classical_pieri_via_index
from .quantum import quantum_pieri
from .ring import QExponent, RingElement, zero_q

Monomial = tuple[SpecialClass, ...]


class TriangularityError(RuntimeError):
    """The monomial-to-basis matrix is not unitriangular."""


class SpecialPolynomial:
    """Integer polynomial in special classes and q; monomials are sorted tuples."""

    __slots__ = ("spec", "_terms")

    def __init__(self, spec: GrassmannianSpec, terms: Mapping | Iterable = ()):
        self.spec = spec
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (mono, q), c in items:
            key = (tuple(sorted(mono)), tuple(q))
            acc[key] = acc.get(key, 0) + c
        self._terms = {t: c for t, c in acc.items() if c}

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __add__(self, other: "SpecialPolynomial") -> "SpecialPolynomial":
        acc = dict(self._terms)
        for t, c in other._terms.items():
            acc[t] = acc.get(t, 0) + c
        return SpecialPolynomial(self.spec, acc)

    def __sub__(self, other: "SpecialPolynomial") -> "SpecialPolynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "SpecialPolynomial") -> "SpecialPolynomial":
        acc: dict = {}
        for (m1, q1), c1 in self._terms.items():
            for (m2, q2), c2 in other._terms.items():
                key = (tuple(sorted(m1 + m2)), tuple(a + b for a, b in zip(q1, q2)))
                acc[key] = acc.get(key, 0) + c1 * c2
        return SpecialPolynomial(self.spec, acc)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def scale(self, c: int) -> "SpecialPolynomial":
        return SpecialPolynomial(self.spec, {t: c * v for t, v in self._terms.items()})

    def shift_q(self, d: QExponent) -> "SpecialPolynomial":
        return SpecialPolynomial(self.spec, {(mono, tuple(a + b for a, b in zip(q, d))): c
                                             for (mono, q), c in self._terms.items()})

    def degree_set(self) -> set[int]:
        qd = self.spec.q_degrees
        return {sum(s.p for s in mono) + sum(a * b for a, b in zip(q, qd))
                for mono, q in self._terms}

    def __eq__(self, other):
        if not isinstance(other, SpecialPolynomial):
            return NotImplemented
        return self.spec == other.spec and self._terms == other._terms

    def __repr__(self) -> str:
        return f"SpecialPolynomial({render_polynomial(self)})"


def render_special(spec: GrassmannianSpec, s: SpecialClass) -> str:
    return f"s{s.p}'" if s.primed else f"s{s.p}"


def render_polynomial(poly: SpecialPolynomial) -> str:
    from .ring import render_q
    if not poly._terms:
        return "0"
    out = []
    for (mono, q), c in sorted(poly._terms.items(),
                               key=lambda it: (it[0][1], tuple(-s.p for s in reversed(it[0][0])))):
        factors = "*".join(render_special(poly.spec, s) for s in reversed(mono))
        body = factors + render_q(q) if factors else (render_q(q)[1:] or "1")
        out.append(f"{c}*{body}")
    return " + ".join(out).replace("+ -", "- ")


MODES = ("quantum", "classical", "oracle")


class _Session:
    """Memo tables for one spec and mode (guarded for concurrent use).

    ``oracle`` is classical multiplication driven by the index-set Pieri rule.
    """

    def __init__(self, spec: GrassmannianSpec, mode: str):
        self.spec = spec
        self.mode = mode
        self.quantum = mode == "quantum"
        self.pieri: dict = {}
        self.mono_eval: dict = {}
        self.expr: dict[Label, SpecialPolynomial] = {}
        self.lock = threading.RLock()


_SESSIONS: dict[tuple[GrassmannianSpec, str], _Session] = {}
_SESSIONS_LOCK = threading.Lock()


def _session(spec: GrassmannianSpec, mode: str) -> _Session:
    if mode not in MODES:
        raise SpecError(f"unknown mode {mode!r}; expected one of {MODES}")
    if mode == "quantum" and not spec.quantum_supported():
        raise SpecError(f"quantum products are not available for {spec}")
    key = (spec, mode)
    with _SESSIONS_LOCK:
        if key not in _SESSIONS:
            _SESSIONS[key] = _Session(spec, mode)
        return _SESSIONS[key]


def _pieri(sess: _Session, s: SpecialClass, label: Label) -> RingElement:
    key = (s, label)
    r = sess.pieri.get(key)
    if r is None:
        fn = {"quantum": quantum_pieri, "classical": classical_pieri,
              "oracle": classical_pieri_via_index}[sess.mode]
        r = fn(sess.spec, s, label)
        sess.pieri[key] = r
    return r


def apply_special(sess: _Session, s: SpecialClass, x: RingElement) -> RingElement:
    acc: dict = {}
    for (lab, q), c in x.items():
        for (lab2, q2), c2 in _pieri(sess, s, lab).items():
            key = (lab2, tuple(a + b for a, b in zip(q, q2)))
            acc[key] = acc.get(key, 0) + c * c2
    return RingElement(sess.spec, acc)


def _monomial_on(sess: _Session, mono: Monomial, label: Label) -> RingElement:
    """Apply the specials of mono (left to right) to [X_label]."""
    key = (mono, label)
    r = sess.mono_eval.get(key)
    if r is None:
        if not mono:
            r = RingElement.basis(sess.spec, label)
        else:
            r = apply_special(sess, mono[-1], _monomial_on(sess, mono[:-1], label))
        sess.mono_eval[key] = r
    return r


def evaluate_polynomial(sess: _Session, poly: SpecialPolynomial, label: Label) -> RingElement:
    acc: dict = {}
    for (mono, q), c in poly.items():
        for (lab, q2), c2 in _monomial_on(sess, mono, label).items():
            key = (lab, tuple(a + b for a, b in zip(q, q2)))
            acc[key] = acc.get(key, 0) + c * c2
    return RingElement(sess.spec, acc)


def label_monomial(spec: GrassmannianSpec, label: Label) -> Monomial:
    """The special monomial of a label; type 2 uses the primed class for parts equal to k."""
    primed = spec.is_even and label.type == 2
    return tuple(sorted(SpecialClass(p, primed and p == spec.k) for p in label.parts))


def _express(sess: _Session, label: Label) -> SpecialPolynomial:
    got = sess.expr.get(label)
    if got is not None:
        return got
    spec = sess.spec
    z = zero_q(spec)
    mono = label_monomial(spec, label)
    value = _monomial_on(sess, mono, Label(()))
    if value.coefficient(label, z) != 1:
        _solve_weight(sess, label.weight)
        return sess.expr[label]
    poly = SpecialPolynomial(spec, {(mono, z): 1})
    for (mu, q), c in value.sorted_terms():
        if (mu, q) == (label, z):
            continue
        if q == z and mu.weight == label.weight and basis_key(mu) >= basis_key(label):
            _solve_weight(sess, label.weight)
            return sess.expr[label]
        poly = poly + _express(sess, mu).shift_q(q).scale(-c)
    sess.expr[label] = poly
    return poly


def _solve_weight(sess: _Session, w: int) -> None:
    """Express every class of weight w at once by inverting the monomial matrix."""
    spec = sess.spec
    z = zero_q(spec)
    labels = [lab for lab in enumerate_basis(spec) if lab.weight == w]
    index = {lab: i for i, lab in enumerate(labels)}
    size = len(labels)
    A = [[Fraction(0)] * size for _ in range(size)]
    rhs = []
    for i, lab in enumerate(labels):
        mono = label_monomial(spec, lab)
        value = _monomial_on(sess, mono, Label(()))
        poly = SpecialPolynomial(spec, {(mono, z): 1})
        for (mu, q), c in value.items():
            if q == z and mu.weight == w:
                A[i][index[mu]] += c
            else:
                poly = poly + _express(sess, mu).shift_q(q).scale(-c)
        rhs.append(poly)
    inv = _invert(A)
    if inv is None:
        raise TriangularityError(f"monomials of weight {w} do not span on {spec}")
    for j, lab in enumerate(labels):
        poly = SpecialPolynomial(spec)
        for i in range(size):
            c = inv[j][i]
            if c:
                if c.denominator != 1:
                    raise TriangularityError(f"non-integral inverse at weight {w} on {spec}")
                poly = poly + rhs[i].scale(int(c))
        sess.expr[lab] = poly


def _invert(A):
    """Exact Gauss-Jordan inverse, or None when A is singular."""
    n = len(A)
    aug = [list(row) + [Fraction(int(i == r)) for r in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def express_in_specials(spec: GrassmannianSpec, label: Label, mode: str = "quantum") -> SpecialPolynomial:
    check_label(spec, label)
    sess = _session(spec, mode)
    with sess.lock:
        return _express(sess, label)


def evaluate_special_polynomial(spec: GrassmannianSpec, poly: SpecialPolynomial,
                                label: Label | None = None, mode: str = "quantum") -> RingElement:
    sess = _session(spec, mode)
    with sess.lock:
        return evaluate_polynomial(sess, poly, label if label is not None else Label(()))


def product_of_specials(spec: GrassmannianSpec, specials: Iterable[SpecialClass],
                        mode: str = "quantum") -> RingElement:
    mono = tuple(check_special(spec, s) for s in specials)
    sess = _session(spec, mode)
    with sess.lock:
        return _monomial_on(sess, mono, Label(()))


def quantum_product(spec: GrassmannianSpec, lam: Label, mu: Label, mode: str = "quantum") -> RingElement:
    check_label(spec, lam)
    check_label(spec, mu)
    sess = _session(spec, mode)
    with sess.lock:
        return evaluate_polynomial(sess, _express(sess, lam), mu)


def classical_product(spec: GrassmannianSpec, lam: Label, mu: Label) -> RingElement:
    return quantum_product(spec, lam, mu, mode="classical")


def product_element(x: RingElement, y: RingElement, mode: str = "quantum") -> RingElement:
    """Product of two ring elements (bilinear extension)."""
    spec = x.spec
    acc = RingElement(spec)
    for (lab, q), c in x.items():
        for (lab2, q2), c2 in y.items():
            shift = tuple(a + b for a, b in zip(q, q2))
            acc = acc + quantum_product(spec, lab, lab2, mode).shift_q(shift).scale(c * c2)
    return acc


def gromov_witten(spec: GrassmannianSpec, lam: Label, mu: Label, nu: Label,
                  d: QExponent | int) -> int:
    """The invariant <lam, mu, nu>_d, read off the product lam * mu."""
    if isinstance(d, int):
        d = (d,)
    d = tuple(d)
    if len(d) != spec.nq or any(x < 0 for x in d):
        raise SpecError(f"degree {d} does not fit {spec}")
    for lab in (lam, mu, nu):
        check_label(spec, lab)
    total = lam.weight + mu.weight + nu.weight
    expected = spec.space_dim + sum(a * b for a, b in zip(d, spec.q_degrees))
    if total != expected:
        raise SpecError(f"degree condition fails: |lam|+|mu|+|nu| = {total}, "
                        f"but dim + deg q^d = {expected}")
    mode = "quantum" if spec.quantum_supported() else "classical"
    if mode == "classical" and any(d):
        raise SpecError(f"quantum invariants are not available for {spec}")
    return quantum_product(spec, lam, mu, mode).coefficient(dual(spec, nu), d)


def classical_triple(spec: GrassmannianSpec, lam: Label, mu: Label, nu: Label) -> int:
    """The intersection number of three Schubert classes."""
    if lam.weight + mu.weight + nu.weight != spec.space_dim:
        return 0
    return classical_product(spec, lam, mu).coefficient(dual(spec, nu))


def _bar(label: Label) -> Label:
    return Label(tuple(p - 1 for p in label.parts if p > 1), label.type)


def degree_one_crosscheck(spec: GrassmannianSpec, lam: Label, mu: Label,
                          third: SpecialClass | Label):
    """Return (q-coefficient invariant, classical number on a related Grassmannian).

    Type C compares with half of a triple intersection on IG(m+1, 2n+2),
    which needs l(lam) + l(mu) + l(nu) <= 2m + 1.  Types B and D delete the
    first column and compare with an intersection on OG(m+1, .) where p
    drops to p - 1.
    """
    if spec.lie_type == "C":
        nu = Label((third.p,)) if isinstance(third, SpecialClass) else third
        lhs = gromov_witten(spec, lam, mu, nu, (1,))
        if len(lam.parts) + len(mu.parts) + len(nu.parts) > 2 * spec.m + 1:
            raise SpecError("length condition l(lam)+l(mu)+l(nu) <= 2m+1 fails")
        big = make_spec("C", spec.m + 1, spec.n + 1)
        return lhs, Fraction(classical_triple(big, lam, mu, nu), 2)
    if spec.lie_type not in ("B", "D") or not spec.quantum_supported():
        raise SpecError(f"no degree one reduction for {spec}")
    if not isinstance(third, SpecialClass):
        raise SpecError("types B and D need a special class as third argument")
    from .pieri import special_label
    s = check_special(spec, third)
    lhs = gromov_witten(spec, lam, mu, special_label(spec, s), (1,))
    small = make_spec(spec.lie_type, spec.m + 1, spec.n)
    lb, mb = _bar(lam), _bar(mu)
    if s.p == 1:
        rhs = int(mb == dual(small, lb))
    else:
        s_small = SpecialClass(s.p - 1, s.primed)
        rhs = classical_pieri(small, s_small, lb).coefficient(dual(small, mb))
    return lhs, rhs
