"""Quantum Pieri rules.

The q-corrections are read off Pieri relations in a Grassmannian one size
larger (an extra row and column), whose labels are then cut back down.
"""

from __future__ import annotations

from .core import GrassmannianSpec, Label, SpecError, check_label
from .pieri import PieriFinding, SpecialClass, check_special, classical_pieri, pieri_terms
from .ring import RingElement


def _require_quantum(spec: GrassmannianSpec) -> None:
    if not spec.quantum_supported():
        need = {"B": "k > 0", "D": "k > 1"}.get(spec.lie_type, "")
        raise SpecError(f"quantum rules for {spec} need {need}")


def _typed(spec: GrassmannianSpec, parts: tuple[int, ...], typ: int) -> Label:
    """Attach a type only when a part equals k."""
    if spec.is_even and spec.k in parts:
        return Label(parts, typ)
    return Label(parts, 0)


def _q(spec: GrassmannianSpec, *which: int) -> tuple[int, ...]:
    out = [0] * spec.nq
    for w in which:
        out[w] += 1
    return tuple(out)


def quantum_pieri(spec: GrassmannianSpec, s: SpecialClass, lam: Label) -> RingElement:
    s = check_special(spec, s)
    check_label(spec, lam)
    _require_quantum(spec)
    n, k, m = spec.n, spec.k, spec.m
    result = classical_pieri(spec, s, lam)
    terms: dict = {}

    def put(label, q, c):
        key = (label, q)
        terms[key] = terms.get(key, 0) + c

    if spec.lie_type == "C":
        for nu, _, mv in pieri_terms("C", k, m + 1, n + k + 1, s, lam):
            if nu.parts[0] != n + k + 1:
                continue
            if mv.N < 1:
                raise PieriFinding(f"N({lam},{nu}) = 0 for a q-term")
            put(Label(nu.parts[1:]), _q(spec, 0), 2 ** (mv.N - 1))
        return result + RingElement(spec, terms)

    lie = "B" if spec.lie_type == "B" else "D"
    even = lie == "D"
    shift = 2 if even else 1
    for nu, c, _ in pieri_terms(lie, k, m + 1, n + k + 1, s, lam):
        parts = nu.parts
        nu1 = parts[0]
        if len(parts) != m + 1 or not (2 * k - (1 if even else 0) <= nu1 <= n + k):
            continue
        r = nu1 - 2 * k + shift
        if sum(1 for x in parts if x >= 2) > r:
            continue
        if any(x != 1 for x in parts[r:]):
            raise PieriFinding(f"rows of {nu} beyond row {r} are not single boxes")
        tilde = parts[1:r]
        if even:
            target = _typed(spec, tilde, 3 - nu.type if nu.type else 0)
            if spec.lie_type == "Dmax":
                if nu.type == 0:
                    raise PieriFinding(f"q-term label {nu} has type 0")
                q = _q(spec, nu.type - 1)
            else:
                q = _q(spec, 0)
        else:
            target = Label(tilde)
            q = _q(spec, 0)
        put(target, q, c)

    if lam.parts and lam.parts[0] == n + k:
        star = _typed(spec, lam.parts[1:], lam.type)
        q2 = _q(spec, 0, 1) if spec.lie_type == "Dmax" else (2,)
        for rho, c, _ in pieri_terms(lie, k, m, n + k, s, star):
            if rho.parts[0] != n + k:
                continue
            put(_typed(spec, rho.parts[1:], rho.type), q2, c)
    return result + RingElement(spec, terms)


def contains(big: tuple[int, ...], small: tuple[int, ...]) -> bool:
    return len(small) <= len(big) and all(b >= s for b, s in zip(big, small))


def staircase(d: int) -> tuple[int, ...]:
    return tuple(range(d, 0, -1))


def containment_ok(spec: GrassmannianSpec, parts: tuple[int, ...], d: int) -> bool:
    """The staircase test for degree d; False means degree-d invariants vanish."""
    if d <= 0:
        return True
    if spec.lie_type == "C":
        return contains(parts, staircase(d))
    if d % 2 == 0:
        return contains(parts, staircase(d - 1))
    return contains(parts, staircase(d - 1) + (1,))


def degree_bound(spec: GrassmannianSpec, parts: tuple[int, ...]) -> int:
    d = 0
    while d <= spec.m + 2 and containment_ok(spec, parts, d + 1):
        d += 1
    return d


def max_q_degree_bound(spec: GrassmannianSpec, lam: Label, s: SpecialClass | None = None) -> int:
    """Largest q-degree d allowed by the staircase containment test.

    With a special class s the bound is the smaller of the bounds for lam
    and for the one-row partition (p).
    """
    b = degree_bound(spec, lam.parts)
    if s is not None:
        b = min(b, degree_bound(spec, (s.p,)))
    return b
