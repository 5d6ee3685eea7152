"""Classical Pieri rules stated on index sets.

This is an independent route to the same structure constants: Schubert
classes are indexed by index sets P, and sigma_r * [X_P] is a sum over Q
with P -> Q, where the relation and the multiplicities are read off the
skew diagram D(P,Q) = {(j, c) : q_j <= c <= p_j} and its cuts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import (GrassmannianSpec, Label, SpecError, check_label, enumerate_basis,
                   index_set_to_label, label_to_index_set, validate_index_set)
from .pieri import PieriFinding, SpecialClass, check_special
from .ring import RingElement, zero_q


@dataclass(frozen=True)
class SkewDiagram:
    P: tuple[int, ...]
    Q: tuple[int, ...]

    @property
    def rows(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.Q, self.P))

    def column_count(self, c: int) -> int:
        return sum(1 for q, p in self.rows if q <= c <= p)

    def squares(self) -> list[tuple[int, int]]:
        """2x2 squares as (row j, left column c), rows counted from 1."""
        out = []
        for j in range(len(self.P) - 1):
            for c in range(self.Q[j + 1], self.P[j]):
                out.append((j + 1, c))
        return out


@dataclass(frozen=True)
class CutProfile:
    cuts: frozenset
    I_set: frozenset
    N: int
    h: int | None = None
    S: frozenset | None = None
    S_prime: frozenset | None = None


def precedes(spec: GrassmannianSpec, Q, P) -> bool:
    """Q <= P, with the extra even orthogonal restriction."""
    if any(q > p for q, p in zip(Q, P)):
        return False
    if spec.is_even:
        n = spec.n
        if any(p == n + 2 and q == n + 1 for q, p in zip(Q, P)):
            return False
    return True


def cut_profile(spec: GrassmannianSpec, P, Q) -> CutProfile:
    N_amb = spec.ambient_N
    n = spec.n
    m = len(P)
    pp = (0,) + tuple(P)
    qq = tuple(Q) + (N_amb + 1,)
    cuts = frozenset(c for c in range(0, N_amb + 1)
                     if any(pp[j] <= c < qq[j] for j in range(m + 1)))
    I_set = {c for c in range(0, n + 1) if c in cuts or N_amb - c in cuts}
    if spec.lie_type != "C":
        I_set.add(n + 1)
    count = sum(1 for c in I_set if c >= 2 and c - 1 not in I_set)
    h = S = S_prime = None
    if spec.is_even:
        S = frozenset(i for i in range(1, n + 2) if any(q <= i <= p for q, p in zip(Q, P)))
        S_prime = frozenset(p for p in P if p >= n + 2 and 2 * n + 3 - p in S)
        h = len(S) + len(S_prime) + n
    return CutProfile(cuts, frozenset(I_set), count, h, S, S_prime)


def index_arrow(spec: GrassmannianSpec, P, Q) -> bool:
    P, Q = tuple(P), tuple(Q)
    for X in (P, Q):
        if not validate_index_set(spec, X):
            raise SpecError(f"{X} is not a valid index set for {spec}")
    if not precedes(spec, Q, P):
        return False
    D = SkewDiagram(P, Q)
    mirror = spec.ambient_N + 1
    m = len(P)
    if not spec.is_even:
        for j in range(m - 1):
            if P[j] > Q[j + 1]:
                return False
            if P[j] == Q[j + 1]:
                x = mirror - P[j]
                if not any(Q[i] < x < P[i] for i in range(m)):
                    return False
        return True
    n = spec.n
    sq = D.squares()
    if sq and (len(sq) > 1 or sq[0][1] != n + 1):
        return False
    for c in range(1, spec.ambient_N + 1):
        if D.column_count(c) >= 2 and D.column_count(mirror - c) == 0:
            return False
    if D.column_count(n + 1) + D.column_count(n + 2) == 3:
        return False
    return True


def _weight(spec, X) -> int:
    return index_set_to_label(spec, X).weight


def index_delta(spec: GrassmannianSpec, P, Q, r: int) -> tuple[Fraction, Fraction, int]:
    """(delta, delta', N') for an even orthogonal pair."""
    prof = cut_profile(spec, P, Q)
    Np = prof.N - (1 if r > spec.k else 0)
    if r != spec.k:
        return Fraction(1), Fraction(1), Np
    if Np > 0:
        return Fraction(1, 2), Fraction(1, 2), Np
    d = Fraction(prof.h % 2)
    return d, 1 - d, Np


def index_multiplicity(spec: GrassmannianSpec, P, Q, special: SpecialClass) -> int:
    special = check_special(spec, special)
    P, Q = tuple(P), tuple(Q)
    if not index_arrow(spec, P, Q):
        raise SpecError(f"{P} -> {Q} does not hold")
    if _weight(spec, Q) != _weight(spec, P) + special.p:
        raise SpecError("codimension of Q must be that of P plus p")
    return _multiplicity(spec, P, Q, special)


def _multiplicity(spec, P, Q, special) -> int:
    r = special.p
    prof = cut_profile(spec, P, Q)
    if spec.lie_type == "C":
        return 2 ** prof.N
    Np = prof.N - (1 if r > spec.k else 0)
    if Np < 0:
        raise PieriFinding(f"N'(P,Q) = {Np} for P={P}, Q={Q}")
    if spec.lie_type == "B":
        return 2 ** Np
    d, dp, _ = index_delta(spec, P, Q, r)
    d = dp if special.primed else d
    if d == 0:
        return 0
    if d == 1:
        return 2 ** Np
    return 2 ** (Np - 1)


@lru_cache(maxsize=None)
def _indexed_basis(spec: GrassmannianSpec):
    by_weight: dict[int, list] = {}
    for lab in enumerate_basis(spec):
        by_weight.setdefault(lab.weight, []).append((label_to_index_set(spec, lab), lab))
    return by_weight


def classical_pieri_via_index(spec: GrassmannianSpec, s: SpecialClass, lam: Label) -> RingElement:
    """Classical Pieri product computed entirely with index sets.

    Every index set of the right codimension is tested against P -> Q.
    """
    s = check_special(spec, s)
    check_label(spec, lam)
    P = label_to_index_set(spec, lam)
    z = zero_q(spec)
    terms = {}
    for Q, mu in _indexed_basis(spec).get(lam.weight + s.p, ()):
        if index_arrow(spec, P, Q):
            c = _multiplicity(spec, P, Q, s)
            if c:
                terms[(mu, z)] = c
    return RingElement(spec, terms)
