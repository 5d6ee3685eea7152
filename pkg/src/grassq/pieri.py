"""Classical Pieri rules on k-strict partitions.

A relation lam -> mu holds when mu is obtained from lam by removing a
vertical strip from the first k columns and then adding a horizontal strip,
subject to the k-related box conditions.  The multiplicity of [X_mu] in
sigma_p * [X_lam] is 2^N (type C), 2^N' (type B) or delta * 2^N' (type D).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple

from .core import (Box, GrassmannianSpec, Label, SpecError, check_label, conjugate,
                   ell_k, k_related)
from .ring import RingElement, zero_q


class PieriFinding(AssertionError):
    """An outcome the rule does not account for (reported, never patched)."""


class SpecialClass(NamedTuple):
    p: int
    primed: bool = False


@dataclass(frozen=True)
class PieriMove:
    source: Label
    target: Label
    removed_boxes: frozenset
    added_boxes: frozenset
    set_A: frozenset
    components: tuple
    N: int
    N_prime: int
    g: int | None = None
    h: int | None = None
    delta: Fraction | None = None
    delta_prime: Fraction | None = None
    mentioned: frozenset = field(default=frozenset())

    @property
    def p(self) -> int:
        return self.target.weight - self.source.weight


def _pad(parts, size):
    return list(parts) + [0] * (size - len(parts))


def _components(boxes) -> list[frozenset]:
    left = set(boxes)
    comps = []
    while left:
        start = left.pop()
        comp = {start}
        stack = [start]
        while stack:
            r, c = stack.pop()
            for dr in (-1, 0, 1):
                for dc in (-1, 0, 1):
                    nb = Box(r + dr, c + dc)
                    if nb in left:
                        left.remove(nb)
                        comp.add(nb)
                        stack.append(nb)
        comps.append(frozenset(comp))
    comps.sort(key=lambda cc: min(cc))
    return comps


@lru_cache(maxsize=None)
def arrow(lam: Label, mu: Label, k: int, even: bool) -> PieriMove | None:
    """The relation lam -> mu with witness data, or None.

    ``even`` selects the even orthogonal conventions (k'-relation, types, delta).
    """
    if even and lam.type + mu.type == 3:
        return None
    size = max(len(lam.parts), len(mu.parts)) + 1
    la = _pad(lam.parts, size)
    mu_ = _pad(mu.parts, size)
    removed = set()
    added = set()
    for i in range(size):
        if mu_[i] < la[i]:
            if mu_[i] != la[i] - 1 or la[i] > k:
                return None
            removed.add(Box(i + 1, la[i]))
        elif mu_[i] > la[i]:
            for c in range(la[i] + 1, mu_[i] + 1):
                added.add(Box(i + 1, c))
        if i > 0 and mu_[i] > la[i - 1]:
            return None
    conv = "D" if even else "BC"
    added_list = sorted(added)

    def related(b):
        return [a for a in added_list if k_related(b, a, k, conv)]

    lc = _pad(conjugate(lam.parts), k)
    mc = _pad(conjugate(mu.parts), k)
    mentioned = set()
    for c in range(1, k + 1):
        if mc[c - 1] == lc[c - 1] and mc[c - 1] > 0:
            rel = related(Box(mc[c - 1], c))
            if len(rel) > 1:
                return None
            mentioned.update(rel)
        elif mc[c - 1] < lc[c - 1]:
            col_boxes = [Box(r, c) for r in range(mc[c - 1] + 1, lc[c - 1] + 1)]
            if mc[c - 1] > 0:
                col_boxes.append(Box(mc[c - 1], c))
            rows = set()
            for b in col_boxes:
                rel = related(b)
                if len(rel) != 1:
                    return None
                rows.add(rel[0].row)
                mentioned.update(rel)
            if len(rows) > 1:
                return None
    set_A = frozenset(b for b in added if b.col > k and b not in mentioned)
    comps = _components(set_A)
    p = mu.weight - lam.weight
    N = sum(1 for cc in comps if all(b.col != k + 1 for b in cc))
    N_prime = len(comps) - (1 if p > k else 0)
    g = h = delta = delta_prime = None
    if even:
        g = sum(1 for c in range(k) if mc[c] <= lc[c])
        h = g + max(lam.type, mu.type)
        if p != k:
            delta = delta_prime = Fraction(1)
        elif N_prime > 0:
            delta = delta_prime = Fraction(1, 2)
        else:
            delta = Fraction(h % 2)
            delta_prime = 1 - delta
    return PieriMove(lam, mu, frozenset(removed), frozenset(added), set_A, tuple(comps),
                     N, N_prime, g, h, delta, delta_prime, frozenset(mentioned))


def move_coefficient(lie: str, move: PieriMove, primed: bool = False) -> int:
    """Integer multiplicity carried by a move: 2^N, 2^N' or delta * 2^N'."""
    if lie == "C":
        return 2 ** move.N
    if move.N_prime < 0:
        raise PieriFinding(f"N' = {move.N_prime} < 0 for {move.source} -> {move.target}")
    if lie == "B":
        return 2 ** move.N_prime
    d = move.delta_prime if primed else move.delta
    if d == 0:
        return 0
    if d == 1:
        return 2 ** move.N_prime
    if move.N_prime < 1:
        raise PieriFinding(f"delta = 1/2 with N' = 0 for {move.source} -> {move.target}")
    return 2 ** (move.N_prime - 1)


def candidate_shapes(parts: tuple[int, ...], k: int, rows: int, width: int, p: int) -> Iterator[tuple[int, ...]]:
    """Partitions mu with lam_i - 1 <= mu_i <= lam_{i-1}, the drop only when lam_i <= k."""
    la = _pad(parts, rows)
    target = sum(la) + p

    def rec(i, prefix, total):
        if i == rows:
            if total == target:
                yield tuple(x for x in prefix if x)
            return
        upper = width if i == 0 else min(la[i - 1], prefix[-1])
        lower = la[i] - 1 if 0 < la[i] <= k else la[i]
        remaining = rows - i - 1
        for v in range(lower, upper + 1):
            if i > 0 and v > prefix[-1]:
                break
            # the remaining rows can contribute between their lower and upper bounds
            lo = sum(max(0, la[j] - 1 if 0 < la[j] <= k else la[j]) for j in range(i + 1, rows))
            hi = v * remaining
            if total + v + lo > target or total + v + hi < target:
                continue
            prefix.append(v)
            yield from rec(i + 1, prefix, total + v)
            prefix.pop()

    yield from rec(0, [], 0)


def _is_k_strict(parts, k):
    return all(a != b for a, b in zip(parts, parts[1:]) if a > k)


@lru_cache(maxsize=None)
def pieri_terms(lie: str, k: int, rows: int, width: int, s: SpecialClass, lam: Label) -> tuple:
    """All (mu, coefficient, move) in a rows x width rectangle for s * lam.

    ``lie`` is one of "C", "B", "D".  Returned as a tuple for caching.
    """
    even = lie == "D"
    out = []
    for shape in candidate_shapes(lam.parts, k, rows, width, s.p):
        if not _is_k_strict(shape, k):
            continue
        types = (1, 2) if even and k in shape else (0,)
        for t in types:
            mu = Label(shape, t)
            mv = arrow(lam, mu, k, even)
            if mv is None:
                continue
            c = move_coefficient(lie, mv, s.primed)
            if c:
                out.append((mu, c, mv))
    return tuple(out)


def _lie(spec: GrassmannianSpec) -> str:
    return "D" if spec.is_even else spec.lie_type


def check_special(spec: GrassmannianSpec, s: SpecialClass) -> SpecialClass:
    if not isinstance(s, SpecialClass):
        s = SpecialClass(*s)
    if not 1 <= s.p <= spec.width:
        raise SpecError(f"special class degree p={s.p} outside [1, {spec.width}]")
    if s.primed and (not spec.is_even or s.p != spec.k):
        raise SpecError("a primed special class needs an even orthogonal spec and p = k")
    return s


def special_label(spec: GrassmannianSpec, s: SpecialClass) -> Label:
    """The Schubert label of a special class."""
    if spec.is_even and s.p == spec.k:
        return Label((s.p,), 2 if s.primed else 1)
    return Label((s.p,), 0)


def pieri_moves(spec: GrassmannianSpec, lam: Label, mu: Label) -> PieriMove | None:
    return arrow(lam, mu, spec.k, spec.is_even)


def pieri_arrow(spec: GrassmannianSpec, lam: Label, mu: Label) -> PieriMove | None:
    """Witness of lam -> mu for the spec's conventions, or None."""
    check_label(spec, lam)
    check_label(spec, mu)
    return arrow(lam, mu, spec.k, spec.is_even)


def classical_pieri(spec: GrassmannianSpec, s: SpecialClass, lam: Label) -> RingElement:
    s = check_special(spec, s)
    check_label(spec, lam)
    z = zero_q(spec)
    terms = pieri_terms(_lie(spec), spec.k, spec.m, spec.width, s, lam)
    return RingElement(spec, {(mu, z): c for mu, c, _ in terms})


def bc_comparison_exponent(spec_B: GrassmannianSpec, lam: Label, mu: Label, nu: Label) -> int:
    """Exponent e with f = 2^e * (type C structure constant)."""
    k = spec_B.k
    return ell_k(nu, k) - ell_k(lam, k) - ell_k(mu, k)
