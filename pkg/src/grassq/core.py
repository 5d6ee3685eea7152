"""Grassmannian specifications, Schubert labels, index sets and duality.

Four kinds of isotropic Grassmannian are supported:

* ``C``    -- IG(m, 2n), symplectic, with k = n - m
* ``B``    -- OG(m, 2n+1), odd orthogonal, with k = n - m
* ``D``    -- OG(m, 2n+2), even orthogonal, with k = n + 1 - m
* ``Dmax`` -- OG(n, 2n+2), the even orthogonal case with k = 1, whose
  quantum ring carries two deformation parameters.

Schubert classes are indexed by k-strict partitions inside an
m x (n+k) rectangle.  In the even orthogonal case a partition with a part
equal to k carries a type 1 or 2, otherwise its type is 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, NamedTuple, Sequence

LIE_TYPES = ("C", "B", "D", "Dmax")


class SpecError(ValueError):
    """Raised for malformed specifications, labels or index sets."""


class Label(NamedTuple):
    """A Schubert label: a partition with trailing zeros trimmed, plus a type."""

    parts: tuple[int, ...]
    type: int = 0

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return format_label(self)


class Box(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class GrassmannianSpec:
    lie_type: str
    m: int
    n: int

    @property
    def is_even(self) -> bool:
        """True for the even orthogonal kinds (types carried by labels)."""
        return self.lie_type in ("D", "Dmax")

    @property
    def k(self) -> int:
        if self.is_even:
            return self.n + 1 - self.m
        return self.n - self.m

    @property
    def ambient_N(self) -> int:
        return {"C": 2 * self.n, "B": 2 * self.n + 1}.get(self.lie_type, 2 * self.n + 2)

    @property
    def space_dim(self) -> int:
        m, n = self.m, self.n
        if self.is_even:
            return 2 * m * (n + 1 - m) + m * (m - 1) // 2
        return 2 * m * (n - m) + m * (m + 1) // 2

    @property
    def q_degrees(self) -> tuple[int, ...]:
        n, k = self.n, self.k
        if self.lie_type == "C":
            return (n + k + 1,)
        if self.lie_type == "Dmax":
            return (n + 1, n + 1)
        return (n + k,)

    @property
    def width(self) -> int:
        """Largest allowed part, n + k."""
        return self.n + self.k

    @property
    def nq(self) -> int:
        return len(self.q_degrees)

    def quantum_supported(self) -> bool:
        if self.lie_type == "C":
            return True
        if self.lie_type == "B":
            return self.k > 0
        if self.lie_type == "D":
            return self.k > 1
        return True

    def rank(self) -> int:
        if self.is_even:
            return 2 ** (self.n + 1 - self.k) * comb(self.n + 1, self.k)
        return 2 ** self.m * comb(self.n, self.k)

    def classical_twin(self) -> "GrassmannianSpec":
        """Dmax and D with k = 1 share classical data; return the D form."""
        if self.lie_type == "Dmax":
            return GrassmannianSpec("D", self.m, self.n)
        return self

    def __str__(self) -> str:
        name = "IG" if self.lie_type == "C" else "OG"
        return f"{self.lie_type}:{name}({self.m},{self.ambient_N})"


def make_spec(lie_type: str, m: int, n: int) -> GrassmannianSpec:
    """Build a validated specification."""
    if lie_type not in LIE_TYPES:
        raise SpecError(f"unknown lie type {lie_type!r}; expected one of {LIE_TYPES}")
    if not isinstance(m, int) or not isinstance(n, int) or m < 1 or n < 1:
        raise SpecError("m and n must be positive integers")
    if lie_type in ("C", "B") and m > n:
        raise SpecError(f"type {lie_type} requires m <= n (got m={m}, n={n})")
    if lie_type == "D" and m > n:
        raise SpecError("type D requires m <= n; the maximal case m = n+1 is out of scope, "
                        "use Dmax for OG(n, 2n+2)")
    if lie_type == "Dmax" and m != n:
        raise SpecError(f"Dmax requires m = n (got m={m}, n={n})")
    return GrassmannianSpec(lie_type, m, n)


# ---------------------------------------------------------------- labels

def make_label(parts: Iterable[int] = (), type: int = 0) -> Label:
    ps = tuple(int(x) for x in parts)
    while ps and ps[-1] == 0:
        ps = ps[:-1]
    return Label(ps, int(type))


def parse_label(text: str) -> Label:
    """Parse ``"5,3,2,2"``, ``"8,7,2,1,1:1"`` or ``"-"`` (empty partition)."""
    text = text.strip()
    typ = 0
    if ":" in text:
        text, t = text.rsplit(":", 1)
        try:
            typ = int(t)
        except ValueError:
            raise SpecError(f"bad type suffix {t!r}") from None
        if typ not in (0, 1, 2):
            raise SpecError(f"type must be 0, 1 or 2 (got {typ})")
    text = text.strip()
    if text in ("-", ""):
        return Label((), typ)
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise SpecError(f"bad partition {text!r}") from None
    if any(p < 0 for p in parts):
        raise SpecError("parts must be nonnegative")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise SpecError(f"parts of {text!r} are not weakly decreasing")
    return make_label(parts, typ)


def format_label(label: Label) -> str:
    s = ",".join(map(str, label.parts)) if label.parts else "-"
    if label.type:
        s += f":{label.type}"
    return s


def is_k_strict(parts: Sequence[int], k: int) -> bool:
    return all(a >= b for a, b in zip(parts, parts[1:])) and all(
        a != b for a, b in zip(parts, parts[1:]) if a > k)


def validate_label(spec: GrassmannianSpec, label: Label) -> bool:
    ps = label.parts
    k = spec.k
    if ps and ps[-1] == 0:
        return False
    if len(ps) > spec.m or (ps and ps[0] > spec.width) or any(p < 0 for p in ps):
        return False
    if not is_k_strict(ps, k):
        return False
    if spec.is_even:
        return (label.type != 0) == (k in ps) and label.type in (0, 1, 2)
    return label.type == 0


def check_label(spec: GrassmannianSpec, label: Label) -> Label:
    if not validate_label(spec, label):
        if spec.is_even and spec.k in label.parts and label.type == 0:
            raise SpecError(f"label {format_label(label)} has a part equal to k={spec.k} "
                            "and needs an explicit type :1 or :2")
        raise SpecError(f"{format_label(label)} is not a valid label for {spec}")
    return label


def ell_k(label: Label | Sequence[int], k: int) -> int:
    parts = label.parts if isinstance(label, Label) else label
    return sum(1 for p in parts if p > k)


def _k_strict_partitions(length: int, width: int, k: int) -> Iterator[tuple[int, ...]]:
    def rec(prefix: list[int], bound: int) -> Iterator[tuple[int, ...]]:
        yield tuple(prefix)
        if len(prefix) == length:
            return
        for p in range(bound, 0, -1):
            if prefix and p == prefix[-1] and p > k:
                continue
            prefix.append(p)
            yield from rec(prefix, p)
            prefix.pop()

    yield from rec([], width)


def basis_key(label: Label):
    """Fixed order: weight ascending, reverse lexicographic on parts, type."""
    return (sum(label.parts), tuple(-p for p in label.parts), label.type)


_BASIS_CACHE: dict[GrassmannianSpec, tuple[Label, ...]] = {}


def enumerate_basis(spec: GrassmannianSpec) -> tuple[Label, ...]:
    cached = _BASIS_CACHE.get(spec)
    if cached is not None:
        return cached
    out = []
    for ps in _k_strict_partitions(spec.m, spec.width, spec.k):
        if spec.is_even and spec.k in ps:
            out.append(Label(ps, 1))
            out.append(Label(ps, 2))
        else:
            out.append(Label(ps, 0))
    out.sort(key=basis_key)
    result = tuple(out)
    _BASIS_CACHE[spec] = result
    return result


# ------------------------------------------------------------ index sets

def _padded(parts: Sequence[int], m: int) -> list[int]:
    return list(parts) + [0] * (m - len(parts))


def label_to_index_set(spec: GrassmannianSpec, label: Label) -> tuple[int, ...]:
    check_label(spec, label)
    m, n, k = spec.m, spec.n, spec.k
    lam = _padded(label.parts, m)
    out = []
    if not spec.is_even:
        for j in range(m):
            cnt = sum(1 for i in range(j) if lam[i] + lam[j] <= 2 * k + j - i)
            p = n + k + 1 - lam[j] + cnt
            if spec.lie_type == "B" and lam[j] <= k:
                p += 1
            out.append(p)
        return tuple(out)
    for j in range(m):
        cnt = sum(1 for i in range(j) if lam[i] + lam[j] <= 2 * k - 1 + j - i)
        prev = lam[j - 1] if j > 0 else None
        # j is 0-based here, so the parity test uses j + 1
        first_k = lam[j] == k and (prev is None or prev > k)
        if lam[j] > k or (first_k and (n + j + 1 + label.type) % 2 == 0):
            extra = 1
        else:
            extra = 2
        out.append(n + k - lam[j] + cnt + extra)
    return tuple(out)


def validate_index_set(spec: GrassmannianSpec, P: Sequence[int]) -> bool:
    N = spec.ambient_N
    P = tuple(P)
    if len(P) != spec.m or any(a >= b for a, b in zip(P, P[1:])):
        return False
    if not all(1 <= p <= N for p in P):
        return False
    s = set(P)
    if any(N + 1 - p in s for p in P):
        return False
    if spec.lie_type == "B" and spec.n + 1 in s:
        return False
    return True


def index_set_type(spec: GrassmannianSpec, P: Sequence[int]) -> int:
    n = spec.n
    if not ({n + 1, n + 2} & set(P)):
        return 0
    missing = sum(1 for i in range(1, n + 2) if i not in P)
    return 1 + missing % 2


def index_set_to_label(spec: GrassmannianSpec, P: Sequence[int]) -> Label:
    P = tuple(P)
    if not validate_index_set(spec, P):
        raise SpecError(f"{P} is not a valid index set for {spec}")
    m, n, k = spec.m, spec.n, spec.k
    lam = []
    if not spec.is_even:
        if spec.lie_type == "B":
            P = tuple(p - 1 if p > n + 1 else p for p in P)
        for j in range(m):
            cnt = sum(1 for i in range(j) if P[i] + P[j] > 2 * n + 1)
            lam.append(n + k + 1 - P[j] + cnt)
        return make_label(lam)
    for j in range(m):
        if P[j] <= n + 1:
            lam.append(n + k + 1 - P[j])
        else:
            cnt = sum(1 for i in range(j) if P[i] + P[j] > 2 * n + 3)
            lam.append(n + k + 2 - P[j] + cnt)
    return make_label(lam, index_set_type(spec, P))


def index_set_weight(spec: GrassmannianSpec, P: Sequence[int]) -> int:
    return index_set_to_label(spec, P).weight


# ------------------------------------------------------------------ duals

def dual_index_set(spec: GrassmannianSpec, P: Sequence[int]) -> tuple[int, ...]:
    N = spec.ambient_N
    n = spec.n
    if spec.lie_type == "C":
        return tuple(sorted(2 * n + 1 - p for p in P))
    if spec.lie_type == "B":
        return tuple(sorted(2 * n + 2 - p for p in P))
    out = []
    for p in P:
        if n % 2 == 0 and p in (n + 1, n + 2):
            out.append(p)
        else:
            out.append(N + 1 - p)
    return tuple(sorted(out))


def dual(spec: GrassmannianSpec, label: Label) -> Label:
    """The Poincare dual label."""
    return index_set_to_label(spec, dual_index_set(spec, label_to_index_set(spec, label)))


def k_related(box1: Box, box2: Box, k: int, convention: str = "BC") -> bool:
    """Diagonal relation governing Pieri multiplicities.

    ``BC`` centres on column k+1; ``D`` centres on (2k+1)/2 (computed doubled).
    """
    (r, c), (r2, c2) = box1, box2
    if convention == "BC":
        return abs(c - k - 1) + r == abs(c2 - k - 1) + r2
    if convention == "D":
        return abs(2 * c - 2 * k - 1) + 2 * r == abs(2 * c2 - 2 * k - 1) + 2 * r2
    raise SpecError(f"unknown convention {convention!r}")


# ------------------------------------------------------- partition pairs

@dataclass(frozen=True)
class PartitionPair:
    alpha: tuple[int, ...]
    beta: tuple[int, ...]


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0]))


def partition_pair_to_label(pair: PartitionPair, k: int, n: int | None = None) -> Label:
    """Translate (alpha, beta) to the k-strict partition alpha' + beta.

    alpha must fit in a k x (n-k) box, beta is strict with beta_1 <= n,
    and alpha_k >= length(beta).
    """
    alpha = make_label(pair.alpha).parts
    beta = make_label(pair.beta).parts
    if any(a < b for a, b in zip(alpha, alpha[1:])):
        raise SpecError("alpha must be a partition")
    if any(a <= b for a, b in zip(beta, beta[1:])):
        raise SpecError("beta must be a strict partition")
    if len(alpha) > k:
        raise SpecError(f"alpha has more than k={k} parts")
    if n is not None and ((alpha and alpha[0] > n - k) or (beta and beta[0] > n)):
        raise SpecError("alpha or beta exceeds its bounding box")
    alpha_k = alpha[k - 1] if 0 < k <= len(alpha) else 0
    if k > 0 and alpha_k < len(beta):
        raise SpecError(f"partition pair needs alpha_k >= length(beta) "
                        f"(alpha_k={alpha_k}, length(beta)={len(beta)})")
    ac = conjugate(alpha)
    size = max(len(ac), len(beta))
    lam = [(ac[i] if i < len(ac) else 0) + (beta[i] if i < len(beta) else 0) for i in range(size)]
    return make_label(lam)
