"""Index sets: partitions, compositions, parabolic support functions.

All enumerations are deterministic.  Partitions come out in reverse
lexicographic order of their parts (``(2,), (1, 1)``), compositions in
lexicographic order, and everything else in lexicographic order of a
canonical tuple encoding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as cartesian
from typing import Iterator, Mapping, Sequence


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_exponents(cls, a: Sequence[int]) -> "Partition":
        """Inverse of :attr:`exponents`: ``a[i-1]`` copies of ``i``."""
        parts: list[int] = []
        for i in range(len(a), 0, -1):
            parts.extend([i] * int(a[i - 1]))
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def exponents(self) -> tuple[int, ...]:
        """``(a_1, ..., a_n)`` with ``a_i`` the multiplicity of part ``i``."""
        a = [0] * self.n
        for p in self.parts:
            a[p - 1] += 1
        return tuple(a)

    def multiplicities(self) -> dict[int, int]:
        """Nonzero entries of the exponent form as ``{part: multiplicity}``."""
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n: int) -> list[Partition]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partitions(n, n)]


def compositions(N: int, h: int) -> list[tuple[int, ...]]:
    """All ``(m_1, ..., m_N)`` of nonnegative integers summing to ``h``.

    For ``N = 0`` the empty tuple is the only composition of 0 and there are
    none of positive ``h``.
    """
    if N < 0 or h < 0:
        raise ValueError("N and h must be nonnegative")
    if N == 0:
        return [()] if h == 0 else []
    if N == 1:
        return [(h,)]
    out = []
    for first in range(h + 1):
        for rest in compositions(N - 1, h - first):
            out.append((first,) + rest)
    return out


# parabolic index sets ---------------------------------------------------

Vector = tuple[int, ...]


def in_A_prime(v: Vector) -> bool:
    return all(x >= 0 for x in v) and any(v)


def in_C(v: Vector) -> bool:
    """Membership in ``{m e_0 : m >= 1} U {m e_0 + e_a : m >= 0, a >= 1}``."""
    if not in_A_prime(v):
        return False
    rest = v[1:]
    if not any(rest):
        return v[0] >= 1
    return sum(rest) == 1


@dataclass(frozen=True, order=True)
class ParabolicChi:
    """Finitely supported ``chi: A' -> Z>=0`` as a sorted association list."""

    support: tuple[tuple[Vector, int], ...] = ()

    def __post_init__(self):
        merged: dict[Vector, int] = {}
        width = None
        for v, c in self.support:
            v = tuple(int(x) for x in v)
            if width is None:
                width = len(v)
            elif len(v) != width:
                raise ValueError("all support vectors must have the same length")
            if not in_A_prime(v):
                raise ValueError(f"{v} is not in A' (nonnegative, nonzero)")
            if c < 0:
                raise ValueError("chi takes nonnegative values")
            if c:
                merged[v] = merged.get(v, 0) + int(c)
        object.__setattr__(self, "support", tuple(sorted(merged.items())))

    @classmethod
    def from_mapping(cls, values: Mapping[Vector, int]) -> "ParabolicChi":
        return cls(tuple(values.items()))

    def __call__(self, v: Vector) -> int:
        return dict(self.support).get(tuple(v), 0)

    def phi(self, width: int) -> Vector:
        """``sum_v chi(v) * v``."""
        total = [0] * width
        for v, c in self.support:
            for i, x in enumerate(v):
                total[i] += c * x
        return tuple(total)

    def supported_in_C(self) -> bool:
        return all(in_C(v) for v, _ in self.support)

    def point_count(self) -> int:
        """``sum chi(v)`` over ``v`` with ``v_* = 0`` (points of X)."""
        return sum(c for v, c in self.support if not any(v[1:]))

    def curve_count(self) -> int:
        """``sum chi(v)`` over ``v`` with ``v_* != 0`` (points of D)."""
        return sum(c for v, c in self.support if any(v[1:]))

    def __str__(self) -> str:
        if not self.support:
            return "0"
        return " + ".join(
            ("" if c == 1 else f"{c}*") + "d(" + ",".join(map(str, v)) + ")"
            for v, c in self.support
        )


def _box(target: Vector) -> list[Vector]:
    return [v for v in cartesian(*(range(t + 1) for t in target)) if any(v)]


def _multisets(vectors: list[Vector], start: int, remaining: Vector):
    if not any(remaining):
        yield ()
        return
    for idx in range(start, len(vectors)):
        v = vectors[idx]
        if any(x > r for x, r in zip(v, remaining)):
            continue
        # take v at least once, then allow v again
        rem = tuple(r - x for r, x in zip(remaining, v))
        for rest in _multisets(vectors, idx, rem):
            yield (v,) + rest


def _chis_over(vectors: list[Vector], target: Vector) -> list[ParabolicChi]:
    out = set()
    for combo in _multisets(vectors, 0, target):
        counts: dict[Vector, int] = {}
        for v in combo:
            counts[v] = counts.get(v, 0) + 1
        out.add(ParabolicChi.from_mapping(counts))
    return sorted(out)


def parabolic_chis(n: int, h: int, l: Sequence[int]) -> list[ParabolicChi]:
    """All of ``S(A', (n, l_1, ..., l_h))``."""
    l = tuple(int(x) for x in l)
    if n < 0 or any(x < 0 for x in l):
        raise ValueError("n and l must be nonnegative")
    if h < 1 or len(l) != h:
        raise ValueError(f"need h >= 1 and exactly h = {h} filtration lengths, got {l}")
    target = (n,) + l
    return _chis_over(_box(target), target)


def relevant_parabolic_chis(n: int, h: int, l: Sequence[int]) -> list[ParabolicChi]:
    """The elements of ``S(A', (n, l))`` supported on ``C``, found directly."""
    l = tuple(int(x) for x in l)
    if h < 1 or len(l) != h:
        raise ValueError(f"need h >= 1 and exactly h = {h} filtration lengths, got {l}")
    target = (n,) + l
    return _chis_over([v for v in _box(target) if in_C(v)], target)


# curve-labelled partitions ------------------------------------------------


@dataclass(frozen=True, order=True)
class CurveLabeledPartition:
    """One partition per curve label; the sizes add up to the degree."""

    labels: tuple[tuple[str, Partition], ...] = field(default=())

    def __post_init__(self):
        labels = tuple(sorted((str(k), p) for k, p in self.labels))
        if len({k for k, _ in labels}) != len(labels):
            raise ValueError("curve labels must be distinct")
        object.__setattr__(self, "labels", labels)

    @property
    def degree(self) -> int:
        return sum(p.n for _, p in self.labels)

    def as_dict(self) -> dict[str, Partition]:
        return dict(self.labels)

    def support_monomial(self) -> tuple[tuple[str, int], ...]:
        """The underlying degree monomial ``prod C**|partition|``."""
        return tuple((k, p.n) for k, p in self.labels if p.n)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{k}:{p}" for k, p in self.labels) + "}"


def curve_labeled_partitions(curves: Sequence[str], m: int) -> list[CurveLabeledPartition]:
    """Assign a partition to every curve so that the sizes add up to ``m``."""
    curves = sorted(set(curves))
    if m < 0:
        raise ValueError("m must be nonnegative")
    if not curves:
        return [CurveLabeledPartition()] if m == 0 else []
    out = []
    for sizes in compositions(len(curves), m):
        for parts in cartesian(*(partitions(s) for s in sizes)):
            out.append(CurveLabeledPartition(tuple(zip(curves, parts))))
    return sorted(out)


def monomials(curves: Sequence[str], d: int) -> list[tuple[tuple[str, int], ...]]:
    """Degree ``d`` monomials in the variables ``curves`` (literal labelling)."""
    curves = sorted(set(curves))
    if not curves:
        return [()] if d == 0 else []
    return [
        tuple((c, e) for c, e in zip(curves, comp) if e)
        for comp in compositions(len(curves), d)
    ]
