"""Stratum bookkeeping and semismallness validators."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from itertools import product as cartesian
from pathlib import Path
from typing import Any, Sequence, Union

from ..combinatorics import (
    compositions,
    curve_labeled_partitions,
    monomials,
    partitions,
)
from ..motives import HodgeDatum, MotiveTerm


class DescriptorError(ValueError):
    """A map descriptor is malformed or fails a dimension bound."""


@dataclass(frozen=True)
class StratumRecord:
    index: Any
    ambient_dim: int
    stratum_dim: int
    fiber_dim: int
    twist: int
    cover: MotiveTerm | None = None

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.stratum_dim

    @property
    def relevant(self) -> bool:
        return 2 * self.fiber_dim == self.codim


class Verdict(str, enum.Enum):
    SEMISMALL = "semismall"
    SMALL = "small"
    NEITHER = "neither"


@dataclass(frozen=True)
class MapDescriptor:
    """Dimension data of a proper surjective map ``f: X -> Y``.

    ``dim`` is the common dimension of source and target, and every stratum is
    given as ``(stratum_dim, fiber_dim)``.
    """

    dim: int
    strata: tuple[tuple[int, int], ...]

    def __post_init__(self):
        strata = tuple((int(s), int(f)) for s, f in self.strata)
        if self.dim < 0:
            raise DescriptorError("dimension must be nonnegative")
        for s, f in strata:
            if f < 0:
                raise DescriptorError(f"negative fiber dimension in stratum {(s, f)}")
            if not 0 <= s <= self.dim:
                raise DescriptorError(f"stratum dimension {s} outside [0, {self.dim}]")
        dense = [st for st in strata if st[0] == self.dim]
        if len(dense) != 1:
            raise DescriptorError(f"expected exactly one dense stratum, found {len(dense)}")
        object.__setattr__(self, "strata", strata)

    @classmethod
    def from_records(cls, records: Sequence[StratumRecord]) -> "MapDescriptor":
        dims = {r.ambient_dim for r in records}
        if len(dims) != 1:
            raise DescriptorError("records have different ambient dimensions")
        return cls(dims.pop(), tuple((r.stratum_dim, r.fiber_dim) for r in records))

    def to_json(self) -> dict:
        return {"dim": self.dim, "strata": [list(s) for s in self.strata]}

    @classmethod
    def from_json(cls, data, source: str = "<input>") -> "MapDescriptor":
        if not isinstance(data, dict):
            raise DescriptorError(f"{source}: expected a JSON object")
        if not isinstance(data.get("dim"), int):
            raise DescriptorError(f"{source}: field 'dim' must be an integer")
        strata = data.get("strata")
        if not isinstance(strata, list):
            raise DescriptorError(f"{source}: field 'strata' must be a list")
        for k, st in enumerate(strata):
            if not (isinstance(st, list) and len(st) == 2 and all(isinstance(x, int) for x in st)):
                raise DescriptorError(
                    f"{source}: field 'strata' entry {k} must be [stratum_dim, fiber_dim]"
                )
        try:
            return cls(data["dim"], tuple(tuple(st) for st in strata))
        except DescriptorError as exc:
            raise DescriptorError(f"{source}: {exc}") from None


def load_descriptor(path: Union[str, Path]) -> MapDescriptor:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise DescriptorError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    return MapDescriptor.from_json(data, source=str(path))


def check_semismall(d: MapDescriptor) -> Verdict:
    """``2*fiber <= codim`` everywhere; small if strict wherever the fiber is positive."""
    semismall = all(2 * f <= d.dim - s for s, f in d.strata)
    if not semismall:
        return Verdict.NEITHER
    if all(2 * f < d.dim - s for s, f in d.strata if f > 0):
        return Verdict.SMALL
    return Verdict.SEMISMALL


def relevant_strata(d: MapDescriptor) -> list[tuple[int, int]]:
    return [(s, f) for s, f in d.strata if 2 * f == d.dim - s]


def fibre_product_dim_bound(d: MapDescriptor, d2: MapDescriptor) -> int:
    """Upper bound for ``dim X' x_Y X`` from the stratum data of both maps.

    Without geometry we only know ``dim(Y_a n Y'_b) <= min(dim Y_a, dim Y'_b)``,
    so the bound is the maximum of ``fiber + fiber' + min(dim, dim')`` over
    pairs of strata.  For semismall inputs it never exceeds ``dim``.
    """
    if d.dim != d2.dim:
        raise DescriptorError(f"descriptors of different dimension: {d.dim} vs {d2.dim}")
    for which, desc in (("first", d), ("second", d2)):
        if check_semismall(desc) is Verdict.NEITHER:
            raise DescriptorError(f"{which} descriptor is not semismall")
    bound = max(f + f2 + min(s, s2) for (s, f), (s2, f2) in cartesian(d.strata, d2.strata))
    if bound > d.dim:
        raise DescriptorError(f"fibre product bound {bound} exceeds dim {d.dim}")
    return bound


def hilbert_chow_descriptor(n: int) -> MapDescriptor:
    """``X^[n] -> X^(n)``: strata of dimension ``2 l(nu)`` with fibers ``n - l(nu)``."""
    return MapDescriptor(2 * n, tuple((2 * nu.length, n - nu.length) for nu in partitions(n)))


@dataclass(frozen=True)
class SurfaceMap:
    """A proper surjective map of surfaces ``f: X -> Y``.

    ``special_fibres`` lists, for each point ``y_k`` with a one-dimensional
    fibre, the labels of the curves in that fibre.
    """

    source: HodgeDatum
    special_fibres: tuple[tuple[str, ...], ...] = ()

    def descriptor(self) -> MapDescriptor:
        return MapDescriptor(2, ((2, 0),) + tuple((0, 1) for _ in self.special_fibres))


def _fibre_labels(curves: Sequence[str], m: int, literal: bool) -> list:
    if literal:
        return monomials(curves, m)
    return curve_labeled_partitions(curves, m)


def supesymm_strata(f: SurfaceMap, n: int, *, literal_monomials: bool = False) -> list[StratumRecord]:
    """Relevant strata of ``f_n: X^[n] -> Y^(n)`` counted with their top components.

    Indices are ``(i, nu, m, labels)`` with ``nu`` a partition of ``i``,
    ``m`` a composition of ``n - i`` over the special points and ``labels`` one
    top component of the fibre over ``sum m_k y_k``.  The twist is
    ``n - l(nu)``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    N = len(f.special_fibres)
    out = []
    for i in range(n + 1):
        for nu in partitions(i):
            cover = MotiveTerm(
                tuple((f.source, a) for a in nu.exponents), n - nu.length
            )
            for m in compositions(N, n - i):
                per_point = [
                    _fibre_labels(curves, mk, literal_monomials)
                    for curves, mk in zip(f.special_fibres, m)
                ]
                for labels in cartesian(*per_point):
                    out.append(
                        StratumRecord(
                            index=(i, nu, m, tuple(labels)),
                            ambient_dim=2 * n,
                            stratum_dim=2 * nu.length,
                            fiber_dim=n - nu.length,
                            twist=n - nu.length,
                            cover=cover,
                        )
                    )
    return out
