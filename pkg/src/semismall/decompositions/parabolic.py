"""Parabolic Hilbert schemes ``Hilb(X, D; n, h, l)`` of a surface along a curve."""

from __future__ import annotations

from typing import Sequence

from ..combinatorics import ParabolicChi, parabolic_chis, relevant_parabolic_chis
from ..motives import HodgeDatum, MotiveSum, MotiveTerm
from .strata import StratumRecord


def _normalize(n: int, h: int, l: Sequence[int]) -> tuple[int, ...]:
    l = tuple(int(x) for x in l)
    if n < 0 or any(x < 0 for x in l):
        raise ValueError("n and l must be nonnegative")
    if h < 1 or len(l) != h:
        raise ValueError(f"need h >= 1 and exactly h = {h} filtration lengths, got {l}")
    return l


def chi_cover(chi: ParabolicChi, X: HodgeDatum, D: HodgeDatum, twist: int = 0) -> MotiveTerm:
    """``X_chi = prod X^(chi(v)) x prod D^(chi(v))`` (X where ``v_* = 0``)."""
    factors = tuple(
        (D if any(v[1:]) else X, c) for v, c in chi.support
    )
    return MotiveTerm(factors, twist)


def parabolic_stratum_stats(
    chi: ParabolicChi,
    n: int,
    l: Sequence[int],
    X: HodgeDatum | None = None,
    D: HodgeDatum | None = None,
) -> StratumRecord:
    """Dimension data of the stratum ``X_{0,chi}`` of the Hilbert-Chow map.

    Fibers have dimension ``n - #X-points``; the stratum has the dimension of
    ``X_chi`` inside ``X^(n) x D^(l)``.
    """
    l = tuple(l)
    target = (n,) + l
    if chi.support and len(chi.support[0][0]) != len(target):
        raise ValueError(f"chi has vectors of length {len(chi.support[0][0])}, expected {len(target)}")
    if chi.phi(len(target)) != target:
        raise ValueError(f"chi sums to {chi.phi(len(target))}, not to {target}")
    on_x = chi.point_count()
    on_d = chi.curve_count()
    fiber = n - on_x
    cover = chi_cover(chi, X, D, fiber) if X is not None and D is not None else None
    return StratumRecord(
        index=chi,
        ambient_dim=2 * n + sum(l),
        stratum_dim=2 * on_x + on_d,
        fiber_dim=fiber,
        twist=fiber,
        cover=cover,
    )


def parabolic_strata(n, h, l, X=None, D=None, *, relevant_only=False) -> list[StratumRecord]:
    l = _normalize(n, h, l)
    chis = relevant_parabolic_chis(n, h, l) if relevant_only else parabolic_chis(n, h, l)
    return [parabolic_stratum_stats(chi, n, l, X, D) for chi in chis]


def decompose_parabolic(n: int, h: int, l: Sequence[int], X: HodgeDatum, D: HodgeDatum) -> MotiveSum:
    """Sum of ``[X_chi](t_chi)`` over the relevant ``chi`` (support in ``C``)."""
    l = _normalize(n, h, l)
    return MotiveSum(
        (parabolic_stratum_stats(chi, n, l, X, D).cover, 1)
        for chi in relevant_parabolic_chis(n, h, l)
    )
