"""Hilbert schemes of ADE resolutions and wreath-product orbifolds.

For ``G`` in ``SL_2(C)`` with ``r`` nontrivial conjugacy classes (equivalently
``r`` exceptional curves), ``H^*`` of the Hilbert scheme of ``n`` points on the
minimal resolution of ``C^2/G`` splits into rank-one pieces
``H^*(C^{2 l(nu)} / prod G_{a_j})``, one per triple ``(i, nu, label)``.

By default a label is a :class:`~semismall.combinatorics.CurveLabeledPartition`
of ``n - i`` over the curves, one per top-dimensional component of the
punctual fibre.  ``literal_monomials=True`` switches to bare degree ``n - i``
monomials in the curves, which undercounts as soon as ``n - i >= 2``.
"""

from __future__ import annotations

from collections import Counter

from ..combinatorics import Partition
from ..motives import MotiveSum, MotiveTerm, ade_resolution, affine_quotient
from ..series import GradedPoly, TruncatedSeries, coefficient, euler_factor, series_mul
from .strata import StratumRecord, SurfaceMap, supesymm_strata


def curve_labels(r: int) -> tuple[str, ...]:
    return tuple(f"E{k}" for k in range(1, r + 1))


def ade_surface_map(r: int) -> SurfaceMap:
    """Minimal resolution of ``C^2/G`` as a surface map with one special point."""
    return SurfaceMap(ade_resolution(r), (curve_labels(r),))


def wreath_strata(r: int, n: int, *, literal_monomials: bool = False) -> list[StratumRecord]:
    if r < 0 or n < 0:
        raise ValueError("r and n must be nonnegative")
    records = supesymm_strata(ade_surface_map(r), n, literal_monomials=literal_monomials)
    out = []
    for rec in records:
        i, nu, _, (label,) = rec.index
        cover = MotiveTerm(((affine_quotient(2 * nu.length), 1),), rec.twist)
        out.append(
            StratumRecord(
                index=(i, nu, label),
                ambient_dim=rec.ambient_dim,
                stratum_dim=rec.stratum_dim,
                fiber_dim=rec.fiber_dim,
                twist=rec.twist,
                cover=cover,
            )
        )
    return out


def decompose_wreath(r: int, n: int, *, literal_monomials: bool = False) -> MotiveSum:
    """Sum of rank-one affine-quotient pieces; only its Euler realization is certified."""
    return MotiveSum(
        (rec.cover, 1) for rec in wreath_strata(r, n, literal_monomials=literal_monomials)
    )


def wreath_rank_table(r: int, n: int, *, literal_monomials: bool = False) -> dict[tuple[int, Partition], int]:
    """Number of pieces for each ``(i, nu)``."""
    return dict(
        Counter(
            (rec.index[0], rec.index[1])
            for rec in wreath_strata(r, n, literal_monomials=literal_monomials)
        )
    )


def wreath_class_oracle(r: int, n: int) -> int:
    """Conjugacy classes of ``G wr S_n`` for ``|G_*| = r + 1``.

    Coefficient of ``t**n`` in ``prod_m (1 - t**m)**-(r+1)``.
    """
    if r < 0 or n < 0:
        raise ValueError("r and n must be nonnegative")
    one = GradedPoly.constant(())
    s = TruncatedSeries.one(("t",), (n,), ())
    for m in range(1, n + 1):
        s = series_mul(s, euler_factor(((m,), one), -(r + 1), (n,)))
    return int(coefficient(s, (n,)).evaluate())
