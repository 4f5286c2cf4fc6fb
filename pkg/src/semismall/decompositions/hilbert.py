"""Hilbert schemes of points and nested Hilbert schemes of a surface."""

from __future__ import annotations

from ..combinatorics import Partition, partitions
from ..motives import HodgeDatum, MotiveSum, MotiveTerm
from .strata import StratumRecord


def _sym_factors(X: HodgeDatum, a) -> tuple:
    return tuple((X, k) for k in a)


def hilbert_strata(n: int, X: HodgeDatum) -> list[StratumRecord]:
    """One record per partition of ``n``; every stratum is relevant."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []
    for nu in partitions(n):
        l = nu.length
        out.append(
            StratumRecord(
                index=nu,
                ambient_dim=2 * n,
                stratum_dim=2 * l,
                fiber_dim=n - l,
                twist=n - l,
                cover=MotiveTerm(_sym_factors(X, nu.exponents), n - l),
            )
        )
    return out


def decompose_hilbert(n: int, X: HodgeDatum) -> MotiveSum:
    """``[X^[n]] = sum over nu of [X^(nu)](n - l(nu))``."""
    return MotiveSum((r.cover, 1) for r in hilbert_strata(n, X))


def nested_index(a: Partition) -> list[int]:
    """``I_a = {0} U {j : a_j != 0}``."""
    return [0] + sorted(a.multiplicities())


def nested_strata(n: int, X: HodgeDatum) -> list[StratumRecord]:
    """Strata of ``X^[n,n+1] -> X^(n) x X`` indexed by ``(a, j)``.

    ``X^(a,0)`` is modelled as ``X^(a) x X`` and, for ``j != 0``,
    ``X^(a,j)`` as ``X^(a - e_j) x X``; both have the dimension of the
    stratum ``X_{a,j}`` they normalize.
    """
    if n < 1:
        raise ValueError("nested Hilbert schemes need n >= 1")
    out = []
    for a in partitions(n):
        l = a.length
        exps = a.exponents
        for j in nested_index(a):
            if j == 0:
                factors = _sym_factors(X, exps) + ((X, 1),)
                stratum_dim, fiber = 2 * l + 2, n - l
            else:
                reduced = list(exps)
                reduced[j - 1] -= 1
                factors = _sym_factors(X, reduced) + ((X, 1),)
                stratum_dim, fiber = 2 * l, n - l + 1
            out.append(
                StratumRecord(
                    index=(a, j),
                    ambient_dim=2 * n + 2,
                    stratum_dim=stratum_dim,
                    fiber_dim=fiber,
                    twist=fiber,
                    cover=MotiveTerm(factors, fiber),
                )
            )
    return out


def decompose_nested(n: int, X: HodgeDatum) -> MotiveSum:
    """``[X^[n,n+1]] = sum over (a, j) of [X^(a,j)](m(a,j))``."""
    return MotiveSum((r.cover, 1) for r in nested_strata(n, X))
