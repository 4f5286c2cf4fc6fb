"""Closed-form generating functions for Hilbert and parabolic Hilbert schemes.

Every graded product is a product of Euler factors ``(1 + eps*M)**(eps*w)``
(``eps = -1`` for even cohomological degree, ``+1`` for odd) in the series
variables ``t, s1, ..., sh``.  The motive-level product is expanded separately
with :class:`~semismall.motives.MotiveSum` coefficients.
"""

from __future__ import annotations

from itertools import product as cartesian
from typing import Sequence

from ..motives import (
    HodgeDatum,
    MotiveSum,
    MotiveTerm,
    RankOnlyError,
    poly_vars_for,
)
from ..series import (
    GradedPoly,
    TruncatedSeries,
    euler_factor,
    series_mul,
)

DEFAULT_T_BOUND = 8
DEFAULT_S_BOUND = 4


def _series_vars(h: int) -> tuple[str, ...]:
    return ("t",) + tuple(f"s{a}" for a in range(1, h + 1))


def _check_graded(mode: str, *atoms: HodgeDatum) -> None:
    if mode not in ("poincare", "hodge", "euler"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode != "euler":
        for atom in atoms:
            if not atom.proper:
                raise RankOnlyError(
                    f"atom {atom.name!r} is not proper: the {mode} series is not certified; "
                    "use mode 'euler' (rank-only) instead"
                )


def _weighted_monomials(atom: HodgeDatum, shift: int, mode: str):
    """``(coeff, exponent, sign)`` for each Euler factor of one ``t``-degree.

    ``shift`` is the Tate twist carried by the factor: ``m - 1`` for points of
    the surface at ``t**m``, ``m`` for points of the curve.
    """
    vars_ = poly_vars_for(mode)
    if mode == "euler":
        if atom.euler:
            yield GradedPoly.constant(vars_), -atom.euler, -1
        return
    if mode == "poincare":
        for i, b in enumerate(atom.betti):
            if b:
                eps = 1 if i % 2 else -1
                yield GradedPoly.monomial(vars_, (i + 2 * shift,)), eps * b, eps
        return
    for p, row in enumerate(atom.hodge):
        for q, hpq in enumerate(row):
            if hpq:
                eps = 1 if (p + q) % 2 else -1
                yield GradedPoly.monomial(vars_, (p + shift, q + shift)), eps * hpq, eps


def _euler_product(X: HodgeDatum, D: HodgeDatum | None, h: int, bounds: tuple[int, ...], mode: str) -> TruncatedSeries:
    names = _series_vars(h)
    vars_ = poly_vars_for(mode)
    out = TruncatedSeries.one(names, bounds, vars_)
    for m in range(1, bounds[0] + 1):
        exp = (m,) + (0,) * h
        for coeff, e, sign in _weighted_monomials(X, m - 1, mode):
            out = series_mul(out, euler_factor((exp, coeff), e, bounds, series_vars=names, sign=sign))
    for alpha in range(1, h + 1):
        if bounds[alpha] == 0:
            continue
        for m in range(0, bounds[0] + 1):
            exp = tuple(m if k == 0 else int(k == alpha) for k in range(h + 1))
            for coeff, e, sign in _weighted_monomials(D, m, mode):
                out = series_mul(out, euler_factor((exp, coeff), e, bounds, series_vars=names, sign=sign))
    return out


def betti_series(betti: Sequence[int], N: int) -> TruncatedSeries:
    """Goettsche's product for a surface given only by its Betti numbers."""
    betti = tuple(betti)
    if len(betti) != 5:
        raise ValueError("a surface has Betti numbers b_0..b_4")
    vars_ = poly_vars_for("poincare")
    out = TruncatedSeries.one(("t",), (N,), vars_)
    for m in range(1, N + 1):
        for i, b in enumerate(betti):
            if b:
                eps = 1 if i % 2 else -1
                coeff = GradedPoly.monomial(vars_, (i + 2 * m - 2,))
                out = series_mul(out, euler_factor(((m,), coeff), eps * b, (N,), sign=eps))
    return out


def goettsche_series(X: HodgeDatum, N: int = DEFAULT_T_BOUND, mode: str = "poincare") -> TruncatedSeries:
    """``sum_n realize(X^[n]) t^n`` as an Euler product, expanded to ``t**N``."""
    if X.dim != 2:
        raise ValueError(f"{X.name} is not a surface")
    _check_graded(mode, X)
    return _euler_product(X, None, 0, (N,), mode)


def parabolic_series(
    X: HodgeDatum,
    D: HodgeDatum,
    h: int,
    bounds: Sequence[int] | None = None,
    mode: str = "poincare",
) -> TruncatedSeries:
    """``sum realize(Hilb(X, D; n, h, l)) t^n s^l`` expanded inside ``bounds``.

    ``bounds`` is ``(t_bound, s1_bound, ..., sh_bound)``.
    """
    if X.dim != 2 or D.dim != 1:
        raise ValueError("need a surface X and a curve D")
    if h < 1:
        raise ValueError("h must be positive")
    if bounds is None:
        bounds = (DEFAULT_T_BOUND,) + (DEFAULT_S_BOUND,) * h
    bounds = tuple(bounds)
    if len(bounds) != h + 1:
        raise ValueError(f"need {h + 1} truncation bounds")
    _check_graded(mode, X, D)
    return _euler_product(X, D, h, bounds, mode)


# motive-level product -------------------------------------------------------------


def _motive_mul(a: dict, b: dict, bounds: tuple[int, ...]) -> dict:
    out: dict = {}
    for e1, m1 in a.items():
        for e2, m2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            if any(x > bd for x, bd in zip(e, bounds)):
                continue
            prod = m1 * m2
            out[e] = out[e] + prod if e in out else prod
    return {e: m for e, m in out.items() if m}


def motive_series(
    X: HodgeDatum,
    D: HodgeDatum | None = None,
    h: int = 0,
    bounds: Sequence[int] | None = None,
) -> dict[tuple[int, ...], MotiveSum]:
    """Expand the product of ``sum_m [X^(m)]((i-1)m) t^(im)`` and the ``D`` sums.

    With ``h = 0`` this is the motivic Goettsche series.  Keys are exponent
    tuples ``(n, l_1, ..., l_h)``.
    """
    if bounds is None:
        bounds = (DEFAULT_T_BOUND,) + (DEFAULT_S_BOUND,) * h
    bounds = tuple(bounds)
    if len(bounds) != h + 1:
        raise ValueError(f"need {h + 1} truncation bounds")
    if h and D is None:
        raise ValueError("the parabolic series needs a curve D")
    zero = (0,) * (h + 1)
    out = {zero: MotiveSum.point()}
    for i in range(1, bounds[0] + 1):
        factor = {
            (i * m,) + (0,) * h: MotiveSum.of(MotiveTerm(((X, m),), (i - 1) * m))
            for m in range(bounds[0] // i + 1)
        }
        out = _motive_mul(out, factor, bounds)
    for alpha in range(1, h + 1):
        for i in range(0, bounds[0] + 1):
            factor = {}
            for m in range(bounds[alpha] + 1):
                if i * m > bounds[0]:
                    break
                exp = tuple(i * m if k == 0 else (m if k == alpha else 0) for k in range(h + 1))
                factor[exp] = MotiveSum.of(MotiveTerm(((D, m),), i * m))
            out = _motive_mul(out, factor, bounds)
    return out


def multidegrees(h: int, total: int) -> list[tuple[int, ...]]:
    """All ``(n, l_1, ..., l_h)`` with entries summing to at most ``total``."""
    return [e for e in cartesian(range(total + 1), repeat=h + 1) if sum(e) <= total]
