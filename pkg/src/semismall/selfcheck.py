"""Cross-check matrix run by ``semismall selfcheck``.

Each check returns ``(ok, detail)``.  Checks compare two independently
computed objects exactly: a decomposition against a closed-form product, a
count against an oracle, a projector against its square.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from typing import Callable, Iterator

from .combinatorics import parabolic_chis
from .correspondences import (
    IntersectionMatrix,
    ade_intersection_matrix,
    check_orthogonality,
    compose,
    invert,
    is_idempotent,
    mumford_projector,
)
from .decompositions import (
    MapDescriptor,
    Verdict,
    check_semismall,
    decompose_hilbert,
    decompose_nested,
    decompose_parabolic,
    decompose_wreath,
    fibre_product_dim_bound,
    goettsche_series,
    motive_series,
    parabolic_series,
    parabolic_stratum_stats,
    wreath_class_oracle,
)
from .decompositions.generating import betti_series, multidegrees
from .motives import (
    MODES,
    MotiveSum,
    MotiveTerm,
    abelian_surface,
    curve,
    k3_surface,
    projective_space,
    realize,
    realize_euler,
    realize_hodge,
    realize_poincare,
    tate_twist,
)
from .series import TruncatedSeries, coefficient, euler_factor, z_poly

ADE_TYPES = [("A", r) for r in range(1, 9)] + [("D", r) for r in range(4, 9)] + [("E", r) for r in (6, 7, 8)]


def random_negative_definite(rng: random.Random, r: int) -> IntersectionMatrix:
    """``-(B^T B + I)`` for a random rational ``B``; always negative definite."""
    b = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(r)] for _ in range(r)]
    m = [
        [-(sum(b[k][i] * b[k][j] for k in range(r)) + (1 if i == j else 0)) for j in range(r)]
        for i in range(r)
    ]
    return IntersectionMatrix(tuple(f"C{i}" for i in range(r)), m)


def random_semismall(rng: random.Random, n: int | None = None) -> MapDescriptor:
    n = n if n is not None else rng.randint(1, 8)
    strata = [(n, 0)]
    for _ in range(rng.randint(0, 5)):
        s = rng.randint(0, n - 1)
        strata.append((s, rng.randint(0, (n - s) // 2)))
    return MapDescriptor(n, tuple(strata))


def check_parabolic_examples():
    X, D = projective_space(2), projective_space(1)
    one = parabolic_chis(1, 1, (1,))
    expected_one = MotiveSum.of(MotiveTerm(((X, 1), (D, 1))), MotiveTerm(((D, 1),), 1))
    stats = {str(c): parabolic_stratum_stats(c, 1, (2,)) for c in parabolic_chis(1, 1, (2,))}
    table = {k: (r.fiber_dim, r.codim, r.relevant) for k, r in stats.items()}
    want = {
        "2*d(0,1) + d(1,0)": (0, 0, True),
        "d(0,2) + d(1,0)": (0, 1, False),
        "d(0,1) + d(1,1)": (1, 2, True),
        "d(1,2)": (1, 3, False),
    }
    ok = len(one) == 2 and decompose_parabolic(1, 1, (1,), X, D) == expected_one and table == want
    return ok, f"S(A',(1,1)) has {len(one)} elements; (1,2) table {table}"


def check_parabolic_series(X, D, h, total=6):
    bounds = (total,) * (h + 1)
    bad = []
    for mode in MODES:
        s = parabolic_series(X, D, h, bounds, mode)
        for e in multidegrees(h, total):
            if coefficient(s, e) != realize(decompose_parabolic(e[0], h, e[1:], X, D), mode):
                bad.append((mode, e))
    motives = motive_series(X, D, h, bounds)
    for e in multidegrees(h, total):
        if motives.get(e, MotiveSum()) != decompose_parabolic(e[0], h, e[1:], X, D):
            bad.append(("motive", e))
    return not bad, f"X={X.name} D={D.name} h={h}: {len(bad)} mismatches {bad[:3]}"


def check_goettsche(X, N=8):
    bad = []
    for mode in MODES:
        s = goettsche_series(X, N, mode)
        for n in range(N + 1):
            if coefficient(s, (n,)) != realize(decompose_hilbert(n, X), mode):
                bad.append((mode, n))
    motives = motive_series(X, None, 0, (N,))
    bad += [("motive", n) for n in range(N + 1) if motives.get((n,)) != decompose_hilbert(n, X)]
    return not bad, f"X={X.name} n<={N}: {len(bad)} mismatches {bad[:3]}"


def check_p2_square():
    target = z_poly({0: 1, 2: 2, 4: 3, 6: 2, 8: 1})
    got = coefficient(goettsche_series(projective_space(2), 2), (2,))
    return got == target, f"t^2 coefficient {got}"


def check_nested(N=6):
    X = k3_surface()
    blowup = MotiveSum.of(MotiveTerm(((X, 1), (X, 1))), MotiveTerm(((X, 1),), 1))
    ok = decompose_nested(1, X) == blowup
    bad = [n for n in range(1, N + 1) if not realize_poincare(decompose_nested(n, X)).is_palindromic(4 * n + 4)]
    return ok and not bad, f"blowup identity {ok}; non-palindromic n: {bad}"


def check_projectors(fuzz=100, seed=0):
    failures = []
    for kind, r in ADE_TYPES:
        M = ade_intersection_matrix(kind, r)
        if not (is_idempotent(mumford_projector(M)) and check_orthogonality(invert(M), M)):
            failures.append(f"{kind}{r}")
    rng = random.Random(seed)
    for k in range(fuzz):
        M = random_negative_definite(rng, rng.randint(1, 5))
        P = mumford_projector(M)
        if not (is_idempotent(P) and check_orthogonality(invert(M), M)):
            failures.append(f"fuzz{k}")
        comp = compose(P, P.delta(M) - P)
        if not comp.is_zero():
            failures.append(f"fuzz{k}-complement")
    return not failures, f"{len(ADE_TYPES)} ADE types + {fuzz} fuzzed matrices; failures {failures}"


def check_wreath():
    bad = [
        (r, n)
        for r in range(4)
        for n in range(7)
        if realize_euler(decompose_wreath(r, n)) != wreath_class_oracle(r, n)
    ]
    betti_total = coefficient(betti_series((1, 0, 1, 0, 0), 2), (2,)).evaluate(1)
    a1 = (realize_euler(decompose_wreath(1, 2)), wreath_class_oracle(1, 2), betti_total)
    literal = realize_euler(decompose_wreath(1, 2, literal_monomials=True))
    ok = not bad and a1 == (5, 5, 5)
    return ok, f"mismatches {bad}; A1 n=2 (rank, oracle, betti) = {a1}; literal monomial count {literal} (documentation only)"


def check_validators(fuzz=1000, seed=0):
    blowup = MapDescriptor(2, ((2, 0), (0, 1)))
    verdict = check_semismall(blowup)
    rng = random.Random(seed)
    bad = 0
    for _ in range(fuzz):
        d1 = random_semismall(rng)
        other = random_semismall(rng, d1.dim)
        if fibre_product_dim_bound(d1, other) > d1.dim:
            bad += 1
    ok = verdict is Verdict.SEMISMALL and bad == 0
    return ok, f"blowup verdict {verdict.value}; {bad}/{fuzz} fuzzed pairs violate the bound"


def check_properties(samples=30, seed=0):
    rng = random.Random(seed)
    vars_ = ("z",)
    bad = []

    def rand_series():
        return TruncatedSeries(
            ("t", "s1"), (3, 2), vars_,
            {
                (rng.randint(0, 3), rng.randint(0, 2)): z_poly({rng.randint(0, 3): Fraction(rng.randint(-4, 4), rng.randint(1, 3))})
                for _ in range(4)
            },
        )

    for k in range(samples):
        a, b, c = rand_series(), rand_series(), rand_series()
        if (a * b) * c != a * (b * c) or a * b != b * a or a * (b + c) != a * b + a * c:
            bad.append(f"ring{k}")
        exp = (rng.randint(0, 2), rng.randint(0, 2))
        if exp == (0, 0):
            exp = (1, 0)
        coeff = z_poly({rng.randint(0, 4): rng.choice([1, 2, -1, Fraction(1, 2)])})
        e = rng.randint(1, 4)
        sign = rng.choice([1, -1])
        prod = euler_factor((exp, coeff), e, (3, 2), sign=sign) * euler_factor((exp, coeff), -e, (3, 2), sign=sign)
        if prod != TruncatedSeries.one(("t", "s1"), (3, 2), vars_):
            bad.append(f"inverse{k}")
    for X in (projective_space(2), k3_surface(), abelian_surface(), curve(3)):
        for n in range(5):
            M = decompose_hilbert(n, X) if X.dim == 2 else MotiveSum.of(MotiveTerm(((X, n),)))
            if realize_hodge(M).evaluate(-1, -1) != realize_euler(M):
                bad.append(f"euler-hodge {X.name} {n}")
            if realize_hodge(M).diagonal() != realize_poincare(M):
                bad.append(f"hodge-diagonal {X.name} {n}")
            for k in range(3):
                lhs = realize_poincare(tate_twist(M, k))
                if lhs != realize_poincare(M).shift((2 * k,)):
                    bad.append(f"twist {X.name} {n} {k}")
            if X.dim == 2 and not realize_poincare(M).is_palindromic(4 * n):
                bad.append(f"palindrome {X.name} {n}")
    return not bad, f"failures {bad[:5]}"


def checks() -> list[tuple[str, Callable[[], tuple[bool, str]]]]:
    Ab, C2, K3 = abelian_surface(), curve(2, "D"), k3_surface()
    P2, P1 = projective_space(2), projective_space(1)
    return [
        ("parabolic worked examples", check_parabolic_examples),
        ("parabolic series h=1 (P2, P1)", lambda: check_parabolic_series(P2, P1, 1)),
        ("parabolic series h=1 (Ab, C2)", lambda: check_parabolic_series(Ab, C2, 1)),
        ("parabolic series h=2 (Ab, C2)", lambda: check_parabolic_series(Ab, C2, 2)),
        ("goettsche P2", lambda: check_goettsche(P2)),
        ("goettsche K3", lambda: check_goettsche(K3)),
        ("goettsche Ab", lambda: check_goettsche(Ab)),
        ("P2 Hilbert square", check_p2_square),
        ("nested blowup and duality", check_nested),
        ("projector algebra", check_projectors),
        ("wreath counting", check_wreath),
        ("validators", check_validators),
        ("property suites", check_properties),
    ]


def run() -> Iterator[tuple[str, bool, str, float]]:
    for name, fn in checks():
        start = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, not a crashed run
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        yield name, ok, detail, time.perf_counter() - start
