"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line with its wall time and the
limit it was held to; the lines are collected again in the terminal summary.
"""

import random
import time

import pytest

from semismall import selfcheck
from semismall.combinatorics import parabolic_chis
from semismall.correspondences import (
    ade_intersection_matrix,
    check_orthogonality,
    invert,
    is_idempotent,
    mumford_projector,
)
from semismall.decompositions import (
    MapDescriptor,
    Verdict,
    betti_series,
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
from semismall.decompositions.generating import multidegrees
from semismall.motives import (
    MODES,
    MotiveSum,
    MotiveTerm,
    abelian_surface,
    curve,
    k3_surface,
    projective_space,
    realize,
    realize_euler,
    realize_poincare,
)
from semismall.series import coefficient, z_poly

REPORT: list[str] = []


def report(number, title, limit, fn):
    start = time.perf_counter()
    ok, detail = fn()
    secs = time.perf_counter() - start
    in_time = secs < limit
    line = (
        f"[{'PASS' if ok and in_time else 'FAIL'}] criterion {number}: {title} "
        f"({secs:.2f}s, limit {limit}s) {detail}"
    )
    REPORT.append(line)
    print(line)
    assert ok, line
    assert in_time, line


def parabolic_examples():
    P2, P1 = projective_space(2), projective_space(1)
    one = parabolic_chis(1, 1, (1,))
    dec_one = decompose_parabolic(1, 1, (1,), P2, P1)
    want_one = MotiveSum.of(MotiveTerm(((P2, 1), (P1, 1))), MotiveTerm(((P1, 1),), 1))
    chis = parabolic_chis(1, 1, (2,))
    rows = sorted(
        (r.fiber_dim, r.codim, r.relevant)
        for r in (parabolic_stratum_stats(c, 1, (2,)) for c in chis)
    )
    want_rows = [(0, 0, True), (0, 1, False), (1, 2, True), (1, 3, False)]
    ok = len(one) == 2 and dec_one == want_one and rows == want_rows
    return ok, f"|S|={len(one)}, (d,c,relevant)={rows}"


PARABOLIC_PAIRS = [
    (projective_space(2), projective_space(1)),
    (k3_surface(), curve(2, "D")),
    (abelian_surface(), curve(1, "E")),
]


def parabolic_cross_check():
    bad, checked = [], 0
    for X, D in PARABOLIC_PAIRS:
        for h in (1, 2):
            bounds = (6,) * (h + 1)
            series = {mode: parabolic_series(X, D, h, bounds, mode) for mode in MODES}
            motives = motive_series(X, D, h, bounds)
            for e in multidegrees(h, 6):
                M = decompose_parabolic(e[0], h, e[1:], X, D)
                for mode, s in series.items():
                    checked += 1
                    if coefficient(s, e) != realize(M, mode):
                        bad.append((X.name, D.name, mode, e))
                if motives.get(e, MotiveSum()) != M:
                    bad.append((X.name, D.name, "motive", e))
    return not bad, f"{checked} coefficients, mismatches {bad[:3]}"


def goettsche():
    bad = []
    for X in (projective_space(2), k3_surface(), abelian_surface()):
        for mode in MODES:
            s = goettsche_series(X, 8, mode)
            bad += [(X.name, mode, n) for n in range(9) if coefficient(s, (n,)) != realize(decompose_hilbert(n, X), mode)]
    square = coefficient(goettsche_series(projective_space(2), 2), (2,))
    target = z_poly({0: 1, 2: 2, 4: 3, 6: 2, 8: 1})
    return not bad and square == target, f"mismatches {bad[:3]}; P2 t^2 = {square}"


def nested():
    X = k3_surface()
    blowup = decompose_nested(1, X) == MotiveSum.of(MotiveTerm(((X, 1), (X, 1))), MotiveTerm(((X, 1),), 1))
    bad = []
    for Y in (projective_space(2), X):
        bad += [(Y.name, n) for n in range(1, 7) if not realize_poincare(decompose_nested(n, Y)).is_palindromic(4 * n + 4)]
    return blowup and not bad, f"blowup identity {blowup}; non-palindromic {bad}"


def projectors():
    failures = []
    for kind, r in selfcheck.ADE_TYPES:
        M = ade_intersection_matrix(kind, r)
        if not (is_idempotent(mumford_projector(M)) and check_orthogonality(invert(M), M)):
            failures.append(f"{kind}{r}")
    rng = random.Random(20261016)
    for k in range(100):
        M = selfcheck.random_negative_definite(rng, rng.randint(1, 5))
        if not (is_idempotent(mumford_projector(M)) and check_orthogonality(invert(M), M)):
            failures.append(f"fuzz{k}")
    return not failures, f"{len(selfcheck.ADE_TYPES)} ADE types, 100 fuzzed; failures {failures}"


def wreath():
    bad = [(r, n) for r in range(4) for n in range(7) if realize_euler(decompose_wreath(r, n)) != wreath_class_oracle(r, n)]
    betti_total = coefficient(betti_series((1, 0, 1, 0, 0), 2), (2,)).evaluate(1)
    a1 = (realize_euler(decompose_wreath(1, 2)), wreath_class_oracle(1, 2), betti_total)
    literal = realize_euler(decompose_wreath(1, 2, literal_monomials=True))
    ok = not bad and a1 == (5, 5, 5) and literal == 4
    return ok, f"mismatches {bad}; A1 n=2 (rank, oracle, betti)={a1}; literal monomials {literal} (documentation only)"


def validators():
    verdict = check_semismall(MapDescriptor(2, ((2, 0), (0, 1))))
    rng = random.Random(7)
    worst = 0
    for _ in range(1000):
        d = selfcheck.random_semismall(rng)
        d2 = selfcheck.random_semismall(rng, d.dim)
        worst = max(worst, fibre_product_dim_bound(d, d2) - d.dim)
    ok = verdict is Verdict.SEMISMALL and worst <= 0
    return ok, f"blowup: {verdict.value}; max(bound - n) over 1000 pairs = {worst}"


def full_selfcheck():
    results = list(selfcheck.run())
    failed = [name for name, ok, _, _ in results if not ok]
    return not failed, f"{len(results)} checks, failed {failed}"


def test_criterion_1_parabolic_examples():
    report(1, "parabolic worked examples", 1, parabolic_examples)


def test_criterion_2_parabolic_generating_functions():
    report(2, "parabolic generating functions, n + sum(l) <= 6, h <= 2", 30, parabolic_cross_check)


def test_criterion_3_goettsche():
    report(3, "Goettsche specialization n <= 8", 10, goettsche)


def test_criterion_4_nested():
    report(4, "nested blowup identity and duality", 5, nested)


def test_criterion_5_projectors():
    report(5, "projector algebra", 5, projectors)


def test_criterion_6_wreath():
    report(6, "wreath/orbifold counting", 5, wreath)


def test_criterion_7_validators():
    report(7, "semismall validators", 5, validators)


@pytest.mark.slow
def test_criterion_8_selfcheck():
    report(8, "property suites and full selfcheck", 120, full_selfcheck)
