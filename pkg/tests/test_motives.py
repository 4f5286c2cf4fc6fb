import json
from collections import Counter
from itertools import combinations_with_replacement

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semismall.motives import (
    HodgeDataError,
    HodgeDatum,
    MotiveSum,
    MotiveTerm,
    RankOnlyError,
    abelian_surface,
    affine_quotient,
    curve,
    k3_surface,
    load_hodge_datum,
    point,
    projective_space,
    realize,
    realize_euler,
    realize_hodge,
    realize_poincare,
    sym_euler,
    sym_hodge,
    sym_poincare,
    tate_twist,
)
from semismall.series import xy_poly, z_poly

ATOMS = [point(), projective_space(1), projective_space(2), curve(1), curve(2), k3_surface(), abelian_surface()]


def basis(atom):
    """One ((p, q), parity) entry per basis vector of H^{p,q}."""
    return [((p, q), (p + q) % 2) for p, row in enumerate(atom.hodge) for q, h in enumerate(row) for _ in range(h)]


def brute_sym(atom, m):
    """Graded-symmetric power by listing monomials: odd classes square to zero."""
    vecs = basis(atom)
    out = Counter()
    for combo in combinations_with_replacement(range(len(vecs)), m):
        counts = Counter(combo)
        if any(vecs[i][1] and c > 1 for i, c in counts.items()):
            continue
        p = sum(vecs[i][0][0] for i in combo)
        q = sum(vecs[i][0][1] for i in combo)
        out[(p, q)] += 1
    return xy_poly(dict(out))


@pytest.mark.parametrize("atom", ATOMS, ids=lambda a: a.name)
@pytest.mark.parametrize("m", range(4))
def test_sym_hodge_matches_monomial_count(atom, m):
    want = brute_sym(atom, m)
    assert sym_hodge(atom, m) == want
    assert sym_poincare(atom, m) == want.diagonal()


def test_sym_poincare_examples():
    assert sym_poincare(projective_space(2), 2) == z_poly({0: 1, 2: 1, 4: 2, 6: 1, 8: 1})
    assert sym_poincare(k3_surface(), 0) == z_poly({0: 1})
    assert all(sym_poincare(point(), m) == z_poly({0: 1}) for m in range(5))


def test_sym_hodge_examples():
    assert sym_hodge(projective_space(1), 2) == xy_poly({(0, 0): 1, (1, 1): 1, (2, 2): 1})
    for atom in ATOMS:
        assert sym_hodge(atom, 1) == atom.hodge_poly()


def test_sym_euler_matches_hodge_at_minus_one():
    for atom in ATOMS:
        for m in range(5):
            assert sym_euler(atom.euler, m) == sym_hodge(atom, m).evaluate(-1, -1)


def test_twist_examples():
    pt = MotiveSum.point()
    assert realize_poincare(tate_twist(pt, 1)) == z_poly({2: 1})
    M = MotiveSum.of(MotiveTerm(((projective_space(2), 2),), 1))
    assert tate_twist(M, 0) == M
    assert tate_twist(tate_twist(M, 1), 1) == tate_twist(M, 2)


def test_realize_examples():
    p1 = MotiveSum.point() + tate_twist(MotiveSum.point(), 1)
    assert realize_poincare(p1) == z_poly({0: 1, 2: 1})
    assert realize_euler(p1) == 2
    P2 = projective_space(2)
    hilb2 = MotiveSum.of(MotiveTerm(((P2, 2),)), MotiveTerm(((P2, 1),), 1))
    assert realize_poincare(hilb2) == z_poly({0: 1, 2: 2, 4: 3, 6: 2, 8: 1})
    assert realize_poincare(MotiveSum()) == z_poly({})
    assert realize_euler(MotiveSum()) == 0
    assert realize_hodge(tate_twist(MotiveSum.point(), 1)) == xy_poly({(1, 1): 1})
    for g in range(4):
        D = curve(g)
        got = realize_hodge(MotiveSum.of(MotiveTerm(((D, 1),), 1)))
        assert got == xy_poly({(1, 1): 1, (2, 1): g, (1, 2): g, (2, 2): 1})


def test_motive_term_canonical_form():
    P1, P2 = projective_space(1), projective_space(2)
    a = MotiveTerm(((P2, 1), (P1, 0), (P1, 2)), 1)
    b = MotiveTerm(((P1, 2), (P2, 1)), 1)
    assert a == b
    assert a.dimension == 2 + 2 + 1
    assert str(a) == "[P1^(2) x P2](1)"


def test_motive_sum_drops_zero():
    t = MotiveTerm(((projective_space(1), 1),))
    assert not (MotiveSum.of(t) + MotiveSum.of(t).scale(-1))


def test_rank_only_error_for_open_atoms():
    M = MotiveSum.of(MotiveTerm(((affine_quotient(2), 1),)))
    with pytest.raises(RankOnlyError, match="realize_euler"):
        realize_poincare(M)
    with pytest.raises(RankOnlyError):
        realize_hodge(M)
    assert realize_euler(M) == 1
    assert realize(M, "euler").evaluate() == 1


sample_sums = st.lists(
    st.tuples(
        st.lists(st.tuples(st.sampled_from(ATOMS), st.integers(0, 3)), max_size=2),
        st.integers(0, 3),
        st.integers(-2, 3),
    ),
    max_size=3,
).map(lambda raw: MotiveSum((MotiveTerm(tuple(f), k), c) for f, k, c in raw))


@given(sample_sums, st.integers(0, 3))
def test_realization_compatibilities(M, k):
    assert realize_hodge(M).evaluate(-1, -1) == realize_euler(M)
    assert realize_hodge(M).diagonal() == realize_poincare(M)
    assert realize_poincare(tate_twist(M, k)) == realize_poincare(M).shift((2 * k,))


@given(sample_sums, sample_sums)
def test_realizations_are_additive_and_multiplicative(A, B):
    assert realize_poincare(A + B) == realize_poincare(A) + realize_poincare(B)
    assert realize_poincare(A * B) == realize_poincare(A) * realize_poincare(B)
    assert realize_euler(A * B) == realize_euler(A) * realize_euler(B)


def test_hodge_datum_validation():
    with pytest.raises(HodgeDataError, match=r"\(p,q\)=\(0,1\)"):
        HodgeDatum("bad", 1, True, ((1, 2), (1, 1)))
    with pytest.raises(HodgeDataError):
        HodgeDatum("bad", 2, True, ((1, 0), (0, 1)))


def test_hodge_datum_json_round_trip(tmp_path):
    X = k3_surface()
    path = tmp_path / "k3.json"
    path.write_text(json.dumps(X.to_json()))
    assert load_hodge_datum(path) == X


def test_hodge_datum_json_errors(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text('{"name": "X",\n "dim": 2,,}')
    with pytest.raises(HodgeDataError, match=r"broken.json:2:"):
        load_hodge_datum(broken)
    missing = tmp_path / "missing.json"
    missing.write_text(json.dumps({"name": "X", "dim": 1, "proper": True}))
    with pytest.raises(HodgeDataError, match="'hodge'"):
        load_hodge_datum(missing)
    asym = tmp_path / "asym.json"
    asym.write_text(json.dumps({"name": "X", "dim": 1, "proper": True, "hodge": [[1, 0], [3, 1]]}))
    with pytest.raises(HodgeDataError, match=r"\(p,q\)=\(0,1\)"):
        load_hodge_datum(asym)


def test_betti_and_euler():
    assert k3_surface().betti == (1, 0, 22, 0, 1)
    assert k3_surface().euler == 24
    assert abelian_surface().euler == 0
    assert curve(2).euler == -2
