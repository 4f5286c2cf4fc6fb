import json
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semismall.correspondences import (
    Correspondence,
    IntersectionMatrix,
    IntersectionMatrixError,
    SingularMatrixError,
    ade_intersection_matrix,
    check_orthogonality,
    compose,
    determinant,
    identity,
    inverse,
    invert,
    is_idempotent,
    load_intersection_matrix,
    matmul,
    mumford_projector,
)
from semismall.selfcheck import ADE_TYPES, random_negative_definite

F = Fraction


def test_ade_examples():
    assert ade_intersection_matrix("A", 1).matrix == ((-2,),)
    assert ade_intersection_matrix("A", 2).matrix == ((-2, 1), (1, -2))
    d4 = ade_intersection_matrix("D", 4).matrix
    assert tuple(sum(row) for row in d4) == (-1, -1, -1, 1)


@pytest.mark.parametrize("kind,rank", [("A", 0), ("D", 3), ("E", 5), ("E", 9), ("B", 2)])
def test_ade_domain_errors(kind, rank):
    with pytest.raises(ValueError):
        ade_intersection_matrix(kind, rank)


@pytest.mark.parametrize("kind,rank", ADE_TYPES)
def test_ade_family(kind, rank):
    M = ade_intersection_matrix(kind, rank)
    rows = M.matrix
    assert all(rows[i][i] == -2 for i in range(rank))
    # a tree: rank - 1 edges, and every node has valence <= 3
    edges = sum(rows[i][j] for i in range(rank) for j in range(i))
    assert edges == rank - 1
    assert max(sum(1 for j in range(rank) if j != i and rows[i][j]) for i in range(rank)) <= 3
    lam = invert(M)
    assert matmul(lam, M.matrix) == identity(rank) == matmul(M.matrix, lam)
    assert is_idempotent(mumford_projector(M))


def test_known_determinants():
    # |det Cartan| is the order of the centre / discriminant group
    want = {("A", 3): 4, ("D", 5): 4, ("E", 6): 3, ("E", 7): 2, ("E", 8): 1}
    for (kind, r), d in want.items():
        assert abs(determinant(ade_intersection_matrix(kind, r).matrix)) == d


def test_inverse_examples():
    assert invert(ade_intersection_matrix("A", 1)) == ((F(-1, 2),),)
    assert invert(ade_intersection_matrix("A", 2)) == ((F(-2, 3), F(-1, 3)), (F(-1, 3), F(-2, 3)))
    with pytest.raises(SingularMatrixError):
        inverse(((1, 1), (1, 1)))


def test_projector_examples():
    A1 = ade_intersection_matrix("A", 1)
    P = mumford_projector(A1)
    assert P.diagonal == 1 and P.off == ((F(1, 2),),)
    assert str(P) == "D + (1/2)*E1xE1"
    A2 = ade_intersection_matrix("A", 2)
    assert mumford_projector(A2).off == ((F(2, 3), F(1, 3)), (F(1, 3), F(2, 3)))
    empty = IntersectionMatrix((), ())
    assert mumford_projector(empty) == Correspondence.delta(empty)


def test_composition_rule():
    A1 = ade_intersection_matrix("A", 1)
    E = Correspondence.curve_product(A1, 0, 0)
    assert compose(E, E) == E.scale(-2)
    P = mumford_projector(A1)
    assert compose(P, P) == P
    assert compose(Correspondence.delta(A1), P) == P
    assert compose(P, Correspondence.delta(A1)) == P


def test_composition_orientation():
    # (E_k x E_l) o (E_i x E_j) = (E_j . E_k) E_i x E_l
    M = ade_intersection_matrix("A", 3)
    first = Correspondence.curve_product(M, 0, 1)
    second = Correspondence.curve_product(M, 2, 2)
    assert compose(second, first) == Correspondence.curve_product(M, 0, 2, M.matrix[1][2])
    assert compose(first, second).is_zero()


def test_idempotent_examples():
    A2 = ade_intersection_matrix("A", 2)
    D = Correspondence.delta(A2)
    assert is_idempotent(D)
    assert not is_idempotent(D.scale(2))
    assert is_idempotent(D - mumford_projector(A2))


def test_orthogonality_examples():
    A1 = ade_intersection_matrix("A", 1)
    assert check_orthogonality(((F(-1, 2),),), A1)
    M = ade_intersection_matrix("D", 5)
    lam = [list(row) for row in invert(M)]
    assert check_orthogonality(lam, M)
    lam[2][3] += 1
    assert not check_orthogonality(lam, M)


def test_context_mismatch():
    a = Correspondence.delta(ade_intersection_matrix("A", 1))
    b = Correspondence.delta(ade_intersection_matrix("A", 2))
    with pytest.raises(ValueError):
        compose(a, b)


def test_intersection_matrix_validation():
    with pytest.raises(IntersectionMatrixError, match="symmetric"):
        IntersectionMatrix(("a", "b"), ((-2, 1), (0, -2)))
    with pytest.raises(IntersectionMatrixError, match="negative definite"):
        IntersectionMatrix(("a", "b"), ((-1, 2), (2, -1)))
    with pytest.raises(IntersectionMatrixError):
        IntersectionMatrix(("a",), ((1,),))


def test_matrix_json(tmp_path):
    M = IntersectionMatrix(("C", "D"), ((F(-3, 2), F(1, 2)), (F(1, 2), -1)))
    path = tmp_path / "m.json"
    path.write_text(json.dumps(M.to_json()))
    assert load_intersection_matrix(path) == M
    assert M.to_json()["matrix"][0] == ["-3/2", "1/2"]
    bad = tmp_path / "bad.json"
    bad.write_text('{"labels": ["a"],\n "matrix": [["x"]]}')
    with pytest.raises(IntersectionMatrixError, match="'matrix'"):
        load_intersection_matrix(bad)


seeds = st.integers(0, 10**6)


def random_correspondence(rng, M):
    r = M.rank
    off = [[F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(r)] for _ in range(r)]
    return Correspondence(M, F(rng.randint(-2, 2), rng.randint(1, 2)), off)


@given(seeds, st.integers(1, 4))
def test_random_projectors(seed, r):
    rng = random.Random(seed)
    M = random_negative_definite(rng, r)
    P = mumford_projector(M)
    Q = Correspondence.delta(M) - P
    assert is_idempotent(P)
    assert is_idempotent(Q)
    assert compose(P, Q).is_zero() and compose(Q, P).is_zero()
    assert check_orthogonality(invert(M), M)


@given(seeds, st.integers(0, 3))
def test_compose_associative_and_bilinear(seed, r):
    rng = random.Random(seed)
    M = random_negative_definite(rng, r) if r else IntersectionMatrix((), ())
    a, b, c = (random_correspondence(rng, M) for _ in range(3))
    assert compose(compose(c, b), a) == compose(c, compose(b, a))
    assert compose(a, b + c) == compose(a, b) + compose(a, c)
