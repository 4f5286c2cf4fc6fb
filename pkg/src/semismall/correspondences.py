"""Self-correspondences spanned by the diagonal and products of exceptional curves.

A :class:`Correspondence` is ``q*Delta + sum c[i][j] E_i x E_j`` over a fixed
configuration of curves with intersection matrix ``M``.  Composition on this
span is

    Delta o Delta = Delta
    Delta o (E_i x E_j) = (E_i x E_j) o Delta = E_i x E_j
    (E_k x E_l) o (E_i x E_j) = (E_j . E_k) E_i x E_l

where ``second o first`` applies ``first`` first.  With this rule the Mumford
projector ``Delta - sum Lambda_ij E_i x E_j`` (``Lambda = M^-1``) is
idempotent.

Matrices are tuples of tuples of exact rationals.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence, Union

from .series import Rational, StructureError, canonical, format_rational, parse_rational

Matrix = tuple[tuple[Rational, ...], ...]


class SingularMatrixError(ValueError):
    pass


class IntersectionMatrixError(ValueError):
    pass


# exact matrix helpers --------------------------------------------------------


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    out = tuple(tuple(canonical(Fraction(x) if isinstance(x, str) else x) for x in row) for row in rows)
    if any(len(row) != len(out) for row in out):
        raise StructureError("matrix must be square")
    return out


def identity(r: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(r)) for i in range(r))


def zeros(r: int) -> Matrix:
    return tuple((0,) * r for _ in range(r))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    r = len(a)
    if len(b) != r:
        raise StructureError("shape mismatch")
    return tuple(
        tuple(canonical(sum(a[i][k] * b[k][j] for k in range(r))) for j in range(r))
        for i in range(r)
    )


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(canonical(x + y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def matscale(a: Matrix, c: Rational) -> Matrix:
    return tuple(tuple(canonical(x * c) for x in row) for row in a)

def determinant(a: Matrix) -> Rational:
    """Exact determinant by fraction-valued Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in a]
    r = len(m)
    det = Fraction(1)
    for col in range(r):
        pivot = next((i for i in range(col, r) if m[i][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for i in range(col + 1, r):
            f = m[i][col] / m[col][col]
            if f:
                for j in range(col, r):
                    m[i][j] -= f * m[col][j]
    return canonical(det)

def inverse(a: Matrix) -> Matrix:
    """Exact Gauss-Jordan inverse."""
    r = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(r)] for i, row in enumerate(a)]
    for col in range(r):
        pivot = next((i for i in range(col, r) if m[i][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        m[col], m[pivot] = m[pivot], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for i in range(r):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return tuple(tuple(canonical(x) for x in row[r:]) for row in m)

# intersection matrices ---------------------------------------------------------

@dataclass(frozen=True)
class IntersectionMatrix:
    """Symmetric negative definite intersection matrix of curves ``labels``."""

    labels: tuple[str, ...]
    matrix: Matrix

    def __post_init__(self):
        labels = tuple(self.labels)
        matrix = as_matrix(self.matrix)
        if len(labels) != len(matrix):
            raise IntersectionMatrixError(
                f"{len(labels)} labels for a {len(matrix)}x{len(matrix)} matrix"
            )
        if len(set(labels)) != len(labels):
            raise IntersectionMatrixError("curve labels must be distinct")
        for i in range(len(matrix)):
            for j in range(i):
                if matrix[i][j] != matrix[j][i]:
                    raise IntersectionMatrixError(f"matrix not symmetric at ({i},{j})")
        for k in range(1, len(matrix) + 1):
            minor = determinant(tuple(row[:k] for row in matrix[:k]))
            if (-1) ** k * minor <= 0:
                raise IntersectionMatrixError(
                    f"matrix not negative definite: leading minor of order {k} is "
                    f"{format_rational(minor)}"
                )
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "matrix", matrix)

    @property
    def rank(self) -> int:
        return len(self.labels)

    def to_json(self) -> dict:
        return {
            "labels": list(self.labels),
            "matrix": [[format_rational(x) for x in row] for row in self.matrix],
        }

    @classmethod
    def from_json(cls, data, source: str = "<input>") -> "IntersectionMatrix":
        if not isinstance(data, dict) or "labels" not in data or "matrix" not in data:
            raise IntersectionMatrixError(f"{source}: expected fields 'labels' and 'matrix'")
        try:
            rows = [[parse_rational(x) for x in row] for row in data["matrix"]]
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise IntersectionMatrixError(f"{source}: field 'matrix': {exc}") from None
        try:
            return cls(tuple(data["labels"]), rows)
        except (IntersectionMatrixError, StructureError) as exc:
            raise IntersectionMatrixError(f"{source}: {exc}") from None

def load_intersection_matrix(path: Union[str, Path]) -> IntersectionMatrix:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise IntersectionMatrixError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    return IntersectionMatrix.from_json(data, source=str(path))

def dynkin_edges(kind: str, rank: int) -> list[tuple[int, int]]:
    """Edges of the Dynkin diagram, nodes numbered ``0 .. rank-1``.

    ``D_r``: a chain ``0 - ... - (r-4)`` ending at the branch node ``r-1``
    (listed last), which also meets the two short legs ``r-3`` and ``r-2``.
    ``E_r``: Bourbaki numbering shifted to start at 0, i.e. the chain
    ``0-2-3-4-...`` with node ``1`` attached to node ``3``.
    """
    kind = kind.upper()
    if kind == "A" and rank >= 1:
        return [(i, i + 1) for i in range(rank - 1)]
    if kind == "D" and rank >= 4:
        center = rank - 1
        edges = [(i, i + 1) for i in range(rank - 4)]
        edges += [(rank - 4, center), (rank - 3, center), (rank - 2, center)]
        return edges
    if kind == "E" and rank in (6, 7, 8):
        return [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, rank - 1)]
    raise ValueError(f"no Dynkin diagram of type {kind}{rank}")

def ade_intersection_matrix(kind: str, rank: int) -> IntersectionMatrix:
    """Negative of the Cartan matrix: ``E_i^2 = -2``, adjacent curves meet once."""
    edges = dynkin_edges(kind, rank)
    m = [[-2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in edges:
        m[i][j] = m[j][i] = 1
    labels = tuple(f"E{i + 1}" for i in range(rank))
    return IntersectionMatrix(labels, m)

def invert(M: IntersectionMatrix) -> Matrix:
    """``Lambda = M^-1``, exactly."""
    return inverse(M.matrix)

# correspondences -----------------------------------------------------------------

@dataclass(frozen=True)
class Correspondence:
    """``diagonal * Delta + sum off[i][j] E_i x E_j`` over ``context``."""

    context: IntersectionMatrix
    diagonal: Rational
    off: Matrix

    def __post_init__(self):
        off = as_matrix(self.off) if self.off else ()
        if len(off) != self.context.rank:
            raise StructureError("off-diagonal part does not match the configuration")
        object.__setattr__(self, "diagonal", canonical(self.diagonal))
        object.__setattr__(self, "off", off)

    @classmethod
    def delta(cls, context: IntersectionMatrix, q: Rational = 1) -> "Correspondence":
        return cls(context, q, zeros(context.rank))

    @classmethod
    def curve_product(cls, context: IntersectionMatrix, i: int, j: int, c: Rational = 1) -> "Correspondence":
        r = context.rank
        off = tuple(tuple(c if (a, b) == (i, j) else 0 for b in range(r)) for a in range(r))
        return cls(context, 0, off)

    def _check(self, other: "Correspondence") -> None:
        if self.context != other.context:
            raise StructureError("correspondences live over different configurations")

    def __add__(self, other: "Correspondence") -> "Correspondence":
        self._check(other)
        return Correspondence(self.context, self.diagonal + other.diagonal, matadd(self.off, other.off))

    def __neg__(self) -> "Correspondence":
        return Correspondence(self.context, -self.diagonal, matscale(self.off, -1))

    def __sub__(self, other: "Correspondence") -> "Correspondence":
        return self + (-other)

    def scale(self, c: Rational) -> "Correspondence":
        return Correspondence(self.context, self.diagonal * c, matscale(self.off, c))

    def is_zero(self) -> bool:
        return self.diagonal == 0 and all(x == 0 for row in self.off for x in row)

    def __str__(self) -> str:
        parts = []
        if self.diagonal:
            parts.append(_coef(self.diagonal) + "D")
        labels = self.context.labels
        for i, row in enumerate(self.off):
            for j, c in enumerate(row):
                if c:
                    parts.append(f"{_coef(c)}{labels[i]}x{labels[j]}")
        return " + ".join(parts).replace("+ -", "- ") or "0"

def _coef(c: Rational) -> str:
    if c in (1, -1):
        return "" if c == 1 else "-"
    text = format_rational(c)
    return f"({text})*" if "/" in text else f"{text}*"

def compose(second: Correspondence, first: Correspondence) -> Correspondence:
    """``second o first``: apply ``first``, then ``second``."""
    second._check(first)
    q1, q2 = first.diagonal, second.diagonal
    c1, c2 = first.off, second.off
    cross = matmul(matmul(c1, first.context.matrix), c2)
    off = matadd(matadd(matscale(c1, q2), matscale(c2, q1)), cross)
    return Correspondence(first.context, q1 * q2, off)

def mumford_projector(M: IntersectionMatrix) -> Correspondence:
    return Correspondence(M, 1, matscale(invert(M), -1))

def is_idempotent(C: Correspondence) -> bool:
    return compose(C, C) == C

def check_orthogonality(lam: Matrix, M: IntersectionMatrix) -> bool:
    """True iff ``Lambda . M`` is the identity."""
    lam = as_matrix(lam)
    if len(lam) != M.rank:
        return False
    return matmul(lam, M.matrix) == identity(M.rank)
