"""Formal motives: sums of products of symmetric powers of Hodge atoms.

An atom is a :class:`HodgeDatum`, an abstract smooth variety known only
through its Hodge numbers.  A :class:`MotiveTerm` is a product of symmetric
powers of atoms twisted ``k`` times by the Lefschetz motive, and a
:class:`MotiveSum` is a formal integer combination of terms.

Three realizations are provided.  The Poincare and Hodge realizations are
certified only for proper atoms; the Euler realization (and hence the rank of
a sum of contractible pieces) is defined for every atom.

Twist conventions: ``[T](k)`` multiplies the Poincare polynomial by
``z**(2k)`` and the Hodge polynomial by ``(x*y)**k``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Mapping, Union

from .series import (
    EULER_VARS,
    HODGE_VARS,
    POINCARE_VARS,
    GradedPoly,
    TruncatedSeries,
    binomial,
    coefficient,
    euler_factor,
    series_mul,
)


class RankOnlyError(ValueError):
    """A graded realization was requested for a non-proper atom."""


class HodgeDataError(ValueError):
    """Malformed Hodge datum input."""


@dataclass(frozen=True)
class HodgeDatum:
    """Hodge numbers ``h[p][q]`` of a smooth variety of dimension ``dim``."""

    name: str
    dim: int
    proper: bool
    hodge: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        grid = tuple(tuple(int(x) for x in row) for row in self.hodge)
        size = self.dim + 1
        if self.dim < 0:
            raise HodgeDataError(f"{self.name}: negative dimension")
        if len(grid) != size or any(len(row) != size for row in grid):
            raise HodgeDataError(
                f"{self.name}: hodge grid must be {size}x{size} for dim {self.dim}"
            )
        for p in range(size):
            for q in range(size):
                if grid[p][q] < 0:
                    raise HodgeDataError(f"{self.name}: negative h^{{{p},{q}}}")
                if grid[p][q] != grid[q][p]:
                    raise HodgeDataError(
                        f"{self.name}: asymmetric grid at (p,q)=({p},{q}): "
                        f"h^{{{p},{q}}}={grid[p][q]} but h^{{{q},{p}}}={grid[q][p]}"
                    )
        object.__setattr__(self, "hodge", grid)

    @property
    def betti(self) -> tuple[int, ...]:
        b = [0] * (2 * self.dim + 1)
        for p, row in enumerate(self.hodge):
            for q, h in enumerate(row):
                b[p + q] += h
        return tuple(b)

    @property
    def euler(self) -> int:
        return sum((-1) ** i * b for i, b in enumerate(self.betti))

    def poincare(self) -> GradedPoly:
        return GradedPoly(POINCARE_VARS, {(i,): b for i, b in enumerate(self.betti)})

    def hodge_poly(self) -> GradedPoly:
        return GradedPoly(
            HODGE_VARS,
            {(p, q): h for p, row in enumerate(self.hodge) for q, h in enumerate(row)},
        )

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "proper": self.proper,
            "hodge": [list(row) for row in self.hodge],
        }

    @classmethod
    def from_json(cls, data: Mapping, source: str = "<input>") -> "HodgeDatum":
        if not isinstance(data, Mapping):
            raise HodgeDataError(f"{source}: expected a JSON object")
        for key, kind in (("name", str), ("dim", int), ("proper", bool), ("hodge", list)):
            if key not in data:
                raise HodgeDataError(f"{source}: missing field '{key}'")
            value = data[key]
            if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
                raise HodgeDataError(f"{source}: field '{key}' must be {kind.__name__}")
        for p, row in enumerate(data["hodge"]):
            if not isinstance(row, list):
                raise HodgeDataError(f"{source}: field 'hodge' row {p} must be a list")
            for q, x in enumerate(row):
                if not isinstance(x, int) or isinstance(x, bool):
                    raise HodgeDataError(f"{source}: field 'hodge' entry ({p},{q}) must be int")
        try:
            return cls(data["name"], data["dim"], data["proper"], data["hodge"])
        except HodgeDataError as exc:
            raise HodgeDataError(f"{source}: {exc}") from None

    def __str__(self) -> str:
        return self.name


def load_hodge_datum(path: Union[str, Path]) -> HodgeDatum:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise HodgeDataError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    return HodgeDatum.from_json(data, source=str(path))


def point() -> HodgeDatum:
    return HodgeDatum("pt", 0, True, ((1,),))


def projective_space(n: int) -> HodgeDatum:
    return HodgeDatum(
        f"P{n}", n, True, tuple(tuple(int(p == q) for q in range(n + 1)) for p in range(n + 1))
    )


def curve(genus: int, name: str | None = None) -> HodgeDatum:
    return HodgeDatum(name or f"C{genus}", 1, True, ((1, genus), (genus, 1)))


def k3_surface() -> HodgeDatum:
    return HodgeDatum("K3", 2, True, ((1, 0, 1), (0, 20, 0), (1, 0, 1)))


def abelian_surface() -> HodgeDatum:
    return HodgeDatum("Ab", 2, True, ((1, 2, 1), (2, 4, 2), (1, 2, 1)))


def affine_quotient(dim: int) -> HodgeDatum:
    """``C^dim / Gamma``: contractible, open, cohomology Q in degree 0."""
    grid = [[0] * (dim + 1) for _ in range(dim + 1)]
    grid[0][0] = 1
    return HodgeDatum(f"C^{dim}/G", dim, False, grid)


def ade_resolution(r: int) -> HodgeDatum:
    """Minimal resolution of a simple surface singularity with ``r`` exceptional curves.

    It retracts onto the tree of curves, so its Betti numbers are ``(1, 0, r, 0, 0)``.
    """
    return HodgeDatum(f"res{r}", 2, False, ((1, 0, 0), (0, r, 0), (0, 0, 0)))


def a1_resolution() -> HodgeDatum:
    return ade_resolution(1)


# motive terms and sums --------------------------------------------------


def _atom_key(atom: HodgeDatum) -> tuple:
    return (atom.name, atom.dim, atom.proper, atom.hodge)


@dataclass(frozen=True)
class MotiveTerm:
    """``prod Sym^m(atom)`` twisted ``twist`` times; factors with ``m = 0`` vanish."""

    factors: tuple[tuple[HodgeDatum, int], ...] = ()
    twist: int = 0

    def __post_init__(self):
        if self.twist < 0:
            raise ValueError("twist must be nonnegative")
        kept = []
        for atom, m in self.factors:
            if m < 0:
                raise ValueError("symmetric power must be nonnegative")
            if m:
                kept.append((atom, int(m)))
        kept.sort(key=lambda f: (_atom_key(f[0]), f[1]))
        object.__setattr__(self, "factors", tuple(kept))

    @property
    def dimension(self) -> int:
        return sum(m * atom.dim for atom, m in self.factors) + self.twist

    @property
    def atoms(self) -> tuple[HodgeDatum, ...]:
        return tuple(atom for atom, _ in self.factors)

    def twisted(self, k: int) -> "MotiveTerm":
        return MotiveTerm(self.factors, self.twist + k)

    def __mul__(self, other: "MotiveTerm") -> "MotiveTerm":
        return MotiveTerm(self.factors + other.factors, self.twist + other.twist)

    def _sort_key(self) -> tuple:
        return (self.twist, tuple((_atom_key(a), m) for a, m in self.factors))

    def __str__(self) -> str:
        body = " x ".join(a.name if m == 1 else f"{a.name}^({m})" for a, m in self.factors)
        body = f"[{body or 'pt'}]"
        return body if not self.twist else f"{body}({self.twist})"


class MotiveSum:
    """Formal integer combination of :class:`MotiveTerm`; zeros are dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[MotiveTerm, int], Iterable[tuple[MotiveTerm, int]]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Counter = Counter()
        for term, mult in items:
            acc[term] += int(mult)
        self._terms = {t: c for t, c in acc.items() if c}

    @classmethod
    def of(cls, *terms: MotiveTerm) -> "MotiveSum":
        return cls((t, 1) for t in terms)

    @classmethod
    def point(cls) -> "MotiveSum":
        return cls.of(MotiveTerm())

    def items(self) -> list[tuple[MotiveTerm, int]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0]._sort_key())

    def terms(self) -> dict[MotiveTerm, int]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "MotiveSum") -> "MotiveSum":
        return MotiveSum(list(self._terms.items()) + list(other._terms.items()))

    def __mul__(self, other: "MotiveSum") -> "MotiveSum":
        return MotiveSum(
            (t1 * t2, c1 * c2)
            for t1, c1 in self._terms.items()
            for t2, c2 in other._terms.items()
        )

    def scale(self, k: int) -> "MotiveSum":
        return MotiveSum((t, c * k) for t, c in self._terms.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, MotiveSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"MotiveSum({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for term, c in self.items():
            parts.append(str(term) if c == 1 else f"{c}*{term}")
        return " + ".join(parts)


def tate_twist(M: MotiveSum, k: int) -> MotiveSum:
    if k < 0:
        raise ValueError("twist must be nonnegative")
    return MotiveSum((t.twisted(k), c) for t, c in M.items())


# symmetric powers -----------------------------------------------------------


def _require_proper(atom: HodgeDatum) -> None:
    if not atom.proper:
        raise RankOnlyError(
            f"atom {atom.name!r} is not proper: graded realizations are not certified; "
            "use realize_euler (rank-only) instead"
        )


@lru_cache(maxsize=None)
def _sym_poincare_table(atom: HodgeDatum, m: int) -> tuple[GradedPoly, ...]:
    s = TruncatedSeries.one(("t",), (m,), POINCARE_VARS)
    for i, b in enumerate(atom.betti):
        if b:
            e = b if i % 2 else -b
            s = series_mul(s, euler_factor(((1,), GradedPoly.monomial(POINCARE_VARS, (i,))), e, (m,)))
    return tuple(coefficient(s, (k,)) for k in range(m + 1))


@lru_cache(maxsize=None)
def _sym_hodge_table(atom: HodgeDatum, m: int) -> tuple[GradedPoly, ...]:
    s = TruncatedSeries.one(("t",), (m,), HODGE_VARS)
    for p, row in enumerate(atom.hodge):
        for q, h in enumerate(row):
            if h:
                eps = 1 if (p + q) % 2 else -1
                s = series_mul(
                    s, euler_factor(((1,), GradedPoly.monomial(HODGE_VARS, (p, q))), eps * h, (m,))
                )
    return tuple(coefficient(s, (k,)) for k in range(m + 1))


def sym_poincare(atom: HodgeDatum, m: int) -> GradedPoly:
    """Poincare polynomial of ``Sym^m(atom)`` by Macdonald's formula."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return _sym_poincare_table(atom, m)[m]


def sym_hodge(atom: HodgeDatum, m: int) -> GradedPoly:
    """Hodge polynomial of ``Sym^m(atom)``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return _sym_hodge_table(atom, m)[m]


def sym_euler(e: int, m: int) -> int:
    """Euler characteristic of ``Sym^m`` of a space with Euler characteristic ``e``."""
    return binomial(-e, m) * (-1) ** m


# realizations -------------------------------------------------------------------


def realize_poincare(M: MotiveSum) -> GradedPoly:
    total = GradedPoly.zero(POINCARE_VARS)
    for term, c in M.items():
        poly = GradedPoly.monomial(POINCARE_VARS, (2 * term.twist,), c)
        for atom, m in term.factors:
            _require_proper(atom)
            poly = poly * sym_poincare(atom, m)
        total = total + poly
    return total


def realize_hodge(M: MotiveSum) -> GradedPoly:
    total = GradedPoly.zero(HODGE_VARS)
    for term, c in M.items():
        poly = GradedPoly.monomial(HODGE_VARS, (term.twist, term.twist), c)
        for atom, m in term.factors:
            _require_proper(atom)
            poly = poly * sym_hodge(atom, m)
        total = total + poly
    return total


def realize_euler(M: MotiveSum) -> int:
    total = 0
    for term, c in M.items():
        value = c
        for atom, m in term.factors:
            value *= sym_euler(atom.euler, m)
        total += value
    return total


MODES = ("poincare", "hodge", "euler")


def realize(M: MotiveSum, mode: str) -> GradedPoly:
    """Realization in ``mode``, always returned as a :class:`GradedPoly`."""
    if mode == "poincare":
        return realize_poincare(M)
    if mode == "hodge":
        return realize_hodge(M)
    if mode == "euler":
        return GradedPoly.constant(EULER_VARS, realize_euler(M))
    raise ValueError(f"unknown realization mode {mode!r}; expected one of {MODES}")


def poly_vars_for(mode: str) -> tuple[str, ...]:
    return {"poincare": POINCARE_VARS, "hodge": HODGE_VARS, "euler": EULER_VARS}[mode]
