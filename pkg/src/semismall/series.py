"""Exact graded polynomials and box-truncated multivariate power series.

Coefficients are python ints or :class:`fractions.Fraction`; a rational with
denominator 1 is always stored as an ``int`` so that equality, hashing and
rendering are canonical.  Nothing in here ever touches floating point.

A :class:`GradedPoly` lives in one of three realizations, selected by its
variable names: ``("z",)`` for Poincare polynomials, ``("x", "y")`` for Hodge
polynomials and ``()`` for bare integers (Euler characteristics, ranks).

A :class:`TruncatedSeries` is a power series in ``t, s_1, ..., s_h`` whose
coefficients are graded polynomials.  It is truncated to a box: the exponent of
every series variable is bounded separately.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Rational = Union[int, Fraction]
Exponent = tuple[int, ...]

POINCARE_VARS: tuple[str, ...] = ("z",)
HODGE_VARS: tuple[str, ...] = ("x", "y")
EULER_VARS: tuple[str, ...] = ()
_ALLOWED_VARS = (POINCARE_VARS, HODGE_VARS, EULER_VARS)


class StructureError(ValueError):
    """Operands live over different variables or different contexts."""


class NonTerminationError(ValueError):
    """An expansion would produce infinitely many terms inside the bound."""


def canonical(c: Rational) -> Rational:
    """Return ``c`` as an exact rational in canonical form."""
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, str):
        return canonical(Fraction(c))
    raise TypeError(f"not an exact rational: {c!r}")


def format_rational(c: Rational) -> str:
    c = canonical(c)
    if isinstance(c, int):
        return str(c)
    return f"{c.numerator}/{c.denominator}"


def parse_rational(text: Union[str, int]) -> Rational:
    if isinstance(text, int) and not isinstance(text, bool):
        return text
    if not isinstance(text, str):
        raise TypeError(f"expected 'p/q' string, got {text!r}")
    return canonical(Fraction(text.strip()))


def binomial(e: int, k: int) -> int:
    """Generalized binomial coefficient ``e choose k`` for integer ``e``."""
    if k < 0:
        return 0
    if e >= 0:
        return math.comb(e, k)
    return (-1) ** k * math.comb(-e + k - 1, k)


class GradedPoly:
    """Sparse polynomial with exact rational coefficients.

    ``terms`` maps exponent tuples (one entry per variable) to coefficients.
    Zero coefficients are never stored.
    """

    __slots__ = ("variables", "_terms", "_hash")

    def __init__(
        self,
        variables: Sequence[str],
        terms: Union[Mapping[Exponent, Rational], Iterable[tuple[Exponent, Rational]]] = (),
    ):
        variables = tuple(variables)
        if variables not in _ALLOWED_VARS:
            raise StructureError(f"unsupported polynomial variables {variables!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        store: dict[Exponent, Rational] = {}
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(variables):
                raise StructureError(f"exponent {exp} does not match variables {variables}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent {exp}")
            c = canonical(c)
            if c:
                store[exp] = canonical(store.get(exp, 0) + c)
                if not store[exp]:
                    del store[exp]
        self.variables = variables
        self._terms = store
        self._hash = None

    # constructors -----------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "GradedPoly":
        return cls(variables)

    @classmethod
    def constant(cls, variables: Sequence[str], c: Rational = 1) -> "GradedPoly":
        return cls(variables, {(0,) * len(tuple(variables)): c})

    @classmethod
    def monomial(cls, variables: Sequence[str], exp: Exponent, c: Rational = 1) -> "GradedPoly":
        return cls(variables, {tuple(exp): c})

    @classmethod
    def _raw(cls, variables: tuple[str, ...], store: dict) -> "GradedPoly":
        # trusted fast path: store is already canonical and zero-free
        obj = cls.__new__(cls)
        obj.variables = variables
        obj._terms = store
        obj._hash = None
        return obj

    # mapping-like access ----------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, Rational]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, exp: Exponent) -> Rational:
        return self._terms.get(tuple(exp), 0)

    def __iter__(self) -> Iterator[Exponent]:
        return iter(sorted(self._terms))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    # arithmetic --------------------------------------------------------

    def _check(self, other: "GradedPoly") -> None:
        if self.variables != other.variables:
            raise StructureError(f"variables {self.variables} != {other.variables}")

    def _coerce(self, other) -> "GradedPoly":
        if isinstance(other, GradedPoly):
            self._check(other)
            return other
        return GradedPoly.constant(self.variables, canonical(other))

    def __add__(self, other) -> "GradedPoly":
        other = self._coerce(other)
        store = dict(self._terms)
        for exp, c in other._terms.items():
            v = canonical(store.get(exp, 0) + c)
            if v:
                store[exp] = v
            else:
                store.pop(exp, None)
        return GradedPoly._raw(self.variables, store)

    __radd__ = __add__

    def __neg__(self) -> "GradedPoly":
        return GradedPoly._raw(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "GradedPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "GradedPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "GradedPoly":
        if not isinstance(other, GradedPoly):
            c = canonical(other)
            if not c:
                return GradedPoly._raw(self.variables, {})
            return GradedPoly._raw(
                self.variables, {e: canonical(v * c) for e, v in self._terms.items()}
            )
        self._check(other)
        store: dict[Exponent, Rational] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                store[e] = store.get(e, 0) + c1 * c2
        return GradedPoly._raw(
            self.variables, {e: canonical(c) for e, c in store.items() if c}
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "GradedPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = GradedPoly.constant(self.variables)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, exp: Exponent) -> "GradedPoly":
        """Multiply by the monomial with exponent ``exp``."""
        return GradedPoly._raw(
            self.variables,
            {tuple(a + b for a, b in zip(e, exp)): c for e, c in self._terms.items()},
        )

    # evaluation ---------------------------------------------------------

    def evaluate(self, *values: Rational) -> Rational:
        if len(values) != len(self.variables):
            raise StructureError(f"expected {len(self.variables)} values")
        total: Rational = 0
        for exp, c in self._terms.items():
            term = c
            for v, e in zip(values, exp):
                term = term * v**e
            total += term
        return canonical(total)

    def diagonal(self) -> "GradedPoly":
        """Substitute ``x = y = z`` in a Hodge polynomial."""
        if self.variables != HODGE_VARS:
            raise StructureError("diagonal() needs an (x, y) polynomial")
        return GradedPoly(POINCARE_VARS, [((p + q,), c) for (p, q), c in self._terms.items()])

    def is_palindromic(self, degree: int) -> bool:
        """True iff ``z**degree * P(1/z) == P`` for a one-variable ``P``."""
        if len(self.variables) != 1:
            raise StructureError("palindromy is only defined in one variable")
        if self.is_zero():
            return True
        if self.degree() != degree or min(e[0] for e in self._terms) != 0:
            return False
        return all(self[(degree - e[0],)] == c for e, c in self._terms.items())

    # protocol ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, GradedPoly):
            return self.variables == other.variables and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == GradedPoly.constant(self.variables, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"GradedPoly({self.variables!r}, {str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp in sorted(self._terms, key=lambda e: (sum(e), e)):
            c = self._terms[exp]
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, exp) if e
            )
            if not mono:
                body = format_rational(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{format_rational(abs(c))}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> dict[str, Union[int, str]]:
        """Coefficient map keyed by comma-joined exponents."""
        return {
            ",".join(map(str, exp)): (c if isinstance(c, int) else format_rational(c))
            for exp, c in sorted(self._terms.items())
        }


def z_poly(coeffs: Mapping[int, Rational]) -> GradedPoly:
    """Shorthand for a Poincare polynomial given as ``{degree: coeff}``."""
    return GradedPoly(POINCARE_VARS, {(d,): c for d, c in coeffs.items()})


def xy_poly(coeffs: Mapping[tuple[int, int], Rational]) -> GradedPoly:
    return GradedPoly(HODGE_VARS, dict(coeffs))


class TruncatedSeries:
    """Power series in ``series_vars`` truncated to a box of exponents.

    Coefficients are :class:`GradedPoly` over ``poly_vars``.  Terms outside the
    box are dropped at construction, so arithmetic never reports them.
    """

    __slots__ = ("series_vars", "bounds", "poly_vars", "_coeffs")

    def __init__(
        self,
        series_vars: Sequence[str],
        bounds: Sequence[int],
        poly_vars: Sequence[str],
        coeffs: Union[Mapping[Exponent, GradedPoly], Iterable[tuple[Exponent, GradedPoly]]] = (),
    ):
        self.series_vars = tuple(series_vars)
        self.bounds = tuple(int(b) for b in bounds)
        self.poly_vars = tuple(poly_vars)
        if len(self.bounds) != len(self.series_vars):
            raise StructureError("one truncation bound per series variable")
        if any(b < 0 for b in self.bounds):
            raise ValueError("truncation bounds must be nonnegative")
        if len(set(self.series_vars)) != len(self.series_vars):
            raise StructureError("duplicate series variable")
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        store: dict[Exponent, GradedPoly] = {}
        for exp, poly in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(self.bounds):
                raise StructureError(f"exponent {exp} does not match {self.series_vars}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative series exponent {exp}")
            if not isinstance(poly, GradedPoly):
                poly = GradedPoly.constant(self.poly_vars, poly)
            elif poly.variables != self.poly_vars:
                raise StructureError(f"coefficient over {poly.variables}, expected {self.poly_vars}")
            if not self._inside(exp):
                continue
            acc = store.get(exp)
            poly = poly if acc is None else acc + poly
            if poly:
                store[exp] = poly
            else:
                store.pop(exp, None)
        self._coeffs = store

    def _inside(self, exp: Exponent) -> bool:
        return all(e <= b for e, b in zip(exp, self.bounds))

    @classmethod
    def one(cls, series_vars, bounds, poly_vars) -> "TruncatedSeries":
        return cls(series_vars, bounds, poly_vars, {(0,) * len(tuple(bounds)): GradedPoly.constant(poly_vars)})

    @classmethod
    def zero(cls, series_vars, bounds, poly_vars) -> "TruncatedSeries":
        return cls(series_vars, bounds, poly_vars)

    @classmethod
    def _raw(cls, series_vars, bounds, poly_vars, store) -> "TruncatedSeries":
        obj = cls.__new__(cls)
        obj.series_vars = series_vars
        obj.bounds = bounds
        obj.poly_vars = poly_vars
        obj._coeffs = store
        return obj

    def items(self):
        return sorted(self._coeffs.items())

    def support(self) -> list[Exponent]:
        return sorted(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def _check(self, other: "TruncatedSeries") -> None:
        if self.series_vars != other.series_vars:
            raise StructureError(f"series variables {self.series_vars} != {other.series_vars}")
        if self.poly_vars != other.poly_vars:
            raise StructureError(f"coefficient variables {self.poly_vars} != {other.poly_vars}")

    def _common_bounds(self, other: "TruncatedSeries") -> tuple[int, ...]:
        return tuple(min(a, b) for a, b in zip(self.bounds, other.bounds))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        bounds = self._common_bounds(other)
        return TruncatedSeries(
            self.series_vars, bounds, self.poly_vars,
            list(self._coeffs.items()) + list(other._coeffs.items()),
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries._raw(
            self.series_vars, self.bounds, self.poly_vars,
            {e: -p for e, p in self._coeffs.items()},
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries._raw(
            self.series_vars, self.bounds, self.poly_vars,
            {e: p * other for e, p in self._coeffs.items() if p * other},
        )

    def truncate(self, bounds: Sequence[int]) -> "TruncatedSeries":
        bounds = tuple(min(a, b) for a, b in zip(self.bounds, bounds))
        return TruncatedSeries(self.series_vars, bounds, self.poly_vars, self._coeffs)

    def restrict(self, keep: Sequence[str]) -> "TruncatedSeries":
        """Set every series variable not in ``keep`` to zero."""
        idx = [self.series_vars.index(v) for v in keep]
        drop = [i for i in range(len(self.series_vars)) if i not in idx]
        store = {
            tuple(e[i] for i in idx): p
            for e, p in self._coeffs.items()
            if all(e[i] == 0 for i in drop)
        }
        return TruncatedSeries(
            tuple(keep), tuple(self.bounds[i] for i in idx), self.poly_vars, store
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.series_vars == other.series_vars
            and self.bounds == other.bounds
            and self.poly_vars == other.poly_vars
            and self._coeffs == other._coeffs
        )

    def __hash__(self) -> int:
        return hash((self.series_vars, self.bounds, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        body = " + ".join(
            f"({p})*{_series_monomial(self.series_vars, e)}" for e, p in self.items()
        )
        return f"TruncatedSeries[{', '.join(self.series_vars)} <= {self.bounds}]({body or '0'})"


def _series_monomial(names: Sequence[str], exp: Exponent) -> str:
    mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(names, exp) if e)
    return mono or "1"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Exact Cauchy product, truncated to the componentwise minimum bound."""
    a._check(b)
    bounds = a._common_bounds(b)
    # iterate over the sparser operand on the inside
    outer, inner = (a, b) if len(a) >= len(b) else (b, a)
    inner_items = list(inner._coeffs.items())
    # accumulate raw coefficient dicts; canonicalize once at the end
    acc: dict[Exponent, dict[Exponent, Rational]] = {}
    for e1, p1 in outer._coeffs.items():
        if any(x > m for x, m in zip(e1, bounds)):
            continue
        t1 = list(p1._terms.items())
        for e2, p2 in inner_items:
            e = tuple(x + y for x, y in zip(e1, e2))
            if any(x > m for x, m in zip(e, bounds)):
                continue
            slot = acc.setdefault(e, {})
            for f2, c2 in p2._terms.items():
                for f1, c1 in t1:
                    f = tuple(x + y for x, y in zip(f1, f2))
                    slot[f] = slot.get(f, 0) + c1 * c2
    store: dict[Exponent, GradedPoly] = {}
    for e, slot in acc.items():
        terms = {f: canonical(c) for f, c in slot.items() if c}
        if terms:
            store[e] = GradedPoly._raw(a.poly_vars, terms)
    return TruncatedSeries._raw(a.series_vars, bounds, a.poly_vars, store)


def euler_factor(
    monomial: tuple[Exponent, GradedPoly],
    exponent: int,
    bound: Sequence[int],
    *,
    series_vars: Sequence[str] | None = None,
    sign: int | None = None,
) -> TruncatedSeries:
    """Expand ``(1 + sign*M)**exponent`` up to ``bound``.

    ``M`` is ``coeff * s**exp`` for ``monomial = (exp, coeff)``.  When ``sign``
    is omitted it follows the Euler-product convention ``sign = +1`` for
    ``exponent >= 0`` and ``sign = -1`` for ``exponent < 0``, so that
    ``(t, 1), -1`` expands the geometric series ``1/(1 - t)`` and
    ``(1 + eps*M)**(eps*h)`` needs no explicit sign.
    """
    exp, coeff = monomial
    exp = tuple(int(e) for e in exp)
    bound = tuple(int(b) for b in bound)
    if len(exp) != len(bound):
        raise StructureError("monomial exponent and bound have different lengths")
    if series_vars is None:
        series_vars = ("t",) + tuple(f"s{i}" for i in range(1, len(bound)))
    series_vars = tuple(series_vars)
    if not isinstance(coeff, GradedPoly):
        raise TypeError("monomial coefficient must be a GradedPoly")
    if sign is None:
        sign = 1 if exponent >= 0 else -1
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    poly_vars = coeff.variables
    if sum(exp) == 0:
        if exponent < 0 and coeff:
            raise NonTerminationError(
                "negative power of a factor with a degree-0 monomial never terminates"
            )
        kmax = max(exponent, 0)
    else:
        kmax = min((b // e for e, b in zip(exp, bound) if e > 0), default=0)
        if exponent >= 0:
            kmax = min(kmax, exponent)
    store: dict[Exponent, GradedPoly] = {}
    power = GradedPoly.constant(poly_vars)
    for k in range(kmax + 1):
        c = binomial(exponent, k) * sign**k
        if c and power:
            key = tuple(k * e for e in exp)
            store[key] = store[key] + power * c if key in store else power * c
        power = power * coeff
    return TruncatedSeries(series_vars, bound, poly_vars, store)


def coefficient(s: TruncatedSeries, multidegree: Sequence[int]) -> GradedPoly:
    """Coefficient of ``prod(var**deg)``; the zero polynomial if absent."""
    multidegree = tuple(int(d) for d in multidegree)
    if len(multidegree) != len(s.bounds):
        raise StructureError(f"multidegree {multidegree} does not match {s.series_vars}")
    if any(d < 0 or d > b for d, b in zip(multidegree, s.bounds)):
        raise IndexError(f"multidegree {multidegree} outside truncation bound {s.bounds}")
    poly = s._coeffs.get(multidegree)
    return poly if poly is not None else GradedPoly.zero(s.poly_vars)


def product(factors: Iterable[TruncatedSeries], one: TruncatedSeries) -> TruncatedSeries:
    out = one
    for f in factors:
        out = series_mul(out, f)
    return out
