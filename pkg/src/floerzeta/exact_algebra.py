"""Exact integer/rational algebra: polynomials, rational functions, truncated
power series, product forms, integer matrices and a little number theory.

Nothing in here touches floating point.  Rationals are ``fractions.Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, isqrt
from typing import Iterable, Sequence

__all__ = [
    "mobius",
    "divisors",
    "IntMatrix",
    "mat_det",
    "mat_pow",
    "mat_trace",
    "charpoly_reversed",
    "IntPolynomial",
    "RationalFunction",
    "TruncatedSeries",
    "ProductForm",
    "QuadraticSurd",
    "series_exp",
    "series_log",
    "rational_to_series",
    "product_form_to_series",
]


# --------------------------------------------------------------------------
# number theory


def _factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def mobius(n: int) -> int:
    """Möbius function by trial division.

    >>> [mobius(k) for k in range(1, 11)]
    [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    """
    if n < 1:
        raise ValueError(f"mobius is defined for n >= 1, got {n}")
    factors = _factorize(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in ascending order."""
    if n < 1:
        raise ValueError(f"divisors is defined for n >= 1, got {n}")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


# --------------------------------------------------------------------------
# integer matrices


class _Immutable:
    """Copies of immutable values are the values themselves."""

    __slots__ = ()

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self


class IntMatrix(_Immutable):
    """Immutable square matrix of Python integers."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        k = len(rows)
        if k == 0 or any(len(r) != k for r in rows):
            raise ValueError("IntMatrix must be square with dimension >= 1")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    def __reduce__(self):
        return (IntMatrix, (self.rows,))

    @classmethod
    def identity(cls, k: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(k)] for i in range(k)])

    @classmethod
    def zero(cls, k: int) -> IntMatrix:
        return cls([[0] * k for _ in range(k)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.rows]})"

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def _check(self, other: IntMatrix) -> None:
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._check(other)
        return IntMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._check(other)
        return IntMatrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> IntMatrix:
        return IntMatrix([[-a for a in r] for r in self.rows])

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        self._check(other)
        cols = list(zip(*other.rows))
        return IntMatrix(
            [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows]
        )

    def scale(self, c: int) -> IntMatrix:
        return IntMatrix([[c * a for a in r] for r in self.rows])

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.dim))

    def det(self) -> int:
        return mat_det(self)

    def __pow__(self, n: int) -> IntMatrix:
        return mat_pow(self, n)


def mat_det(A: IntMatrix) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    k = A.dim
    m = [list(r) for r in A.rows]
    sign = 1
    prev = 1
    for i in range(k - 1):
        if m[i][i] == 0:
            for r in range(i + 1, k):
                if m[r][i] != 0:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[i][i]
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                # exact by Sylvester's identity
                m[r][c] = (m[r][c] * piv - m[r][i] * m[i][c]) // prev
            m[r][i] = 0
        prev = piv
    return sign * m[k - 1][k - 1]


def mat_pow(A: IntMatrix, n: int) -> IntMatrix:
    """``A**n`` by repeated squaring; ``A**0`` is the identity."""
    if n < 0:
        raise ValueError("negative matrix powers are not supported")
    result = IntMatrix.identity(A.dim)
    base = A
    while n:
        if n & 1:
            result = result @ base
        n >>= 1
        if n:
            base = base @ base
    return result


def mat_trace(A: IntMatrix) -> int:
    return A.trace()


def charpoly_reversed(A: IntMatrix) -> IntPolynomial:
    """The polynomial det(I - A*z), constant term 1.

    Faddeev-LeVerrier over the integers: every division is exact.
    """
    k = A.dim
    ident = IntMatrix.identity(k)
    # c[j] is the coefficient of z^j in det(I - A z), i.e. of x^(k-j) in det(xI - A)
    c = [1]
    M = IntMatrix.zero(k)
    for j in range(1, k + 1):
        M = A @ M + ident.scale(c[-1])
        t = (A @ M).trace()
        if t % j:
            raise ArithmeticError("Faddeev-LeVerrier produced a non-integer coefficient")
        c.append(-t // j)
    return IntPolynomial(c)


# --------------------------------------------------------------------------
# polynomials over Z


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPolynomial(_Immutable):
    """Dense univariate polynomial with integer coefficients, index = degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integer coefficient {c}")
                c = c.numerator
            cs.append(int(c))
        object.__setattr__(self, "coeffs", _trim(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    def __reduce__(self):
        return (IntPolynomial, (self.coeffs,))

    @classmethod
    def one_minus_z_power(cls, d: int) -> IntPolynomial:
        """1 - z**d."""
        return cls([1] + [0] * (d - 1) + [-1])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_polynomial(self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(other * c for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPolynomial:
        result = IntPolynomial([1])
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def primitive(self) -> IntPolynomial:
        """Content removed, leading coefficient positive."""
        if self.is_zero():
            return self
        g = self.content()
        if self.coeffs[-1] < 0:
            g = -g
        return IntPolynomial(c // g for c in self.coeffs)

    def divmod_rational(self, other: IntPolynomial) -> tuple[list[Fraction], list[Fraction]]:
        """Quotient and remainder over Q, as Fraction coefficient lists."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        lead = other.coeffs[-1]
        dq = len(rem) - len(other.coeffs)
        quo = [Fraction(0)] * max(dq + 1, 0)
        for k in range(dq, -1, -1):
            q = rem[k + other.degree] / lead
            quo[k] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= q * b
        while rem and rem[-1] == 0:
            rem.pop()
        return quo, rem

    def exact_div(self, other: IntPolynomial) -> IntPolynomial:
        """Quotient when ``other`` divides ``self`` with integral quotient."""
        quo, rem = self.divmod_rational(other)
        if rem:
            raise ArithmeticError(f"{other!r} does not divide {self!r}")
        return IntPolynomial(quo)

    def gcd(self, other: IntPolynomial) -> IntPolynomial:
        """Primitive gcd with positive leading coefficient (Euclid on primitive parts)."""
        a, b = self.primitive(), other.primitive()
        while not b.is_zero():
            _, rem = a.divmod_rational(b)
            if not rem:
                a, b = b, IntPolynomial()
                break
            den = reduce(lambda x, y: x * y // gcd(x, y), (r.denominator for r in rem), 1)
            a, b = b, IntPolynomial(r * den for r in rem).primitive()
        return a.primitive()


def _format_term(c: int, k: int, var: str) -> str:
    mag = abs(c)
    if k == 0:
        return str(mag)
    mono = var if k == 1 else f"{var}^{k}"
    return mono if mag == 1 else f"{mag}*{mono}"


def format_polynomial(coeffs: Sequence[int], var: str = "z") -> str:
    """Ascending-degree rendering, e.g. ``1 - 3*z + z^2``."""
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        term = _format_term(c, k, var)
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts) if parts else "0"


def _factor_render(p: IntPolynomial, var: str) -> list[str]:
    """Split off powers of (1 - z) and (1 + z) for readable output."""
    pieces = []
    for base, label in ((IntPolynomial([1, -1]), f"(1 - {var})"), (IntPolynomial([1, 1]), f"(1 + {var})")):
        e = 0
        while p.degree >= 1:
            quo, rem = p.divmod_rational(base)
            if rem:
                break
            p = IntPolynomial(quo)
            e += 1
        if e:
            pieces.append(label if e == 1 else f"{label}^{e}")
    if p != IntPolynomial([1]) or not pieces:
        if p == IntPolynomial([-1]) and pieces:
            pieces.insert(0, "-1")
        else:
            pieces.insert(0, f"({format_polynomial(p.coeffs, var)})")
    return pieces


# --------------------------------------------------------------------------
# rational functions


class RationalFunction(_Immutable):
    """Quotient of integer polynomials, expandable at z = 0.

    Canonical form: common polynomial factors cancelled, joint integer content
    removed, and the denominator's constant term positive.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: IntPolynomial, denominator: IntPolynomial | None = None):
        if denominator is None:
            denominator = IntPolynomial([1])
        if denominator[0] == 0:
            raise ValueError("denominator must have a nonzero constant term")
        if numerator.is_zero():
            num, den = IntPolynomial(), IntPolynomial([1])
        else:
            g = numerator.gcd(denominator)
            num, den = numerator.exact_div(g), denominator.exact_div(g)
            c = gcd(num.content(), den.content())
            if den[0] < 0:
                c = -c
            num = IntPolynomial(x // c for x in num.coeffs)
            den = IntPolynomial(x // c for x in den.coeffs)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    def __reduce__(self):
        return (RationalFunction, (self.numerator, self.denominator))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalFunction)
            and self.numerator == other.numerator
            and self.denominator == other.denominator
        )

    def __hash__(self) -> int:
        return hash((self.numerator, self.denominator))

    def __repr__(self) -> str:
        return f"RationalFunction({self.numerator!r}, {self.denominator!r})"

    def __mul__(self, other: RationalFunction) -> RationalFunction:
        return RationalFunction(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    def __truediv__(self, other: RationalFunction) -> RationalFunction:
        return RationalFunction(
            self.numerator * other.denominator, self.denominator * other.numerator
        )

    def render(self, var: str = "z") -> str:
        """Text form such as ``(1 - 3*z + z^2) / (1 - z)^2``."""
        num = " * ".join(_factor_render(self.numerator, var)) if not self.numerator.is_zero() else "0"
        if self.denominator == IntPolynomial([1]):
            return num
        return f"{num} / {' * '.join(_factor_render(self.denominator, var))}"

    __str__ = render


# --------------------------------------------------------------------------
# truncated power series


class TruncatedSeries(_Immutable):
    """Power series with exact rational coefficients known through ``z**order``.

    Binary operations produce the smaller of the two orders; nothing ever
    extends the precision it was given.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    def __reduce__(self):
        return (TruncatedSeries, (self.coeffs, self.order))

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls([1], order)

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside order {self.order}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def __mul__(self, other) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            return TruncatedSeries([c * a for a in self.coeffs], self.order)
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def derivative(self) -> TruncatedSeries:
        """Formal derivative; the order drops by one."""
        if self.order == 0:
            return TruncatedSeries([0], 0)
        return TruncatedSeries(
            [k * self.coeffs[k] for k in range(1, self.order + 1)], self.order - 1
        )

    def z_log_derivative(self) -> TruncatedSeries:
        """z * d/dz log(self); coefficient n is n times the n-th log coefficient."""
        g = series_log(self)
        return TruncatedSeries([k * g.coeffs[k] for k in range(self.order + 1)], self.order)


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    """exp of a series with zero constant term, via n f_n = sum_k k s_k f_{n-k}."""
    if s.coeffs[0] != 0:
        raise ValueError("series_exp needs a zero constant term")
    f = [Fraction(1)] + [Fraction(0)] * s.order
    ks = [k * s.coeffs[k] for k in range(s.order + 1)]
    for n in range(1, s.order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if ks[k]:
                acc += ks[k] * f[n - k]
        f[n] = acc / n
    return TruncatedSeries(f, s.order)


def series_log(s: TruncatedSeries) -> TruncatedSeries:
    """log of a series with constant term 1, via n g_n = n s_n - sum_{k<n} k g_k s_{n-k}."""
    if s.coeffs[0] != 1:
        raise ValueError("series_log needs constant term 1")
    g = [Fraction(0)] * (s.order + 1)
    for n in range(1, s.order + 1):
        acc = n * s.coeffs[n]
        for k in range(1, n):
            if g[k]:
                acc -= k * g[k] * s.coeffs[n - k]
        g[n] = acc / n
    return TruncatedSeries(g, s.order)


def rational_to_series(f: RationalFunction, order: int) -> TruncatedSeries:
    """Taylor expansion of ``f`` at 0 through ``z**order`` by long division."""
    if order < 0:
        raise ValueError("order must be non-negative")
    num, den = f.numerator, f.denominator
    d0 = den[0]
    if d0 == 0:
        raise ZeroDivisionError("denominator vanishes at z = 0")
    out: list[Fraction] = []
    for n in range(order + 1):
        acc = Fraction(num[n])
        for k in range(1, min(n, den.degree) + 1):
            acc -= den[k] * out[n - k]
        out.append(acc / d0)
    return TruncatedSeries(out, order)


# --------------------------------------------------------------------------
# product forms  prod_d (1 - z^d)^{e_d}


class ProductForm(_Immutable):
    """Formal product of factors (1 - z**d) ** e with rational exponents."""

    __slots__ = ("factors",)

    def __init__(self, factors: Iterable[tuple[int, Fraction | int]] = ()):
        merged: dict[int, Fraction] = {}
        for d, e in factors:
            d = int(d)
            if d < 1:
                raise ValueError(f"factor degree must be positive, got {d}")
            merged[d] = merged.get(d, Fraction(0)) + Fraction(e)
        object.__setattr__(
            self, "factors", tuple((d, e) for d, e in sorted(merged.items()) if e != 0)
        )

    def __setattr__(self, name, value):
        raise AttributeError("ProductForm is immutable")

    def __reduce__(self):
        return (ProductForm, (self.factors,))

    def __eq__(self, other) -> bool:
        return isinstance(other, ProductForm) and self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __mul__(self, other: ProductForm) -> ProductForm:
        return ProductForm(self.factors + other.factors)

    def __repr__(self) -> str:
        return f"ProductForm({[(d, str(e)) for d, e in self.factors]})"

    def render(self, var: str = "z") -> str:
        """Text form such as ``(1-z)^(-6) * (1-z^3)^(-2/3)``."""
        if not self.factors:
            return "1"
        parts = []
        for d, e in self.factors:
            base = f"(1-{var})" if d == 1 else f"(1-{var}^{d})"
            parts.append(base if e == 1 else f"{base}^({e})")
        return " * ".join(parts)

    __str__ = render


def product_form_to_series(p: ProductForm, order: int) -> TruncatedSeries:
    """Expand via exp(sum_d e_d log(1 - z^d)); exact for rational exponents."""
    log_coeffs = [Fraction(0)] * (order + 1)
    for d, e in p.factors:
        # log(1 - z^d) = -sum_j z^{dj} / j
        j = 1
        while d * j <= order:
            log_coeffs[d * j] -= e / j
            j += 1
    return series_exp(TruncatedSeries(log_coeffs, order))


# --------------------------------------------------------------------------
# quadratic surds (a + b*sqrt(D)) / c


@dataclass(frozen=True)
class QuadraticSurd:
    """Real number (a + b*sqrt(D)) / c with integers, D >= 0 squarefree-reduced, c > 0."""

    a: int
    b: int
    D: int
    c: int = 1

    def __post_init__(self):
        a, b, D, c = self.a, self.b, self.D, self.c
        if D < 0:
            raise ValueError("QuadraticSurd needs D >= 0")
        if c == 0:
            raise ZeroDivisionError("zero denominator")
        # pull square factors out of D
        s = 1
        k = 2
        while k * k <= D:
            while D % (k * k) == 0:
                D //= k * k
                s *= k
            k += 1
        b *= s
        if D in (0, 1):
            a, b, D = a + b * D, 0, 0
        if c < 0:
            a, b, c = -a, -b, -c
        g = gcd(gcd(a, b), c)
        object.__setattr__(self, "a", a // g)
        object.__setattr__(self, "b", b // g)
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "c", c // g)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.a, self.c)

    def __float__(self) -> float:
        return (self.a + self.b * self.D ** 0.5) / self.c

    def defining_polynomial(self) -> IntPolynomial:
        """Primitive integer polynomial (ascending coefficients) with this root."""
        if self.is_rational:
            return IntPolynomial([-self.a, self.c]).primitive()
        # c x - a = b sqrt(D)  =>  c^2 x^2 - 2ac x + a^2 - b^2 D = 0
        return IntPolynomial(
            [self.a * self.a - self.b * self.b * self.D, -2 * self.a * self.c, self.c * self.c]
        ).primitive()

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.as_fraction())
        sign = "+" if self.b > 0 else "-"
        rad = f"√{self.D}" if abs(self.b) == 1 else f"{abs(self.b)}√{self.D}"
        body = f"{self.a}{sign}{rad}" if self.a else (rad if self.b > 0 else f"-{rad}")
        return f"({body})/{self.c}" if self.c != 1 else body
