"""Exact univariate integer polynomials in the Hodge variable q.

Every quantity in this package (E-polynomials of varieties, their equivariant
refinements, point-count predictions) is ultimately a polynomial in a single
variable q with integer coefficients.  This module provides that common
currency: a dense, immutable, arbitrary-precision polynomial type with ring
arithmetic, exact evaluation, and the symmetric-product series expansion.

Coefficients are stored ascending (index i holds the coefficient of q^i) with
trailing zeros stripped, so equal polynomials compare equal structurally.
Degrees in this package stay small (<= 16), which makes the dense
representation and schoolbook convolution the right tool.

>>> (Q - 1) * (Q + 1)
Poly('q^2 - 1')
>>> Poly([0, -1, 0, 1]).evaluate(7)
336
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

IntoPoly = Union["Poly", int]


class Poly:
    """Integer polynomial in q, canonical form (no stored trailing zeros)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be ints, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> Poly:
        return Poly()

    @staticmethod
    def one() -> Poly:
        return Poly([1])

    @staticmethod
    def const(c: int) -> Poly:
        return Poly([c])

    @staticmethod
    def monomial(degree: int, coeff: int = 1) -> Poly:
        if degree < 0:
            raise ValueError("degree must be >= 0")
        return Poly([0] * degree + [coeff])

    @staticmethod
    def _coerce(x: IntoPoly) -> Poly:
        if isinstance(x, Poly):
            return x
        if isinstance(x, int):
            return Poly([x])
        return NotImplemented

    # -- basic queries -------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    # -- ring arithmetic -----------------------------------------------------

    def __add__(self, other: IntoPoly) -> Poly:
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: IntoPoly) -> Poly:
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: IntoPoly) -> Poly:
        return Poly._coerce(other) - self

    def __mul__(self, other: IntoPoly) -> Poly:
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Poly:
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exact_div(self, k: int) -> Poly:
        """Divide every coefficient by k, requiring exact divisibility.

        Used where a formula carries a rational factor that is provably
        integral (e.g. halving an always-even count).
        """
        if k == 0:
            raise ZeroDivisionError("division of Poly by zero")
        out = []
        for c in self.coeffs:
            d, r = divmod(c, k)
            if r:
                raise ValueError(f"coefficient {c} not divisible by {k}")
            out.append(d)
        return Poly(out)

    def evaluate(self, x: int) -> int:
        """Exact Horner evaluation at an integer point."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- comparisons / hashing ----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- rendering ------------------------------------------------------------

    def _terms(self) -> list[tuple[int, int]]:
        # (degree, coefficient) pairs, descending degree, zero coeffs skipped
        return [(i, c) for i, c in reversed(list(enumerate(self.coeffs))) if c != 0]

    def to_ascii(self) -> str:
        """Plain-text rendering, descending degree, e.g. 'q^3 - q'."""
        terms = self._terms()
        if not terms:
            return "0"
        parts = []
        for pos, (deg, c) in enumerate(terms):
            mag = abs(c)
            if deg == 0:
                body = str(mag)
            elif deg == 1:
                body = "q" if mag == 1 else f"{mag}*q"
            else:
                body = f"q^{deg}" if mag == 1 else f"{mag}*q^{deg}"
            if pos == 0:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def to_latex(self) -> str:
        """LaTeX rendering, descending degree, e.g. 'q^{3}-q'."""
        terms = self._terms()
        if not terms:
            return "0"
        out = ""
        for pos, (deg, c) in enumerate(terms):
            mag = abs(c)
            if deg == 0:
                body = str(mag)
            elif deg == 1:
                body = "q" if mag == 1 else f"{mag}q"
            else:
                body = f"q^{{{deg}}}" if mag == 1 else f"{mag}q^{{{deg}}}"
            if pos == 0:
                out += body if c > 0 else "-" + body
            else:
                out += ("+" if c > 0 else "-") + body
        return out

    def __str__(self) -> str:
        return self.to_ascii()

    def __repr__(self) -> str:
        return f"Poly('{self.to_ascii()}')"


#: The variable q itself.
Q = Poly([0, 1])

ZERO = Poly()
ONE = Poly([1])


def sym_projective_epoly(m: int, r: int) -> Poly:
    """E-polynomial of the r-th symmetric product of projective m-space.

    Expands the generating series prod_{i=0..m} 1/(1 - q^i t) to order r in t
    and returns the t^r coefficient.  For r = 1 this is 1 + q + ... + q^m.

    >>> sym_projective_epoly(2, 2)
    Poly('q^4 + q^3 + 2*q^2 + q + 1')
    """
    if m < 0 or r < 0:
        raise ValueError("m and r must be >= 0")
    # series[k] = t^k coefficient; multiplying by 1/(1 - q^i t) is the
    # cumulative recurrence new[k] = old[k] + q^i * new[k-1].
    series: list[Poly] = [ONE] + [ZERO] * r
    for i in range(m + 1):
        qi = Poly.monomial(i) if i else ONE
        for k in range(1, r + 1):
            series[k] = series[k] + qi * series[k - 1]
    return series[r]


def projective_epoly(m: int) -> Poly:
    """E-polynomial of projective m-space: 1 + q + ... + q^m."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return Poly([1] * (m + 1))


def special_linear_epoly(r: int) -> Poly:
    """E-polynomial of SL_r over the complex numbers.

    (q^r - 1)(q^r - q) ... (q^r - q^{r-2}) * q^{r-1}; equals the order of
    SL_r over a field with q elements when evaluated at a prime power.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    out = Poly.monomial(r - 1)
    qr = Poly.monomial(r)
    for i in range(r - 1):
        out = out * (qr - Poly.monomial(i))
    return out


def general_linear_epoly(r: int) -> Poly:
    """E-polynomial of GL_r: (q^r - 1)(q^r - q) ... (q^r - q^{r-1})."""
    if r < 1:
        raise ValueError("r must be >= 1")
    out = ONE
    qr = Poly.monomial(r)
    for i in range(r):
        out = out * (qr - Poly.monomial(i))
    return out


def poly_product(factors: Sequence[IntoPoly]) -> Poly:
    out = ONE
    for f in factors:
        out = out * f
    return out
