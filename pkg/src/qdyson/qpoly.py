"""Exact coefficient arithmetic: Laurent polynomials in q over the integers.

``QPoly`` stores a dense coefficient window together with the exponent of its
lowest term, so negative powers of q cost nothing extra.  ``QRat`` is a formal
numerator/denominator pair over ``QPoly``; it is never reduced, and equality is
decided by cross-multiplication.  Both types are immutable after construction.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence


class InexactDivisionError(ArithmeticError):
    """Exact polynomial division was requested but a remainder is left."""


class QPoly:
    """Laurent polynomial in q with arbitrary-precision integer coefficients.

    Canonical form: the zero polynomial has ``coeffs == ()`` and
    ``min_exp == 0``; otherwise the first and last entries of ``coeffs`` are
    nonzero, and ``coeffs[k]`` is the coefficient of ``q**(min_exp + k)``.
    Two polynomials are equal iff their canonical forms coincide.
    """

    __slots__ = ("min_exp", "coeffs")

    min_exp: int
    coeffs: tuple[int, ...]

    def __init__(self, min_exp: int = 0, coeffs: Sequence[int] = ()) -> None:
        lo, hi = 0, len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "min_exp", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "min_exp", min_exp + lo)
            object.__setattr__(self, "coeffs", tuple(coeffs[lo:hi]))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("QPoly is immutable")

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_exp(self) -> int:
        """Exponent of the highest term (undefined for zero)."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return self.min_exp + len(self.coeffs) - 1

    def coeff(self, e: int) -> int:
        """Coefficient of q**e."""
        k = e - self.min_exp
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def at_q1(self) -> int:
        """Value at q = 1."""
        return sum(self.coeffs)

    def as_int(self) -> int:
        """This polynomial as an integer; raises unless it is constant."""
        if not self.coeffs:
            return 0
        if self.min_exp == 0 and len(self.coeffs) == 1:
            return self.coeffs[0]
        raise ValueError(f"not a constant: {self.render()}")

    # -- ring operations -------------------------------------------------

    @staticmethod
    def _coerce(other) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly(0, (other,))
        return NotImplemented

    def __add__(self, other) -> "QPoly":
        other = QPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.max_exp, other.max_exp)
        out = [0] * (hi - lo + 1)
        for k, c in enumerate(self.coeffs):
            out[self.min_exp - lo + k] += c
        for k, c in enumerate(other.coeffs):
            out[other.min_exp - lo + k] += c
        return QPoly(lo, out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(self.min_exp, tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "QPoly":
        other = QPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QPoly":
        other = QPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "QPoly":
        other = QPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZERO
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return QPoly(self.min_exp + other.min_exp, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = ONE
        for _ in range(k):
            result = result * self
        return result

    def shifted(self, e: int) -> "QPoly":
        """Multiply by q**e (cheap exponent shift)."""
        if not self.coeffs:
            return self
        return QPoly(self.min_exp + e, self.coeffs)

    def __eq__(self, other) -> bool:
        other = QPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.min_exp == other.min_exp and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.min_exp, self.coeffs))

    # -- rendering -------------------------------------------------------

    def render(self) -> str:
        """Canonical text form: ascending exponents, ``c*q^e`` per term,
        ``q`` for exponent 1 and a bare coefficient for exponent 0, joined
        by " + " / " - "."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.min_exp + k
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif e == 1:
                body = f"{mag}*q"
            else:
                body = f"{mag}*q^{e}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"QPoly({self.min_exp}, {self.coeffs})"


ZERO = QPoly()
ONE = QPoly(0, (1,))


def const(c: int) -> QPoly:
    return QPoly(0, (c,))


def q_power(e: int, c: int = 1) -> QPoly:
    """c * q**e."""
    return QPoly(e, (c,))


def one_minus_q(e: int) -> QPoly:
    """1 - q**e (the zero polynomial when e == 0)."""
    if e == 0:
        return ZERO
    if e > 0:
        return QPoly(0, (1,) + (0,) * (e - 1) + (-1,))
    return QPoly(e, (-1,) + (0,) * (-e - 1) + (1,))


def divexact(num: QPoly, den: QPoly) -> QPoly:
    """Quotient num/den when it is again a Laurent polynomial over Z.

    Division runs from the lowest coefficient up; any nonzero remainder (or a
    non-integer quotient coefficient) raises ``InexactDivisionError``.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return ZERO
    nc = list(num.coeffs)
    dc = den.coeffs
    qlen = len(nc) - len(dc) + 1
    if qlen <= 0:
        raise InexactDivisionError(f"({num.render()}) not divisible by ({den.render()})")
    d0 = dc[0]
    quot = [0] * qlen
    for k in range(qlen):
        c = nc[k]
        if c % d0:
            raise InexactDivisionError(f"({num.render()}) not divisible by ({den.render()})")
        step = c // d0
        quot[k] = step
        if step:
            for j, dj in enumerate(dc):
                nc[k + j] -= step * dj
    if any(nc):
        raise InexactDivisionError(f"({num.render()}) not divisible by ({den.render()})")
    return QPoly(num.min_exp - den.min_exp, quot)


def q_pochhammer(m: int) -> QPoly:
    """(1 - q)(1 - q^2)...(1 - q^m)."""
    if m < 0:
        raise ValueError("negative length")
    result = ONE
    for k in range(1, m + 1):
        result = result * one_minus_q(k)
    return result


def multinomial(a: Iterable[int]) -> int:
    """(a_0 + ... + a_n)! / (a_0! ... a_n!)."""
    a = list(a)
    out = math.factorial(sum(a))
    for ai in a:
        out //= math.factorial(ai)
    return out


def q_multinomial(a: Iterable[int]) -> "QRat":
    """Formal quotient (q)_{a_0+...+a_n} / ((q)_{a_0} ... (q)_{a_n})."""
    a = list(a)
    den = ONE
    for ai in a:
        den = den * q_pochhammer(ai)
    return QRat(q_pochhammer(sum(a)), den)


def q_multinomial_poly(a: Iterable[int]) -> QPoly:
    """The q-multinomial coefficient as an honest polynomial (exact division)."""
    r = q_multinomial(a)
    return divexact(r.num, r.den)


class QRat:
    """Formal quotient of two ``QPoly`` values.

    No gcd reduction is performed, ever: ``num`` and ``den`` stay exactly as
    built, and equality means ``num1*den2 == num2*den1``.
    """

    __slots__ = ("num", "den")

    num: QPoly
    den: QPoly

    def __init__(self, num, den=ONE) -> None:
        num = QPoly._coerce(num)
        den = QPoly._coerce(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("QRat parts must be QPoly or int")
        if den.is_zero():
            raise ZeroDivisionError("QRat with zero denominator")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("QRat is immutable")

    @staticmethod
    def _coerce(other) -> "QRat":
        if isinstance(other, QRat):
            return other
        if isinstance(other, (QPoly, int)):
            return QRat(other)
        return NotImplemented

    def __add__(self, other) -> "QRat":
        other = QRat._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "QRat":
        return QRat(-self.num, self.den)

    def __sub__(self, other) -> "QRat":
        other = QRat._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "QRat":
        other = QRat._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = QRat._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def to_poly(self) -> QPoly:
        """Exact polynomial value; raises if the quotient is not polynomial."""
        return divexact(self.num, self.den)

    def render(self) -> str:
        """Polynomial rendering when the quotient divides out, else a
        parenthesised num/den pair."""
        try:
            return self.to_poly().render()
        except InexactDivisionError:
            return f"({self.num.render()}) / ({self.den.render()})"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"QRat({self.num!r}, {self.den!r})"
