"""Exact arithmetic in the number field Q(theta), theta**4 == 2.

``theta`` is the real positive fourth root of two, so ``theta**2`` is
sqrt(2) (the loop parameter beta of the SU(3) A1 graph) and ``theta`` itself
is sqrt(beta), the modulus of every cell constant.  The field is real, hence
complex conjugation acts trivially; :meth:`Scalar.conjugate` exists so that
sesquilinear code reads correctly.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

Number = Union[int, Fraction, "Scalar"]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _sign_sqrt2(a: Fraction, b: Fraction) -> int:
    """Sign of a + b*sqrt(2)."""
    if a >= 0 and b >= 0:
        return 0 if (a == 0 and b == 0) else 1
    if a <= 0 and b <= 0:
        return -1
    # opposite signs: compare a**2 against 2*b**2
    d = a * a - 2 * b * b
    s = (d > 0) - (d < 0)
    return s if a > 0 else -s


class Scalar:
    """Element a0 + a1*theta + a2*theta**2 + a3*theta**3 with rational a_k."""

    __slots__ = ("_c", "_hash")

    def __init__(self, a0=0, a1=0, a2=0, a3=0):
        self._c = (Fraction(a0), Fraction(a1), Fraction(a2), Fraction(a3))
        self._hash = None

    @classmethod
    def _raw(cls, c: tuple) -> Scalar:
        s = object.__new__(cls)
        s._c = c
        s._hash = None
        return s

    @classmethod
    def coerce(cls, x: Number) -> Scalar:
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Rational)):
            return cls._raw((Fraction(x), _ZERO, _ZERO, _ZERO))
        raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")

    @classmethod
    def theta(cls) -> Scalar:
        return cls._raw((_ZERO, _ONE, _ZERO, _ZERO))

    @classmethod
    def sqrt2(cls) -> Scalar:
        return cls._raw((_ZERO, _ZERO, _ONE, _ZERO))

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self._c

    def is_zero(self) -> bool:
        c = self._c
        return not (c[0] or c[1] or c[2] or c[3])

    def is_rational(self) -> bool:
        c = self._c
        return not (c[1] or c[2] or c[3])

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- ring operations -------------------------------------------------

    def __add__(self, other: Number) -> Scalar:
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Rational)):
                c = self._c
                return Scalar._raw((c[0] + other, c[1], c[2], c[3]))
            return NotImplemented
        a, b = self._c, other._c
        return Scalar._raw((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        c = self._c
        return Scalar._raw((-c[0], -c[1], -c[2], -c[3]))

    def __sub__(self, other: Number) -> Scalar:
        if not isinstance(other, (Scalar, int, Rational)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Number) -> Scalar:
        return (-self) + other

    def __mul__(self, other: Number) -> Scalar:
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Rational)):
                c = self._c
                return Scalar._raw((c[0] * other, c[1] * other, c[2] * other, c[3] * other))
            return NotImplemented
        a, b = self._c, other._c
        if not (b[1] or b[2] or b[3]):
            r = b[0]
            return Scalar._raw((a[0] * r, a[1] * r, a[2] * r, a[3] * r))
        if not (a[1] or a[2] or a[3]):
            r = a[0]
            return Scalar._raw((b[0] * r, b[1] * r, b[2] * r, b[3] * r))
        a0, a1, a2, a3 = a
        b0, b1, b2, b3 = b
        # theta**4 = 2 folds degrees 4..6 back down
        return Scalar._raw((
            a0 * b0 + 2 * (a1 * b3 + a2 * b2 + a3 * b1),
            a0 * b1 + a1 * b0 + 2 * (a2 * b3 + a3 * b2),
            a0 * b2 + a1 * b1 + a2 * b0 + 2 * a3 * b3,
            a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
        ))

    __rmul__ = __mul__

    def conjugate(self) -> Scalar:
        return self

    def _galois_theta(self) -> Scalar:
        # theta -> -theta; fixes Q(sqrt 2)
        c = self._c
        return Scalar._raw((c[0], -c[1], c[2], -c[3]))

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise ZeroDivisionError("Scalar division by zero")
        if self.is_rational():
            return Scalar._raw((1 / self._c[0], _ZERO, _ZERO, _ZERO))
        x1 = self._galois_theta()
        d = self * x1  # lies in Q(sqrt 2)
        d0, d2 = d._c[0], d._c[2]
        norm = d0 * d0 - 2 * d2 * d2  # rational, nonzero
        d_conj = Scalar._raw((d0 / norm, _ZERO, -d2 / norm, _ZERO))
        return x1 * d_conj

    def __truediv__(self, other: Number) -> Scalar:
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDivisionError("Scalar division by zero")
            return self * (1 / Fraction(other))
        if not isinstance(other, Scalar):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Number) -> Scalar:
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> Scalar:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = Scalar._raw((_ONE, _ZERO, _ZERO, _ZERO))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self._c == other._c
        if isinstance(other, (int, Rational)):
            c = self._c
            return c[0] == other and not (c[1] or c[2] or c[3])
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            c = self._c
            self._hash = hash(c[0]) if not (c[1] or c[2] or c[3]) else hash(c)
        return self._hash

    def sign(self) -> int:
        """Exact sign of the real number this element denotes."""
        a0, a1, a2, a3 = self._c
        # split as p + theta*q with p, q in Q(sqrt 2)
        sp = _sign_sqrt2(a0, a2)
        sq = _sign_sqrt2(a1, a3)
        if sq == 0:
            return sp
        if sp == 0 or sp == sq:
            return sq if sp == 0 else sp
        # p**2 - sqrt(2) q**2 decides which part dominates
        d_rat = a0 * a0 + 2 * a2 * a2 - 4 * a1 * a3
        d_irr = 2 * a0 * a2 - a1 * a1 - 2 * a3 * a3
        return sp * _sign_sqrt2(d_rat, d_irr)

    def _cmp(self, other: Number) -> int:
        return (self - Scalar.coerce(other)).sign()

    def __lt__(self, other: Number) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: Number) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other: Number) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other: Number) -> bool:
        return self._cmp(other) >= 0

    def __float__(self) -> float:
        t = 2.0 ** 0.25
        a0, a1, a2, a3 = self._c
        return float(a0) + float(a1) * t + float(a2) * t * t + float(a3) * t ** 3

    # -- display ---------------------------------------------------------

    def __repr__(self) -> str:
        return f"Scalar({', '.join(str(x) for x in self._c)})"

    def __str__(self) -> str:
        names = ("", "θ", "θ²", "θ³")
        parts = []
        for coeff, name in zip(self._c, names):
            if not coeff:
                continue
            if not name:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(name)
            elif coeff == -1:
                parts.append("-" + name)
            else:
                parts.append(f"{coeff}{name}" if coeff.denominator == 1 else f"({coeff}){name}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> list[str]:
        return [str(x) for x in self._c]


ZERO = Scalar()
ONE = Scalar(1)
THETA = Scalar.theta()
SQRT2 = Scalar.sqrt2()


def scalar_sum(values: Iterable[Scalar]) -> Scalar:
    total = ZERO
    for v in values:
        total = total + v
    return total
