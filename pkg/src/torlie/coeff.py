"""Exact arithmetic in the cyclotomic fields Q(zeta_r) for r in {1, 2, 3}.

Every scalar in this library is a ``CycNum``: a pair of rationals (a, b)
representing a + b*w with w = exp(2*pi*i/r).  For r = 1 and r = 2 the
basis is {1} (w collapses to 1 and -1 respectively); for r = 3 the basis
is {1, w} and products reduce through the minimal polynomial
w**2 = -1 - w.  All coordinates are `fractions.Fraction`, so arithmetic
is exact at arbitrary precision.

Scalars carry their order r and refuse to mix with scalars of a
different order; plain ints and Fractions coerce into any order.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

_ORDERS = (1, 2, 3)


class CycNum:
    """Element a + b*w of Q(zeta_r), stored in canonical coordinates."""

    __slots__ = ("order", "a", "b")

    def __init__(self, order: int, a=0, b=0):
        if order not in _ORDERS:
            raise ValueError(f"unsupported cyclotomic order {order!r}")
        a = Fraction(a)
        b = Fraction(b)
        if b:
            if order == 1:  # w = 1
                a, b = a + b, Fraction(0)
            elif order == 2:  # w = -1
                a, b = a - b, Fraction(0)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("CycNum is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "CycNum":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "CycNum":
        return cls(order, 1)

    @classmethod
    def omega(cls, order: int) -> "CycNum":
        """The primitive r-th root of unity of the field."""
        if order == 1:
            return cls(1, 1)
        if order == 2:
            return cls(2, -1)
        return cls(3, 0, 1)

    # -- helpers -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.order != self.order:
                raise ValueError(
                    f"cyclotomic order mismatch: {self.order} vs {other.order}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum(self.order, other)
        return None

    def is_zero(self) -> bool:
        return not (self.a or self.b)

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    # -- ring operations ---------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNum(self.order, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNum(self.order, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNum(self.order, o.a - self.a, o.b - self.b)

    def __neg__(self):
        return CycNum(self.order, -self.a, -self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.order < 3:
            return CycNum(self.order, self.a * o.a)
        a1, b1, a2, b2 = self.a, self.b, o.a, o.b
        # (a1 + b1 w)(a2 + b2 w) with w^2 = -1 - w
        return CycNum(3, a1 * a2 - b1 * b2, a1 * b2 + b1 * a2 - b1 * b2)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self.order < 3:
            return CycNum(self.order, 1 / self.a)
        # conj(a + b w) = (a - b) - b w;  norm = a^2 - a b + b^2
        norm = self.a * self.a - self.a * self.b + self.b * self.b
        return CycNum(3, (self.a - self.b) / norm, -self.b / norm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "CycNum":
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base = self.inverse()
            k = -k
        out = CycNum.one(self.order)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison / display ----------------------------------------

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, CycNum) else other
        if not isinstance(o, CycNum):
            return NotImplemented
        return self.order == o.order and self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.order, self.a, self.b))

    def __repr__(self):
        return f"CycNum({self.order}, {self.a!r}, {self.b!r})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        if self.a:
            parts.append(str(self.a))
        if self.b:
            if self.b == 1:
                w = "w"
            elif self.b == -1:
                w = "-w"
            else:
                w = f"{self.b}*w"
            if parts and self.b > 0:
                parts.append(f"+{w}")
            else:
                parts.append(w)
        return "".join(parts)


def omega_pow(order: int, exponent: int) -> CycNum:
    """w**exponent, using that it only depends on exponent mod order."""
    return CycNum.omega(order) ** (exponent % order)


def cyc_add(a: CycNum, b: CycNum) -> CycNum:
    return a + b


def cyc_mul(a: CycNum, b: CycNum) -> CycNum:
    return a * b


def cyc_pow(a: CycNum, k: int) -> CycNum:
    return a ** k
