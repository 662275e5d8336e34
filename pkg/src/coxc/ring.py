"""Exact arithmetic in Z[sqrt2, sqrt3].

Elements are ``a + b*sqrt2 + c*sqrt3 + d*sqrt6`` with integer coordinates.
Every value ``2*cos(pi/m)`` for ``m`` in {2, 3, 4, 6, inf} lives here, which
is all the geometric representation of a crystallographic Coxeter group needs.
"""

from __future__ import annotations

from typing import NamedTuple


def _sign_sqrt2(u: int, v: int) -> int:
    """Sign of ``u + v*sqrt2``."""
    su = (u > 0) - (u < 0)
    sv = (v > 0) - (v < 0)
    if su == sv or sv == 0:
        return su
    if su == 0:
        return sv
    # opposite signs: compare u^2 with 2 v^2
    d = u * u - 2 * v * v
    return su if d > 0 else sv


class Z23(NamedTuple):
    a: int = 0
    b: int = 0
    c: int = 0
    d: int = 0

    @classmethod
    def of(cls, x: int | Z23) -> Z23:
        return x if isinstance(x, Z23) else cls(x, 0, 0, 0)

    def __add__(self, other):
        o = Z23.of(other)
        return Z23(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self):
        return Z23(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        return self + (-Z23.of(other))

    def __rsub__(self, other):
        return Z23.of(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return Z23(self.a * other, self.b * other, self.c * other, self.d * other)
        a, b, c, d = self
        e, f, g, h = other
        return Z23(
            a * e + 2 * b * f + 3 * c * g + 6 * d * h,
            a * f + b * e + 3 * c * h + 3 * d * g,
            a * g + c * e + 2 * b * h + 2 * d * f,
            a * h + d * e + b * g + c * f,
        )

    __rmul__ = __mul__

    def times_sqrt2(self) -> Z23:
        a, b, c, d = self
        return Z23(2 * b, a, 2 * d, c)

    def times_sqrt3(self) -> Z23:
        a, b, c, d = self
        return Z23(3 * c, 3 * d, a, b)

    def sign(self) -> int:
        """Exact sign (-1, 0 or 1), decided with integer comparisons only."""
        # write as X + sqrt3*Y with X, Y in Z[sqrt2]
        sx = _sign_sqrt2(self.a, self.b)
        sy = _sign_sqrt2(self.c, self.d)
        if sx == sy or sy == 0:
            return sx
        if sx == 0:
            return sy
        # X^2 - 3 Y^2, expanded in Z[sqrt2]
        a, b, c, d = self
        u = a * a + 2 * b * b - 3 * (c * c + 2 * d * d)
        v = 2 * a * b - 6 * c * d
        return sx if _sign_sqrt2(u, v) > 0 else sy

    def __float__(self) -> float:
        return self.a + self.b * 2**0.5 + self.c * 3**0.5 + self.d * 6**0.5

    def max_abs(self) -> int:
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))

    def __str__(self) -> str:
        parts = []
        for coef, unit in zip(self, ("", "√2", "√3", "√6")):
            if coef:
                parts.append(f"{coef:+d}{unit}" if unit else f"{coef:+d}")
        return "".join(parts).lstrip("+") or "0"


ZERO = Z23(0, 0, 0, 0)
ONE = Z23(1, 0, 0, 0)
SQRT2 = Z23(0, 1, 0, 0)
SQRT3 = Z23(0, 0, 1, 0)

# 2*cos(pi/m) for the crystallographic orders; 0 encodes infinity
TWO_COS = {2: ZERO, 3: ONE, 4: SQRT2, 6: SQRT3, 0: Z23(2, 0, 0, 0)}
