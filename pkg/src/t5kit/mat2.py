"""2x2 matrices over exact scalars (Fraction, Interval, or AlgScalar).

The scalar type is whatever the entries are; operations only assume ring
arithmetic.  Rank decisions are offered for exact instantiations only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .exact import SignUndecided, Interval, rat_str, to_rat


@dataclass(frozen=True)
class Mat2:
    e11: object
    e12: object
    e21: object
    e22: object

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "Mat2":
        (a, b), (c, d) = rows
        return Mat2(a, b, c, d)

    @staticmethod
    def rational(rows: Sequence[Sequence]) -> "Mat2":
        (a, b), (c, d) = rows
        return Mat2(to_rat(a), to_rat(b), to_rat(c), to_rat(d))

    @staticmethod
    def zero() -> "Mat2":
        return Mat2(Fraction(0), Fraction(0), Fraction(0), Fraction(0))

    def entries(self) -> tuple:
        return (self.e11, self.e12, self.e21, self.e22)

    def rows(self) -> tuple[tuple, tuple]:
        return ((self.e11, self.e12), (self.e21, self.e22))

    def __add__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.e11 + other.e11, self.e12 + other.e12,
                    self.e21 + other.e21, self.e22 + other.e22)

    def __sub__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.e11 - other.e11, self.e12 - other.e12,
                    self.e21 - other.e21, self.e22 - other.e22)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.e11, -self.e12, -self.e21, -self.e22)

    def scale(self, c) -> "Mat2":
        return Mat2(c * self.e11, c * self.e12, c * self.e21, c * self.e22)

    def map(self, f: Callable) -> "Mat2":
        return Mat2(f(self.e11), f(self.e12), f(self.e21), f(self.e22))

    def to_float(self) -> "Mat2":
        def conv(x):
            return x.approx() if hasattr(x, "approx") else float(x)
        return self.map(conv)

    def flatten(self) -> tuple:
        """Row-major vector in 4-space, the flattening used for rank checks."""
        return self.entries()

    def render(self) -> list[list[str]]:
        return [[rat_str(self.e11), rat_str(self.e12)],
                [rat_str(self.e21), rat_str(self.e22)]]


def det2(m: Mat2):
    """Determinant in the entry scalar ring."""
    return m.e11 * m.e22 - m.e12 * m.e21


def _is_zero_scalar(x) -> bool:
    if isinstance(x, Interval):
        if x.contains_zero() and not (x.lo == x.hi == 0):
            raise SignUndecided(f"zero test undecided on {x}")
        return x.lo == x.hi == 0
    if hasattr(x, "is_zero"):
        return x.is_zero()
    return x == 0


def rank2x2(m: Mat2) -> int:
    """Rank over an exact scalar instantiation.

    For Interval entries this raises SignUndecided whenever an enclosure
    straddles zero without being exactly zero: a certificate may never guess.
    """
    d = det2(m)
    if not _is_zero_scalar(d):
        return 2
    if all(_is_zero_scalar(e) for e in m.entries()):
        return 0
    return 1


__all__ = ["Mat2", "det2", "rank2x2"]
