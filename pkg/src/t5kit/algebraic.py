"""Certified arithmetic at an isolated algebraic root.

An AlgScalar is an exact rational function of the root, held as a pair of
integer-coefficient polynomials in the rescaled variable nu = l * mu, where l
is the (positive) leading coefficient of the root polynomial's primitive
integer form.  In nu the companion polynomial is monic with integer
coefficients, so reduction in the quotient ring is exact integer division:
degrees stay below deg(p) and no per-operation rational gcd is paid.

Every predicate (sign, zero test, comparison) reduces to exact integer sign
determination at the root: no rounding, ever.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Union

from . import zpoly as z
from .exact import Interval, RatPoly, RootInterval, SignUndecided, to_rat

Coercible = Union["AlgScalar", Fraction, int]


class AlgScalar:
    __slots__ = ("root", "zn", "zd")

    def __init__(self, root: RootInterval, num: RatPoly | tuple, den: RatPoly | tuple | None = None):
        self.root = root
        if isinstance(num, tuple) and isinstance(den, tuple):
            zn, zd = num, den
        else:
            num = num if isinstance(num, RatPoly) else RatPoly([to_rat(num)])
            if den is None:
                den = RatPoly([1])
            elif not isinstance(den, RatPoly):
                den = RatPoly([to_rat(den)])
            if den.is_zero():
                raise ZeroDivisionError("AlgScalar with zero denominator")
            zn, zd = _ingest(root, num, den)
        self.zn, self.zd = _reduce(root, zn, zd)

    # -- construction helpers ---------------------------------------------------
    @staticmethod
    def of(root: RootInterval, value: Fraction | int) -> "AlgScalar":
        v = to_rat(value)
        return AlgScalar(root, (v.numerator,) if v else (), (v.denominator,))

    @staticmethod
    def mu(root: RootInterval) -> "AlgScalar":
        """The root itself: mu = nu / l."""
        return AlgScalar(root, (0, 1), (root.monic_scale(),))

    def _coerce(self, other: Coercible) -> "AlgScalar":
        if isinstance(other, AlgScalar):
            if not self.root.same_root(other.root):
                raise ValueError("AlgScalar arithmetic across distinct roots")
            return other
        if isinstance(other, (int, Fraction)):
            return AlgScalar.of(self.root, other)
        return NotImplemented  # type: ignore[return-value]

    # -- field operations ----------------------------------------------------------
    def __add__(self, other: Coercible) -> "AlgScalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        zn = z.zp_add(z.zp_mul(self.zn, o.zd), z.zp_mul(o.zn, self.zd))
        return AlgScalar(self.root, zn, z.zp_mul(self.zd, o.zd))

    __radd__ = __add__

    def __neg__(self) -> "AlgScalar":
        return AlgScalar(self.root, z.zp_neg(self.zn), self.zd)

    def __sub__(self, other: Coercible) -> "AlgScalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        zn = z.zp_sub(z.zp_mul(self.zn, o.zd), z.zp_mul(o.zn, self.zd))
        return AlgScalar(self.root, zn, z.zp_mul(self.zd, o.zd))

    def __rsub__(self, other: Coercible) -> "AlgScalar":
        return (-self) + other

    def __mul__(self, other: Coercible) -> "AlgScalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return AlgScalar(self.root, z.zp_mul(self.zn, o.zn), z.zp_mul(self.zd, o.zd))

    __rmul__ = __mul__

    def __truediv__(self, other: Coercible) -> "AlgScalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by an AlgScalar that is zero at the root")
        return AlgScalar(self.root, z.zp_mul(self.zn, o.zd), z.zp_mul(self.zd, o.zn))

    def __rtruediv__(self, other: Coercible) -> "AlgScalar":
        o = self._coerce(other)
        return o / self

    # -- certified predicates ------------------------------------------------------
    def sign(self) -> int:
        return self._sign_of(self.zn) * self._sign_of(self.zd)

    def is_zero(self) -> bool:
        return self._sign_of(self.zn) == 0

    def _sign_of(self, q: tuple) -> int:
        """Exact sign of the integer polynomial q at nu* = l * mu*."""
        if not q:
            return 0
        root = self.root
        ell = root.monic_scale()
        if root.is_exact():
            nu = ell * root.lo
            return z.zp_eval_sign(q, nu.numerator, nu.denominator)
        pm = root.monic_poly()
        g = z.zp_gcd(q, pm)
        if z.zp_deg(g) >= 1:
            lo, hi = ell * root.lo, ell * root.hi
            s_lo = z.zp_eval_sign(g, lo.numerator, lo.denominator)
            s_hi = z.zp_eval_sign(g, hi.numerator, hi.denominator)
            if s_lo * s_hi < 0:
                return 0
        qchain = None
        while True:
            lo, hi = ell * root.lo, ell * root.hi
            s_lo = z.zp_eval_sign(q, lo.numerator, lo.denominator)
            if s_lo != 0:
                if qchain is None:
                    qchain = z.zp_sturm_chain(q)
                if z.zp_count_roots(qchain, lo, hi) == 0:
                    return s_lo
            root.refine_to(root.width / 2**8)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (AlgScalar, int, Fraction)):
            return NotImplemented
        return (self - other).is_zero()  # type: ignore[operator]

    def __hash__(self):
        raise TypeError("AlgScalar is unhashable")

    def __lt__(self, other: Coercible) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: Coercible) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: Coercible) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: Coercible) -> bool:
        return (self - other).sign() >= 0

    # -- enclosures and reporting -----------------------------------------------
    def enclosure(self, width: Fraction | None = None) -> Interval:
        """A certified interval around the exact value.

        Refines the root enclosure until the denominator excludes zero, then
        (optionally) until the quotient interval is narrower than ``width``.
        """
        ell = self.root.monic_scale()
        num_p = RatPoly(self.zn)
        den_p = RatPoly(self.zd)
        target = self.root.width
        while True:
            iv = Interval(ell * self.root.lo, ell * self.root.hi)
            den_iv = den_p.eval_interval(iv)
            if not den_iv.contains_zero():
                out = num_p.eval_interval(iv) / den_iv
                if width is None or out.width <= width:
                    return out
            if self.root.is_exact():
                raise ZeroDivisionError("denominator vanishes at the rational root")
            target = target / 2**8
            self.root.refine_to(target)
            if target < Fraction(1, 2**16384):
                raise SignUndecided("enclosure failed to converge")

    def approx(self) -> float:
        if self.is_zero():
            return 0.0
        e = self.enclosure()
        while True:
            mid = float(e.midpoint())
            if abs(float(e.width)) <= 1e-14 * max(1.0, abs(mid)):
                return mid
            e = self.enclosure(e.width / 2**16)

    def to_fraction(self) -> Fraction:
        """Exact value, available only when the root itself is rational."""
        if not self.root.is_exact():
            raise ValueError("value is algebraic, not rational")
        nu = self.root.monic_scale() * self.root.lo
        den = z.zp_eval_fraction(self.zd, nu)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at the rational root")
        return z.zp_eval_fraction(self.zn, nu) / den

    def num_den_polys(self) -> tuple[RatPoly, RatPoly]:
        """The value as rational-function data in the original variable mu
        (for serialization): num(mu)/den(mu) with Fraction coefficients."""
        ell = Fraction(self.root.monic_scale())
        num = RatPoly([c * ell**k for k, c in enumerate(self.zn)])
        den = RatPoly([c * ell**k for k, c in enumerate(self.zd)])
        return num, den

    def __repr__(self) -> str:
        return f"AlgScalar(~{self._repr_float()})"

    def _repr_float(self) -> str:
        try:
            return f"{self.approx():.12g}"
        except Exception:
            return "?"


def _ingest(root: RootInterval, num: RatPoly, den: RatPoly) -> tuple[tuple, tuple]:
    """Convert rational-function data in mu into integer pairs in nu = l*mu,
    preserving the exact value."""
    ell = root.monic_scale()
    zn0 = z.zp_from_fraction_coeffs(num.coeffs)
    zd0 = z.zp_from_fraction_coeffs(den.coeffs)
    # separate clearing factors change the value; rebalance with the exact
    # Fraction scales so that zn/zd equals num/den
    s_num = _clear_scale(num)
    s_den = _clear_scale(den)
    dn, dd = max(z.zp_deg(zn0), 0), max(z.zp_deg(zd0), 0)
    # substitute mu = nu/l homogeneously
    zn = tuple(c * ell**(dn - k) for k, c in enumerate(zn0))
    zd = tuple(c * ell**(dd - k) for k, c in enumerate(zd0))
    # value now is (s_num * l^dn / (s_den * l^dd))^{-1} ... fold the integer
    # imbalance back in:
    zn = z.zp_scale(zn, s_den.numerator * s_num.denominator)
    zd = z.zp_scale(zd, s_num.numerator * s_den.denominator)
    if dd > dn:
        zn = z.zp_scale(zn, ell**(dd - dn))
    elif dn > dd:
        zd = z.zp_scale(zd, ell**(dn - dd))
    return zn, zd


def _clear_scale(p: RatPoly) -> Fraction:
    """The positive factor by which zp_from_fraction_coeffs scaled p."""
    common = 1
    for c in p.coeffs:
        d = c.denominator
        common = common * d // gcd(common, d)
    return Fraction(common)


def _reduce(root: RootInterval, zn: tuple, zd: tuple) -> tuple[tuple, tuple]:
    """Reduce both parts mod the monic companion polynomial (value-preserving
    at the root), strip the joint integer content, canonicalize signs."""
    if not zd:
        raise ZeroDivisionError("AlgScalar with zero denominator")
    if not root.is_exact():
        pm = root.monic_poly()
        dm = z.zp_deg(pm)
        if z.zp_deg(zn) >= dm:
            zn = z.zp_pdiv_monic(zn, pm)
        if z.zp_deg(zd) >= dm:
            zd = z.zp_pdiv_monic(zd, pm)
            if not zd:
                raise ZeroDivisionError("denominator vanishes at the root")
    g = gcd(z.zp_content(zn), z.zp_content(zd))
    if g > 1:
        zn = tuple(c // g for c in zn)
        zd = tuple(c // g for c in zd)
    if zd and zd[-1] < 0:
        zn, zd = z.zp_neg(zn), z.zp_neg(zd)
    return zn, zd


__all__ = ["AlgScalar"]
