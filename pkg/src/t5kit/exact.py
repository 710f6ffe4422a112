"""Exact scalar kernel: rationals, certified intervals, rational polynomials,
Sturm root isolation, and sign determination at isolated algebraic roots.

Every certificate produced by this package bottoms out in the arithmetic of
this module.  No floating point value ever enters a certified statement; the
only float surface here is the convenience ``approx`` helpers used for
reporting.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

RatLike = Union[Fraction, int, str]


def to_rat(x: RatLike) -> Fraction:
    """Coerce ints, canonical "num/den" strings, or Fractions to Fraction.

    Floats are deliberately rejected: promotion of floats is the job of
    ``search.rationalize`` and must be an explicit, audited step.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rat(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to an exact rational")


def rat_str(x: Fraction) -> str:
    """Canonical on-disk rendering: "numerator/denominator", base 10, always
    with the (positive) denominator, bit-exact round-trip via parse_rat."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(s: str) -> Fraction:
    s = s.strip()
    if "/" in s:
        num, den = s.split("/")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def sgn(x: Fraction) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


class Interval:
    """Closed interval with exact rational endpoints.

    Arithmetic returns enclosures of the exact result; since the endpoint
    arithmetic itself is exact rational, enclosures here are tight.
    """

    __slots__ = ("lo", "hi")

    def __init__(self, lo: RatLike, hi: RatLike | None = None):
        lo = to_rat(lo)
        hi = lo if hi is None else to_rat(hi)
        if lo > hi:
            raise ValueError(f"interval endpoints out of order: {lo} > {hi}")
        self.lo = lo
        self.hi = hi

    def __repr__(self) -> str:
        return f"Interval({self.lo}, {self.hi})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Interval) and self.lo == other.lo and self.hi == other.hi

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: RatLike) -> bool:
        x = to_rat(x)
        return self.lo <= x <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def sign(self) -> int:
        """Certified sign, or raise if the enclosure straddles zero."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        raise SignUndecided(f"sign undecided on {self}")

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __add__(self, other: "Interval | RatLike") -> "Interval":
        other = _as_interval(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other: "Interval | RatLike") -> "Interval":
        return self + (-_as_interval(other))

    def __rsub__(self, other: RatLike) -> "Interval":
        return _as_interval(other) + (-self)

    def __mul__(self, other: "Interval | RatLike") -> "Interval":
        other = _as_interval(other)
        prods = (self.lo * other.lo, self.lo * other.hi,
                 self.hi * other.lo, self.hi * other.hi)
        return Interval(min(prods), max(prods))

    __rmul__ = __mul__

    def __truediv__(self, other: "Interval | RatLike") -> "Interval":
        other = _as_interval(other)
        if other.contains_zero():
            raise ZeroDivisionError(f"division by interval containing zero: {other}")
        recips = (1 / other.lo, 1 / other.hi)
        return self * Interval(min(recips), max(recips))

    def __rtruediv__(self, other: RatLike) -> "Interval":
        return _as_interval(other) / self


def _as_interval(x: "Interval | RatLike") -> Interval:
    return x if isinstance(x, Interval) else Interval(to_rat(x))


class SignUndecided(Exception):
    """An interval computation could not decide a sign.  Callers refine and
    retry; certificates never guess."""


class RatPoly:
    """Dense univariate polynomial over Fraction, ascending coefficients.

    degree == -1 encodes the zero polynomial.  Instances are immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RatLike] = ()):  # trims leading zeros
        cs = [to_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):  # immutability guard
        raise AttributeError("RatPoly is immutable")

    # -- basic structure ---------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return "RatPoly(0)"
        terms = [f"{c}*x^{k}" for k, c in enumerate(self.coeffs) if c != 0]
        return "RatPoly(" + " + ".join(terms) + ")"

    @staticmethod
    def constant(c: RatLike) -> "RatPoly":
        return RatPoly([to_rat(c)])

    @staticmethod
    def x() -> "RatPoly":
        return RatPoly([0, 1])

    # -- ring operations ---------------------------------------------------
    def __add__(self, other: "RatPoly | RatLike") -> "RatPoly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        cs = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            cs[k] += c
        for k, c in enumerate(other.coeffs):
            cs[k] += c
        return RatPoly(cs)

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly([-c for c in self.coeffs])

    def __sub__(self, other: "RatPoly | RatLike") -> "RatPoly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: RatLike) -> "RatPoly":
        return _as_poly(other) + (-self)

    def __mul__(self, other: "RatPoly | RatLike") -> "RatPoly":
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return RatPoly()
        cs = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                cs[i + j] += a * b
        return RatPoly(cs)

    __rmul__ = __mul__

    def scale(self, c: RatLike) -> "RatPoly":
        c = to_rat(c)
        return RatPoly([a * c for a in self.coeffs])

    def divmod(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        """Exact euclidean division over Q."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return RatPoly(), self
        quo = [Fraction(0)] * (dq + 1)
        inv_lead = 1 / other.leading
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv_lead
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return RatPoly(quo), RatPoly(rem)

    def __mod__(self, other: "RatPoly") -> "RatPoly":
        return self.divmod(other)[1]

    def deriv(self) -> "RatPoly":
        return RatPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "RatPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading)

    def gcd(self, other: "RatPoly") -> "RatPoly":
        """Monic gcd over Q via the euclidean algorithm."""
        a, b = self, other
        while not b.is_zero():
            r = a % b
            a, b = b, (r.monic() if not r.is_zero() else r)
        return a.monic() if not a.is_zero() else a

    def squarefree(self) -> "RatPoly":
        """Square-free part p / gcd(p, p'); required before Sturm counting."""
        if self.is_zero():
            raise ValueError("zero polynomial has no square-free part")
        if self.degree == 0:
            return RatPoly.constant(1)
        g = self.gcd(self.deriv())
        if g.degree == 0:
            return self.monic()
        q, r = self.divmod(g)
        assert r.is_zero()
        return q.monic()

    # -- evaluation ----------------------------------------------------------
    def __call__(self, x: RatLike) -> Fraction:
        x = to_rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_interval(self, iv: Interval) -> Interval:
        """Horner evaluation in interval arithmetic: an enclosure of the range."""
        acc = Interval(0)
        for c in reversed(self.coeffs):
            acc = acc * iv + c
        return acc

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc


def _as_poly(x: "RatPoly | RatLike") -> RatPoly:
    return x if isinstance(x, RatPoly) else RatPoly.constant(to_rat(x))


# -- Sturm machinery ---------------------------------------------------------

def sturm_chain(p: RatPoly) -> list[RatPoly]:
    """Sturm sequence of p.  Members are scaled by POSITIVE factors only;
    monic normalization would flip signs and break variation counting."""
    chain = [p, p.deriv()]
    while not chain[-1].is_zero():
        r = chain[-2] % chain[-1]
        if r.is_zero():
            chain.append(RatPoly())
        else:
            neg = -r
            chain.append(neg.scale(1 / abs(neg.leading)))
    chain.pop()
    return chain


def _variations(vals: Sequence[int]) -> int:
    signs = [v for v in vals if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def count_roots(chain: Sequence[RatPoly], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in the half-open interval (a, b]."""
    if a > b:
        raise ValueError("count_roots needs a <= b")
    va = _variations([sgn(q(a)) for q in chain])
    vb = _variations([sgn(q(b)) for q in chain])
    return va - vb


def cauchy_root_bound(p: RatPoly) -> Fraction:
    """All real roots of p lie in (-B, B)."""
    if p.is_zero() or p.degree == 0:
        raise ValueError("root bound needs degree >= 1")
    lead = abs(p.leading)
    return 1 + max(abs(c) for c in p.coeffs[:-1]) / lead


class RootInterval:
    """An interval [lo, hi] isolating exactly one real root of a square-free
    polynomial.  lo == hi encodes an exactly known rational root.

    The identity of the root never changes.  ``refine_to`` tightens the shared
    enclosure in place (it only ever shrinks), so all views of the same root
    benefit from each other's refinement work.  Sign work is delegated to an
    integer form of the polynomial; see zpoly.
    """

    __slots__ = ("poly", "_cell", "_z")

    def __init__(self, poly: RatPoly, lo: RatLike, hi: RatLike,
                 _cell: list | None = None):
        from . import zpoly as z
        lo, hi = to_rat(lo), to_rat(hi)
        if lo > hi:
            raise ValueError("root interval endpoints out of order")
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "_z", None)
        zq = self._zq()
        if lo < hi:  # normalize: an endpoint root collapses to an exact root
            if z.zp_eval_sign(zq, lo.numerator, lo.denominator) == 0:
                hi = lo
            elif z.zp_eval_sign(zq, hi.numerator, hi.denominator) == 0:
                lo = hi
        object.__setattr__(self, "_cell", _cell if _cell is not None else [lo, hi])

    def __setattr__(self, name, value):
        raise AttributeError("RootInterval fields are read-only")

    # -- integer context ----------------------------------------------------
    def _zq(self):
        """Primitive, positive-leading integer form of poly (same roots)."""
        if self._z is None:
            from . import zpoly as z
            zq = z.zp_primitive(z.zp_from_fraction_coeffs(self.poly.coeffs))
            if zq and zq[-1] < 0:
                zq = z.zp_neg(zq)
            object.__setattr__(self, "_z", {"zq": zq})
        return self._z["zq"]

    def _zchain(self):
        z_ = self._z
        if "chain" not in z_:
            from . import zpoly as z
            z_["chain"] = z.zp_sturm_chain(self._zq())
        return z_["chain"]

    def monic_scale(self) -> int:
        """Positive leading coefficient l of the integer form; nu = l*mu is a
        root of the monic integer companion returned by monic_poly."""
        return self._zq()[-1]

    def monic_poly(self):
        z_ = self._z if self._z is not None else None
        self._zq()
        z_ = self._z
        if "pm" not in z_:
            zq = z_["zq"]
            ell = zq[-1]
            d = len(zq) - 1
            pm = tuple(zq[k] * ell**(d - 1 - k) for k in range(d)) + (1,)
            z_["pm"] = pm
        return z_["pm"]

    def sign_at(self, num: int, den: int) -> int:
        from . import zpoly as z
        return z.zp_eval_sign(self._zq(), num, den)

    # -- public surface -------------------------------------------------------
    @property
    def lo(self) -> Fraction:
        return self._cell[0]

    @property
    def hi(self) -> Fraction:
        return self._cell[1]

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def is_exact(self) -> bool:
        return self.lo == self.hi

    def interval(self) -> Interval:
        return Interval(self.lo, self.hi)

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def approx(self) -> float:
        r = self if self.width < Fraction(1, 2**60) else self.refine_to(Fraction(1, 2**60))
        return float(r.midpoint())

    def same_root(self, other: "RootInterval") -> bool:
        return self._cell is other._cell

    def refine_to(self, width: RatLike) -> "RootInterval":
        """Shrink the enclosure to the requested width by exact bisection."""
        width = to_rat(width)
        lo, hi = self._cell
        if hi - lo <= width or lo == hi:
            return self
        slo = self.sign_at(lo.numerator, lo.denominator)
        if slo == 0:
            self._cell[0] = self._cell[1] = lo
            return self
        while hi - lo > width:
            mid = (lo + hi) / 2
            sm = self.sign_at(mid.numerator, mid.denominator)
            if sm == 0:
                lo = hi = mid
                break
            if sm == slo:
                lo = mid
            else:
                hi = mid
        self._cell[0], self._cell[1] = lo, hi
        return self

    def __repr__(self) -> str:
        return f"RootInterval([{self.lo}, {self.hi}], deg {self.poly.degree})"


def sturm_isolate(p: RatPoly, window: tuple[RatLike, RatLike]) -> list[RootInterval]:
    """Disjoint isolating intervals, one per distinct real root of p in the
    open window (lo, hi)."""
    from . import zpoly as z
    if p.is_zero():
        raise ValueError("indeterminate root set: zero polynomial")
    lo, hi = to_rat(window[0]), to_rat(window[1])
    if not lo < hi:
        raise ValueError("window must satisfy lo < hi")
    if p.degree == 0:
        return []
    sf = p.squarefree()
    zq = z.zp_primitive(z.zp_from_fraction_coeffs(sf.coeffs))
    chain = z.zp_sturm_chain(zq)

    def s_at(x: Fraction) -> int:
        return z.zp_eval_sign(zq, x.numerator, x.denominator)

    total = z.zp_count_roots(chain, lo, hi)
    if s_at(hi) == 0:
        total -= 1  # open window: a root exactly at hi is excluded
    if total <= 0:
        return []
    found: list[RootInterval] = []
    stack = [(lo, hi, total)]
    while stack:
        a, b, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1 and s_at(a) * s_at(b) < 0:
            found.append(RootInterval(sf, a, b))
            continue
        mid = (a + b) / 2
        if s_at(mid) == 0:
            found.append(RootInterval(sf, mid, mid))
            left = z.zp_count_roots(chain, a, mid) - 1
            stack.append((a, mid, left))
            stack.append((mid, b, cnt - left - 1))
        else:
            left = z.zp_count_roots(chain, a, mid)
            stack.append((a, mid, left))
            stack.append((mid, b, cnt - left))
    found.sort(key=lambda r: (r.lo, r.hi))
    return found


def refine_root(r: RootInterval, width: RatLike) -> RootInterval:
    """Spec-facing wrapper around RootInterval.refine_to."""
    return r.refine_to(width)


def sign_at_root(q: RatPoly, r: RootInterval) -> int:
    """Exact sign of q at the unique root of r.poly inside r.

    Zero detection goes through gcd(q, r.poly); the nonzero case refines the
    enclosure until interval evaluation of q has constant sign.  Terminates
    because a nonzero q has finitely many roots.
    """
    from . import zpoly as z
    if q.is_zero():
        return 0
    zq = z.zp_from_fraction_coeffs(q.coeffs)  # positive factor: signs preserved
    if r.is_exact():
        return z.zp_eval_sign(zq, r.lo.numerator, r.lo.denominator)
    g = z.zp_gcd(zq, r._zq())
    if z.zp_deg(g) >= 1:
        # g divides the square-free r.poly (up to factor), whose only root in
        # [lo, hi] is the isolated one (interior, by construction); g's roots
        # are simple, so sharing the root shows as an endpoint sign change.
        s_lo = z.zp_eval_sign(g, r.lo.numerator, r.lo.denominator)
        s_hi = z.zp_eval_sign(g, r.hi.numerator, r.hi.denominator)
        if s_lo * s_hi < 0:
            return 0
    qchain = None
    while True:
        s_lo = z.zp_eval_sign(zq, r.lo.numerator, r.lo.denominator)
        if s_lo != 0:
            if qchain is None:
                qchain = z.zp_sturm_chain(zq)
            if z.zp_count_roots(qchain, r.lo, r.hi) == 0:
                return s_lo  # no q-root in (lo, hi] and q(lo) != 0: constant sign
        r.refine_to(r.width / 2**8)


__all__ = [
    "Fraction", "to_rat", "rat_str", "parse_rat", "sgn",
    "Interval", "SignUndecided", "RatPoly",
    "sturm_chain", "count_roots", "cauchy_root_bound",
    "RootInterval", "sturm_isolate", "refine_root", "sign_at_root",
]
