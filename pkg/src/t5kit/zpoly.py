"""Internal integer-coefficient polynomial engine.

Dense ascending tuples of ints.  This is the working representation behind
root refinement, sign determination, and quotient-ring arithmetic: integer
adds and multiplies carry no per-operation gcd cost, unlike Fraction
coefficient arithmetic, and signs at rational points are evaluated
homogeneously so no rational number is ever formed on the hot path.

Everything here is sign-exact: scaling a polynomial by a positive integer
never changes any decision made from it.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

ZP = tuple  # tuple[int, ...], ascending, no trailing zeros


def zp(coeffs) -> ZP:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def zp_deg(p: ZP) -> int:
    return len(p) - 1


def zp_neg(p: ZP) -> ZP:
    return tuple(-c for c in p)


def zp_add(p: ZP, q: ZP) -> ZP:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for k, c in enumerate(q):
        out[k] += c
    return zp(out)


def zp_sub(p: ZP, q: ZP) -> ZP:
    return zp_add(p, zp_neg(q))


def zp_mul(p: ZP, q: ZP) -> ZP:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return zp(out)


def zp_scale(p: ZP, c: int) -> ZP:
    if c == 0:
        return ()
    return tuple(a * c for a in p)


def zp_deriv(p: ZP) -> ZP:
    return zp(tuple(k * c for k, c in enumerate(p))[1:])


def zp_content(p: ZP) -> int:
    g = 0
    for c in p:
        g = gcd(g, abs(c))
        if g == 1:
            return 1
    return g


def zp_primitive(p: ZP) -> ZP:
    g = zp_content(p)
    if g in (0, 1):
        return p
    return tuple(c // g for c in p)


def zp_eval_sign(p: ZP, num: int, den: int) -> int:
    """Sign of p(num/den) for den > 0: homogeneous Horner, integers only.

    Evaluates sum_k c_k num^k den^(d-k), which has the sign of p(num/den).
    """
    if not p:
        return 0
    acc = p[-1]
    dpow = 1
    for c in reversed(p[:-1]):
        dpow *= den
        acc = acc * num + c * dpow
    return (acc > 0) - (acc < 0)


def zp_eval_fraction(p: ZP, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def zp_from_fraction_coeffs(coeffs) -> ZP:
    """Clear denominators with a positive factor: same roots, same signs."""
    denls = [Fraction(c).denominator for c in coeffs]
    common = 1
    for d in denls:
        common = common * d // gcd(common, d)
    return zp(tuple(int(Fraction(c) * common) for c in coeffs))


def zp_pdiv_monic(f: ZP, m: ZP) -> ZP:
    """Exact remainder of f modulo a monic integer polynomial."""
    assert m and m[-1] == 1
    rem = list(f)
    dm = len(m) - 1
    for k in range(len(rem) - 1, dm - 1, -1):
        c = rem[k]
        if c:
            for j in range(dm + 1):
                rem[k - dm + j] -= c * m[j]
    return zp(rem[:dm])


def zp_prem(f: ZP, g: ZP) -> ZP:
    """Pseudo-remainder of f by g, corrected to a POSITIVE multiple of
    (f mod g): sign decisions at roots of g are unaffected.
    """
    if not g:
        raise ZeroDivisionError("pseudo-division by zero polynomial")
    df, dg = len(f) - 1, len(g) - 1
    if not f or df < dg:
        return f
    lead = g[-1]
    rem = list(f)
    mults = 0
    for k in range(df, dg - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        rem = [lead * r for r in rem]  # now rem[k] == lead * c
        mults += 1
        for j in range(dg + 1):
            rem[k - dg + j] -= c * g[j]
    if lead < 0 and mults % 2 == 1:
        rem = [-r for r in rem]  # overall factor lead^mults made positive
    return zp(rem[:dg])


def zp_sturm_chain(p: ZP) -> list[ZP]:
    """Sturm-like chain over the integers.

    Members are primitive integer polynomials agreeing with the classical
    Sturm chain up to positive factors, which preserves sign-variation
    counts; the chain therefore counts distinct real roots in (a, b].
    """
    chain = [zp_primitive(p), zp_primitive(zp_deriv(p))]
    while chain[-1]:
        r = zp_prem(chain[-2], chain[-1])
        chain.append(zp_primitive(zp_neg(r)))
    chain.pop()
    return chain


def _variations(signs) -> int:
    out = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            out += 1
        prev = s
    return out


def zp_count_roots(chain: list[ZP], a: Fraction, b: Fraction) -> int:
    """Distinct real roots of the chain's head in (a, b]."""
    an, ad = a.numerator, a.denominator
    bn, bd = b.numerator, b.denominator
    va = _variations([zp_eval_sign(q, an, ad) for q in chain])
    vb = _variations([zp_eval_sign(q, bn, bd) for q in chain])
    return va - vb


def zp_gcd(f: ZP, g: ZP) -> ZP:
    """Primitive gcd over Z (up to sign) via pseudo-remainders."""
    a, b = zp_primitive(f), zp_primitive(g)
    if zp_deg(a) < zp_deg(b):
        a, b = b, a
    while b:
        r = zp_prem(a, b)
        a, b = b, zp_primitive(r)
    return a


__all__ = [
    "zp", "zp_deg", "zp_neg", "zp_add", "zp_sub", "zp_mul", "zp_scale",
    "zp_deriv", "zp_content", "zp_primitive", "zp_eval_sign",
    "zp_eval_fraction", "zp_from_fraction_coeffs", "zp_pdiv_monic",
    "zp_prem", "zp_sturm_chain", "zp_count_roots", "zp_gcd",
]
