"""Bundled reference configuration: five exact rational 2x2 matrices known to
form a large T5 set with all side constraints of the pressure-law pipeline.

This is the canonical regression target for the certifier: the full exact
pipeline must pass on it.  Entries are read-only.
"""

from __future__ import annotations

from fractions import Fraction as F

from .mat2 import Mat2


def reference_t5() -> tuple[Mat2, Mat2, Mat2, Mat2, Mat2]:
    return (
        Mat2(F(2316901181183546099017091770605, 162259276829213363391578010288128),
             F(-5739565125354385225872252139467, 10141204801825835211973625643008),
             F(5739565125354385225872252139467, 10141204801825835211973625643008),
             F(-56873565598434451746179265262997, 2535301200456458802993406410752)),
        Mat2(F(-330621418565185387036477002414115, 10384593717069655257060992658440192),
             F(815211547324287408551802829225453, 649037107316853453566312041152512),
             F(-815211547324287408551802829225453, 649037107316853453566312041152512),
             F(251257742411123530141636860664321, 5070602400912917605986812821504)),
        Mat2(F(1231069874758438218672166401101419, 20769187434139310514121985316880384),
             F(-733625671232943434981364913268293, 324518553658426726783156020576256),
             F(733625671232943434981364913268293, 324518553658426726783156020576256),
             F(-3497495142386849315118349227834509, 40564819207303340847894502572032)),
        Mat2(F(-587406988058843286220046809310939, 20769187434139310514121985316880384),
             F(88287046124795489454709265219111, 81129638414606681695789005144064),
             F(-88287046124795489454709265219111, 81129638414606681695789005144064),
             F(1698486469749761796168679052449441, 40564819207303340847894502572032)),
        Mat2(F(-907999771200015425284613822879209, 41538374868278621028243970633760768),
             F(1065154343959802482930848455328023, 1298074214633706907132624082305024),
             F(-1065154343959802482930848455328023, 1298074214633706907132624082305024),
             F(2499017758464245906295246824575579, 81129638414606681695789005144064)),
    )


__all__ = ["reference_t5"]
