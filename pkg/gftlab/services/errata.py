"""
Errata registry — stated forms that disagree with their own constants or with
the surrounding derivations, next to the form this toolkit implements.

Entries are immutable; radius problems link to them by id and the ``errata``
verification suite checks each adjudication numerically.
"""

from types import MappingProxyType
from typing import Mapping

from gftlab.schemas.reports import Erratum

_ENTRIES = (
    Erratum(
        id="S-radius-factor",
        stated="2 sinh(1) f0(r) - 1 = 0",
        implemented="2 sinh(r) f0(r) - 1 = 0",
        reason="The growth step bounds |φ(z) - 1| by sinh r; only this form has a root at 0.531721.",
    ),
    Erratum(
        id="Ne-radius-constant",
        stated="2r(r + r^3/3) exp(r - r^3/9) = 0",
        implemented="2r(r + r^3/3) exp(r - r^3/9) - 1 = 0",
        reason="The stated left side is positive on (0, 1); restoring -1 reproduces 0.524752.",
    ),
    Erratum(
        id="RL-radius-sign",
        stated="2(phi0(-r) - 1) f0(r) - 1 = 0",
        implemented="2|phi0(-r) - 1| f0(r) - 1 = 0",
        reason="phi0(-r) < 1 on (0, 1), so the stated form is negative; the distance reproduces 0.768.",
    ),
    Erratum(
        id="S-inclusion",
        stated="(1 + sin 1) lambda e < (1 + sin 1)(3 alpha - 1)",
        implemented="(1 + sin 1) lambda < sin(1)(3 alpha - 1)",
        reason="Disk-containment condition with r1 = sin 1.",
    ),
    Erratum(
        id="wp-inclusion-label",
        stated="relation labelled for the class P",
        implemented="relation housed under wp (r1 = 1/e)",
        reason="The numeric condition (e + 1) lambda < 3 alpha - 1 is the wp disk condition.",
    ),
    Erratum(
        id="S-extremal-series",
        stated="f0 = z + z^2/2 + z^3/8 + z^4/144 - 5z^5/1152 for the sine class",
        implemented="f0 = z exp(int_0^z sin(t)/t dt) = z + z^2 + z^3/2 + ...",
        reason="The stated series is the sigmoid extremal; the sine extremal is taken from its integral.",
    ),
    Erratum(
        id="RL-extremal-typeset",
        stated="sqrt(1 + 2(sqrt2 - 1)) z inside the RL extremal",
        implemented="sqrt(1 + 2(sqrt2 - 1) z)",
        reason="Only the second reading gives f0(0) = 0 and f0'(0) = 1.",
    ),
    Erratum(
        id="A-root-label",
        stated="r2 = 0.565244 is the smallest positive root of A(r)",
        implemented="r2 = 0.565244 is the smallest positive root of C(r); A first vanishes at 0.701363",
        reason="With B^2 - 4AC < 0, A and C share a sign, so the side condition is C > 0.",
    ),
    Erratum(
        id="alpha-zero-domain",
        stated="thresholds for 0 <= alpha < 1; class defined for 0 < alpha <= 1",
        implemented="delta_threshold accepts alpha = 0, in_G requires alpha > 0",
        reason="Both domains are enforced where they are stated; the mismatch is recorded.",
    ),
)

ERRATA: Mapping[str, Erratum] = MappingProxyType({e.id: e for e in _ENTRIES})
