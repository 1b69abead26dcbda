"""Special rank-2 Ulrich bundles: Chern targets and extension data.

A rank-2 bundle ``F`` is special Ulrich for ``h`` iff ``h^0(F(-h)) = 0`` and

    c1(F) = 3h + K_S,    c2(F) = (5h^2 + 3h.K_S)/2 + 2 - 2g.

Two constructions realize these classes as extensions

    0 -> O_S(sub) -> F -> I_Z(quot) -> 0

with ``c1 = sub + quot`` and ``c2 = sub.quot + deg Z``.  Only the numerical
data of each construction is computed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantViolation, ValidationError
from .surface import (
    DivisorClass,
    RuledSurfaceParams,
    canonical_class,
    intersect,
    self_intersection,
)

__all__ = [
    "SpecialUlrichTarget",
    "ExtensionDatum",
    "HyperplaneReport",
    "special_target",
    "u_threshold",
    "hyperplane_threshold",
    "hyperplane_extension",
    "hyperplane_family_dimension",
    "semistable_family_bound",
    "degree_zero_extension",
    "extension_chern_check",
]


@dataclass(frozen=True)
class SpecialUlrichTarget:
    c1: DivisorClass
    c2: int


@dataclass(frozen=True)
class ExtensionDatum:
    sub: DivisorClass
    quot: DivisorClass
    z_degree: int
    generic_v_degree: int
    construction: str


def special_target(s: RuledSurfaceParams, h: DivisorClass) -> SpecialUlrichTarget:
    h = DivisorClass(h.a, h.b)
    k = canonical_class(s)
    twice = 5 * self_intersection(s, h) + 3 * intersect(s, h, k)
    if twice % 2:
        # 5h^2 + 3hK = 2h^2 + 3h(h+K) and h(h+K) is even by adjunction
        raise InvariantViolation(f"5h^2 + 3hK = {twice} is odd for h={h} on {s}")
    return SpecialUlrichTarget(3 * h + k, twice // 2 + 2 - 2 * s.g)


def extension_chern_check(s: RuledSurfaceParams, datum: ExtensionDatum, target: SpecialUlrichTarget) -> bool:
    c1 = datum.sub + datum.quot
    c2 = intersect(s, datum.sub, datum.quot) + datum.z_degree
    return c1 == target.c1 and c2 == target.c2


def u_threshold(s: RuledSurfaceParams, a: int) -> int:
    """``a*e`` for ``e > 0``, else ``e``."""
    return a * s.e if s.e > 0 else s.e


def hyperplane_threshold(s: RuledSurfaceParams, a: int) -> Fraction:
    """Lower bound that ``deg b`` must strictly exceed when ``a >= 3``."""
    g, e = s.g, s.e
    return max(
        Fraction((a - 3) * (g - 1) + e * a, 2),
        Fraction(g - 1 + u_threshold(s, a)),
        Fraction(e * (3 * a + 1), 6) + Fraction(2 * g, 3),
    )


@dataclass(frozen=True)
class HyperplaneReport:
    datum: ExtensionDatum
    threshold: Fraction
    threshold_met: bool
    sufficient: bool
    stability_note: str


def _require_hyperplane_domain(s: RuledSurfaceParams, h: DivisorClass) -> None:
    if s.g < 1:
        raise ValidationError(f"hyperplane construction needs g >= 1, got g={s.g}")
    if h.a < 2:
        raise ValidationError(f"hyperplane construction needs a >= 2, got a={h.a}")


def hyperplane_extension(s: RuledSurfaceParams, h: DivisorClass) -> HyperplaneReport:
    """Extension of ``I_Z((2a-2)C0 + (2b+k+e_det-v)f)`` by ``O_S(h + v f)``.

    ``v`` is a general divisor of degree ``g - 1`` and
    ``deg Z = (a-1)(b - ae/2)``.  Sufficiency holds for ``a = 2``, and for
    ``a >= 3`` once ``b`` clears :func:`hyperplane_threshold`.
    """
    _require_hyperplane_domain(s, h)
    g, e, a, b = s.g, s.e, h.a, h.b
    v = g - 1
    sub = DivisorClass(a, b + v)
    quot = DivisorClass(2 * a - 2, 2 * b + 2 * g - 2 - e - v)
    # a(a-1) is even, so this is an integer
    z_degree = (a - 1) * b - (a - 1) * a * e // 2
    if z_degree < 0:
        raise ValidationError(f"deg Z = {z_degree} is negative for h={DivisorClass(a, b)} on {s}")
    threshold = hyperplane_threshold(s, a)
    met = b > threshold
    if e > 0:
        note = "stable: e>0 and a>=2 admit no destabilizing Ulrich line subbundle"
    else:
        note = "stable for general data: strictly semistable locus has smaller dimension"
    datum = ExtensionDatum(sub, quot, z_degree, v, "hyperplane")
    return HyperplaneReport(datum, threshold, met, a == 2 or met, note)


def hyperplane_family_dimension(s: RuledSurfaceParams, h: DivisorClass) -> int:
    """Dimension ``2ab - ea^2 - (a-4)(g-1)`` of the extension family."""
    _require_hyperplane_domain(s, h)
    g, e, a, b = s.g, s.e, h.a, h.b
    return 2 * a * b - e * a * a - (a - 4) * (g - 1)


def semistable_family_bound(s: RuledSurfaceParams, h: DivisorClass) -> Fraction:
    """Upper bound on the dimension of the strictly semistable members.

    Raw value ``(a-1)/2 * (b + 2 - ae/2) - 1``; may be negative.
    """
    if s.e > 0:
        raise ValidationError(f"semistable bound needs e <= 0, got e={s.e}")
    a, b = h.a, h.b
    return Fraction(a - 1, 2) * (b + 2 - Fraction(a * s.e, 2)) - 1


def degree_zero_extension(s: RuledSurfaceParams, h: DivisorClass) -> ExtensionDatum:
    """Extension of ``I_Z(A + D)`` by ``O_S(D)`` for ``e = 0``, no bound on ``b``.

    With ``alpha = floor(a/2)``, ``eps = a - 2*alpha`` and ``deg v = g - 1``:
    ``D = (3alpha - 1 + eps)C0 + (b + v + e_det)f``,
    ``A = eps*C0 + (b + k - 2v - e_det)f`` and ``deg Z = (alpha + eps)b``.
    """
    g, a, b = s.g, h.a, h.b
    problems = []
    if s.e != 0:
        problems.append(f"needs e = 0, got e={s.e}")
    if g < 1:
        problems.append(f"needs g >= 1, got g={g}")
    if a < 2:
        problems.append(f"needs a >= 2, got a={a}")
    if b < 3:
        problems.append(f"needs b = h.C0 >= 3, got b={b}")
    if problems:
        raise ValidationError("degree-zero construction: " + "; ".join(problems))
    alpha = a // 2
    eps = a - 2 * alpha
    v = g - 1
    d = DivisorClass(3 * alpha - 1 + eps, b + v)
    aa = DivisorClass(eps, b + (2 * g - 2) - 2 * v)
    if aa + 2 * d != 3 * DivisorClass(a, b) + canonical_class(s):
        raise InvariantViolation(f"A + 2D != 3h + K for h={DivisorClass(a, b)} on {s}")
    return ExtensionDatum(d, aa + d, (alpha + eps) * b, v, "degree_zero")
