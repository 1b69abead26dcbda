"""Numerical intersection theory on a geometrically ruled surface.

A geometrically ruled surface ``S = P(E) -> C`` over a curve of genus ``g``,
with ``E`` normalized, is recorded by the pair ``(g, e)``.  Its Picard group
is generated numerically by the section ``C0`` and a fibre ``f``; a divisor
class ``a*C0 + b*f`` is stored as the integer pair ``(a, b)``, where ``b`` is
the degree of the pulled-back divisor on ``C``.  The pairing is

    C0^2 = -e,   C0.f = 1,   f^2 = 0

and everything below is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IntegralityError, InvariantViolation, ValidationError

__all__ = [
    "RuledSurfaceParams",
    "DivisorClass",
    "Polarization",
    "C0",
    "FIBER",
    "intersect",
    "self_intersection",
    "canonical_class",
    "chi",
    "chi_structure_sheaf",
    "serre_dual_class",
    "ample_sufficient",
    "very_ample_necessary",
    "ampleness_state",
]


@dataclass(frozen=True)
class RuledSurfaceParams:
    """Discrete invariants ``(g, e)`` of a geometrically ruled surface.

    Construction enforces Nagata's bound ``e >= -g``; over the projective
    line this already forces ``e >= 0``.
    """

    g: int
    e: int

    def __post_init__(self):
        if not isinstance(self.g, int) or not isinstance(self.e, int):
            raise ValidationError(f"g and e must be integers, got g={self.g!r}, e={self.e!r}")
        if self.g < 0:
            raise ValidationError(f"genus must be non-negative, got g={self.g}")
        if self.e < -self.g:
            raise ValidationError(
                f"nagata: invariant e={self.e} violates e >= -g = {-self.g}"
            )

    @property
    def is_hirzebruch(self) -> bool:
        return self.g == 0


@dataclass(frozen=True)
class DivisorClass:
    """Numerical class ``a*C0 + b*f``."""

    a: int
    b: int

    def __add__(self, other: DivisorClass) -> DivisorClass:
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return DivisorClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-self.a, -self.b)

    def __mul__(self, k: int) -> DivisorClass:
        if not isinstance(k, int):
            return NotImplemented
        return DivisorClass(k * self.a, k * self.b)

    __rmul__ = __mul__

    def __iter__(self):
        yield self.a
        yield self.b

    def as_tuple(self) -> tuple[int, int]:
        return (self.a, self.b)

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


@dataclass(frozen=True)
class Polarization(DivisorClass):
    """A polarization ``h = a*C0 + b*f`` with ``a >= 1``.

    ``assumed_very_ample`` records the caller's standing assumption; nothing
    here certifies very ampleness (see :func:`very_ample_necessary`).
    """

    assumed_very_ample: bool = True

    def __post_init__(self):
        if self.a < 1:
            raise ValidationError(f"polarization needs a >= 1 (h.f = a), got a={self.a}")

    @property
    def divisor(self) -> DivisorClass:
        return DivisorClass(self.a, self.b)


C0 = DivisorClass(1, 0)
FIBER = DivisorClass(0, 1)


def intersect(s: RuledSurfaceParams, d1: DivisorClass, d2: DivisorClass) -> int:
    return d1.a * d2.b + d2.a * d1.b - d1.a * d2.a * s.e


def self_intersection(s: RuledSurfaceParams, d: DivisorClass) -> int:
    return intersect(s, d, d)


def canonical_class(s: RuledSurfaceParams) -> DivisorClass:
    """``K_S = -2*C0 + (k + e)f``; the fibre part has degree ``2g - 2 - e``."""
    return DivisorClass(-2, 2 * s.g - 2 - s.e)


def chi_structure_sheaf(s: RuledSurfaceParams) -> int:
    return 1 - s.g


def chi(s: RuledSurfaceParams, d: DivisorClass) -> int:
    """Euler characteristic of ``O_S(D)`` by Riemann-Roch on the surface.

    ``chi(D) = (1 - g) + D.(D - K_S)/2``.  The product ``D.(D - K_S)`` is
    always even; an odd value means the pairing itself is broken.
    """
    twice = intersect(s, d, d - canonical_class(s))
    if twice % 2:
        raise InvariantViolation(f"D.(D-K) = {twice} is odd for D={d} on {s}")
    return chi_structure_sheaf(s) + twice // 2


def serre_dual_class(s: RuledSurfaceParams, d: DivisorClass) -> DivisorClass:
    return canonical_class(s) - d


def ample_sufficient(s: RuledSurfaceParams, h: DivisorClass) -> bool:
    """Sufficient numerical test used for the twisted polarization.

    Holds iff ``b - g + 1 > a*e/2`` when ``e <= 0`` and ``b - g + 1 > a*e``
    when ``e > 0``.  A ``False`` is not a proof of non-ampleness.
    """
    if h.a < 1:
        raise ValidationError(f"polarization needs a >= 1, got a={h.a}")
    slack = h.b - s.g + 1
    if s.e <= 0:
        # b - g + 1 > a e / 2, cleared of the denominator
        return 2 * slack > h.a * s.e
    return slack > h.a * s.e


def very_ample_necessary(s: RuledSurfaceParams, h: DivisorClass) -> bool:
    """Conjunction of numerical conditions every very ample ``h`` satisfies.

    ``a >= 1``, ``h^2 > 0``, ``h.C0 >= 1`` and, on a surface with ``e = 0``
    over a curve of positive genus, ``h.C0 >= 3`` (the restriction to ``C0``
    embeds a curve of positive genus, so has degree at least 3).
    """
    if h.a < 1:
        return False
    if self_intersection(s, h) <= 0:
        return False
    h_c0 = intersect(s, h, C0)
    if h_c0 < 1:
        return False
    if s.g >= 1 and s.e == 0 and h_c0 < 3:
        return False
    return True


def ampleness_state(s: RuledSurfaceParams, h: DivisorClass) -> str:
    """Tri-state summary: ``"sufficient"``, ``"excluded"`` or ``"undecided"``."""
    if not very_ample_necessary(s, h):
        return "excluded"
    if ample_sufficient(s, h):
        return "sufficient"
    return "undecided"


def half(value: int, what: str) -> int:
    """Exact division by two; raise if ``value`` is odd."""
    if value % 2:
        raise IntegralityError(f"{what} = {value}/2 is not an integer")
    return value // 2
