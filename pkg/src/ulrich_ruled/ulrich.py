"""Ulrich line bundles on a ruled surface ``S`` polarized by ``h = a*C0 + b*f``.

A line bundle ``O_S(D)`` is Ulrich iff ``O_S(D - h)`` has no sections, its
Ulrich dual ``3h + K_S - D`` shifted by ``-h`` has no sections either, and
the two numerical identities

    D^2 = 2(h^2 - 1 + g) + D.K_S,     D.h = (3h^2 + h.K_S) / 2

hold.  The solutions come in two families, distinguished by ``D.f``:

* ``HIGH``: ``(2a-1)C0 + (b + u)f``
* ``LOW``:  ``(a-1)C0 + (2b + 2g - 2 - e - u)f``

with ``deg u = g - 1 + (a-1)e/2`` and ``h^0(S^{a-1}E(u)) = 0``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .cohom import oracle_cohomology_g0
from .errors import IntegralityError, ValidationError
from .moduli import ThetaStatus, theta_proper_status
from .surface import (
    DivisorClass,
    RuledSurfaceParams,
    canonical_class,
    intersect,
    self_intersection,
    very_ample_necessary,
)

__all__ = [
    "Family",
    "UlrichCandidate",
    "Outcome",
    "UlrichVerdict",
    "CITATIONS",
    "ulrich_twist_degree",
    "candidate_classes",
    "ulrich_dual",
    "numerical_ulrich_check",
    "definitional_ulrich_check_g0",
    "brute_force_ulrich_g0",
    "existence_verdict",
]


def ulrich_twist_degree(g: int, e: int, a: int) -> tuple[Fraction, bool]:
    """Return ``(g - 1 + (a-1)e/2, is_integral)``."""
    if a < 1:
        raise ValidationError(f"a must be >= 1, got {a}")
    value = Fraction(g - 1) + Fraction((a - 1) * e, 2)
    return value, value.denominator == 1


class Family(enum.Enum):
    HIGH = "HIGH"
    LOW = "LOW"


@dataclass(frozen=True)
class UlrichCandidate:
    cls: DivisorClass
    family: Family
    u_degree: int
    genericity_required: bool


def _twist_degree_or_raise(s: RuledSurfaceParams, a: int) -> int:
    d, integral = ulrich_twist_degree(s.g, s.e, a)
    if not integral:
        raise IntegralityError(
            f"(a-1)e = {(a - 1) * s.e} is odd: no Ulrich line bundles (twist degree {d})"
        )
    return int(d)


def candidate_classes(s: RuledSurfaceParams, h: DivisorClass) -> tuple[UlrichCandidate, UlrichCandidate]:
    """The two Ulrich line-bundle classes, ``(HIGH, LOW)``.

    They are Ulrich duals of each other and sum to ``3h + K_S``.  Whether an
    admissible ``u`` exists is a separate question (see
    :func:`existence_verdict`); on a curve of positive genus the class is
    realized only for a general ``u`` of the right degree.
    """
    a, b = h.a, h.b
    if a < 1:
        raise ValidationError(f"polarization needs a >= 1, got a={a}")
    u = _twist_degree_or_raise(s, a)
    generic = s.g >= 1
    high = UlrichCandidate(DivisorClass(2 * a - 1, b + u), Family.HIGH, u, generic)
    low = UlrichCandidate(
        DivisorClass(a - 1, 2 * b + 2 * s.g - 2 - s.e - u), Family.LOW, u, generic
    )
    return high, low


def ulrich_dual(s: RuledSurfaceParams, h: DivisorClass, d: DivisorClass) -> DivisorClass:
    return 3 * DivisorClass(h.a, h.b) + canonical_class(s) - d


def numerical_ulrich_check(s: RuledSurfaceParams, h: DivisorClass, d: DivisorClass) -> bool:
    k = canonical_class(s)
    h2 = self_intersection(s, h)
    hk = intersect(s, h, k)
    if (3 * h2 + hk) % 2:
        raise IntegralityError(f"(3h^2 + hK)/2 = ({3 * h2 + hk})/2 is not an integer")
    first = self_intersection(s, d) == 2 * (h2 - 1 + s.g) + intersect(s, d, k)
    second = intersect(s, d, h) == (3 * h2 + hk) // 2
    return first and second


def definitional_ulrich_check_g0(s: RuledSurfaceParams | int, h: DivisorClass, d: DivisorClass) -> bool:
    """Check the four defining vanishings on ``F_e`` with the exact oracle.

    ``h^0(D-h) = h^1(D-h) = h^1(D-2h) = h^2(D-2h) = 0``.
    """
    if isinstance(s, int):
        s = RuledSurfaceParams(0, s)
    h = DivisorClass(h.a, h.b)
    once = oracle_cohomology_g0(s, d - h)
    twice = oracle_cohomology_g0(s, d - 2 * h)
    return once.h0 == 0 and once.h1 == 0 and twice.h1 == 0 and twice.h2 == 0


def brute_force_ulrich_g0(s: RuledSurfaceParams | int, h: DivisorClass, limit: int = 12) -> list[DivisorClass]:
    """All classes ``(t, b)`` with ``|t|, |b| <= limit`` passing the definitional check."""
    if isinstance(s, int):
        s = RuledSurfaceParams(0, s)
    span = range(-limit, limit + 1)
    return [
        DivisorClass(t, b)
        for t, b in itertools.product(span, span)
        if definitional_ulrich_check_g0(s, h, DivisorClass(t, b))
    ]


class Outcome(enum.Enum):
    EXISTS = "EXISTS"
    EXISTS_GENERIC_BUNDLE = "EXISTS_GENERIC_BUNDLE"
    EXISTS_GENERIC_CURVE_AND_BUNDLE = "EXISTS_GENERIC_CURVE_AND_BUNDLE"
    NOT_EXISTS = "NOT_EXISTS"
    OPEN = "OPEN"


CITATIONS = {
    "positive_e_a1": "e>0: Ulrich line bundles exist iff a=1",
    "positive_e": "e>0: Ulrich line bundles exist iff a=1 (here a>=2)",
    "parity": "twist degree g-1+(a-1)e/2 must be an integer; (a-1)e odd excludes Ulrich line bundles",
    "untwisted": "(a-1)e=0: two g-dimensional families, u general in Pic^(g-1) off the theta divisor",
    "elliptic": "e<0, g=1: Ulrich line bundles iff a odd (Raynaud Cor. 1.7.3)",
    "a2": "e<0, a=2: Ulrich line bundles iff e even (Raynaud Prop. 1.6.2)",
    "a3_g2": "e<0, a=3, g=2: Ulrich line bundles exist (Raynaud Cor. 1.7.4)",
    "a3_general_curve": "e<0, a=3, C general in moduli: Ulrich line bundles exist (Raynaud section 2.5)",
    "theta_even": "e<0 even, E generic: theta divisor of S^(a-1)E is proper, Ulrich line bundles exist",
    "theta_odd": "e<0 odd, a odd, C and E generic: theta divisor of S^(a-1)E is proper, Ulrich line bundles exist",
    "open": "e<0 parity-admissible: decided only for generic data; some (C, E) with these invariants works",
}


@dataclass(frozen=True)
class UlrichVerdict:
    outcome: Outcome
    citation: str
    rule: str
    family_dimension: int | None = None
    violated: str | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)
    generic_bundle: bool = False
    generic_curve: bool = False


_LINE_ONLY_NOTE = "obstruction concerns line bundles; rank-2 Ulrich bundles are not excluded"


def existence_verdict(
    s: RuledSurfaceParams,
    h: DivisorClass,
    generic_bundle: bool = False,
    generic_curve: bool = False,
) -> UlrichVerdict:
    """Decide existence of Ulrich line bundles on ``(S, h)``.

    First match wins, so complete statements dominate partial ones:

    1. ``e > 0, a = 1``: exists.
    2. ``e > 0, a >= 2``: none.
    3. ``(a-1)e`` odd: none (parity).
    4. ``(a-1)e = 0``: exists, in families of dimension ``g``.
    5. ``e < 0`` with ``g = 1``, ``a = 2``, ``a = 3, g = 2``, or ``a = 3``
       on a general curve: exists.
    6. otherwise generic-theta results apply if the caller asserts the
       matching genericity, else the case is ``OPEN``.

    Genericity flags are assumptions supplied by the caller and are echoed
    back unchanged.
    """
    if not very_ample_necessary(s, h):
        raise ValidationError(f"h={DivisorClass(h.a, h.b)} fails the necessary very-ampleness conditions on {s}")
    g, e, a = s.g, s.e, h.a
    flags = {"generic_bundle": generic_bundle, "generic_curve": generic_curve}

    def verdict(outcome, key, **kw):
        return UlrichVerdict(outcome, CITATIONS[key], key, **kw, **flags)

    if e > 0 and a == 1:
        return verdict(Outcome.EXISTS, "positive_e_a1", family_dimension=g)
    if e > 0:
        return verdict(Outcome.NOT_EXISTS, "positive_e", violated="e>0 and a>=2")
    if ((a - 1) * e) % 2:
        return verdict(
            Outcome.NOT_EXISTS, "parity", violated="(a-1)e odd", notes=(_LINE_ONLY_NOTE,)
        )
    if (a - 1) * e == 0:
        return verdict(Outcome.EXISTS, "untwisted", family_dimension=g)

    # from here on e < 0, a >= 2 and (a-1)e is even
    if g == 1:
        return verdict(Outcome.EXISTS, "elliptic")
    if a == 2:
        return verdict(Outcome.EXISTS, "a2")
    if a == 3 and g == 2:
        return verdict(Outcome.EXISTS, "a3_g2")
    if a == 3 and generic_curve:
        return verdict(Outcome.EXISTS_GENERIC_CURVE_AND_BUNDLE, "a3_general_curve")

    theta = theta_proper_status(s, a, generic_bundle=generic_bundle, generic_curve=generic_curve)
    if theta is ThetaStatus.PROPER_GENERIC_BUNDLE and generic_bundle:
        return verdict(Outcome.EXISTS_GENERIC_BUNDLE, "theta_even")
    if theta is ThetaStatus.PROPER_GENERIC_CURVE_AND_BUNDLE and generic_bundle and generic_curve:
        return verdict(Outcome.EXISTS_GENERIC_CURVE_AND_BUNDLE, "theta_odd")
    return verdict(
        Outcome.OPEN,
        "open",
        notes=("pass --generic-bundle (and --generic-curve when e is odd) to apply the theta results",),
    )
