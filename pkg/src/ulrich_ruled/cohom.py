"""Cohomology models for line bundles on ruled surfaces.

Three levels of knowledge live here:

* an exact oracle for genus 0, where ``E = O + O(-e)`` splits and every
  ``h^i`` of ``O_S(tC0 + bf)`` is a finite sum over line bundles on the
  projective line;
* a generic-curve model for ``g >= 1``: a general line bundle of degree
  ``d`` has ``h^0 = max(0, d - g + 1)``;
* sandwich bounds for ``h^0`` of twisted symmetric powers ``S^t E (d)``,
  coming from the filtration with quotients ``O(d + i*e_det)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import IntegralityError, ValidationError
from .surface import DivisorClass, RuledSurfaceParams, chi, serre_dual_class

__all__ = [
    "Mode",
    "CohomologyVector",
    "H0Bounds",
    "h0_line_generic",
    "h0_p1",
    "h1_p1",
    "clifford_upper",
    "h0_sym_bounds",
    "oracle_cohomology_g0",
    "RaynaudStatus",
    "RaynaudVerdict",
    "raynaud_status",
]


class Mode(enum.Enum):
    EXACT = "EXACT"
    GENERIC_MODEL = "GENERIC_MODEL"


@dataclass(frozen=True)
class CohomologyVector:
    h0: int
    h1: int
    h2: int
    mode: Mode = Mode.EXACT

    def __post_init__(self):
        if min(self.h0, self.h1, self.h2) < 0:
            raise ValidationError(f"negative cohomology dimension in {self}")

    @property
    def euler(self) -> int:
        return self.h0 - self.h1 + self.h2

    def __getitem__(self, i: int) -> int:
        return (self.h0, self.h1, self.h2)[i]

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.h0, self.h1, self.h2)


@dataclass(frozen=True)
class H0Bounds:
    lo: int
    hi: int

    def __post_init__(self):
        if not 0 <= self.lo <= self.hi:
            raise ValidationError(f"bad bounds [{self.lo}, {self.hi}]")

    def __contains__(self, value: int) -> bool:
        return self.lo <= value <= self.hi


def h0_p1(d: int) -> int:
    return max(0, d + 1)


def h1_p1(d: int) -> int:
    return max(0, -d - 1)


def h0_line_generic(g: int, d: int) -> int:
    """``h^0`` of a general line bundle of degree ``d`` on a genus ``g`` curve.

    This is also the Riemann-Roch lower bound valid for every line bundle.
    """
    if g < 0:
        raise ValidationError(f"genus must be non-negative, got {g}")
    return max(0, d - g + 1)


def clifford_upper(g: int, d: int) -> int:
    """Upper bound for ``h^0`` of any line bundle of degree ``d``.

    Negative degree has no sections, ``d > 2g - 2`` is non-special, and in
    the special range Clifford's theorem gives ``floor(d/2) + 1``.
    """
    if g < 0:
        raise ValidationError(f"genus must be non-negative, got {g}")
    if d < 0:
        return 0
    if d > 2 * g - 2:
        return d - g + 1
    return d // 2 + 1


_MODELS = {"generic": h0_line_generic, "clifford": clifford_upper}


def h0_sym_bounds(s: RuledSurfaceParams, t: int, d: int, model: str = "generic") -> H0Bounds:
    """Bounds on ``h^0(C, S^t E (d))`` for a divisor of degree ``d``.

    The lower bound comes from ``O(d) -> S^t E (d)`` and is the Riemann-Roch
    value ``max(0, d - g + 1)``.  The upper bound sums the graded pieces
    ``O(d + i*det E)``, ``i = 0..t``, each of degree ``d - i*e``, evaluated
    with ``model``:

    ``"generic"``
        general twist; valid when every graded piece is a general bundle.
    ``"clifford"``
        worst case over all line bundles of that degree.

    Over the projective line the bundle splits and the sum is exact, so both
    ends collapse to it.
    """
    if t < 0:
        raise ValidationError(f"symmetric power exponent must be >= 0, got {t}")
    try:
        piece = _MODELS[model]
    except KeyError:
        raise ValidationError(f"unknown model {model!r}; expected one of {sorted(_MODELS)}") from None
    hi = sum(piece(s.g, d - i * s.e) for i in range(t + 1))
    if s.g == 0:
        return H0Bounds(hi, hi)
    return H0Bounds(h0_line_generic(s.g, d), hi)


def oracle_cohomology_g0(s: RuledSurfaceParams | int, d: DivisorClass) -> CohomologyVector:
    """Exact ``(h0, h1, h2)`` of ``O(tC0 + bf)`` on the Hirzebruch surface ``F_e``.

    For ``t >= 0`` the projection formula reduces to the split bundle
    ``S^t E (b) = sum_{i=0..t} O(b - i e)`` on the projective line, which has
    no ``h^2``.  ``t = -1`` has no cohomology at all, and ``t <= -2`` is
    handled by Serre duality against ``K - D``.
    """
    if isinstance(s, int):
        s = RuledSurfaceParams(0, s)
    if s.g != 0:
        raise ValidationError(f"exact oracle only covers genus 0, got g={s.g}")
    t, b = d.a, d.b
    if t >= 0:
        h0 = sum(h0_p1(b - i * s.e) for i in range(t + 1))
        h1 = sum(h1_p1(b - i * s.e) for i in range(t + 1))
        return CohomologyVector(h0, h1, 0)
    if t == -1:
        return CohomologyVector(0, 0, 0)
    dual = oracle_cohomology_g0(s, serre_dual_class(s, d))
    return CohomologyVector(dual.h2, dual.h1, dual.h0)


def oracle_matches_chi(s: RuledSurfaceParams, d: DivisorClass) -> bool:
    return oracle_cohomology_g0(s, d).euler == chi(s, d)


class RaynaudStatus(enum.Enum):
    HOLDS = "HOLDS"
    HOLDS_GENERIC = "HOLDS_GENERIC"
    FAILS = "FAILS"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class RaynaudVerdict:
    status: RaynaudStatus
    citation: str


def raynaud_status(s: RuledSurfaceParams, a: int) -> RaynaudVerdict:
    """What is known about Raynaud's condition for ``S^{a-1}E(u)``, ``deg u = d(a,g,e)``.

    The twisted bundle has slope exactly ``g - 1``, so the condition reads
    ``h^0 = 0`` for a general twist ``u``.
    """
    if a < 1:
        raise ValidationError(f"a must be >= 1, got {a}")
    if ((a - 1) * s.e) % 2:
        raise IntegralityError(
            f"(a-1)e = {(a - 1) * s.e} is odd: the twist degree g-1+(a-1)e/2 is not an integer"
        )
    g, e = s.g, s.e
    if (a - 1) * e == 0:
        return RaynaudVerdict(
            RaynaudStatus.HOLDS,
            "(a-1)e=0: general u in Pic^(g-1) off the theta divisor kills every graded piece",
        )
    if e > 0:
        return RaynaudVerdict(
            RaynaudStatus.FAILS,
            "e>0, a>=2: no Ulrich line bundles, so no twist is acyclic",
        )
    if g == 1:
        return RaynaudVerdict(
            RaynaudStatus.HOLDS,
            "Raynaud Cor. 1.7.3: semistable bundles on an elliptic curve (g=1, e=-1, a odd)",
        )
    if a == 2:
        return RaynaudVerdict(
            RaynaudStatus.HOLDS,
            "Raynaud Prop. 1.6.2: semistable rank 3 bundle S^2E(u) (a=2, e even)",
        )
    if a == 3 and g == 2:
        return RaynaudVerdict(
            RaynaudStatus.HOLDS,
            "Raynaud Cor. 1.7.4: semistable rank 4 bundle on a genus 2 curve (a=3, g=2)",
        )
    if a == 3:
        return RaynaudVerdict(
            RaynaudStatus.HOLDS_GENERIC,
            "Raynaud section 2.5: semistable rank 4 bundle on a general curve (a=3)",
        )
    return RaynaudVerdict(RaynaudStatus.UNKNOWN, "no known result for this (g, e, a)")
