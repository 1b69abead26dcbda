"""Theta-divisor targets and Segre-invariant strata for bundles on a curve.

For a bundle ``F`` of rank ``r`` and degree ``d`` put ``j = gcd(r, d)``,
``r = j*r1``, ``d = j*d1``.  Its theta locus lives in ``U(r1, r1(g-1) - d1)``,
the moduli space where ``chi(F x F1) = 0``; when ``r1 = 1`` that space is a
Picard variety.  Ulrich line bundles on ``P(E)`` with ``h.f = a`` correspond
to the theta locus of ``S^{a-1}E`` being a proper divisor of
``Pic^{d(a,g,e)}``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import IntegralityError, ValidationError
from .surface import RuledSurfaceParams

__all__ = [
    "ThetaTarget",
    "theta_target",
    "SymPowerInvariants",
    "sym_power_invariants",
    "SegreStratum",
    "StratumError",
    "stratum",
    "valid_segre_values",
    "NormalizedTwist",
    "normalized_twist",
    "ThetaStatus",
    "theta_proper_status",
    "ODD_DEGREE_EVERY_CURVE_CONJECTURE",
]


@dataclass(frozen=True)
class ThetaTarget:
    r: int
    d: int
    j: int
    r1: int
    d1: int
    degree: int

    @property
    def is_picard(self) -> bool:
        return self.r1 == 1

    def __str__(self) -> str:
        if self.is_picard:
            return f"Pic^{self.degree}"
        return f"U({self.r1},{self.degree})"


def theta_target(g: int, r: int, d: int) -> ThetaTarget:
    if r < 1:
        raise ValidationError(f"rank must be >= 1, got {r}")
    j = math.gcd(r, d)
    r1, d1 = r // j, d // j
    return ThetaTarget(r, d, j, r1, d1, r1 * (g - 1) - d1)


@dataclass(frozen=True)
class SymPowerInvariants:
    rank: int
    degree: int
    twist_degree: Fraction
    twist_integral: bool
    twisted_slope: Fraction


def sym_power_invariants(s: RuledSurfaceParams, a: int) -> SymPowerInvariants:
    """Rank, degree and twisted slope of ``S^{a-1}E``.

    ``deg S^{a-1}E = -a(a-1)e/2`` is always an integer.  Twisting by a
    divisor of degree ``g - 1 + (a-1)e/2`` (integral iff ``(a-1)e`` is even)
    lands at slope exactly ``g - 1``.
    """
    if a < 1:
        raise ValidationError(f"a must be >= 1, got {a}")
    degree = -(a * (a - 1) * s.e) // 2
    twist = Fraction(s.g - 1) + Fraction((a - 1) * s.e, 2)
    slope = Fraction(degree, a) + twist
    return SymPowerInvariants(a, degree, twist, twist.denominator == 1, slope)


@dataclass(frozen=True)
class SegreStratum:
    g: int
    r: int
    d: int
    r_prime: int
    s: int
    dimension: int
    # next stratum U_{r',s+r} whose closure contains this one; None at the top
    closure_successor: int | None


class StratumError(ValidationError):
    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


def _max_segre(g: int, r: int, r_prime: int) -> int:
    return r_prime * (r - r_prime) * (g - 1)


def valid_segre_values(g: int, r: int, d: int, r_prime: int) -> list[int]:
    top = _max_segre(g, r, r_prime)
    return [s for s in range(1, top + 1) if (s - r_prime * d) % r == 0]


def stratum(g: int, r: int, d: int, r_prime: int, s: int) -> SegreStratum:
    """Validated stratum ``U_{r',s}(r, d)`` of bundles with Segre invariant ``s``.

    All violated constraints are reported together.
    """
    problems = []
    if g < 0:
        problems.append(f"genus must be non-negative, got g={g}")
    if not 0 < r_prime < r:
        problems.append(f"need 0 < r' < r, got r'={r_prime}, r={r}")
    if g <= 1:
        problems.append(f"g={g}: there are no integers s satisfying the restrictions (need g >= 2)")
    if problems:
        raise StratumError(problems)
    top = _max_segre(g, r, r_prime)
    if s <= 0:
        problems.append(f"s={s} must be positive")
    if s > top:
        problems.append(f"s={s} exceeds r'(r-r')(g-1) = {top}")
    if (s - r_prime * d) % r:
        problems.append(f"s={s} is not congruent to r'd = {r_prime * d} mod r={r}")
    if problems:
        raise StratumError(problems)
    dimension = r * r * (g - 1) + 1 + s - top
    successor = s + r if s + r <= top else None
    return SegreStratum(g, r, d, r_prime, s, dimension, successor)


@dataclass(frozen=True)
class NormalizedTwist:
    normalized_degree: int
    twist_degree: int
    ok: bool


def normalized_twist(g: int, d: int, s: int) -> NormalizedTwist:
    """Normalize a rank-2 bundle of degree ``d`` with Segre invariant ``s``.

    Tensoring by a line bundle of degree ``(d - s)/2`` yields a normalized
    bundle of degree ``s``; such a bundle exists only for ``0 < s <= g``.
    """
    if (d - s) % 2:
        raise IntegralityError(f"d - s = {d - s} is odd: no twisting line bundle of degree (d-s)/2")
    return NormalizedTwist(s, (d - s) // 2, 0 < s <= g)


class ThetaStatus(enum.Enum):
    PROPER_GENERIC_BUNDLE = "PROPER_GENERIC_BUNDLE"
    PROPER_GENERIC_CURVE_AND_BUNDLE = "PROPER_GENERIC_CURVE_AND_BUNDLE"
    NOT_PROPER = "NOT_PROPER"
    UNKNOWN = "UNKNOWN"


ODD_DEGREE_EVERY_CURVE_CONJECTURE = (
    "conjectural, not asserted: for odd e the theta divisor should be proper on every curve, "
    "not only a general one"
)


def theta_proper_status(
    s: RuledSurfaceParams,
    a: int,
    generic_bundle: bool = False,
    generic_curve: bool = False,
) -> ThetaStatus:
    """Known properness of the theta locus of ``S^{a-1}E`` inside ``Pic^{d(a,g,e)}``.

    Even ``e``: proper for ``E`` generic on any curve.  Odd ``e``: proper for
    odd ``a`` when the curve is general; the every-curve version is only
    conjectured.  For ``e > 0`` the locus is the whole space.
    """
    if a < 2:
        raise ValidationError(f"a must be >= 2, got {a}")
    if s.e > 0:
        return ThetaStatus.NOT_PROPER
    if s.e % 2 == 0:
        return ThetaStatus.PROPER_GENERIC_BUNDLE
    if a % 2 == 1 and generic_curve:
        return ThetaStatus.PROPER_GENERIC_CURVE_AND_BUNDLE
    return ThetaStatus.UNKNOWN
