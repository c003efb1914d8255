"""Torus-knot invariants: genus, crossing number, crosscap number, and bounds.

A (a, b) torus curve is a knot exactly when gcd(a, b) = 1; it is trivial
(the unknot) when either parameter is 1.  Knots are normalized to p > q >= 2.
The crosscap number comes from Teragaito's classification: for an even knot
(even p*q) it is N(even parameter, odd parameter); for an odd knot it is
min{N(p*q - 1, p^2), N(p*q + 1, p^2)}.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .continued_fractions import (
    HalfInteger,
    bredon_wood_N,
)


class Parity(Enum):
    """Knot parity: even iff p*q is even."""

    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class TorusKnot:
    """Normalized coprime parameter pair with p > q >= 2."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 2 or self.p <= self.q:
            raise ValueError(f"need p > q >= 2, got ({self.p}, {self.q})")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"({self.p}, {self.q}) is not coprime: a link, not a knot")

    @property
    def parity(self) -> Parity:
        return Parity.EVEN if (self.p * self.q) % 2 == 0 else Parity.ODD

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


@dataclass(frozen=True)
class Unknot:
    """The trivial knot, kept distinct so TorusKnot invariants stay crisp."""

    def __str__(self) -> str:
        return "unknot"


UNKNOT = Unknot()


@dataclass(frozen=True)
class Bounds:
    """The four upper bounds on the crosscap number.

    clark = 2g + 1 and murakami_yasuhara = floor(n/2) are the general
    bounds; thm1 = floor((g + 9)/6) and thm2 = floor((n + 16)/12) are the
    sharpened torus-knot bounds this artifact verifies.
    """

    clark: int
    murakami_yasuhara: int
    thm1: int
    thm2: int


@dataclass(frozen=True)
class InvariantRecord:
    """All computed invariants and bounds for one knot.

    No cross-field constraints are enforced here: whether crosscap really
    stays below every bound is exactly what the verification harness
    checks, so a violation must be representable.
    """

    knot: TorusKnot | Unknot
    parity: Parity | None
    genus: int
    crossing: int
    crosscap: int
    bounds: Bounds
    gap: int

    def as_dict(self) -> dict:
        """Flat field mapping in the wire order used by JSON and CSV output."""
        if isinstance(self.knot, TorusKnot):
            p, q = self.knot.p, self.knot.q
        else:
            p, q = 0, 0
        return {
            "p": p,
            "q": q,
            "parity": self.parity.value if self.parity is not None else "unknot",
            "genus": self.genus,
            "crossing": self.crossing,
            "crosscap": self.crosscap,
            "bound_clark": self.bounds.clark,
            "bound_my": self.bounds.murakami_yasuhara,
            "bound_thm1": self.bounds.thm1,
            "bound_thm2": self.bounds.thm2,
            "gap": self.gap,
        }


@dataclass(frozen=True)
class Q3Form:
    """Decomposition p = 6m + sign for odd p coprime to 3."""

    m: int
    sign: int

    def __post_init__(self) -> None:
        if self.sign not in (-1, 1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")

    @property
    def p(self) -> int:
        return 6 * self.m + self.sign


class IntegralityError(Exception):
    """A skipped total consumed by the crosscap computation was odd.

    Teragaito's classification always yields an integer; a half-integer
    here means the computation itself is broken, so it must abort loudly
    rather than round.
    """

    def __init__(self, knot: TorusKnot, value: HalfInteger):
        self.knot = knot
        self.value = value
        super().__init__(
            f"non-integral crosscap candidate N = {value} for torus knot {knot}"
        )


def normalize(a: int, b: int) -> TorusKnot | Unknot:
    """Order a coprime positive pair into a TorusKnot, or the Unknot if either is 1."""
    if a < 1 or b < 1:
        raise ValueError(f"parameters must be positive, got ({a}, {b})")
    if gcd(a, b) != 1:
        raise ValueError(f"({a}, {b}) is not coprime: a link, not a knot")
    if min(a, b) == 1:
        return UNKNOT
    return TorusKnot(max(a, b), min(a, b))


def genus(k: TorusKnot) -> int:
    """Seifert genus (p - 1)(q - 1)/2."""
    return (k.p - 1) * (k.q - 1) // 2


def crossing_number(k: TorusKnot) -> int:
    """Minimal crossing number p(q - 1), using the p > q normalization."""
    return k.p * (k.q - 1)


def crosscap(k: TorusKnot | Unknot) -> int:
    """Crosscap number via Teragaito's classification.

    The even parameter always goes first in the even-knot call to N.  Every
    candidate N value consumed here must be integral; an odd skipped total
    raises :class:`IntegralityError`.
    """
    if isinstance(k, Unknot):
        return 0
    if k.parity is Parity.EVEN:
        even, odd = (k.p, k.q) if k.p % 2 == 0 else (k.q, k.p)
        candidates = [bredon_wood_N(even, odd)]
    else:
        p_sq = k.p * k.p
        candidates = [
            bredon_wood_N(k.p * k.q - 1, p_sq),
            bredon_wood_N(k.p * k.q + 1, p_sq),
        ]
    for value in candidates:
        if not value.is_integral:
            raise IntegralityError(k, value)
    return min(value.as_integer() for value in candidates)


def bounds_for(genus: int, crossing: int) -> Bounds:
    """Evaluate all four crosscap bounds from genus g and crossing number n."""
    if genus < 0 or crossing < 0:
        raise ValueError(f"genus and crossing must be non-negative, got ({genus}, {crossing})")
    return Bounds(
        clark=2 * genus + 1,
        murakami_yasuhara=crossing // 2,
        thm1=(genus + 9) // 6,
        thm2=(crossing + 16) // 12,
    )


def _require_q3_p(p: int) -> None:
    if p <= 3 or p % 2 == 0 or p % 3 == 0:
        raise ValueError(f"p must be odd, greater than 3, and coprime to 3, got {p}")


def q3_closed_form(p: int) -> tuple[Q3Form, int]:
    """Closed-form crosscap number m + 1 for the (p, 3) knot, p = 6m +/- 1."""
    _require_q3_p(p)
    if p % 6 == 1:
        form = Q3Form((p - 1) // 6, 1)
    else:
        form = Q3Form((p + 1) // 6, -1)
    return form, form.m + 1


def q3_congruence_selector(p: int) -> int:
    """Which branch attains the (p, 3) crosscap minimum, by congruence parity.

    Solves 3x = -1 (mod p) for x in [1, p - 1]: an even solution means the
    N(p*q - 1, p^2) branch attains the minimum (return -1), an odd one the
    N(p*q + 1, p^2) branch (return +1).
    """
    _require_q3_p(p)
    x = (-pow(3, -1, p)) % p
    return -1 if x % 2 == 0 else 1


def mobius_family(n: int) -> tuple[TorusKnot, InvariantRecord]:
    """The (2n + 1, 2) knot and its expected invariants: genus n, crosscap 1.

    These knots bound a Mobius band, so the genus-minus-crosscap gap n - 1
    grows without bound along the family.
    """
    if n < 1:
        raise ValueError(f"family index must be positive, got {n}")
    knot = TorusKnot(2 * n + 1, 2)
    g, cr = n, 2 * n + 1
    expected = InvariantRecord(knot, Parity.EVEN, g, cr, 1, bounds_for(g, cr), n - 1)
    return knot, expected


def sharp_family(n: int) -> tuple[TorusKnot, InvariantRecord]:
    """The (6n - 2, 3) knot and its expected invariants, with both sharpened bounds tight.

    Genus 6n - 3, crossing number 12n - 4, crosscap n + 1, and the two
    sharpened bounds both equal n + 1 exactly.
    """
    if n < 1:
        raise ValueError(f"family index must be positive, got {n}")
    knot = TorusKnot(6 * n - 2, 3)
    g, cr, c = 6 * n - 3, 12 * n - 4, n + 1
    expected_bounds = Bounds(
        clark=2 * g + 1,
        murakami_yasuhara=cr // 2,
        thm1=c,
        thm2=c,
    )
    expected = InvariantRecord(knot, Parity.EVEN, g, cr, c, expected_bounds, g - c)
    return knot, expected


def invariants(k: TorusKnot | Unknot) -> InvariantRecord:
    """Fully populated invariant record for a knot; all zeros for the unknot."""
    if isinstance(k, Unknot):
        return InvariantRecord(k, None, 0, 0, 0, Bounds(0, 0, 0, 0), 0)
    g = genus(k)
    cr = crossing_number(k)
    c = crosscap(k)
    return InvariantRecord(k, k.parity, g, cr, c, bounds_for(g, cr), g - c)
