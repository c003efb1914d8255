"""Exact rational arithmetic and simple continued fractions.

Everything here is integer-exact: Python's arbitrary-precision ints mean
no intermediate can overflow or wrap, so values like (p*q - 1) / p**2 are
safe for any p the sweep cap admits.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence


@dataclass(frozen=True)
class Rational:
    """A non-negative fraction in lowest terms.

    Construct through :func:`make_rational`, which reduces its arguments;
    the constructor itself rejects anything not already reduced.
    """

    numerator: int
    denominator: int

    def __post_init__(self) -> None:
        if self.denominator < 1:
            raise ValueError(f"denominator must be positive, got {self.denominator}")
        if self.numerator < 0:
            raise ValueError(f"numerator must be non-negative, got {self.numerator}")
        if gcd(self.numerator, self.denominator) != 1:
            raise ValueError(
                f"{self.numerator}/{self.denominator} is not in lowest terms"
            )

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


@dataclass(frozen=True)
class ContinuedFraction:
    """Canonical coefficient sequence [a0, a1, ..., an] of a simple continued fraction.

    Canonical means a0 >= 0, every later coefficient is a positive integer,
    and the final coefficient exceeds 1 whenever the sequence has more than
    one term.  Under those rules every non-negative rational has exactly one
    expansion.
    """

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        _validate_raw(coeffs)
        if len(coeffs) > 1 and coeffs[-1] == 1:
            raise ValueError(f"not canonical: trailing coefficient 1 in {list(coeffs)}")

    def __iter__(self):
        return iter(self.coefficients)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __str__(self) -> str:
        return "[" + ", ".join(str(a) for a in self.coefficients) + "]"


@dataclass(frozen=True, order=True)
class HalfInteger:
    """An exact multiple of one half, stored as its doubled value."""

    doubled: int

    def __post_init__(self) -> None:
        if self.doubled < 0:
            raise ValueError(f"doubled value must be non-negative, got {self.doubled}")

    @property
    def is_integral(self) -> bool:
        return self.doubled % 2 == 0

    def as_integer(self) -> int:
        """The value as an int; raises if it is a strict half-integer."""
        if not self.is_integral:
            raise ValueError(f"{self} is not an integer")
        return self.doubled // 2

    def __str__(self) -> str:
        if self.is_integral:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"


def _validate_raw(coeffs: Sequence[int]) -> None:
    """Reject coefficient sequences that are not a simple continued fraction."""
    if len(coeffs) == 0:
        raise ValueError("empty coefficient sequence")
    if coeffs[0] < 0:
        raise ValueError(f"leading coefficient must be non-negative, got {coeffs[0]}")
    for i, a in enumerate(coeffs[1:], start=1):
        if a < 1:
            raise ValueError(f"coefficient a{i} must be positive, got {a}")


def make_rational(numerator: int, denominator: int) -> Rational:
    """Reduce numerator/denominator to lowest terms."""
    if denominator == 0:
        raise ValueError("zero denominator")
    if numerator < 0 or denominator < 0:
        raise ValueError(f"negative input: {numerator}/{denominator}")
    g = gcd(numerator, denominator)
    return Rational(numerator // g, denominator // g)


def cf_expand(r: Rational) -> ContinuedFraction:
    """Expand a rational by the Euclidean algorithm.

    The result is canonical by construction: the algorithm can only end
    with a coefficient of 1 when the whole expansion is the single term [1].
    """
    coeffs = []
    n, d = r.numerator, r.denominator
    while d:
        a, n, d = n // d, d, n % d
        coeffs.append(a)
    return ContinuedFraction(tuple(coeffs))


def cf_value(cf: ContinuedFraction | Sequence[int]) -> Rational:
    """Evaluate a coefficient sequence to its exact rational value.

    Accepts raw (possibly non-canonical) sequences as well, since value
    preservation is exactly what the canonicalization step must be checked
    against.
    """
    coeffs = cf.coefficients if isinstance(cf, ContinuedFraction) else tuple(cf)
    _validate_raw(coeffs)
    num, den = coeffs[-1], 1
    for a in reversed(coeffs[:-1]):
        num, den = a * num + den, num
    return Rational(num, den)


def cf_canonicalize(coefficients: Sequence[int]) -> ContinuedFraction:
    """Merge a trailing 1 into its predecessor: [..., a, 1] -> [..., a + 1].

    This is the only way a simple continued fraction with positive
    coefficients can fail to be canonical, and the merge preserves the
    value because a + 1/1 = a + 1.  General re-normalization of arbitrary
    sequences is out of scope.
    """
    coeffs = list(coefficients)
    _validate_raw(coeffs)
    if len(coeffs) > 1 and coeffs[-1] == 1:
        coeffs.pop()
        coeffs[-1] += 1
    return ContinuedFraction(tuple(coeffs))


def coefficient_sum(cf: ContinuedFraction) -> int:
    """Plain sum of all coefficients."""
    return sum(cf.coefficients)


def skipped_sum(cf: ContinuedFraction) -> int:
    """Sum the coefficients with the Bredon-Wood skip rule, un-halved.

    Walk the coefficients from a0, adding each visited one to a running
    total; whenever the total is even after an addition, skip the next
    coefficient.  The caller halves the total (see :class:`HalfInteger`);
    keeping the doubled value here keeps this step purely integral.
    """
    coeffs = cf.coefficients
    total = 0
    i = 0
    while i < len(coeffs):
        total += coeffs[i]
        i += 2 if total % 2 == 0 else 1
    return total


def bredon_wood_N(x: int, y: int) -> HalfInteger:
    """The Bredon-Wood function N(x, y): half the skipped sum of x/y's expansion.

    Not guaranteed integral for arbitrary coprime arguments; callers that
    need an integer must check (see the crosscap computation).
    """
    if x < 1 or y < 1:
        raise ValueError(f"arguments must be positive, got ({x}, {y})")
    if gcd(x, y) != 1:
        raise ValueError(f"arguments must be coprime, got ({x}, {y})")
    return HalfInteger(skipped_sum(cf_expand(make_rational(x, y))))


def lemma9_expansions(
    cf_q_over_p: ContinuedFraction,
) -> tuple[ContinuedFraction, ContinuedFraction]:
    """Teragaito's expansion identity relating q/p to (p*q - 1)/p^2 and (p*q + 1)/p^2.

    Given the canonical expansion [0, a1, ..., an] of q/p with p > q > 1
    coprime, both target expansions are obtained by replacing the final
    coefficient an with the pair (an + 1, an - 1) or (an - 1, an + 1) and
    then appending the reversed prefix a(n-1), ..., a1.  Which pair order
    belongs to which sign depends on the parity of n: for the minus sign
    the order is (an + 1, an - 1) when n is odd and (an - 1, an + 1) when
    n is even; the plus sign takes the opposite order.  A trailing a1 = 1
    is merged canonically.

    Returns (cf_minus, cf_plus) for (p*q - 1)/p^2 and (p*q + 1)/p^2.
    """
    coeffs = cf_q_over_p.coefficients
    if coeffs[0] != 0:
        raise ValueError(
            f"expected the expansion of q/p with p > q (leading coefficient 0), got {list(coeffs)}"
        )
    if len(coeffs) < 3:
        raise ValueError(f"q must exceed 1, but {list(coeffs)} is the expansion of 1/a1")
    n = len(coeffs) - 1
    head = list(coeffs[:-1])
    last = coeffs[-1]
    reversed_prefix = list(coeffs[n - 1 : 0 : -1])
    if n % 2 == 1:
        minus_mid, plus_mid = [last + 1, last - 1], [last - 1, last + 1]
    else:
        minus_mid, plus_mid = [last - 1, last + 1], [last + 1, last - 1]
    cf_minus = cf_canonicalize(head + minus_mid + reversed_prefix)
    cf_plus = cf_canonicalize(head + plus_mid + reversed_prefix)
    return cf_minus, cf_plus
