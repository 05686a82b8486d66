"""Integer machinery behind the constructive families.

Extended Euclid, two-variable linear Diophantine solving, exact
perfect-square detection, and the two dedicated constructions for the
subtraction-over-multiplication (case 12) and addition-over-division
(case 13) integer families.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterator, NamedTuple

from .identity import Triple
from .rational import DomainError

__all__ = [
    "DiophantineSolutionSet",
    "ExtGcdResult",
    "case12_construct",
    "case12_enumerate",
    "case13_family5",
    "ext_gcd",
    "is_perfect_square",
    "solve_linear_diophantine",
]


class ExtGcdResult(NamedTuple):
    g: int
    x: int
    y: int


def ext_gcd(a: int, b: int) -> ExtGcdResult:
    """Extended Euclid: returns (g, x, y) with a*x + b*y == g == gcd(|a|, |b|).

    g is always nonnegative; ext_gcd(0, 0) is (0, 0, 0) by convention.
    """
    if a == 0 and b == 0:
        return ExtGcdResult(0, 0, 0)
    old_r, r = abs(a), abs(b)
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return ExtGcdResult(
        old_r,
        old_x if a >= 0 else -old_x,
        old_y if b >= 0 else -old_y,
    )


@dataclass(frozen=True)
class DiophantineSolutionSet:
    """All integer solutions of p*x + q*y = t, as base + k*step.

    When `empty` is false, the solutions are exactly
    (x0 + k*dx, y0 + k*dy) for integer k, with (x0, y0) = base and
    (dx, dy) = step.
    """

    empty: bool
    base: tuple[int, int] | None = None
    step: tuple[int, int] | None = None

    def at(self, k: int) -> tuple[int, int]:
        if self.empty:
            raise DomainError("solution set is empty")
        (x0, y0), (dx, dy) = self.base, self.step
        return (x0 + k * dx, y0 + k * dy)


def solve_linear_diophantine(p: int, q: int, t: int) -> DiophantineSolutionSet:
    """Solve p*x + q*y = t over the integers.

    Empty iff gcd(|p|, |q|) does not divide t. Otherwise the step is
    (q/g, -p/g) and the base is normalized so that x0 is the smallest
    solution value >= 1 (the x variable usually plays the role of a
    greatest common divisor in the constructions here, hence >= 1). When
    q == 0 the x coordinate is fixed and y0 is normalized the same way.
    """
    if p == 0 and q == 0:
        raise DomainError("p and q must not both be zero")
    g, x, y = ext_gcd(p, q)
    if t % g:
        return DiophantineSolutionSet(empty=True)
    scale = t // g
    x0, y0 = x * scale, y * scale
    dx, dy = q // g, -(p // g)
    if dx != 0:
        m = abs(dx)
        target = (x0 - 1) % m + 1
        k = (target - x0) // dx
        x0, y0 = target, y0 + k * dy
    else:
        m = abs(dy)
        target = (y0 - 1) % m + 1
        y0 = target
    return DiophantineSolutionSet(empty=False, base=(x0, y0), step=(dx, dy))


def _check_case12_preconditions(n1: int, n2: int) -> None:
    if n1 == 0 or n1 % 2 == 0:
        raise DomainError("N1 must be an odd nonzero integer")
    if n2 == 0:
        raise DomainError("N2 must be nonzero")
    if gcd(abs(n1), abs(n2)) != 1:
        raise DomainError("N1 and N2 must be coprime")


def case12_construct(
    n1: int, n2: int, delta: int, allow_degenerate: bool = False
) -> Triple | None:
    """Build a subtraction-over-multiplication solution triple from (N1, N2, delta).

    Solves delta*(N1 - N2) + N3*(2*N2 - N1) = 1 for N3 at the given delta
    and emits (delta*N1, delta*N2, N1*N3). Returns None when no integer N3
    exists for that delta, or when the third component would be zero and
    `allow_degenerate` is false (the construction targets triples with all
    components nonzero). Note 2*N2 - N1 is odd, hence never zero.
    """
    _check_case12_preconditions(n1, n2)
    if delta < 1:
        raise DomainError("delta must be >= 1 (it is a greatest common divisor)")
    denom = 2 * n2 - n1
    num = 1 - delta * (n1 - n2)
    if num % denom:
        return None
    n3 = n1 * (num // denom)
    if n3 == 0 and not allow_degenerate:
        return None
    return Triple.of(delta * n1, delta * n2, n3)


def case12_enumerate(
    n1: int, n2: int, limit: int, allow_degenerate: bool = False
) -> Iterator[tuple[int, Triple]]:
    """Yield (delta, triple) pairs for ascending delta >= 1 with integer N3.

    Walks the Diophantine solution set of delta*(N1 - N2) + N3*(2*N2 - N1) = 1
    instead of trial-dividing each delta; both entry points exist because
    the CLI needs point queries and listings.
    """
    _check_case12_preconditions(n1, n2)
    if limit < 0:
        raise DomainError("limit must be nonnegative")
    sols = solve_linear_diophantine(n1 - n2, 2 * n2 - n1, 1)
    # N1, N2 coprime forces gcd(N1 - N2, 2*N2 - N1) = 1, so never empty.
    (x0, y0), (dx, dy) = sols.base, sols.step
    direction = 1 if dx > 0 else -1
    produced = 0
    j = 0
    while produced < limit:
        delta = x0 + j * abs(dx)
        n3 = n1 * (y0 + j * direction * dy)
        j += 1
        if n3 == 0 and not allow_degenerate:
            continue
        yield delta, Triple.of(delta * n1, delta * n2, n3)
        produced += 1


def is_perfect_square(n: int) -> int | None:
    """Exact integer square root when n is a perfect square, else None."""
    if n < 0:
        return None
    root = isqrt(n)
    return root if root * root == n else None


def case13_family5(a: int, f: int, k: int, sign: int = 1) -> Triple:
    """Build an addition-over-division solution triple (a, c, e/f).

    The components come from the quadratic e^2 + f*(a-1)*e + c*f^2 = 0 with
    discriminant K^2: c = ((f*(a-1))^2 - K^2) / (4*f^2) and
    e = (-f*(a-1) + sign*K) / 2. Parameters are rejected (DomainError naming
    the first violated constraint) unless e and c are nonzero integers, e/f
    is in lowest terms, and r1 + r3 is nonzero so the identity is defined.
    """
    if a == 0:
        raise DomainError("a must be nonzero")
    if f < 1:
        raise DomainError("f must be a positive integer")
    if k < 0:
        raise DomainError("K must be nonnegative")
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    w = f * (a - 1)
    if (w - k) % 2:
        raise DomainError("e is not an integer (f*(a-1) and K have opposite parity)")
    c_num = w * w - k * k
    if c_num % (4 * f * f):
        raise DomainError("c is not an integer (4*f^2 does not divide (f*(a-1))^2 - K^2)")
    c = c_num // (4 * f * f)
    e = (-w + sign * k) // 2
    if c == 0:
        raise DomainError("c must be nonzero")
    if e == 0:
        raise DomainError("e must be nonzero")
    if gcd(abs(e), f) != 1:
        raise DomainError("e and f must be coprime")
    r3 = Fraction(e, f)
    if a == -r3:
        raise DomainError("r1 + r3 must be nonzero")
    return Triple(Fraction(a), Fraction(c), r3)
