"""Complete per-case characterizations and the parametric solution families.

`member` is the exact membership predicate for each of the sixteen cases:
it agrees with `identity.check` returning HOLDS on every triple (the
bounded-search oracle certifies this empirically). The family registry
holds every known parametric sub-family of each solution set, with a
generator and a shape test per family; `family_union_member` measures how
much of a solution set the families cover. `solve_r2` gives the closed
form of the middle component for the three polynomial cases, where the
defining equation is linear in r2.

Two formula corrections are baked in, both confirmed by direct
substitution (see the test suite and README):

* case 14, family 1: the r1 = 0 slice only solves the identity when
  r2 = 0 (lhs is -r2/r3 while rhs is +r2/r3), so the family is
  (0, 0, r3) rather than (0, r2, r3);
* case 14, family 3: the denominator of r2 must be f*(2e - f); the
  variant with f*(f - 2e) fails (at e=1, f=3 the sides are 0 and 1) and
  is kept reachable behind `printed_form=1` so the discrepancy stays
  demonstrable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Callable, Mapping, NamedTuple

from . import number_theory
from .identity import CaseId, Triple
from .rational import DomainError, Rational

__all__ = [
    "FamilyId",
    "FamilySpec",
    "SolveOutcome",
    "families_for",
    "family_spec",
    "family_union_member",
    "generate",
    "member",
    "solve_r2",
]


# ---------------------------------------------------------------------------
# Membership predicates


def _poly_case12(t: Triple) -> Rational:
    r1, r2, r3 = t
    return r1 * r1 - r1 * r3 - r1 * r2 + 2 * r2 * r3 - r1


def _poly_case13(t: Triple) -> Rational:
    # The r1 != 0 factor of the cleared equation.
    r1, r2, r3 = t
    return r1 * r3 + r3 * r3 + r2 - r3


def _poly_case14(t: Triple) -> Rational:
    r1, r2, r3 = t
    return r1 * r3 * r3 + r1 * r2 - 2 * r2 * r3 + r1 * r3 - r3 * r1 * r1


_MEMBER: dict[str, Callable[[Triple], bool]] = {
    "1": lambda t: t.r1 == 0,
    "2": lambda t: t.r1 == 0,
    "3": lambda t: t.r1 * t.r2 * t.r3 == 0 or t.r1 == 1,
    "4": lambda t: (t.r2 == 0 or t.r1 == 1) and t.r1 != 0 and t.r3 != 0,
    "5": lambda t: t.r1 == 0,
    "6": lambda t: t.r1 == 0,
    "7": lambda t: t.r1 == 1 and t.r2 != 0 and t.r3 != 0,
    "8": lambda t: (t.r1 == 0 or t.r1 == 1) and t.r2 != 0 and t.r3 != 0,
    "9": lambda t: t.r1 == 0 and t.r2 * t.r3 != 0 and t.r2 + t.r3 != 0,
    "10": lambda t: t.r1 == 0 and t.r2 * t.r3 != 0 and t.r2 != t.r3,
    "11": lambda t: t.r1 == 0 or t.r1 + t.r2 + t.r3 == 1,
    "12": lambda t: _poly_case12(t) == 0,
    "13": lambda t: t.r3 != 0
    and t.r1 != -t.r3
    and (t.r1 == 0 or _poly_case13(t) == 0),
    "14": lambda t: t.r3 != 0 and t.r1 != t.r3 and _poly_case14(t) == 0,
    "L1": lambda t: True,
    "L2": lambda t: True,
}


def member(case: CaseId, t: Triple) -> bool:
    """True iff t satisfies the case's complete characterization.

    Definedness constraints are part of membership: a triple for which
    either side of the identity is undefined is never a member.
    """
    return _MEMBER[case.label](t)


# ---------------------------------------------------------------------------
# Parametric families


class FamilyId(NamedTuple):
    case: CaseId
    index: int


@dataclass(frozen=True)
class FamilySpec:
    """One parametric family: its parameter record, generator, and shape test."""

    case_label: str
    index: int
    params: dict[str, str]  # name -> kind: "rational" | "int" | "sign" | "bool"
    summary: str
    build: Callable[..., Triple]
    matches: Callable[[Triple], bool]
    optional: frozenset[str] = field(default_factory=frozenset)


def _as_int(value, name: str) -> int:
    if isinstance(value, bool):
        raise DomainError(f"{name} must be an integer")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    raise DomainError(f"{name} must be an integer")


def _q(value) -> Fraction:
    return Fraction(value)


def _build_zero_first(r2, r3) -> Triple:
    return Triple(Fraction(0), _q(r2), _q(r3))


def _build_one_first(r2, r3) -> Triple:
    return Triple(Fraction(1), _q(r2), _q(r3))


def _build_3_1(r1, r2, r3) -> Triple:
    t = Triple(_q(r1), _q(r2), _q(r3))
    if t.r1 * t.r2 * t.r3 != 0:
        raise DomainError("r1*r2*r3 must be zero")
    return t


def _build_4_1(r1, r3) -> Triple:
    t = Triple(_q(r1), Fraction(0), _q(r3))
    if t.r1 == 0 or t.r3 == 0:
        raise DomainError("r1*r3 must be nonzero")
    return t


def _build_4_2(r2, r3) -> Triple:
    r3 = _q(r3)
    if r3 == 0:
        raise DomainError("r3 must be nonzero")
    return Triple(Fraction(1), _q(r2), r3)


def _require_nonzero_pair(r2, r3) -> tuple[Fraction, Fraction]:
    r2, r3 = _q(r2), _q(r3)
    if r2 == 0 or r3 == 0:
        raise DomainError("r2*r3 must be nonzero")
    return r2, r3


def _build_nonzero_zero_first(r2, r3) -> Triple:
    r2, r3 = _require_nonzero_pair(r2, r3)
    return Triple(Fraction(0), r2, r3)


def _build_nonzero_one_first(r2, r3) -> Triple:
    r2, r3 = _require_nonzero_pair(r2, r3)
    return Triple(Fraction(1), r2, r3)


def _build_9_1(r2, r3) -> Triple:
    r2, r3 = _require_nonzero_pair(r2, r3)
    if r2 + r3 == 0:
        raise DomainError("r2 + r3 must be nonzero")
    return Triple(Fraction(0), r2, r3)


def _build_10_1(r2, r3) -> Triple:
    r2, r3 = _require_nonzero_pair(r2, r3)
    if r2 == r3:
        raise DomainError("r2 must differ from r3")
    return Triple(Fraction(0), r2, r3)


def _build_11_2(r2, r3) -> Triple:
    r2, r3 = _q(r2), _q(r3)
    return Triple(1 - (r2 + r3), r2, r3)


def _build_12_1(r2=None, r3=None) -> Triple:
    # Branch selector: the family is the union of (0, r2, 0) and (0, 0, r3).
    if (r2 is None) == (r3 is None):
        raise DomainError("provide exactly one of r2, r3 to pick the branch")
    if r2 is not None:
        return Triple(Fraction(0), _q(r2), Fraction(0))
    return Triple(Fraction(0), Fraction(0), _q(r3))


def _build_12_2(r3) -> Triple:
    r3 = _q(r3)
    if r3 == -1:
        raise DomainError("r3 must differ from -1")
    return Triple(r3 + 1, Fraction(0), r3)


def _build_12_3(r2) -> Triple:
    r2 = _q(r2)
    if r2 == -1:
        raise DomainError("r2 must differ from -1")
    return Triple(r2 + 1, r2, Fraction(0))


def _build_12_4(delta) -> Triple:
    delta = _as_int(delta, "delta")
    if delta < 2:
        raise DomainError("delta must be an integer >= 2")
    return Triple.of(3 * delta, 2 * delta, 3 * (1 - delta))


def _match_12_4(t: Triple) -> bool:
    delta = t.r1 / 3
    return (
        delta.denominator == 1
        and delta >= 2
        and t.r2 == 2 * delta
        and t.r3 == 3 * (1 - delta)
    )


def _build_13_1(r2, r3) -> Triple:
    r3 = _q(r3)
    if r3 == 0:
        raise DomainError("r3 must be nonzero")
    return Triple(Fraction(0), _q(r2), r3)


def _build_13_2(r3) -> Triple:
    r3 = _q(r3)
    if r3 == 0 or r3 == 1:
        raise DomainError("r3 must differ from 0 and 1")
    return Triple(1 - r3, Fraction(0), r3)


def _build_13_3(a) -> Triple:
    a = _as_int(a, "a")
    if a == 0:
        raise DomainError("a must be nonzero")
    if a == -1:
        raise DomainError("a must differ from -1 (r1 + r3 must be nonzero)")
    return Triple.of(a, -a, 1)


def _build_13_4(c, d) -> Triple:
    c = _as_int(c, "c")
    d = _as_int(d, "d")
    if c == 0:
        raise DomainError("c must be nonzero")
    if d < 1:
        raise DomainError("d must be a positive integer")
    if c == -d:
        raise DomainError("c/d must differ from -1 (r1 + r3 must be nonzero)")
    r1 = Fraction(c, d)
    return Triple(r1, -r1, Fraction(1))


def _build_13_5(a, f, k, sign) -> Triple:
    return number_theory.case13_family5(
        _as_int(a, "a"), _as_int(f, "f"), _as_int(k, "k"), sign
    )


def _match_13_5(t: Triple) -> bool:
    return (
        t.r1.denominator == 1
        and t.r1 != 0
        and t.r2.denominator == 1
        and t.r2 != 0
        and t.r3 != 0
        and t.r1 != -t.r3
        and _poly_case13(t) == 0
    )


def _build_14_1(r3) -> Triple:
    # Corrected slice: with r1 = 0 the identity forces r2 = 0.
    r3 = _q(r3)
    if r3 == 0:
        raise DomainError("r3 must be nonzero")
    return Triple(Fraction(0), Fraction(0), r3)


def _build_14_2(r3) -> Triple:
    r3 = _q(r3)
    if r3 == 0 or r3 == -1:
        raise DomainError("r3 must differ from 0 and -1")
    return Triple(r3 + 1, Fraction(0), r3)


def _build_14_3(e, f, printed_form=False) -> Triple:
    """(1, e^2/(f*(2e - f)), e/f); printed_form=True flips the denominator
    sign to f*(f - 2e), which fails verification and exists only so the
    discrepancy can be demonstrated."""
    e = _as_int(e, "e")
    f = _as_int(f, "f")
    if f < 1:
        raise DomainError("f must be a positive integer")
    if e == 0:
        raise DomainError("e must be nonzero")
    if gcd(abs(e), f) != 1:
        raise DomainError("e and f must be coprime")
    if 2 * e == f:
        raise DomainError("2*e must differ from f (denominator would vanish)")
    if e == f:
        raise DomainError("e must differ from f (r1 - r3 must be nonzero)")
    denom = f * (f - 2 * e) if printed_form else f * (2 * e - f)
    return Triple(Fraction(1), Fraction(e * e, denom), Fraction(e, f))


def _match_14_3(t: Triple) -> bool:
    return (
        t.r1 == 1
        and t.r3 != 0
        and t.r3 != 1
        and 2 * t.r3 != 1
        and t.r2 == t.r3 * t.r3 / (2 * t.r3 - 1)
    )


def _build_universal(r1, r2, r3) -> Triple:
    return Triple(_q(r1), _q(r2), _q(r3))


_RR = {"r2": "rational", "r3": "rational"}

_FAMILIES: dict[str, tuple[FamilySpec, ...]] = {}


def _register(label: str, *specs_args) -> None:
    _FAMILIES[label] = tuple(
        FamilySpec(case_label=label, index=i + 1, **kw) for i, kw in enumerate(specs_args)
    )


_register(
    "1",
    dict(params=dict(_RR), summary="(0, r2, r3)", build=_build_zero_first,
         matches=lambda t: t.r1 == 0),
)
_register(
    "2",
    dict(params=dict(_RR), summary="(0, r2, r3)", build=_build_zero_first,
         matches=lambda t: t.r1 == 0),
)
_register(
    "3",
    dict(params={"r1": "rational", "r2": "rational", "r3": "rational"},
         summary="(r1, r2, r3) with r1*r2*r3 = 0", build=_build_3_1,
         matches=lambda t: t.r1 * t.r2 * t.r3 == 0),
    dict(params=dict(_RR), summary="(1, r2, r3)", build=_build_one_first,
         matches=lambda t: t.r1 == 1),
)
_register(
    "4",
    dict(params={"r1": "rational", "r3": "rational"},
         summary="(r1, 0, r3) with r1*r3 != 0", build=_build_4_1,
         matches=lambda t: t.r2 == 0 and t.r1 != 0 and t.r3 != 0),
    dict(params=dict(_RR), summary="(1, r2, r3) with r3 != 0",
         build=_build_4_2,
         matches=lambda t: t.r1 == 1 and t.r3 != 0),
)
_register(
    "5",
    dict(params=dict(_RR), summary="(0, r2, r3)", build=_build_zero_first,
         matches=lambda t: t.r1 == 0),
)
_register(
    "6",
    dict(params=dict(_RR), summary="(0, r2, r3)", build=_build_zero_first,
         matches=lambda t: t.r1 == 0),
)
_register(
    "7",
    dict(params=dict(_RR), summary="(1, r2, r3) with r2*r3 != 0",
         build=_build_nonzero_one_first,
         matches=lambda t: t.r1 == 1 and t.r2 * t.r3 != 0),
)
_register(
    "8",
    dict(params=dict(_RR), summary="(0, r2, r3) with r2*r3 != 0",
         build=_build_nonzero_zero_first,
         matches=lambda t: t.r1 == 0 and t.r2 * t.r3 != 0),
    dict(params=dict(_RR), summary="(1, r2, r3) with r2*r3 != 0",
         build=_build_nonzero_one_first,
         matches=lambda t: t.r1 == 1 and t.r2 * t.r3 != 0),
)
_register(
    "9",
    dict(params=dict(_RR),
         summary="(0, r2, r3) with r2*r3 != 0 and r2 + r3 != 0",
         build=_build_9_1,
         matches=lambda t: t.r1 == 0 and t.r2 * t.r3 != 0 and t.r2 + t.r3 != 0),
)
_register(
    "10",
    dict(params=dict(_RR),
         summary="(0, r2, r3) with r2*r3 != 0 and r2 != r3",
         build=_build_10_1,
         matches=lambda t: t.r1 == 0 and t.r2 * t.r3 != 0 and t.r2 != t.r3),
)
_register(
    "11",
    dict(params=dict(_RR), summary="(0, r2, r3)", build=_build_zero_first,
         matches=lambda t: t.r1 == 0),
    dict(params=dict(_RR), summary="(1 - (r2 + r3), r2, r3)", build=_build_11_2,
         matches=lambda t: t.r1 + t.r2 + t.r3 == 1),
)
_register(
    "12",
    dict(params=dict(_RR), summary="(0, r2, 0) or (0, 0, r3); pass exactly one key",
         build=_build_12_1, optional=frozenset({"r2", "r3"}),
         matches=lambda t: t.r1 == 0 and (t.r2 == 0 or t.r3 == 0)),
    dict(params={"r3": "rational"}, summary="(r3 + 1, 0, r3) with r3 != -1",
         build=_build_12_2,
         matches=lambda t: t.r2 == 0 and t.r3 != -1 and t.r1 == t.r3 + 1),
    dict(params={"r2": "rational"}, summary="(r2 + 1, r2, 0) with r2 != -1",
         build=_build_12_3,
         matches=lambda t: t.r3 == 0 and t.r2 != -1 and t.r1 == t.r2 + 1),
    dict(params={"delta": "int"},
         summary="(3d, 2d, 3(1 - d)) for an integer d >= 2",
         build=_build_12_4, matches=_match_12_4),
)
_register(
    "13",
    dict(params=dict(_RR), summary="(0, r2, r3) with r3 != 0", build=_build_13_1,
         matches=lambda t: t.r1 == 0 and t.r3 != 0),
    dict(params={"r3": "rational"}, summary="(1 - r3, 0, r3) with r3 != 0, 1",
         build=_build_13_2,
         matches=lambda t: t.r2 == 0 and t.r3 not in (0, 1) and t.r1 == 1 - t.r3),
    dict(params={"a": "int"}, summary="(a, -a, 1) for a nonzero integer a != -1",
         build=_build_13_3,
         matches=lambda t: t.r3 == 1 and t.r2 == -t.r1
         and t.r1.denominator == 1 and t.r1 not in (0, -1)),
    dict(params={"c": "int", "d": "int"},
         summary="(c/d, -c/d, 1) for nonzero integer c, positive integer d, c != -d",
         build=_build_13_4,
         matches=lambda t: t.r3 == 1 and t.r2 == -t.r1 and t.r1 not in (0, -1)),
    dict(params={"a": "int", "f": "int", "k": "int", "sign": "sign"},
         summary="(a, c, e/f) from the discriminant construction "
                 "c = ((f(a-1))^2 - K^2)/(4f^2), e = (-f(a-1) +/- K)/2",
         build=_build_13_5, matches=_match_13_5),
)
_register(
    "14",
    dict(params={"r3": "rational"}, summary="(0, 0, r3) with r3 != 0",
         build=_build_14_1,
         matches=lambda t: t.r1 == 0 and t.r2 == 0 and t.r3 != 0),
    dict(params={"r3": "rational"}, summary="(r3 + 1, 0, r3) with r3 != 0, -1",
         build=_build_14_2,
         matches=lambda t: t.r2 == 0 and t.r3 not in (0, -1) and t.r1 == t.r3 + 1),
    dict(params={"e": "int", "f": "int", "printed_form": "bool"},
         summary="(1, e^2/(f(2e - f)), e/f) for coprime e, f with f >= 1, "
                 "e != 0, 2e != f, e != f",
         build=_build_14_3, optional=frozenset({"printed_form"}),
         matches=_match_14_3),
)
_register(
    "L1",
    dict(params={"r1": "rational", "r2": "rational", "r3": "rational"},
         summary="(r1, r2, r3): the law is universal", build=_build_universal,
         matches=lambda t: True),
)
_register(
    "L2",
    dict(params={"r1": "rational", "r2": "rational", "r3": "rational"},
         summary="(r1, r2, r3): the law is universal", build=_build_universal,
         matches=lambda t: True),
)


def families_for(case: CaseId) -> tuple[FamilySpec, ...]:
    return _FAMILIES[case.label]


def family_spec(case: CaseId, index: int) -> FamilySpec:
    specs = _FAMILIES[case.label]
    if not 1 <= index <= len(specs):
        raise DomainError(
            f"case {case.label} has families 1..{len(specs)}, not {index}"
        )
    return specs[index - 1]


def generate(family: FamilyId, params: Mapping[str, object]) -> Triple:
    """Produce the family's triple from a parameter record.

    Unknown or missing keys and violated family constraints raise
    DomainError naming the problem.
    """
    spec = family_spec(family.case, family.index)
    supplied = dict(params)
    unknown = set(supplied) - set(spec.params)
    if unknown:
        raise DomainError(f"unknown parameter(s): {', '.join(sorted(unknown))}")
    missing = set(spec.params) - set(supplied) - spec.optional
    if missing:
        raise DomainError(f"missing parameter(s): {', '.join(sorted(missing))}")
    return spec.build(**supplied)


def family_union_member(case: CaseId, t: Triple) -> bool:
    """True iff t matches the defining shape of at least one listed family."""
    return any(spec.matches(t) for spec in _FAMILIES[case.label])


# ---------------------------------------------------------------------------
# Closed-form solving for the polynomial cases


class SolveOutcome(Enum):
    ALL = "ALL"  # every r2 completes the triple
    NONE = "NONE"  # no r2 completes the triple


def _solve_label(case) -> str:
    if isinstance(case, CaseId):
        label = case.label
    else:
        label = str(case).strip()
    if label not in ("12", "13", "14"):
        raise DomainError("solve_r2 applies to cases 12, 13, and 14 only")
    return label


def solve_r2(case, r1, r3) -> Rational | SolveOutcome:
    """Solve the case's defining equation for r2 given (r1, r3).

    Each defining equation is linear in r2, so the answer is a unique
    rational, ALL (the r2 coefficient and the constant both vanish), or
    NONE (only the coefficient vanishes). For cases 13 and 14 the
    definedness constraints on (r1, r3) are preconditions.
    """
    label = _solve_label(case)
    r1, r3 = Fraction(r1), Fraction(r3)
    if label == "13":
        if r3 == 0:
            raise DomainError("r3 must be nonzero")
        if r1 == -r3:
            raise DomainError("r1 + r3 must be nonzero")
        if r1 == 0:
            return SolveOutcome.ALL
        return r3 * (1 - r1 - r3)
    if label == "14":
        if r3 == 0:
            raise DomainError("r3 must be nonzero")
        if r1 == r3:
            raise DomainError("r1 - r3 must be nonzero")
        numerator = r1 * r3 * (r3 + 1 - r1)
    else:
        numerator = r1 * (r3 + 1 - r1)
    denom = 2 * r3 - r1
    if denom != 0:
        return numerator / denom
    return SolveOutcome.ALL if numerator == 0 else SolveOutcome.NONE
