"""The generalized distributive identity and its three-way verdict.

For an ordered pair of binary operations (outer, inner) and a triple
(r1, r2, r3), the identity under test is

    r1 outer (r2 inner r3)  ==  (r1 outer r2) inner (r1 outer r3)

Divisions by zero never raise out of this module: `apply` returns None for
an undefined result and `check` turns that into an UNDEFINED verdict that
records which sub-operation failed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from .rational import Rational, add, div, mul, sub

__all__ = [
    "ALL_CASES",
    "BinOp",
    "CaseId",
    "CheckResult",
    "Triple",
    "Verdict",
    "apply",
    "case_from_label",
    "check",
]


class BinOp(Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"

    @property
    def symbol(self) -> str:
        return {"add": "+", "sub": "-", "mul": "*", "div": "/"}[self.value]


class Triple(NamedTuple):
    r1: Rational
    r2: Rational
    r3: Rational

    @classmethod
    def of(cls, r1, r2, r3) -> "Triple":
        """Convenience constructor accepting ints, strings, or Fractions."""
        return cls(Fraction(r1), Fraction(r2), Fraction(r3))


class CaseId(NamedTuple):
    """One of the sixteen ordered (outer, inner) operation pairings."""

    outer: BinOp
    inner: BinOp

    @property
    def label(self) -> str:
        """Case label: "1".."14" for the nontrivial pairings, "L1"/"L2"
        for the two textbook laws (multiplication over +/-)."""
        return _PAIR_TO_LABEL[(self.outer, self.inner)]

    @property
    def case_number(self) -> int | None:
        label = self.label
        return None if label.startswith("L") else int(label)

    def describe(self) -> str:
        return f"{self.outer.value} over {self.inner.value}"


_PAIR_TO_LABEL: dict[tuple[BinOp, BinOp], str] = {
    (BinOp.ADD, BinOp.ADD): "1",
    (BinOp.ADD, BinOp.SUB): "2",
    (BinOp.MUL, BinOp.MUL): "3",
    (BinOp.MUL, BinOp.DIV): "4",
    (BinOp.SUB, BinOp.SUB): "5",
    (BinOp.SUB, BinOp.ADD): "6",
    (BinOp.DIV, BinOp.DIV): "7",
    (BinOp.DIV, BinOp.MUL): "8",
    (BinOp.DIV, BinOp.ADD): "9",
    (BinOp.DIV, BinOp.SUB): "10",
    (BinOp.ADD, BinOp.MUL): "11",
    (BinOp.SUB, BinOp.MUL): "12",
    (BinOp.ADD, BinOp.DIV): "13",
    (BinOp.SUB, BinOp.DIV): "14",
    (BinOp.MUL, BinOp.ADD): "L1",
    (BinOp.MUL, BinOp.SUB): "L2",
}

_LABEL_TO_CASE: dict[str, CaseId] = {
    label: CaseId(outer, inner) for (outer, inner), label in _PAIR_TO_LABEL.items()
}

#: All sixteen cases, numeric labels first, then the two base laws.
ALL_CASES: tuple[CaseId, ...] = tuple(
    _LABEL_TO_CASE[label] for label in [str(n) for n in range(1, 15)] + ["L1", "L2"]
)


def case_from_label(label: str | int) -> CaseId:
    """Look up a case by label ("12", 12, "L1"; case-insensitive)."""
    key = str(label).strip().upper()
    try:
        return _LABEL_TO_CASE[key]
    except KeyError:
        raise KeyError(f"unknown case label {label!r}") from None


class Verdict(Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    UNDEFINED = "UNDEFINED"


@dataclass(frozen=True)
class CheckResult:
    """Outcome of evaluating both sides of the identity.

    HOLDS and FAILS always carry both side values. UNDEFINED carries the
    description of the first undefined sub-operation, plus whichever side
    values could still be computed.
    """

    verdict: Verdict
    lhs: Rational | None = None
    rhs: Rational | None = None
    undefined_site: str | None = None


def apply(op: BinOp, x: Rational, y: Rational) -> Rational | None:
    """Apply one operation; None means the result is undefined (x / 0)."""
    if op is BinOp.DIV:
        if y == 0:
            return None
        return div(x, y)
    if op is BinOp.ADD:
        return add(x, y)
    if op is BinOp.SUB:
        return sub(x, y)
    return mul(x, y)


# Fixed evaluation order used to pick the reported undefined site.
_SITES = (
    "inner of lhs",
    "outer of lhs",
    "first outer of rhs",
    "second outer of rhs",
    "inner of rhs",
)


def check(case: CaseId, t: Triple) -> CheckResult:
    """Evaluate r1 outer (r2 inner r3) against (r1 outer r2) inner (r1 outer r3).

    Both sides are always attempted; if any sub-operation divides by zero
    the verdict is UNDEFINED and the first failing site (in the fixed order
    lhs-inner, lhs-outer, rhs-outer-left, rhs-outer-right, rhs-inner) is
    reported.
    """
    site: str | None = None

    def ev(name: str, op: BinOp, x: Rational | None, y: Rational | None) -> Rational | None:
        nonlocal site
        if x is None or y is None:
            return None
        out = apply(op, x, y)
        if out is None and site is None:
            site = name
        return out

    bc = ev(_SITES[0], case.inner, t.r2, t.r3)
    lhs = ev(_SITES[1], case.outer, t.r1, bc)
    ab = ev(_SITES[2], case.outer, t.r1, t.r2)
    ac = ev(_SITES[3], case.outer, t.r1, t.r3)
    rhs = ev(_SITES[4], case.inner, ab, ac)

    if site is not None:
        return CheckResult(Verdict.UNDEFINED, lhs, rhs, site)
    verdict = Verdict.HOLDS if lhs == rhs else Verdict.FAILS
    return CheckResult(verdict, lhs, rhs, None)
