"""Bounded exhaustive search over canonical rationals.

The grid is every canonical fraction n/d with |n| <= num_bound and
1 <= d <= den_bound, enumerated in ascending value order. Scans walk the
grid cubed and compare three views of each case: the identity checker, the
membership predicate, and the union of listed families. Work is
partitioned by the first component; partitions share no mutable state and
are merged in first-component order, so the output is identical whether it
was produced by one worker or many.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple

from .catalog import family_union_member, member
from .identity import CaseId, Triple, Verdict, check
from .rational import DomainError, Rational

__all__ = [
    "SearchBounds",
    "VerificationReport",
    "enumerate_rationals",
    "search_solutions",
    "verify_characterization",
]

DEFAULT_LIST_LIMIT = 100


class SearchBounds(NamedTuple):
    num_bound: int
    den_bound: int


def _validate(bounds: SearchBounds) -> SearchBounds:
    if bounds.num_bound < 1 or bounds.den_bound < 1:
        raise DomainError("bounds must be >= 1")
    return bounds


def enumerate_rationals(bounds: SearchBounds) -> list[Rational]:
    """All canonical n/d with |n| <= num_bound, d <= den_bound, ascending."""
    _validate(bounds)
    values = [
        Fraction(n, d)
        for d in range(1, bounds.den_bound + 1)
        for n in range(-bounds.num_bound, bounds.num_bound + 1)
        if gcd(abs(n), d) == 1
    ]
    values.sort()
    return values


def _search_partition(task: tuple[CaseId, Rational, list[Rational]]) -> list[Triple]:
    case, r1, values = task
    found = []
    for r2 in values:
        for r3 in values:
            t = Triple(r1, r2, r3)
            if check(case, t).verdict is Verdict.HOLDS:
                found.append(t)
    return found


class _VerifyPartial(NamedTuple):
    holds: int
    missing: list[Triple]
    spurious: list[Triple]
    coverage_gap: list[Triple]


def _verify_partition(task: tuple[CaseId, Rational, list[Rational]]) -> _VerifyPartial:
    case, r1, values = task
    holds = 0
    missing: list[Triple] = []
    spurious: list[Triple] = []
    gap: list[Triple] = []
    for r2 in values:
        for r3 in values:
            t = Triple(r1, r2, r3)
            holds_here = check(case, t).verdict is Verdict.HOLDS
            is_member = member(case, t)
            if holds_here:
                holds += 1
                if not is_member:
                    missing.append(t)
                if not family_union_member(case, t):
                    gap.append(t)
            elif is_member:
                spurious.append(t)
    return _VerifyPartial(holds, missing, spurious, gap)


def _run_partitions(worker, case: CaseId, bounds: SearchBounds, jobs: int) -> list:
    values = enumerate_rationals(bounds)
    tasks = [(case, r1, values) for r1 in values]
    if jobs <= 1:
        return [worker(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks))


def search_solutions(case: CaseId, bounds: SearchBounds, jobs: int = 1) -> list[Triple]:
    """All triples on the grid whose identity check HOLDS, in grid order."""
    partials = _run_partitions(_search_partition, case, bounds, jobs)
    return [t for partial in partials for t in partial]


@dataclass(frozen=True)
class VerificationReport:
    """Grid-wide comparison of checker, membership predicate, and families.

    `missing` are triples that hold but the predicate rejects; `spurious`
    the reverse; the characterization is exact on the grid iff both are
    empty. `coverage_gap` are holding triples outside every listed family.
    The three lists are truncated to `list_limit` entries (counts are
    never truncated).
    """

    case: CaseId
    bounds: SearchBounds
    total_triples: int
    holds: int
    missing_count: int
    spurious_count: int
    coverage_gap_count: int
    missing: tuple[Triple, ...]
    spurious: tuple[Triple, ...]
    coverage_gap: tuple[Triple, ...]
    list_limit: int | None

    @property
    def exact(self) -> bool:
        return self.missing_count == 0 and self.spurious_count == 0


def verify_characterization(
    case: CaseId,
    bounds: SearchBounds,
    jobs: int = 1,
    list_limit: int | None = DEFAULT_LIST_LIMIT,
) -> VerificationReport:
    """Exhaustively compare check, member, and family_union_member on the grid."""
    values = enumerate_rationals(bounds)
    partials: list[_VerifyPartial] = _run_partitions(
        _verify_partition, case, bounds, jobs
    )

    def merge(lists: Iterable[list[Triple]]) -> list[Triple]:
        return [t for sub in lists for t in sub]

    missing = merge(p.missing for p in partials)
    spurious = merge(p.spurious for p in partials)
    gap = merge(p.coverage_gap for p in partials)
    cap = slice(None) if list_limit is None else slice(list_limit)
    return VerificationReport(
        case=case,
        bounds=bounds,
        total_triples=len(values) ** 3,
        holds=sum(p.holds for p in partials),
        missing_count=len(missing),
        spurious_count=len(spurious),
        coverage_gap_count=len(gap),
        missing=tuple(missing[cap]),
        spurious=tuple(spurious[cap]),
        coverage_gap=tuple(gap[cap]),
        list_limit=list_limit,
    )
