"""Extended Euclid, Diophantine solving, and the integer constructions."""

import random
import re
from math import gcd

import pytest

from distribq.identity import Triple, Verdict, case_from_label, check
from distribq.number_theory import (
    case12_construct,
    case12_enumerate,
    case13_family5,
    ext_gcd,
    is_perfect_square,
    solve_linear_diophantine,
)
from distribq.rational import DomainError


def test_ext_gcd_examples():
    assert ext_gcd(3, 2) == (1, 1, -1)
    g, x, y = ext_gcd(6, 4)
    assert g == 2 and 6 * x + 4 * y == 2
    assert ext_gcd(0, 0) == (0, 0, 0)


def test_ext_gcd_bezout_holds_on_random_pairs():
    rng = random.Random(20240811)
    for _ in range(10_000):
        a = rng.randint(-10**9, 10**9)
        b = rng.randint(-10**9, 10**9)
        g, x, y = ext_gcd(a, b)
        assert g == gcd(abs(a), abs(b))
        assert a * x + b * y == g
        assert g >= 0


def test_diophantine_reproduces_delta_plus_n3():
    sols = solve_linear_diophantine(1, 1, 1)
    assert not sols.empty
    assert sols.base == (1, 0)
    assert sols.step == (1, -1)


def test_diophantine_empty_when_gcd_does_not_divide():
    assert solve_linear_diophantine(2, 4, 3).empty


def test_diophantine_three_five_one():
    sols = solve_linear_diophantine(3, 5, 1)
    assert sols.base == (2, -1)
    assert sols.step == (5, -3)


def test_diophantine_rejects_zero_equation():
    with pytest.raises(DomainError):
        solve_linear_diophantine(0, 0, 5)


@pytest.mark.parametrize(
    "p,q,t",
    [(3, 5, 1), (1, 1, 1), (4, -6, 2), (5, 0, 10), (0, 7, -21), (-9, 6, 3), (2, 4, 6)],
)
def test_diophantine_solutions_satisfy_equation(p, q, t):
    sols = solve_linear_diophantine(p, q, t)
    assert not sols.empty
    for k in range(-10, 10):
        x, y = sols.at(k)
        assert p * x + q * y == t


@pytest.mark.parametrize("p,q,t", [(3, 5, 1), (4, -6, 2), (-9, 6, 3), (5, 0, 10)])
def test_diophantine_parametrization_is_complete(p, q, t):
    # Every solution in the box must lie on the base + k*step line.
    sols = solve_linear_diophantine(p, q, t)
    box = {
        (x, y)
        for x in range(-50, 51)
        for y in range(-50, 51)
        if p * x + q * y == t
    }
    line = {sols.at(k) for k in range(-200, 201)}
    assert box <= line


def test_diophantine_base_is_smallest_x_at_least_one():
    for p, q, t in [(3, 5, 1), (1, 1, 1), (4, -6, 2), (-9, 6, 3)]:
        sols = solve_linear_diophantine(p, q, t)
        (x0, _), (dx, _) = sols.base, sols.step
        assert 1 <= x0 <= abs(dx)


def _case12_poly(n1: int, n2: int, n3: int) -> int:
    return n1 * n1 - n1 * n3 - n1 * n2 + 2 * n2 * n3 - n1


def test_case12_construct_worked_instances():
    assert case12_construct(3, 2, 2) == Triple.of(6, 4, -3)
    assert case12_construct(3, 2, 5) == Triple.of(15, 10, -12)
    assert case12_construct(5, 2, 1) == Triple.of(5, 2, 10)


def test_case12_construct_returns_none_without_integer_n3():
    assert case12_construct(3, -2, 1) is None


def test_case12_construct_degenerate_needs_flag():
    assert case12_construct(3, 2, 1) is None
    assert case12_construct(3, 2, 1, allow_degenerate=True) == Triple.of(3, 2, 0)


@pytest.mark.parametrize(
    "n1,n2,delta",
    [(0, 2, 1), (4, 3, 1), (3, 0, 1), (9, 6, 1), (3, 2, 0)],
)
def test_case12_construct_preconditions(n1, n2, delta):
    with pytest.raises(DomainError):
        case12_construct(n1, n2, delta)


def test_case12_outputs_satisfy_polynomial_and_divisibility():
    params = [(3, 2), (5, 2), (3, -2), (-3, 2), (7, 4), (5, -4), (9, 2), (1, 5)]
    produced = 0
    for n1, n2 in params:
        for delta in range(1, 25):
            t = case12_construct(n1, n2, delta, allow_degenerate=True)
            if t is None:
                continue
            produced += 1
            a, b, c = (int(q) for q in t)
            assert _case12_poly(a, b, c) == 0
            assert c % n1 == 0
            assert check(case_from_label(12), t).verdict is Verdict.HOLDS
    assert produced > 50


def test_case12_enumerate_walks_ascending_deltas():
    pairs = list(case12_enumerate(3, 2, 4))
    assert [delta for delta, _ in pairs] == [2, 3, 4, 5]
    assert pairs[0][1] == Triple.of(6, 4, -3)
    with_degenerate = list(case12_enumerate(3, 2, 2, allow_degenerate=True))
    assert [delta for delta, _ in with_degenerate] == [1, 2]


def test_case12_enumerate_agrees_with_construct():
    for n1, n2 in [(3, 2), (5, 2), (3, -2), (7, 4)]:
        for delta, t in case12_enumerate(n1, n2, 6):
            assert case12_construct(n1, n2, delta) == t


def test_is_perfect_square():
    assert is_perfect_square(4) == 2
    assert is_perfect_square(8) is None
    assert is_perfect_square(0) == 0
    assert is_perfect_square(-9) is None
    big = (10**40 + 7) ** 2
    assert is_perfect_square(big) == 10**40 + 7
    assert is_perfect_square(big + 1) is None
    for k in range(1, 1000):
        assert is_perfect_square(k * k) == k
        assert is_perfect_square(k * k + 1) is None


def test_family5_worked_instances():
    assert case13_family5(3, 1, 0, 1) == Triple.of(3, 1, -1)
    assert case13_family5(4, 1, 1, 1) == Triple.of(4, 2, -1)
    assert case13_family5(4, 1, 1, -1) == Triple.of(4, 2, -2)


@pytest.mark.parametrize(
    "a,f,k,sign,fragment",
    [
        (2, 1, 1, 1, "c must be nonzero"),
        (2, 2, 1, 1, "e is not an integer"),
        (2, 2, 0, 1, "c is not an integer"),
        (3, 2, 0, 1, "coprime"),
        (3, 1, 4, -1, "r1 + r3"),
        (0, 1, 0, 1, "a must be nonzero"),
        (3, 0, 0, 1, "f must be a positive integer"),
        (3, 1, -1, 1, "K must be nonnegative"),
        (3, 1, 0, 2, "sign"),
    ],
)
def test_family5_rejections_name_the_constraint(a, f, k, sign, fragment):
    with pytest.raises(DomainError, match=re.escape(fragment)):
        case13_family5(a, f, k, sign)


def test_family5_accepted_outputs_hold():
    case13 = case_from_label(13)
    accepted = 0
    for a in range(-5, 7):
        for f in range(1, 5):
            for k in range(0, 11):
                for sign in (1, -1):
                    try:
                        t = case13_family5(a, f, k, sign)
                    except DomainError:
                        continue
                    accepted += 1
                    # The r1 != 0 factor of the case-13 equation.
                    assert t.r1 * t.r3 + t.r3 * t.r3 + t.r2 - t.r3 == 0
                    assert check(case13, t).verdict is Verdict.HOLDS
                    assert t.r3.denominator == f
    assert accepted > 30
