import math
import threading

import pytest
from hypothesis import given, strategies as st

from rescong.arith import euler_phi, generalized_gcd, jordan_totient
from rescong.errors import BudgetExceededError, ConsistencyError, DomainError
from rescong.ramanujan import (
    RamanujanCache,
    cohen_ramanujan,
    cohen_ramanujan_direct,
    ramanujan_classic,
)

# the five sums behind the worked mod-16 computation, plus small anchors
KNOWN_VALUES = [
    (4, 2, 16, 12),
    (2, 2, 16, 3),
    (2, 2, 5, -1),
    (4, 2, 4, -4),
    (4, 2, 5, 0),
    (2, 2, 4, 3),
    (1, 2, 5, 1),
    (1, 1, 7, 1),
]


@pytest.mark.parametrize("r,s,n,expected", KNOWN_VALUES)
def test_known_values_both_paths(r, s, n, expected):
    assert cohen_ramanujan(r, s, n) == expected
    assert cohen_ramanujan_direct(r, s, n) == expected


def test_r_one_is_always_one():
    for s in (1, 2, 3):
        for n in (-5, 0, 1, 7, 100):
            assert cohen_ramanujan(1, s, n) == 1


def test_zero_argument_gives_jordan_totient():
    for r in range(1, 13):
        for s in (1, 2, 3):
            assert cohen_ramanujan(r, s, 0) == jordan_totient(r, s)
    # same fact from the exponential side, at direct-oracle scale
    for r in range(1, 13):
        for s in (1, 2, 3):
            if r**s <= 10**4:
                assert cohen_ramanujan_direct(r, s, 0) == jordan_totient(r, s)


def test_rejects_bad_arguments():
    with pytest.raises(DomainError):
        cohen_ramanujan(0, 1, 5)
    with pytest.raises(DomainError):
        cohen_ramanujan(4, 0, 5)
    with pytest.raises(DomainError):
        cohen_ramanujan_direct(0, 2, 5)


class TestClassic:
    def test_at_zero_is_phi(self):
        for r in range(1, 31):
            assert ramanujan_classic(r, 0) == euler_phi(r)

    def test_direct_summation_anchors(self):
        # c_2(1) = e(1/2) = -1; c_6(1) = e(1/6) + e(5/6) = 2cos(pi/3) = 1
        assert ramanujan_classic(2, 1) == -1
        assert ramanujan_classic(6, 1) == 1

    def test_matches_cohen_at_s_one(self):
        for r in range(1, 31):
            for n in range(-60, 61):
                assert ramanujan_classic(r, n) == cohen_ramanujan(r, 1, n)


class TestDirectOracle:
    def test_agreement_sweep(self):
        for r in range(1, 11):
            for s in (1, 2):
                for n in range(r**s):
                    assert cohen_ramanujan(r, s, n) == cohen_ramanujan_direct(r, s, n)

    def test_budget_exceeded(self):
        with pytest.raises(BudgetExceededError):
            cohen_ramanujan_direct(7, 2, 1, budget=10)

    def test_impossible_tolerance_raises(self):
        # float round-off alone keeps the residual above an absurd bound
        with pytest.raises(ConsistencyError):
            cohen_ramanujan_direct(3, 1, 1, tol=1e-300)


class TestStructure:
    def test_periodicity(self):
        for r in range(1, 13):
            for s in (1, 2, 3):
                rs = r**s
                for n in range(rs):
                    assert cohen_ramanujan(r, s, n) == cohen_ramanujan(r, s, n + rs)

    def test_argument_reduces_to_generalized_gcd(self):
        for r in range(1, 13):
            for s in (1, 2, 3):
                rs = r**s
                for n in range(rs):
                    reduced = generalized_gcd(n, rs, s).value
                    assert cohen_ramanujan(r, s, n) == cohen_ramanujan(r, s, reduced)

    @given(st.integers(1, 20), st.integers(1, 3), st.integers(-500, 500))
    def test_reflection(self, r, s, n):
        assert cohen_ramanujan(r, s, -n) == cohen_ramanujan(r, s, n)

    def test_collapse_under_any_containing_modulus(self):
        # for e | n the sum c_{e,s} only sees (m, n**s)_s
        for n in range(1, 13):
            for s in (1, 2):
                ns = n**s
                for e in [d for d in range(1, n + 1) if n % d == 0]:
                    for m in range(1, ns + 1):
                        collapsed = generalized_gcd(m, ns, s).value
                        assert cohen_ramanujan(e, s, m) == cohen_ramanujan(e, s, collapsed)

    def test_multiplicative_in_r(self):
        # coprime moduli split the sum; checked against the exponential oracle
        pairs = [(r, q) for r in range(1, 9) for q in range(1, 9) if math.gcd(r, q) == 1]
        for s in (1, 2):
            for r, q in pairs:
                if (r * q) ** s > 10**5:
                    continue
                for n in (0, 1, 5, 12):
                    lhs = cohen_ramanujan(r * q, s, n)
                    assert lhs == cohen_ramanujan(r, s, n) * cohen_ramanujan(q, s, n)
                    assert lhs == cohen_ramanujan_direct(r * q, s, n)


class TestCache:
    def test_key_reduced_argument_structure(self):
        from rescong.arith import iroot

        for r in (1, 2, 6, 12):
            for s in (1, 2, 3):
                rs = r**s
                for n in range(-10, rs + 10):
                    key = RamanujanCache.key_for(r, s, n)
                    assert key.r == r and key.s == s
                    assert rs % key.reduced_arg == 0
                    assert iroot(key.reduced_arg, s) ** s == key.reduced_arg
                    if n % rs == 0:
                        assert key.reduced_arg == rs

    def test_transparent_to_recomputation(self):
        warm = RamanujanCache()
        for r, s, n, expected in KNOWN_VALUES:
            first = cohen_ramanujan(r, s, n, cache=warm)
            again = cohen_ramanujan(r, s, n, cache=warm)  # served from cache
            scratch = cohen_ramanujan(r, s, n, cache=RamanujanCache())
            assert first == again == scratch == expected

    def test_one_entry_per_gcd_class(self):
        cache = RamanujanCache()
        r, s = 6, 2
        rs = r**s
        for n in range(rs):
            cohen_ramanujan(r, s, n, cache=cache)
        distinct = {generalized_gcd(n, rs, s).value for n in range(rs)}
        assert len(cache) == len(distinct)

    def test_negative_and_shifted_arguments_share_entries(self):
        cache = RamanujanCache()
        for n in (7, -7, 7 + 36, 7 - 72):
            cohen_ramanujan(6, 2, n, cache=cache)
        assert len(cache) == 1

    def test_clear(self):
        cache = RamanujanCache()
        cohen_ramanujan(4, 2, 5, cache=cache)
        assert len(cache) == 1
        cache.clear()
        assert len(cache) == 0

    def test_concurrent_readers_and_writers(self):
        cache = RamanujanCache()
        grid = [(r, s, n) for r in range(1, 9) for s in (1, 2) for n in range(r**s)]
        expected = {key: cohen_ramanujan(*key, cache=RamanujanCache()) for key in grid}
        failures = []

        def hammer():
            for key in grid:
                if cohen_ramanujan(*key, cache=cache) != expected[key]:
                    failures.append(key)

        threads = [threading.Thread(target=hammer) for _ in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert not failures
        for key in grid:
            assert cohen_ramanujan(*key, cache=cache) == expected[key]
