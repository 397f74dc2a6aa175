"""Classic and generalized Ramanujan sums.

The generalized sum over the s-th-power coprime residues is

    c_{r,s}(n) = sum(e(n * j / r**s) for 1 <= j <= r**s if (j, r**s)_s == 1)

with e(x) = exp(2*pi*i*x).  It is integer valued; at s == 1 it reduces to
the classic c_r(n) over primitive r-th roots of unity.  Production
evaluation uses the equivalent exact divisor form

    c_{r,s}(n) = sum(mobius(r // d) * d**s for d | r if d**s divides n)

while the exponential definition is kept as an independent floating point
oracle (`cohen_ramanujan_direct`).

Values are memoized per (r, s, (n, r**s)_s): the sum only depends on the
generalized gcd of its argument with r**s, so every n in one gcd class
shares a single cache entry.  That same reduction also absorbs negative
arguments and periodicity mod r**s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import divisors, factorize, generalized_gcd, mobius
from .errors import BudgetExceededError, ConsistencyError, DomainError

# Cap on r**s for the term-by-term exponential oracle.
DEFAULT_DIRECT_BUDGET = 10**5
# Round-off for <= 10**5 unit-modulus terms under pairwise summation stays
# orders of magnitude below this.
DIRECT_TOLERANCE = 1e-6


@dataclass(frozen=True)
class RamanujanKey:
    """Cache key: the argument n collapses to reduced_arg = (n, r**s)_s."""

    r: int
    s: int
    reduced_arg: int


class RamanujanCache:
    """Memo table for c_{r,s} values, semantically transparent.

    Safe under CPython threads without locking: the value for a key is
    deterministic, so racing writers can at worst duplicate work, never
    store divergent results.
    """

    def __init__(self) -> None:
        self._table: dict[RamanujanKey, int] = {}

    def __len__(self) -> int:
        return len(self._table)

    def clear(self) -> None:
        self._table.clear()

    @staticmethod
    def key_for(r: int, s: int, n: int) -> RamanujanKey:
        return RamanujanKey(r=r, s=s, reduced_arg=generalized_gcd(n, r**s, s).value)

    def value(self, r: int, s: int, n: int) -> int:
        key = self.key_for(r, s, n)
        cached = self._table.get(key)
        if cached is None:
            cached = _mobius_divisor_sum(r, s, key.reduced_arg)
            self._table[key] = cached
        return cached


_shared_cache = RamanujanCache()


def _mobius_divisor_sum(r: int, s: int, m: int) -> int:
    """sum(mobius(r // d) * d**s for d | r with d**s | m); m == 0 admits all d."""
    total = 0
    for d in divisors(r):
        ds = d**s
        if m % ds == 0:
            total += mobius(r // d) * ds
    return total


def cohen_ramanujan(r: int, s: int, n: int, cache: RamanujanCache | None = None) -> int:
    """c_{r,s}(n) by the exact divisor form, memoized on the reduced argument."""
    if r < 1:
        raise DomainError(f"cohen_ramanujan requires r >= 1, got {r}")
    if s < 1:
        raise DomainError(f"cohen_ramanujan requires s >= 1, got {s}")
    table = _shared_cache if cache is None else cache
    return table.value(r, s, n)


def ramanujan_classic(r: int, n: int) -> int:
    """The classic Ramanujan sum c_r(n), i.e. c_{r,1}(n)."""
    return cohen_ramanujan(r, 1, n)


def _pairwise_sum(terms: list[complex]) -> complex:
    """Cascade summation; error grows ~log2(len) rather than len."""
    k = len(terms)
    if k == 0:
        return 0j
    if k <= 8:
        total = 0j
        for t in terms:
            total += t
        return total
    half = k // 2
    return _pairwise_sum(terms[:half]) + _pairwise_sum(terms[half:])


def cohen_ramanujan_direct(
    r: int,
    s: int,
    n: int,
    budget: int = DEFAULT_DIRECT_BUDGET,
    tol: float = DIRECT_TOLERANCE,
) -> int:
    """c_{r,s}(n) straight from the exponential definition.

    Sums e(n * j / r**s) over the j in [1, r**s] with (j, r**s)_s == 1,
    then snaps to the nearest integer.  A residual (imaginary part or
    distance to that integer) at or above `tol` means the exact path and
    this one cannot both be right, so it raises ConsistencyError rather
    than return a guess.
    """
    if r < 1:
        raise DomainError(f"cohen_ramanujan_direct requires r >= 1, got {r}")
    if s < 1:
        raise DomainError(f"cohen_ramanujan_direct requires s >= 1, got {s}")
    rs = r**s
    if rs > budget:
        raise BudgetExceededError(
            f"direct evaluation needs r**s = {rs} terms, budget is {budget}"
        )
    # (j, r**s)_s == 1 exactly when no prime p | r has p**s | j.
    blocked = [p**s for p, _ in factorize(r).factors]
    n_red = n % rs
    terms = []
    for j in range(1, rs + 1):
        if any(j % q == 0 for q in blocked):
            continue
        angle = 2.0 * math.pi * ((n_red * j) % rs) / rs
        terms.append(complex(math.cos(angle), math.sin(angle)))
    total = _pairwise_sum(terms)
    nearest = round(total.real)
    if abs(total.imag) >= tol or abs(total.real - nearest) >= tol:
        raise ConsistencyError(
            f"direct sum for c_{{{r},{s}}}({n}) = {total!r} is not within {tol} of an integer"
        )
    return int(nearest)
