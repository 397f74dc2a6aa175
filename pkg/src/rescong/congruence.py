"""Solution counts for restricted linear congruences.

The central object is x_1 + ... + x_k == b (mod n**s) where every
unknown is confined to a divisor class of the modulus,

    C(d) = {1 <= x <= n**s : (x, n**s)_s == d**s},    d | n.

With d_1 < ... < d_tau the divisors of n and g_j the number of unknowns
assigned to C(d_j), the number of solutions is

    (1 / n**s) * sum(c_{d,s}(b)
                     * prod(c_{n/d_j, s}(n**s / d**s) ** g_j for all j)
                     for d | n)

evaluated here entirely in exact integers.  The pre-division sum is
provably a multiple of n**s; `count_restricted` enforces that on every
call and raises ConsistencyError on violation, since a failure can only
mean a bug.

The classic units-only and unrestricted counts at s == 1 (Lehmer's gcd
criterion, the Rademacher-Brauer prime product, the Nicol-Vandiver
Ramanujan-sum form) are included for cross-validation.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import divisors, euler_phi, factorize
from .errors import BudgetExceededError, ConsistencyError, DomainError
from .ramanujan import cohen_ramanujan, ramanujan_classic

# Ceiling on n**s for explicit class enumeration.
DEFAULT_CLASS_BUDGET = 10**6

# Evidence that the integrality invariant is exercised: every closed-form
# evaluation bumps "checked"; "failed" stays zero unless a bug slips in
# (the same condition also raises ConsistencyError).
DIVISIBILITY_STATS = {"checked": 0, "failed": 0}


@dataclass(frozen=True)
class CongruenceInstance:
    """One restricted congruence: sum of k unknowns == b (mod n**s).

    `restrictions` lists the base divisors t_i of n pinning each unknown
    to (x_i, n**s)_s == t_i**s.  k == 0 is allowed (empty sum).  The
    target b is reduced into [0, n**s) on construction; the count is
    n**s-periodic in b so nothing is lost.
    """

    n: int
    s: int
    b: int
    restrictions: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"modulus base n must be >= 1, got {self.n}")
        if self.s < 1:
            raise DomainError(f"power s must be >= 1, got {self.s}")
        object.__setattr__(self, "restrictions", tuple(self.restrictions))
        for i, t in enumerate(self.restrictions, start=1):
            if t < 1 or self.n % t != 0:
                raise DomainError(
                    f"restriction t_{i} = {t} is not a positive divisor of n = {self.n}"
                )
        object.__setattr__(self, "b", self.b % self.modulus)

    @property
    def modulus(self) -> int:
        return self.n**self.s

    @property
    def k(self) -> int:
        return len(self.restrictions)


@dataclass(frozen=True)
class ClassProfile:
    """Divisors d_1 < ... < d_tau of n with g_j = #(restrictions equal to d_j)."""

    divisors: tuple[int, ...]
    multiplicities: tuple[int, ...]

    @property
    def k(self) -> int:
        return sum(self.multiplicities)


def class_profile(instance: CongruenceInstance) -> ClassProfile:
    """Collapse the ordered restriction list into per-divisor multiplicities."""
    divs = tuple(divisors(instance.n))
    counts = Counter(instance.restrictions)
    return ClassProfile(
        divisors=divs,
        multiplicities=tuple(counts.get(d, 0) for d in divs),
    )


@lru_cache(maxsize=None)
def _class_members(n: int, s: int, d: int) -> tuple[int, ...]:
    # x = d**s * y sweeps C(d) exactly as y runs over [1, (n/d)**s]
    # avoiding p**s | y for every prime p of n/d.  (Primes at full
    # multiplicity in d impose no condition on y.)
    m = n // d
    ds = d**s
    blocked = [p**s for p, _ in factorize(m).factors]
    return tuple(ds * y for y in range(1, m**s + 1) if all(y % q for q in blocked))


def class_members(n: int, s: int, d: int, budget: int = DEFAULT_CLASS_BUDGET) -> list[int]:
    """Ascending members of C(d): the x in [1, n**s] with (x, n**s)_s == d**s."""
    if n < 1 or s < 1:
        raise DomainError(f"class_members requires n, s >= 1, got n={n} s={s}")
    if d < 1 or n % d != 0:
        raise DomainError(f"d = {d} is not a positive divisor of n = {n}")
    if n**s > budget:
        raise BudgetExceededError(
            f"class enumeration needs n**s = {n**s} slots, budget is {budget}"
        )
    return list(_class_members(n, s, d))


def fourier_numerator(instance: CongruenceInstance) -> int:
    """Pre-division sum of the counting formula; always a multiple of n**s."""
    profile = class_profile(instance)
    n, s = instance.n, instance.s
    modulus = instance.modulus
    total = 0
    for d in profile.divisors:
        outer = cohen_ramanujan(d, s, instance.b)
        if outer == 0:
            continue
        arg = modulus // d**s
        term = outer
        for dj, gj in zip(profile.divisors, profile.multiplicities):
            if gj:
                term *= cohen_ramanujan(n // dj, s, arg) ** gj
        total += term
    return total


def count_restricted(instance: CongruenceInstance) -> int:
    """Number of solutions via the Ramanujan-sum closed form.

    Exact at any size; Python integers carry the result even when it
    reaches n**(s*(k-1)) and beyond.
    """
    numerator = fourier_numerator(instance)
    modulus = instance.modulus
    DIVISIBILITY_STATS["checked"] += 1
    if numerator % modulus != 0:
        DIVISIBILITY_STATS["failed"] += 1
        raise ConsistencyError(
            f"formula sum {numerator} is not divisible by modulus {modulus} for {instance}"
        )
    count = numerator // modulus
    if count < 0:
        raise ConsistencyError(f"negative solution count {count} for {instance}")
    return count


def count_unrestricted_lehmer(coefficients, b: int, n: int) -> int:
    """Unrestricted count of a_1*x_1 + ... + a_k*x_k == b (mod n) over Z_n**k.

    Solvable iff l | b for l = gcd(a_1, ..., a_k, n), and then there are
    exactly l * n**(k-1) solutions.
    """
    if n < 1:
        raise DomainError(f"modulus n must be >= 1, got {n}")
    coeffs = tuple(coefficients)
    if not coeffs:
        raise DomainError("count_unrestricted_lehmer requires at least one coefficient")
    l = math.gcd(n, *(abs(a) for a in coeffs))
    if b % l != 0:
        return 0
    return l * n ** (len(coeffs) - 1)


def count_units_rademacher(n: int, k: int, b: int) -> int:
    """Units-only count of x_1 + ... + x_k == b (mod n) as a prime product.

    phi(n)**k / n times one factor per prime p | n, the factor depending
    on whether p divides b.  Intermediate values are rational; the final
    result is provably integral and returned as an int.
    """
    if n < 1 or k < 1:
        raise DomainError(f"count_units_rademacher requires n, k >= 1, got n={n} k={k}")
    result = Fraction(euler_phi(n) ** k, n)
    for p, _ in factorize(n).factors:
        if b % p == 0:
            result *= 1 - Fraction((-1) ** (k - 1), (p - 1) ** (k - 1))
        else:
            result *= 1 - Fraction((-1) ** k, (p - 1) ** k)
    if result.denominator != 1:
        raise ConsistencyError(
            f"units count came out non-integral ({result}) for n={n} k={k} b={b}"
        )
    return int(result)


def count_units_nicol(n: int, k: int, b: int) -> int:
    """Units-only count as (1/n) * sum(c_d(b) * c_n(n/d)**k for d | n)."""
    if n < 1 or k < 1:
        raise DomainError(f"count_units_nicol requires n, k >= 1, got n={n} k={k}")
    total = 0
    for d in divisors(n):
        total += ramanujan_classic(d, b) * ramanujan_classic(n, n // d) ** k
    DIVISIBILITY_STATS["checked"] += 1
    if total % n != 0:
        DIVISIBILITY_STATS["failed"] += 1
        raise ConsistencyError(f"Ramanujan-sum total {total} is not divisible by n = {n}")
    return total // n
