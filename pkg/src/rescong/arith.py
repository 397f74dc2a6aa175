"""Elementary multiplicative number theory on plain integers.

Factorization by trial division, divisor enumeration, the Moebius and
totient functions, and the generalized gcd (a, b)_s: the largest s-th
power l**s that divides a and b simultaneously.  Everything here is
exact integer arithmetic; nothing touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError

# Trial division to sqrt(n) stays practical at desk scale; refuse anything
# bigger rather than silently grinding.
FACTORIZE_LIMIT = 10**12


@dataclass(frozen=True)
class Factorization:
    """value == prod(p**e for p, e in factors), primes strictly ascending.

    The factorization of 1 has an empty factor tuple.
    """

    value: int
    factors: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class GeneralizedGcd:
    """(a, b)_s: value == base**power is the largest such power dividing both."""

    base: int
    power: int
    value: int


@lru_cache(maxsize=None)
def _factor_pairs(n: int) -> tuple[tuple[int, int], ...]:
    pairs: list[tuple[int, int]] = []
    rem = n
    for p in (2, 3):
        e = 0
        while rem % p == 0:
            rem //= p
            e += 1
        if e:
            pairs.append((p, e))
    f = 5
    while f * f <= rem:
        for p in (f, f + 2):
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            if e:
                pairs.append((p, e))
        f += 6
    if rem > 1:
        pairs.append((rem, 1))
    return tuple(pairs)


def factorize(n: int) -> Factorization:
    """Prime factorization of n for 1 <= n <= FACTORIZE_LIMIT."""
    if n < 1:
        raise DomainError(f"factorize requires n >= 1, got {n}")
    if n > FACTORIZE_LIMIT:
        raise DomainError(f"factorize is limited to n <= {FACTORIZE_LIMIT}, got {n}")
    return Factorization(value=n, factors=_factor_pairs(n))


@lru_cache(maxsize=None)
def _divisor_tuple(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in _factor_pairs(n):
        pk = 1
        grown = []
        for _ in range(e):
            pk *= p
            grown.extend(d * pk for d in divs)
        divs.extend(grown)
    return tuple(sorted(divs))


def divisors(n: int) -> list[int]:
    """All positive divisors of n, strictly ascending (1 first, n last)."""
    if n < 1:
        raise DomainError(f"divisors requires n >= 1, got {n}")
    if n > FACTORIZE_LIMIT:
        raise DomainError(f"divisors is limited to n <= {FACTORIZE_LIMIT}, got {n}")
    return list(_divisor_tuple(n))


def mobius(n: int) -> int:
    """Moebius mu(n): 0 when a squared prime divides n, else (-1)**omega(n)."""
    if n < 1:
        raise DomainError(f"mobius requires n >= 1, got {n}")
    pairs = factorize(n).factors
    if any(e > 1 for _, e in pairs):
        return 0
    return -1 if len(pairs) % 2 else 1


def euler_phi(n: int) -> int:
    """Count of 1 <= j <= n with gcd(j, n) == 1."""
    if n < 1:
        raise DomainError(f"euler_phi requires n >= 1, got {n}")
    phi = 1
    for p, e in factorize(n).factors:
        phi *= p ** (e - 1) * (p - 1)
    return phi


def jordan_totient(n: int, s: int) -> int:
    """J_s(n) = n**s * prod(1 - p**-s over primes p | n), exactly.

    Counts the 1 <= y <= n**s with (y, n**s)_s == 1; J_1 is the Euler
    totient.
    """
    if n < 1:
        raise DomainError(f"jordan_totient requires n >= 1, got {n}")
    if s < 1:
        raise DomainError(f"jordan_totient requires s >= 1, got {s}")
    out = 1
    for p, e in factorize(n).factors:
        out *= p ** (s * e) - p ** (s * (e - 1))
    return out


def iroot(x: int, s: int) -> int:
    """Floor of the s-th root of x, by integer binary search (no floats)."""
    if s < 1:
        raise DomainError(f"iroot requires s >= 1, got {s}")
    if x < 0:
        raise DomainError(f"iroot requires x >= 0, got {x}")
    if x < 2 or s == 1:
        return x
    lo, hi = 1, 1 << (x.bit_length() // s + 1)  # hi**s > x by construction
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if mid**s <= x:
            lo = mid
        else:
            hi = mid
    return lo


def generalized_gcd(a: int, b: int, s: int) -> GeneralizedGcd:
    """The largest l**s dividing both a and b; (a, b)_1 is the usual gcd.

    Signs are ignored (divisibility is sign-blind) and one argument may
    be zero, in which case every integer divides it and the other
    argument decides the answer.  Both zero is undefined.
    """
    if s < 1:
        raise DomainError(f"generalized_gcd requires s >= 1, got {s}")
    if a == 0 and b == 0:
        raise DomainError("generalized_gcd requires at least one nonzero argument")
    g = math.gcd(abs(a), abs(b))
    base = 1
    for p, e in factorize(g).factors:
        if e >= s:
            base *= p ** (e // s)
    return GeneralizedGcd(base=base, power=s, value=base**s)
