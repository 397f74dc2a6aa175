"""Independent counting engines for restricted congruences.

Exhaustive tuple enumeration, iterated cyclic convolution of class
indicator vectors over Z/n**s, explicit character sums, and solution
listings.  None of these touch the closed form; agreement between all
three counting paths on the same instance is the backbone of the
verification sweep.
"""

from __future__ import annotations

import itertools
import math

from .congruence import CongruenceInstance, class_members
from .errors import BudgetExceededError, ConsistencyError, DomainError
from .ramanujan import _pairwise_sum

DEFAULT_TUPLE_BUDGET = 10**7
DEFAULT_VECTOR_BUDGET = 10**5


def brute_force_count(instance: CongruenceInstance, budget: int = DEFAULT_TUPLE_BUDGET) -> int:
    """Ground truth: walk every admissible tuple and count the hits."""
    member_lists = [
        class_members(instance.n, instance.s, t) for t in instance.restrictions
    ]
    total_tuples = math.prod(len(ms) for ms in member_lists)
    if total_tuples > budget:
        raise BudgetExceededError(
            f"{total_tuples} tuples exceed the enumeration budget {budget}; "
            "use convolution_count instead"
        )
    modulus = instance.modulus
    target = instance.b
    return sum(
        1 for combo in itertools.product(*member_lists) if sum(combo) % modulus == target
    )


def convolution_count(instance: CongruenceInstance, budget: int = DEFAULT_VECTOR_BUDGET) -> int:
    """Schoolbook cyclic convolution of class indicators over Z/n**s.

    Costs O(k * n**2s) exact integer operations, so it reaches instances
    whose tuple spaces are far beyond brute force.
    """
    modulus = instance.modulus
    if modulus > budget:
        raise BudgetExceededError(f"modulus {modulus} exceeds the vector budget {budget}")
    vec = [0] * modulus
    vec[0] = 1  # delta at 0: the empty sum
    expected_mass = 1
    for t in instance.restrictions:
        members = class_members(instance.n, instance.s, t)
        nxt = [0] * modulus
        for residue, ways in enumerate(vec):
            if ways:
                for x in members:
                    nxt[(residue + x) % modulus] += ways
        vec = nxt
        expected_mass *= len(members)
        if sum(vec) != expected_mass:
            raise ConsistencyError(
                f"convolution mass {sum(vec)} != expected {expected_mass} "
                f"after class t={t} of {instance}"
            )
    return vec[instance.b]


def class_character_sum(n: int, s: int, d: int, m: int, budget: int = 10**6) -> complex:
    """sum(e(m * x / n**s) for x in C(d)); lands on c_{n/d, s}(m).

    Returned un-rounded so callers can check the residual themselves.
    """
    members = class_members(n, s, d, budget=budget)
    ns = n**s
    m_red = m % ns
    terms = []
    for x in members:
        angle = 2.0 * math.pi * ((m_red * x) % ns) / ns
        terms.append(complex(math.cos(angle), math.sin(angle)))
    return _pairwise_sum(terms)


def enumerate_solutions(
    instance: CongruenceInstance, limit: int, budget: int = DEFAULT_TUPLE_BUDGET
) -> list[tuple[int, ...]]:
    """Lexicographically first solutions, at most `limit` of them.

    Class member lists are ascending, so the odometer order of
    itertools.product is exactly lexicographic order on the tuples.
    """
    if limit < 1:
        raise DomainError(f"limit must be >= 1, got {limit}")
    member_lists = [
        class_members(instance.n, instance.s, t) for t in instance.restrictions
    ]
    total_tuples = math.prod(len(ms) for ms in member_lists)
    if total_tuples > budget:
        raise BudgetExceededError(
            f"{total_tuples} tuples exceed the enumeration budget {budget}"
        )
    modulus = instance.modulus
    target = instance.b
    out: list[tuple[int, ...]] = []
    for combo in itertools.product(*member_lists):
        if sum(combo) % modulus == target:
            out.append(combo)
            if len(out) >= limit:
                break
    return out
