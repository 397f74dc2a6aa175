#!/usr/bin/env python3
"""Walk one restricted congruence through the whole pipeline.

Instance: x_1 + x_2 == 5 (mod 16) with (x_1, 16)_2 == 1 and
(x_2, 16)_2 == 4, i.e. n = 4, s = 2, b = 5, t = (1, 2).

Prints the divisor classes of [1, 16], the generalized Ramanujan sums
feeding the closed form, the term-by-term accumulation of the
pre-division sum, the explicit solutions, and a three-engine cross-check.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "src"))

from rescong import (
    CongruenceInstance,
    brute_force_count,
    class_members,
    class_profile,
    cohen_ramanujan,
    convolution_count,
    count_restricted,
    enumerate_solutions,
    fourier_numerator,
)


def main() -> None:
    inst = CongruenceInstance(n=4, s=2, b=5, restrictions=(1, 2))
    n, s, modulus = inst.n, inst.s, inst.modulus
    profile = class_profile(inst)

    print(f"instance: x_1 + x_2 == {inst.b} (mod {modulus}),  (x_i, {modulus})_{s} == t_i**{s}")
    print(f"restrictions t = {inst.restrictions}, class multiplicities g = {profile.multiplicities}")
    print()

    print(f"divisor classes of [1, {modulus}]:")
    for d in profile.divisors:
        members = class_members(n, s, d)
        print(f"  C({d}): (x, {modulus})_{s} == {d**s:>2}  ->  {members}")
    print()

    print("closed form: count = (1/n**s) * sum over d | n of "
          "c_(d,s)(b) * prod_j c_(n/d_j,s)(n**s/d**s)**g_j")
    total = 0
    for d in profile.divisors:
        outer = cohen_ramanujan(d, s, inst.b)
        arg = modulus // d**s
        inner = []
        term = outer
        for dj, gj in zip(profile.divisors, profile.multiplicities):
            value = cohen_ramanujan(n // dj, s, arg)
            inner.append(f"c_({n // dj},{s})({arg})**{gj} = {value}**{gj}")
            term *= value**gj
        total += term
        print(f"  d={d}: c_({d},{s})({inst.b}) = {outer:>2}  *  [{' * '.join(inner)}]  ->  {term}")
    print(f"  pre-division sum = {total} (fourier_numerator agrees: {fourier_numerator(inst)})")
    print(f"  count = {total} / {modulus} = {count_restricted(inst)}")
    print()

    print("explicit solutions (lexicographic):")
    for sol in enumerate_solutions(inst, limit=100):
        print(f"  {sol}")
    print()

    print("engine cross-check:")
    print(f"  formula     = {count_restricted(inst)}")
    print(f"  brute force = {brute_force_count(inst)}")
    print(f"  convolution = {convolution_count(inst)}")


if __name__ == "__main__":
    main()
