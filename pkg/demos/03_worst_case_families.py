#!/usr/bin/env python3
"""Adversarial families: multisets whose transform is (ba)^n, the cycle
arithmetic behind their part lengths, and how far they push the run
count past the constructive guarantee.

Run from the repository root:  python demos/03_worst_case_families.py
"""

from ebwtlab import (
    artin_candidate,
    artin_scan,
    cycle_solutions,
    ebwt,
    preimage_ba,
    rho,
    verify_circulant_inverse,
    worst_family,
)

# W(n) is the unique multiset transforming to (ba)^n; its run count
# 2n - 1 is the maximum any length-2n input can reach.
for n in (1, 2, 3, 4, 7, 12):
    family = preimage_ba(n)
    print(f"W({n:2}) = {family.parts}")
    assert ebwt(list(family.parts)) == "ba" * n

# Whether W(n) contains a part of length k reduces to an exact linear
# system; the positions i_j must come out integral and in range.
print("\nlength-2 parts exist exactly when n = 1 mod 3:")
for n in (3, 4, 5, 6, 7):
    (system,) = cycle_solutions(n, 2)
    positions = ", ".join(str(x) for x in system.i)
    print(f"  n = {n}: i = ({positions}), feasible = {system.feasible}")

# The closed form inverts a circulant matrix; the identity behind it is
# checked in exact integer arithmetic.
print(f"\ncirculant identity for k = 2..16: {all(verify_circulant_inverse(k) for k in range(2, 17))}")

# Choosing n divisible by (2^2 - 1)(2^3 - 1)...(2^k - 1) rules out all
# parts of length <= k, so no k-restricted decomposition of the
# concatenated word can reuse the family; its best guaranteed bound
# stays constant while 2n - 1 grows without limit.
family = worst_family(2, 2)
print(f"\nworst family for k = 2, ratio 2: n = {family.n}")
print(f"  parts: {family.parts}")
print(f"  rho = {family.rho}, guarantee denominator = {family.denominator}")
print(f"  ratio >= {family.ratio_lower_bound} (= {float(family.ratio_lower_bound):.3f})")
assert rho(list(family.parts)) == family.rho

# When is W(n) a single word?  Exactly when the word length 2n passes
# the prime test: 2n + 1 prime with 2 generating its multiplicative
# group.  Note the doubling; the scan itself tests its argument as is.
singles = [n for n in range(1, 31) if preimage_ba(n).part_count == 1]
print(f"\nsingle-word families, n <= 30:  {singles}")
print(f"their doubled lengths all pass:  {[2 * n for n in singles]}")
assert all(artin_candidate(2 * n) for n in singles)
print(f"artin_scan(60) = {artin_scan(60)}")
