#!/usr/bin/env python3
"""Decompositions of a word: how many, how fast they grow, and the best
and worst run counts an exhaustive search can find.

Run from the repository root:  python demos/02_decomposition_search.py
"""

from ebwtlab import (
    apply_composition,
    block_decomposition,
    count_decompositions,
    enumerate_compositions,
    growth_rate,
    lyndon_factorization,
    rho,
    search_extremes,
    verify_best_bound,
)

# A decomposition with all parts longer than k is a composition of the
# length with parts >= k + 1; they stream in lexicographic order.
print("compositions of 6 with parts > 1:")
for comp in enumerate_compositions(6, 1):
    print(f"  {'+'.join(map(str, comp))}  ->  {apply_composition('baabab', comp)}")
print(f"count = {count_decompositions(6, 1)}")

# Counts follow a generalized Fibonacci recurrence and grow like the
# real root of X^(k+1) - X^k - 1, which sits strictly between 1 and 2.
for k in range(1, 5):
    print(f"k = {k}: count(30) = {count_decompositions(30, k):>8}, growth ~ {growth_rate(k):.6f}")

# Exhaustive search over the whole composition space, with exact
# extremes and the first witness for each.
result = search_extremes("baabab", 2)
print(f"\nsearch baabab, k = 2: explored {result.count_explored}")
print(f"  baseline (no split) rho = {result.baseline_rho}")
print(f"  min rho = {result.min_rho} via {result.min_witness}")
print(f"  max rho = {result.max_rho} via {result.max_witness}")

# Cutting into equal blocks of length k + 1 (remainder folded into the
# last block) is guaranteed to stay within sigma^(k+1) + 4k + 2 runs,
# however long the word gets.
word = "abbababbabababbababbabababbababab"
for k in (1, 2, 3):
    parts = block_decomposition(word, k + 1)
    check = verify_best_bound(word, k)
    print(
        f"\nblocks of {k + 1}: rho = {check.achieved} <= {check.bound}"
        f" (fine bound {check.fine_bound}), parts {parts[:4]}..."
    )
    assert check.ok and check.ok_fine

# The Lyndon factorization gives another canonical decomposition; its
# parts never increase and each is strictly least among its rotations.
print(f"\nlyndon(banana) = {lyndon_factorization('banana')}")
print(f"rho of the lyndon parts = {rho(lyndon_factorization('banana'))}")
