#!/usr/bin/env python3
"""Transform basics: one word, a multiset of words, and the way back.

Run from the repository root:  python demos/01_transform_basics.py
"""

from ebwtlab import (
    bwt,
    ebwt,
    ebwt_matrix,
    first_column,
    invert_ebwt,
    omega_sorted,
    rho,
    runs,
)

# The single-word transform sorts all rotations and reads last symbols.
word = "banana"
print(f"bwt({word}) = {bwt(word)}")          # nnbaaa
print(f"runs = {runs(bwt(word))}")           # adjacent unequal pairs

# The multiset version does the same over the rotations of every part,
# ordered by their infinite repetitions (ties: shorter word first).
parts = ["baa", "bab"]
print(f"\nebwt({{{{{','.join(parts)}}}}}):")
for rotation, last in ebwt_matrix(parts):
    print(f"  {rotation}  ->  {last}")
transform = ebwt(parts)
print(f"L = {transform}")                    # bababa
print(f"F = {first_column(transform)}")      # aaabbb, the same symbols sorted
print(f"rho = {rho(parts)}")                 # 5, the maximum for length 6

# Inversion recovers the parts up to rotation; they come back as least
# rotations in ascending order, so aab is the canonical form of baa.
recovered = invert_ebwt(transform)
print(f"\ninvert_ebwt({transform}) = {recovered}")
assert ebwt(recovered) == transform

# Any string whatsoever is the transform of exactly one such multiset.
for target in ("ab", "ba", "bbbaaa", "abba"):
    print(f"invert_ebwt({target}) = {invert_ebwt(target)}")

# The omega order is not the plain lexicographic one: a word sorts by
# its infinite repetition, and equal repetitions break toward shorter.
print(f"\nomega order: {omega_sorted(['ab', 'aba', 'abb', 'ababab'])}")

# Distinct decompositions of one word usually give different run
# counts; that gap is what the rest of the demos explore.
w = "baabab"
print(f"\nrho([{w}]) = {rho([w])}")
print(f"rho([baa, bab]) = {rho(['baa', 'bab'])}")
