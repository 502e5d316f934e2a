"""Preimages of (ba)^n, cycle systems, worst families, prime scans."""

from fractions import Fraction

import pytest

from ebwtlab.transform import ebwt, invert_ebwt, rho
from ebwtlab.words import root_exp, runs
from ebwtlab.worstcase import (
    CycleSystem,
    artin_candidate,
    artin_scan,
    cycle_solutions,
    fixed_point_free,
    preimage_ba,
    verify_circulant_inverse,
    worst_family,
)


def test_preimage_small_goldens():
    assert preimage_ba(1).parts == ("ab",)
    assert preimage_ba(2).parts == ("aabb",)
    assert preimage_ba(3).parts == ("aab", "abb")
    assert preimage_ba(4).parts == ("aaabbb", "ab")


def test_preimage_fields():
    family = preimage_ba(4)
    assert family.n == 4
    assert family.part_count == 2
    assert family.min_part_length == 2


def test_preimage_transform_is_ba_repeated():
    for n in range(1, 40):
        family = preimage_ba(n)
        assert ebwt(list(family.parts)) == "ba" * n
        assert rho(list(family.parts)) == 2 * n - 1


def test_preimage_agrees_with_generic_inversion():
    for n in range(1, 60):
        assert list(preimage_ba(n).parts) == invert_ebwt("ba" * n)


def test_preimage_conservation_and_primitivity():
    for n in range(1, 60):
        family = preimage_ba(n)
        text = "".join(family.parts)
        assert len(text) == 2 * n
        assert text.count("a") == n and text.count("b") == n
        assert all(root_exp(p).exponent == 1 for p in family.parts)


def test_preimage_rejects_bad_n():
    with pytest.raises(ValueError):
        preimage_ba(0)


def test_no_fixed_points():
    assert all(fixed_point_free(n) for n in range(1, 301))


def test_cycle_solutions_count_and_shape():
    systems = cycle_solutions(10, 4)
    assert len(systems) == 4  # t vectors with fixed endpoints, 2^(k-2)
    for s in systems:
        assert isinstance(s, CycleSystem)
        assert s.t[0] == 0 and s.t[-1] == 1
        assert len(s.t) == len(s.alpha) == len(s.beta) == len(s.i) == 4


def test_cycle_solution_golden_n4_k2():
    (system,) = cycle_solutions(4, 2)
    assert system.t == (0, 1)
    assert system.feasible
    assert system.i == (Fraction(3), Fraction(2))
    # The length-2 part of W(4) is the ab at positions (3, 2).
    assert "ab" in preimage_ba(4).parts


def test_cycle_solution_infeasible_n3_k2():
    (system,) = cycle_solutions(3, 2)
    assert not system.feasible
    assert all(x.denominator != 1 for x in system.i)


def test_cycle_coefficients_within_bounds():
    for n in (5, 17, 64):
        for k in range(2, 9):
            for s in cycle_solutions(n, k):
                top = (1 << k) - 1
                assert all(0 < a < top for a in s.alpha)
                assert all(0 < b < top for b in s.beta)


def test_cycle_equations_hold_for_solutions():
    # Each consecutive pair must satisfy n*t_j + i_j = 2*i_{j+1} - t_{j+1}.
    for n in (7, 10, 25):
        for k in (2, 3, 4, 5):
            for s in cycle_solutions(n, k):
                for j in range(k):
                    jn = (j + 1) % k
                    assert n * s.t[j] + s.i[j] == 2 * s.i[jn] - s.t[jn]


def test_solver_matches_part_lengths():
    for n in range(1, 80):
        lengths = {len(p) for p in preimage_ba(n).parts}
        for k in range(2, 8):
            feasible = any(s.feasible for s in cycle_solutions(n, k))
            assert feasible == (k in lengths), (n, k)


def test_two_cycle_residue_criterion():
    for n in range(1, 120):
        has_two = any(s.feasible for s in cycle_solutions(n, 2))
        assert has_two == (n % 3 == 1)


def test_cycle_solutions_rejects_bad_parameters():
    with pytest.raises(ValueError):
        cycle_solutions(0, 2)
    with pytest.raises(ValueError):
        cycle_solutions(5, 1)


def test_worst_family_goldens():
    fam = worst_family(2, 2)
    assert fam.n == 21
    assert fam.rho == 41
    assert fam.denominator == 18
    assert fam.ratio_lower_bound == Fraction(41, 18)
    assert fam.word == "".join(fam.parts)
    assert min(len(p) for p in fam.parts) > 2
    assert worst_family(1, 1).n == 6
    assert worst_family(3, 1).n == 21


def test_worst_family_transform_has_claimed_runs():
    fam = worst_family(2, 2)
    transform = ebwt(list(fam.parts))
    assert transform == "ba" * fam.n
    assert runs(transform) == fam.rho


def test_worst_family_scales_with_ratio():
    fam = worst_family(2, 40)
    assert fam.n % 3 == 0  # multiples of 3 rule out length-2 parts
    assert fam.ratio_lower_bound >= 40
    assert fam.rho == 2 * fam.n - 1
    assert min(len(p) for p in fam.parts) > 2


def test_worst_family_rejects_bad_parameters():
    with pytest.raises(ValueError):
        worst_family(0, 1)
    with pytest.raises(ValueError):
        worst_family(2, -1)


def _inverse_by_elimination(matrix):
    # Gauss-Jordan over exact rationals.
    k = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(k)]
           for i, row in enumerate(matrix)]
    for col in range(k):
        pivot = next(r for r in range(col, k) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        scale = aug[col][col]
        aug[col] = [v / scale for v in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [v - factor * p for v, p in zip(aug[r], aug[col])]
    return [row[k:] for row in aug]


def test_circulant_identity_small_k():
    assert verify_circulant_inverse(2)
    assert verify_circulant_inverse(3)
    assert verify_circulant_inverse(10)
    with pytest.raises(ValueError):
        verify_circulant_inverse(1)


def test_circulant_matches_elimination_oracle():
    for k in range(2, 9):
        lhs = [
            [2 * (1 if j == (i + 1) % k else 0) - (1 if i == j else 0) for j in range(k)]
            for i in range(k)
        ]
        inverse = _inverse_by_elimination(lhs)
        scale = (1 << k) - 1
        for i in range(k):
            for j in range(k):
                assert inverse[i][j] * scale == 1 << ((j - i) % k)
        assert verify_circulant_inverse(k)


def test_artin_candidate_goldens():
    assert artin_candidate(2)
    assert not artin_candidate(6)
    assert artin_candidate(10)
    assert not artin_candidate(1)
    assert not artin_candidate(7)  # 8 is not prime
    with pytest.raises(ValueError):
        artin_candidate(0)


def test_artin_candidate_against_direct_order_computation():
    for n in range(1, 400):
        p = n + 1
        expected = False
        if p > 2 and all(p % d for d in range(2, p)):
            order, value = 1, 2 % p
            while value != 1:
                value = value * 2 % p
                order += 1
            expected = order == n
        assert artin_candidate(n) == expected


def test_artin_scan_prefixes():
    assert artin_scan(1) == []
    assert artin_scan(12) == [2, 4, 10, 12]
    assert artin_scan(58) == [2, 4, 10, 12, 18, 28, 36, 52, 58]
    # 61 is prime and 2 generates its group, so 60 qualifies as well.
    assert artin_scan(60) == [2, 4, 10, 12, 18, 28, 36, 52, 58, 60]


def test_single_word_preimages_follow_doubled_index():
    # W(n) is one word exactly when the doubled length 2n passes the
    # candidate test; brute check over the first sixty families.
    singles = [n for n in range(1, 61) if preimage_ba(n).part_count == 1]
    assert singles == [n for n in range(1, 61) if artin_candidate(2 * n)]
    assert singles == [1, 2, 5, 6, 9, 14, 18, 26, 29, 30, 33, 41, 50, 53]
