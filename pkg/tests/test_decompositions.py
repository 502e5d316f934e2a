"""Composition enumeration, counting, extremal search, block bounds."""

import random
from math import comb

import pytest

from ebwtlab.decompositions import (
    SearchCancelled,
    SearchLimitError,
    apply_composition,
    block_decomposition,
    count_decompositions,
    enumerate_compositions,
    generalized_fibonacci,
    growth_rate,
    lyndon_factorization,
    search_extremes,
    verify_best_bound,
)
from ebwtlab.transform import rho
from ebwtlab.words import rotations


def _compositions_oracle(n, m):
    # Recursive reference: first part, then any composition of the rest.
    if n == 0:
        return [()]
    if n < m:
        return []
    out = []
    for first in range(m, n + 1):
        out.extend((first,) + rest for rest in _compositions_oracle(n - first, m))
    return out


def test_enumeration_matches_recursive_oracle():
    for k in range(4):
        for n in range(k + 1, 16):
            expected = sorted(_compositions_oracle(n, k + 1))
            assert list(enumerate_compositions(n, k)) == expected


def test_enumeration_is_lexicographic_and_complete():
    got = list(enumerate_compositions(6, 1))
    assert got == [(2, 2, 2), (2, 4), (3, 3), (4, 2), (6,)]
    assert list(enumerate_compositions(4, 0)) == [
        (1, 1, 1, 1),
        (1, 1, 2),
        (1, 2, 1),
        (1, 3),
        (2, 1, 1),
        (2, 2),
        (3, 1),
        (4,),
    ]


def test_enumeration_empty_when_word_too_short():
    assert list(enumerate_compositions(2, 2)) == []
    assert list(enumerate_compositions(1, 3)) == []


def test_enumeration_rejects_bad_parameters():
    with pytest.raises(ValueError):
        list(enumerate_compositions(0, 0))
    with pytest.raises(ValueError):
        list(enumerate_compositions(5, -1))


def test_generalized_fibonacci_small_values():
    # Step 1 doubles, step 2 is the classic sequence shifted onto 1, 1.
    assert [generalized_fibonacci(1, n) for n in range(6)] == [1, 2, 4, 8, 16, 32]
    assert [generalized_fibonacci(2, n) for n in range(8)] == [1, 1, 2, 3, 5, 8, 13, 21]
    assert [generalized_fibonacci(3, n) for n in range(8)] == [1, 1, 1, 2, 3, 4, 6, 9]


def test_count_matches_enumeration_and_binomial_sum():
    for k in range(5):
        for n in range(k + 1, 21):
            m = k + 1
            stream = sum(1 for _ in enumerate_compositions(n, k))
            binomial = sum(comb(n - p * m + p - 1, p - 1) for p in range(1, n // m + 1))
            assert count_decompositions(n, k) == stream == binomial


def test_count_examples():
    assert count_decompositions(6, 1) == 5
    assert count_decompositions(5, 0) == 16
    assert count_decompositions(4, 0) == 8
    with pytest.raises(ValueError):
        count_decompositions(3, 3)


def test_growth_rate_golden_and_residual():
    assert abs(growth_rate(1) - (1 + 5**0.5) / 2) < 1e-9
    for k in range(1, 7):
        x = growth_rate(k)
        assert abs(x ** (k + 1) - x**k - 1.0) < 1e-12
        assert 1.0 < x < 2.0
    with pytest.raises(ValueError):
        growth_rate(0)


def test_count_growth_tracks_the_root():
    for k in range(1, 6):
        c = k + 1
        ratio = generalized_fibonacci(c, 201) / generalized_fibonacci(c, 200)
        assert abs(ratio - growth_rate(k)) < 1e-6


def test_apply_composition():
    assert apply_composition("baabab", (3, 3)) == ["baa", "bab"]
    assert apply_composition("baabab", (6,)) == ["baabab"]
    with pytest.raises(ValueError):
        apply_composition("abc", (2, 2))
    with pytest.raises(ValueError):
        apply_composition("abc", (3, 0))


def test_search_worked_example():
    result = search_extremes("baabab", 2)
    assert result.count_explored == 2
    assert result.baseline_rho == 3
    assert (result.min_rho, result.min_witness) == (3, (6,))
    assert (result.max_rho, result.max_witness) == (5, (3, 3))


def test_search_matches_brute_force():
    rng = random.Random(301)
    for _ in range(40):
        word = "".join(rng.choice("ab") for _ in range(rng.randint(2, 12)))
        k = rng.randint(0, 2)
        if len(word) < k + 1:
            continue
        rhos = {
            comp: rho(apply_composition(word, comp))
            for comp in _compositions_oracle(len(word), k + 1)
        }
        result = search_extremes(word, k)
        assert result.count_explored == len(rhos)
        assert result.min_rho == min(rhos.values())
        assert result.max_rho == max(rhos.values())
        assert rhos[result.min_witness] == result.min_rho
        assert rhos[result.max_witness] == result.max_rho
        # Ties break toward the lexicographically least composition.
        assert result.min_witness == min(c for c, r in rhos.items() if r == result.min_rho)
        assert result.max_witness == min(c for c, r in rhos.items() if r == result.max_rho)


def test_search_limit_guard():
    with pytest.raises(SearchLimitError) as err:
        search_extremes("ab" * 15, 0, limit=10)
    assert err.value.count == 2**29
    assert err.value.limit == 10
    assert "2" in str(err.value) and "limit" in str(err.value)


def test_search_cancellation():
    calls = 0

    def stop_after_three():
        nonlocal calls
        calls += 1
        return calls > 3

    with pytest.raises(SearchCancelled):
        search_extremes("abababab", 0, should_stop=stop_after_three)
    assert calls == 4


def test_block_decomposition_goldens():
    assert block_decomposition("baabab", 3) == ["baa", "bab"]
    assert block_decomposition("baabab", 4) == ["baabab"]
    assert block_decomposition("abcdefg", 2) == ["ab", "cd", "efg"]
    assert block_decomposition("abc", 3) == ["abc"]
    with pytest.raises(ValueError):
        block_decomposition("ab", 3)
    with pytest.raises(ValueError):
        block_decomposition("ab", 0)


def test_block_parts_reassemble_and_stay_admissible():
    rng = random.Random(302)
    for _ in range(200):
        word = "".join(rng.choice("ab") for _ in range(rng.randint(1, 60)))
        p = rng.randint(1, len(word))
        parts = block_decomposition(word, p)
        assert "".join(parts) == word
        assert all(len(part) >= p for part in parts)
        assert all(len(part) == p for part in parts[:-1])
        assert p <= len(parts[-1]) < 2 * p


def test_bound_check_fields():
    check = verify_best_bound("baabab", 2)
    assert (check.sigma, check.k, check.remainder) == (2, 2, 0)
    assert check.bound == 18
    assert check.fine_bound == 14
    assert check.achieved == rho(block_decomposition("baabab", 3))
    assert check.ok and check.ok_fine


def test_bounds_hold_on_random_words():
    rng = random.Random(303)
    for _ in range(300):
        alphabet = "ab" if rng.random() < 0.5 else "abc"
        k = rng.randint(0, 3)
        word = "".join(rng.choice(alphabet) for _ in range(rng.randint(k + 1, 120)))
        check = verify_best_bound(word, k, alphabet)
        assert check.ok and check.ok_fine
        assert check.fine_bound <= check.bound


def _is_lyndon(word):
    return all(word < r for r in rotations(word)[1:])


def test_lyndon_factorization_goldens():
    assert lyndon_factorization("banana") == ["b", "an", "an", "a"]
    assert lyndon_factorization("bababa") == ["b", "ab", "ab", "a"]
    assert lyndon_factorization("aabab") == ["aabab"]
    with pytest.raises(ValueError):
        lyndon_factorization("")


def test_lyndon_factors_are_nonincreasing_lyndon_words():
    rng = random.Random(304)
    for _ in range(500):
        word = "".join(rng.choice("ab") for _ in range(rng.randint(1, 40)))
        parts = lyndon_factorization(word)
        assert "".join(parts) == word
        assert all(_is_lyndon(p) for p in parts)
        assert all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def test_lyndon_respects_declared_alphabet():
    # Under b < a the word "ab" is no longer a Lyndon word but "ba" is.
    assert lyndon_factorization("ab", "ba") == ["a", "b"]
    assert lyndon_factorization("ba", "ba") == ["ba"]
