"""Named property suites runnable from the command line.

Each suite re-derives a family of guarantees from scratch and reports
one pass/fail line per property, with a counterexample in the detail on
failure.  `verify --suite all` chains every suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .decompositions import (
    count_decompositions,
    enumerate_compositions,
    generalized_fibonacci,
    growth_rate,
    verify_best_bound,
)
from .transform import ebwt, ebwt_matrix, first_column, invert_ebwt, rho
from .words import least_rotation, omega_sorted, root_exp, runs
from .worstcase import (
    artin_candidate,
    artin_scan,
    cycle_solutions,
    fixed_point_free,
    preimage_ba,
    verify_circulant_inverse,
    worst_family,
    _cycle_lengths,
)

__all__ = ["CheckResult", "SuiteReport", "SUITE_NAMES", "run_suite"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def _result(name: str, failures: list[str], detail: str) -> CheckResult:
    if failures:
        return CheckResult(name, False, f"{len(failures)} failures, first: {failures[0]}")
    return CheckResult(name, True, detail)


def _random_word(rng: random.Random, alphabet: str, length: int) -> str:
    return "".join(rng.choice(alphabet) for _ in range(length))


# ---------------------------------------------------------------- roundtrip


def _check_worked_example() -> CheckResult:
    failures = []
    if ebwt(["baa", "bab"]) != "bababa":
        failures.append(f"ebwt(baa,bab) = {ebwt(['baa', 'bab'])!r}")
    rows = ebwt_matrix(["baa", "bab"])
    f_col = "".join(row[0][0] for row in rows)
    if f_col != "aaabbb":
        failures.append(f"first column reads {f_col!r}")
    if first_column("bababa") != "aaabbb":
        failures.append(f"first_column = {first_column('bababa')!r}")
    if invert_ebwt("bababa") != ["aab", "abb"]:
        failures.append(f"invert(bababa) = {invert_ebwt('bababa')!r}")
    if rho(["baa", "bab"]) != 5:
        failures.append(f"rho = {rho(['baa', 'bab'])}")
    return _result("worked-example", failures, "transform, matrix, inversion, runs")


def _check_exhaustive_binary() -> CheckResult:
    failures = []
    total = 0
    for length in range(1, 11):
        for code in range(1 << length):
            word = "".join("ab"[(code >> i) & 1] for i in range(length))
            parts = invert_ebwt(word)
            total += 1
            if ebwt(parts) != word:
                failures.append(f"{word!r} -> {parts!r}")
            elif any(root_exp(p).exponent != 1 for p in parts):
                failures.append(f"{word!r} gave a non-primitive part in {parts!r}")
    return _result("exhaustive-binary", failures, f"{total} words of length <= 10")


def _check_random_roundtrip() -> CheckResult:
    rng = random.Random(7001)
    failures = []
    trials = 10_000
    for _ in range(trials):
        alphabet = "ab" if rng.random() < 0.5 else "abc"
        word = _random_word(rng, alphabet, rng.randint(1, 200))
        if ebwt(invert_ebwt(word)) != word:
            failures.append(repr(word))
    return _result("random-roundtrip", failures, f"{trials} words of length <= 200")


def _check_canonical_multisets() -> CheckResult:
    rng = random.Random(7002)
    failures = []
    trials = 300
    for _ in range(trials):
        alphabet = "ab" if rng.random() < 0.5 else "abc"
        seen = set()
        total = 0
        while total < 60 and (not seen or rng.random() < 0.8):
            word = least_rotation(_random_word(rng, alphabet, rng.randint(1, 12)))
            if root_exp(word).exponent == 1 and word not in seen:
                seen.add(word)
                total += len(word)
        parts = omega_sorted(seen)
        if invert_ebwt(ebwt(parts)) != parts:
            failures.append(repr(parts))
    return _result("canonical-multisets", failures, f"{trials} primitive multisets")


def _suite_roundtrip() -> list[CheckResult]:
    return [
        _check_worked_example(),
        _check_exhaustive_binary(),
        _check_random_roundtrip(),
        _check_canonical_multisets(),
    ]


# ----------------------------------------------------------------- counting


def _binomial_count(n: int, m: int) -> int:
    # Stars and bars: compositions of n into parts >= m, summed over the
    # number of parts.
    return sum(comb(n - p * m + p - 1, p - 1) for p in range(1, n // m + 1))


def _check_three_way_counts() -> CheckResult:
    failures = []
    cases = 0
    for k in range(5):
        for n in range(k + 1, 23):
            cases += 1
            formula = count_decompositions(n, k)
            oracle = _binomial_count(n, k + 1)
            stream = sum(1 for _ in enumerate_compositions(n, k))
            if not (formula == oracle == stream):
                failures.append(f"n={n} k={k}: formula {formula}, binomial {oracle}, stream {stream}")
    return _result("three-way-counts", failures, f"{cases} (n, k) pairs, n <= 22, k <= 4")


def _check_growth_convergence() -> CheckResult:
    failures = []
    for c in range(2, 7):
        ratio = generalized_fibonacci(c, 201) / generalized_fibonacci(c, 200)
        root = growth_rate(c - 1)
        if abs(ratio - root) > 1e-6:
            failures.append(f"c={c}: ratio {ratio}, root {root}")
        if not 1.0 < root < 2.0:
            failures.append(f"c={c}: root {root} outside (1, 2)")
    golden = (1 + 5**0.5) / 2
    if abs(growth_rate(1) - golden) > 1e-9:
        failures.append(f"k=1 root {growth_rate(1)!r} vs {golden!r}")
    return _result("growth-convergence", failures, "ratios at n = 200 for steps 2..6")


def _check_restriction_nesting() -> CheckResult:
    failures = []
    for n in range(1, 23):
        previous = None
        for k in range(5):
            if n < k + 1:
                break
            count = count_decompositions(n, k)
            if previous is not None and count > previous:
                failures.append(f"n={n}: count rose from k={k-1} to k={k}")
            previous = count
    for n in range(2, 15):
        sets = [set(enumerate_compositions(n, k)) for k in range(4)]
        for k in range(3):
            if n >= k + 2 and not sets[k + 1] <= sets[k]:
                failures.append(f"n={n}: level {k+1} not nested in level {k}")
    return _result("restriction-nesting", failures, "counts and composition sets, n <= 22")


def _suite_counting() -> list[CheckResult]:
    return [
        _check_three_way_counts(),
        _check_growth_convergence(),
        _check_restriction_nesting(),
    ]


# ------------------------------------------------------------------- bounds


def _check_block_bounds() -> CheckResult:
    rng = random.Random(7100)
    failures = []
    trials = 500
    for _ in range(trials):
        alphabet = "ab" if rng.random() < 0.5 else "abc"
        k = rng.randint(1, 3)
        word = _random_word(rng, alphabet, rng.randint(k + 1, 200))
        check = verify_best_bound(word, k, alphabet)
        if not (check.ok and check.ok_fine):
            failures.append(
                f"{word!r} k={k}: achieved {check.achieved}, bounds {check.bound}/{check.fine_bound}"
            )
    return _result("block-bounds", failures, f"{trials} random words, sigma in (2, 3), k <= 3")


def _check_uniform_multisets() -> CheckResult:
    failures = []
    for alphabet in ("ab", "abc"):
        sigma = len(alphabet)
        for p in range(1, 5):
            parts = []
            stack = [""]
            while stack:
                prefix = stack.pop()
                if len(prefix) == p:
                    parts.append(prefix)
                else:
                    stack.extend(prefix + c for c in reversed(alphabet))
            l = ebwt(parts, alphabet)
            expected = "".join(c * p for c in alphabet) * sigma ** (p - 1)
            if l != expected:
                failures.append(f"sigma={sigma} p={p}: transform {l!r}")
            # The block pattern has sigma^p maximal blocks, so the run count
            # (adjacent unequal pairs) is sigma^p - 1.
            if runs(l) != sigma**p - 1:
                failures.append(f"sigma={sigma} p={p}: runs {runs(l)} != {sigma**p - 1}")
    return _result(
        "uniform-multisets",
        failures,
        "all length-p words, sigma in (2, 3), p <= 4; runs = sigma^p - 1",
    )


def _check_equal_length_cap() -> CheckResult:
    rng = random.Random(7101)
    failures = []
    trials = 200
    for _ in range(trials):
        alphabet = "ab" if rng.random() < 0.5 else "abc"
        p = rng.randint(1, 4)
        parts = [_random_word(rng, alphabet, p) for _ in range(rng.randint(1, 8))]
        sigma = len(alphabet)
        if rho(parts, alphabet) > sigma**p - 1:
            failures.append(f"{parts!r}: rho {rho(parts, alphabet)} > {sigma**p - 1}")
    return _result("equal-length-cap", failures, f"{trials} equal-length multisets")


def _random_multiset(rng: random.Random, alphabet: str, max_total: int = 60) -> list[str]:
    parts = []
    total = 0
    while total < max_total and (not parts or rng.random() < 0.75):
        word = _random_word(rng, alphabet, rng.randint(1, 12))
        parts.append(word)
        total += len(word)
        if rng.random() < 0.3:
            parts.append(word)
            total += len(word)
    return parts


def _check_removal_bound() -> CheckResult:
    rng = random.Random(7102)
    failures = []
    trials = 1000
    for _ in range(trials):
        alphabet = "ab" if rng.random() < 0.5 else "abc"
        bigger = _random_multiset(rng, alphabet)
        if len(bigger) < 2:
            bigger.append(_random_word(rng, alphabet, rng.randint(1, 12)))
        removed = rng.choice(bigger)
        smaller = list(bigger)
        smaller.remove(removed)
        diff = rho(bigger, alphabet) - rho(smaller, alphabet)
        if bigger.count(removed) >= 2:
            if diff != 0:
                failures.append(f"{bigger!r} minus {removed!r}: diff {diff} != 0")
        elif not 0 <= diff <= 2 * len(removed):
            failures.append(f"{bigger!r} minus {removed!r}: diff {diff}")
    return _result("removal-bound", failures, f"{trials} multiset pairs")


def _check_dedup_invariance() -> CheckResult:
    rng = random.Random(7103)
    failures = []
    trials = 1000
    for _ in range(trials):
        alphabet = "ab" if rng.random() < 0.5 else "abc"
        multiset = _random_multiset(rng, alphabet)
        multiset.append(multiset[0])
        deduped = sorted(set(multiset))
        if rho(multiset, alphabet) != rho(deduped, alphabet):
            failures.append(f"{multiset!r}: {rho(multiset, alphabet)} != {rho(deduped, alphabet)}")
    return _result("dedup-invariance", failures, f"{trials} multisets with duplicates")


def _check_subset_monotonicity() -> CheckResult:
    rng = random.Random(7104)
    failures = []
    trials = 1000
    for _ in range(trials):
        alphabet = "ab" if rng.random() < 0.5 else "abc"
        bigger = sorted(set(_random_multiset(rng, alphabet)))
        smaller = [w for w in bigger if rng.random() < 0.6] or [rng.choice(bigger)]
        if rho(smaller, alphabet) > rho(bigger, alphabet):
            failures.append(f"{smaller!r} vs {bigger!r}")
    return _result("subset-monotonicity", failures, f"{trials} nested set pairs")


def _suite_bounds() -> list[CheckResult]:
    return [
        _check_block_bounds(),
        _check_uniform_multisets(),
        _check_equal_length_cap(),
        _check_removal_bound(),
        _check_dedup_invariance(),
        _check_subset_monotonicity(),
    ]


# ---------------------------------------------------------------- adversary


def _check_solver_vs_cycles() -> CheckResult:
    failures = []
    for n in range(1, 201):
        lengths = set(_cycle_lengths(n))
        for k in range(2, 9):
            systems = cycle_solutions(n, k)
            bound = (1 << k) - 1
            for s in systems:
                if not all(0 < a < bound and 0 < b < bound for a, b in zip(s.alpha, s.beta)):
                    failures.append(f"n={n} k={k}: coefficient outside (0, {bound})")
            feasible = any(s.feasible for s in systems)
            if feasible != (k in lengths):
                failures.append(f"n={n} k={k}: solver {feasible}, parts {k in lengths}")
    return _result("solver-vs-cycles", failures, "n <= 200, cycle lengths 2..8")


def _check_short_cycles() -> CheckResult:
    failures = []
    for n in range(1, 301):
        lengths = _cycle_lengths(n)
        if not fixed_point_free(n) or 1 in lengths:
            failures.append(f"n={n}: length-1 cycle")
        has_two = 2 in lengths
        if has_two != (n % 3 == 1):
            failures.append(f"n={n}: length-2 cycle {has_two}, residue {n % 3}")
    return _result("short-cycles", failures, "n <= 300: no 1-cycles; 2-cycles iff n = 1 mod 3")


def _check_modulus_guarantee() -> CheckResult:
    failures = []
    cases = 0
    for k in range(2, 6):
        modulus = 1
        for kp in range(2, k + 1):
            modulus *= (1 << kp) - 1
        for n in range(modulus, 10_001, modulus):
            cases += 1
            shortest = min(_cycle_lengths(n))
            if shortest <= k:
                failures.append(f"k={k} n={n}: min part length {shortest}")
    return _result("modulus-guarantee", failures, f"{cases} admissible n <= 10^4, k <= 5")


def _check_family_golden() -> CheckResult:
    failures = []
    fam = worst_family(2, 2)
    if (fam.n, fam.rho, fam.denominator) != (21, 41, 18):
        failures.append(f"(2, 2) gave n={fam.n} rho={fam.rho} denom={fam.denominator}")
    if fam.ratio_lower_bound < 2:
        failures.append(f"(2, 2) ratio {fam.ratio_lower_bound}")
    l = ebwt(list(fam.parts))
    if l != "ba" * 21 or runs(l) != 41:
        failures.append(f"(2, 2) transform check failed: {l[:20]!r}...")
    if min(len(p) for p in fam.parts) <= 2:
        failures.append("(2, 2) has a part of length <= 2")
    if worst_family(1, 1).n != 6:
        failures.append(f"(1, 1) gave n={worst_family(1, 1).n}")
    if worst_family(3, 1).n != 21:
        failures.append(f"(3, 1) gave n={worst_family(3, 1).n}")
    if Fraction(41, 18) != fam.ratio_lower_bound:
        failures.append(f"(2, 2) ratio {fam.ratio_lower_bound} != 41/18")
    return _result("family-golden", failures, "worst families (2,2), (1,1), (3,1)")


def _check_inversion_agreement() -> CheckResult:
    failures = []
    for n in range(1, 201):
        family = preimage_ba(n)
        if list(family.parts) != invert_ebwt("ba" * n):
            failures.append(f"n={n}: direct family differs from generic inversion")
            continue
        text = "".join(family.parts)
        if text.count("a") != n or text.count("b") != n:
            failures.append(f"n={n}: symbol counts off")
        if ebwt(list(family.parts)) != "ba" * n:
            failures.append(f"n={n}: transform mismatch")
    return _result("inversion-agreement", failures, "n <= 200: direct family = generic inversion")


def _suite_adversary() -> list[CheckResult]:
    return [
        _check_solver_vs_cycles(),
        _check_short_cycles(),
        _check_modulus_guarantee(),
        _check_family_golden(),
        _check_inversion_agreement(),
    ]


# -------------------------------------------------------------------- artin


def _check_scan_prefix() -> CheckResult:
    expected = [2, 4, 10, 12, 18, 28, 36, 52, 58]
    got = artin_scan(58)
    ok = got == expected
    return CheckResult(
        "scan-prefix",
        ok,
        f"scan(58) = {got}" if ok else f"scan(58) = {got}, expected {expected}",
    )


def _check_scan_consistency() -> CheckResult:
    failures = []
    scanned = set(artin_scan(200))
    for n in range(1, 201):
        if (n in scanned) != artin_candidate(n):
            failures.append(f"n={n}")
    return _result("scan-consistency", failures, "scan(200) matches the candidate test pointwise")


def _check_single_word_families() -> CheckResult:
    # The criterion characterizes single-word families by the length 2n of
    # the word, so the predicate applies to 2n, not n.
    failures = []
    for n in range(1, 61):
        single = preimage_ba(n).part_count == 1
        if single != artin_candidate(2 * n):
            failures.append(f"n={n}: single={single}, candidate(2n)={artin_candidate(2 * n)}")
    return _result(
        "single-word-families",
        failures,
        "n <= 60: |W(n)| = 1 iff the prime test passes for the word length 2n",
    )


def _suite_artin() -> list[CheckResult]:
    return [
        _check_scan_prefix(),
        _check_scan_consistency(),
        _check_single_word_families(),
    ]


# ---------------------------------------------------------------- circulant


def _check_circulant_identity() -> CheckResult:
    failures = []
    for k in range(2, 17):
        if not verify_circulant_inverse(k):
            failures.append(f"k={k}")
    return _result("inverse-identity", failures, "exact products for k = 2..16")


def _suite_circulant() -> list[CheckResult]:
    return [_check_circulant_identity()]


# ------------------------------------------------------------------- runner

_SUITES = {
    "roundtrip": _suite_roundtrip,
    "counting": _suite_counting,
    "bounds": _suite_bounds,
    "adversary": _suite_adversary,
    "artin": _suite_artin,
    "circulant": _suite_circulant,
}

SUITE_NAMES = tuple(_SUITES) + ("all",)


def run_suite(name: str) -> SuiteReport:
    """Run one named suite, or every suite in order for "all"."""
    if name == "all":
        checks: list[CheckResult] = []
        for suite_name, suite in _SUITES.items():
            checks.extend(
                CheckResult(f"{suite_name}:{c.name}", c.ok, c.detail) for c in suite()
            )
        return SuiteReport("all", tuple(checks))
    if name not in _SUITES:
        known = ", ".join(SUITE_NAMES)
        raise ValueError(f"unknown suite {name!r}; known suites: {known}")
    return SuiteReport(name, tuple(_SUITES[name]()))
