"""Preimages of (ba)^n and the worst-case run-count families they give.

The transform of the multiset W(n) is (ba)^n, so its run count is the
maximal 2n - 1.  The mapping between the last and first columns is fully
explicit here (F = a^n b^n, L = (ba)^n), which makes W(n) computable in
linear time and the lengths of its parts analyzable: a part of length k
exists exactly when a certain linear system over the integers has a
solution, and choosing n in the right residue class rules every short
cycle out.  That yields words whose best k-restricted decomposition is
off from the constructive guarantee by an arbitrarily large factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .words import least_rotation, omega_sorted

__all__ = [
    "PreimageFamily",
    "CycleSystem",
    "WorstFamily",
    "preimage_ba",
    "cycle_solutions",
    "fixed_point_free",
    "worst_family",
    "verify_circulant_inverse",
    "artin_candidate",
    "artin_scan",
]


@dataclass(frozen=True)
class PreimageFamily:
    """W(n): the multiset whose transform is (ba)^n, in canonical form."""

    n: int
    parts: tuple[str, ...]
    min_part_length: int
    part_count: int


@dataclass(frozen=True)
class CycleSystem:
    """One candidate length-k cycle of the W(n) column mapping.

    t marks which steps sit in the b half (t[0] = 0, t[-1] = 1 by the
    canonical rotation of the cycle); the solved positions i are exact
    rationals, and the system is feasible exactly when all of them are
    integers in [1, n] and positions within each letter group are
    pairwise distinct.
    """

    k: int
    t: tuple[int, ...]
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    i: tuple[Fraction, ...]
    feasible: bool


@dataclass(frozen=True)
class WorstFamily:
    """A word whose maximal-runs decomposition beats the constructive
    bound by at least the requested factor."""

    n: int
    word: str
    parts: tuple[str, ...]
    rho: int
    denominator: int
    ratio_lower_bound: Fraction


def _lf(n: int, i: int) -> int:
    # Column mapping for L = (ba)^n, F = a^n b^n, rows numbered from 0:
    # the a at L row 2j+1 is the j-th a, sitting at F row j; the b at
    # L row 2j is the j-th b, sitting at F row n + j.
    return (i - 1) // 2 if i & 1 else n + i // 2


def _cycle_lengths(n: int) -> list[int]:
    """Lengths of the column-mapping cycles of W(n), i.e. part lengths."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    visited = bytearray(2 * n)
    lengths = []
    for row in range(2 * n):
        if visited[row]:
            continue
        size = 0
        i = row
        while not visited[i]:
            visited[i] = 1
            size += 1
            i = _lf(n, i)
        lengths.append(size)
    return lengths


def preimage_ba(n: int) -> PreimageFamily:
    """W(n), computed in O(n) from the explicit column mapping.

    Agrees with inverting the transform string (ba)^n generically, but
    needs no sorting: cycles are walked directly and spell the parts
    right to left.  Parts come out as least rotations in ascending order.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    visited = bytearray(2 * n)
    raw = []
    for row in range(2 * n):
        if visited[row]:
            continue
        chars = []
        i = row
        while not visited[i]:
            visited[i] = 1
            chars.append("a" if i & 1 else "b")
            i = _lf(n, i)
        raw.append(least_rotation("".join(reversed(chars)), "ab"))
    parts = tuple(omega_sorted(raw, "ab"))
    return PreimageFamily(
        n=n,
        parts=parts,
        min_part_length=min(len(p) for p in parts),
        part_count=len(parts),
    )


def fixed_point_free(n: int) -> bool:
    """True when no row of the W(n) column mapping maps to itself.

    A fixed point would be a part of length 1; the positions make this
    impossible for every n, but the permutation is scanned for real.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return all(_lf(n, i) != i for i in range(2 * n))


def cycle_solutions(n: int, k: int) -> list[CycleSystem]:
    """Solve for all candidate cycles of length exactly k in W(n).

    A length-k cycle can be rotated to start at an a-step and end at a
    b-step, so t ranges over the 2^(k-2) vectors with t[0] = 0 and
    t[-1] = 1.  Each step imposes n*t_j + i_j = 2*i_{j+1} - t_{j+1}
    cyclically; inverting the circulant system in closed form gives

        i_j = (alpha_j * n + beta_j) / (2^k - 1),
        alpha_j = sum_l 2^((l-j) mod k) * t_l,
        beta_j  = sum_l 2^((l-j-1) mod k) * t_l,

    evaluated here in exact rationals.  Length 1 is handled separately
    by fixed_point_free.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    denom = (1 << k) - 1
    systems = []
    for middle in product((0, 1), repeat=k - 2):
        t = (0, *middle, 1)
        alpha = tuple(
            sum((1 << ((l - j) % k)) * t[l] for l in range(k)) for j in range(k)
        )
        beta = tuple(
            sum((1 << ((l - j - 1) % k)) * t[l] for l in range(k)) for j in range(k)
        )
        i = tuple(Fraction(a * n + b, denom) for a, b in zip(alpha, beta))
        feasible = all(x.denominator == 1 and 1 <= x <= n for x in i)
        if feasible:
            # Within each letter group the positions must be distinct,
            # or the walk closes into a shorter cycle.
            a_group = [x for x, bit in zip(i, t) if bit == 0]
            b_group = [x for x, bit in zip(i, t) if bit == 1]
            feasible = len(set(a_group)) == len(a_group) and len(set(b_group)) == len(
                b_group
            )
        systems.append(
            CycleSystem(k=k, t=t, alpha=alpha, beta=beta, i=i, feasible=feasible)
        )
    return systems


def worst_family(k: int, ratio: int) -> WorstFamily:
    """Smallest admissible W(n) whose runs beat the constructive bound
    by at least ``ratio``.

    Taking n divisible by prod_{k'=2..k} (2^k' - 1) kills every cycle of
    length 2..k, so all parts of W(n) are longer than k; the transform
    has 2n - 1 runs, and making 2n - 1 >= ratio * (2^(k+1) + 4k + 2)
    gives the claimed gap against the binary-alphabet guarantee.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if ratio < 0:
        raise ValueError(f"need ratio >= 0, got {ratio}")
    modulus = 1
    for kp in range(2, k + 1):
        modulus *= (1 << kp) - 1
    denominator = (1 << (k + 1)) + 4 * k + 2
    lowest = max(1, (ratio * denominator + 2) // 2)
    n = -(-lowest // modulus) * modulus
    family = preimage_ba(n)
    if family.min_part_length <= k:
        raise AssertionError(f"W({n}) has a part of length <= {k}; the residue argument failed")
    return WorstFamily(
        n=n,
        word="".join(family.parts),
        parts=family.parts,
        rho=2 * n - 1,
        denominator=denominator,
        ratio_lower_bound=Fraction(2 * n - 1, denominator),
    )


def verify_circulant_inverse(k: int) -> bool:
    """Multiply (2S - I) by the circulant with first row 1, 2, ..., 2^(k-1)
    and check the product is (2^k - 1) * I, in exact integer arithmetic.

    This is the identity behind the closed-form cycle solution.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    shift = [[1 if j == (i + 1) % k else 0 for j in range(k)] for i in range(k)]
    lhs = [[2 * shift[i][j] - (1 if i == j else 0) for j in range(k)] for i in range(k)]
    circ = [[1 << ((j - i) % k) for j in range(k)] for i in range(k)]
    scale = (1 << k) - 1
    for i in range(k):
        for j in range(k):
            entry = sum(lhs[i][l] * circ[l][j] for l in range(k))
            if entry != (scale if i == j else 0):
                return False
    return True


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append(n)
    return factors


def artin_candidate(n: int) -> bool:
    """True when n + 1 is an odd prime with 2 generating its
    multiplicative group.

    The order of 2 modulo n + 1 always divides n, and it equals n when
    2^(n/q) is not 1 for any prime q dividing n.  The preimage of
    (ba)^m is a single word exactly when its length 2m passes this test
    (the verify suites check that equivalence).
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    p = n + 1
    if p == 2 or not _is_prime(p):
        return False
    return all(pow(2, n // q, p) != 1 for q in _prime_factors(n))


def artin_scan(limit: int) -> list[int]:
    """All n up to ``limit`` passing :func:`artin_candidate`.

    Whether this list is infinite is a long-open conjecture; nothing
    here assumes an answer.
    """
    if limit < 1:
        raise ValueError(f"need limit >= 1, got {limit}")
    return [n for n in range(1, limit + 1) if artin_candidate(n)]
