"""Restricted decompositions of a word: enumeration, counting, search.

A decomposition into parts all longer than k is described by the ordered
list of part lengths, a composition of n = |w| with every part >= k + 1.
Compositions are realized as plain tuples of ints.  Counting follows the
generalized Fibonacci recurrence; exhaustive extremal search walks the
composition space behind an explicit size guard.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .transform import rho
from .words import Alphabet, resolve_alphabet

__all__ = [
    "DEFAULT_SEARCH_LIMIT",
    "SearchLimitError",
    "SearchCancelled",
    "SearchResult",
    "BoundCheck",
    "enumerate_compositions",
    "count_decompositions",
    "generalized_fibonacci",
    "growth_rate",
    "apply_composition",
    "search_extremes",
    "block_decomposition",
    "verify_best_bound",
    "lyndon_factorization",
]

DEFAULT_SEARCH_LIMIT = 2_000_000


class SearchLimitError(ValueError):
    """Search space larger than the caller's guard; nothing was explored."""

    def __init__(self, count: int, limit: int) -> None:
        super().__init__(
            f"search space has {count} compositions, more than the limit of {limit}"
        )
        self.count = count
        self.limit = limit


class SearchCancelled(RuntimeError):
    """Raised when a should_stop callback asks the search to abort."""


def enumerate_compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All compositions of n into parts >= k + 1, in lexicographic order.

    Empty stream when n < k + 1.  Runs in O(1) amortized per composition:
    the lexicographic successor only ever touches the last two parts,
    replacing them with (last2 + 1, greedy tail) when that leaves room
    for a valid tail and merging them otherwise.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    m = k + 1
    if n < m:
        return

    def greedy_extend(parts: list[int], total: int) -> None:
        # Lexicographically least tail summing to total (total >= m).
        while total >= 2 * m:
            parts.append(m)
            total -= m
        parts.append(total)

    current: list[int] = []
    greedy_extend(current, n)
    while True:
        yield tuple(current)
        if len(current) == 1:
            return
        last = current.pop()
        total = current.pop() + last
        bumped = total - last + 1
        if total - bumped >= m:
            current.append(bumped)
            greedy_extend(current, total - bumped)
        else:
            current.append(total)


def generalized_fibonacci(c: int, n: int) -> int:
    """n-th term of the c-step sequence: c leading ones, then
    G(n) = G(n-1) + G(n-c).  Exact arbitrary-precision value."""
    if c < 1:
        raise ValueError(f"need c >= 1, got {c}")
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if n < c:
        return 1
    vals = [1] * c
    for m in range(c, n + 1):
        vals.append(vals[m - 1] + vals[m - c])
    return vals[n]


def count_decompositions(n: int, k: int) -> int:
    """Number of decompositions of a length-n word into parts of length
    > k; equals the (n - (k+1))-th generalized Fibonacci number of step
    k + 1.  Errors when no decomposition exists (n < k + 1)."""
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    if n < k + 1:
        raise ValueError(f"no decomposition of length {n} with parts longer than {k}")
    return generalized_fibonacci(k + 1, n - (k + 1))


def growth_rate(k: int) -> float:
    """The unique real root above 1 of X^(k+1) - X^k - 1.

    The counting sequence for parts > k grows geometrically at this rate.
    Bisection on [1, 2]: the polynomial is -1 at X=1 and 2^k - 1 at X=2,
    and has exactly one real root in between.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    lo, hi = 1.0, 2.0
    for _ in range(60):
        mid = (lo + hi) / 2
        if mid ** (k + 1) - mid**k - 1.0 < 0.0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def apply_composition(word: str, composition: Sequence[int]) -> list[str]:
    """Split ``word`` into the parts whose lengths ``composition`` lists."""
    if any(p < 1 for p in composition):
        raise ValueError(f"part lengths must be positive, got {list(composition)}")
    if sum(composition) != len(word):
        raise ValueError(
            f"composition sums to {sum(composition)}, word has length {len(word)}"
        )
    parts = []
    pos = 0
    for size in composition:
        parts.append(word[pos : pos + size])
        pos += size
    return parts


@dataclass(frozen=True)
class SearchResult:
    """Exact extremes of the transform run count over all decompositions
    of ``word`` with parts longer than ``k``."""

    word: str
    k: int
    count_explored: int
    baseline_rho: int
    min_rho: int
    min_witness: tuple[int, ...]
    max_rho: int
    max_witness: tuple[int, ...]


def search_extremes(
    word: str,
    k: int,
    limit: int = DEFAULT_SEARCH_LIMIT,
    alphabet: Alphabet | str | None = None,
    should_stop: Callable[[], bool] | None = None,
) -> SearchResult:
    """Exhaustive min/max of the run count over the composition space.

    Refuses to start when the space exceeds ``limit`` (SearchLimitError
    naming the exact count).  Ties go to the lexicographically least
    composition, which the enumeration order makes the first one seen.
    ``should_stop`` is polled once per composition so a caller can abort
    a long search (SearchCancelled).
    """
    n = len(word)
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    if n < k + 1:
        raise ValueError(f"word of length {n} has no decomposition with parts longer than {k}")
    ab = resolve_alphabet(alphabet, word)
    total = count_decompositions(n, k)
    if total > limit:
        raise SearchLimitError(total, limit)

    explored = 0
    min_rho = max_rho = -1
    min_witness = max_witness = (n,)
    for comp in enumerate_compositions(n, k):
        if should_stop is not None and should_stop():
            raise SearchCancelled(f"search over {word!r} stopped after {explored} compositions")
        r = rho(apply_composition(word, comp), ab)
        explored += 1
        if min_rho < 0 or r < min_rho:
            min_rho, min_witness = r, comp
        if max_rho < 0 or r > max_rho:
            max_rho, max_witness = r, comp
    return SearchResult(
        word=word,
        k=k,
        count_explored=explored,
        baseline_rho=rho([word], ab),
        min_rho=min_rho,
        min_witness=min_witness,
        max_rho=max_rho,
        max_witness=max_witness,
    )


def block_decomposition(word: str, p: int) -> list[str]:
    """Cut ``word`` into blocks of length p, folding the remainder into
    the final block: with n = p*q + r (0 <= r < p), the parts are q - 1
    blocks of length p and one final block of length p + r.  Every part
    is longer than p - 1."""
    n = len(word)
    if p < 1:
        raise ValueError(f"need p >= 1, got {p}")
    if n < p:
        raise ValueError(f"word of length {n} is shorter than the block length {p}")
    q = n // p
    parts = [word[i * p : (i + 1) * p] for i in range(q - 1)]
    parts.append(word[(q - 1) * p :])
    return parts


@dataclass(frozen=True)
class BoundCheck:
    """Run count of the block decomposition against the two guarantees
    sigma^(k+1) + 4k + 2 and the finer sigma^(k+1) + 2(k + 1 + r)."""

    sigma: int
    k: int
    remainder: int
    bound: int
    fine_bound: int
    achieved: int
    ok: bool
    ok_fine: bool


def verify_best_bound(
    word: str, k: int, alphabet: Alphabet | str | None = None
) -> BoundCheck:
    """Check the block decomposition with p = k + 1 against its bounds."""
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    p = k + 1
    ab = resolve_alphabet(alphabet, word)
    sigma = ab.size
    r = len(word) % p
    bound = sigma**p + 4 * k + 2
    fine_bound = sigma**p + 2 * (p + r)
    achieved = rho(block_decomposition(word, p), ab)
    return BoundCheck(
        sigma=sigma,
        k=k,
        remainder=r,
        bound=bound,
        fine_bound=fine_bound,
        achieved=achieved,
        ok=achieved <= bound,
        ok_fine=achieved <= fine_bound,
    )


def lyndon_factorization(word: str, alphabet: Alphabet | str | None = None) -> list[str]:
    """Unique factorization into non-increasing Lyndon words (Duval).

    Feeding the parts to the multiset transform gives the bijective
    variant of the single-word transform.
    """
    if not word:
        raise ValueError("the empty word has no factorization")
    ab = resolve_alphabet(alphabet, word)
    s = ab.sort_key(word)
    n = len(s)
    parts = []
    i = 0
    while i < n:
        j, t = i + 1, i
        while j < n and s[t] <= s[j]:
            t = i if s[t] < s[j] else t + 1
            j += 1
        size = j - t
        while i <= t:
            parts.append(word[i : i + size])
            i += size
    return parts
