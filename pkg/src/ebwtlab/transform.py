"""Burrows-Wheeler transform of a word and of a multiset of words.

The multiset version sorts all rotations of all parts in omega-order and
reads the last symbol of each.  It is invertible up to rotation of the
parts: :func:`invert_ebwt` recovers the unique multiset of primitive
words (up to rotation, canonicalized to least rotations) whose transform
is the given string.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

from .words import (
    Alphabet,
    least_rotation,
    omega_extend,
    omega_sorted,
    resolve_alphabet,
    rotations,
    runs,
)

__all__ = [
    "bwt",
    "ebwt",
    "ebwt_matrix",
    "first_column",
    "invert_ebwt",
    "rho",
]


def _checked_parts(parts: Sequence[str]) -> list[str]:
    ps = list(parts)
    if not ps:
        raise ValueError("need at least one part")
    if any(not p for p in ps):
        raise ValueError("parts must be non-empty")
    return ps


def _sorted_rotations(parts: list[str], alphabet: Alphabet) -> list[str]:
    """All rotations of all parts, omega-sorted.

    Rotations of equal length compare lexicographically, and unequal
    lengths are resolved by extension plus the shorter-first tie-break,
    exactly as in :func:`ebwtlab.words.omega_sorted`.  A shared truncation
    length of twice the longest part is sufficient for every pair.
    """
    rots: list[str] = []
    for p in parts:
        rots.extend(rotations(p))
    limit = 2 * max(len(p) for p in parts)
    rots.sort(key=lambda r: (alphabet.sort_key(omega_extend(r, limit)), len(r)))
    return rots


def bwt(word: str, alphabet: Alphabet | str | None = None) -> str:
    """Burrows-Wheeler transform of a single word (no sentinel).

    Last column of the sorted rotation matrix.  Equal rotations of a
    periodic word are kept, so the output length equals the input length.
    """
    if not word:
        raise ValueError("need a non-empty word")
    ab = resolve_alphabet(alphabet, word)
    key = ab.sort_key
    return "".join(r[-1] for r in sorted(rotations(word), key=key))


def ebwt(parts: Sequence[str], alphabet: Alphabet | str | None = None) -> str:
    """Extended Burrows-Wheeler transform of a multiset of non-empty words."""
    ps = _checked_parts(parts)
    ab = resolve_alphabet(alphabet, *ps)
    return "".join(r[-1] for r in _sorted_rotations(ps, ab))


def ebwt_matrix(
    parts: Sequence[str], alphabet: Alphabet | str | None = None
) -> list[tuple[str, str]]:
    """The omega-sorted rotation rows behind :func:`ebwt`.

    Returns ``(rotation, last_symbol)`` pairs in transform order; useful
    for worked examples and debugging.
    """
    ps = _checked_parts(parts)
    ab = resolve_alphabet(alphabet, *ps)
    return [(r, r[-1]) for r in _sorted_rotations(ps, ab)]


def first_column(transform: str, alphabet: Alphabet | str | None = None) -> str:
    """First column of the conceptual sorted matrix: the transform, sorted."""
    if not transform:
        raise ValueError("need a non-empty transform")
    ab = resolve_alphabet(alphabet, transform)
    return "".join(sorted(transform, key=ab.sort_key))


def invert_ebwt(transform: str, alphabet: Alphabet | str | None = None) -> list[str]:
    """Multiset of primitive words whose transform is the given string.

    Every string is the transform of exactly one such multiset.  Standard
    last-to-first trick: position ``j`` of the first column maps to the
    position in the transform of the matching occurrence of the same
    symbol, and the permutation's cycles spell the parts.  Each recovered
    part is returned as its least rotation and the list is omega-sorted.
    """
    if not transform:
        raise ValueError("need a non-empty transform")
    ab = resolve_alphabet(alphabet, transform)
    n = len(transform)

    # lf[i] = row holding, in the first column, the same text occurrence
    # as row i's last symbol: occurrences of a symbol appear in the same
    # relative order in both columns.
    counts = Counter(transform)
    start: dict[str, int] = {}
    acc = 0
    for c in sorted(counts, key=ab.sort_key):
        start[c] = acc
        acc += counts[c]
    seen: Counter[str] = Counter()
    lf = [0] * n
    for i, c in enumerate(transform):
        lf[i] = start[c] + seen[c]
        seen[c] += 1

    parts = []
    visited = [False] * n
    for row in range(n):
        if visited[row]:
            continue
        chars = []
        i = row
        while not visited[i]:
            visited[i] = True
            chars.append(transform[i])
            i = lf[i]
        # Following lf spells each part right to left.
        parts.append(least_rotation("".join(reversed(chars)), ab))
    return omega_sorted(parts, ab)


def rho(parts: Sequence[str] | str, alphabet: Alphabet | str | None = None) -> int:
    """Run count of the transform of the given parts.

    A bare string is treated as the one-part multiset {word}.
    """
    if isinstance(parts, str):
        parts = [parts]
    return runs(ebwt(parts, alphabet))
