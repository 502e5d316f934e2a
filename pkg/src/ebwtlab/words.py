"""Alphabets, words, and order primitives.

Words are plain Python strings over an ordered alphabet of single-byte
symbols.  Operations that depend on the symbol order take an optional
``alphabet`` argument; when omitted, the sorted distinct symbols of the
inputs are used.  Everything here is a pure function over immutable
values and safe to call from concurrent contexts.
"""

from __future__ import annotations

from typing import Callable, Iterable, NamedTuple

__all__ = [
    "Alphabet",
    "RootExp",
    "resolve_alphabet",
    "runs",
    "rotations",
    "root_exp",
    "omega_extend",
    "omega_compare",
    "omega_sorted",
    "least_rotation",
]


class Alphabet:
    """An ordered alphabet of distinct single-byte symbols.

    The order in which ``symbols`` are given is the order used by every
    comparison in this package.  Inferred alphabets are always built in
    sorted symbol order, but a declared alphabet may order its symbols
    arbitrarily (e.g. ``Alphabet("ba")`` makes ``b`` the smallest symbol).
    """

    __slots__ = ("symbols", "_table", "_natural")

    def __init__(self, symbols: str) -> None:
        if not symbols:
            raise ValueError("an alphabet needs at least one symbol")
        if len(set(symbols)) != len(symbols):
            raise ValueError(f"alphabet symbols must be distinct, got {symbols!r}")
        if any(ord(c) > 0xFF for c in symbols):
            raise ValueError("alphabet symbols must be single 8-bit code units")
        self.symbols = symbols
        # str.translate table mapping each symbol to the code point of its
        # rank, so natural comparison of translated strings follows the
        # declared order.
        self._table = {ord(c): i for i, c in enumerate(symbols)}
        self._natural = list(symbols) == sorted(symbols)

    @classmethod
    def from_words(cls, *words: str) -> "Alphabet":
        """Default alphabet: the sorted distinct symbols of the given words."""
        seen: set[str] = set()
        for w in words:
            seen.update(w)
        if not seen:
            raise ValueError("cannot infer an alphabet from empty input")
        return cls("".join(sorted(seen)))

    @property
    def size(self) -> int:
        return len(self.symbols)

    def rank(self, symbol: str) -> int:
        try:
            return self._table[ord(symbol)]
        except (KeyError, TypeError):
            raise ValueError(f"symbol {symbol!r} not in alphabet {self.symbols!r}") from None

    def check(self, word: str) -> None:
        """Raise ValueError if ``word`` uses a symbol outside this alphabet."""
        for ch in word:
            if ord(ch) not in self._table:
                raise ValueError(f"symbol {ch!r} not in alphabet {self.symbols!r}")

    def sort_key(self, text: str) -> str:
        """A string whose natural order matches the declared symbol order."""
        if self._natural:
            return text
        return text.translate(self._table)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, symbol: str) -> bool:
        return len(symbol) == 1 and ord(symbol) in self._table

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return f"Alphabet({self.symbols!r})"


def resolve_alphabet(alphabet: Alphabet | str | None, *texts: str) -> Alphabet:
    """Coerce ``alphabet``, inferring it from ``texts`` when not declared.

    A declared alphabet is validated against every given text; an inferred
    one cannot mismatch by construction.
    """
    if alphabet is None:
        return Alphabet.from_words(*texts)
    if isinstance(alphabet, str):
        alphabet = Alphabet(alphabet)
    for t in texts:
        alphabet.check(t)
    return alphabet


def runs(word: str) -> int:
    """Count adjacent unequal symbol pairs.

    This is one less than the number of maximal equal-symbol blocks; empty
    and single-symbol words have zero runs under this convention.
    """
    return sum(1 for a, b in zip(word, word[1:]) if a != b)


def rotations(word: str) -> list[str]:
    """All ``len(word)`` circular rotations in shift order.

    Duplicates are retained for periodic words.
    """
    if not word:
        raise ValueError("the empty word has no rotations")
    doubled = word + word
    n = len(word)
    return [doubled[i : i + n] for i in range(n)]


class RootExp(NamedTuple):
    """Primitive root and exponent: ``root * exponent`` rebuilds the word."""

    root: str
    exponent: int


def root_exp(word: str) -> RootExp:
    """Unique primitive root and exponent of a non-empty word.

    The shortest period is ``n - border(n)`` (border = longest proper
    prefix that is also a suffix); it yields the root exactly when it
    divides the length, otherwise the word is primitive.
    """
    n = len(word)
    if n == 0:
        raise ValueError("the empty word has no primitive root")
    border = [0] * n
    k = 0
    for i in range(1, n):
        while k and word[i] != word[k]:
            k = border[k - 1]
        if word[i] == word[k]:
            k += 1
        border[i] = k
    period = n - border[-1]
    if n % period == 0:
        return RootExp(word[:period], n // period)
    return RootExp(word, 1)


def omega_extend(word: str, length: int) -> str:
    """First ``length`` symbols of ``word`` repeated forever."""
    if not word:
        raise ValueError("cannot repeat the empty word")
    reps = -(-length // len(word))
    return (word * reps)[:length]


def omega_compare(u: str, v: str, alphabet: Alphabet | str | None = None) -> int:
    """Compare two non-empty words in omega-order; returns -1, 0 or +1.

    The infinite repetitions are compared lexicographically over their
    first ``len(u) + len(v)`` symbols, which is enough to expose any
    difference (Fine and Wilf).  Full agreement means the words share a
    primitive root, and the shorter word (smaller exponent) sorts first;
    only identical words compare equal.  For equal lengths this coincides
    with plain lexicographic comparison.
    """
    if not u or not v:
        raise ValueError("omega-order is defined on non-empty words only")
    ab = resolve_alphabet(alphabet, u, v)
    limit = len(u) + len(v)
    ku = ab.sort_key(omega_extend(u, limit))
    kv = ab.sort_key(omega_extend(v, limit))
    if ku != kv:
        return -1 if ku < kv else 1
    if len(u) != len(v):
        return -1 if len(u) < len(v) else 1
    return 0


def omega_sort_key(alphabet: Alphabet, limit: int) -> Callable[[str], tuple[str, int]]:
    """Sort key equivalent to omega-order for words of length <= limit/2."""

    def key(word: str) -> tuple[str, int]:
        return alphabet.sort_key(omega_extend(word, limit)), len(word)

    return key


def omega_sorted(words: Iterable[str], alphabet: Alphabet | str | None = None) -> list[str]:
    """Sort words ascending by omega-order (stable)."""
    ws = list(words)
    if not ws:
        return ws
    if any(not w for w in ws):
        raise ValueError("omega-order is defined on non-empty words only")
    ab = resolve_alphabet(alphabet, *ws)
    limit = 2 * max(len(w) for w in ws)
    ws.sort(key=omega_sort_key(ab, limit))
    return ws


def least_rotation(word: str, alphabet: Alphabet | str | None = None) -> str:
    """Lexicographically least circular rotation, found in O(n) (Booth)."""
    if not word:
        raise ValueError("the empty word has no rotations")
    ab = resolve_alphabet(alphabet, word)
    start = _least_rotation_start(ab.sort_key(word))
    return word[start:] + word[:start]


def _least_rotation_start(s: str) -> int:
    # Booth's algorithm on the doubled string.
    doubled = s + s
    fail = [-1] * len(doubled)
    start = 0
    for j in range(1, len(doubled)):
        c = doubled[j]
        i = fail[j - start - 1]
        while i != -1 and c != doubled[start + i + 1]:
            if c < doubled[start + i + 1]:
                start = j - i - 1
            i = fail[i]
        if c != doubled[start + i + 1]:
            if c < doubled[start]:
                start = j
            fail[j - start] = -1
        else:
            fail[j - start] = i + 1
    return start
