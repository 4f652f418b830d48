"""q-ary words and the per-word statistics used by the ball-size formulas.

All positions that leave this module are 1-based. Internally the symbols are
a plain tuple and loops run 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

from .errors import AlphabetError, DomainError, EmptyWordError


@dataclass(frozen=True, order=True)
class Word:
    """An immutable q-ary sequence.

    Ordering compares ``(q, symbols)``, so words of one length over one
    alphabet sort lexicographically.
    """

    q: int
    symbols: Tuple[int, ...]

    def __post_init__(self):
        if self.q < 2:
            raise DomainError(f"alphabet size must be >= 2, got {self.q}")
        syms = tuple(int(s) for s in self.symbols)
        if not syms:
            raise EmptyWordError("word must contain at least one symbol")
        for s in syms:
            if s < 0 or s >= self.q:
                raise AlphabetError(f"symbol {s} outside [0, {self.q - 1}]")
        object.__setattr__(self, "symbols", syms)

    @property
    def n(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, k):
        return self.symbols[k]

    def __str__(self) -> str:
        return format_word(self.symbols, self.q)

    @classmethod
    def _trusted(cls, q: int, symbols: Tuple[int, ...]) -> "Word":
        # Skips validation; only for symbols produced by this package.
        w = object.__new__(cls)
        object.__setattr__(w, "q", q)
        object.__setattr__(w, "symbols", symbols)
        return w

    def reversed(self) -> "Word":
        return Word(self.q, self.symbols[::-1])


def format_word(symbols: Sequence[int], q: int) -> str:
    """Render symbols in the text format: digits for q <= 10, else CSV."""
    if q <= 10:
        return "".join(str(s) for s in symbols)
    return ",".join(str(s) for s in symbols)


def parse_word(text: str, q: int) -> Word:
    text = text.strip()
    if not text:
        raise EmptyWordError("empty word text")
    if q <= 10:
        if not text.isdigit():
            raise AlphabetError(f"expected a digit string for q={q}: {text!r}")
        symbols = [int(c) for c in text]
    else:
        try:
            symbols = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise AlphabetError(f"malformed comma-separated word: {text!r}") from None
    return Word(q, tuple(symbols))


def _require_len(x: Word, b: int, minimum: int) -> None:
    if b < 1:
        raise DomainError(f"burst length must be >= 1, got {b}")
    if x.n < minimum:
        raise DomainError(f"word length {x.n} too short for b={b} (need >= {minimum})")


def mismatch_positions(x: Word, b: int) -> List[int]:
    """1-based positions i in [1, n-b] with x_i != x_{i+b}."""
    s = x.symbols
    return [i + 1 for i in range(x.n - b) if s[i] != s[i + b]]


def b_run_count(x: Word, b: int) -> int:
    _require_len(x, b, b + 1)
    s = x.symbols
    return 1 + sum(1 for i in range(x.n - b) if s[i] != s[i + b])


def f_stat(x: Word, b: int, j: int) -> int:
    """Number of i in [1, n-b-j] with x_i != x_{i+b} and x_{i+j} != x_{i+j+b}."""
    if not 1 <= j <= b - 1:
        raise DomainError(f"j={j} outside [1, {b - 1}]")
    s = x.symbols
    return sum(
        1
        for i in range(max(x.n - b - j, 0))
        if s[i] != s[i + b] and s[i + j] != s[i + j + b]
    )


def _g_vector(s: Sequence[int], b: int) -> List[int]:
    # Linear scan: reach[i] is the last k with x_k = x_{k+2b} holding on all
    # of [i, k]; qualifying j lie in [i+b, min(n-b, reach+b)].
    n = len(s)
    m = n - 2 * b
    if m <= 0:
        return []
    mism = [1 if s[k] != s[k + b] else 0 for k in range(n - b)]
    prefix = [0] * (n - b + 1)
    for k in range(n - b):
        prefix[k + 1] = prefix[k] + mism[k]
    reach = [0] * m
    nxt = m - 1
    for i in range(m - 1, -1, -1):
        if s[i] != s[i + 2 * b]:
            reach[i] = i - 1
            nxt = i - 1
        else:
            reach[i] = nxt
    out = [0] * m
    for i in range(m):
        if not mism[i]:
            continue
        lo = i + b
        hi = min(n - b - 1, reach[i] + b)
        if hi >= lo:
            out[i] = prefix[hi + 1] - prefix[lo]
    return out


def g_stat(x: Word, b: int, i: int) -> int:
    if not 1 <= i <= x.n - 2 * b:
        raise DomainError(f"i={i} outside [1, {x.n - 2 * b}]")
    return _g_vector(x.symbols, b)[i - 1]


def g_vector(x: Word, b: int) -> List[int]:
    """All g statistics for i = 1..n-2b in one linear pass."""
    if b < 1:
        raise DomainError(f"burst length must be >= 1, got {b}")
    return _g_vector(x.symbols, b)


def is_periodic(x: Word, lo: int, hi: int, p: int) -> bool:
    if not 1 <= lo <= hi <= x.n:
        raise DomainError(f"range [{lo}, {hi}] outside [1, {x.n}]")
    if p < 1:
        raise DomainError(f"period must be >= 1, got {p}")
    s = x.symbols
    return all(s[k - 1] == s[k - 1 + p] for k in range(lo, hi - p + 1))


def max_periodic_substring_length(x: Word, p: int) -> int:
    if p < 1:
        raise DomainError(f"period must be >= 1, got {p}")
    s = x.symbols
    n = x.n
    if n <= p:
        return n
    best = cur = 0
    for k in range(n - p):
        if s[k] == s[k + p]:
            cur += 1
            if cur > best:
                best = cur
        else:
            cur = 0
    return best + p


def periodic_intervals(x: Word, p: int) -> List[Tuple[int, int]]:
    """Maximal p-periodic intervals, 1-based and inclusive, left to right.

    Consecutive intervals overlap in exactly ``p - 1`` positions.
    """
    if p < 1:
        raise DomainError(f"period must be >= 1, got {p}")
    n = x.n
    if n <= p:
        return [(1, n)]
    out = []
    start = 1
    for k in mismatch_positions(x, p):
        out.append((start, k + p - 1))
        start = k + 1
    out.append((start, n))
    return out


def alternating_segments(x: Word) -> List[int]:
    """Lengths of maximal substrings that are 2-periodic but not constant."""
    if x.n < 2:
        return []
    s = x.symbols
    out = []
    for lo, hi in periodic_intervals(x, 2):
        if any(s[k] != s[lo - 1] for k in range(lo, hi)):
            out.append(hi - lo + 1)
    return out


@dataclass(frozen=True)
class SizeBreakdown:
    b: int
    run_count: int
    f: Tuple[int, ...] = field(default_factory=tuple)
    g: Tuple[int, ...] = field(default_factory=tuple)
    alt_lengths: Tuple[int, ...] = field(default_factory=tuple)

    @property
    def g_sum(self) -> int:
        return sum(self.g)

    def as_dict(self) -> dict:
        return {
            "b": self.b,
            "run_count": self.run_count,
            "f": list(self.f),
            "g": list(self.g),
            "alt_lengths": list(self.alt_lengths),
        }


def size_breakdown(x: Word, b: int) -> SizeBreakdown:
    _require_len(x, b, b + 1)
    return SizeBreakdown(
        b=b,
        run_count=b_run_count(x, b),
        f=tuple(f_stat(x, b, j) for j in range(1, b)),
        g=tuple(g_vector(x, b)),
        alt_lengths=tuple(alternating_segments(x)),
    )


def all_words(n: int, q: int) -> Iterable[Tuple[int, ...]]:
    """Symbol tuples of Sigma_q^n in lexicographic order."""
    from itertools import product

    return product(range(q), repeat=n)
