"""Brute-force enumeration of burst deletion, insertion and Levenshtein balls.

Nothing here uses a closed form; these sets are the ground truth every
formula is checked against. Working sets are Python sets of symbol tuples,
converted to :class:`WordSet` only at the public boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import FrozenSet, Iterable, Iterator, Set, Tuple

from .errors import DomainError
from .word import Word, format_word

Raw = Tuple[int, ...]


@dataclass(frozen=True)
class WordSet:
    """Duplicate-free, lexicographically ordered set of equal-length words."""

    q: int
    n: int
    members: Tuple[Word, ...]

    @classmethod
    def from_raw(cls, q: int, n: int, raw: Iterable[Raw]) -> "WordSet":
        return cls(q, n, tuple(Word._trusted(q, w) for w in sorted(set(raw))))

    @cached_property
    def raw(self) -> FrozenSet[Raw]:
        return frozenset(w.symbols for w in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.members)

    def __contains__(self, item) -> bool:
        if isinstance(item, Word):
            item = item.symbols
        return tuple(item) in self.raw

    def __and__(self, other: "WordSet") -> "WordSet":
        return WordSet.from_raw(self.q, self.n, self.raw & other.raw)

    def __or__(self, other: "WordSet") -> "WordSet":
        return WordSet.from_raw(self.q, self.n, self.raw | other.raw)

    def __sub__(self, other: "WordSet") -> "WordSet":
        return WordSet.from_raw(self.q, self.n, self.raw - other.raw)

    def texts(self) -> list:
        return [str(w) for w in self.members]

    def to_json(self) -> dict:
        return {"q": self.q, "n": self.n, "members": self.texts()}

    @classmethod
    def from_json(cls, data: dict) -> "WordSet":
        from .word import parse_word

        q, n = int(data["q"]), int(data["n"])
        words = [parse_word(t, q) for t in data["members"]]
        if any(w.n != n for w in words):
            raise DomainError("member length differs from declared n")
        return cls.from_raw(q, n, (w.symbols for w in words))


def burst_delete(x: Word, b: int, pos: int) -> Word:
    if b < 1 or x.n < b + 1:
        raise DomainError(f"need n >= b+1 (n={x.n}, b={b})")
    if not 1 <= pos <= x.n - b + 1:
        raise DomainError(f"deletion position {pos} outside [1, {x.n - b + 1}]")
    s = x.symbols
    return Word._trusted(x.q, s[: pos - 1] + s[pos - 1 + b :])


def burst_insert(x: Word, b: int, pos: int, patch: Word) -> Word:
    if len(patch) != b:
        raise DomainError(f"patch length {len(patch)} != b={b}")
    if patch.q != x.q:
        raise DomainError("patch alphabet differs from word alphabet")
    if not 1 <= pos <= x.n + 1:
        raise DomainError(f"insertion position {pos} outside [1, {x.n + 1}]")
    s = x.symbols
    return Word._trusted(x.q, s[: pos - 1] + patch.symbols + s[pos - 1 :])


def delete_once(words: Iterable[Raw], b: int) -> Set[Raw]:
    out = set()
    for s in words:
        for k in range(len(s) - b + 1):
            out.add(s[:k] + s[k + b :])
    return out


def insert_once(words: Iterable[Raw], b: int, q: int) -> Set[Raw]:
    patches = list(product(range(q), repeat=b))
    out = set()
    for s in words:
        for k in range(len(s) + 1):
            head, tail = s[:k], s[k:]
            for p in patches:
                out.add(head + p + tail)
    return out


def deletion_set(s: Raw, b: int, t: int) -> Set[Raw]:
    cur = {s}
    for _ in range(t):
        cur = delete_once(cur, b)
    return cur


def insertion_set(s: Raw, b: int, t: int, q: int) -> Set[Raw]:
    cur = {s}
    for _ in range(t):
        cur = insert_once(cur, b, q)
    return cur


def levenshtein_set(s: Raw, b: int, t: int, q: int) -> Set[Raw]:
    cur = deletion_set(s, b, t)
    for _ in range(t):
        cur = insert_once(cur, b, q)
    return cur


def _check_radius(x: Word, b: int, t: int) -> None:
    if b < 1 or t < 1:
        raise DomainError(f"b and t must be >= 1 (b={b}, t={t})")
    if x.n < b * t + 1:
        raise DomainError(f"need n >= bt+1 (n={x.n}, b={b}, t={t})")


def deletion_ball(x: Word, b: int, t: int = 1) -> WordSet:
    _check_radius(x, b, t)
    return WordSet.from_raw(x.q, x.n - b * t, deletion_set(x.symbols, b, t))


def insertion_ball(x: Word, b: int, t: int = 1) -> WordSet:
    if b < 1 or t < 1:
        raise DomainError(f"b and t must be >= 1 (b={b}, t={t})")
    return WordSet.from_raw(x.q, x.n + b * t, insertion_set(x.symbols, b, t, x.q))


def levenshtein_ball(x: Word, b: int, t: int = 1) -> WordSet:
    _check_radius(x, b, t)
    return WordSet.from_raw(x.q, x.n, levenshtein_set(x.symbols, b, t, x.q))


def insertion_intersection_oracle(x: Word, y: Word, b: int) -> WordSet:
    if x.n != y.n:
        raise DomainError(f"length mismatch: {x.n} vs {y.n}")
    if x.q != y.q:
        raise DomainError("alphabet mismatch")
    common = insertion_set(x.symbols, b, 1, x.q) & insertion_set(y.symbols, b, 1, x.q)
    return WordSet.from_raw(x.q, x.n + b, common)


def commutativity_check(x: Word, b: int, t: int = 1) -> bool:
    """Insert-then-delete reaches exactly the delete-then-insert ball."""
    _check_radius(x, b, t)
    swapped = insertion_set(x.symbols, b, t, x.q)
    for _ in range(t):
        swapped = delete_once(swapped, b)
    return swapped == levenshtein_set(x.symbols, b, t, x.q)


def word_text(s: Raw, q: int) -> str:
    return format_word(s, q)
