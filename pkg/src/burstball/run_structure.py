"""b-run decomposition and the A/B sets describing pairwise insertion-ball
intersections of the deletion representatives.

The sets here are built from the run boundaries directly, never from
enumeration; the ``*_check`` functions compare them with :mod:`oracle`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, List, Optional, Set, Tuple

from .errors import DomainError
from .oracle import WordSet, insertion_set, Raw
from .word import Word, b_run_count, is_periodic, mismatch_positions


@dataclass(frozen=True)
class RunDecomposition:
    b: int
    runs: Tuple[Tuple[int, int], ...]

    @property
    def starts(self) -> List[int]:
        return [s for s, _ in self.runs]

    @property
    def ends(self) -> List[int]:
        return [e for _, e in self.runs]

    def __len__(self) -> int:
        return len(self.runs)


def run_decomposition(x: Word, b: int) -> RunDecomposition:
    """Maximal b-periodic intervals of x, 1-based, left to right.

    Run i ends at k_i + b - 1 where k_i is the i-th mismatch position
    (x_k != x_{k+b}); the next run starts at k_i + 1.
    """
    if b < 1 or x.n < b + 1:
        raise DomainError(f"need n >= b+1 (n={x.n}, b={b})")
    runs = []
    start = 1
    for k in mismatch_positions(x, b):
        runs.append((start, k + b - 1))
        start = k + 1
    runs.append((start, x.n))
    return RunDecomposition(b, tuple(runs))


def boundary_violations(x: Word, rd: RunDecomposition) -> List[str]:
    """Return every boundary equation that fails for ``rd`` (empty when valid)."""
    s = x.symbols
    b = rd.b
    r = len(rd.runs)
    bad = []
    for i, (ps, pe) in enumerate(rd.runs, start=1):
        if pe - ps < b - 1:
            bad.append(f"run {i} shorter than b")
        if i < r and rd.runs[i][0] != pe - b + 2:
            bad.append(f"run {i + 1} does not start at p_{i}^e - b + 2")
        if i >= 2 and s[ps - 2] == s[ps - 2 + b]:
            bad.append(f"no mismatch before run {i}")
        if i < r and s[pe] == s[pe - b]:
            bad.append(f"no mismatch after run {i}")
    breaks = {pe + 1 - b for _, pe in rd.runs[:-1]}
    for t in range(1, x.n - b + 1):
        if t not in breaks and s[t - 1] != s[t - 1 + b]:
            bad.append(f"unexpected mismatch at {t}")
    if r != b_run_count(x, b):
        bad.append("run count disagrees with mismatch count")
    return bad


def deletion_representatives(x: Word, b: int) -> List[Word]:
    rd = run_decomposition(x, b)
    s = x.symbols
    return [Word._trusted(x.q, s[: ps - 1] + s[ps - 1 + b :]) for ps, _ in rd.runs]


def window_deletions(x: Word, b: int, run: int) -> List[Word]:
    """Deletion result for every b-window inside the given run (1-based)."""
    rd = run_decomposition(x, b)
    ps, pe = rd.runs[run - 1]
    s = x.symbols
    return [Word._trusted(x.q, s[: k - 1] + s[k - 1 + b :]) for k in range(ps, pe - b + 2)]


@dataclass(frozen=True)
class IntersectionWitness:
    i: int
    j: int
    d: int
    a_set: WordSet
    b_set: WordSet

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "d": self.d,
            "A": self.a_set.texts(),
            "B": self.b_set.texts(),
        }


def _seg(s: Raw, lo: int, hi: int) -> Raw:
    # x_[lo, hi], 1-based inclusive; empty when hi < lo.
    return s[lo - 1 : hi] if hi >= lo else ()


def _ab_raw(s: Raw, q: int, b: int, pe_i: int, pe_j1: int) -> Tuple[int, Set[Raw], Set[Raw]]:
    n = len(s)
    d = pe_j1 - pe_i + 1
    head = _seg(s, 1, pe_i - b)
    tail = _seg(s, pe_j1 + 2, n)
    if d <= b:
        left = _seg(s, pe_i - b + 1, pe_j1 - b + 1)
        right = _seg(s, pe_i + 1, pe_j1 + 1)
        free = list(product(range(q), repeat=b - d))
        a = {head + left + v + right + tail for v in free}
        bb = {head + right + v + left + tail for v in free}
        return d, a, bb
    a = {s}
    bb: Set[Raw] = set()
    x = Word._trusted(q, s)
    if is_periodic(x, pe_i - b + 1, pe_j1 + 1, 2 * b):
        bb.add(head + _seg(s, pe_i + 1, pe_i + b) + _seg(s, pe_i - b + 1, pe_j1 - b + 1) + tail)
    return d, a, bb


def ab_witness(x: Word, b: int, i: int, j: int, rd: Optional[RunDecomposition] = None) -> IntersectionWitness:
    rd = rd or run_decomposition(x, b)
    r = len(rd)
    if not 1 <= i < j <= r:
        raise DomainError(f"need 1 <= i < j <= {r}, got i={i}, j={j}")
    ends = rd.ends
    d, a, bb = _ab_raw(x.symbols, x.q, b, ends[i - 1], ends[j - 2])
    return IntersectionWitness(
        i, j, d, WordSet.from_raw(x.q, x.n, a), WordSet.from_raw(x.q, x.n, bb)
    )


class _Balls:
    """Caches the insertion balls X_i of the deletion representatives."""

    def __init__(self, x: Word, b: int):
        self.x = x
        self.b = b
        self.rd = run_decomposition(x, b)
        self.reps = [w.symbols for w in deletion_representatives(x, b)]
        self._balls: Dict[int, Set[Raw]] = {}
        self._ab: Dict[Tuple[int, int], Tuple[int, Set[Raw], Set[Raw]]] = {}

    def X(self, i: int) -> Set[Raw]:
        if i not in self._balls:
            self._balls[i] = insertion_set(self.reps[i - 1], self.b, 1, self.x.q)
        return self._balls[i]

    def AB(self, i: int, j: int):
        if (i, j) not in self._ab:
            ends = self.rd.ends
            self._ab[(i, j)] = _ab_raw(self.x.symbols, self.x.q, self.b, ends[i - 1], ends[j - 2])
        return self._ab[(i, j)]


def _claim1(balls: _Balls, i: int, j: int) -> Optional[str]:
    q, b = balls.x.q, balls.b
    _, a, bb = balls.AB(i, j)
    if a & bb:
        return f"A and B overlap for (i={i}, j={j})"
    actual = balls.X(i) & balls.X(j)
    if actual != a | bb:
        return f"X_{i} & X_{j} has {len(actual)} words, A|B has {len(a | bb)}"
    if j == i + 1 and len(actual) != 2 * q ** (b - 1):
        return f"adjacent intersection size {len(actual)} != {2 * q ** (b - 1)}"
    return None


def claim1_check(x: Word, b: int, i: int, j: int) -> bool:
    balls = _Balls(x, b)
    if not 1 <= i < j <= len(balls.rd):
        raise DomainError(f"need 1 <= i < j <= {len(balls.rd)}")
    return _claim1(balls, i, j) is None


def claim1_all(x: Word, b: int) -> Optional[str]:
    """First intersection-identity failure over all run pairs of x, or None."""
    balls = _Balls(x, b)
    for i, j in combinations(range(1, len(balls.rd) + 1), 2):
        err = _claim1(balls, i, j)
        if err:
            return err
    return None


@dataclass
class ClaimReport:
    passed: bool
    triples_checked: int
    sampled: bool
    counterexample: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "triples_checked": self.triples_checked,
            "sampled": self.sampled,
            "counterexample": self.counterexample,
        }


TRIPLE_CAP = 12


def claim2_claim3_check(x: Word, b: int, seed: int = 0, max_sampled: int = 500) -> ClaimReport:
    """Check the triple-wise set identities and the inclusion-exclusion count.

    Every triple is checked while the run count is at most ``TRIPLE_CAP``;
    above that ``max_sampled`` triples are drawn with ``seed``.
    """
    balls = _Balls(x, b)
    r = len(balls.rd)
    X, AB = balls.X, balls.AB
    triples = list(combinations(range(1, r + 1), 3))
    sampled = r > TRIPLE_CAP
    if sampled:
        import random

        rng = random.Random(seed)
        triples = rng.sample(triples, min(max_sampled, len(triples)))

    def fail(msg: str, checked: int) -> ClaimReport:
        return ClaimReport(False, checked, sampled, f"{x}: {msg}")

    for count, (i, j, k) in enumerate(triples, start=1):
        _, a_ij, b_ij = AB(i, j)
        _, a_ik, b_ik = AB(i, k)
        _, a_jk, b_jk = AB(j, k)
        if a_ij & b_ik or a_ik & b_ij:
            return fail(f"A/B overlap in triple {(i, j, k)}", count)
        if not (a_ik <= a_ij and a_ik <= a_jk):
            return fail(f"A_{i},{k} not nested in triple {(i, j, k)}", count)
        if b_ik & b_ij or b_ik & b_jk:
            return fail(f"B sets overlap in triple {(i, j, k)}", count)
        xik = X(i) & X(k)
        if xik - (X(i) & X(j)) != b_ik or xik - (X(j) & X(k)) != b_ik:
            return fail(f"set difference != B_{i},{k} in triple {(i, j, k)}", count)

    union: Set[Raw] = set()
    for i in range(1, r + 1):
        union |= X(i)
    q = x.q
    ball = q ** (b - 1) * ((x.n - b + 1) * (q - 1) + 1)
    incl_excl = sum(len(X(i)) for i in range(1, r + 1))
    incl_excl -= sum(len(X(i) & X(i + 1)) for i in range(1, r))
    b_total = 0
    for i in range(1, r + 1):
        for j in range(i + 2, r + 1):
            incl_excl -= len((X(i) & X(j)) - (X(i) & X(i + 1)))
            b_total += len(AB(i, j)[2])
    if incl_excl != len(union):
        return fail(f"inclusion-exclusion gives {incl_excl}, union has {len(union)}", len(triples))
    closed = r * ball - (r - 1) * 2 * q ** (b - 1) - b_total
    if closed != len(union):
        return fail(f"B-sum expression gives {closed}, union has {len(union)}", len(triples))
    return ClaimReport(True, len(triples), sampled)


def _syms(part) -> Raw:
    return part.symbols if isinstance(part, Word) else tuple(part)


def lemma4_intersection(u, v: Word, v2: Word, w, b: int) -> WordSet:
    """Analytic I(u v w) & I(u v2 w) where v, v2 differ in first and last symbol.

    ``u`` and ``w`` may be Words or plain (possibly empty) symbol sequences.
    """
    u, w = _syms(u), _syms(w)
    out = lemma4_raw(u, v.symbols, v2.symbols, w, b, v.q)
    return WordSet.from_raw(v.q, len(u) + len(v) + len(w) + b, out)


def lemma4_raw(u: Raw, v: Raw, v2: Raw, w: Raw, b: int, q: int) -> Set[Raw]:
    d = len(v)
    if d < 1 or len(v2) != d:
        raise DomainError("v and v2 must be non-empty and equally long")
    if v[0] == v2[0] or v[-1] == v2[-1]:
        raise DomainError("v and v2 must differ in their first and last symbols")
    if b < 1:
        raise DomainError(f"b must be >= 1, got {b}")
    if d <= b:
        free = product(range(q), repeat=b - d)
        out = set()
        for vb in free:
            out.add(u + v + vb + v2 + w)
            out.add(u + v2 + vb + v + w)
        return out
    out = set()
    if v[: d - b] == v2[b:]:
        out.add(u + v2[:b] + v + w)
    if v[b:] == v2[: d - b]:
        out.add(u + v[:b] + v2 + w)
    return out


def split_pair(x: Raw, y: Raw) -> Tuple[Raw, Raw, Raw, Raw]:
    """Split distinct equal-length x, y as (u, v, v2, w) with v, v2 differing at both ends."""
    if len(x) != len(y) or x == y:
        raise DomainError("need distinct words of equal length")
    lo = 0
    while x[lo] == y[lo]:
        lo += 1
    hi = len(x)
    while x[hi - 1] == y[hi - 1]:
        hi -= 1
    return x[:lo], x[lo:hi], y[lo:hi], x[hi:]
