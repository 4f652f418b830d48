"""Definition-level brute force used as independent oracles in tests.

Deliberately quadratic or worse; shares no code with the package.
"""

from itertools import product


def periodic(s, lo, hi, p):
    """1-based inclusive interval [lo, hi] of s is p-periodic."""
    return all(s[k - 1] == s[k - 1 + p] for k in range(lo, hi - p + 1))


def maximal_periodic_intervals(s, p):
    n = len(s)
    ivs = [(lo, hi) for lo in range(1, n + 1) for hi in range(lo, n + 1) if periodic(s, lo, hi, p)]
    return sorted(
        (lo, hi)
        for lo, hi in ivs
        if not any((a, c) != (lo, hi) and a <= lo and hi <= c for a, c in ivs)
    )


def max_periodic_length(s, p):
    n = len(s)
    return max(hi - lo + 1 for lo in range(1, n + 1) for hi in range(lo, n + 1) if periodic(s, lo, hi, p))


def alternating_segments(s):
    n = len(s)
    cands = [
        (lo, hi)
        for lo in range(1, n + 1)
        for hi in range(lo + 1, n + 1)
        if periodic(s, lo, hi, 2) and not periodic(s, lo, hi, 1)
    ]
    keep = [c for c in cands if not any(d != c and d[0] <= c[0] and c[1] <= d[1] for d in cands)]
    return [hi - lo + 1 for lo, hi in sorted(keep)]


def g_stat(s, b, i):
    n = len(s)
    return sum(
        1
        for j in range(i + b, n - b + 1)
        if s[i - 1] != s[i - 1 + b] and s[j - 1] != s[j - 1 + b] and periodic(s, i, j + b, 2 * b)
    )


def deletions(s, b):
    return {s[:k] + s[k + b :] for k in range(len(s) - b + 1)}


def insertions(s, b, q):
    return {s[:k] + p + s[k:] for k in range(len(s) + 1) for p in product(range(q), repeat=b)}


def lev_ball(s, b, q):
    out = set()
    for d in deletions(s, b):
        out |= insertions(d, b, q)
    return out


def words(n, q):
    return list(product(range(q), repeat=n))
