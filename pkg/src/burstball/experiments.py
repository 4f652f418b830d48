"""Exhaustive sweeps, extremal scans, exact averages and Monte Carlo runs.

Every function returns a record that serialises to JSON. Work is split into
shards that share nothing; results are merged in shard order, so output
never depends on the shard count.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np
from mpmath import iv
from mpmath.libmp import to_rational

from . import kernels
from .closed_forms import (
    SEGMENT_CONVENTIONS,
    BallParams,
    expected_ball_size,
    explicit_ball_size,
    insertion_ball_size,
    max_bound_general,
    max_bound_refined,
    min_ball_size,
    rational_text,
    sala_dolecek_size,
)
from .errors import BudgetExceeded, DomainError
from .oracle import (
    commutativity_check,
    deletion_set,
    insertion_set,
    levenshtein_set,
)
from .run_structure import claim1_all, claim2_claim3_check, lemma4_raw, split_pair
from .word import Word, b_run_count, format_word, max_periodic_substring_length, size_breakdown

CHECKS = (
    "theorem2",
    "theorem1_equality",
    "lemma3",
    "observation1",
    "claim1",
    "claim23",
    "lemma4",
    "eq1_convention",
)
DEFAULT_BUDGET = 10**7
MAX_COUNTEREXAMPLES = 20


def default_shards() -> int:
    return os.cpu_count() or 1


def block_rng(seed: int, block: int) -> np.random.Generator:
    """Independent stream for one block of samples, fixed by (seed, block)."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(block,)))


def _check_budget(q: int, n: int, budget: int) -> None:
    if q**n > budget:
        raise BudgetExceeded(q**n, budget)


def _map_shards(fn, tasks: Sequence, shards: int) -> list:
    if shards <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=shards) as pool:
        return list(pool.map(fn, tasks))


def _word_at(index: int, n: int, q: int) -> Tuple[int, ...]:
    digits = [0] * n
    for k in range(n - 1, -1, -1):
        index, digits[k] = divmod(index, q)
    return tuple(digits)


# ------------------------------------------------------------ exhaustive sweep


@dataclass(frozen=True)
class SweepConfig:
    q: int
    b: int
    n_range: Tuple[int, int]
    checks: FrozenSet[str] = frozenset({"theorem2"})
    t: int = 1
    shard_count: int = 1
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        object.__setattr__(self, "checks", frozenset(self.checks))
        unknown = self.checks - set(CHECKS)
        if unknown:
            raise DomainError(f"unknown checks: {sorted(unknown)}")
        lo, hi = self.n_range
        if lo > hi:
            raise DomainError(f"empty n range {lo}..{hi}")
        if self.q < 2 or self.b < 1 or self.t < 1 or self.shard_count < 1:
            raise DomainError("need q >= 2, b >= 1, t >= 1, shard_count >= 1")
        if "eq1_convention" in self.checks and self.b != 1:
            raise DomainError("eq1_convention applies to b = 1 only")
        # radius-t sub-checks skip lengths below bt+1; the unit radius needs b+1
        if lo < self.b + 1:
            raise DomainError(f"n={lo} violates n >= b+1 = {self.b + 1}")

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "b": self.b,
            "t": self.t,
            "n_range": list(self.n_range),
            "checks": sorted(self.checks),
            "shard_count": self.shard_count,
            "budget": self.budget,
        }


@dataclass
class ExperimentReport:
    kind: str
    config: dict
    words_checked: int = 0
    mismatches: int = 0
    counterexamples: List[dict] = field(default_factory=list)
    per_check: Dict[str, int] = field(default_factory=dict)
    rows: List[dict] = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    seed: Optional[int] = None
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return self.mismatches == 0

    def to_json(self) -> dict:
        return asdict(self)


def _word_checks(s, q, b, t, checks, ins_cache) -> Tuple[List[tuple], Dict[str, int]]:
    """Run enabled checks on one word; return (failures, eq1 tallies)."""
    n = len(s)
    x = Word._trusted(q, s)
    bad = []
    tallies: Dict[str, int] = {}
    if "theorem2" in checks or "theorem1_equality" in checks:
        size1 = len(levenshtein_set(s, b, 1, q))
        explicit = explicit_ball_size(size_breakdown(x, b), BallParams(n, q, b))
        if "theorem2" in checks and explicit != size1:
            bad.append(("theorem2", size1, explicit))
        if "theorem1_equality" in checks:
            lo = min_ball_size(BallParams(n, q, b, 1))
            single = b_run_count(x, b) == 1
            if explicit < lo or (explicit == lo) != single:
                bad.append(("theorem1_equality", f"min={lo}, single_run={single}", explicit))
            if t > 1 and n >= b * t + 1:
                size_t = len(levenshtein_set(s, b, t, q))
                lo_t = min_ball_size(BallParams(n, q, b, t))
                del_single = len(deletion_set(s, b, t)) == 1
                if size_t < lo_t or (size_t == lo_t) != del_single:
                    bad.append(
                        ("theorem1_equality", f"min={lo_t}, |D_t|=1 is {del_single}", size_t)
                    )
    if "lemma3" in checks:
        for tt in range(1, t + 1):
            want = insertion_ball_size(BallParams(n, q, b, tt))
            got = len(insertion_set(s, b, tt, q))
            if got != want:
                bad.append(("lemma3", want, got))
    if "observation1" in checks:
        for tt in range(1, t + 1):
            if n >= b * tt + 1 and not commutativity_check(x, b, tt):
                bad.append(("observation1", True, False))
    if "claim1" in checks:
        err = claim1_all(x, b)
        if err:
            bad.append(("claim1", "A|B", err))
    if "claim23" in checks:
        rep = claim2_claim3_check(x, b)
        if not rep.passed:
            bad.append(("claim23", "pass", rep.counterexample))
    if "lemma4" in checks:
        mine = ins_cache[s]
        for y, other in ins_cache.items():
            if y == s:
                continue
            u, v, v2, w = split_pair(s, y)
            if lemma4_raw(u, v, v2, w, b, q) != mine & other:
                bad.append(("lemma4", format_word(y, q), "analytic != oracle"))
    if "eq1_convention" in checks:
        truth = len(levenshtein_set(s, 1, 1, q))
        for name in SEGMENT_CONVENTIONS:
            tallies[name] = int(sala_dolecek_size(x, name) != truth)
    return bad, tallies


def _sweep_shard(task) -> dict:
    cfg, n, lo, hi = task
    q, b, t, checks = cfg.q, cfg.b, cfg.t, cfg.checks
    ins_cache = None
    if "lemma4" in checks:
        ins_cache = {w: insertion_set(w, b, 1, q) for w in product(range(q), repeat=n)}
    failures = []
    per_check = {c: 0 for c in checks if c != "eq1_convention"}
    eq1 = {name: 0 for name in SEGMENT_CONVENTIONS}
    sizes = []
    s = _word_at(lo, n, q)
    for _ in range(lo, hi):
        bad, tallies = _word_checks(s, q, b, t, checks, ins_cache)
        for check, expected, actual in bad:
            per_check[check] += 1
            if len(failures) < MAX_COUNTEREXAMPLES:
                failures.append(
                    {
                        "word": format_word(s, q),
                        "check": check,
                        "expected": str(expected),
                        "actual": str(actual),
                    }
                )
        for name, miss in tallies.items():
            eq1[name] += miss
        s = _next_word(s, q)
    if n >= b + 1 and hi > lo:
        W = kernels.all_words_array(n, q)[lo:hi]
        sizes = kernels.explicit_sizes(W, q, b)
    return {
        "n": n,
        "count": hi - lo,
        "failures": failures,
        "per_check": per_check,
        "eq1": eq1,
        "min": int(sizes.min()) if len(sizes) else None,
        "max": int(sizes.max()) if len(sizes) else None,
        "sum": int(sizes.sum()) if len(sizes) else 0,
    }


def _next_word(s: Tuple[int, ...], q: int) -> Tuple[int, ...]:
    digits = list(s)
    k = len(digits) - 1
    while k >= 0:
        digits[k] += 1
        if digits[k] < q:
            break
        digits[k] = 0
        k -= 1
    return tuple(digits)


def exhaustive_sweep(cfg: SweepConfig) -> ExperimentReport:
    """Run every enabled check on every word of every length in range."""
    lo_n, hi_n = cfg.n_range
    _check_budget(cfg.q, hi_n, cfg.budget)
    start = time.perf_counter()
    tasks = []
    for n in range(lo_n, hi_n + 1):
        total = cfg.q**n
        bounds = np.linspace(0, total, cfg.shard_count + 1).round().astype(int)
        for k in range(cfg.shard_count):
            if bounds[k + 1] > bounds[k]:
                tasks.append((cfg, n, int(bounds[k]), int(bounds[k + 1])))
    parts = _map_shards(_sweep_shard, tasks, cfg.shard_count)

    report = ExperimentReport("sweep", cfg.to_json())
    report.per_check = {c: 0 for c in sorted(cfg.checks) if c != "eq1_convention"}
    eq1 = {name: 0 for name in SEGMENT_CONVENTIONS}
    rows: Dict[int, dict] = {}
    for part in parts:
        report.words_checked += part["count"]
        for c, k in part["per_check"].items():
            report.per_check[c] += k
        for f in part["failures"]:
            if len(report.counterexamples) < MAX_COUNTEREXAMPLES:
                report.counterexamples.append(f)
        for name, k in part["eq1"].items():
            eq1[name] += k
        row = rows.setdefault(
            part["n"], {"n": part["n"], "count": 0, "sum": 0, "min": None, "max": None, "mismatches": 0}
        )
        row["count"] += part["count"]
        row["sum"] += part["sum"]
        row["mismatches"] += sum(part["per_check"].values())
        if part["min"] is not None:
            row["min"] = part["min"] if row["min"] is None else min(row["min"], part["min"])
            row["max"] = part["max"] if row["max"] is None else max(row["max"], part["max"])
    report.mismatches = sum(report.per_check.values())

    if "eq1_convention" in cfg.checks:
        winners = [name for name, k in eq1.items() if k == 0]
        report.extra["eq1_mismatches"] = eq1
        report.extra["eq1_winner"] = winners[0] if len(winners) == 1 else None
        report.per_check["eq1_convention"] = 0 if len(winners) == 1 else 1
        if len(winners) != 1:
            report.mismatches += 1
            report.counterexamples.append(
                {"word": "", "check": "eq1_convention", "expected": "one convention", "actual": str(winners)}
            )

    for n in sorted(rows):
        row = rows[n]
        mean = Fraction(row["sum"], row["count"])
        report.rows.append(
            {
                "n": n,
                "q": cfg.q,
                "b": cfg.b,
                "min": row["min"],
                "max": row["max"],
                "mean_num": mean.numerator,
                "mean_den": mean.denominator,
                "mismatches": row["mismatches"],
            }
        )
    report.wall_time = time.perf_counter() - start
    return report


def eq1_arbitration(n_range=(2, 10), shard_count: int = 1) -> ExperimentReport:
    """Find which alternating-segment deduction reproduces the b = 1 ball sizes."""
    return exhaustive_sweep(
        SweepConfig(q=2, b=1, n_range=tuple(n_range), checks={"eq1_convention"}, shard_count=shard_count)
    )


# ------------------------------------------------------------- extremal scan


@dataclass
class ExtremalRecord:
    n: int
    q: int
    b: int
    min: int
    max: int
    argmin_sample: List[str]
    argmax_sample: List[str]
    min_formula: int
    max_general: int
    max_refined: Optional[int]
    min_matches: bool
    min_iff_single_run: bool
    max_within_general: bool
    max_matches_refined: Optional[bool]
    pattern_words: int
    pattern_attain_max: Optional[bool]

    @property
    def ok(self) -> bool:
        return (
            self.min_matches
            and self.min_iff_single_run
            and self.max_within_general
            and self.max_matches_refined is not False
            and self.pattern_attain_max is not False
        )

    def to_json(self) -> dict:
        d = asdict(self)
        d["ok"] = self.ok
        return d


def _texts(W: np.ndarray, q: int, limit: int = 5) -> List[str]:
    return [format_word(tuple(int(v) for v in row), q) for row in W[:limit]]


def extremal_scan(n: int, q: int, b: int, budget: int = DEFAULT_BUDGET) -> ExtremalRecord:
    if n < b + 1:
        raise DomainError(f"need n >= b+1 (n={n}, b={b})")
    _check_budget(q, n, budget)
    W = kernels.all_words_array(n, q)
    sizes = kernels.explicit_sizes(W, q, b)
    runs = kernels.run_counts(W, b)
    lo, hi = int(sizes.min()), int(sizes.max())
    p = BallParams(n, q, b)
    low = min_ball_size(p)
    general = max_bound_general(p)
    refined = max_bound_refined(p) if q >= 3 and n >= 2 * b + 1 else None

    pattern = np.ones(len(W), dtype=bool)
    pattern &= (W[:, : n - b] != W[:, b:]).all(axis=1)
    if n > 2 * b:
        pattern &= (W[:, : n - 2 * b] != W[:, 2 * b :]).all(axis=1)
    pattern_attain = None
    if refined is not None:
        pattern_attain = bool(pattern.any() and (sizes[pattern] == hi).all())

    return ExtremalRecord(
        n=n,
        q=q,
        b=b,
        min=lo,
        max=hi,
        argmin_sample=_texts(W[sizes == lo], q),
        argmax_sample=_texts(W[sizes == hi], q),
        min_formula=low,
        max_general=general,
        max_refined=refined,
        min_matches=lo == low,
        min_iff_single_run=bool(((sizes == low) == (runs == 1)).all()),
        max_within_general=hi <= general,
        max_matches_refined=None if refined is None else hi == refined,
        pattern_words=int(pattern.sum()),
        pattern_attain_max=pattern_attain,
    )


# ------------------------------------------------------------- exact average


@dataclass
class AverageRecord:
    n: int
    q: int
    b: int
    formula: Fraction
    exhaustive: Fraction
    equal: bool
    display_variant: Fraction
    display_variant_equal: bool
    source: str

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "b": self.b,
            "formula": rational_text(self.formula),
            "exhaustive": rational_text(self.exhaustive),
            "equal": self.equal,
            "display_variant": rational_text(self.display_variant),
            "display_variant_equal": self.display_variant_equal,
            "source": self.source,
            "note": "display_variant divides the g terms by q^(j+b-i-1) instead of q^(j+b-i+1)",
        }


def average_check(n: int, q: int, b: int, use_oracle: bool = False, budget: int = DEFAULT_BUDGET) -> AverageRecord:
    """Compare the assembled expectation with the exact mean over Sigma_q^n.

    With ``use_oracle`` the mean is taken over enumerated ball sizes instead
    of the closed form (slow; small n only).
    """
    if n < 2 * b + 1:
        raise DomainError(f"needs n >= 2b+1 (n={n}, b={b})")
    _check_budget(q, n, budget)
    if use_oracle:
        total = sum(len(levenshtein_set(s, b, 1, q)) for s in product(range(q), repeat=n))
    else:
        total = int(kernels.explicit_sizes(kernels.all_words_array(n, q), q, b).sum())
    mean = Fraction(total, q**n)
    formula = expected_ball_size(n, q, b)
    display = expected_ball_size(n, q, b, g_exponent_shift=-1)
    return AverageRecord(
        n, q, b, formula, mean, formula == mean, display, display == mean,
        "oracle" if use_oracle else "closed_form",
    )


# ---------------------------------------------------------------- typicality


def _iv_fraction(raw) -> Fraction:
    return Fraction(*to_rational(raw))


@lru_cache(maxsize=None)
def run_bounds(n: int, q: int, b: int) -> Tuple[Fraction, Fraction]:
    """Run-count window of the typical code, rounded inward.

    The lower bound is rounded up and the upper bound down, using interval
    arithmetic, so rounding can never admit a word.
    """
    if n < b + 1:
        raise DomainError(f"need n >= b+1 (n={n}, b={b})")
    iv.prec = 160
    m = iv.mpf(n - b)
    spread = iv.sqrt(iv.log(iv.mpf(n)) / (2 * m))
    p = iv.mpf(q - 1) / q
    lower = (p - spread) * m + 2
    upper = (p + spread) * m
    return _iv_fraction(lower._mpi_[1]), _iv_fraction(upper._mpi_[0])


def periodic_limit(n: int, q: int, b: int) -> int:
    """Smallest length that violates ``length < 2 log_q n + 2b``.

    For integer m: m < 2 log_q n + 2b  iff  m - 2b < e, where e is the
    least integer with q^e >= n^2.
    """
    e = 0
    while q**e < n * n:
        e += 1
    return 2 * b + e


@dataclass
class TypicalityReport:
    word: Word
    b: int
    run_count: int
    run_lower: Fraction
    run_upper: Fraction
    max_2b_periodic: int
    threshold: float
    member: bool

    def to_json(self) -> dict:
        return {
            "word": str(self.word),
            "q": self.word.q,
            "b": self.b,
            "run_count": self.run_count,
            "run_lower": rational_text(self.run_lower),
            "run_upper": rational_text(self.run_upper),
            "run_lower_approx": float(self.run_lower),
            "run_upper_approx": float(self.run_upper),
            "max_2b_periodic": self.max_2b_periodic,
            "threshold": self.threshold,
            "member": self.member,
        }


def typicality_test(x: Word, b: int) -> TypicalityReport:
    n, q = x.n, x.q
    lower, upper = run_bounds(n, q, b)
    r = b_run_count(x, b)
    longest = max_periodic_substring_length(x, 2 * b)
    member = lower <= r <= upper and longest < periodic_limit(n, q, b)
    return TypicalityReport(
        word=x,
        b=b,
        run_count=r,
        run_lower=lower,
        run_upper=upper,
        max_2b_periodic=longest,
        threshold=2 * math.log(n) / math.log(q) + 2 * b,
        member=member,
    )


def _membership(W: np.ndarray, q: int, b: int) -> np.ndarray:
    n = W.shape[1]
    lower, upper = run_bounds(n, q, b)
    lo_int = math.ceil(lower)
    hi_int = math.floor(upper)
    r = kernels.run_counts(W, b)
    longest = kernels.max_periodic(W, 2 * b)
    return (r >= lo_int) & (r <= hi_int) & (longest < periodic_limit(n, q, b))


# ------------------------------------------------------------------- census

SAMPLE_BLOCK = 1000


def _sample_block(task) -> np.ndarray:
    n, q, seed, block, size = task
    return block_rng(seed, block).integers(0, q, size=(size, n), dtype=np.int64)


def sample_words(n: int, q: int, samples: int, seed: int, shards: int = 1) -> np.ndarray:
    """Uniform words drawn block by block; identical for every shard count."""
    tasks = []
    for block, start in enumerate(range(0, samples, SAMPLE_BLOCK)):
        tasks.append((n, q, seed, block, min(SAMPLE_BLOCK, samples - start)))
    parts = _map_shards(_sample_block, tasks, shards)
    return np.concatenate(parts) if parts else np.zeros((0, n), dtype=np.int64)


@dataclass
class CensusRecord:
    n: int
    q: int
    b: int
    mode: str
    words: int
    members: int
    fraction: float
    exact_fraction: Optional[Fraction]
    std_error: float
    bound: Fraction
    meets_bound: bool
    seed: Optional[int] = None

    def to_json(self) -> dict:
        d = asdict(self)
        d["exact_fraction"] = rational_text(self.exact_fraction) if self.exact_fraction is not None else None
        d["bound"] = rational_text(self.bound)
        return d


def code_census(
    n: int,
    q: int,
    b: int,
    mode: str = "exhaustive",
    samples: int = 10_000,
    seed: int = 0,
    shards: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> CensusRecord:
    """Fraction of Sigma_q^n inside the typical code, against 1 - 3/n.

    In sampled mode the bound counts as met when the estimate is at least
    the bound minus two standard errors. Small n failing is an expected
    outcome, not an error.
    """
    bound = 1 - Fraction(3, n)
    if mode == "exhaustive":
        _check_budget(q, n, budget)
        W = kernels.all_words_array(n, q)
        members = int(_membership(W, q, b).sum())
        exact = Fraction(members, len(W))
        return CensusRecord(n, q, b, mode, len(W), members, float(exact), exact, 0.0, bound, exact >= bound)
    if mode != "sampled":
        raise DomainError(f"mode must be 'exhaustive' or 'sampled', got {mode!r}")
    W = sample_words(n, q, samples, seed, shards)
    members = int(_membership(W, q, b).sum())
    frac = members / samples
    se = math.sqrt(max(frac * (1 - frac), 0.0) / samples)
    return CensusRecord(
        n, q, b, mode, samples, members, frac, None, se, bound,
        frac >= float(bound) - 2 * se, seed,
    )


# ------------------------------------------------------------- concentration

C_GRID = (0.25, 0.5, 1.0, 2.0, 4.0)
CALIBRATION = {"n": 256, "q": 2, "b": 2, "samples": 10_000, "seed": 1}
# Result of calibrate_c() on CALIBRATION; test_experiments re-derives it.
CALIBRATED_C = 1.0


@dataclass
class ConcentrationRecord:
    n: int
    q: int
    b: int
    samples: int
    seed: Optional[int]
    c: float
    scale: float
    expected: Fraction
    deviations: List[Fraction]
    normalized: np.ndarray
    outlier_fraction: float
    outlier_bound: Fraction
    within_bound: bool
    members: int
    member_violations: int

    @property
    def max_normalized(self) -> float:
        return float(self.normalized.max()) if len(self.normalized) else 0.0

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "b": self.b,
            "samples": self.samples,
            "seed": self.seed,
            "c": self.c,
            "scale": self.scale,
            "expected": rational_text(self.expected),
            "max_normalized_deviation": self.max_normalized,
            "mean_normalized_deviation": float(self.normalized.mean()) if len(self.normalized) else 0.0,
            "outlier_fraction": self.outlier_fraction,
            "outlier_bound": rational_text(self.outlier_bound),
            "within_bound": self.within_bound,
            "members": self.members,
            "member_violations": self.member_violations,
        }


def deviation_scale(n: int, q: int) -> float:
    """sqrt(n^3 log_q n)."""
    return math.sqrt(n**3 * math.log(n) / math.log(q))


def concentration_mc(
    n: int,
    q: int,
    b: int,
    samples: int = 10_000,
    seed: Optional[int] = 0,
    c: float = CALIBRATED_C,
    shards: int = 1,
    words: Optional[np.ndarray] = None,
) -> ConcentrationRecord:
    """Empirical deviation of ball sizes from their exact mean.

    ``words`` overrides sampling (one word per row); ``samples`` and ``seed``
    are then ignored.
    """
    if n < 2 * b + 1:
        raise DomainError(f"needs n >= 2b+1 (n={n}, b={b})")
    if words is None:
        if samples < 1:
            raise DomainError("samples must be >= 1")
        W = sample_words(n, q, samples, seed, shards)
    else:
        W = np.atleast_2d(np.asarray(words, dtype=np.int64))
        if W.shape[1] != n:
            raise DomainError("forced words have the wrong length")
        samples, seed = len(W), None
    sizes = kernels.explicit_sizes(W, q, b)
    expected = expected_ball_size(n, q, b)
    deviations = [abs(int(s) - expected) for s in sizes]
    scale = deviation_scale(n, q)
    normalized = np.array([float(d) for d in deviations]) / scale
    outliers = normalized > c
    member = _membership(W, q, b)
    frac = float(outliers.mean())
    bound = Fraction(3, n)
    return ConcentrationRecord(
        n, q, b, samples, seed, c, scale, expected, deviations, normalized,
        frac, bound, Fraction(int(outliers.sum()), samples) <= bound,
        int(member.sum()), int((outliers & member).sum()),
    )


def calibrate_c(shards: int = 1) -> Tuple[float, ConcentrationRecord]:
    """Smallest grid constant meeting the 3/n outlier bound at the calibration point."""
    cfg = CALIBRATION
    rec = concentration_mc(cfg["n"], cfg["q"], cfg["b"], cfg["samples"], cfg["seed"], c=C_GRID[-1], shards=shards)
    for c in C_GRID:
        if Fraction(int((rec.normalized > c).sum()), rec.samples) <= rec.outlier_bound:
            return c, rec
    raise RuntimeError("no grid constant meets the outlier bound")
