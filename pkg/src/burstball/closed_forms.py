"""Exact evaluation of the ball-size formulas, bounds and expectations.

Integers stay Python ints and expectations are :class:`fractions.Fraction`,
so nothing here rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict

from .errors import DomainError, UnsupportedError
from .word import SizeBreakdown, Word, alternating_segments, b_run_count

ExactRational = Fraction


@dataclass(frozen=True)
class BallParams:
    n: int
    q: int
    b: int
    t: int = 1

    def __post_init__(self):
        if self.q < 2:
            raise DomainError(f"q must be >= 2, got {self.q}")
        if self.b < 1 or self.t < 1:
            raise DomainError(f"b and t must be >= 1 (b={self.b}, t={self.t})")
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n}")

    def require(self, min_n: int) -> None:
        if self.n < min_n:
            raise DomainError(
                f"n={self.n} too small for b={self.b}, t={self.t} (need n >= {min_n})"
            )


def insertion_ball_size(p: BallParams) -> int:
    q, b, t = p.q, p.b, p.t
    return q ** (t * (b - 1)) * sum(comb(p.n + t, i) * (q - 1) ** i for i in range(t + 1))


def min_ball_size(p: BallParams) -> int:
    """Smallest possible ball size; attained iff the deletion ball is a singleton."""
    p.require(p.b * p.t + 1)
    q, b, t = p.q, p.b, p.t
    m = p.n - t * (b - 1)
    return q ** (t * (b - 1)) * sum(comb(m, i) * (q - 1) ** i for i in range(t + 1))


def _check_unit(bd: SizeBreakdown, p: BallParams) -> None:
    if p.t != 1:
        raise UnsupportedError(f"closed form only covers radius 1, got t={p.t}")
    if bd.b != p.b:
        raise DomainError(f"breakdown computed for b={bd.b}, params say b={p.b}")
    p.require(p.b + 1)
    if len(bd.g) != max(p.n - 2 * p.b, 0):
        raise DomainError("breakdown length does not match n")


def f_correction(bd: SizeBreakdown, q: int) -> int:
    return sum(q ** (bd.b - j - 1) * fj for j, fj in enumerate(bd.f, start=1))


def h_value(bd: SizeBreakdown, p: BallParams) -> int:
    """Ball size formula without the g-sum; an upper bound on the true size."""
    _check_unit(bd, p)
    q, b, n = p.q, p.b, p.n
    lead = q ** (b - 1) * ((n - b + 1) * (q - 1) - 1)
    return lead * bd.run_count + 2 * q ** (b - 1) - f_correction(bd, q)


def explicit_ball_size(bd: SizeBreakdown, p: BallParams) -> int:
    return h_value(bd, p) - bd.g_sum


# Per-segment deductions for the b = 1 alternating-segment formula. Only one
# of them agrees with brute force; see experiments.eq1_arbitration.
SEGMENT_CONVENTIONS = {
    "raw": lambda s: s,
    "minus_one": lambda s: s - 1,
    "minus_two": lambda s: s - 2,
    "pairs": lambda s: comb(s - 1, 2),
}


def sala_dolecek_size(x: Word, convention: str = "pairs") -> int:
    try:
        adjust = SEGMENT_CONVENTIONS[convention]
    except KeyError:
        raise DomainError(
            f"unknown convention {convention!r}; choose from {sorted(SEGMENT_CONVENTIONS)}"
        ) from None
    if x.n < 2:
        raise DomainError("needs n >= 2")
    r = b_run_count(x, 1)
    return (x.n * (x.q - 1) - 1) * r + 2 - sum(adjust(s) for s in alternating_segments(x))


def max_bound_general(p: BallParams) -> int:
    q, b, n = p.q, p.b, p.n
    return q ** (b - 1) * (n - b + 1) * ((n - b + 1) * (q - 1) + 1)


def _exact_div(num: int, den: int, what: str) -> int:
    quo, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"{what}: {num}/{den} is not an integer")
    return quo


def h_max(p: BallParams) -> int:
    """Largest value of h over Sigma_q^n (any q >= 2, n >= b+1)."""
    q, b, n = p.q, p.b, p.n
    first = q ** (b - 1) * (n - b + 1) * ((n - b + 1) * (q - 1) - 1) + 2 * q ** (b - 1)
    corr1 = _exact_div((n - b) * (q ** (b - 1) - 1), q - 1, "linear correction")
    corr2 = _exact_div(q**b - q - (b - 1) * (q - 1), (q - 1) ** 2, "constant correction")
    return first - corr1 + corr2


def max_bound_refined(p: BallParams) -> int:
    if p.q < 3:
        raise UnsupportedError("refined maximum is only available for q >= 3")
    p.require(2 * p.b + 1)
    return h_max(p)


def expected_run_count(n: int, q: int, b: int) -> Fraction:
    BallParams(n, q, b).require(b + 1)
    return 1 + Fraction((q - 1) * (n - b), q)


def expected_f(n: int, q: int, b: int, j: int) -> Fraction:
    if not 1 <= j <= b - 1:
        raise DomainError(f"j={j} outside [1, {b - 1}]")
    return Fraction((q - 1) ** 2 * max(n - b - j, 0), q * q)


def _k(q: int, b: int, i: int, j: int) -> int:
    if (j - i) % b == 0:
        return (q - 1) * q ** (2 * b - 1)
    return (q - 1) ** 2 * q ** (2 * b - 2)


def expected_g(n: int, q: int, b: int, i: int, exponent_shift: int = 1) -> Fraction:
    """Mean of g_i over Sigma_q^n.

    Each term is ``k_ij / q^(j+b-i+exponent_shift)``. The default shift +1
    is the correct probability; ``exponent_shift=-1`` reproduces the variant
    printed in the averaged-size statement, kept only to show it is wrong.
    """
    if not 1 <= i <= n - 2 * b:
        raise DomainError(f"i={i} outside [1, {n - 2 * b}]")
    return sum(
        (Fraction(_k(q, b, i, j), q ** (j + b - i + exponent_shift)) for j in range(i + b, n - b + 1)),
        Fraction(0),
    )


def expected_ball_size(n: int, q: int, b: int, g_exponent_shift: int = 1) -> Fraction:
    if n < 2 * b + 1:
        raise DomainError(f"needs n >= 2b+1 (n={n}, b={b})")
    lead = q ** (b - 1) * ((n - b + 1) * (q - 1) - 1)
    total = lead * expected_run_count(n, q, b) + 2 * q ** (b - 1)
    total -= sum((q ** (b - j - 1) * expected_f(n, q, b, j) for j in range(1, b)), Fraction(0))
    total -= sum(
        (expected_g(n, q, b, i, g_exponent_shift) for i in range(1, n - 2 * b + 1)),
        Fraction(0),
    )
    return total


def rational_text(v) -> str:
    """Decimal string for integers, ``num/den`` for proper rationals."""
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return str(int(v))


def formula_report(name: str, params: Dict, value) -> Dict:
    return {"formula": name, "params": params, "value": rational_text(value)}
