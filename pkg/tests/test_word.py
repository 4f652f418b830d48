import pytest
from hypothesis import given
from hypothesis import strategies as st

import naive
from burstball import (
    AlphabetError,
    DomainError,
    EmptyWordError,
    Word,
    alternating_segments,
    b_run_count,
    f_stat,
    g_stat,
    is_periodic,
    max_periodic_substring_length,
    parse_word,
    size_breakdown,
)
from burstball.word import g_vector, periodic_intervals


def W(text, q=2):
    return parse_word(text, q)


@st.composite
def words(draw, q_max=4, n_max=12):
    q = draw(st.integers(2, q_max))
    n = draw(st.integers(1, n_max))
    return Word(q, tuple(draw(st.lists(st.integers(0, q - 1), min_size=n, max_size=n))))


class TestParse:
    def test_digits(self):
        assert parse_word("0101", 2).symbols == (0, 1, 0, 1)
        assert parse_word("01201", 3).symbols == (0, 1, 2, 0, 1)

    def test_csv_for_large_alphabet(self):
        x = parse_word("0,1,12,3", 13)
        assert x.symbols == (0, 1, 12, 3)
        assert str(x) == "0,1,12,3"

    def test_alphabet_violation(self):
        with pytest.raises(AlphabetError):
            parse_word("012", 2)

    def test_empty(self):
        with pytest.raises(EmptyWordError):
            parse_word("", 2)

    @given(words(q_max=14))
    def test_round_trip(self, x):
        assert parse_word(str(x), x.q) == x


class TestRunCount:
    @pytest.mark.parametrize(
        "text,b,expected", [("0000", 1, 1), ("0101", 2, 1), ("00110", 2, 4)]
    )
    def test_examples(self, text, b, expected):
        assert b_run_count(W(text), b) == expected

    def test_domain(self):
        with pytest.raises(DomainError):
            b_run_count(W("01"), 2)

    @given(words(), st.integers(1, 4))
    def test_range_and_reversal(self, x, b):
        if x.n < b + 1:
            return
        r = b_run_count(x, b)
        assert 1 <= r <= x.n - b + 1
        full = all(x[i] != x[i + b] for i in range(x.n - b))
        assert (r == x.n - b + 1) == full
        assert b_run_count(x.reversed(), b) == r

    @given(words(n_max=10), st.integers(1, 3))
    def test_counts_maximal_periodic_intervals(self, x, b):
        if x.n < b + 1:
            return
        assert b_run_count(x, b) == len(naive.maximal_periodic_intervals(x.symbols, b))


class TestFAndG:
    @pytest.mark.parametrize(
        "text,q,b,j,expected",
        [("00000", 2, 2, 1, 0), ("00110", 2, 2, 1, 2), ("01201", 3, 2, 1, 2)],
    )
    def test_f_examples(self, text, q, b, j, expected):
        assert f_stat(W(text, q), b, j) == expected

    @pytest.mark.parametrize(
        "text,b,i,expected", [("00000", 2, 1, 0), ("00110", 2, 1, 1), ("0101", 1, 1, 2)]
    )
    def test_g_examples(self, text, b, i, expected):
        assert g_stat(W(text), b, i) == expected

    def test_f_domain(self):
        with pytest.raises(DomainError):
            f_stat(W("00110"), 2, 2)

    def test_g_domain(self):
        with pytest.raises(DomainError):
            g_stat(W("00110"), 2, 2)

    @given(words(), st.integers(1, 4))
    def test_g_linear_scan_matches_definition(self, x, b):
        got = g_vector(x, b)
        assert got == [naive.g_stat(x.symbols, b, i) for i in range(1, x.n - 2 * b + 1)]

    @given(words(), st.integers(2, 4))
    def test_f_and_g_bounds(self, x, b):
        if x.n < b + 1:
            return
        r = b_run_count(x, b)
        for j in range(1, b):
            assert f_stat(x, b, j) <= min(r - 1, max(x.n - b - j, 0))
        for i, g in enumerate(g_vector(x, b), start=1):
            if x[i - 1] == x[i - 1 + b]:
                assert g == 0


class TestPeriodicity:
    @pytest.mark.parametrize(
        "text,lo,hi,p,expected",
        [("0101", 1, 4, 2, True), ("00110", 1, 5, 4, True), ("00110", 1, 5, 2, False)],
    )
    def test_is_periodic(self, text, lo, hi, p, expected):
        assert is_periodic(W(text), lo, hi, p) is expected

    def test_short_range_is_vacuously_periodic(self):
        assert is_periodic(W("01"), 1, 2, 3)

    def test_range_check(self):
        with pytest.raises(DomainError):
            is_periodic(W("0101"), 0, 4, 2)

    def test_max_periodic_examples(self):
        assert max_periodic_substring_length(W("0101"), 2) == 4
        assert max_periodic_substring_length(W("00110"), 4) == 5
        # brute force over all intervals: no length-3 window has x_k = x_{k+2}
        assert naive.max_periodic_length((0, 0, 1, 1, 0), 2) == 2
        assert max_periodic_substring_length(W("00110"), 2) == 2

    def test_max_periodic_exhaustive(self):
        for n in range(1, 13):
            for s in naive.words(n, 2):
                for p in range(1, 5):
                    assert max_periodic_substring_length(Word(2, s), p) == naive.max_periodic_length(s, p)

    @given(words(n_max=10), st.integers(1, 4))
    def test_periodic_intervals_are_maximal(self, x, p):
        if x.n <= p:
            return
        assert periodic_intervals(x, p) == naive.maximal_periodic_intervals(x.symbols, p)


class TestAlternating:
    @pytest.mark.parametrize(
        "text,expected", [("0101", [4]), ("0000", []), ("00110", [2, 2]), ("01", [2])]
    )
    def test_examples(self, text, expected):
        assert alternating_segments(W(text)) == expected

    @given(words(n_max=10))
    def test_matches_all_interval_search(self, x):
        assert alternating_segments(x) == naive.alternating_segments(x.symbols)


class TestBreakdown:
    def test_examples(self):
        bd = size_breakdown(W("00110"), 2)
        assert (bd.run_count, bd.f, bd.g) == (4, (2,), (1,))
        bd = size_breakdown(W("00000"), 2)
        assert (bd.run_count, bd.f, bd.g) == (1, (0,), (0,))
        bd = size_breakdown(W("01201", 3), 2)
        assert (bd.run_count, bd.f, bd.g) == (4, (2,), (0,))

    def test_empty_ranges(self):
        bd = size_breakdown(W("0110"), 1)
        assert bd.f == ()
        bd = size_breakdown(W("0110"), 2)
        assert bd.g == ()

    def test_domain(self):
        with pytest.raises(DomainError):
            size_breakdown(W("00"), 2)

    def test_words_are_immutable(self):
        x = W("0101")
        with pytest.raises(AttributeError):
            x.q = 3
