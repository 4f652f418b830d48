import json
import os
import subprocess
import sys

import numpy as np
import pytest

from burstball import Word, b_run_count, kernels, max_periodic_substring_length, size_breakdown
from burstball.closed_forms import BallParams, explicit_ball_size

PAIRS = [("run_counts", "b"), ("f_weighted", "bq"), ("g_sums", "b"), ("max_periodic", "p")]


def _args(kind, b, q):
    return {"b": (b,), "bq": (b, q), "p": (2 * b,)}[kind]


def _random_words(n, q, count, seed):
    return np.random.default_rng(seed).integers(0, q, size=(count, n), dtype=np.int64)


@pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="numba not installed")
@pytest.mark.parametrize("name,kind", PAIRS)
@pytest.mark.parametrize("q,b,n", [(2, 1, 9), (2, 3, 12), (3, 2, 7), (5, 2, 20), (2, 4, 8), (4, 1, 2)])
def test_backends_agree(name, kind, q, b, n):
    W = _random_words(n, q, 400, seed=n * 31 + b)
    args = _args(kind, b, q)
    got_np = getattr(kernels, "np_" + name)(W, *args)
    got_nb = getattr(kernels, "nb_" + name)(W, *args)
    np.testing.assert_array_equal(got_np, got_nb)


@pytest.mark.parametrize("q,b,n", [(2, 1, 8), (2, 2, 9), (3, 2, 6), (2, 3, 9), (3, 1, 5)])
def test_batched_sizes_match_per_word(q, b, n):
    W = kernels.all_words_array(n, q)
    sizes = kernels.explicit_sizes(W, q, b)
    runs = kernels.run_counts(W, b)
    longest = kernels.max_periodic(W, 2 * b)
    for row, size, r, m in zip(W, sizes, runs, longest):
        x = Word(q, tuple(int(v) for v in row))
        assert size == explicit_ball_size(size_breakdown(x, b), BallParams(n, q, b))
        assert r == b_run_count(x, b)
        assert m == max_periodic_substring_length(x, 2 * b)


def test_all_words_array_is_lexicographic():
    W = kernels.all_words_array(3, 3)
    assert W.shape == (27, 3)
    rows = [tuple(r) for r in W.tolist()]
    assert rows == sorted(rows) and len(set(rows)) == 27


def test_rejects_non_matrix():
    with pytest.raises(ValueError):
        kernels.run_counts(np.zeros(4, dtype=np.int64), 1)


def test_overflow_guard():
    W = np.zeros((1, 70), dtype=np.int64)
    with pytest.raises(OverflowError):
        kernels.explicit_sizes(W, 2**20, 3)


def test_env_flag_selects_numpy():
    code = (
        "import json; from burstball import kernels, Word; import numpy as np;"
        "W = kernels.all_words_array(6, 2);"
        "print(json.dumps([kernels.backend(), kernels.explicit_sizes(W, 2, 2).tolist()]))"
    )
    env = dict(os.environ, BURSTBALL_PURE_NUMPY="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    name, sizes = json.loads(out.stdout)
    assert name == "numpy"
    assert sizes == kernels.explicit_sizes(kernels.all_words_array(6, 2), 2, 2).tolist()
