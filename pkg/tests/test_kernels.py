import os
import subprocess
import sys
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from otarrange import _fallback

speed = pytest.importorskip("otarrange._speedups")

ints = st.integers(-6, 6)


@st.composite
def matrices(draw):
    ncols = draw(st.integers(1, 5))
    nrows = draw(st.integers(0, 6))
    return [draw(st.lists(ints, min_size=ncols, max_size=ncols)) for _ in range(nrows)], ncols


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_bareiss(m):
    rows, ncols = m
    assert speed.bareiss_rank(rows, ncols) == _fallback.bareiss_rank(rows, ncols)


sparse_rows = st.dictionaries(st.integers(0, 8), st.integers(-5, 5).filter(bool), max_size=5)


@settings(max_examples=150, deadline=None)
@given(st.lists(sparse_rows, max_size=8))
def test_echelon(rows):
    pa, pb = {}, {}
    for r in rows:
        assert speed.echelon_insert(pb, dict(r)) == _fallback.echelon_insert(pa, dict(r))
    assert pa == pb


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.integers(1, (1 << n) - 1), max_size=6), st.integers(0, n))))
def test_nbc_faces(args):
    n, forbidden, max_size = args
    by_max = [[] for _ in range(n)]
    for b in forbidden:
        by_max[b.bit_length() - 1].append(b)
    assert sorted(speed.nbc_faces(n, by_max, max_size)) == sorted(_fallback.nbc_faces(n, by_max, max_size))


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.integers(0, (1 << n) - 1), min_size=n * n, max_size=n * n),
    st.lists(st.booleans(), min_size=1 << n, max_size=1 << n))))
def test_line_closed(args):
    n, pair, flat = args
    pair = [p | (1 << (k // n)) | (1 << (k % n)) for k, p in enumerate(pair)]
    flat = [int(x) for x in flat]
    assert speed.first_line_closed_nonflat(n, pair, flat) == _fallback.first_line_closed_nonflat(n, pair, flat)


def test_nbc_faces_brute():
    n = 5
    forbidden = [0b00110, 0b11000, 0b10101]
    by_max = [[] for _ in range(n)]
    for b in forbidden:
        by_max[b.bit_length() - 1].append(b)
    want = sorted(
        sum(1 << i for i in s)
        for k in range(n + 1)
        for s in combinations(range(n), k)
        if not any(b & ~sum(1 << i for i in s) == 0 for b in forbidden)
    )
    assert sorted(_fallback.nbc_faces(n, by_max, n)) == want


def test_pure_python_switch():
    env = dict(os.environ, OTARRANGE_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from otarrange import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
