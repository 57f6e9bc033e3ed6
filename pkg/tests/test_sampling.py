from itertools import product

import pytest

from vertexforge.sampling import sample_random, sample_triple


def test_determinism():
    a = sample_random(1, 6)
    b = sample_random(1, 6)
    assert (a.t1, a.t2, a.t3) == (b.t1, b.t2, b.t3)


def test_genericity_postcondition():
    s = sample_random(1, 6)
    for i, j, k in product(range(-6, 7), repeat=3):
        if (i, j, k) == (0, 0, 0):
            continue
        assert i * s.t1 + j * s.t2 + k * s.t3 != 0


def test_constrained_mode():
    s = sample_random(3, 8, line=1)
    assert s.t1 + s.t2 - s.t3 == 0
    # generic among relations not implied by the line
    for i, j, k in product(range(-8, 9), repeat=3):
        on_line = i == j and k == -j
        val = i * s.t1 + j * s.t2 + k * s.t3
        assert (val == 0) == on_line


def test_heights():
    s = sample_random(5, 10)
    for t in (s.t1, s.t2, s.t3):
        assert max(abs(t.numerator), t.denominator) >= 1000


def test_triple_distinct():
    ss = sample_triple(9, 8)
    assert len({(s.t1, s.t2, s.t3) for s in ss}) == 3


def test_bad_bound():
    with pytest.raises(ValueError):
        sample_random(1, 0)


def test_substituted():
    s = sample_random(7, 10)
    sub = s.substituted(-1, -1)
    assert sub.t1 == s.t1 - s.t3
    assert sub.t3 == -s.t3
