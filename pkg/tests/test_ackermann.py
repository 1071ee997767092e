import pytest

from treepmq.ackermann import (
    SATURATED,
    SATURATION_CAP,
    ackermann,
    alpha,
    alpha2,
    iter_lambda,
    lambda_row,
    thresholds,
)


def test_row_zero_is_powers_of_two():
    assert ackermann(0, 3) == 8
    assert ackermann(0, 0) == 1
    assert ackermann(0, 62) == 2**62


def test_unfolded_values():
    # A(1, 2) = 2^(2^2) by direct recursion through row 0.
    assert ackermann(1, 0) == 2
    assert ackermann(1, 1) == 4
    assert ackermann(1, 2) == 16
    assert ackermann(1, 3) == 2**16


def test_saturation():
    # A(2, 1) = A(1, 4) = 2^65536, far beyond the cap.
    assert ackermann(1, 4) == SATURATED
    assert ackermann(2, 1) == SATURATED
    assert ackermann(0, 63) == SATURATED
    assert SATURATED > SATURATION_CAP


def test_lambda_examples():
    assert lambda_row(0, 8) == 3
    assert lambda_row(1, 16) == 2
    assert lambda_row(1, 17) == 3
    assert lambda_row(0, 1) == 1
    assert lambda_row(0, 2) == 1


def test_iter_lambda_examples():
    assert iter_lambda(1, 0, 16) == 16
    assert iter_lambda(1, 1, 16) == 4
    assert iter_lambda(1, 3, 16) == 1


def test_alpha_examples():
    assert alpha(4) == 1
    assert alpha(5) == 2
    assert alpha(1) == 1
    assert alpha2(100, 10) == 1  # A(1, 10) >= 10
    assert alpha2(0, 3) == 2  # A(1, 0) = 2 < 3 <= A(2, 0) = 4


def test_alpha_lambda_identity():
    for n in (1, 10, 1000, 10**6, 10**9):
        assert lambda_row(alpha(n), n) == 1


def test_lambda_monotone_in_n():
    for k in range(4):
        prev = 0
        for n in range(1, 2000):
            cur = lambda_row(k, n)
            assert cur >= prev
            prev = cur


def test_lambda_decreasing_in_k():
    for n in range(5, 500):
        for k in range(3):
            assert lambda_row(k + 1, n) <= lambda_row(k, n)


def test_definitional_consistency():
    for k in range(4):
        for n in (1, 2, 3, 5, 17, 1000, 65537, 10**6):
            j = lambda_row(k, n)
            assert ackermann(k, j) >= n
            if j > 1:
                assert ackermann(k, j - 1) < n


@pytest.mark.parametrize(
    "k,h,expected",
    [
        (1, 16, (12, 14, 15)),
        (1, 2, (1,)),
        (2, 16, (14, 15)),
    ],
)
def test_threshold_examples(k, h, expected):
    assert thresholds(k, h).boundaries == expected


def test_threshold_structure():
    # The iterate-until-1 stopping rule yields the row-inverse layer count
    # up to one extra layer (exactly one of m, m-1 equals lambda_row(k, h)).
    for k in (1, 2, 3, 4):
        for h in (2, 3, 5, 16, 64, 1 << 12, 1 << 20):
            sched = thresholds(k, h)
            b = sched.boundaries
            assert all(x < y for x, y in zip(b, b[1:]))  # strictly increasing
            assert b[-1] == h - 1
            assert all(1 <= x <= h - 1 for x in b)
            assert lambda_row(k, h) <= sched.m <= lambda_row(k, h) + 1


def test_threshold_rejects_flat_trees():
    with pytest.raises(ValueError):
        thresholds(1, 1)
    with pytest.raises(ValueError):
        thresholds(0, 8)
