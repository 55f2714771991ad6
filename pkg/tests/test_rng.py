import numpy as np
import pytest

from corrbeta import RngStream, uniform


def test_reproducible():
    a, b = RngStream(42), RngStream(42)
    assert [uniform(a) for _ in range(3)] == [uniform(b) for _ in range(3)]


def test_open_interval_and_mean():
    u = RngStream(42).uniform(10**6)
    assert u.min() > 0 and u.max() < 1
    assert abs(u.mean() - 0.5) < 0.002


def test_streams_independent():
    a = RngStream(7, stream_id=0).uniform(10**5)
    b = RngStream(7, stream_id=1).uniform(10**5)
    assert not np.array_equal(a, b)
    assert abs(np.corrcoef(a, b)[0, 1]) < 0.01


def test_seeds_differ():
    assert RngStream(1).uniform() != RngStream(2).uniform()


@pytest.mark.parametrize("seed, stream", [(-1, 0), (0, 2**64)])
def test_rejects_out_of_range(seed, stream):
    with pytest.raises(ValueError):
        RngStream(seed, stream)
