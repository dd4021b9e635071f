"""Seeded RNG reproducibility and the per-shot stream-split rule."""

import numpy as np

from dualsim.rng import Rng


def test_equal_seeds_equal_million_draws():
    a = Rng(123456789).uniforms(10**6)
    b = Rng(123456789).uniforms(10**6)
    assert np.array_equal(a, b)


def test_different_seeds_differ():
    a = Rng(1).uniforms(64)
    b = Rng(2).uniforms(64)
    assert not np.array_equal(a, b)


def test_child_matches_master_stream_position():
    master = Rng(987654321).uniforms(50)
    for index in (0, 1, 7, 49):
        child = Rng(987654321).child(index)
        assert child.uniform() == master[index]


def test_child_depends_only_on_seed_and_index():
    parent = Rng(42)
    parent.uniforms(10)  # consuming the parent stream must not move children
    assert parent.child(3).uniform() == Rng(42).child(3).uniform()


def test_child_rejects_negative_index():
    import pytest

    with pytest.raises(ValueError):
        Rng(1).child(-1)
