import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ndscape.core import (
    IncompatibleDimensions,
    Landscape,
    check_distribution,
    degree_distribution,
    distribution_stats,
    extract_networks,
    neighbors,
    neutral_degree,
    neutral_degrees,
    partition,
    rms_distance,
)
from ndscape.reference import royal_road

from . import oracles
from .strategies import distinct, flat, landscapes

# Five neutral networks on 5 bits with degree distribution [0, 1/4, 1/2, 1/4, 0, 0];
# produced by scripts/find_tiny_landscape.py and frozen here.
TINY_LABELS = [0, 1, 0, 2, 0, 1, 3, 3, 1, 1, 2, 2, 0, 4, 0, 3,
               4, 4, 2, 3, 4, 4, 4, 3, 1, 1, 2, 2, 0, 4, 0, 3]
TINY_FITNESS = [0.1, 0.3, 0.5, 0.7, 0.9]


def tiny_landscape():
    return Landscape(5, np.array([TINY_FITNESS[k] for k in TINY_LABELS]))


class TestLandscape:
    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            Landscape(3, np.zeros(7))

    def test_rejects_nan(self):
        f = np.zeros(4)
        f[2] = np.nan
        with pytest.raises(ValueError):
            Landscape(2, f)

    def test_fitness_is_read_only(self):
        land = flat(3)
        with pytest.raises(ValueError):
            land.fitness[0] = 1.0

    def test_equality_by_content(self):
        assert flat(3, 0.2) == flat(3, 0.2)
        assert flat(3, 0.2) != flat(3, 0.3)
        assert hash(flat(3, 0.2)) == hash(flat(3, 0.2))


def test_neighbors_of_zero():
    assert sorted(neighbors(0b000, 3)) == [0b001, 0b010, 0b100]


def test_neighbors_of_five():
    assert sorted(neighbors(0b101, 3)) == [0b001, 0b100, 0b111]


@given(st.integers(1, 12), st.data())
def test_neighbors_are_one_flip_away(n, data):
    g = data.draw(st.integers(0, (1 << n) - 1))
    out = neighbors(g, n)
    assert len(set(out)) == n
    assert all(oracles.hamming(g, h) == 1 for h in out)


def test_degree_flat_and_distinct():
    assert neutral_degree(flat(4), 9) == 4
    assert neutral_degree(distinct(4), 9) == 0


def test_degree_matches_rescan_on_16_bits(rng):
    land = Landscape(16, rng.integers(0, 3, 1 << 16).astype(float))
    for g in rng.integers(0, 1 << 16, 50):
        g = int(g)
        expect = sum(land.fitness[g ^ (1 << i)] == land.fitness[g] for i in range(16))
        assert neutral_degree(land, g) == expect


@given(landscapes())
def test_vectorized_degrees_match_oracle(land):
    assert neutral_degrees(land).tolist() == oracles.degrees(land.fitness.tolist(), land.n_bits)


@given(landscapes())
def test_histogram_matches_oracle(land):
    np.testing.assert_array_equal(
        degree_distribution(land), oracles.histogram(land.fitness.tolist(), land.n_bits)
    )


def test_histogram_extremes():
    np.testing.assert_array_equal(degree_distribution(flat(4)), [0, 0, 0, 0, 1])
    np.testing.assert_array_equal(degree_distribution(distinct(4)), [1, 0, 0, 0, 0])


def test_royal_road_stats():
    mean, std = distribution_stats(degree_distribution(royal_road(16, 4, 4)))
    assert round(mean, 2) == 14.00
    assert round(std, 2) == 2.00


class TestPartition:
    def test_flat(self):
        part = partition(flat(5))
        assert part.count == 1
        assert part.sizes.tolist() == [32]

    def test_distinct(self):
        part = partition(distinct(5))
        assert part.count == 32
        assert set(part.sizes.tolist()) == {1}

    def test_tiny_example(self):
        land = tiny_landscape()
        part = partition(land)
        assert part.count == 5
        assert part.labels.tolist() == oracles.flood_fill(land.fitness.tolist(), 5)
        np.testing.assert_array_equal(degree_distribution(land), [0, 0.25, 0.5, 0.25, 0, 0])

    @given(landscapes())
    def test_matches_flood_fill(self, land):
        part = partition(land)
        assert part.labels.tolist() == oracles.flood_fill(land.fitness.tolist(), land.n_bits)
        assert part.sizes.sum() == land.size

    @given(landscapes(max_bits=6))
    def test_networks_and_centroids(self, land):
        nets = extract_networks(land)
        seen = np.concatenate([net.members for net in nets])
        assert sorted(seen.tolist()) == list(range(land.size))
        for net in nets:
            assert np.all(land.fitness[net.members] == net.fitness)
            bits = (net.members[:, None] >> np.arange(land.n_bits)) & 1
            np.testing.assert_allclose(net.centroid, bits.mean(axis=0))

    @given(landscapes(max_bits=6))
    def test_adjacent_networks_differ_in_fitness(self, land):
        part = partition(land)
        for a, b in part.adjacent_pairs():
            assert a < b
            assert part.fitness[a] != part.fitness[b]


class TestDistance:
    def test_self_distance_zero(self):
        d = np.array([0.2, 0.3, 0.5])
        assert rms_distance(d, d) == 0.0

    def test_two_deltas(self):
        assert rms_distance([1, 0], [0, 1]) == pytest.approx(math.sqrt(2))

    def test_length_mismatch(self):
        with pytest.raises(IncompatibleDimensions):
            rms_distance([1, 0], [1, 0, 0])

    @given(st.lists(st.floats(0, 1), min_size=2, max_size=10))
    def test_symmetric(self, w):
        a = np.asarray(w)
        b = a[::-1].copy()
        assert rms_distance(a, b) == rms_distance(b, a)


class TestDistributionChecks:
    def test_not_normalized(self):
        with pytest.raises(ValueError):
            check_distribution([0.5, 0.4])

    def test_negative(self):
        with pytest.raises(ValueError):
            check_distribution([1.2, -0.2])

    def test_wrong_length_for_n(self):
        with pytest.raises(IncompatibleDimensions):
            check_distribution([0.5, 0.5], n_bits=3)

    def test_stats_of_delta(self):
        w = np.zeros(6)
        w[3] = 1
        assert distribution_stats(w) == (3.0, 0.0)

    def test_window_mean(self):
        w = np.zeros(17)
        w[3:7] = 0.25
        assert distribution_stats(w)[0] == pytest.approx(4.5)
