import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ndscape.analysis import fdc
from ndscape.core import Landscape, degree_distribution, distribution_stats
from ndscape.extension import (
    ExtendedLandscape,
    convolve,
    extend,
    extended_distribution,
    extended_eval,
)
from ndscape.netfit import window_distribution

from . import oracles
from .strategies import flat, landscapes


def delta(k, n):
    w = np.zeros(n + 1)
    w[k] = 1
    return w


class TestConvolve:
    def test_deltas_add(self):
        np.testing.assert_array_equal(convolve(delta(2, 4), delta(3, 4)), delta(5, 8))

    def test_identity(self):
        d = window_distribution(1, 3, 5)
        np.testing.assert_array_equal(convolve(d, delta(0, 3)), np.concatenate([d, np.zeros(3)]))

    def test_window_means_add(self):
        out = convolve(window_distribution(3, 4, 16), window_distribution(9, 4, 16))
        assert distribution_stats(out)[0] == pytest.approx(15.0)

    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError):
            convolve([0.5, 0.2], [1.0])


@settings(max_examples=30)
@given(landscapes(min_bits=5, max_bits=5), landscapes(min_bits=5, max_bits=5))
def test_distribution_matches_enumeration(a, b):
    ext = extend(a, b)
    assert ext.n_bits == 10
    brute = oracles.histogram(ext.flatten().fitness.tolist(), 10)
    np.testing.assert_array_equal(extended_distribution(ext), brute)


@settings(max_examples=30)
@given(st.lists(landscapes(max_bits=4), min_size=1, max_size=3))
def test_moments_add(parts):
    ext = extend(*parts)
    mean, std = distribution_stats(extended_distribution(ext))
    stats = [distribution_stats(degree_distribution(p)) for p in parts]
    assert mean == pytest.approx(sum(m for m, _ in stats), abs=1e-12)
    assert std**2 == pytest.approx(sum(s**2 for _, s in stats), abs=1e-12)


@given(landscapes(min_bits=5, max_bits=5), landscapes(min_bits=5, max_bits=5), st.data())
def test_eval_is_slice_sum(a, b, data):
    g = data.draw(st.integers(0, 1023))
    ext = extend(a, b)
    expect = a.fitness[g % 32] + b.fitness[g // 32]
    assert extended_eval(ext, g) == expect
    assert ext.evaluate(g) == expect
    assert ext.evaluate(np.array([g]))[0] == expect


def test_flat_components_sum():
    ext = extend(flat(3), flat(4))
    assert np.all(ext.flatten().fitness == 1.0)


def test_component_optima_concatenate(rng):
    a = Landscape(4, rng.random(16))
    b = Landscape(3, rng.random(8))
    ext = extend(a, b)
    g = int(np.argmax(a.fitness)) | (int(np.argmax(b.fitness)) << 4)
    assert ext.evaluate(g) == ext.max_fitness == ext.flatten().fitness.max()


def test_single_component():
    land = Landscape(3, np.array([0, 0, 1, 1, 2, 2, 3, 3], dtype=float))
    np.testing.assert_array_equal(extended_distribution(extend(land)), degree_distribution(land))


def test_four_copies_of_16_bits(rng):
    land = Landscape(16, rng.integers(0, 3, 1 << 16) / 3)
    ext = extend(land, land, land, land)
    assert ext.n_bits == 64
    single = distribution_stats(degree_distribution(land))[0]
    assert distribution_stats(extended_distribution(ext))[0] == pytest.approx(4 * single)
    with pytest.raises(ValueError):
        ext.flatten()


def test_nested_extension_flattens():
    a, b, c = flat(2), flat(3), flat(4)
    ext = extend(extend(a, b), c)
    assert ext.components == (a, b, c)


def test_components_required():
    with pytest.raises(ValueError):
        ExtendedLandscape(())
    with pytest.raises(TypeError):
        extend(np.zeros(4))


@settings(max_examples=40)
@given(st.integers(2, 6), st.integers(0, 2**32 - 1))
def test_fdc_unchanged_by_duplication(n, seed):
    rng = np.random.default_rng(seed)
    f = rng.integers(0, 4, 1 << n) / 4
    f[int(rng.integers(1 << n))] = 1.0  # a single optimum
    land = Landscape(n, f)
    doubled = extend(land, land).flatten()
    assert fdc(doubled).fdc == pytest.approx(fdc(land).fdc, abs=1e-9)
