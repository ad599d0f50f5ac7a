"""Seeded synthetic samplers used as oracles throughout the suite."""

import math

import numpy as np
import pytest

from numlaws import (
    BenfordModel,
    GammaModel,
    ZipfModel,
    discrete_normalize,
    exact_histogram,
    sample_benford_digits,
    sample_gamma_lengths,
    sample_zipf_values,
)
from numlaws.errors import DegenerateModelError


class TestBenfordSampler:
    def test_single_draw_in_support(self):
        digits = sample_benford_digits(1, seed=0)
        assert digits.shape == (1,)
        assert 1 <= digits[0] <= 9

    def test_digit_one_share_within_three_sigma(self):
        n = 10**6
        digits = sample_benford_digits(n, seed=42)
        share = float(np.mean(digits == 1))
        sigma = math.sqrt(0.301 * 0.699 / n)
        assert abs(share - math.log10(2)) < 3 * sigma
        assert abs(share - 0.301) < 0.0015

    def test_same_seed_reproduces_stream(self):
        a = sample_benford_digits(5000, seed=99)
        b = sample_benford_digits(5000, seed=99)
        assert np.array_equal(a, b)

    def test_different_seeds_differ(self):
        a = sample_benford_digits(5000, seed=1)
        b = sample_benford_digits(5000, seed=2)
        assert not np.array_equal(a, b)


class TestZipfSampler:
    def test_alpha_zero_uniform_within_five_sigma(self):
        n, v = 10**6, 10
        corpus = sample_zipf_values(n, alpha=0.0, support_size=v, seed=11)
        counts = np.bincount(np.asarray(corpus.values), minlength=v + 1)[1:]
        expected = n / v
        sigma = math.sqrt(n * (1 / v) * (1 - 1 / v))
        assert np.all(np.abs(counts - expected) < 5 * sigma)

    def test_two_value_shares(self):
        n = 10**5
        corpus = sample_zipf_values(n, alpha=1.0, support_size=2, seed=5)
        share = corpus.values.count(1) / n
        sigma = math.sqrt((2 / 3) * (1 / 3) / n)
        assert abs(share - 2 / 3) < 3 * sigma

    def test_values_inside_declared_support(self):
        corpus = sample_zipf_values(10**4, alpha=0.75, support_size=200, seed=8)
        assert min(corpus.values) >= 1
        assert max(corpus.values) <= 200

    def test_same_seed_identical_corpus(self):
        a = sample_zipf_values(10**4, alpha=0.75, support_size=50, seed=4)
        b = sample_zipf_values(10**4, alpha=0.75, support_size=50, seed=4)
        assert a.values == b.values

    def test_support_size_validated(self):
        with pytest.raises(ValueError):
            sample_zipf_values(10, alpha=1.0, support_size=1, seed=0)


class TestGammaLengthSampler:
    def test_constant_density_uniform(self):
        n, l_max = 10**6, 6
        lengths = sample_gamma_lengths(n, rate=0.0, shape=1.0, max_length=l_max, seed=3)
        counts = np.bincount(lengths, minlength=l_max + 1)[1:]
        sigma = math.sqrt(n * (1 / l_max) * (1 - 1 / l_max))
        assert np.all(np.abs(counts - n / l_max) < 5 * sigma)

    def test_pooled_length_parameters_within_three_sigma_everywhere(self):
        """Empirical pmf of 1e6 draws tracks the generating pmf at every
        length, per-category binomial bound."""
        n, l_max = 10**6, 17
        rate, shape = math.exp(-5), 1.0 - 0.049
        lengths = sample_gamma_lengths(n, rate=rate, shape=shape, max_length=l_max, seed=42)
        pmf = discrete_normalize(GammaModel(1.0, rate, shape), np.arange(1, l_max + 1))
        counts = np.bincount(lengths, minlength=l_max + 1)[1:]
        empirical = counts / n
        sigma = np.sqrt(pmf * (1 - pmf) / n)
        assert np.all(np.abs(empirical - pmf) < 3 * sigma)

    def test_single_draw_support(self):
        lengths = sample_gamma_lengths(1, rate=0.5, shape=1.2, max_length=9, seed=1)
        assert lengths.shape == (1,)
        assert 1 <= lengths[0] <= 9

    def test_underflowing_mass_rejected(self):
        with pytest.raises(DegenerateModelError):
            sample_gamma_lengths(10, rate=1000.0, shape=1.0, max_length=5, seed=0)

    def test_n_validated(self):
        with pytest.raises(ValueError):
            sample_gamma_lengths(0, rate=0.1, shape=1.0, max_length=5, seed=0)


class TestSamplerConvergence:
    """At n=1e6 every category sits within 5 binomial SE of its pmf."""

    def assert_within_five_sigma(self, counts, pmf, n):
        empirical = counts / n
        sigma = np.sqrt(pmf * (1 - pmf) / n)
        assert np.all(np.abs(empirical - pmf) < 5 * sigma)

    def test_benford_sampler(self):
        n = 10**6
        digits = sample_benford_digits(n, seed=2718)
        pmf = discrete_normalize(BenfordModel(), np.arange(1, 10))
        self.assert_within_five_sigma(np.bincount(digits, minlength=10)[1:], pmf, n)

    def test_zipf_sampler(self):
        n, v = 10**6, 50
        corpus = sample_zipf_values(n, alpha=0.75, support_size=v, seed=161803)
        pmf = discrete_normalize(ZipfModel(exponent=0.75, scale=1.0), np.arange(1, v + 1))
        counts = np.bincount(np.asarray(corpus.values), minlength=v + 1)[1:]
        self.assert_within_five_sigma(counts, pmf, n)

    def test_gamma_length_sampler(self):
        n, l_max = 10**6, 12
        lengths = sample_gamma_lengths(n, rate=0.25, shape=1.3, max_length=l_max, seed=577)
        pmf = discrete_normalize(GammaModel(1.0, 0.25, 1.3), np.arange(1, l_max + 1))
        self.assert_within_five_sigma(np.bincount(lengths, minlength=l_max + 1)[1:], pmf, n)


class TestExactHistogram:
    def test_benford_frequencies_exact(self):
        hist = exact_histogram(BenfordModel(), range(1, 10))
        expected = [math.log10(1 + 1 / d) for d in range(1, 10)]
        np.testing.assert_allclose(hist.frequencies, expected, atol=1e-15)

    def test_zipf_proportionality(self):
        ranks = np.arange(1, 501, dtype=float)
        hist = exact_histogram(ZipfModel(exponent=0.75, scale=1.0), ranks)
        freqs = np.asarray(hist.frequencies)
        ratio = freqs * ranks**0.75
        np.testing.assert_allclose(ratio, ratio[0], rtol=1e-12)

    def test_pooled_digit_model_strictly_decreasing(self):
        hist = exact_histogram(GammaModel(0.38, 0.32, 1.027), range(1, 10))
        assert np.all(np.diff(hist.frequencies) < 0)

    def test_frequencies_form_a_pmf(self):
        hist = exact_histogram(GammaModel(0.002, 0.1, 0.951), range(1, 18))
        assert abs(sum(hist.frequencies) - 1.0) < 1e-12
