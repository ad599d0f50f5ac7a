"""Least-squares estimation of the three laws from observed histograms.

Estimators follow the scikit-learn protocol: construct with
hyperparameters, ``fit(X)`` where ``X`` is a histogram-like object (or a
``(support, frequencies)`` pair), fitted attributes carry a trailing
underscore, ``predict(support)`` evaluates the fitted curve.

- BenfordFitter has no free parameters; fitting only scores the data.
- ZipfFitter runs ordinary least squares on (log rank, log frequency);
  the slope is the negated exponent, the intercept the log scale.
  Zero-frequency support points are excluded from the regression but
  retained for scoring.
- GammaFitter minimizes squared error in linear frequency space with a
  derivative-free simplex search over (log rate, shape) from a fixed
  grid of starts; the amplitude is profiled out exactly by a linear
  solve at every step, and the rate can be pinned to zero for the pure
  power-law comparison variant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .base import BaseEstimator, check_is_fitted
from .corpus import (
    DigitHistogram,
    LengthHistogram,
    RankFrequencyTable,
    merge_corpora,
)
from .errors import FitFailureError, UnderdeterminedFitError
from .laws import BenfordModel, GammaModel, ZipfModel
from .metrics import FitVerdict, MetricScores, classify_fit, score_fit
from .validation import support_frequencies

# rate values below the optimizer's resolution floor are reported as exact 0
_RATE_FLOOR = 1e-12

_RATE_STARTS = (1e-6, 0.05, 0.5, 2.0)
_SHAPE_STARTS = (0.5, 2.0)
_SHAPE_STARTS_RATE_ZERO = (-1.0, 0.5, 1.0, 2.0)


@dataclass(frozen=True)
class FitResult:
    """One fitted law with its curve, scores and verdict."""

    model: object
    support: tuple[float, ...]
    observed: tuple[float, ...]
    curve: tuple[float, ...]
    scores: MetricScores
    verdict: FitVerdict
    residual_sum: float
    iterations: int

    def to_dict(self):
        return {
            "model": self.model.name,
            "params": self.model.params(),
            "support": list(self.support),
            "observed": list(self.observed),
            "fitted": list(self.curve),
            "scores": self.scores.to_dict(),
            "verdict": self.verdict.to_dict(),
            "residual_sum": self.residual_sum,
            "iterations": self.iterations,
        }

    def curve_csv(self) -> str:
        """Two-column CSV (support, fitted) for external plotting."""
        lines = ["support,fitted"]
        lines.extend(f"{x!r},{y!r}" for x, y in zip(self.support, self.curve))
        return "\n".join(lines) + "\n"


def _build_result(model, support, observed, curve, iterations) -> FitResult:
    scores = score_fit(observed, curve)
    residual = float(np.sum((observed - curve) ** 2))
    return FitResult(
        model=model,
        support=tuple(float(x) for x in support),
        observed=tuple(float(y) for y in observed),
        curve=tuple(float(y) for y in curve),
        scores=scores,
        verdict=classify_fit(scores),
        residual_sum=residual,
        iterations=int(iterations),
    )


class BenfordFitter(BaseEstimator):
    """Score observed first-digit frequencies against the fixed Benford pmf."""

    def fit(self, X, y=None):
        support, observed = support_frequencies(X)
        self.model_ = BenfordModel()
        self.support_ = support
        self.observed_ = observed
        self.curve_ = self.model_.weights(support)
        self.n_iter_ = 0
        return self

    def predict(self, support):
        check_is_fitted(self, "model_")
        return self.model_.weights(support)

    def result(self) -> FitResult:
        check_is_fitted(self, "model_")
        return _build_result(
            self.model_, self.support_, self.observed_, self.curve_, self.n_iter_
        )


class ZipfFitter(BaseEstimator):
    """Power-law fit by OLS in log-log space, scored in linear space."""

    def fit(self, X, y=None):
        support, observed = support_frequencies(X)
        if np.any(support < 1):
            raise ValueError("Zipf support (ranks) must be >= 1")
        mask = observed > 0
        if int(mask.sum()) < 2:
            raise UnderdeterminedFitError(
                "Zipf fit needs at least 2 positive-frequency ranks"
            )
        log_r = np.log(support[mask])
        log_f = np.log(observed[mask])
        centered = log_r - log_r.mean()
        denom = float(centered @ centered)
        if denom == 0.0:
            raise UnderdeterminedFitError("all ranks identical; slope undefined")
        slope = float(centered @ (log_f - log_f.mean())) / denom
        intercept = float(log_f.mean() - slope * log_r.mean())
        self.exponent_ = -slope
        self.scale_ = math.exp(intercept)
        self.model_ = ZipfModel(exponent=self.exponent_, scale=self.scale_)
        self.support_ = support
        self.observed_ = observed
        self.curve_ = self.model_.weights(support)
        self.n_iter_ = 0
        return self

    def predict(self, support):
        check_is_fitted(self, "model_")
        return self.model_.weights(support)

    def result(self) -> FitResult:
        check_is_fitted(self, "model_")
        return _build_result(
            self.model_, self.support_, self.observed_, self.curve_, self.n_iter_
        )


def _gamma_objective(theta, support, observed, log_support, rate_zero):
    """Profiled squared error: best amplitude solved exactly per (rate, shape).

    Returns (sse, scaled_amplitude, log_scale) where the true amplitude is
    scaled_amplitude * exp(-log_scale); the shift keeps exp() in range for
    extreme shapes.
    """
    if rate_zero:
        rate, shape = 0.0, theta[0]
    else:
        rate, shape = math.exp(theta[0]), theta[1]
    log_g = -rate * support + (shape - 1.0) * log_support
    shift = log_g.max()
    g = np.exp(log_g - shift)
    denom = float(g @ g)
    if denom == 0.0 or not math.isfinite(denom):
        return math.inf, 0.0, 0.0
    amplitude = float(observed @ g) / denom
    resid = observed - amplitude * g
    return float(resid @ resid), amplitude, shift


class GammaFitter(BaseEstimator):
    """Three-parameter discrete Gamma fit (or two with the rate pinned to 0).

    Derivative-free Nelder-Mead descent from a fixed grid of deterministic
    starts; the search runs over (log rate, shape) with the amplitude
    profiled out, so identical inputs always give bit-identical results.
    Rates below 1e-12 are reported as exactly 0.
    """

    def __init__(self, rate_zero=False, max_iter=10000, xatol=1e-10, fatol=1e-20):
        self.rate_zero = rate_zero
        self.max_iter = max_iter
        self.xatol = xatol
        self.fatol = fatol

    def _starts(self):
        if self.rate_zero:
            return [[s] for s in _SHAPE_STARTS_RATE_ZERO]
        return [[math.log(r), s] for r in _RATE_STARTS for s in _SHAPE_STARTS]

    def fit(self, X, y=None):
        support, observed = support_frequencies(X)
        if np.any(support <= 0):
            raise ValueError("Gamma support must be positive")
        if int(np.sum(observed > 0)) < 3:
            raise UnderdeterminedFitError(
                "Gamma fit needs at least 3 positive-frequency support points"
            )
        log_support = np.log(support)

        def objective(theta):
            return _gamma_objective(
                theta, support, observed, log_support, self.rate_zero
            )[0]

        def descend(start, xatol, fatol):
            trace: list[float] = []
            result = minimize(
                objective,
                np.asarray(start, dtype=float),
                method="Nelder-Mead",
                callback=lambda xk: trace.append(objective(xk)),
                options={
                    "xatol": xatol,
                    "fatol": fatol,
                    "maxiter": self.max_iter,
                    "maxfev": 2 * self.max_iter,
                },
            )
            return result, tuple(trace)

        # coarse exploration from every start, then one refinement pass at
        # the full tolerance from the best point (a fresh simplex escapes
        # the slow terminal shrink phase of a single long run)
        best = None
        traces: list[tuple[float, ...]] = []
        total_iter = 0
        any_converged = False
        for start in self._starts():
            result, trace = descend(start, max(self.xatol, 1e-8), max(self.fatol, 1e-16))
            total_iter += int(result.nit)
            traces.append(trace)
            any_converged = any_converged or bool(result.success)
            if best is None or result.fun < best.fun:
                best = result
        if best is not None and math.isfinite(best.fun):
            result, trace = descend(best.x, self.xatol, self.fatol)
            total_iter += int(result.nit)
            traces.append(trace)
            any_converged = any_converged or bool(result.success)
            if result.fun <= best.fun:
                best = result
        if best is None or not math.isfinite(best.fun):
            raise FitFailureError(
                "Gamma optimizer found no finite objective",
                best_params=None if best is None else tuple(best.x),
            )
        if not any_converged:
            raise FitFailureError(
                f"Gamma optimizer did not converge in {self.max_iter} iterations "
                "from any start",
                best_params=tuple(best.x),
            )

        sse, scaled_amplitude, shift = _gamma_objective(
            best.x, support, observed, log_support, self.rate_zero
        )
        if self.rate_zero:
            rate, shape = 0.0, float(best.x[0])
        else:
            rate, shape = math.exp(best.x[0]), float(best.x[1])
        if rate < _RATE_FLOOR:
            rate = 0.0
        amplitude = scaled_amplitude * math.exp(-shift)
        if not (math.isfinite(amplitude) and amplitude > 0):
            raise FitFailureError(
                "Gamma fit produced a non-positive amplitude",
                best_params=(scaled_amplitude, rate, shape),
            )
        self.amplitude_ = float(amplitude)
        self.rate_ = float(rate)
        self.shape_ = float(shape)
        self.model_ = GammaModel(
            amplitude=self.amplitude_, rate=self.rate_, shape=self.shape_
        )
        self.support_ = support
        self.observed_ = observed
        self.curve_ = self.model_.weights(support)
        self.n_iter_ = total_iter
        self.objective_traces_ = tuple(traces)
        return self

    def predict(self, support):
        check_is_fitted(self, "model_")
        return self.model_.weights(support)

    def result(self) -> FitResult:
        check_is_fitted(self, "model_")
        return _build_result(
            self.model_, self.support_, self.observed_, self.curve_, self.n_iter_
        )


def fit_benford(hist: DigitHistogram) -> FitResult:
    return BenfordFitter().fit(hist).result()


def fit_zipf(table) -> FitResult:
    return ZipfFitter().fit(table).result()


def fit_gamma(hist) -> FitResult:
    return GammaFitter().fit(hist).result()


def fit_gamma_rate_zero(hist) -> FitResult:
    """Two-parameter pure power-law variant of the Gamma fit (rate = 0)."""
    return GammaFitter(rate_zero=True).fit(hist).result()


def fit_zipf_on_lengths(hist: LengthHistogram) -> FitResult:
    """Zipf fit with decimal length standing in for rank."""
    return ZipfFitter().fit(hist).result()


_POOLED_DIMENSIONS = {"first_digit", "frequency", "length"}


def pooled_fit(corpora, dimension: str) -> FitResult:
    """Fit the dimension's law to the union of several corpora.

    Duplicating a corpus leaves relative frequencies unchanged, so the
    pooled fit of k identical corpora equals the single-corpus fit.
    """
    if dimension not in _POOLED_DIMENSIONS:
        raise ValueError(f"unknown dimension {dimension!r}")
    merged = merge_corpora(corpora)
    if dimension == "first_digit":
        return fit_gamma(DigitHistogram.from_corpus(merged))
    if dimension == "frequency":
        return fit_zipf(RankFrequencyTable.from_corpus(merged))
    return fit_gamma(LengthHistogram.from_corpus(merged))
