"""The three candidate laws as point-evaluable models on discrete supports.

Models are exposed unnormalized, exactly as they are fitted against raw
relative frequencies (the amplitude parameters absorb normalization), plus
an explicit ``discrete_normalize`` step for pmf-level comparisons.

- Benford: P(d) = log10(1 + 1/d) on first digits d in 1..9, parameter-free.
- Zipf: f(r) = scale / r**exponent on ranks r >= 1.
- Discrete Gamma: f(x) = amplitude * exp(-rate*x) * x**(shape-1) on x > 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateModelError
from .validation import as_float_array


def benford_pmf(digit: int) -> float:
    """Probability of the leading digit ``digit`` under Benford's law."""
    if int(digit) != digit or not 1 <= int(digit) <= 9:
        raise ValueError(f"digit must be an integer in 1..9, got {digit!r}")
    return math.log10(1.0 + 1.0 / int(digit))


@dataclass(frozen=True)
class BenfordModel:
    """Parameter-free logarithmic first-digit law."""

    name = "benford"

    def weights(self, support) -> np.ndarray:
        support = as_float_array(support, "support")
        if np.any((support < 1) | (support > 9) | (support != np.round(support))):
            raise ValueError("Benford support must be integer digits in 1..9")
        return np.log10(1.0 + 1.0 / support)

    def params(self):
        return {}


@dataclass(frozen=True)
class ZipfModel:
    """Power law in rank: value(r) = scale / r**exponent."""

    exponent: float
    scale: float

    name = "zipf"

    def __post_init__(self):
        if not math.isfinite(self.exponent):
            raise ValueError("exponent must be finite")
        if not (math.isfinite(self.scale) and self.scale > 0):
            raise ValueError("scale must be positive and finite")

    def weights(self, support) -> np.ndarray:
        support = as_float_array(support, "ranks")
        if np.any(support < 1):
            raise ValueError("ranks must be >= 1")
        return self.scale * support ** -self.exponent

    def params(self):
        return {"exponent": self.exponent, "scale": self.scale}


@dataclass(frozen=True)
class GammaModel:
    """Unnormalized Gamma-type density amplitude*exp(-rate*x)*x**(shape-1).

    ``shape`` may be any real (fitted length data sits below 1) and
    ``rate`` is non-negative; the classical normalization
    amplitude = rate**shape / Gamma(shape) is not imposed, the amplitude
    is a free parameter.
    """

    amplitude: float
    rate: float
    shape: float

    name = "gamma"

    def __post_init__(self):
        if not (math.isfinite(self.amplitude) and self.amplitude > 0):
            raise ValueError("amplitude must be positive and finite")
        if not (math.isfinite(self.rate) and self.rate >= 0):
            raise ValueError("rate must be non-negative and finite")
        if not math.isfinite(self.shape):
            raise ValueError("shape must be finite")

    def weights(self, support) -> np.ndarray:
        support = as_float_array(support, "support")
        if np.any(support <= 0):
            raise ValueError("Gamma support must be positive")
        # evaluate through the log to keep large supports from overflowing
        return self.amplitude * np.exp(
            -self.rate * support + (self.shape - 1.0) * np.log(support)
        )

    def params(self):
        return {"amplitude": self.amplitude, "rate": self.rate, "shape": self.shape}


def zipf_value(rank, model: ZipfModel) -> float:
    """Unnormalized Zipf value at one rank."""
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank!r}")
    return float(model.weights([float(rank)])[0])


def gamma_density(x, model: GammaModel) -> float:
    """Unnormalized Gamma density at one point x > 0."""
    if x <= 0:
        raise ValueError(f"x must be positive, got {x!r}")
    return float(model.weights([float(x)])[0])


def discrete_normalize(model, support) -> np.ndarray:
    """Normalize model weights on an explicit discrete support into a pmf."""
    weights = model.weights(support)
    total = float(weights.sum())
    if not math.isfinite(total) or total <= 0:
        raise DegenerateModelError(
            f"{model.name} model has zero or non-finite mass on the support"
        )
    return weights / total


_MODEL_TYPES = {"benford": BenfordModel, "zipf": ZipfModel, "gamma": GammaModel}


def model_to_dict(model) -> dict:
    return {"model": model.name, "params": model.params()}


def model_from_dict(payload: dict):
    try:
        name = payload["model"]
        cls = _MODEL_TYPES[name]
    except KeyError as exc:
        raise ValueError(f"unknown model payload: {payload!r}") from exc
    return cls(**payload.get("params", {}))
