"""Synthetic Zipfian samples for benchmarking and trend checks."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInput
from .spectrum import TypeFrequencyTable

__all__ = ["ZipfGeneratorConfig", "zipf_generate", "zipf_probabilities"]


@dataclass(frozen=True)
class ZipfGeneratorConfig:
    n_ranks: int
    alpha: float
    t_tokens: int
    seed: int = 0

    def validate(self) -> None:
        if isinstance(self.n_ranks, bool) or int(self.n_ranks) != self.n_ranks or self.n_ranks < 1:
            raise InvalidInput(f"n_ranks must be a positive integer, got {self.n_ranks!r}")
        if isinstance(self.t_tokens, bool) or int(self.t_tokens) != self.t_tokens or self.t_tokens < 1:
            raise InvalidInput(f"t_tokens must be a positive integer, got {self.t_tokens!r}")
        if not math.isfinite(self.alpha) or self.alpha < 0:
            raise InvalidInput(f"alpha must be a finite number >= 0, got {self.alpha!r}")
        if int(self.seed) != self.seed or not 0 <= self.seed < 2**64:
            raise InvalidInput(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")


def zipf_probabilities(n_ranks: int, alpha: float) -> np.ndarray:
    ranks = np.arange(1, n_ranks + 1, dtype=np.float64)
    weights = ranks ** -float(alpha)
    return weights / weights.sum()


def zipf_generate(config: ZipfGeneratorConfig) -> TypeFrequencyTable:
    """Draw ``t_tokens`` i.i.d. ranks with ``P(r) ~ r^-alpha`` and count them.

    Only observed ranks are returned, in rank order, so the table has no
    zero entries. Identical configs give identical tables.
    """
    config.validate()
    rng = np.random.default_rng(int(config.seed))
    counts = rng.multinomial(int(config.t_tokens), zipf_probabilities(int(config.n_ranks), config.alpha))
    return TypeFrequencyTable(int(c) for c in counts if c > 0)
