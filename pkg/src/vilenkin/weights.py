"""Weight sequences q_k with cached partial sums Q_n = sum_{k<n} q_k.

Partial sums are accumulated with compensated (Kahan) summation so the
Abel-transform identities downstream hold to near machine precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import DegenerateWeightsError, DomainError

NONINCREASING = "nonincreasing"
NONDECREASING = "nondecreasing"
GENERAL = "general"


def _kahan_partials(q: np.ndarray) -> np.ndarray:
    out = np.empty(len(q) + 1, dtype=np.float64)
    out[0] = 0.0
    total = 0.0
    comp = 0.0
    for i, v in enumerate(q):
        y = v - comp
        t = total + y
        comp = (t - total) - y
        total = t
        out[i + 1] = total
    return out


def _detect_monotonicity(q: np.ndarray) -> str:
    if len(q) < 2:
        return NONINCREASING
    d = np.diff(q)
    if np.all(d <= 1e-15):
        return NONINCREASING
    if np.all(d >= -1e-15):
        return NONDECREASING
    return GENERAL


@dataclass
class WeightSequence:
    """q_0..q_{n_max} with partial sums Q_0..Q_{n_max+1} and monotonicity class."""

    values: np.ndarray
    monotonicity: str
    generator: Callable[[int], float] | None = None
    partials: np.ndarray = field(init=False)

    def __post_init__(self) -> None:
        q = np.asarray(self.values, dtype=np.float64)
        if q.ndim != 1 or len(q) == 0:
            raise DomainError("weight sequence must be a nonempty 1-d array")
        if np.any(q < 0):
            raise DomainError("weights must be nonnegative")
        if self.monotonicity not in (NONINCREASING, NONDECREASING, GENERAL):
            raise DomainError(f"unknown monotonicity class {self.monotonicity!r}")
        if self.monotonicity != GENERAL and len(q) >= 2:
            d = np.diff(q)
            ok = np.all(d <= 1e-15) if self.monotonicity == NONINCREASING else np.all(d >= -1e-15)
            if not ok:
                raise DomainError(
                    f"declared monotonicity {self.monotonicity!r} fails on the cached range"
                )
        self.values = q
        self.partials = _kahan_partials(q)

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def q(self, k: int) -> float:
        if k > self.n_max:
            self.extend(k)
        return float(self.values[k])

    def Q(self, n: int) -> float:
        """Q_n = sum_{k<n} q_k; raises on a vanishing normalizer."""
        if n > self.n_max + 1:
            self.extend(n)
        val = float(self.partials[n])
        if n >= 1 and val <= 0.0:
            raise DegenerateWeightsError(f"Q_{n} = {val} is not positive")
        return val

    def extend(self, n_max: int) -> None:
        if n_max <= self.n_max:
            return
        if self.generator is None:
            raise DomainError("explicit weight list cannot be extended")
        extra = np.array([self.generator(k) for k in range(self.n_max + 1, n_max + 1)])
        q = np.concatenate([self.values, extra])
        self.__init__(values=q, monotonicity=self.monotonicity, generator=self.generator)

    def key(self) -> tuple:
        """Hashable identity for kernel caches."""
        return (self.monotonicity, self.values.tobytes())


def from_values(values: Sequence[float], monotonicity: str | None = None) -> WeightSequence:
    q = np.asarray(values, dtype=np.float64)
    return WeightSequence(values=q, monotonicity=monotonicity or _detect_monotonicity(q))


def from_function(
    fn: Callable[[int], float], n_max: int, monotonicity: str | None = None
) -> WeightSequence:
    q = np.array([fn(k) for k in range(n_max + 1)], dtype=np.float64)
    return WeightSequence(
        values=q, monotonicity=monotonicity or _detect_monotonicity(q), generator=fn
    )


def ones(n_max: int) -> WeightSequence:
    """q == 1; turns Norlund and T means into the Fejer mean family."""
    return from_function(lambda k: 1.0, n_max, NONINCREASING)


def power_weights(alpha: float, n_max: int) -> WeightSequence:
    """q_0 = 1, q_k = k^(alpha-1); nonincreasing for 0 < alpha <= 1."""
    if not 0 < alpha <= 1:
        raise DomainError("power weights require 0 < alpha <= 1")
    fn = lambda k: 1.0 if k == 0 else float(k) ** (alpha - 1.0)
    return from_function(fn, n_max, NONINCREASING if alpha < 1 else NONINCREASING)


def log_weights(alpha: float, n_max: int, beta: int = 1) -> WeightSequence:
    """q_0 = 0, q_k = iterated-log(k^alpha); nondecreasing unbounded class."""
    if alpha <= 0 or beta < 1:
        raise DomainError("log weights require alpha > 0 and beta >= 1")

    def fn(k: int) -> float:
        if k == 0:
            return 0.0
        v = alpha * math.log(max(float(k), 1.0))
        for _ in range(beta - 1):
            v = math.log(max(v, 1.0))
        return max(v, 0.0)

    return from_function(fn, n_max, NONDECREASING)


def harmonic_number(n: int) -> float:
    """l_n = sum_{k=1}^{n-1} 1/k (the log-mean normalizer)."""
    return float(math.fsum(1.0 / k for k in range(1, n)))
