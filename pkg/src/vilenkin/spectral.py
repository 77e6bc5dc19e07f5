"""Grid functions on a bounded Vilenkin group and their Fourier analysis.

A GridFunction holds the M_N values of a function constant on rank-N
cosets; integration is (1/M_N) * sum(values) under the normalized Haar
measure.  The forward transform computes all Fourier coefficients
f^(n) = int f conj(psi_n) dmu in O(M_N * sum_k m_k) by running one
radix-m_j butterfly stage per digit position; with little-endian flat
indexing on both sides no reordering pass is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, RangeError, ShapeMismatchError
from .group import GroupSpec, digit_matrix, index_sub
from .characters import character_column


@dataclass(frozen=True)
class GridFunction:
    """Function constant on rank-N cosets, stored as M_N complex values."""

    group: GroupSpec
    resolution: int
    values: np.ndarray

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=np.complex128)
        if vals.shape != (self.group.order(self.resolution),):
            raise ShapeMismatchError(
                f"expected {self.group.order(self.resolution)} values, got {vals.shape}"
            )
        vals = vals.copy()
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    def integral(self) -> complex:
        """int f dmu = (1/M_N) sum of values."""
        return complex(self.values.mean())

    def with_values(self, values: np.ndarray) -> "GridFunction":
        return GridFunction(self.group, self.resolution, values)


@dataclass(frozen=True)
class Spectrum:
    """All M_N Fourier coefficients of a rank-N grid function."""

    group: GroupSpec
    resolution: int
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        c = np.asarray(self.coeffs, dtype=np.complex128)
        if c.shape != (self.group.order(self.resolution),):
            raise ShapeMismatchError("coefficient count must equal M_N")
        c = c.copy()
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)


def constant(g: GroupSpec, resolution: int, value: complex = 1.0) -> GridFunction:
    return GridFunction(g, resolution, np.full(g.order(resolution), value, dtype=np.complex128))


def delta(g: GroupSpec, resolution: int, at: int = 0, scale: complex = 1.0) -> GridFunction:
    vals = np.zeros(g.order(resolution), dtype=np.complex128)
    vals[at] = scale
    return GridFunction(g, resolution, vals)


def character_function(g: GroupSpec, n: int, resolution: int) -> GridFunction:
    return GridFunction(g, resolution, character_column(g, n, resolution))


def random_grid_function(g: GroupSpec, resolution: int, seed: int, kind: str = "complex") -> GridFunction:
    """Seeded test function: standard-normal values (PCG64 generator)."""
    rng = np.random.default_rng(seed)
    MN = g.order(resolution)
    re = rng.standard_normal(MN)
    if kind == "real":
        vals = re.astype(np.complex128)
    elif kind == "complex":
        vals = re + 1j * rng.standard_normal(MN)
    else:
        raise DomainError(f"unknown kind {kind!r}")
    return GridFunction(g, resolution, vals)


# ---------------------------------------------------------------------------
# Fast mixed-radix transform
# ---------------------------------------------------------------------------

@lru_cache(maxsize=64)
def _dft_matrix(m: int, sign: int) -> np.ndarray:
    """m x m matrix exp(sign * 2*pi*i * k * x / m)."""
    k = np.arange(m)
    return np.exp(sign * 2j * np.pi * np.outer(k, k) / m)


def _stage_pass(vals: np.ndarray, g: GroupSpec, resolution: int, sign: int) -> np.ndarray:
    """Apply one radix-m_j butterfly per digit position j = 0..N-1.

    The flat index sum_j x_j M_j reshapes (C order) to an array whose last
    axis is digit 0; digit j lives on axis N-1-j.
    """
    N = resolution
    shape = tuple(reversed(g.m[:N]))
    a = vals.reshape(shape)
    for j in range(N):
        axis = N - 1 - j
        F = _dft_matrix(g.m[j], sign)
        a = np.moveaxis(np.tensordot(F, a, axes=([1], [axis])), 0, axis)
    return a.reshape(-1)


def transform_forward(f: GridFunction) -> Spectrum:
    """All Fourier coefficients of f; O(M_N * sum_k m_k)."""
    coeffs = _stage_pass(f.values, f.group, f.resolution, sign=-1)
    coeffs /= f.group.order(f.resolution)
    return Spectrum(f.group, f.resolution, coeffs)


def transform_inverse(s: Spectrum) -> GridFunction:
    """Synthesize sum_n c_n psi_n from a full coefficient vector."""
    vals = _stage_pass(s.coeffs, s.group, s.resolution, sign=+1)
    return GridFunction(s.group, s.resolution, vals)


def naive_forward(f: GridFunction) -> Spectrum:
    """Direct O(M_N^2) evaluation of every coefficient (oracle path)."""
    g, N = f.group, f.resolution
    MN = g.order(N)
    dm = digit_matrix(g, N)
    coeffs = np.empty(MN, dtype=np.complex128)
    # exponent of psi_n at x is sum_j n_j x_j / m_j; build rows one n at a time
    digit_tables = [np.exp(-2j * np.pi * np.outer(np.arange(g.m[j]), dm[j]) / g.m[j]) for j in range(N)]
    for n in range(MN):
        t = n
        row = np.ones(MN, dtype=np.complex128)
        for j in range(N):
            t, d = divmod(t, g.m[j])
            if d:
                row *= digit_tables[j][d]
        coeffs[n] = row @ f.values
    return Spectrum(g, N, coeffs / MN)


def fourier_coeff(f: GridFunction, n: int) -> complex:
    """f^(n) = int f conj(psi_n) dmu; exactly 0 for n >= M_N."""
    if n < 0:
        raise RangeError("coefficient index must be nonnegative")
    if n >= f.group.order(f.resolution):
        return 0.0
    col = character_column(f.group, n, f.resolution)
    return complex(np.vdot(col, f.values) / f.group.order(f.resolution))


# ---------------------------------------------------------------------------
# Partial sums and convolution
# ---------------------------------------------------------------------------

def partial_sum(f: GridFunction, n: int, spectrum: Spectrum | None = None) -> GridFunction:
    """S_n f = sum_{k<n} f^(k) psi_k, 0 <= n <= M_N; S_0 f = 0."""
    MN = f.group.order(f.resolution)
    if not 0 <= n <= MN:
        raise RangeError(f"partial-sum order {n} outside 0..{MN}")
    s = spectrum if spectrum is not None else transform_forward(f)
    masked = np.where(np.arange(MN) < n, s.coeffs, 0.0)
    return transform_inverse(Spectrum(f.group, f.resolution, masked))


def weighted_sum_combination(
    f: GridFunction, weights: np.ndarray, spectrum: Spectrum | None = None
) -> GridFunction:
    """sum_k weights[k] * S_k f, evaluated as one coefficient multiplier.

    S_k f contains psi_j exactly when j < k, so the combined coefficient
    multiplier at j is sum_{k>j} weights[k].  ``weights`` is indexed by k
    from 0 (entry 0 is vacuous since S_0 f = 0).
    """
    MN = f.group.order(f.resolution)
    w = np.asarray(weights, dtype=np.complex128)
    if w.shape[0] > MN + 1:
        raise RangeError("weight list longer than M_N + 1")
    s = spectrum if spectrum is not None else transform_forward(f)
    tail = np.zeros(MN, dtype=np.complex128)
    # tail[j] = sum_{k=j+1}^{len(w)-1} w[k]
    rev = np.cumsum(w[::-1])[::-1]
    upto = min(len(w) - 1, MN)
    tail[:upto] = rev[1:upto + 1]
    return transform_inverse(Spectrum(f.group, f.resolution, s.coeffs * tail))


def convolve(f: GridFunction, h: GridFunction) -> GridFunction:
    """(f * h)(x) = int f(x - t) h(t) dmu(t), via coefficient products."""
    if f.group.key() != h.group.key() or f.resolution != h.resolution:
        raise ShapeMismatchError("convolution operands must match")
    sf = transform_forward(f)
    sh = transform_forward(h)
    return transform_inverse(Spectrum(f.group, f.resolution, sf.coeffs * sh.coeffs))


def convolve_naive(f: GridFunction, h: GridFunction) -> GridFunction:
    """Direct double-sum convolution (oracle path, O(M_N^2))."""
    if f.group.key() != h.group.key() or f.resolution != h.resolution:
        raise ShapeMismatchError("convolution operands must match")
    g, N = f.group, f.resolution
    MN = g.order(N)
    idx = np.arange(MN, dtype=np.int64)
    out = np.zeros(MN, dtype=np.complex128)
    for t in range(MN):
        if h.values[t] == 0:
            continue
        out += f.values[index_sub(g, N, idx, t)] * h.values[t]
    return GridFunction(g, N, out / MN)


def shift(f: GridFunction, h: int) -> GridFunction:
    """Translate: (T_h f)(x) = f(x - h), h given as a flat grid index."""
    idx = index_sub(f.group, f.resolution, np.arange(f.group.order(f.resolution)), h)
    return GridFunction(f.group, f.resolution, f.values[idx])


# ---------------------------------------------------------------------------
# Norms
# ---------------------------------------------------------------------------

def lp_norm(f: GridFunction, p: float) -> float:
    """||f||_p under normalized Haar measure; p = inf gives the sup norm."""
    if p <= 0:
        raise DomainError(f"p must be positive, got {p}")
    a = np.abs(f.values)
    if np.isinf(p):
        return float(a.max()) if a.size else 0.0
    return float((a**p).mean() ** (1.0 / p))


def weak_lp(f: GridFunction, p: float) -> float:
    """sup_{lam>0} lam * mu(|f| > lam)^{1/p}, exact on the grid.

    On a finite grid the supremum is attained as lam approaches one of the
    distinct values of |f| from below, so scanning sorted values suffices.
    """
    if p <= 0:
        raise DomainError(f"p must be positive, got {p}")
    a = np.sort(np.abs(f.values))[::-1]
    MN = a.size
    frac = (np.arange(1, MN + 1) / MN) ** (1.0 / p)
    return float((a * frac).max()) if MN else 0.0
