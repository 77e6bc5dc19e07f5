"""Step martingales, p-atoms, maximal functions, and H_p quasi-norms.

A StepMartingale is a finite sequence of grid functions f^(n_0), f^(n_1), ...
at increasing resolutions satisfying the consistency law: averaging a finer
entry over rank-n_i cosets reproduces the coarser entry.  The H_p quasi-norm
is computed in maximal-function form ||sup_i |f^(n_i)|||_p, which is the
computable representative of the atomic-decomposition norm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import (
    AtomBoundError,
    AtomMeanError,
    AtomSupportError,
    DomainError,
    InvalidParamsError,
    RangeError,
    ShapeMismatchError,
)
from .group import GroupSpec, coset_indices
from .spectral import (
    GridFunction,
    Spectrum,
    lp_norm,
    shift,
    transform_forward,
)


def conditional_expectation(f: GridFunction, n: int) -> GridFunction:
    """Average f over each rank-n coset and replicate; equals S_{M_n} f.

    Cosets at level n fix the low digits, so the flat indices of one coset
    are {low + h*M_n}; averaging is a reshape-and-mean.
    """
    if not 0 <= n <= f.resolution:
        raise RangeError(f"level {n} outside 0..{f.resolution}")
    g = f.group
    Mn = g.M[n]
    MN = g.order(f.resolution)
    block = f.values.reshape(MN // Mn, Mn)
    means = block.mean(axis=0)
    return GridFunction(g, f.resolution, np.tile(means, MN // Mn))


def project_to_level(f: GridFunction, n: int) -> GridFunction:
    """Coset averages of f as a rank-n grid function (no replication)."""
    if not 0 <= n <= f.resolution:
        raise RangeError(f"level {n} outside 0..{f.resolution}")
    g = f.group
    Mn = g.M[n]
    MN = g.order(f.resolution)
    return GridFunction(g, n, f.values.reshape(MN // Mn, Mn).mean(axis=0))


def embed(f: GridFunction, resolution: int) -> GridFunction:
    """Replicate a rank-n function onto a finer grid."""
    if resolution < f.resolution:
        raise RangeError("embedding target must be at least the source resolution")
    reps = f.group.order(resolution) // f.group.order(f.resolution)
    return GridFunction(f.group, resolution, np.tile(f.values, reps))


@dataclass(frozen=True)
class StepMartingale:
    """Finite martingale: entries at strictly increasing levels."""

    group: GroupSpec
    levels: tuple[int, ...]
    entries: tuple[GridFunction, ...]

    def __post_init__(self) -> None:
        if not self.levels:
            raise InvalidParamsError("martingale needs at least one level")
        if list(self.levels) != sorted(set(self.levels)):
            raise InvalidParamsError("levels must be strictly increasing")
        if len(self.levels) != len(self.entries):
            raise InvalidParamsError("levels and entries must align")
        for n, e in zip(self.levels, self.entries):
            if e.resolution != n:
                raise ShapeMismatchError(f"entry at level {n} has resolution {e.resolution}")
            if e.group.key() != self.group.key():
                raise ShapeMismatchError("martingale entries live on one group")

    @property
    def final(self) -> GridFunction:
        return self.entries[-1]

    def check_consistency(self, tol: float = 1e-12) -> float:
        """Max deviation of coset averaging between consecutive entries."""
        worst = 0.0
        for i in range(len(self.entries) - 1):
            proj = project_to_level(self.entries[i + 1], self.levels[i])
            worst = max(worst, float(np.abs(proj.values - self.entries[i].values).max()))
        return worst


def regular_martingale(f: GridFunction, levels: Sequence[int] | None = None) -> StepMartingale:
    """Martingale of coset averages (S_{M_0} f, S_{M_1} f, ..., f)."""
    if levels is None:
        levels = list(range(f.resolution + 1))
    entries = tuple(project_to_level(f, n) for n in levels)
    return StepMartingale(group=f.group, levels=tuple(levels), entries=entries)


def maximal_function(mart: StepMartingale) -> GridFunction:
    """f* = sup_i |f^(n_i)| at the finest resolution."""
    top = mart.levels[-1]
    out = np.zeros(mart.group.order(top))
    for e in mart.entries:
        np.maximum(out, np.abs(embed(e, top).values), out=out)
    return GridFunction(mart.group, top, out.astype(np.complex128))


def hardy_quasinorm(mart: StepMartingale, p: float) -> float:
    """||f||_{H_p} = ||f*||_p in maximal-function form."""
    return lp_norm(maximal_function(mart), p)


def hardy_quasinorm_fn(f: GridFunction, p: float) -> float:
    """H_p quasi-norm of the regular martingale generated by f."""
    return hardy_quasinorm(regular_martingale(f), p)


# ---------------------------------------------------------------------------
# Moduli of continuity and best approximation
# ---------------------------------------------------------------------------

def modulus(f: GridFunction, p: float, n: int) -> float:
    """omega_p(1/M_n, f) = sup over shifts h in I_n of ||f(.-h) - f||_p.

    Shifts representable on the grid have zero digits below position n,
    i.e. flat indices h = H * M_n; the supremum enumerates all of them.
    """
    if not 0 <= n <= f.resolution:
        raise RangeError(f"level {n} outside 0..{f.resolution}")
    g = f.group
    Mn = g.M[n]
    MN = g.order(f.resolution)
    best = 0.0
    for H in range(MN // Mn):
        h = H * Mn
        if h == 0:
            continue
        best = max(best, lp_norm(f.with_values(shift(f, h).values - f.values), p))
    return best


def tail_martingale(mart: StepMartingale, n: int) -> StepMartingale:
    """Martingale of f - S_{M_n} f: zero up to level n, f^(k) - f^(n) above.

    The reference entry at level n is interpolated by coset averaging when n
    is not one of the stored levels.
    """
    top = mart.levels[-1]
    if not 0 <= n <= top:
        raise RangeError(f"level {n} outside 0..{top}")
    ref = project_to_level(mart.final, n)
    entries = []
    for lvl, e in zip(mart.levels, mart.entries):
        if lvl <= n:
            entries.append(GridFunction(mart.group, lvl, np.zeros(mart.group.order(lvl))))
        else:
            entries.append(e.with_values(e.values - embed(ref, lvl).values))
    return StepMartingale(group=mart.group, levels=mart.levels, entries=tuple(entries))


def modulus_hp(mart: StepMartingale, p: float, n: int) -> float:
    """omega_{H_p}(1/M_n, f) = ||f - S_{M_n} f||_{H_p} via the tail martingale."""
    return hardy_quasinorm(tail_martingale(mart, n), p)


def best_approx_l2(f: GridFunction, n: int) -> float:
    """E_n(f, L_2): exact tail energy (sum_{k>=n} |f^(k)|^2)^(1/2)."""
    MN = f.group.order(f.resolution)
    if not 0 <= n <= MN:
        raise RangeError(f"order {n} outside 0..{MN}")
    c = transform_forward(f).coeffs
    return float(np.sqrt((np.abs(c[n:]) ** 2).sum()))


def best_approx_bounds(f: GridFunction, p: float, n: int) -> tuple[float, float]:
    """Bracket for E_n(f, L_p) at n = M_j: [err/2, err] with err = ||f - S_{M_j} f||_p.

    Only block orders n = M_j are supported for p != 2; other orders have no
    grid-exact bracket here.
    """
    if p == 2:
        e = best_approx_l2(f, n)
        return (e, e)
    levels = [j for j in range(f.resolution + 1) if f.group.M[j] == n]
    if not levels:
        raise DomainError("bracket defined only at block orders n = M_j for p != 2")
    err = lp_norm(f.with_values(f.values - conditional_expectation(f, levels[0]).values), p)
    return (err / 2.0, err)


# ---------------------------------------------------------------------------
# Atoms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Atom:
    """p-atom: mean-zero on its support coset, sup-bounded by mu(I)^(-1/p)."""

    p: float
    level: int
    base: int
    values: GridFunction

    @property
    def support_measure(self) -> float:
        return 1.0 / self.values.group.M[self.level]


def make_atom(
    p: float,
    level: int,
    base: int,
    values: GridFunction,
    tol: float = 1e-12,
) -> Atom:
    """Validate and build a p-atom supported on I_level(base).

    Raises AtomSupportError / AtomMeanError / AtomBoundError with the
    violated clause.
    """
    if not 0 < p <= 1:
        raise DomainError("atoms are defined for 0 < p <= 1")
    g = values.group
    if not 0 <= level <= values.resolution:
        raise RangeError("support level outside the grid resolution")
    idx = coset_indices(g, values.resolution, level, base)
    mask = np.zeros(g.order(values.resolution), dtype=bool)
    mask[idx] = True
    outside = np.abs(values.values[~mask])
    if outside.size and outside.max() > 0.0:
        raise AtomSupportError("atom has mass outside its support interval")
    mean = values.values[mask].sum() / g.order(values.resolution)
    if abs(mean) > tol:
        raise AtomMeanError(f"atom mean over support is {mean}, not 0")
    bound = g.M[level] ** (1.0 / p)
    supnorm = float(np.abs(values.values).max())
    if supnorm > bound * (1 + 1e-12):
        raise AtomBoundError(f"sup norm {supnorm} exceeds mu(I)^(-1/p) = {bound}")
    return Atom(p=p, level=level, base=base, values=values)


def atom_martingale(
    coeffs: Sequence[tuple[float, Atom]],
    levels: Sequence[int],
    p: float | None = None,
) -> tuple[StepMartingale, float]:
    """Martingale f^(n) = sum_k lam_k S_{M_n} a_k over a finite atom list.

    Returns the martingale and the quasi-norm surrogate sum_k |lam_k|^p
    (p taken from the first atom unless given).
    """
    if not coeffs:
        raise InvalidParamsError("need at least one (coefficient, atom) pair")
    g = coeffs[0][1].values.group
    pp = p if p is not None else coeffs[0][1].p
    top = max(levels)
    total = np.zeros(g.order(top), dtype=np.complex128)
    for lam, atom in coeffs:
        total += lam * embed(atom.values, top).values
    full = GridFunction(g, top, total)
    entries = tuple(project_to_level(full, n) for n in levels)
    mart = StepMartingale(group=g, levels=tuple(levels), entries=entries)
    surrogate = float(sum(abs(lam) ** pp for lam, _ in coeffs))
    return mart, surrogate


# ---------------------------------------------------------------------------
# Counterexample generators
# ---------------------------------------------------------------------------

COUNTEREXAMPLE_KINDS = ("strong-partial-sums", "strong-fejer", "hp-blocks")


def _default_phi(n: int) -> float:
    return max(1.0, math.log(math.log(max(float(n), 3.0))))


def block_coefficients(
    g: GroupSpec,
    kind: str,
    alphas: Sequence[int],
    rank: int,
    p: float = 0.5,
    phi: Callable[[int], float] | None = None,
) -> np.ndarray:
    """Expected block-constant spectrum of the counterexample martingales.

    strong-partial-sums: c_k = phi(2 M_a)^(1/2) / log^(1/2) M_a on
        [M_a, 2M_a); strong-fejer: c_k = M_a * phi(2 M_a) / log M_a on the
        same blocks; hp-blocks: c_k = M_a^(1/p-1)/a on [M_a, M_{a+1}).
    """
    phi = phi or _default_phi
    c = np.zeros(g.order(rank), dtype=np.complex128)
    for a in alphas:
        Ma = g.M[a]
        if kind == "strong-partial-sums":
            lam = math.sqrt(phi(2 * Ma)) / math.sqrt(math.log(Ma))
            c[Ma:2 * Ma] = lam
        elif kind == "strong-fejer":
            lam = phi(2 * Ma) / math.log(Ma)
            c[Ma:2 * Ma] = Ma * lam
        elif kind == "hp-blocks":
            c[Ma:g.M[a + 1]] = Ma ** (1.0 / p - 1.0) / a
        else:
            raise InvalidParamsError(f"unknown counterexample kind {kind!r}")
    return c


def counterexample(
    g: GroupSpec,
    kind: str,
    alphas: Sequence[int],
    rank: int,
    p: float = 0.5,
    phi: Callable[[int], float] | None = None,
    levels: Sequence[int] | None = None,
) -> StepMartingale:
    """Finite martingale with the designated block-constant spectrum.

    The atoms behind each kind are scaled Dirichlet-block differences, so
    the spectrum is exactly constant on each block; the constructor builds
    the spectrum directly and the atom route is exercised in tests.
    """
    alphas = list(alphas)
    if not alphas or any(a2 <= a1 for a1, a2 in zip(alphas, alphas[1:])) or alphas[0] < 1:
        raise InvalidParamsError("alphas must be strictly increasing and >= 1")
    if kind == "hp-blocks" and not 0 < p < 1:
        raise InvalidParamsError("hp-blocks requires 0 < p < 1")
    needed = alphas[-1] + 1
    if rank < needed:
        raise InvalidParamsError(f"rank {rank} cannot hold blocks up to level {needed}")
    if rank > g.levels:
        raise RangeError(f"rank {rank} exceeds group levels {g.levels}")
    coeffs = block_coefficients(g, kind, alphas, rank, p=p, phi=phi)
    from .spectral import transform_inverse

    full = transform_inverse(Spectrum(g, rank, coeffs))
    if levels is None:
        levels = list(range(1, rank + 1))
    entries = tuple(project_to_level(full, n) for n in levels)
    return StepMartingale(group=g, levels=tuple(levels), entries=entries)


def gap_report(g: GroupSpec, alphas: Sequence[int], p: float) -> dict:
    """Check the block-gap conditions behind the hp-blocks construction.

    Conditions: summability sum 1/a_k^p (finite here by construction),
    lambda * sum_{eta<k} M_eta^(1/p)/a_eta < M_k^(1/p)/a_k, and
    32*lambda*M_{k-1}^(1/p)/a_{k-1} < M_k^(1/p-2)/a_k.  Reported, never
    enforced: at desk scale the second family typically fails.
    """
    lam = g.lam
    rows = []
    for i, a in enumerate(alphas):
        row = {"alpha": a, "sum_inv_p": sum(1.0 / aa**p for aa in alphas[: i + 1])}
        if i >= 1:
            prev = alphas[:i]
            lhs = lam * sum(g.M[e] ** (1.0 / p) / e for e in prev)
            row["growth_ok"] = lhs < g.M[a] ** (1.0 / p) / a
            lhs2 = 32 * lam * g.M[alphas[i - 1]] ** (1.0 / p) / alphas[i - 1]
            row["separation_ok"] = lhs2 < g.M[a] ** (1.0 / p - 2.0) / a
        rows.append(row)
    return {"p": p, "rows": rows}
