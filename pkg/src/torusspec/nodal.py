"""Nodal domains of explicit torus eigenfunctions on a periodic grid.

An eigenfunction with norm s is a finite trigonometric sum over integer
vectors (m, n) with m^2 + n^2 = s.  Nodal domains (connected components of
the complement of the zero set) are approximated by sign-respecting
4-connected components of the sampled sign grid, with wraparound in both
axes.  A count is only accepted if it is stable under one grid refinement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import isqrt

import numpy as np
from scipy import ndimage

from .bessel import faber_krahn_constant

DEFAULT_GRID = 256
DEFAULT_ZERO_TOL = 1e-9
DEFAULT_GEO_TOL = 0.05
AREA_HYPOTHESIS = 1.0 / math.pi


class DegenerateSampleError(ValueError):
    """Every grid cell fell inside the zero tolerance."""


class RefinementError(RuntimeError):
    """Nodal count changed between grid size N and 2N."""


@dataclass(frozen=True)
class Eigenfunction:
    """Finite trigonometric combination within a single eigenspace.

    terms: (m, n, cos_coeff, sin_coeff) with m^2 + n^2 = s, one term per
    unordered {+-(m, n)} class of integer vectors.
    """

    s: int
    terms: tuple[tuple[int, int, float, float], ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("eigenfunction needs at least one term")
        for m, n, _, _ in self.terms:
            if m * m + n * n != self.s:
                raise ValueError(f"term ({m},{n}) has norm {m*m+n*n}, expected {self.s}")
        if all(c == 0.0 and d == 0.0 for _, _, c, d in self.terms):
            raise ValueError("all coefficients are zero")


def constant_eigenfunction() -> Eigenfunction:
    return Eigenfunction(s=0, terms=((0, 0, 1.0, 0.0),))


def single_mode(m: int, n: int, cos_coeff: float = 0.0, sin_coeff: float = 1.0) -> Eigenfunction:
    return Eigenfunction(s=m * m + n * n, terms=((m, n, cos_coeff, sin_coeff),))


def mode_classes(s: int) -> list[tuple[int, int]]:
    """One representative (m, n) per unordered {+-(m, n)} class with norm s."""
    if s == 0:
        return [(0, 0)]
    reps = []
    for m in range(isqrt(s) + 1):
        r = s - m * m
        n = isqrt(r)
        if n * n != r:
            continue
        if m == 0:
            reps.append((0, n))
        elif n == 0:
            reps.append((m, 0))
        else:
            reps.append((m, n))
            reps.append((m, -n))
    if not reps:
        raise ValueError(f"{s} is not a sum of two squares")
    return reps


def random_eigenfunction(s: int, seed: int) -> Eigenfunction:
    """Deterministic-from-seed coefficients, uniform in [-1, 1] over the full basis."""
    reps = mode_classes(s)
    rng = np.random.default_rng(seed)
    coeffs = rng.uniform(-1.0, 1.0, size=(len(reps), 2))
    terms = []
    for (m, n), (c, d) in zip(reps, coeffs):
        if m == 0 and n == 0:
            d = 0.0  # sin term vanishes identically for the constant mode
        terms.append((m, n, float(c), float(d)))
    return Eigenfunction(s=s, terms=tuple(terms))


def evaluate(u: Eigenfunction, x, y):
    """u(x, y); 1-periodic in both arguments. Accepts scalars or arrays."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    total = np.zeros(np.broadcast(x, y).shape)
    for m, n, c, d in u.terms:
        phase = 2.0 * math.pi * (m * x + n * y)
        if c != 0.0:
            total += c * np.cos(phase)
        if d != 0.0:
            total += d * np.sin(phase)
    if total.shape == ():
        return float(total)
    return total


def sample_grid(u: Eigenfunction, grid_size: int) -> np.ndarray:
    """Values of u at the cell centers ((i+1/2)/N, (j+1/2)/N)."""
    coords = (np.arange(grid_size) + 0.5) / grid_size
    x, y = np.meshgrid(coords, coords, indexing="ij")
    return evaluate(u, x, y)


def sign_grid(u: Eigenfunction, grid_size: int, zero_tol: float = DEFAULT_ZERO_TOL) -> np.ndarray:
    vals = sample_grid(u, grid_size)
    vmax = np.max(np.abs(vals))
    if vmax == 0.0:
        raise DegenerateSampleError("sampled eigenfunction is identically zero")
    signs = np.sign(vals).astype(np.int8)
    signs[np.abs(vals) <= zero_tol * vmax] = 0
    if not signs.any():
        raise DegenerateSampleError("every cell fell inside the zero tolerance")
    return signs


@dataclass(frozen=True)
class DomainStats:
    cell_count: int
    area: float
    boundary_edge_count: int
    perimeter_estimate: float
    sign: int


@dataclass(frozen=True)
class NodalDecomposition:
    grid_size: int
    mu: int
    domains: tuple[DomainStats, ...]
    zero_cell_count: int

    def __post_init__(self):
        cells = sum(d.cell_count for d in self.domains) + self.zero_cell_count
        assert cells == self.grid_size**2


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _label_periodic(signs: np.ndarray, wraparound: bool = True) -> np.ndarray:
    """Sign-respecting 4-connected labels; 0 marks zero cells."""
    pos, n_pos = ndimage.label(signs > 0)
    neg, n_neg = ndimage.label(signs < 0)
    labels = np.where(pos > 0, pos, 0) + np.where(neg > 0, neg + n_pos, 0)
    n_labels = n_pos + n_neg
    if not wraparound:
        return labels
    uf = _UnionFind(n_labels + 1)
    # merge across the two periodic seams; positive and negative labels live in
    # disjoint ranges, so same-sign adjacency reduces to a range check
    for a, b in ((labels[0, :], labels[-1, :]), (labels[:, 0], labels[:, -1])):
        mask = (a > 0) & (b > 0) & ((a <= n_pos) == (b <= n_pos))
        for la, lb in set(zip(a[mask].tolist(), b[mask].tolist())):
            uf.union(la, lb)
    roots = np.array([uf.find(i) for i in range(n_labels + 1)])
    return roots[labels]


def _decompose(signs: np.ndarray, grid_size: int) -> NodalDecomposition:
    labels = _label_periodic(signs)
    ids = np.unique(labels)
    ids = ids[ids > 0]
    # compact relabeling so bincount stays small
    remap = np.zeros(labels.max() + 1, dtype=int)
    remap[ids] = np.arange(1, len(ids) + 1)
    lab = remap[labels]
    counts = np.bincount(lab.ravel(), minlength=len(ids) + 1)
    edges = np.zeros(len(ids) + 1, dtype=int)
    for axis, shift in ((0, 1), (0, -1), (1, 1), (1, -1)):
        nb = np.roll(lab, shift, axis=axis)
        mask = (lab > 0) & (nb != lab)
        edges += np.bincount(lab[mask], minlength=len(ids) + 1)
    cell_area = 1.0 / grid_size**2
    domains = []
    for i in range(1, len(ids) + 1):
        cells = lab == i
        s = int(signs[cells][0])
        domains.append(
            DomainStats(
                cell_count=int(counts[i]),
                area=counts[i] * cell_area,
                boundary_edge_count=int(edges[i]),
                perimeter_estimate=edges[i] / grid_size,
                sign=s,
            )
        )
    return NodalDecomposition(
        grid_size=grid_size,
        mu=len(ids),
        domains=tuple(domains),
        zero_cell_count=int(np.sum(labels == 0)),
    )


def count_nodal_domains(
    u: Eigenfunction,
    grid_size: int = DEFAULT_GRID,
    zero_tol: float = DEFAULT_ZERO_TOL,
    check_refinement: bool = True,
) -> NodalDecomposition:
    """Nodal-domain decomposition on an N x N periodic grid.

    The count must agree between N and 2N, otherwise a RefinementError is
    raised and the caller should retry at a finer grid.
    """
    if grid_size < 16:
        raise ValueError("grid_size must be >= 16")
    if zero_tol <= 0:
        raise ValueError("zero_tol must be > 0")
    dec = _decompose(sign_grid(u, grid_size, zero_tol), grid_size)
    if check_refinement:
        fine = _decompose(sign_grid(u, 2 * grid_size, zero_tol), 2 * grid_size)
        if fine.mu != dec.mu:
            raise RefinementError(
                f"nodal count unstable: mu={dec.mu} at N={grid_size}, "
                f"mu={fine.mu} at N={2 * grid_size}"
            )
    return dec


def count_nodal_domains_adaptive(
    u: Eigenfunction,
    grid_size: int = DEFAULT_GRID,
    zero_tol: float = DEFAULT_ZERO_TOL,
    max_grid: int = 2048,
) -> NodalDecomposition:
    """count_nodal_domains with automatic doubling until the count stabilizes."""
    n = grid_size
    while True:
        try:
            return count_nodal_domains(u, n, zero_tol)
        except RefinementError:
            n *= 2
            if n > max_grid:
                raise


@dataclass(frozen=True)
class CourantCheck:
    mu: int
    nu: int
    last_index: int
    satisfied: bool
    courant_sharp: bool


def check_courant(u: Eigenfunction, table, grid_size: int = DEFAULT_GRID) -> CourantCheck:
    """Courant bound at the largest index of u's eigenvalue, plus sharpness."""
    cls = table.class_for_s(u.s)
    dec = count_nodal_domains_adaptive(u, grid_size)
    return CourantCheck(
        mu=dec.mu,
        nu=cls.first_index,
        last_index=cls.last_index,
        satisfied=dec.mu <= cls.last_index,
        courant_sharp=dec.mu == cls.first_index,
    )


@dataclass(frozen=True)
class GeometryCheck:
    domain_id: int
    in_hypothesis: bool
    lhs: float
    rhs: float
    passes: bool


def check_faber_krahn(
    dec: NodalDecomposition, lam: float, geo_tol: float = DEFAULT_GEO_TOL
) -> list[GeometryCheck]:
    """lam * area >= pi*j01^2 (up to grid tolerance) for small nodal domains.

    Each nodal domain of an eigenfunction with eigenvalue lam has first
    Dirichlet eigenvalue lam, so the product is lam * area directly.
    Domains with area > 1/pi are outside the hypothesis, not failures.
    """
    bound = faber_krahn_constant() * (1.0 - geo_tol)
    out = []
    for i, d in enumerate(dec.domains):
        hyp = d.area <= AREA_HYPOTHESIS
        product = lam * d.area
        out.append(
            GeometryCheck(
                domain_id=i,
                in_hypothesis=hyp,
                lhs=product,
                rhs=bound,
                passes=(not hyp) or product >= bound,
            )
        )
    return out


def check_isoperimetric(
    dec: NodalDecomposition, geo_tol: float = DEFAULT_GEO_TOL
) -> list[GeometryCheck]:
    """perimeter^2 >= 4*pi*area (up to grid tolerance) for small nodal domains.

    The perimeter estimator counts boundary edges (taxicab), which upper
    bounds Euclidean length, so a pass is a one-sided sanity screen only.
    """
    out = []
    for i, d in enumerate(dec.domains):
        hyp = d.area <= AREA_HYPOTHESIS
        lhs = d.perimeter_estimate**2
        rhs = 4.0 * math.pi * d.area * (1.0 - geo_tol)
        out.append(
            GeometryCheck(
                domain_id=i,
                in_hypothesis=hyp,
                lhs=lhs,
                rhs=rhs,
                passes=(not hyp) or lhs >= rhs,
            )
        )
    return out
