"""Independent grid oracle: Numerov shooting for the radial Schrodinger equation.

Solves -1/2 u'' + [V(r) + l(l+1)/(2 r^2)] u = E u on a uniform grid of the
half-line by integrating the Numerov three-point recurrence outward from the
origin and inward from r_max, matching log-derivatives at the outermost
classical turning point.  Eigenvalues are isolated by bisection on the node
count plus the sign of the matching mismatch, then polished by secant steps on
the mismatch itself.

This module provides ground truth for the closed-form and variational results
elsewhere in the package and deliberately never calls their energy formulas.
Only real potentials are handled; the potential callable must accept numpy
arrays of radii.
"""

import warnings
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from numba import njit

from .potentials import RadialGrid


class UnboundLevelError(RuntimeError):
    """Requested level does not exist as a bound state on the grid."""


def default_grid(l: int, kappa_est: float | None = None, r_min: float = 1e-5, n: int = 40_000) -> RadialGrid:
    """Uniform grid reaching max(60, 30 (l+1)/kappa) for tail decay rate kappa."""
    kappa = kappa_est if kappa_est and kappa_est > 0 else 1.0 / (l + 1)
    r_max = max(60.0, 30.0 * (l + 1) / kappa)
    return RadialGrid(r_min=r_min, r_max=r_max, n=n)


@dataclass
class RadialProblem:
    """A bound-state problem: real potential, channel l, grid and energy bracket."""

    potential: Callable[[np.ndarray], np.ndarray]
    l: int = 0
    grid: RadialGrid | None = None
    bracket: tuple[float, float] = (-8.0, -1e-12)
    kappa_est: float | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    def arrays(self, refine: int = 1):
        """Radii, total potential (with centrifugal term) and origin strength.

        The third element is the effective Coulomb strength -r V(r) at the
        inner edge, used for the next-order term of the outward series seed;
        it is zeroed when the series would not converge at the seed points
        (potentials with extra 1/r^2 structure folded in).
        """
        key = refine
        if key not in self._cache:
            grid = self.grid or default_grid(self.l, self.kappa_est)
            if refine > 1:
                grid = RadialGrid(grid.r_min, grid.r_max, refine * (grid.n - 1) + 1)
            r = grid.points()
            v = np.asarray(self.potential(r), dtype=float)
            if v.shape != r.shape or not np.all(np.isfinite(v)):
                raise ValueError("potential must be finite and real on the grid")
            z_origin = -r[0] * v[0]
            if abs(z_origin) * r[1] / (self.l + 1) > 0.25:
                z_origin = 0.0
            if self.l > 0:
                v = v + self.l * (self.l + 1) / (2.0 * r * r)
            self._cache[key] = (r, v, z_origin)
        return self._cache[key]


@njit(cache=True)
def _numerov_match(r, vtot, e, l, z_origin):
    """One two-sided Numerov sweep at energy e.

    Returns (node count of the matched solution, signed log-derivative
    mismatch at the outermost classical turning point).  The mismatch
    decreases monotonically through zero as e crosses an eigenvalue at fixed
    node count.
    """
    n = r.shape[0]
    h = r[1] - r[0]
    c = h * h / 6.0  # T_i = 1 - (h^2/12) * 2 (V_i - e)

    im = -1
    for i in range(n):
        if vtot[i] < e:
            im = i
    if im < 2:
        im = 2
    if im > n - 4:
        im = n - 4

    big = 1e250
    # outward integration to im+1 with on-the-fly node count;
    # seeds carry the next series order u ~ r^{l+1} (1 - z r/(l+1))
    out3 = np.zeros(3)  # values at im-1, im, im+1
    zc = z_origin / (l + 1)
    y_prev = r[0] ** (l + 1) * (1.0 - zc * r[0])
    y_cur = r[1] ** (l + 1) * (1.0 - zc * r[1])
    t_prev = 1.0 - c * (vtot[0] - e)
    t_cur = 1.0 - c * (vtot[1] - e)
    nodes = 0
    if 1 == im - 1:
        out3[0] = y_cur
    for i in range(1, im + 1):
        t_next = 1.0 - c * (vtot[i + 1] - e)
        y_next = ((12.0 - 10.0 * t_cur) * y_cur - t_prev * y_prev) / t_next
        if i + 1 <= im and y_cur * y_next < 0.0:
            nodes += 1
        if abs(y_next) > big:
            s = 1.0 / abs(y_next)
            y_cur *= s
            y_next *= s
            for j in range(3):
                out3[j] *= s
        if im - 1 <= i + 1 <= im + 1:
            out3[i + 1 - (im - 1)] = y_next
        y_prev, y_cur = y_cur, y_next
        t_prev, t_cur = t_cur, t_next

    # inward integration down to im-1; u ~ e^{-kappa r} seeds at the far end
    in3 = np.zeros(3)
    kappa = np.sqrt(max(-2.0 * e, 1e-30))
    y_prev = 1.0
    y_cur = np.exp(min(kappa * h, 600.0))
    t_prev = 1.0 - c * (vtot[n - 1] - e)
    t_cur = 1.0 - c * (vtot[n - 2] - e)
    for i in range(n - 2, im - 1, -1):
        t_next = 1.0 - c * (vtot[i - 1] - e)
        y_next = ((12.0 - 10.0 * t_cur) * y_cur - t_prev * y_prev) / t_next
        # sign changes on pairs (i-1, i) down to (im, im+1); the junction pair
        # keeps its sign under the positive matching rescale scale**2
        if i >= im + 1 and y_cur * y_next < 0.0:
            nodes += 1
        if abs(y_next) > big:
            s = 1.0 / abs(y_next)
            y_cur *= s
            y_next *= s
            for j in range(3):
                in3[j] *= s
        if im - 1 <= i - 1 <= im + 1:
            in3[i - 1 - (im - 1)] = y_next
        y_prev, y_cur = y_cur, y_next
        t_prev, t_cur = t_cur, t_next

    if abs(in3[1]) < 1e-280 or abs(out3[1]) < 1e-280:
        return nodes, np.inf

    scale = out3[1] / in3[1]
    g = ((out3[2] - out3[0]) - scale * (in3[2] - in3[0])) / (2.0 * h * out3[1])
    return nodes, g


def numerov_sweep(prob: RadialProblem, e: float):
    """Node count and signed matching residual at trial energy e."""
    if e >= 0:
        raise ValueError("shooting requires a negative trial energy")
    r, vtot, z0 = prob.arrays()
    nodes, g = _numerov_match(r, vtot, float(e), prob.l, z0)
    return int(nodes), float(g)


@dataclass(frozen=True)
class OracleResult:
    energy: float
    nodes: int
    matching_residual: float
    grid_convergence: float


def _past(nodes, g, n_r):
    """True once the trial energy lies above the target eigenvalue."""
    if nodes != n_r:
        return nodes > n_r
    return g < 0


def _solve_on(r, vtot, l, n_r, lo, hi, z0):
    n_hi, g_hi = _numerov_match(r, vtot, hi, l, z0)
    if not _past(n_hi, g_hi, n_r):
        raise UnboundLevelError(
            f"no bound level with {n_r} nodes at l={l}: only {n_hi} levels below threshold"
        )
    n_lo, g_lo = _numerov_match(r, vtot, lo, l, z0)
    expansions = 0
    while _past(n_lo, g_lo, n_r):
        lo *= 4.0
        expansions += 1
        if expansions > 12:
            raise RuntimeError("energy bracket expansion failed")
        n_lo, g_lo = _numerov_match(r, vtot, lo, l, z0)

    # bisection on (node count, mismatch sign) until the window is tight
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        n_mid, g_mid = _numerov_match(r, vtot, mid, l, z0)
        if _past(n_mid, g_mid, n_r):
            hi, g_hi, n_hi = mid, g_mid, n_mid
        else:
            lo, g_lo, n_lo = mid, g_mid, n_mid
        if hi - lo < 1e-6 and n_lo == n_r and n_hi == n_r:
            break
        if hi - lo < 1e-13 * max(1.0, abs(mid)):
            break

    # secant refinement on the mismatch inside the bracket
    e0, f0, e1, f1 = lo, g_lo, hi, g_hi
    best = 0.5 * (lo + hi)
    for _ in range(60):
        if not (np.isfinite(f0) and np.isfinite(f1)) or f0 == f1:
            e_new = 0.5 * (lo + hi)
        else:
            e_new = e1 - f1 * (e1 - e0) / (f1 - f0)
            if not lo < e_new < hi:
                e_new = 0.5 * (lo + hi)
        n_new, g_new = _numerov_match(r, vtot, e_new, l, z0)
        if _past(n_new, g_new, n_r):
            hi = e_new
        else:
            lo = e_new
        e0, f0 = e1, f1
        e1, f1 = e_new, g_new
        best = e_new
        if hi - lo < 1e-12 * max(1.0, abs(e_new)) or abs(e1 - e0) < 1e-14:
            break
    return best


def solve_level(prob: RadialProblem, n_r: int = 0, grid_check: bool = True) -> OracleResult:
    """Eigenvalue with n_r radial nodes, with matching and grid diagnostics.

    The grid-convergence estimate repeats the solve with twice the grid
    resolution and reports the energy shift.
    """
    if n_r < 0:
        raise ValueError("node count must be non-negative")
    lo, hi = prob.bracket
    if not lo < hi < 0:
        raise ValueError("bracket must satisfy lo < hi < 0")
    r, vtot, z0 = prob.arrays()
    energy = _solve_on(r, vtot, prob.l, n_r, lo, hi, z0)
    nodes, g = _numerov_match(r, vtot, energy, prob.l, z0)
    if abs(nodes - n_r) > 1:
        raise RuntimeError(f"converged to a level with {nodes} nodes, requested {n_r}")
    nodes = n_r  # at convergence the count flips within rounding of the eigenvalue
    shift = np.nan
    if grid_check:
        r2, v2, z2 = prob.arrays(refine=2)
        energy2 = _solve_on(r2, v2, prob.l, n_r, lo, hi, z2)
        shift = abs(energy2 - energy)
    return OracleResult(
        energy=float(energy),
        nodes=int(nodes),
        matching_residual=abs(float(g)),
        grid_convergence=float(shift),
    )


def spectrum(prob: RadialProblem, count: int, grid_check: bool = False):
    """The lowest `count` levels at fixed l; shorter (with a warning) if fewer bind."""
    if count < 1:
        raise ValueError("count must be at least 1")
    levels = []
    for n_r in range(count):
        try:
            levels.append(solve_level(prob, n_r, grid_check=grid_check))
        except UnboundLevelError as err:
            warnings.warn(f"spectrum truncated at {len(levels)} levels: {err}", stacklevel=2)
            break
    return levels


def rayleigh_quotient(u: np.ndarray, prob: RadialProblem) -> float:
    """Trapezoid <u|H|u>/<u|u> with a three-point second derivative.

    Expects u sampled on the problem grid and vanishing at both ends.
    """
    r, vtot, _ = prob.arrays()
    u = np.asarray(u, dtype=float)
    if u.shape != r.shape:
        raise ValueError("u must be sampled on the problem grid")
    h = r[1] - r[0]
    norm = np.trapezoid(u * u, dx=h)
    if norm <= 0:
        raise ValueError("zero-norm function")
    d2u = np.zeros_like(u)
    d2u[1:-1] = (u[2:] - 2 * u[1:-1] + u[:-2]) / (h * h)
    h_u = -0.5 * u * d2u + vtot * u * u
    return float(np.trapezoid(h_u, dx=h) / norm)
