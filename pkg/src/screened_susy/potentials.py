"""Exponential-cosine screened Coulomb potential and its non-Hermitian variants.

Three members of the family are supported, selected by a variant tag:

    hermitian            V(r) = -(q/r) e^{-lam r} cos(mu r)
    non-pt-non-hermitian V(r) = +(iq/r) e^{-lam r} cos(mu r)
    pt-non-hermitian     V(r) = -(q/r) e^{-i lam r} cos(mu r)

Writing cos as a pair of complex exponentials splits every variant into two
"conjugate" parts -e^{-a r}/r (or +i e^{-a r}/r for the non-PT variant), each
carrying half the coupling.  The part screening parameters returned by
:func:`split_conjugate_parts` are the quantities fed to the superpotential
machinery in :mod:`screened_susy.hierarchy`.

Internal units are hbar = m = 1 with H = -1/2 d^2/dr^2 + l(l+1)/(2r^2) + V(r).
"""

from dataclasses import dataclass

import numpy as np

HERMITIAN = "hermitian"
NON_PT = "non-pt-non-hermitian"
PT = "pt-non-hermitian"
VARIANTS = (HERMITIAN, NON_PT, PT)


@dataclass(frozen=True)
class ScreeningParams:
    """Physical parameters of the screened Coulomb family.

    q    coupling strength (dimensionless, default 2)
    lam  exponential screening rate (inverse length)
    mu   cosine frequency (inverse length)
    """

    q: float = 2.0
    lam: float = 0.0
    mu: float = 0.0
    variant: str = HERMITIAN

    def __post_init__(self):
        if self.q <= 0:
            raise ValueError(f"coupling q must be positive, got {self.q}")
        if self.lam < 0 or self.mu < 0:
            raise ValueError("screening rates lam, mu must be non-negative")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}, expected one of {VARIANTS}")


@dataclass(frozen=True)
class ComplexScreening:
    """Screening parameter of one conjugate part.

    For the hermitian and non-PT variants this is the complex rate lam -+ i*mu
    appearing as e^{-a r}; for the PT variant it is the real rate of an
    oscillatory factor e^{-i a r} (and may be negative).
    """

    a: complex

    def __post_init__(self):
        a = complex(self.a)
        if not (np.isfinite(a.real) and np.isfinite(a.imag)):
            raise ValueError("screening exponent must be finite")
        object.__setattr__(self, "a", a)


@dataclass(frozen=True)
class RadialGrid:
    """Uniform discretization of [r_min, r_max] on the half-line, 0 excluded."""

    r_min: float
    r_max: float
    n: int
    spacing: str = "uniform"

    def __post_init__(self):
        if not 0 < self.r_min < self.r_max:
            raise ValueError("grid requires 0 < r_min < r_max")
        if self.n < 3:
            raise ValueError("grid requires at least 3 points")
        if self.spacing != "uniform":
            raise ValueError(f"unsupported spacing {self.spacing!r}")

    @property
    def step(self) -> float:
        return (self.r_max - self.r_min) / (self.n - 1)

    def points(self) -> np.ndarray:
        return np.linspace(self.r_min, self.r_max, self.n)


def _potential_formula(r, p: ScreeningParams):
    """Raw variant formula, no domain check (used for parity diagnostics)."""
    if p.variant == HERMITIAN:
        return -(p.q / r) * np.exp(-p.lam * r) * np.cos(p.mu * r)
    if p.variant == NON_PT:
        return (1j * p.q / r) * np.exp(-p.lam * r) * np.cos(p.mu * r)
    return -(p.q / r) * np.exp(-1j * p.lam * r) * np.cos(p.mu * r)


def eval_potential(r, p: ScreeningParams):
    """Evaluate the potential at radius r (scalar or array), r > 0.

    Returns real values for the hermitian variant and complex values for the
    two non-Hermitian variants.
    """
    r = np.asarray(r, dtype=float) if np.ndim(r) else float(r)
    if np.any(np.asarray(r) <= 0):
        raise ValueError("radius must be positive")
    return _potential_formula(r, p)


def split_conjugate_parts(p: ScreeningParams):
    """Screening parameters (a1, a2) of the two conjugate parts.

    hermitian / non-PT:  a1 = lam - i*mu, a2 = lam + i*mu  (rates of e^{-a r})
    PT:                  a1 = mu - lam,   a2 = lam + mu    (rates of e^{-i a r})

    The PT parametrization follows the superpotential convention; the literal
    part exponents that reassemble the potential are given by
    :func:`part_exponents`.
    """
    if p.variant == PT:
        return ComplexScreening(p.mu - p.lam), ComplexScreening(p.lam + p.mu)
    return (
        ComplexScreening(p.lam - 1j * p.mu),
        ComplexScreening(p.lam + 1j * p.mu),
    )


def part_exponents(p: ScreeningParams):
    """Literal exponents (e1, e2) such that each part is prefactor*e^{-e r}/r."""
    if p.variant == PT:
        return 1j * (p.lam - p.mu), 1j * (p.lam + p.mu)
    return p.lam - 1j * p.mu, p.lam + 1j * p.mu


def part_potential(r, p: ScreeningParams, part: int):
    """Unit-strength conjugate part, part in {0, 1}.

    The identity (q/2) * (part_potential(r, p, 0) + part_potential(r, p, 1))
    == eval_potential(r, p) holds pointwise for every variant.
    """
    if part not in (0, 1):
        raise ValueError("part must be 0 or 1")
    r = np.asarray(r, dtype=float) if np.ndim(r) else float(r)
    if np.any(np.asarray(r) <= 0):
        raise ValueError("radius must be positive")
    e = part_exponents(p)[part]
    prefactor = 1j if p.variant == NON_PT else -1.0
    return prefactor * np.exp(-e * r) / r


def hermiticity_residual(p: ScreeningParams, grid: RadialGrid) -> float:
    """max |V*(r) - V(r)| over the grid; zero iff the potential is real there."""
    v = eval_potential(grid.points(), p)
    return float(np.max(np.abs(np.conj(v) - v)))


def pt_reflection_residual(p: ScreeningParams, grid: RadialGrid) -> float:
    """max |V*(-r) - V(r)| over the grid.

    Reports the PT defect with the formula continued to negative radii by
    direct substitution.  The 1/r prefactor is odd under parity, so this is
    generally nonzero even for the PT-tagged variant; the value is reported,
    not asserted against.
    """
    r = grid.points()
    v = _potential_formula(r, p)
    v_reflected = _potential_formula(-r, p)
    return float(np.max(np.abs(np.conj(v_reflected) - v)))
