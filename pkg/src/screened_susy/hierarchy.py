"""Superpotential ansatz, partner potentials and closed-form pair energies.

For one conjugate part with screening parameter a the ansatz is

    W(r) = -(l+1) * A * e(r)/(1 - e(r)) + k,      k = g/(l+1) - a/2,

where e(r) and the amplitude A depend on the variant:

    hermitian             e(r) = e^{-a r},   A = a
    non-pt-non-hermitian  e(r) = e^{-a r},   A = i a
    pt-non-hermitian      e(r) = e^{-i a r}, A = a

The decaying term is the Hulthen-style replacement of e^{-a r}/r, which makes
the factorization exact for the effective potential

    V_eff(r) = (W^2 - W')/2 + E0,

whose nodeless eigenfunction is exp(-int W) with energy E0 = -k^2/2, fixed by
V_eff -> 0 at infinity.  The SUSY partner is (W^2 + W')/2 + E0 and shares the
spectrum of V_eff except for that lowest level.

Summing -k^2/2 over the two conjugate parts (unit part coupling, g = 1) gives
the closed-form pair energy; for the hermitian variant this collapses to

    E = -(q/2) [ 1/(l+1)^2 + (lam^2 - mu^2)/4 - lam/(l+1) ]   at q = 2,

with the Yukawa special case E = -(q/2) [1/(l+1) - lam/2]^2 at mu = 0.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from .potentials import HERMITIAN, NON_PT, PT, VARIANTS, ComplexScreening, RadialGrid, ScreeningParams, split_conjugate_parts


class NoBoundStateError(ValueError):
    """Raised when the normalizability restriction Re(g/(l+1) - a/2) > 0 fails."""


@dataclass(frozen=True)
class SuperpotentialSpec:
    """One conjugate part of the hierarchy: screening a, channel l, coupling g."""

    a: complex
    l: int = 0
    g: float = 1.0
    variant: str = HERMITIAN

    def __post_init__(self):
        a = self.a.a if isinstance(self.a, ComplexScreening) else complex(self.a)
        object.__setattr__(self, "a", a)
        if self.l < 0 or int(self.l) != self.l:
            raise ValueError("angular momentum l must be a non-negative integer")
        if self.g <= 0:
            raise ValueError("part coupling g must be positive")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.variant == PT:
            if abs(a.imag) > 0:
                raise ValueError("PT variant takes a real oscillation rate")
        elif a.real < 0:
            raise ValueError("decaying envelope requires Re(a) >= 0")

    @property
    def asymptote(self) -> complex:
        return self.g / (self.l + 1) - self.a / 2

    @property
    def is_bound(self) -> bool:
        return self.asymptote.real > 0

    def require_bound(self):
        k = self.asymptote
        if k.real <= 0:
            raise NoBoundStateError(
                f"no bound state: restriction Re(g/(l+1) - a/2) > 0 violated "
                f"(g={self.g}, l={self.l}, a={self.a}, Re k={k.real:.6g})"
            )

    def _amp_rate(self):
        """Amplitude A of the decaying term and rate d of e(r) = e^{-d r}."""
        if self.variant == NON_PT:
            return 1j * self.a, self.a
        if self.variant == PT:
            return self.a, 1j * self.a
        return self.a, self.a


def _envelope(r, s: SuperpotentialSpec):
    _, d = s._amp_rate()
    return np.exp(-d * np.asarray(r))


def superpotential(r, s: SuperpotentialSpec, on_pole: str = "raise"):
    """W(r) for r > 0.  Poles of 1/(1 - e(r)) either raise or map to inf."""
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0):
        raise ValueError("radius must be positive")
    A, _ = s._amp_rate()
    k = s.asymptote
    e = _envelope(r_arr, s)
    denom = 1.0 - e
    singular = np.abs(denom) < 1e-12
    if np.any(singular):
        if on_pole == "raise":
            raise ZeroDivisionError("superpotential pole: 1 - e(r) vanished on input")
        denom = np.where(singular, 1.0, denom)
    w = -(s.l + 1) * A * e / denom + k
    if np.any(singular):
        w = np.where(singular, complex(np.inf, 0.0), w)
    return w if np.ndim(r) else complex(w)


def superpotential_prime(r, s: SuperpotentialSpec):
    """Analytic dW/dr = (l+1) A d e(r)/(1 - e(r))^2."""
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0):
        raise ValueError("radius must be positive")
    A, d = s._amp_rate()
    e = _envelope(r_arr, s)
    w = (s.l + 1) * A * d * e / (1.0 - e) ** 2
    return w if np.ndim(r) else complex(w)


def superpotential_asymptote(s: SuperpotentialSpec) -> complex:
    """r -> infinity limit k = g/(l+1) - a/2 (the decaying term drops out)."""
    return s.asymptote


def part_ground_energy(s: SuperpotentialSpec) -> complex:
    """Ground energy -k^2/2 of one part, requiring the bound restriction."""
    s.require_bound()
    return -s.asymptote**2 / 2


def effective_potential(r, s: SuperpotentialSpec, e0):
    """(W^2 - W')/2 + e0 in simplified analytic form.

    For the hermitian variant this is the Hulthen-like attractive term, the
    approximated centrifugal term and the constant k^2/2:

        -g a e/(1-e) + [l(l+1)/2] a^2 e^2/(1-e)^2 + k^2/2 + e0.
    """
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0):
        raise ValueError("radius must be positive")
    A, d = s._amp_rate()
    k = s.asymptote
    p = s.l + 1
    e = _envelope(r_arr, s)
    w = e / (1.0 - e)
    c2 = p * A * (p * A - d) / 2
    c1 = -p * A * (2 * k + d) / 2
    v = c2 * w**2 + c1 * w + k**2 / 2 + e0
    if s.variant == HERMITIAN and abs(complex(e0).imag) == 0 and s.a.imag == 0:
        v = v.real
    return v if np.ndim(r) else complex(v)


def partner_potential(r, s: SuperpotentialSpec, e0):
    """SUSY partner (W^2 + W')/2 + e0 = effective_potential + W'."""
    return effective_potential(r, s, e0) + superpotential_prime(r, s)


def riccati_residual(s: SuperpotentialSpec, e0, grid: RadialGrid, w_offset: float = 0.0) -> float:
    """max | V_eff - [((W + w_offset)^2 - W')/2 + e0] | over the grid.

    With w_offset = 0 the two sides are the same identity evaluated along
    different arithmetic paths, so the residual is at rounding level; this
    guards the analytic-derivative implementation.  A nonzero offset injects a
    known defect and must produce a correspondingly large residual.
    """
    r = grid.points()
    v_eff = effective_potential(r, s, e0)
    w = superpotential(r, s) + w_offset
    wp = superpotential_prime(r, s)
    raw = (w**2 - wp) / 2 + e0
    return float(np.max(np.abs(v_eff - raw)))


def ground_wavefunction(r, s: SuperpotentialSpec):
    """Unnormalized nodeless eigenfunction (1 - e(r))^{l+1} e^{-k r}.

    Equals exp(-int W) for the hermitian variant; the complexified variants
    keep the real power l+1 so the function still vanishes at the origin.
    """
    s.require_bound()
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr < 0):
        raise ValueError("radius must be non-negative")
    e = _envelope(r_arr, s)
    psi = (1.0 - e) ** (s.l + 1) * np.exp(-s.asymptote * r_arr)
    if s.variant == HERMITIAN and s.a.imag == 0:
        psi = psi.real
    return psi if np.ndim(r) else psi[()]


def closed_form_energy(q: float, lam: float, mu: float, l: int) -> float:
    """Pair energy -(q/2)[1/(l+1)^2 + (lam^2 - mu^2)/4 - lam/(l+1)]."""
    n = l + 1
    return -(q / 2) * (1.0 / n**2 + (lam**2 - mu**2) / 4 - lam / n)


def yukawa_energy(q: float, lam: float, l: int) -> float:
    """mu = 0 collapse: -(q/2)[1/(l+1) - lam/2]^2."""
    return -(q / 2) * (1.0 / (l + 1) - lam / 2) ** 2


@dataclass(frozen=True)
class EnergyReport:
    """Method-tagged energy value.

    convention  'per-part' (one conjugate part at unit coupling) or
                'pair-sum' (real sum over both parts, twice the per-part
                value for conjugate pairs)
    method      'closed-form' | 'asymptote' | 'variational' | 'oracle'
    """

    energy: float
    convention: str
    method: str
    v_star: float | None = None
    residual: float | None = None
    flag: str = ""

    def __post_init__(self):
        if not np.isfinite(self.energy):
            raise ValueError("energy must be finite")
        if self.convention not in ("per-part", "pair-sum"):
            raise ValueError(f"unknown convention {self.convention!r}")
        if self.method not in ("closed-form", "asymptote", "variational", "oracle"):
            raise ValueError(f"unknown method {self.method!r}")


def pair_energy(p: ScreeningParams, l: int) -> EnergyReport:
    """Sum of the two conjugate-part ground energies at unit part coupling.

    The imaginary parts cancel exactly for conjugate parts (and vanish for the
    PT parametrization, whose rates are real); this is asserted, not assumed.
    """
    a1, a2 = split_conjugate_parts(p)
    total = complex(0)
    for a in (a1, a2):
        spec = SuperpotentialSpec(a=a, l=l, g=1.0, variant=p.variant)
        total += part_ground_energy(spec)
    if abs(total.imag) > 1e-13 * max(1.0, abs(total.real)):
        raise AssertionError(f"conjugate-part energies failed to cancel: Im = {total.imag:g}")
    return EnergyReport(energy=total.real, convention="pair-sum", method="asymptote")


def hierarchy_energies(p: ScreeningParams, l_max: int):
    """pair_energy for l = 0..l_max, truncated at the first unbound channel."""
    if l_max < 0:
        raise ValueError("l_max must be non-negative")
    reports = []
    for l in range(l_max + 1):
        try:
            reports.append(pair_energy(p, l))
        except NoBoundStateError as err:
            warnings.warn(f"hierarchy truncated at l={l}: {err}", stacklevel=2)
            break
    return reports
