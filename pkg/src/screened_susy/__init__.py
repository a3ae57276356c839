"""Bound states of exponential-cosine screened Coulomb potentials.

A SUSY-hierarchy variational solver for the screened Coulomb family
(hermitian, non-PT and PT non-Hermitian variants), cross-validated by an
independent Numerov shooting oracle.  Internal units: hbar = m = 1 with
H = -1/2 d^2/dr^2 + l(l+1)/(2 r^2) + V(r).
"""

from .hierarchy import (
    EnergyReport,
    NoBoundStateError,
    SuperpotentialSpec,
    closed_form_energy,
    effective_potential,
    ground_wavefunction,
    hierarchy_energies,
    pair_energy,
    part_ground_energy,
    partner_potential,
    riccati_residual,
    superpotential,
    superpotential_asymptote,
    superpotential_prime,
    yukawa_energy,
)
from .oracle import (
    OracleResult,
    RadialProblem,
    UnboundLevelError,
    numerov_sweep,
    rayleigh_quotient,
    solve_level,
    spectrum,
)
from .potentials import (
    HERMITIAN,
    NON_PT,
    PT,
    ComplexScreening,
    RadialGrid,
    ScreeningParams,
    eval_potential,
    hermiticity_residual,
    part_potential,
    pt_reflection_residual,
    split_conjugate_parts,
)
from .variational import (
    QuadratureConvergenceError,
    QuadratureSpec,
    TrialFamily,
    minimize,
    norm_integral,
    part_energy_functional,
    total_energy,
    trial_psi,
    trial_psi_deriv,
)

__version__ = "0.1.0"

__all__ = [
    "ComplexScreening", "EnergyReport", "HERMITIAN", "NON_PT", "NoBoundStateError",
    "OracleResult", "PT", "QuadratureConvergenceError", "QuadratureSpec",
    "RadialGrid", "RadialProblem", "ScreeningParams", "SuperpotentialSpec",
    "TrialFamily", "UnboundLevelError", "closed_form_energy", "effective_potential",
    "eval_potential", "ground_wavefunction", "hermiticity_residual",
    "hierarchy_energies", "minimize", "norm_integral", "numerov_sweep",
    "pair_energy", "part_energy_functional", "part_ground_energy",
    "part_potential", "partner_potential", "pt_reflection_residual",
    "rayleigh_quotient", "riccati_residual", "solve_level", "spectrum",
    "split_conjugate_parts", "superpotential", "superpotential_asymptote",
    "superpotential_prime", "total_energy", "trial_psi", "trial_psi_deriv",
    "yukawa_energy",
]
