#!/usr/bin/env python3
"""Variational energy over the trial family and its minimization.

Scans the per-part energy functional E(v) for a screened potential, minimizes
it, and shows the variational upper-bound property against the grid oracle.
"""

import numpy as np

from screened_susy import (
    RadialProblem, ScreeningParams, TrialFamily,
    minimize, norm_integral, part_energy_functional, solve_level, trial_psi,
)


def main():
    lam, l = 0.05, 0
    print(f"per-part Yukawa problem: V = -e^(-{lam} r)/r, l = {l}")

    print("\n  v        E(v)")
    for v in (0.01, 0.05, 0.1, 0.1183, 0.15, 0.3, 0.6):
        e = part_energy_functional(v, lam, l).real
        print(f"  {v:6.4f}  {e:+.8f}")

    rep = minimize(ScreeningParams(q=2.0, lam=lam, mu=0.0), l)
    print(f"\nminimum: E* = {rep.energy:+.8f} at v* = {rep.v_star:.6f} "
          f"(|dE/dv| = {rep.residual:.1e}, flag = {rep.flag!r})")

    prob = RadialProblem(potential=lambda r: -np.exp(-lam * r) / r, l=l, kappa_est=1 - lam / 2)
    exact = solve_level(prob, 0, grid_check=False).energy
    print(f"oracle ground energy:   {exact:+.8f}")
    print(f"variational gap above:  {rep.energy - exact:+.2e}  (must be >= 0)")

    print("\ntrial family shape (l = 0, g = 1): psi_v = (1 - e^(-v r)) e^(-(1 - v/2) r)")
    t = TrialFamily(l=0, v=rep.v_star)
    r = np.array([0.0, 0.5, 1.0, 2.0, 5.0])
    print(f"  psi at r = {r}: {np.round(trial_psi(r, t), 6)}")
    print(f"  norm integral = {norm_integral(t):.8f}")

    print("\nscreening scan at l = 0 (per-part minima, monotone in lambda):")
    for lam in (0.0, 0.02, 0.05, 0.08, 0.10):
        rep = minimize(ScreeningParams(q=2.0, lam=lam, mu=0.0), 0)
        print(f"  lambda = {lam:4.2f}: E* = {rep.energy:+.8f}  v* = {rep.v_star:.6f} {rep.flag}")


if __name__ == "__main__":
    main()
