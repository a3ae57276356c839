import numpy as np
import pytest

from screened_susy.potentials import (
    HERMITIAN,
    NON_PT,
    PT,
    VARIANTS,
    RadialGrid,
    ScreeningParams,
    eval_potential,
    hermiticity_residual,
    part_potential,
    pt_reflection_residual,
    split_conjugate_parts,
)

GRID = RadialGrid(r_min=0.1, r_max=20.0, n=400)


class TestEvalPotential:
    def test_unscreened_coulomb_point(self):
        assert eval_potential(1.0, ScreeningParams(q=2.0)) == -2.0

    def test_screened_value(self):
        # -2 e^{-0.02} cos(0.02), cross-checked by independent high-precision arithmetic
        v = eval_potential(1.0, ScreeningParams(q=2.0, lam=0.02, mu=0.02))
        assert v == pytest.approx(-1.96000528021, abs=1e-6)

    def test_non_pt_coulomb_phase(self):
        v = eval_potential(1.0, ScreeningParams(q=2.0, variant=NON_PT))
        assert v == pytest.approx(2j)

    def test_pt_formula(self):
        p = ScreeningParams(q=2.0, lam=0.05, mu=0.02, variant=PT)
        r = 1.7
        expected = -(2.0 / r) * np.exp(-1j * 0.05 * r) * np.cos(0.02 * r)
        assert eval_potential(r, p) == pytest.approx(expected)

    def test_domain_error(self):
        with pytest.raises(ValueError):
            eval_potential(0.0, ScreeningParams())
        with pytest.raises(ValueError):
            eval_potential(np.array([1.0, -2.0]), ScreeningParams())

    def test_hermitian_is_exactly_real(self):
        v = eval_potential(GRID.points(), ScreeningParams(q=2.0, lam=0.3, mu=0.4))
        assert not np.iscomplexobj(v)

    def test_yukawa_collapse(self):
        p = ScreeningParams(q=2.0, lam=0.3, mu=0.0)
        r = GRID.points()
        np.testing.assert_allclose(eval_potential(r, p), -2.0 * np.exp(-0.3 * r) / r, rtol=1e-15)

    def test_coulomb_collapse_hermitian_and_pt(self):
        r = GRID.points()
        for variant in (HERMITIAN, PT):
            v = eval_potential(r, ScreeningParams(q=2.0, variant=variant))
            np.testing.assert_allclose(np.real(v), -2.0 / r, rtol=0, atol=0)
            np.testing.assert_allclose(np.imag(v), 0.0, rtol=0, atol=0)


class TestSplitConjugateParts:
    def test_hermitian_rates(self):
        a1, a2 = split_conjugate_parts(ScreeningParams(q=2.0, lam=0.02, mu=0.02))
        assert a1.a == 0.02 - 0.02j
        assert a2.a == 0.02 + 0.02j

    def test_coulomb_degenerate(self):
        a1, a2 = split_conjugate_parts(ScreeningParams(q=2.0))
        assert a1.a == 0 and a2.a == 0

    def test_pt_rates(self):
        a1, a2 = split_conjugate_parts(ScreeningParams(q=2.0, lam=0.05, mu=0.02, variant=PT))
        assert a1.a == pytest.approx(-0.03)  # mu - lam
        assert a2.a == pytest.approx(0.07)  # lam + mu

    @pytest.mark.parametrize("variant", VARIANTS)
    @pytest.mark.parametrize("lam,mu,q", [(0.02, 0.02, 2.0), (0.3, 0.1, 2.0), (0.0, 0.5, 1.3), (1.0, 0.0, 3.7)])
    def test_part_sum_identity(self, variant, lam, mu, q):
        p = ScreeningParams(q=q, lam=lam, mu=mu, variant=variant)
        r = GRID.points()
        total = (q / 2) * (part_potential(r, p, 0) + part_potential(r, p, 1))
        v = eval_potential(r, p)
        np.testing.assert_allclose(total, np.asarray(v, dtype=complex), rtol=1e-13, atol=1e-15)


class TestResiduals:
    def test_hermitian_residual_zero(self):
        assert hermiticity_residual(ScreeningParams(q=2.0, lam=0.1, mu=0.2), GRID) == 0.0

    def test_non_pt_residual_value(self):
        # 2 q e^{-lam r} cos(mu r) / r peaks at the inner grid edge r = 0.1
        p = ScreeningParams(q=2.0, lam=0.02, mu=0.02, variant=NON_PT)
        assert hermiticity_residual(p, GRID) == pytest.approx(2 * 19.9600000533, rel=1e-9)

    def test_pt_residual_zero_without_screening(self):
        assert hermiticity_residual(ScreeningParams(q=2.0, lam=0.0, mu=0.0, variant=PT), GRID) == 0.0
        assert hermiticity_residual(ScreeningParams(q=2.0, lam=0.1, mu=0.0, variant=PT), GRID) > 0.0

    def test_reflection_residual_coulomb(self):
        grid = RadialGrid(0.5, 5.0, 64)
        assert pt_reflection_residual(ScreeningParams(q=2.0), grid) == pytest.approx(8.0)

    def test_reflection_residual_pt_grid(self):
        # the 1/r prefactor is odd, so even the PT-tagged variant reports a defect
        p = ScreeningParams(q=2.0, lam=0.05, mu=0.0, variant=PT)
        res = pt_reflection_residual(p, GRID)
        assert np.isfinite(res) and res > 0

    def test_degenerate_grid_no_crash(self):
        grid = RadialGrid(1.0, 1.1, 3)
        for variant in VARIANTS:
            res = pt_reflection_residual(ScreeningParams(q=2.0, lam=0.1, mu=0.1, variant=variant), grid)
            assert np.isfinite(res)


class TestValidation:
    def test_params(self):
        with pytest.raises(ValueError):
            ScreeningParams(q=0.0)
        with pytest.raises(ValueError):
            ScreeningParams(lam=-0.1)
        with pytest.raises(ValueError):
            ScreeningParams(variant="bogus")

    def test_grid(self):
        with pytest.raises(ValueError):
            RadialGrid(0.0, 1.0, 10)
        with pytest.raises(ValueError):
            RadialGrid(1.0, 0.5, 10)
        with pytest.raises(ValueError):
            RadialGrid(0.1, 1.0, 2)
        points = RadialGrid(0.1, 1.0, 10).points()
        assert np.all(np.diff(points) > 0)
