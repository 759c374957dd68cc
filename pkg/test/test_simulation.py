import asyncio
import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from src.dynamics import EXAMPLE_1, EXAMPLE_1_FORCING, EXAMPLE_1_X0, EXAMPLE_1_Y0
from src.errors import Diverged, InvalidInput
from src.models.norms import WeightedLpNorm
from src.models.signal import SwitchingSignal
from src.norms import matrix_measure
from src.simulation import (
    FunctionMode,
    LinearMode,
    SwitchedSystem,
    coppel_audit,
    fit_rate,
    monodromy_rate,
    pair_divergence,
    periodic_orbit_check,
    run_pair_batch,
    simulate,
    spectral_radius_bound,
)

SCALAR_NORM = {1: WeightedLpNorm.unweighted(2, 1)}

unit_entries = st.floats(min_value=-1.0, max_value=1.0, allow_subnormal=False)


def scalar_system(rate: float) -> SwitchedSystem:
    return SwitchedSystem({1: LinearMode([[rate]])})


def ex1_system(forcing) -> SwitchedSystem:
    return SwitchedSystem(
        {1: LinearMode(EXAMPLE_1.a1, forcing), 2: LinearMode(EXAMPLE_1.a2, forcing)}
    )


class TestIntegrator:
    def test_scalar_decay(self):
        traj = simulate(scalar_system(-1.0), SwitchingSignal.constant(1), [1.0], 0.0, 1.0, 1e-3)
        assert traj.times[-1] == 1.0
        assert traj.final_state[0] == pytest.approx(math.exp(-1.0), abs=1e-9)

    def test_fourth_order_convergence(self):
        system = scalar_system(-1.0)
        signal = SwitchingSignal.constant(1)
        exact = math.exp(-2.0)
        coarse = abs(simulate(system, signal, [1.0], 0.0, 2.0, 0.1).final_state[0] - exact)
        fine = abs(simulate(system, signal, [1.0], 0.0, 2.0, 0.05).final_state[0] - exact)
        assert 12.0 <= coarse / fine <= 20.0

    def test_samples_land_on_switch_instants(self):
        system = SwitchedSystem({1: LinearMode([[-1.0]]), 2: LinearMode([[-2.0]])})
        signal = SwitchingSignal(segments=[(1, 0.3333), (2, 0.25)], periodic=True)
        traj = simulate(system, signal, [1.0], 0.0, 1.0, 0.1)
        for switch, before, after in [(0.3333, 1, 2), (0.5833, 2, 1)]:
            index = int(np.argmin(np.abs(traj.times - switch)))
            assert traj.times[index] == pytest.approx(switch, abs=1e-12)
            assert traj.modes[index] == after
            assert traj.modes[index - 1] == before
        assert np.all(np.diff(traj.times) <= 0.1 + 1e-12)
        assert traj.times[-1] == 1.0

    def test_state_is_continuous_across_switches(self):
        system = SwitchedSystem({1: LinearMode([[-1.0]]), 2: LinearMode([[-2.0]])})
        signal = SwitchingSignal(segments=[(1, 0.5), (2, 0.5)])
        traj = simulate(system, signal, [1.0], 0.0, 1.0, 1e-3)
        assert traj.final_state[0] == pytest.approx(math.exp(-0.5 - 1.0), abs=1e-9)

    def test_affine_forcing(self):
        system = SwitchedSystem({1: LinearMode([[-1.0]], [2.0])})
        traj = simulate(system, SwitchingSignal.constant(1), [0.0], 0.0, 1.0, 1e-3)
        assert traj.final_state[0] == pytest.approx(2.0 * (1.0 - math.exp(-1.0)), abs=1e-9)

    def test_divergence_guard(self):
        with pytest.raises(Diverged) as info:
            simulate(scalar_system(50.0), SwitchingSignal.constant(1), [1.0], 0.0, 1.0, 1e-3)
        partial = info.value.trajectory
        assert partial.diverged
        assert len(partial) > 1
        assert info.value.magnitude > 1e12
        assert info.value.t < 1.0

    @pytest.mark.parametrize(
        "args",
        [
            ([1.0], 0.0, 1.0, 0.0),
            ([1.0], 1.0, 1.0, 1e-3),
            ([1.0, 2.0], 0.0, 1.0, 1e-3),
        ],
    )
    def test_invalid_arguments(self, args):
        with pytest.raises(InvalidInput):
            simulate(scalar_system(-1.0), SwitchingSignal.constant(1), *args)

    def test_undeclared_mode(self):
        signal = SwitchingSignal(segments=[(1, 1.0), (2, 1.0)], periodic=True)
        with pytest.raises(InvalidInput, match="undeclared mode 2"):
            simulate(scalar_system(-1.0), signal, [1.0], 0.0, 3.0)


class TestSwitchedSystem:
    def test_jacobian_mismatch_is_rejected(self):
        mode = FunctionMode(1, lambda t, x: x**3, lambda t, x: np.array([[1.0]]))
        with pytest.raises(InvalidInput, match="finite differences"):
            SwitchedSystem({1: mode})

    def test_consistent_function_mode(self):
        mode = FunctionMode(1, lambda t, x: -(x**3), lambda t, x: np.array([[-3.0 * x[0] ** 2]]))
        system = SwitchedSystem({1: mode})
        assert system.dim == 1

    def test_mixed_dimensions(self):
        with pytest.raises(InvalidInput):
            SwitchedSystem({1: LinearMode(np.eye(2)), 2: LinearMode(np.eye(3))})

    def test_empty(self):
        with pytest.raises(InvalidInput):
            SwitchedSystem({})


class TestDivergence:
    def test_scalar_fitted_rate(self):
        result = pair_divergence(
            scalar_system(-1.0), SwitchingSignal.constant(1), [1.0], [0.0], SCALAR_NORM, 0.0, 10.0
        )
        assert result.fitted_rate == pytest.approx(-1.0, abs=1e-3)
        assert result.fitted_rate_active == pytest.approx(-1.0, abs=1e-3)

    def test_fit_rate_needs_two_samples(self):
        times = np.linspace(0.0, 1.0, 5)
        assert fit_rate(times, np.zeros(5)) == -math.inf
        assert fit_rate(times[:1], np.ones(1)) == -math.inf

    @pytest.mark.parametrize("forcing", [EXAMPLE_1_FORCING, np.zeros(2)])
    def test_example1_contracts(self, ex1, forcing):
        result = pair_divergence(
            ex1_system(forcing), ex1.signal(), EXAMPLE_1_X0, EXAMPLE_1_Y0, ex1.norms, 0.0, 20.0
        )
        assert result.fitted_rate <= -0.473
        assert result.euclidean_error[-1] <= 1e-6 * result.euclidean_error[0]

    def test_batch_runs_every_pair(self):
        pairs = [([1.0], [0.0]), ([2.0], [1.0]), ([0.5], [-0.5])]
        results = asyncio.run(
            run_pair_batch(
                scalar_system(-1.0), SwitchingSignal.constant(1), pairs, SCALAR_NORM, 0.0, 5.0, 1e-2
            )
        )
        assert len(results) == 3
        for result in results:
            assert result.fitted_rate == pytest.approx(-1.0, abs=1e-3)
            assert result.error[0] == pytest.approx(1.0)


class TestCoppel:
    def test_example1_bound_holds(self, ex1):
        norms = ex1.norms
        alpha = {k: matrix_measure(norms[k], a).value for k, a in ex1.matrices.items()}
        audit = coppel_audit(ex1.matrices, ex1.signal(), alpha, norms, EXAMPLE_1_X0, 0.0, 10.0)
        assert audit.passed
        assert audit.max_ratio <= 1.0 + audit.tolerance

    def test_understated_alpha_is_reported(self, ex1):
        norms = ex1.norms
        alpha = {1: -2.0, 2: -2.0}
        audit = coppel_audit(ex1.matrices, ex1.signal(), alpha, norms, EXAMPLE_1_X0, 0.0, 10.0)
        assert not audit.passed
        assert set(audit.measure_violations) == {1, 2}
        assert audit.violations > 0

    def test_missing_alpha(self, ex1):
        with pytest.raises(InvalidInput):
            coppel_audit(ex1.matrices, ex1.signal(), {1: 0.0}, ex1.norms, EXAMPLE_1_X0, 0.0, 1.0)

    def test_missing_norm(self, ex1):
        alpha = {1: 0.0, 2: 0.0}
        with pytest.raises(InvalidInput):
            coppel_audit(ex1.matrices, ex1.signal(), alpha, {1: ex1.norms[1]}, EXAMPLE_1_X0, 0.0, 1.0)

    @settings(max_examples=100, deadline=None, derandomize=True)
    @given(
        m1=arrays(np.float64, (3, 3), elements=unit_entries),
        m2=arrays(np.float64, (3, 3), elements=unit_entries),
        margin=st.floats(min_value=0.05, max_value=1.0),
        d1=st.floats(min_value=0.05, max_value=0.5),
        d2=st.floats(min_value=0.05, max_value=0.5),
        x0=arrays(np.float64, (3,), elements=unit_entries),
    )
    def test_bound_holds_for_random_stable_modes(self, m1, m2, margin, d1, d2, x0):
        assume(np.linalg.norm(x0) > 1e-3)
        euclidean = WeightedLpNorm.unweighted(2, 3)
        norms = {1: euclidean, 2: euclidean}
        matrices = {}
        for k, m in ((1, m1), (2, m2)):
            shift = matrix_measure(euclidean, m).value + margin
            matrices[k] = m - shift * np.eye(3)
        alpha = {k: matrix_measure(euclidean, a).value for k, a in matrices.items()}
        signal = SwitchingSignal(segments=[(1, d1), (2, d2)], periodic=True)
        beta = {(1, 2): 1.0, (2, 1): 1.0}
        audit = coppel_audit(matrices, signal, alpha, norms, x0, 0.0, 1.0, dt=5e-3, beta=beta)
        assert not audit.measure_violations
        assert audit.violations == 0
        assert audit.passed


class TestPeriodic:
    def test_example1_settles_on_periodic_orbit(self, ex1):
        report = periodic_orbit_check(ex1_system(EXAMPLE_1_FORCING), ex1.signal(), EXAMPLE_1_X0, 20, 2)
        assert report.period == 2.0
        assert report.passed
        assert report.checked_samples > 0

    def test_needs_periodic_signal(self):
        signal = SwitchingSignal(segments=[(1, 1.0)])
        with pytest.raises(InvalidInput):
            periodic_orbit_check(scalar_system(-1.0), signal, [1.0], 1, 1)


class TestMonodromy:
    def test_example1_floquet_exponent(self, ex1):
        system = SwitchedSystem({1: LinearMode(ex1.a1), 2: LinearMode(ex1.a2)})
        assert monodromy_rate(system, ex1.signal()) == pytest.approx(-0.751945, abs=1e-3)

    def test_example2_is_unstable(self, ex2):
        system = SwitchedSystem({1: LinearMode(ex2.a1), 2: LinearMode(ex2.a2)})
        assert monodromy_rate(system, ex2.signal(), dt=2e-3) > 0.5

    def test_example2_trajectories_separate(self, ex2):
        system = SwitchedSystem({1: LinearMode(ex2.a1), 2: LinearMode(ex2.a2)})
        result = pair_divergence(system, ex2.signal(), [5.0, -3.0], [-2.0, 4.0], ex2.norms, 0.0, 20.0, 2e-3)
        assert result.fitted_rate > 0.0

    def test_spectral_radius_power_bound(self):
        phi = np.diag([0.5, -2.0, 1.0])
        assert spectral_radius_bound(phi) == pytest.approx(2.0, rel=1e-2)
        assert spectral_radius_bound(np.array([[0.0, 3.0], [-3.0, 0.0]])) == pytest.approx(3.0)

    def test_nonlinear_modes_are_rejected(self):
        mode = FunctionMode(1, lambda t, x: -x, lambda t, x: np.array([[-1.0]]))
        system = SwitchedSystem({1: mode})
        with pytest.raises(InvalidInput, match="not linear"):
            monodromy_rate(system, SwitchingSignal.constant(1))
