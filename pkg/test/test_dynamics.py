import asyncio

import numpy as np
import pytest
from pydantic import ValidationError

from src.dynamics import (
    BlinkNetConfig,
    Graph,
    blink_network_field,
    chua_field,
    chua_g,
    chua_jacobian,
    chua_jacobian_slopes,
    chua_mode,
    chua_sync_bounds,
    graph_from_data,
    lambda2,
    laplacian,
    load_graph,
    measure_sweep,
    sync_bounds,
    sync_error,
    trajectory_sync_error,
    variational_mode_matrix,
)
from src.errors import InvalidInput, UnsupportedGraph
from src.models.norms import WeightedLpNorm
from src.models.signal import SwitchingSignal
from src.simulation import LinearMode, SwitchedSystem, simulate

SYNC_DT = 2e-3
SYNC_PERIODS = 20


class TestChua:
    def test_piecewise_linear_characteristic(self, chua_params):
        assert chua_g(chua_params, 2.0) == pytest.approx(-1.3)
        assert chua_g(chua_params, -2.0) == pytest.approx(1.3)
        assert chua_g(chua_params, 0.5) == pytest.approx(-0.4)

    def test_field_is_batched(self, chua_params, rng):
        states = rng.standard_normal((4, 3))
        batched = chua_field(chua_params, states)
        assert batched.shape == (4, 3)
        assert np.allclose(batched[2], chua_field(chua_params, states[2]))

    def test_jacobian_slope_regions(self, chua_params):
        inner = chua_jacobian(chua_params, [0.2, 0.0, 0.0])
        outer = chua_jacobian(chua_params, [3.0, 0.0, 0.0])
        assert inner[0, 0] == pytest.approx(9.0 * (-0.7 + 0.8))
        assert outer[0, 0] == pytest.approx(9.0 * (-0.7 + 0.5))
        assert np.array_equal(inner[1:], outer[1:])

    def test_mode_passes_jacobian_check(self, chua_params):
        system = SwitchedSystem({0: chua_mode(chua_params)})
        assert system.dim == 3


class TestGraph:
    def test_two_node_laplacian(self):
        graph = Graph(nodes=2, edges=[(0, 1)])
        assert np.array_equal(laplacian(graph), [[1.0, -1.0], [-1.0, 1.0]])
        assert lambda2(graph) == pytest.approx(2.0)

    def test_path_graph(self):
        graph = Graph(nodes=3, edges=[(0, 1), (1, 2)])
        assert lambda2(graph) == pytest.approx(1.0)

    def test_disconnected_graph(self):
        assert lambda2(Graph(nodes=3)) == 0.0
        assert lambda2(Graph(nodes=1)) == 0.0

    def test_directed_graph_is_unsupported(self):
        graph = Graph(nodes=2, edges=[(0, 1)], undirected=False)
        assert np.array_equal(laplacian(graph), [[1.0, -1.0], [0.0, 0.0]])
        with pytest.raises(UnsupportedGraph):
            lambda2(graph)

    @pytest.mark.parametrize("edges", [[(0, 0)], [(0, 5)], [(-1, 1)]])
    def test_invalid_edges(self, edges):
        with pytest.raises(ValidationError):
            Graph(nodes=3, edges=edges)

    def test_graph_from_data(self):
        graph = graph_from_data({"nodes": 3, "edges": [[0, 1], [1, 2]]})
        assert graph.links() == {(0, 1), (1, 0), (1, 2), (2, 1)}
        with pytest.raises(InvalidInput):
            graph_from_data({"nodes": 2, "edges": [[0, 2]]})

    def test_shipped_graph(self, shipped_graph):
        assert shipped_graph.nodes == 10
        assert len(shipped_graph.edges) == 40
        assert lambda2(shipped_graph) == pytest.approx(8.0, abs=1e-9)

    def test_load_graph_from_file(self, tmp_path):
        path = tmp_path / "ring.json"
        path.write_text('{"nodes": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0]]}', encoding="utf-8")
        assert lambda2(asyncio.run(load_graph(path))) == pytest.approx(2.0)

    def test_load_graph_rejects_bad_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"nodes": 4, "edges": [', encoding="utf-8")
        with pytest.raises(InvalidInput):
            asyncio.run(load_graph(path))

    def test_load_graph_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            asyncio.run(load_graph(tmp_path / "absent.json"))


class TestNetwork:
    def test_linear_network_assembly(self):
        graph = Graph(nodes=2, edges=[(0, 1)])
        config = BlinkNetConfig(node=LinearMode([[-1.0]]), graph=graph, k=2.0)
        system = blink_network_field(config)
        coupled = system.mode(1)
        expected = -np.eye(2) - 2.0 * laplacian(graph)
        x = np.array([1.0, 3.0])
        assert np.allclose(coupled.jacobian(0.0, x), expected)
        assert np.allclose(coupled.field(0.0, x), expected @ x)
        assert np.allclose(system.mode(0).field(0.0, x), -x)
        batch = np.stack([x, 2.0 * x])
        assert np.allclose(coupled.field(0.0, batch), batch @ expected.T)

    def test_config_validation(self):
        graph = Graph(nodes=2, edges=[(0, 1)])
        with pytest.raises(InvalidInput):
            BlinkNetConfig(node=LinearMode([[-1.0]]), graph=graph, k=-1.0)
        with pytest.raises(InvalidInput):
            BlinkNetConfig(node=LinearMode([[-1.0]]), graph=graph, gamma=np.eye(2))

    def test_synchronous_state_is_invariant(self, chua_params, shipped_graph):
        config = BlinkNetConfig(node=chua_mode(chua_params), graph=shipped_graph)
        system = blink_network_field(config, validate=False)
        x0 = np.tile([0.1, -0.2, 0.3], shipped_graph.nodes)
        signal = SwitchingSignal(segments=[(0, 0.5), (1, 0.5)], periodic=True)
        traj = simulate(system, signal, x0, 0.0, 2.0, SYNC_DT)
        assert np.max(trajectory_sync_error(traj, shipped_graph.nodes)) < 1e-12

    def test_sync_error_examples(self):
        assert sync_error([[0.0, 0.0], [2.0, 0.0]]) == pytest.approx(1.0)
        assert sync_error(np.ones((5, 3))) == 0.0
        stacked = sync_error(np.zeros((4, 2, 3)))
        assert stacked.shape == (4,)
        with pytest.raises(InvalidInput):
            sync_error([1.0, 2.0])

    def test_variational_matrix(self, chua_params):
        jac = chua_jacobian(chua_params, [0.0, 0.0, 0.0])
        assert np.array_equal(variational_mode_matrix(jac, 1.0, 8.0, np.eye(3), 0), jac)
        assert np.allclose(variational_mode_matrix(jac, 1.0, 8.0, np.eye(3), 1), jac - 8.0 * np.eye(3))
        with pytest.raises(InvalidInput):
            variational_mode_matrix(jac, 1.0, 8.0, np.eye(3), 2)

    def test_measure_sweep_matches_slopes(self, chua_params, chua_off_norm, rng):
        samples = 3.0 * rng.standard_normal((200, 3))
        swept = measure_sweep(chua_off_norm, lambda w: chua_jacobian(chua_params, w), samples)
        assert swept == pytest.approx(3.28305, abs=1e-4)
        with pytest.raises(InvalidInput):
            measure_sweep(chua_off_norm, lambda w: chua_jacobian(chua_params, w), [])


class TestSync:
    def test_shipped_graph_bounds(self, chua_params, shipped_graph):
        bounds = chua_sync_bounds(shipped_graph, chua_params)
        assert bounds.lambda2 == pytest.approx(8.0)
        assert bounds.mu0 == pytest.approx(3.28305, abs=1e-4)
        assert bounds.mu1 == pytest.approx(-3.41405, abs=1e-4)
        assert bounds.beta01 == pytest.approx(1.0)
        assert bounds.beta10 == pytest.approx(3.69645, abs=1e-4)
        assert bounds.coupling_verified
        assert bounds.min_period() == pytest.approx(0.75146, abs=1e-3)

    def sync_run(self, chua_params, shipped_graph, signal: SwitchingSignal) -> np.ndarray:
        config = BlinkNetConfig(node=chua_mode(chua_params), graph=shipped_graph)
        system = blink_network_field(config, validate=False)
        rng = np.random.Generator(np.random.Philox(1))
        base = np.array([0.1, 0.0, -0.1])
        x0 = (base + 0.1 * rng.standard_normal((shipped_graph.nodes, 3))).ravel()
        tf = SYNC_PERIODS * signal.period
        traj = simulate(system, signal, x0, 0.0, tf, SYNC_DT)
        return trajectory_sync_error(traj, shipped_graph.nodes)

    def test_network_synchronises_above_threshold(self, chua_params, shipped_graph):
        bounds = chua_sync_bounds(shipped_graph, chua_params)
        period = 2.0 * bounds.min_period()
        assert bounds.certify(period).satisfied

        off = bounds.duty_off * period
        signal = SwitchingSignal(segments=[(0, off), (1, period - off)], periodic=True)
        error = self.sync_run(chua_params, shipped_graph, signal)
        assert error[-1] < 1e-3 * error[0]

    def test_uncoupled_network_does_not_synchronise(self, chua_params, shipped_graph):
        bounds = chua_sync_bounds(shipped_graph, chua_params)
        signal = SwitchingSignal(segments=[(0, 2.0 * bounds.min_period())], periodic=True)
        error = self.sync_run(chua_params, shipped_graph, signal)
        assert error[-1] >= 0.1 * error[0]

    def test_custom_norm_pair(self, chua_params, shipped_graph):
        euclidean = WeightedLpNorm.unweighted(2, 3)
        bounds = sync_bounds(chua_jacobian_slopes(chua_params), shipped_graph, euclidean, euclidean)
        assert bounds.beta01 == 1.0
        assert bounds.beta10 == 1.0
        assert bounds.min_period() == 0.0
