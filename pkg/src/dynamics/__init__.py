"""Model library: Chua nodes, graphs, blinking networks and worked examples."""

from .catalog import (
    CHUA_DUTY_OFF,
    CHUA_K,
    CHUA_PUBLISHED,
    EXAMPLE_1,
    EXAMPLE_1_FORCING,
    EXAMPLE_1_X0,
    EXAMPLE_1_Y0,
    EXAMPLE_2,
    EXAMPLE_2_PRINTED_AM,
    LtvExample,
)
from .chua import (
    ChuaParams,
    chua_field,
    chua_g,
    chua_jacobian,
    chua_jacobian_at_slope,
    chua_jacobian_slopes,
    chua_mode,
)
from .graph import Graph, graph_from_data, lambda2, laplacian, load_graph, load_shipped_graph
from .network import (
    CHUA_OFF_WEIGHTS,
    BlinkNetConfig,
    SyncBounds,
    blink_network_field,
    chua_sync_bounds,
    measure_sweep,
    sync_bounds,
    sync_error,
    trajectory_sync_error,
    variational_mode_matrix,
)

__all__ = [
    # Chua
    "ChuaParams",
    "chua_field",
    "chua_g",
    "chua_jacobian",
    "chua_jacobian_at_slope",
    "chua_jacobian_slopes",
    "chua_mode",
    # Graphs
    "Graph",
    "graph_from_data",
    "lambda2",
    "laplacian",
    "load_graph",
    "load_shipped_graph",
    # Networks
    "CHUA_OFF_WEIGHTS",
    "BlinkNetConfig",
    "SyncBounds",
    "blink_network_field",
    "chua_sync_bounds",
    "measure_sweep",
    "sync_bounds",
    "sync_error",
    "trajectory_sync_error",
    "variational_mode_matrix",
    # Examples
    "CHUA_DUTY_OFF",
    "CHUA_K",
    "CHUA_PUBLISHED",
    "EXAMPLE_1",
    "EXAMPLE_1_FORCING",
    "EXAMPLE_1_X0",
    "EXAMPLE_1_Y0",
    "EXAMPLE_2",
    "EXAMPLE_2_PRINTED_AM",
    "LtvExample",
]
