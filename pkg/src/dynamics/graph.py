"""Graphs and their Laplacians."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, model_validator

from ..errors import InvalidInput, UnsupportedGraph
from ..matcore import Mat, sym_eig
from ..output import read_text

logger = logging.getLogger(__name__)

SHIPPED_GRAPH = Path(__file__).parent.parent / "assets" / "ten_node_graph.json"


class Graph(BaseModel):
    """Graph on nodes 0..m-1.

    An edge [i, j] is a link from node j to node i; undirected graphs
    add both directions.
    """

    model_config = ConfigDict(frozen=True)

    nodes: NonNegativeInt = Field(..., description="Node count m")
    edges: list[tuple[int, int]] = Field(default_factory=list)
    undirected: bool = True

    @model_validator(mode="after")
    def _check_edges(self) -> Graph:
        for index, (i, j) in enumerate(self.edges):
            if not (0 <= i < self.nodes and 0 <= j < self.nodes):
                raise ValueError(f"edge {index} ({i}, {j}) has a node outside 0..{self.nodes - 1}")
            if i == j:
                raise ValueError(f"edge {index} is a self-loop on node {i}")
        return self

    def links(self) -> set[tuple[int, int]]:
        """Set of (i, j) pairs with a link from j to i."""
        out = set(self.edges)
        if self.undirected:
            out |= {(j, i) for i, j in self.edges}
        return out


def laplacian(graph: Graph) -> Mat:
    """L_ij = -1 for a link from j to i, L_ii = -sum_j L_ij."""
    m = graph.nodes
    out = np.zeros((m, m))
    for i, j in graph.links():
        out[i, j] = -1.0
    out[np.diag_indices(m)] = -out.sum(axis=1)
    return out


def lambda2(graph: Graph) -> float:
    """Algebraic connectivity: second-smallest eigenvalue of the symmetric Laplacian.

    Raises:
        UnsupportedGraph: For directed graphs or an asymmetric Laplacian.
    """
    if not graph.undirected:
        raise UnsupportedGraph("lambda2 is only implemented for undirected graphs")
    lap = laplacian(graph)
    if not np.array_equal(lap, lap.T):
        raise UnsupportedGraph("Laplacian is not symmetric")
    if graph.nodes < 2:
        return 0.0
    eigenvalues, _ = sym_eig(lap)
    value = float(eigenvalues[1])
    # clamp roundoff on disconnected graphs
    return 0.0 if abs(value) < 1e-12 else value


def graph_from_data(data: Any) -> Graph:
    try:
        return Graph.model_validate(data)
    except ValueError as e:
        raise InvalidInput(f"invalid graph: {e}") from e


async def load_graph(path: Path) -> Graph:
    """Read a graph from JSON ({"nodes": m, "edges": [[i, j], ...], "undirected": true})."""
    text = await read_text(path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInput(f"invalid graph JSON in {path}: {e}") from e
    graph = graph_from_data(data)
    logger.debug("Loaded graph with %d nodes and %d edges from %s", graph.nodes, len(graph.edges), path)
    return graph


async def load_shipped_graph() -> Graph:
    """The bundled 10-node sample graph (K10 without its five antipodal edges)."""
    return await load_graph(SHIPPED_GRAPH)
