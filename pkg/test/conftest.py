"""Shared fixtures for the test suite."""

from __future__ import annotations

import asyncio
from pathlib import Path

import numpy as np
import pytest

from src.dynamics import EXAMPLE_1, EXAMPLE_2, ChuaParams, Graph, load_shipped_graph
from src.models.norms import QuadraticNorm, WeightedLpNorm

CONFIG_DIR = Path(__file__).parent.parent / "src" / "assets" / "configs"


@pytest.fixture
def config_dir() -> Path:
    return CONFIG_DIR


@pytest.fixture
def ex1():
    return EXAMPLE_1


@pytest.fixture
def ex2():
    return EXAMPLE_2


@pytest.fixture
def ex1_norms() -> dict[int, QuadraticNorm]:
    return EXAMPLE_1.norms


@pytest.fixture
def ex2_norms() -> dict[int, QuadraticNorm]:
    return EXAMPLE_2.norms


@pytest.fixture
def chua_params() -> ChuaParams:
    return ChuaParams()


@pytest.fixture
def chua_off_norm() -> WeightedLpNorm:
    return WeightedLpNorm(p=1, weights=[1.0, 3.4042, 1.0369], label="weighted-1")


@pytest.fixture
def euclidean3() -> WeightedLpNorm:
    return WeightedLpNorm.unweighted(2, 3, label="euclidean")


@pytest.fixture
def shipped_graph() -> Graph:
    return asyncio.run(load_shipped_graph())


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.Generator(np.random.Philox(7))
