"""Numeric examples: two switched LTV systems and the Chua blinking network.

Published constants are kept next to the inputs so tests and the
reproduction report compare against the same numbers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..matcore import Mat
from ..models.norms import QuadraticNorm
from ..models.signal import SwitchingSignal


@dataclass(frozen=True)
class LtvExample:
    """Two-mode switched LTV system with one quadratic norm per mode."""

    name: str
    a1: Mat
    a2: Mat
    theta1: Mat
    theta2: Mat
    phi_r: float
    dwell: float
    published: dict[str, float] = field(default_factory=dict)

    @property
    def norms(self) -> dict[int, QuadraticNorm]:
        return {
            1: QuadraticNorm.from_theta(self.theta1, label=f"{self.name}.theta1"),
            2: QuadraticNorm.from_theta(self.theta2, label=f"{self.name}.theta2"),
        }

    @property
    def matrices(self) -> dict[int, Mat]:
        return {1: self.a1, 2: self.a2}

    def signal(self, t0: float = 0.0) -> SwitchingSignal:
        """Periodic schedule spending one dwell in each mode."""
        return SwitchingSignal(segments=[(1, self.dwell), (2, self.dwell)], periodic=True, t0=t0)


EXAMPLE_1 = LtvExample(
    name="ex1",
    a1=np.array([[0.0, -1.0], [2.0, -3.0]]),
    a2=np.array([[0.0, -11.0], [2.0, -33.0]]),
    theta1=np.linalg.inv(np.array([[0.707, 0.447], [0.707, 0.894]])),
    theta2=np.linalg.inv(np.array([[0.998, 0.322], [0.0618, 0.947]])),
    phi_r=1.0,
    dwell=1.0,
    published={
        "mu1": -1.0,
        "mu2": -0.6807,
        "beta_theta2_to_theta1": 1.796,
        "beta_theta1_to_theta2": 1.05,
        "rate": 0.5232,
    },
)

EXAMPLE_2 = LtvExample(
    name="ex2",
    a1=np.array([[-1.3481, -2.9306], [-2.4538, -1.2755]]),
    a2=np.array([[-11.2237, 7.0628], [-1.7413, 1.5119]]),
    theta1=np.array([[0.3797, 0.0061], [0.0061, 0.4534]]),
    theta2=np.array([[0.0644, -0.1475], [-0.1475, 0.8267]]),
    phi_r=0.25,
    dwell=2.0,
    published={
        "mu1": -2.6178,
        "mu2": 0.9188,
        "beta_theta1_to_theta2": 1.9079,
        "beta_theta2_to_theta1": 10.4207,
        "Am_eig_min": -6.3988,
        "Am_eig_max": 0.2311,
        "Am_21": 0.3562,
        "rate": 1.1010,
    },
)

# A_m exactly as printed; its (2,1) entry is not the average of A(1) and A(2)
EXAMPLE_2_PRINTED_AM = np.array([[-6.2859, 2.0661], [0.3562, 0.1182]])

EXAMPLE_1_FORCING = np.array([1.0, 1.0])
EXAMPLE_1_X0 = np.array([0.5, 0.1])
EXAMPLE_1_Y0 = np.array([0.4, 0.1])

# Chua blinking network
CHUA_PUBLISHED = {
    "mu0": 3.2829,
    "mu1": -7.4714,
    "beta01": 4.3163,
    "beta10": 1.0,
    "lambda2": 2.7142,
    "T_threshold": 13.08,
}
CHUA_DUTY_OFF = 0.25
CHUA_K = 1.0
