"""Quantum battery capacity of isotropic two-qubit states near a Schwarzschild horizon."""

from .analytic import Noise, analytic_capacity, analytic_eigenvalues
from .battery import HamiltonianSpec, capacity, capacity_zz, evaluate, pipeline_capacity
from .bloch import BlochTwoQubit
from .channels import ChannelKind, ChannelSpec, Target, apply_channel, bloch_action, kraus_operators
from .linalg import hermitian_eigenvalues, partial_trace, tensor
from .relativistic import (
    HawkingParam,
    Region,
    Scenario,
    bloch_coefficients,
    eta_from_temperature,
    four_partite_state,
    isotropic_state,
    reduced_state,
)
from .verify import run_verify

__all__ = [
    "BlochTwoQubit", "ChannelKind", "ChannelSpec", "HamiltonianSpec", "HawkingParam", "Noise",
    "Region", "Scenario", "Target", "analytic_capacity", "analytic_eigenvalues", "apply_channel",
    "bloch_action", "bloch_coefficients", "capacity", "capacity_zz", "eta_from_temperature",
    "evaluate", "four_partite_state", "hermitian_eigenvalues", "isotropic_state", "kraus_operators",
    "partial_trace", "pipeline_capacity", "reduced_state", "run_verify", "tensor",
]
