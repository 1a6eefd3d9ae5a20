"""Monte Carlo oracle for ASUA."""

from asua.montecarlo.simulator import SimEstimate, WalkConfig, simulate

__all__ = ["SimEstimate", "WalkConfig", "simulate"]
