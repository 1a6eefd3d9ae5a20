"""Configuration schema using Pydantic."""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field
from pydantic_settings import BaseSettings


class SolverConfig(BaseModel):
    """Solver settings."""
    float_tolerance: float = 1e-9  # Relative error allowed between float and exact solves
    exact_order_limit: int = 500  # Above this many transient states, `solve` suggests --float


class SimulationConfig(BaseModel):
    """Monte Carlo defaults."""
    walks: int = Field(default=100_000, ge=1)
    seed: int = 7
    step_cap: int = Field(default=10**9, ge=1)
    workers: int = Field(default=1, ge=1)  # Worker processes; output does not depend on it


class SurveyConfig(BaseModel):
    """Extremal survey defaults."""
    absorber: Literal["max", "min", "each", "all"] = "each"  # "all" reports every convention
    max_order: int = Field(default=10, ge=2, le=10)


class OutputConfig(BaseModel):
    """Output formatting."""
    format: Literal["tsv", "json"] = "tsv"
    decimal_digits: int = Field(default=12, ge=0, le=40)


class Config(BaseSettings):
    """Root configuration for asua."""
    solver: SolverConfig = Field(default_factory=SolverConfig)
    simulation: SimulationConfig = Field(default_factory=SimulationConfig)
    survey: SurveyConfig = Field(default_factory=SurveyConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    log_level: str = "WARNING"

    model_config = ConfigDict(
        env_prefix="ASUA_",
        env_nested_delimiter="__"
    )
