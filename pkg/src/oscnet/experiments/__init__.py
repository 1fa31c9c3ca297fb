"""Experiment runner package."""

from .config import ExperimentConfig
from .runner import run_scenario

__all__ = ["ExperimentConfig", "run_scenario"]
