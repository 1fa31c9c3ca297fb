"""Experiment configuration shared by the runner and the CLI."""

from dataclasses import dataclass, fields

from ..errors import ConfigError

SCENARIO_NAMES = ("fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "appA")

# Values used when a grid-capable flag is not given. Grid scenarios sweep
# their own wider defaults instead (see scenarios.py).
SINGLE_DEFAULTS = {"communities": 4, "community_size": 10, "p_bet": 0.025}
DEFAULT_DETUNINGS = (-0.3, -0.2, -0.1, 0.1, 0.2, 0.3)


@dataclass(frozen=True)
class ExperimentConfig:
    scenario: str
    seed: int = 1234
    ensemble: int | None = None
    communities: tuple | None = None
    community_size: tuple | None = None
    p_int: float = 0.75
    p_bet: tuple | None = None
    c: int = 50
    squeezing: float = 1.0
    detuning: tuple | None = None
    window_samples: int = 200
    threads: int = 1

    def __post_init__(self):
        for name in ("communities", "community_size", "p_bet", "detuning"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, tuple(value))
        self.validate()

    def validate(self):
        if self.scenario not in SCENARIO_NAMES:
            raise ConfigError(f"unknown scenario {self.scenario!r}")
        if self.ensemble is not None and self.ensemble < 1:
            raise ConfigError("ensemble size must be at least 1")
        if self.communities is not None and any(n < 2 for n in self.communities):
            raise ConfigError("need at least 2 communities")
        if self.community_size is not None and any(n < 1 for n in self.community_size):
            raise ConfigError("community size must be positive")
        if not 0.0 <= self.p_int <= 1.0:
            raise ConfigError("p_int must lie in [0, 1]")
        if self.p_bet is not None and any(not 0.0 <= p <= 1.0 for p in self.p_bet):
            raise ConfigError("p_bet values must lie in [0, 1]")
        if self.detuning is not None:
            if not self.detuning:
                raise ConfigError("detuning list must not be empty")
            if any(dw <= -1.0 for dw in self.detuning):
                raise ConfigError("detuning must stay above -1 (bare frequency 1)")
        if self.c < 1:
            raise ConfigError("c must be a positive integer")
        if self.squeezing <= 0:
            raise ConfigError("squeezing must be positive")
        if self.window_samples < 2:
            raise ConfigError("window needs at least 2 samples")
        if self.threads < 1:
            raise ConfigError("threads must be at least 1")

    def single(self, name):
        """One value for a grid-capable field; scenario default when unset."""
        values = getattr(self, name)
        if values is None:
            return SINGLE_DEFAULTS[name]
        if len(values) != 1:
            raise ConfigError(f"scenario {self.scenario} takes a single --{name.replace('_', '-')}")
        return values[0]

    def detunings(self):
        return self.detuning if self.detuning is not None else DEFAULT_DETUNINGS

    def echo(self):
        """Config fields for the output header, in declaration order.

        Thread count is left out on purpose: it must not influence output
        bytes. Unset grid fields echo as empty strings, meaning the
        scenario's own defaults applied; replaying the header through the
        CLI reproduces the run either way.
        """
        out = {}
        for f in fields(self):
            if f.name == "threads":
                continue
            value = getattr(self, f.name)
            if isinstance(value, tuple):
                value = " ".join(str(v) for v in value)
            out[f.name] = value
        return out
