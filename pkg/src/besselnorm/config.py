"""Run configuration shared by the CLI and the verification suites."""
from __future__ import annotations

import os
from dataclasses import dataclass, field

from .opnorm import DEFAULT_SEED
from .spaces import DEFAULT_CAP

SEED_ENV = "BESSELNORM_SEED"


@dataclass(frozen=True)
class Caps:
    sign_enum: int = DEFAULT_CAP
    tail_enum: int = DEFAULT_CAP


@dataclass(frozen=True)
class RunConfig:
    seed: int = DEFAULT_SEED
    caps: Caps = field(default_factory=Caps)
    exact_tol: float = 1e-8
    output: str = "text"
    samples: int = 200

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.caps.sign_enum < 1 or self.caps.tail_enum < 1:
            raise ValueError("caps must be >= 1")
        if self.exact_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.output not in ("text", "json"):
            raise ValueError("output must be 'text' or 'json'")
        if self.samples < 1:
            raise ValueError("samples must be >= 1")

    @classmethod
    def from_env(cls, **overrides) -> "RunConfig":
        """Defaults, then the seed environment variable, then explicit overrides."""
        overrides = {k: v for k, v in overrides.items() if v is not None}
        env = os.environ.get(SEED_ENV)
        if env and "seed" not in overrides:
            overrides["seed"] = int(env, 0)
        return cls(**overrides)
