"""Experiment configuration and seed derivation.

Config files are flat ``key = value`` text; ``#`` starts a comment. Keys and
defaults::

    model      edge-reversal | gaussian          (edge-reversal)
    n          vertex count                      (100)
    algos      comma list of D2Greedy,RDGreedy,SG,SG3,EC   (all five)
    grid       comma list of p or sigma values   (0,0.05,...,1 / 0,25,...,300)
    trials     trials per noise level            (1000)
    seed       master seed                       (0)
    mode       meanlog | logmean                 (meanlog)
    workers    worker processes                  (1)
    out        output directory                  (results)
    p_m        master flip probability           (0.2)
    mu         Gaussian mean weight              (600)
    sigma_m    Gaussian master std-dev           (50)
    resample_master   new master per trial       (false)
    share_rd_seed     same RDGreedy stream on G' and G''   (false)
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field, fields, replace
from pathlib import Path

import numpy as np

from .graphs import NoiseModel, NoiseModelConfig
from .greedy import Algorithm


class ConfigError(ValueError):
    pass


class EstimatorMode(str, enum.Enum):
    MEAN_LOG = "meanlog"
    LOG_MEAN = "logmean"


DEFAULT_P_GRID = tuple(round(0.05 * i, 2) for i in range(21))
DEFAULT_SIGMA_GRID = tuple(float(25 * i) for i in range(13))

# seed-derivation tags (last element of the spawn key)
TAG_GRAPH = 0
TAG_RDGREEDY = 1
TAG_MASTER = 2


def derive_seed(master_seed: int, noise_index: int, trial: int, instance: int, tag: int) -> np.random.SeedSequence:
    """Child stream for one (noise level, trial, instance, purpose) tuple.

    The mixing function is numpy's ``SeedSequence`` hash of the entropy
    ``master_seed`` together with the spawn key, so streams never depend on
    scheduling order.
    """
    return np.random.SeedSequence(master_seed, spawn_key=(noise_index, trial, instance, tag))


@dataclass(frozen=True)
class ExperimentConfig:
    model: NoiseModelConfig = field(default_factory=NoiseModelConfig)
    n: int = 100
    algorithms: tuple = tuple(Algorithm)
    noise_grid: tuple = DEFAULT_P_GRID
    trials: int = 1000
    master_seed: int = 0
    estimator: EstimatorMode = EstimatorMode.MEAN_LOG
    workers: int = 1
    output_dir: Path = Path("results")
    resample_master: bool = False
    share_rd_seed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "algorithms", tuple(Algorithm(a) for a in self.algorithms))
        object.__setattr__(self, "noise_grid", tuple(float(x) for x in self.noise_grid))
        object.__setattr__(self, "estimator", EstimatorMode(self.estimator))
        object.__setattr__(self, "output_dir", Path(self.output_dir))
        if self.trials < 1:
            raise ConfigError("trials must be >= 1")
        if not self.noise_grid:
            raise ConfigError("noise grid must not be empty")
        if not self.algorithms:
            raise ConfigError("select at least one algorithm")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")
        if self.n < 2 or (Algorithm.EC in self.algorithms and self.n < 3):
            raise ConfigError("n must be >= 2 (>= 3 with EC)")
        if self.model.model is NoiseModel.EDGE_REVERSAL:
            if self.n % 2 or self.n < 4:
                raise ConfigError("the edge reversal master needs an even n >= 4")
            if any(not 0.0 <= p <= 1.0 for p in self.noise_grid):
                raise ConfigError("flip probabilities must lie in [0, 1]")
        elif any(s < 0 for s in self.noise_grid):
            raise ConfigError("noise std-devs must be nonnegative")


def _parse_bool(s: str) -> bool:
    v = s.strip().lower()
    if v in ("1", "true", "yes", "on"):
        return True
    if v in ("0", "false", "no", "off"):
        return False
    raise ConfigError(f"not a boolean: {s!r}")


def _floats(s: str) -> tuple:
    try:
        return tuple(float(x) for x in s.split(",") if x.strip())
    except ValueError as e:
        raise ConfigError(f"bad number list {s!r}") from e


def _algos(s: str) -> tuple:
    lookup = {a.value.lower(): a for a in Algorithm}
    out = []
    for name in s.split(","):
        name = name.strip().lower()
        if not name:
            continue
        if name not in lookup:
            raise ConfigError(f"unknown algorithm {name!r}")
        out.append(lookup[name])
    return tuple(out)


KEYS = {
    "model": str,
    "n": int,
    "algos": _algos,
    "grid": _floats,
    "trials": int,
    "seed": int,
    "mode": str,
    "workers": int,
    "out": str,
    "p_m": float,
    "mu": float,
    "sigma_m": float,
    "resample_master": _parse_bool,
    "share_rd_seed": _parse_bool,
}


def read_config_file(path) -> dict:
    values = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key = value")
        key, value = (x.strip() for x in line.split("=", 1))
        if key not in KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = value
    return values


def build_config(values: dict) -> ExperimentConfig:
    """Turn raw string (or already typed) settings into a validated config."""
    typed = {}
    for key, value in values.items():
        if value is None:
            continue
        if key not in KEYS:
            raise ConfigError(f"unknown key {key!r}")
        try:
            typed[key] = KEYS[key](value) if isinstance(value, str) else value
        except ValueError as e:
            raise ConfigError(f"bad value for {key}: {value!r}") from e
    try:
        model = NoiseModel(typed.get("model", NoiseModel.EDGE_REVERSAL))
        noise = NoiseModelConfig(
            model,
            p_m=typed.get("p_m", 0.2),
            mu=typed.get("mu", 600.0),
            sigma_m=typed.get("sigma_m", 50.0),
        )
        grid = typed.get("grid") or (DEFAULT_P_GRID if model is NoiseModel.EDGE_REVERSAL else DEFAULT_SIGMA_GRID)
        kw = dict(
            model=noise,
            noise_grid=grid,
            n=typed.get("n", 100),
            trials=typed.get("trials", 1000),
            master_seed=typed.get("seed", 0),
            estimator=typed.get("mode", EstimatorMode.MEAN_LOG),
            workers=typed.get("workers", 1),
            output_dir=typed.get("out", "results"),
            resample_master=typed.get("resample_master", False),
            share_rd_seed=typed.get("share_rd_seed", False),
        )
        if "algos" in typed:
            kw["algorithms"] = typed["algos"]
        return ExperimentConfig(**kw)
    except ConfigError:
        raise
    except ValueError as e:
        raise ConfigError(str(e)) from e


def override(cfg: ExperimentConfig, **changes) -> ExperimentConfig:
    names = {f.name for f in fields(ExperimentConfig)}
    unknown = set(changes) - names
    if unknown:
        raise ConfigError(f"unknown fields {sorted(unknown)}")
    return replace(cfg, **changes)
