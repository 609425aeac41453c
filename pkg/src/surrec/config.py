"""Dataclass configs for every pipeline stage, JSON round-trip, strict keys.

Every artifact the pipeline writes embeds `RunConfig.config_hash()` so outputs
are traceable to the exact configuration that produced them.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .errors import ConfigError


@dataclass
class DatasetConfig:
    train_count: int = 200
    test_count: int = 50
    image_size: int = 64
    alpha: float = 0.5                  # protection strength used by the build
    mask_frac_min: float = 0.10
    mask_frac_max: float = 0.40
    prompt_ids: list[str] | None = None  # None = default pool (no no-op, no held-out)


@dataclass
class CodecConfig:
    latent_channels: int = 4
    downsample: int = 4
    width: int = 48
    pretrain_steps: int = 3000
    batch_size: int = 8
    lr: float = 1e-3


@dataclass
class ModelConfig:
    dim: int = 64
    blocks: int = 4
    heads: int = 4
    mlp_ratio: float = 4.0
    text_len: int = 16
    guidance_blocks: int = 2            # depth of the restore/edit encoders

    def __post_init__(self) -> None:
        if self.dim % self.heads != 0:
            raise ConfigError(f"dim {self.dim} not divisible by heads {self.heads}")


@dataclass
class TrainConfig:
    steps: int = 6000
    lr: float = 1e-4
    batch_size: int = 8
    weight_decay: float = 0.01
    alternation_period: int = 1         # steps per branch before switching
    mask_branch_first: bool = True      # even slot = mask branch when True
    guidance_dropout: float = 0.1       # per-group conditioning dropout prob
    log_every: int = 50
    checkpoint_every: int = 1000

    def __post_init__(self) -> None:
        if self.steps <= 0 or self.batch_size <= 0 or self.lr <= 0:
            raise ConfigError("steps, batch_size and lr must be positive")
        if self.alternation_period < 1:
            raise ConfigError("alternation_period must be >= 1")


@dataclass
class EvalConfig:
    denoise_steps: int = 35
    sweep_alphas: list[float] = field(default_factory=lambda: [0.0, 0.25, 0.5, 0.75, 1.0])


@dataclass
class RunConfig:
    seed: int = 0
    out: str = "runs/default"
    dataset: DatasetConfig = field(default_factory=DatasetConfig)
    codec: CodecConfig = field(default_factory=CodecConfig)
    model: ModelConfig = field(default_factory=ModelConfig)
    train: TrainConfig = field(default_factory=TrainConfig)
    eval: EvalConfig = field(default_factory=EvalConfig)

    _SECTIONS = {
        "dataset": DatasetConfig,
        "codec": CodecConfig,
        "model": ModelConfig,
        "train": TrainConfig,
        "eval": EvalConfig,
    }

    def to_dict(self) -> dict[str, Any]:
        return dataclasses.asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def config_hash(self) -> str:
        return hashlib.sha256(self.to_json().encode()).hexdigest()[:16]

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "RunConfig":
        if not isinstance(data, dict):
            raise ConfigError(f"config root must be an object, got {type(data).__name__}")
        kwargs: dict[str, Any] = {}
        for key, value in data.items():
            if key in cls._SECTIONS:
                kwargs[key] = _build_section(cls._SECTIONS[key], key, value)
            elif key in ("seed", "out"):
                kwargs[key] = value
            else:
                raise ConfigError(f"unknown config key: {key!r}")
        return cls(**kwargs)

    @classmethod
    def from_json_file(cls, path: Path | str) -> "RunConfig":
        try:
            data = json.loads(Path(path).read_text())
        except FileNotFoundError:
            raise ConfigError(f"config file not found: {path}") from None
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
        return cls.from_dict(data)

    def out_dir(self) -> Path:
        return Path(self.out)


def _build_section(section_cls: type, section: str, value: Any) -> Any:
    if not isinstance(value, dict):
        raise ConfigError(f"config section {section!r} must be an object")
    names = {f.name for f in dataclasses.fields(section_cls)}
    for key in value:
        if key not in names:
            raise ConfigError(f"unknown config key: {section}.{key!r}")
    return section_cls(**value)
