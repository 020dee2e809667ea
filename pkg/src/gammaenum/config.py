"""Runtime configuration: cache location, oracle caps, precision, output format."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, replace
from pathlib import Path

from .cache import ENV_VAR, DEFAULT_DIR
from .oracle import OracleCaps
from .rational import Q, from_string

OUTPUT_FORMATS = ("text", "json", "csv")


@dataclass(frozen=True)
class Config:
    cache_dir: Path = field(default_factory=lambda: Path(os.environ.get(ENV_VAR, DEFAULT_DIR)))
    oracle_caps: OracleCaps = field(default_factory=OracleCaps)
    default_precision: object = Q(1, 10**6)
    output_format: str = "text"

    def __post_init__(self):
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"output format must be one of {OUTPUT_FORMATS}")
        for name in ("matchings", "shadows", "gamma_matchings", "shapes", "structures"):
            if getattr(self.oracle_caps, name) <= 0:
                raise ValueError("oracle caps must be positive")


def load_config(path: str | os.PathLike | None = None, **overrides) -> Config:
    """Config from an optional JSON file, overridden by keyword arguments."""
    data: dict = {}
    if path is not None:
        with open(path) as fh:
            data = json.load(fh)
    kwargs: dict = {}
    if "cache_dir" in data:
        kwargs["cache_dir"] = Path(data["cache_dir"])
    if "oracle_caps" in data:
        kwargs["oracle_caps"] = OracleCaps(**{k: int(v) for k, v in data["oracle_caps"].items()})
    if "default_precision" in data:
        kwargs["default_precision"] = from_string(str(data["default_precision"]))
    if "output_format" in data:
        kwargs["output_format"] = data["output_format"]
    cfg = Config(**kwargs)
    if overrides:
        cfg = replace(cfg, **{k: v for k, v in overrides.items() if v is not None})
    return cfg
