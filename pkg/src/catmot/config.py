"""Layered run configuration.

Precedence, lowest to highest: built-in defaults, config file (plain
key=value lines), environment variables (CATMOT_ prefix), command-line
flags.  The effective values are echoed into every report so a run can be
reproduced from its output alone.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields
from typing import Mapping, Optional

from .quadrature import QuadConfig

ENV_PREFIX = "CATMOT_"


@dataclass(frozen=True)
class Settings:
    n_max: int = 30
    rel_tol: float = 1e-11
    abs_tol: float = 1e-300
    max_levels: int = 12
    max_subdivisions: int = 2000

    def quad_config(self, rule_override: Optional[str] = None) -> QuadConfig:
        return QuadConfig(
            rel_tol=self.rel_tol,
            abs_tol=self.abs_tol,
            max_levels=self.max_levels,
            max_subdivisions=self.max_subdivisions,
            rule_override=rule_override,
        )

    def echo(self) -> dict[str, str]:
        return {f.name: str(getattr(self, f.name)) for f in fields(self)}


_FIELD_TYPES = {f.name: f.type for f in fields(Settings)}


def _parse_value(key: str, raw: str):
    if key not in _FIELD_TYPES:
        raise ValueError(f"unknown config key {key!r}")
    kind = _FIELD_TYPES[key]
    try:
        return int(raw) if kind == "int" else float(raw)
    except ValueError:
        raise ValueError(f"bad value for config key {key!r}: {raw!r}") from None


def parse_config_file(path: str) -> dict:
    """Read key=value lines; blank lines and # comments are ignored."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if "=" not in stripped:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {stripped!r}")
            key, _, raw = stripped.partition("=")
            key = key.strip()
            values[key] = _parse_value(key, raw.strip())
    return values


def _env_overrides(environ: Mapping[str, str]) -> dict:
    values = {}
    for name in _FIELD_TYPES:
        raw = environ.get(ENV_PREFIX + name.upper())
        if raw is not None:
            values[name] = _parse_value(name, raw)
    return values


def load_settings(
    config_path: Optional[str] = None,
    environ: Optional[Mapping[str, str]] = None,
    flag_overrides: Optional[Mapping[str, object]] = None,
) -> Settings:
    values: dict = {}
    if config_path is not None:
        values.update(parse_config_file(config_path))
    values.update(_env_overrides(os.environ if environ is None else environ))
    if flag_overrides:
        values.update({k: v for k, v in flag_overrides.items() if v is not None})
    return Settings(**values)
