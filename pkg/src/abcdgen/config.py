"""Generator configuration: key=value files, command-line overrides, validation."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .errors import ConfigError, ParseError
from .mixing import MixingSpec

_INT_KEYS = {"n", "min_degree", "max_degree", "min_community", "max_community", "seed", "max_iters"}
_FLOAT_KEYS = {"gamma", "beta", "avg_degree", "xi", "mu"}
_BOOL_KEYS = {"skip_write"}
_STR_KEYS = {
    "variant",
    "model",
    "out_edges",
    "out_communities",
    "out_degrees",
    "out_sizes",
    "in_degrees",
    "in_sizes",
}


@dataclass
class GeneratorConfig:
    n: Optional[int] = None
    gamma: Optional[float] = None
    min_degree: Optional[int] = None
    max_degree: Optional[int] = None
    avg_degree: Optional[float] = None
    beta: Optional[float] = None
    min_community: Optional[int] = None
    max_community: Optional[int] = None
    xi: Optional[float] = None
    mu: Optional[float] = None
    variant: str = "global"
    model: Optional[str] = None
    seed: Optional[int] = None
    out_edges: Optional[str] = None
    out_communities: Optional[str] = None
    out_degrees: Optional[str] = None
    out_sizes: Optional[str] = None
    in_degrees: Optional[str] = None
    in_sizes: Optional[str] = None
    max_iters: int = 100
    skip_write: bool = False

    @property
    def mixing(self) -> MixingSpec:
        if self.xi is not None:
            return MixingSpec("xi_global", self.xi)
        return MixingSpec("mu_local" if self.variant == "local" else "mu_global", self.mu)

    def validate(self) -> "GeneratorConfig":
        """Check every rule and raise one :class:`ConfigError` listing all problems."""
        problems = []
        if self.in_degrees is None:
            if self.n is None:
                problems.append("n is required unless in-degrees is given")
            elif self.n < 1:
                problems.append(f"n must be positive, got {self.n}")
            if self.gamma is None:
                problems.append("gamma is required unless in-degrees is given")
            elif not self.gamma > 1:
                problems.append(f"gamma must be > 1, got {self.gamma}")
            if self.max_degree is None:
                problems.append("max-degree is required unless in-degrees is given")
            if (self.min_degree is None) == (self.avg_degree is None):
                problems.append("give exactly one of min-degree and avg-degree")
            if self.min_degree is not None and self.max_degree is not None:
                if not 1 <= self.min_degree <= self.max_degree:
                    problems.append("degree range must satisfy 1 <= min-degree <= max-degree")
            if self.avg_degree is not None and self.max_degree is not None:
                if not 1 <= self.avg_degree <= self.max_degree:
                    problems.append("avg-degree must lie in [1, max-degree]")
        if self.in_sizes is None:
            if self.beta is None:
                problems.append("beta is required unless in-sizes is given")
            elif not self.beta > 1:
                problems.append(f"beta must be > 1, got {self.beta}")
            if self.min_community is None or self.max_community is None:
                problems.append("min-community and max-community are required unless in-sizes is given")
            elif not 1 <= self.min_community <= self.max_community:
                problems.append("community range must satisfy 1 <= min-community <= max-community")
        if (self.xi is None) == (self.mu is None):
            problems.append("give exactly one of xi and mu")
        for name in ("xi", "mu"):
            value = getattr(self, name)
            if value is not None and not 0.0 <= value <= 1.0:
                problems.append(f"{name} must lie in [0, 1], got {value}")
        if self.variant not in ("global", "local"):
            problems.append(f"variant must be 'global' or 'local', got {self.variant!r}")
        elif self.variant == "local" and self.xi is not None:
            problems.append("the local variant takes mu, not xi")
        if self.model not in ("cl", "cm"):
            problems.append(f"model must be 'cl' or 'cm', got {self.model!r}")
        if not self.skip_write:
            if self.out_edges is None:
                problems.append("out-edges is required unless skip-write is set")
            if self.out_communities is None:
                problems.append("out-communities is required unless skip-write is set")
        if self.max_iters < 1:
            problems.append("max-iters must be at least 1")
        if problems:
            raise ConfigError("invalid configuration:\n  - " + "\n  - ".join(problems))
        return self


def normalize_key(key: str) -> str:
    return key.strip().lower().replace("-", "_")


def coerce(key: str, raw, source=None, line=None):
    if raw is None or not isinstance(raw, str):
        return raw
    text = raw.strip()
    try:
        if key in _INT_KEYS:
            return int(text)
        if key in _FLOAT_KEYS:
            return float(text)
        if key in _BOOL_KEYS:
            if text.lower() in ("1", "true", "yes", "on"):
                return True
            if text.lower() in ("0", "false", "no", "off"):
                return False
            raise ValueError(text)
    except ValueError:
        raise ParseError(f"bad value {raw!r} for {key}", source, line) from None
    return text


def read_config_file(path) -> dict:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    values = {}
    known = _INT_KEYS | _FLOAT_KEYS | _BOOL_KEYS | _STR_KEYS
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ParseError("expected key=value", path, lineno)
            key, raw = line.split("=", 1)
            key = normalize_key(key)
            if key not in known:
                raise ParseError(f"unknown key {key!r}", path, lineno)
            values[key] = coerce(key, raw, path, lineno)
    return values


def parse_config(path=None, overrides: Optional[dict] = None) -> GeneratorConfig:
    """Merge a config file with explicit overrides (overrides win) and validate."""
    values = read_config_file(path) if path is not None else {}
    for key, value in (overrides or {}).items():
        if value is not None:
            key = normalize_key(key)
            values[key] = coerce(key, value)
    fields = {f.name for f in dataclasses.fields(GeneratorConfig)}
    unknown = sorted(set(values) - fields)
    if unknown:
        raise ConfigError(f"unknown configuration keys: {', '.join(unknown)}")
    return GeneratorConfig(**values).validate()


def write_config(config: GeneratorConfig, path) -> None:
    lines = []
    for f in dataclasses.fields(config):
        value = getattr(config, f.name)
        if value is not None:
            lines.append(f"{f.name.replace('_', '-')} = {value}")
    Path(path).write_text("\n".join(lines) + "\n")
