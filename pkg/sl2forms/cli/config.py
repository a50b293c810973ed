"""Run configuration for the verification driver."""

import os
import re
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import yaml
from pydantic import BaseModel, ValidationInfo, field_validator

SUITES = ("chain-map", "identities", "singular", "relations", "gauss-manin", "gram", "l-minus-one")
COMMANDS = SUITES + ("all",)
MODES = ("symbolic", "numeric")

_PARAMETER = re.compile(r"^(k|M|M[1-9][0-9]*)$")


class RunSpec(BaseModel):
    command: str
    n: int = 2
    bound: int = 2                # pole order / degree of elementary functions and forms
    grade_bound: int = 10         # largest p1 + p2 of any tensor factor
    degree_max: int = 3           # largest p1 + p2 for gram and L_-1 checks
    b_max: int = 4
    seed: int = 7
    samples: int = 3              # random z-tuples per check
    jobs: int = 1
    mode: str = "symbolic"
    values: Dict[str, str] = {}   # NAME=VALUE assignments used in numeric mode
    timings: bool = False
    out: Optional[str] = None

    @field_validator("command")
    @classmethod
    def known_command(cls, v: str) -> str:
        if v not in COMMANDS:
            raise ValueError(f"unknown command {v!r}, expected one of {COMMANDS}")
        return v

    @field_validator("n", "bound", "grade_bound", "b_max", "samples")
    @classmethod
    def positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("must be at least 1")
        return v

    @field_validator("degree_max")
    @classmethod
    def non_negative(cls, v: int) -> int:
        if v < 0:
            raise ValueError("must be non-negative")
        return v

    @field_validator("jobs")
    @classmethod
    def nonzero_jobs(cls, v: int) -> int:
        if v == 0:
            raise ValueError("jobs must be nonzero (-1 uses every core)")
        return v

    @field_validator("mode")
    @classmethod
    def known_mode(cls, v: str) -> str:
        if v not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        return v

    @field_validator("values", mode="before")
    @classmethod
    def rational_assignments(cls, v: Dict[str, object], info: ValidationInfo) -> Dict[str, str]:
        if v is None:
            return {}
        if not isinstance(v, dict):
            raise ValueError("values must map parameter names to rationals")
        n = info.data.get("n", 1)
        for name, value in v.items():
            if not _PARAMETER.match(name) or (name.startswith("M") and name != "M" and int(name[1:]) > n):
                raise ValueError(f"unknown parameter {name!r}")
            try:
                Fraction(str(value))
            except (ValueError, ZeroDivisionError):
                raise ValueError(f"{name}={value!r} is not a rational number")
        return {name: str(Fraction(str(value))) for name, value in v.items()}

    @property
    def suites(self) -> List[str]:
        return list(SUITES) if self.command == "all" else [self.command]

    def value(self, name: str) -> Optional[Fraction]:
        """ The numeric value of a parameter, or None when it stays symbolic. """
        if self.mode != "numeric" or name not in self.values:
            return None
        return Fraction(self.values[name])


def parse_assignments(items: Sequence[str]) -> Dict[str, str]:
    values = {}
    for item in items:
        if "=" not in item:
            raise ValueError(f"expected NAME=VALUE, got {item!r}")
        name, value = item.split("=", 1)
        values[name.strip()] = value.strip()
    return values


def load_config(config_file: str, params: Sequence[str] = ()) -> dict:
    """ Read a YAML config and apply `my.setting=value` overrides. """
    assert os.path.exists(config_file), "Invalid config file"
    with open(config_file) as reader:
        config = yaml.safe_load(reader) or {}
    # Parse overriden params.
    for param in params:
        fqn_key, value = param.split("=")
        entry_to_change = config
        keys = fqn_key.split(".")
        for k in keys[:-1]:
            entry_to_change = entry_to_change.setdefault(k, {})
        entry_to_change[keys[-1]] = yaml.safe_load(value)
    return config


def build_run_spec(command: str, config: dict, overrides: Dict[str, object]) -> RunSpec:
    """Config file values, then explicit command-line flags."""
    merged = dict(config.get("run") or {})
    merged.update({key: value for key, value in overrides.items() if value is not None})
    merged["command"] = command
    return RunSpec(**merged)
