import configparser
import hashlib
import json
import os
from pathlib import Path
from typing import List, Literal

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from betaproc.errors import ConfigError
from betaproc.kernels.domain import BesselParams, OUParams
from betaproc.verify.repository import CONVERGENCE_KINDS, ENTRY_KINDS, WEIGHT_CHECK_KINDS

SECTION = "EXPERIMENT"
EXPERIMENTS = ("sample", "entry-density", "eigen-jpdf", "weights", "converge", "stationarity",
               "limit-law", "series-check", "kernel", "moments", "folding", "closeness")
LIST_FIELDS = ("n_grid", "t_grid", "x0_grid", "x_grid")
HASH_EXCLUDED = {"output_dir", "threads"}

PROCESSES = {
    "entry-density": ("hermite", "laguerre"),
    "eigen-jpdf": ("hermite", "wishart"),
    "closeness": ("hermite", "wishart"),
    "weights": ("hermite", "laguerre", "wishart"),
    "converge": ("hermite", "laguerre", "wishart"),
    "limit-law": ("hermite", "laguerre", "wishart"),
    "stationarity": ("ou", "bessel"),
    "kernel": ("ou", "bessel"),
}
# kind -> the process it samples; kind names start with their process
KIND_CHOICES = {
    "converge": {kind: kind.partition("_")[0] for kind in ENTRY_KINDS + ("hermite", "laguerre", "wishart")},
    "limit-law": {kind: kind.partition("_")[0] for kind in CONVERGENCE_KINDS},
    "weights": {kind: "laguerre" if kind == "symmetrized" else kind for kind in WEIGHT_CHECK_KINDS},
}
DEFAULT_KINDS = {
    "limit-law": {"hermite": "hermite_empirical", "wishart": "wishart_empirical", "laguerre": "laguerre_singular"},
    "weights": {"laguerre": "symmetrized"},
}


def _env_output_dir() -> str:
    load_dotenv()
    return os.getenv("BETAPROC_OUTPUT_DIR", "results")


def _env_threads() -> int:
    load_dotenv()
    return int(os.getenv("BETAPROC_THREADS", "1"))


class ExperimentConfig(BaseModel):
    """
    One experiment: what to simulate or verify, with every parameter explicit.

    `kind` selects the variant of an experiment (for example
    'hermite_empirical' for limit-law); an empty value picks the default
    variant for `process`.
    """
    model_config = ConfigDict(extra="forbid", frozen=True)

    experiment: Literal[EXPERIMENTS] = "sample"
    process: Literal["hermite", "laguerre", "wishart", "ou", "bessel"] = "hermite"
    kind: str = ""
    n: int = Field(4, ge=1)
    n_grid: List[int] = [64, 256, 1024]
    beta: float = Field(2.0, gt=0)
    a: float = Field(0.0, gt=-1)
    delta: float = Field(2.0, gt=0)
    ou_rate: float = Field(0.5, gt=0)
    ou_sigma: float = Field(1.0, gt=0)
    t_grid: List[float] = [1.0]
    x0_grid: List[float] = [1.0]
    x_grid: List[float] = [0.5, 1.0, 2.0]
    k: int = Field(1, ge=1)
    replicates: int = Field(500, ge=1)
    seed: int = Field(0, ge=0, lt=2 ** 64)
    output_dir: str = Field(default_factory=_env_output_dir)
    output_format: Literal["csv", "json"] = "csv"
    threads: int = Field(default_factory=_env_threads, ge=1)
    alpha: float = Field(0.01, gt=0, lt=1)
    epsilon: float = Field(0.05, gt=0)
    n_terms: int = Field(50, ge=1)
    spectra: bool = False

    @field_validator(*LIST_FIELDS, mode="before")
    @classmethod
    def split_list(cls, value):
        if isinstance(value, str):
            return [item.strip() for item in value.split(",") if item.strip()]
        return value

    @field_validator("t_grid")
    @classmethod
    def positive_times(cls, value):
        if not value or any(not t > 0 for t in value):
            raise ValueError("times must be a nonempty list of positive numbers")
        return value

    @field_validator("n_grid")
    @classmethod
    def increasing_sizes(cls, value):
        if not value or value[0] < 1 or any(b <= a for a, b in zip(value, value[1:])):
            raise ValueError("sizes must be a nonempty strictly increasing list of positive integers")
        return value

    @model_validator(mode="after")
    def consistent_experiment(self):
        processes = PROCESSES.get(self.experiment)
        if processes and self.process not in processes:
            raise ValueError(f"experiment {self.experiment} runs on processes {processes}, got {self.process}")
        choices = KIND_CHOICES.get(self.experiment)
        if self.kind and (choices is None or self.kind not in choices):
            raise ValueError(f"kind '{self.kind}' is not available for {self.experiment}, "
                             f"expected one of {tuple(choices or ())}")
        if self.kind and choices[self.kind] != self.process:
            raise ValueError(f"kind '{self.kind}' samples the {choices[self.kind]} process, "
                             f"got process={self.process}")
        if self.experiment == "weights" and self.k > self.n:
            raise ValueError(f"k={self.k} must not exceed n={self.n}")
        return self

    @property
    def resolved_kind(self) -> str:
        """`kind`, or the default variant of the experiment for `process`."""
        if self.kind:
            return self.kind
        return DEFAULT_KINDS.get(self.experiment, {}).get(self.process, self.process)

    @property
    def clock(self) -> OUParams:
        return OUParams(self.ou_rate, self.ou_sigma)

    @property
    def bessel(self) -> BesselParams:
        return BesselParams(self.delta, self.ou_rate, self.ou_sigma)

    @classmethod
    def build(cls, values: dict) -> "ExperimentConfig":
        """Validates `values`, raising ConfigError with one line per offending field."""
        try:
            return cls.model_validate(values)
        except ValidationError as e:
            lines = [f"{'.'.join(str(part) for part in error['loc']) or 'config'}: {error['msg']}"
                     for error in e.errors()]
            raise ConfigError("invalid configuration\n  " + "\n  ".join(lines)) from e

    @classmethod
    def from_ini(cls, config_path) -> "ExperimentConfig":
        """
        Reads the [EXPERIMENT] section of an INI file.

        Args:
            config_path (str): Path to the configuration file.

        Raises:
            ConfigError: If the file or the section is missing, or a field is invalid.
        """
        config = configparser.ConfigParser()
        if not config.read(config_path, encoding="utf-8"):
            raise ConfigError(f"{config_path}: configuration file not found")
        if not config.has_section(SECTION):
            raise ConfigError(f"{config_path}: missing [{SECTION}] section")
        return cls.build(dict(config.items(SECTION)))

    def with_overrides(self, **overrides) -> "ExperimentConfig":
        """A copy with the non-None overrides applied and validated."""
        values = self.model_dump()
        values.update({key: value for key, value in overrides.items() if value is not None})
        return self.build(values)

    def ini_values(self) -> dict:
        def text(value):
            if isinstance(value, bool):
                return str(value).lower()
            if isinstance(value, list):
                return ", ".join(text(item) for item in value)
            return repr(value) if isinstance(value, float) else str(value)

        return {name: text(value) for name, value in self.model_dump().items()}

    def to_ini(self, path) -> Path:
        config = configparser.ConfigParser()
        config[SECTION] = self.ini_values()
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            config.write(handle)
        return path

    @property
    def config_hash(self) -> str:
        """SHA-256 of the compact sorted-key JSON form, without output location and thread count."""
        canonical = json.dumps(self.model_dump(exclude=HASH_EXCLUDED), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
