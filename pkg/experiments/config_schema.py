"""
experiments/config_schema.py

Experiment configuration files: flat ``key = value`` lines under ``[section]``
headers, ``#`` comments. The text is parsed with line numbers kept for every key,
then validated by pydantic models that reject unknown keys.
"""

from dataclasses import dataclass, field
import math
from pathlib import Path
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

EXPERIMENT_NAMES = ("reconstruct1d", "phasediagram", "cdpimage", "landscape-verify", "check-assumption")
ALGORITHMS = ("md-random", "md-spectral", "wf-spectral")


class ConfigError(ValueError):
    """Invalid experiment configuration; messages carry the offending line number."""


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")

    @field_validator("*", mode="before")
    @classmethod
    def _split_lists(cls, value, info):
        annotation = cls.model_fields[info.field_name].annotation
        wants_list = "List" in str(annotation) or "list" in str(annotation)
        if wants_list and isinstance(value, str):
            return [item.strip() for item in value.split(",") if item.strip()]
        return value


class ExperimentSection(_Section):
    name: Optional[Literal[EXPERIMENT_NAMES]] = None
    seed: int = Field(default=0, ge=0)
    trials: int = Field(default=1, ge=1)
    init: Literal["random", "spectral"] = "random"
    output_path: str = ""


class ProblemSection(_Section):
    n: int = Field(default=128, ge=1)
    m: Optional[int] = Field(default=None, ge=1)
    P: Optional[int] = Field(default=None, ge=1)
    signal_norm: float = Field(default=1.0, gt=0)


class NoiseSection(_Section):
    model: Literal["none", "uniform_nonneg", "uniform_symmetric"] = "uniform_nonneg"
    target_mean: float = Field(default=1e-5, ge=0)
    half_width: Optional[float] = Field(default=None, ge=0)


class SolverSection(_Section):
    policy: Optional[Literal["constant", "backtracking"]] = None
    gamma: Optional[float] = Field(default=None, gt=0)
    L0: float = Field(default=1.0, gt=0)
    kappa: float = Field(default=0.01, gt=0, lt=1)
    xi: float = Field(default=0.9, gt=0, le=1)
    max_iters: Optional[int] = Field(default=None, ge=1)
    grad_tol: float = Field(default=0.0, ge=0)
    record_every: int = Field(default=100, ge=1)
    mu: float = Field(default=0.1, gt=0)
    mu_schedule: bool = False


class GridSection(_Section):
    n_grid: List[int] = Field(default_factory=lambda: [16, 24, 32, 40, 48, 56, 64])
    m_ratios: List[float] = Field(default_factory=lambda: [2, 3, 4, 5, 6, 7, 8, 9, 10])
    m_grid: Optional[List[int]] = None
    algorithms: List[Literal[ALGORITHMS]] = Field(default_factory=lambda: list(ALGORITHMS))
    gate_lambda: float = Field(default=0.5, gt=0, lt=1)

    @field_validator("n_grid", "m_ratios", "algorithms")
    @classmethod
    def _nonempty(cls, value):
        if not value:
            raise ValueError("grid lists must be nonempty")
        return value


class LandscapeSection(_Section):
    n: int = Field(default=2, ge=2)
    lam: float = Field(default=1.0 / 3.0, gt=0, lt=1)
    varrho: float = Field(default=1e-3, gt=0)
    eps_mean: float = Field(default=0.0, ge=0)
    samples: int = Field(default=100_000, ge=1)
    saddle_samples: int = Field(default=50, ge=1)
    points: int = Field(default=5, ge=1)
    m_factors: List[int] = Field(default_factory=lambda: [10, 100])
    concentration_trials: int = Field(default=20, ge=1)


class ImageSection(_Section):
    path: str = ""
    size: int = Field(default=64, ge=4)
    masks: int = Field(default=30, ge=1)


class ExperimentConfig(_Section):
    experiment: Literal[EXPERIMENT_NAMES]
    run: ExperimentSection = Field(default_factory=ExperimentSection, alias="experiment_section")
    problem: ProblemSection = Field(default_factory=ProblemSection)
    noise: NoiseSection = Field(default_factory=NoiseSection)
    solver: SolverSection = Field(default_factory=SolverSection)
    grid: GridSection = Field(default_factory=GridSection)
    landscape: LandscapeSection = Field(default_factory=LandscapeSection)
    image: ImageSection = Field(default_factory=ImageSection)

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    @property
    def seed(self) -> int:
        return self.run.seed

    def measurement_count(self) -> int:
        """Configured m, or the default for the chosen initialization."""
        if self.problem.m is not None:
            return self.problem.m
        n = self.problem.n
        if self.run.init == "spectral":
            return math.ceil(5 * n * math.log(n))
        return math.ceil(n * math.log(n) ** 2)


SECTION_FIELDS = {
    "experiment": "experiment_section",
    "problem": "problem",
    "noise": "noise",
    "solver": "solver",
    "grid": "grid",
    "landscape": "landscape",
    "image": "image",
}


@dataclass
class ParsedConfig:
    values: Dict[str, Dict[str, str]] = field(default_factory=dict)
    lines: Dict[Tuple[str, str], int] = field(default_factory=dict)
    section_lines: Dict[str, int] = field(default_factory=dict)


def parse_config_text(text: str) -> ParsedConfig:
    parsed = ParsedConfig()
    section: Optional[str] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip()
            if section not in SECTION_FIELDS:
                raise ConfigError(f"line {lineno}: unknown section [{section}]")
            parsed.values.setdefault(section, {})
            parsed.section_lines.setdefault(section, lineno)
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw.strip()!r}")
        if section is None:
            raise ConfigError(f"line {lineno}: key outside of any [section]")
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ConfigError(f"line {lineno}: missing key")
        if key in parsed.values[section]:
            first = parsed.lines[(section, key)]
            raise ConfigError(f"line {lineno}: duplicate key '{key}' in [{section}] (first set on line {first})")
        parsed.values[section][key] = value
        parsed.lines[(section, key)] = lineno
    return parsed


def _describe_error(parsed: ParsedConfig, error: dict) -> str:
    loc = tuple(str(part) for part in error.get("loc", ()))
    section = next((s for s, key in SECTION_FIELDS.items() if loc and loc[0] == key), None)
    key = loc[1] if len(loc) > 1 else None
    if section is not None and key is not None and (section, key) in parsed.lines:
        prefix = f"line {parsed.lines[(section, key)]}: "
    elif section is not None and section in parsed.section_lines:
        prefix = f"line {parsed.section_lines[section]}: "
    else:
        prefix = ""

    if error.get("type") == "extra_forbidden" and key is not None:
        return f"{prefix}unknown key '{key}' in [{section}]"
    where = f"[{section}] {key}" if key else ".".join(loc)
    return f"{prefix}{where}: {error.get('msg', 'invalid value')}"


def build_config(parsed: ParsedConfig, experiment: str, seed: Optional[int] = None,
                 output_path: Optional[str] = None) -> ExperimentConfig:
    named = parsed.values.get("experiment", {}).get("name")
    if named is not None and named != experiment:
        line = parsed.lines[("experiment", "name")]
        raise ConfigError(f"line {line}: config is for '{named}' but '{experiment}' was requested")

    payload: Dict[str, object] = {"experiment": experiment}
    for section, values in parsed.values.items():
        payload[SECTION_FIELDS[section]] = dict(values)
    run = dict(payload.get("experiment_section", {}))
    if seed is not None:
        run["seed"] = seed
    if output_path is not None:
        run["output_path"] = output_path
    payload["experiment_section"] = run

    try:
        return ExperimentConfig.model_validate(payload)
    except ValidationError as exc:
        messages = [_describe_error(parsed, err) for err in exc.errors()]
        raise ConfigError("; ".join(messages)) from exc


def load_config(path: Optional[str], experiment: str, seed: Optional[int] = None,
                output_path: Optional[str] = None) -> ExperimentConfig:
    if experiment not in EXPERIMENT_NAMES:
        raise ConfigError(f"unknown experiment '{experiment}'. Available: {list(EXPERIMENT_NAMES)}")
    text = ""
    if path:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return build_config(parse_config_text(text), experiment, seed=seed, output_path=output_path)
