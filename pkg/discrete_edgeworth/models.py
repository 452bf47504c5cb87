"""
Pydantic models for validated CLI runs.
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from discrete_edgeworth.config import DEFAULT_CONFIG

Command = Literal[
    "law", "compare", "scaling", "figure1", "theta-check", "oracle", "witness", "expansion"
]

NEEDS_N = {"law", "compare", "figure1", "oracle", "witness", "expansion"}


class RunConfig(BaseModel):
    """Parsed command line; every command's preconditions hold once built."""

    model_config = ConfigDict(frozen=True)

    command: Command
    n: int | None = None
    n_list: list[int] | None = None
    w_min: float | None = None
    w_max: float | None = None
    step: float | None = None
    m: int | None = None
    kernel: Literal["unit", "figure1"] = "unit"
    tol: float = 1e-12
    out: str = "-"
    threads: int | None = None
    seed: int = 7
    pairs: int = 100
    statistic: Literal["w", "student_t"] = "w"
    timing: bool = False

    @field_validator("threads")
    @classmethod
    def threads_positive(cls, v: int | None) -> int | None:
        if v is not None and v < 1:
            raise ValueError(f"threads must be >= 1, got {v}")
        return v

    @field_validator("tol")
    @classmethod
    def tol_positive(cls, v: float) -> float:
        if not v > 0:
            raise ValueError(f"tol must be > 0, got {v}")
        return v

    @field_validator("out")
    @classmethod
    def out_nonempty(cls, v: str) -> str:
        if not v or not v.strip():
            raise ValueError("out must be a path or '-'")
        return v.strip()

    @model_validator(mode="after")
    def command_preconditions(self) -> "RunConfig":
        cfg = DEFAULT_CONFIG
        cmd = self.command
        if cmd in NEEDS_N and self.n is None:
            raise ValueError(f"{cmd} needs --n")

        if cmd in ("law", "compare", "expansion") and not 1 <= self.n <= cfg.max_n:
            raise ValueError(f"n must lie in [1, {cfg.max_n}], got {self.n}")
        if cmd == "compare" and (self.w_max is None or self.w_max < 8.0):
            raise ValueError(f"w_max must be >= 8, got {self.w_max}")
        if cmd == "scaling":
            ns = self.n_list or []
            if not ns:
                raise ValueError("scaling needs a non-empty --n-list")
            if ns != sorted(ns):
                raise ValueError(f"n_list must be sorted ascending, got {ns}")
            if ns[0] < 1 or ns[-1] > cfg.max_n:
                raise ValueError(f"n_list values must lie in [1, {cfg.max_n}]")
        if cmd == "figure1":
            if self.n < 3:
                raise ValueError(f"n must be >= 3, got {self.n}")
            if self.m is None or self.m < 1:
                raise ValueError(f"m must be >= 1, got {self.m}")
        if cmd in ("figure1", "expansion"):
            lo = 0.0 if cmd == "expansion" else None
            if self.w_min is None or self.w_max is None or self.step is None:
                raise ValueError(f"{cmd} needs --w-min, --w-max and --step")
            if self.step <= 0:
                raise ValueError(f"step must be > 0, got {self.step}")
            if lo is None and self.w_min <= 0:
                raise ValueError(f"w_min must be > 0, got {self.w_min}")
            if lo is not None and self.w_min < lo:
                raise ValueError(f"w_min must be >= 0, got {self.w_min}")
            if self.w_max < self.w_min:
                raise ValueError(f"w_max {self.w_max} is below w_min {self.w_min}")
        if cmd == "theta-check" and self.pairs < 1:
            raise ValueError(f"pairs must be >= 1, got {self.pairs}")
        if cmd == "oracle" and not 1 <= self.n <= cfg.brute_force_max_n:
            raise ValueError(f"n must lie in [1, {cfg.brute_force_max_n}], got {self.n}")
        if cmd == "witness" and (self.n < 3 or self.n % 3 != 0):
            raise ValueError(f"n must be a positive multiple of 3, got {self.n}")
        return self
