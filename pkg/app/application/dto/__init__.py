"""
Data Transfer Objects for the application layer.
"""

from dataclasses import dataclass, field
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ...domain.value_objects.solution import Engine, SolveStatus
from ..exceptions import EXIT_ERROR, EXIT_INAPPLICABLE, EXIT_NEGATIVE, EXIT_SOLVED

EngineChoice = Literal["auto", "brute", "square", "s123"]


# Request DTOs
@dataclass
class SolveEdsRequest:
    """Request for a weighted efficient domination run."""

    graph_path: str
    engine: EngineChoice = "auto"
    weights_path: str | None = None
    unweighted: bool = False


@dataclass
class CheckGraphRequest:
    """Request for class-membership checks on one graph."""

    graph_path: str
    chordal: bool = False
    free: list[str] = field(default_factory=list)
    square_chordal: bool = False
    split: bool = False
    classes: bool = False


@dataclass
class SolveMwisRequest:
    graph_path: str
    weights_path: str | None = None


# Response DTOs
@dataclass
class RunReport:
    """Machine-readable result of one CLI command.

    ``verdict`` is set by predicate commands (``check``) and decides the exit
    code there; solver commands derive the exit code from ``status``.
    """

    command: str
    status: SolveStatus
    input_digest: str | None = None
    engine: Engine | None = None
    weight: int | None = None
    vertices: list[int] | None = None
    timing_ms: float | None = None
    verdict: bool | None = None
    message: str | None = None
    details: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.weight is not None and self.status is not SolveStatus.SOLVED:
            raise ValueError("weight is only reported for solved runs")
        if self.status is SolveStatus.SOLVED and self.verdict is None and self.weight is None:
            raise ValueError("a solved run must report its weight")

    @property
    def exit_code(self) -> int:
        if self.status is SolveStatus.ERROR:
            return EXIT_ERROR
        if self.verdict is not None:
            return EXIT_SOLVED if self.verdict else EXIT_NEGATIVE
        return {
            SolveStatus.SOLVED: EXIT_SOLVED,
            SolveStatus.NO_EDS: EXIT_NEGATIVE,
            SolveStatus.INAPPLICABLE: EXIT_INAPPLICABLE,
        }[self.status]

    def to_dict(self, include_timing: bool = False) -> dict[str, Any]:
        """JSON payload; absent fields are omitted and sets become sorted lists."""
        payload: dict[str, Any] = {"command": self.command, "status": self.status.value}
        if self.input_digest is not None:
            payload["input_digest"] = self.input_digest
        if self.engine is not None:
            payload["engine"] = self.engine.value
        if self.weight is not None:
            payload["weight"] = self.weight
        if self.vertices is not None:
            payload["set"] = sorted(self.vertices)
        if self.verdict is not None:
            payload["result"] = self.verdict
        if self.message is not None:
            payload["message"] = self.message
        if include_timing and self.timing_ms is not None:
            payload["timing_ms"] = round(self.timing_ms, 3)
        payload.update(self.details)
        return payload


@dataclass
class GeneratedGraph:
    """Output of a generator command: edge-list text plus what produced it."""

    text: str
    n: int
    m: int
    seed: int | None = None
    exhausted: bool = False


@dataclass
class CampaignRow:
    """One CSV row: per-engine status and weight plus the agreement flags."""

    index: int
    n: int
    m: int
    results: dict[str, tuple[str, int | None]]
    agree: bool
    invariant_ok: bool = True
    note: str = ""

    def as_csv_fields(self, engines: list[str]) -> list[str]:
        fields = [str(self.index), str(self.n), str(self.m)]
        for name in engines:
            status, weight = self.results.get(name, ("skipped", None))
            fields.extend([status, "" if weight is None else str(weight)])
        fields.extend([str(self.agree).lower(), str(self.invariant_ok).lower(), self.note])
        return fields


@dataclass
class CampaignResult:
    rows: list[CampaignRow]
    engines: list[str]

    @property
    def mismatches(self) -> list[CampaignRow]:
        return [row for row in self.rows if not row.agree or not row.invariant_ok]

    @property
    def exit_code(self) -> int:
        return EXIT_NEGATIVE if self.mismatches else EXIT_SOLVED

    def header(self) -> list[str]:
        columns = ["index", "n", "m"]
        for name in self.engines:
            columns.extend([f"{name}_status", f"{name}_weight"])
        columns.extend(["agree", "invariant_ok", "note"])
        return columns


class CampaignSpec(BaseModel):
    """Validated campaign description read from a key-value spec file."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    generator: Literal["interval", "chordal", "hfree", "x3c"]
    count: int = Field(ge=1)
    n: int = Field(ge=0)
    n_min: int = Field(default=1, ge=0)
    seed: int = 0
    engines: list[Engine] = Field(min_length=1)
    compare: bool = True
    density: float = Field(default=0.3, ge=0.0, le=1.0)
    edge_bias: float | None = Field(default=None, ge=0.0, le=1.0)
    forbid: list[str] = Field(default_factory=list)
    max_weight: int = Field(default=9, ge=1)
    unit_weights: bool = False
    max_tries: int | None = Field(default=None, ge=1)
    triples: int = Field(default=4, ge=0)
    covering: bool = True
    check_square_chordal: bool = False
    require_applicable: bool = False

    @field_validator("engines", "forbid", mode="before")
    @classmethod
    def _split_list(cls, value: Any) -> Any:
        if isinstance(value, str):
            return [item.strip() for item in value.split(",") if item.strip()]
        return value

    @model_validator(mode="after")
    def _check_ranges(self) -> "CampaignSpec":
        if self.n_min > self.n:
            raise ValueError(f"n_min {self.n_min} exceeds n {self.n}")
        if self.generator == "hfree" and not self.forbid:
            raise ValueError("generator hfree needs a forbid list")
        if self.generator == "x3c" and self.n % 3 != 0:
            raise ValueError("generator x3c needs n divisible by 3")
        return self
