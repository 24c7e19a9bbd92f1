"""Pydantic schemas for JSON output and CLI run configuration."""

from __future__ import annotations

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field, model_validator

from apps.pdgp.services.polynomial import BiPoly, Poly, UniPoly


# ------------------------------------------------------------------
# Polynomial JSON
# ------------------------------------------------------------------

class UniPolyJson(BaseModel):
    var: str = "z"
    terms: list[tuple[int, str]]


class BiPolyJson(BaseModel):
    vars: list[str] = Field(default_factory=lambda: ["w", "z"])
    terms: list[tuple[int, int, str]]


def poly_to_schema(p: Poly) -> UniPolyJson | BiPolyJson:
    """Terms ascending, coefficients as decimal strings."""
    if isinstance(p, BiPoly):
        return BiPolyJson(terms=[(we, ze, str(c)) for (we, ze), c in p])
    return UniPolyJson(var=p.var, terms=[(e, str(c)) for e, c in p])


def schema_to_poly(data: UniPolyJson | BiPolyJson) -> Poly:
    if isinstance(data, BiPolyJson):
        return BiPoly(((we, ze), int(c)) for we, ze, c in data.terms)
    return UniPoly(((e, int(c)) for e, c in data.terms), var=data.var)


# ------------------------------------------------------------------
# Command results
# ------------------------------------------------------------------

class ChordResult(BaseModel):
    word: str
    rank: UniPolyJson | None = None
    ribbon: UniPolyJson | None = None
    match: bool | None = None


class ProjectResult(BaseModel):
    invariant: str
    n: int
    polynomial: UniPolyJson | BiPolyJson
    constant: bool


class VerifyLine(BaseModel):
    label: str
    checked: int
    defects: int
    defect_word: str = "defects"

    def render(self) -> str:
        return f"{self.label}, {self.defects} {self.defect_word}"


class VerifyReport(BaseModel):
    check: str
    lines: list[VerifyLine]
    checked: int
    defects: int
    first_defect: str | None = None

    @property
    def ok(self) -> bool:
        return self.defects == 0


class BenchRun(BaseModel):
    threads: int
    elapsed_s: float


class BenchReport(BaseModel):
    n: int
    runs: list[BenchRun]
    polynomial: UniPolyJson
    identical: bool


# ------------------------------------------------------------------
# Run configuration
# ------------------------------------------------------------------

_GRAPH_COMMANDS = {"compute", "project", "bench"}


class RunConfig(BaseModel):
    """Validated CLI options; exactly one input source where one is needed."""

    command: Literal["compute", "chord", "verify", "project", "bench"]
    graph_file: Path | None = None
    edges: str | None = None
    n: int | None = Field(default=None, ge=0)
    word: str | None = None
    gen: str | None = None
    invariant: str = "pdgp"
    threads: int = Field(default=1, ge=1)
    cap: int | None = Field(default=None, ge=0)
    output: Literal["text", "json"] = "text"
    seed: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _one_input_source(self) -> RunConfig:
        graph_sources = [s for s in (self.graph_file, self.edges, self.gen) if s is not None]
        if self.command in _GRAPH_COMMANDS:
            if len(graph_sources) != 1 or self.word is not None:
                raise ValueError("give exactly one of --graph, --edges, --gen")
            if self.edges is not None and self.n is None:
                raise ValueError("--edges needs --n")
        elif self.command == "chord":
            if self.word is None or graph_sources:
                raise ValueError("chord needs --word and no graph input")
        return self
