"""Request and response schemas for the HTTP API.

Matroid inputs arrive either as inline file content (matrix or graph
format) or as a constructor name; the CLI resolves file paths to text
before sending, so the service never touches the filesystem.
"""

from __future__ import annotations

from typing import Optional, Union

from pydantic import BaseModel, Field, model_validator

from ..audit import DEFAULT_MAX_ELEMENTS

# witnesses are label lists, label-list pairs, or excluded-minor names
Witness = Union[str, list[str], list[list[str]]]


class MatroidInput(BaseModel):
    text: Optional[str] = Field(None, description="matrix or graph file content")
    name: Optional[str] = Field(None, description="constructor name, e.g. 's8' or 'K:4'")

    @model_validator(mode="after")
    def _exactly_one_source(self) -> "MatroidInput":
        if (self.text is None) == (self.name is None):
            raise ValueError("provide exactly one of 'text' or 'name'")
        return self


class MatroidRequest(BaseModel):
    matroid: MatroidInput


class AuditRequest(BaseModel):
    max_elements: int = DEFAULT_MAX_ELEMENTS
    seed: int = 0
    lemma: Optional[str] = None


class ExminorsRequest(BaseModel):
    rank: int


class CensusRequest(BaseModel):
    elements: int
    simple: bool = False


class HealthResponse(BaseModel):
    status: str


class CircuitsResponse(BaseModel):
    size: int
    rank: int
    corank: int
    circuit_count: int
    circuits: list[list[str]]
    truncated: bool


class RecognitionComponent(BaseModel):
    elements: list[str]
    is_circuit_difference: bool
    base: Optional[str] = None
    series_classes: Optional[dict[str, list[str]]] = None
    violating_pair: Optional[list[list[str]]] = None


class RecognitionResponse(BaseModel):
    applicable: bool
    reason: Optional[str] = None
    excluded_minor: Optional[str] = None
    is_circuit_difference: Optional[bool] = None
    empty: Optional[bool] = None
    components: Optional[list[RecognitionComponent]] = None


class AnalyzeResponse(CircuitsResponse):
    labels: list[str]
    connected: bool
    components: list[list[str]]
    loops: list[str]
    coloops: list[str]
    cosimple: bool
    predicates: dict[str, bool]
    witnesses: dict[str, Witness]
    recognition: Optional[RecognitionResponse] = None


class AuditFailureModel(BaseModel):
    description: str
    matroid: str


class AuditResultModel(BaseModel):
    lemma: str
    corpus: str
    checked: int
    failures: list[AuditFailureModel]
    seconds: float
    passed: bool
    note: str = ""


class AuditResponse(BaseModel):
    max_elements: int
    seed: int
    passed: bool
    results: list[AuditResultModel]


class ExminorEntry(BaseModel):
    size: int
    rank: int
    member: str = Field(description="serialized family member")
    dual: str = Field(description="serialized excluded series minor")
    verified: bool = Field(description="dual passes the excluded-series-minor test")


class ExminorsResponse(BaseModel):
    rank: int
    count: int
    entries: list[ExminorEntry]


class CensusResponse(BaseModel):
    max_elements: int
    simple: bool
    total: int
    by_size: dict[int, int]
    signature_deduped: bool
    members: list[str]
