"""Wire formats of the HTTP service, shared by the CLI client.

Polynomial values travel as exact coefficient strings in ascending
degree ('3', '1/2', ...) so nothing caps integer width; `betti` carries
the same coefficients as ints (they are Betti numbers when z = id,
traces otherwise, and always integral).
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

SeriesTag = Literal["B", "C", "D"]


class EvalRequest(BaseModel):
    series: SeriesTag
    partition: list[int]
    z: list[int] = []


class EvalResponse(BaseModel):
    series: str
    partition: list[int]
    z: list[int]
    poly: list[str]
    betti: list[int]


class TableRequest(BaseModel):
    series: SeriesTag
    n: int = Field(ge=1)


class TableRow(EvalResponse):
    very_even: bool = False


class TableResponse(BaseModel):
    series: str
    n: int
    rows: list[TableRow]


class ExpandRequest(BaseModel):
    series: SeriesTag
    partition: list[int]
    z: list[int] = []
    show_null: bool = False


class ExpandTerm(BaseModel):
    coeff: list[str]
    child: Optional[list[int]] = None  # None marks the formally-zero symbol
    child_z: list[int]
    null: bool


class ExpandResponse(BaseModel):
    series: str
    partition: list[int]
    z: list[int]
    terms: list[ExpandTerm]


class VerifyRequest(BaseModel):
    series: SeriesTag
    max_size: int = Field(ge=1)
    q: int = 3
    twisted: bool = False
    twisted_max_size: int = 4


class VerifyRow(BaseModel):
    series: str
    partition: list[int]
    z: list[int]
    q: int
    count: int
    predicted: int
    match: bool


class VerifyResponse(BaseModel):
    rows: list[VerifyRow]
    all_match: bool
