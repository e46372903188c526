"""Request and response models for the HTTP service."""

from __future__ import annotations

from typing import Any, Literal, Optional, Union

from pydantic import BaseModel, Field

Label = Union[list[int], dict[str, Any], str]


class GroupSpec(BaseModel):
    degree: int
    generators: list[str] = Field(default_factory=list)
    name: Optional[str] = None


class PairSpec(BaseModel):
    kind: Literal["s2n-bn", "sn-sn1", "gxgopp", "custom"]
    n: Optional[int] = None
    group: Optional[GroupSpec] = None
    subgroup: Optional[GroupSpec] = None


class GroupRequest(BaseModel):
    group: GroupSpec


class PairRequest(BaseModel):
    pair: PairSpec
    seed: int = 0


class CoeffsRequest(BaseModel):
    pair: PairSpec
    method: Literal["formula", "oracle", "both"] = "formula"
    r: int = 2


class MomentsRequest(BaseModel):
    group: GroupSpec
    max_m: int = 4


class ClassInfo(BaseModel):
    rep: str
    size: int


class ClassesResponse(BaseModel):
    group: str
    order: int
    classes: list[ClassInfo]


class ComplexValue(BaseModel):
    re: float
    im: float


class Irreducible(BaseModel):
    degree: int
    values: list[ComplexValue]
    exact: list[list[list[int]]]  # per class: [[power, multiplicity], ...]


class CharTableResponse(BaseModel):
    group: str
    order: int
    exponent: int
    classes: list[ClassInfo]
    irreducibles: list[Irreducible]


class CosetInfo(BaseModel):
    rep: str
    size: int
    label: Label


class CosetsResponse(BaseModel):
    pair: str
    order: int
    subgroup_order: int
    cosets: list[CosetInfo]


class GelfandCheckResponse(BaseModel):
    pair: str
    gelfand: bool
    multiplicity_free: bool
    commutative: bool
    multiplicities: list[int]


class ZonalResponse(BaseModel):
    pair: str
    cosets: list[CosetInfo]
    omega: list[list[ComplexValue]]


class CoeffEntry(BaseModel):
    lhs: list[Label]
    rhs: Label
    value: int


class CoeffsResponse(BaseModel):
    pair: str
    method: str
    agree: Optional[bool] = None
    entries: list[CoeffEntry]


class MomentRow(BaseModel):
    class_rep: str = Field(serialization_alias="class")
    m: int
    direct: str
    structural: str
    equal: bool


class MomentsResponse(BaseModel):
    group: str
    rows: list[MomentRow]


class CheckInfo(BaseModel):
    name: str
    ok: bool
    detail: str = ""


class VerifyResponse(BaseModel):
    pair: str
    ok: bool
    checks: list[CheckInfo]


class ErrorBody(BaseModel):
    error: str
    detail: str
    count: Optional[int] = None
