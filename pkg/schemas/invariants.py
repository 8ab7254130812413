from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from schemas.common import TermSchema
from schemas.diagram import FaceComplexSchema


class StateSchema(BaseModel):
    index: int
    assignment: str = Field(..., description="Compass quadrant taken at each crossing")
    F2: List[int] = Field(..., description="Doubled filtration vector")
    G: int = Field(..., description="Grading")


class TorsionResponse(BaseModel):
    strands: int
    poly: List[TermSchema]
    text: str
    states: List[StateSchema]
    canonical: bool = Field(True, description="poly is the weight-normalised representative, not up to unit")
    fox_unit: Optional[str] = Field(None, description="Unit relating the Fox determinant to this polynomial")


class ClockMoveSchema(BaseModel):
    source: int
    target: int
    direction: str
    crossings: List[int]
    case: Optional[str] = None


class StateListResponse(BaseModel):
    strands: int
    states: List[StateSchema]
    clock_connected: bool
    moves: List[ClockMoveSchema] = Field(default_factory=list)
    case_counts: Dict[str, int] = Field(default_factory=dict)
    faces: Optional[FaceComplexSchema] = None


class HomologyEntrySchema(BaseModel):
    F2: List[int]
    d: int
    rank: int


class HomologyResponse(BaseModel):
    strands: int
    status: str
    entries: List[HomologyEntrySchema]
    euler: List[TermSchema]
    text: str


class FoxResponse(BaseModel):
    strands: int
    generators: int
    relations: int
    poly: List[TermSchema]
    text: str
    unit: Optional[str] = Field(None, description="sign * h^shift with fox = unit * state sum")


class SkeinResponse(BaseModel):
    crossing: int
    strand: int
    plus: str
    minus: str
    zero: str
    factor: Optional[str] = None
    unit: Optional[str] = None
    holds: bool
