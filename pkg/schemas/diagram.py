from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field


class DiagramRequest(BaseModel):
    mld: str = Field(..., description="Diagram in MLD text format")
    format: Literal["text", "json"] = Field("json", description="Preferred rendering of polynomials")


class StatesRequest(DiagramRequest):
    dump_faces: bool = Field(False, description="Include the face complex in the response")


class SkeinRequest(DiagramRequest):
    crossing: int = Field(..., ge=1, description="1-based crossing index in event order")
    allow_mixed: bool = Field(False, description="Allow a crossing between two different strands")


class OpsRequest(BaseModel):
    mld: str = Field(..., description="First diagram in MLD text format")
    other_mld: Optional[str] = Field(None, description="Second diagram, for amalgamate and compose")
    strand: Optional[int] = Field(None, ge=1, description="Strand to cable, for satellite")
    width: int = Field(2, ge=1, description="Cable width, for satellite")


class DiagramResponse(BaseModel):
    mld: str = Field(..., description="Rendered MLD text")
    strands: int
    crossings: int
    is_braid: bool
    is_alternating: bool
    linking_numbers: Dict[str, int] = Field(default_factory=dict, description="lk keyed by 'i,j'")


class FaceSchema(BaseModel):
    id: int
    color: str
    anchor: List[int]


class CrossingFacesSchema(BaseModel):
    index: int = Field(..., description="1-based crossing index")
    quadrants: Dict[str, int]


class FaceComplexSchema(BaseModel):
    faces: List[FaceSchema]
    crossings: List[CrossingFacesSchema]
    meridians: List[List[int]]
    u_face: int
