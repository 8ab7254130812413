from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class CheckRequest(BaseModel):
    max_crossings: Optional[int] = Field(None, ge=0, le=12, description="Crossing limit for random diagrams")
    seed: Optional[int] = Field(None, description="Seed for the random suites")


class SuiteSchema(BaseModel):
    name: str
    passed: int
    failed: int
    failures: List[str] = Field(default_factory=list)


class CheckResponse(BaseModel):
    ok: bool
    seed: int
    max_crossings: int
    suites: List[SuiteSchema]
    case_counts: Dict[str, int] = Field(default_factory=dict)
    non_integral: List[str] = Field(default_factory=list)
