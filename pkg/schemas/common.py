# schemas/common.py

from pydantic import BaseModel, Field
from typing import Any, List, Optional


class SuccessResponse(BaseModel):
    success: bool = True
    message: str
    data: Optional[Any] = None


class TermSchema(BaseModel):
    exp2: List[int] = Field(..., description="Doubled exponent of each variable")
    coeff: str = Field(..., description="Integer coefficient as a decimal string")
