from dataclasses import dataclass, field
from typing import Dict, Tuple

# (sign, quadrant in the both-down frame, strand role) -> (doubled filtration, grading)
WeightKey = Tuple[int, str, str]

ROLE_OVER = "over"
ROLE_UNDER = "under"
ROLE_SELF = "self"
ROLES = (ROLE_OVER, ROLE_UNDER, ROLE_SELF)

# both-down frame: travel is toward S
FRAME_FORWARD = "S"


@dataclass(frozen=True)
class WeightTable:
    entries: Dict[WeightKey, Tuple[int, int]] = field(compare=False)
    source: str = "builtin"

    def filt2(self, sign: int, quadrant: str, role: str) -> int:
        return self.entries[(sign, quadrant, role)][0]

    def grad(self, sign: int, quadrant: str) -> int:
        # grading ignores which strands meet at the crossing
        return self.entries[(sign, quadrant, ROLE_SELF)][1]


@dataclass(frozen=True)
class IndexVector:
    values2: Tuple[int, ...]

    @property
    def is_integral(self) -> bool:
        return all(v % 2 == 0 for v in self.values2)

    def __sub__(self, other: "IndexVector") -> "IndexVector":
        return IndexVector(tuple(a - b for a, b in zip(self.values2, other.values2)))

    def to_text(self) -> str:
        parts = [str(v // 2) if v % 2 == 0 else f"{v}/2" for v in self.values2]
        return "(" + ",".join(parts) + ")"
