from dataclasses import dataclass
from typing import Dict, FrozenSet, Tuple

CLOCK = "clock"
COUNTERCLOCK = "counterclock"


@dataclass(frozen=True)
class KauffmanState:
    # one compass quadrant per crossing, in crossing order
    quadrants: Tuple[str, ...]
    # one face per crossing, matching ``quadrants``
    faces: Tuple[int, ...]
    # face taken by each meridian, left to right
    meridian_faces: Tuple[int, ...]

    def label(self) -> str:
        return "".join(self.quadrants) or "-"


@dataclass(frozen=True)
class ForestPair:
    # child face -> parent face, per colour; roots have no entry
    black_parent: Dict[int, int]
    white_parent: Dict[int, int]
    black_edges: FrozenSet[int]
    white_edges: FrozenSet[int]
    black_roots: Tuple[int, ...]
    white_roots: Tuple[int, ...]


@dataclass(frozen=True)
class ClockMove:
    direction: str
    source: KauffmanState
    target: KauffmanState
    crossings: Tuple[int, int]
