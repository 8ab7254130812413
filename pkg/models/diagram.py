from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

# (level, position); level 0 is the top edge, positions are 1-based
Segment = Tuple[int, int]
Vector = Tuple[int, int]


class EventKind(str, Enum):
    CROSS_POS = "x+"
    CROSS_NEG = "x-"
    CAP = "cap"
    CUP = "cup"


@dataclass(frozen=True)
class Event:
    kind: EventKind
    pos: int

    @property
    def is_crossing(self) -> bool:
        return self.kind in (EventKind.CROSS_POS, EventKind.CROSS_NEG)

    @property
    def token(self) -> str:
        return f"{self.kind.value} {self.pos}"

    def width_after(self, width: int) -> int:
        if self.kind == EventKind.CAP:
            return width + 2
        if self.kind == EventKind.CUP:
            return width - 2
        return width


@dataclass(frozen=True)
class OrientationHint:
    level: int
    pos: int
    down: bool


@dataclass(frozen=True)
class Diagram:
    """A string-link projection read top to bottom as one event per level.

    ``closed_color`` is only set on oriented smoothings: closed components are
    then allowed and carry that strand's colour; ``hints`` fix their direction.
    """
    strands: int
    events: Tuple[Event, ...] = ()
    closed_color: Optional[int] = None
    hints: Tuple[OrientationHint, ...] = ()

    @property
    def crossing_events(self) -> List[int]:
        return [j for j, ev in enumerate(self.events) if ev.is_crossing]

    @property
    def crossing_count(self) -> int:
        return len(self.crossing_events)

    def widths(self) -> List[int]:
        widths = [self.strands]
        for ev in self.events:
            widths.append(ev.width_after(widths[-1]))
        return widths


@dataclass(frozen=True)
class CrossingInfo:
    index: int
    event_index: int
    pos: int
    over: int
    under: int
    sign: int
    over_dir: Vector
    under_dir: Vector

    @property
    def is_self(self) -> bool:
        return self.over == self.under

    @property
    def forward(self) -> Vector:
        """Sum of the two outgoing directions; always axis aligned."""
        return (self.over_dir[0] + self.under_dir[0], self.over_dir[1] + self.under_dir[1])


@dataclass(frozen=True)
class Passage:
    crossing: int
    over: bool


@dataclass(frozen=True)
class StrandTrace:
    strands: int
    segment_strand: Dict[Segment, int] = field(compare=False)
    segment_down: Dict[Segment, bool] = field(compare=False)
    paths: Tuple[Tuple[Segment, ...], ...]
    passages: Tuple[Tuple[Passage, ...], ...]
    closed_paths: Tuple[Tuple[Segment, ...], ...]
    closed_passages: Tuple[Tuple[Passage, ...], ...]
    crossings: Tuple[CrossingInfo, ...]
    top_order: Tuple[int, ...]


@dataclass(frozen=True)
class DiagramBlock:
    """One side-by-side piece of a split diagram, with where it came from."""
    diagram: Diagram
    strands: Tuple[int, ...]
    event_indices: Tuple[int, ...]
