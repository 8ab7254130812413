from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Tuple

from models.kauffman_state import KauffmanState
from models.laurent import LaurentPoly
from models.weight_table import IndexVector

# (doubled filtration vector, grading)
HomologyKey = Tuple[Tuple[int, ...], int]


class HomologyStatus(str, Enum):
    BRAID = "homology (braid)"
    ALTERNATING = "homology (alternating)"
    CHAIN_RANKS = "chain-ranks-only"


@dataclass(frozen=True)
class HomologyTable:
    strands: int
    status: HomologyStatus
    entries: Dict[HomologyKey, int] = field(compare=False)

    @property
    def is_homology(self) -> bool:
        return self.status != HomologyStatus.CHAIN_RANKS

    def sorted_entries(self) -> List[Tuple[HomologyKey, int]]:
        return sorted(self.entries.items())


@dataclass(frozen=True)
class StateRecord:
    state: KauffmanState
    filt2: Tuple[int, ...]
    grading: int

    @property
    def index(self) -> IndexVector:
        return IndexVector(self.filt2)

    @property
    def sign(self) -> int:
        return -1 if self.grading % 2 else 1


@dataclass(frozen=True)
class StateSum:
    strands: int
    records: Tuple[StateRecord, ...]
    polynomial: LaurentPoly
