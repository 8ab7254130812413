from dataclasses import dataclass
from typing import List, Tuple

from models.laurent import LaurentPoly

# a word letter: (generator index, +1 or -1)
Letter = Tuple[int, int]


@dataclass(frozen=True)
class Presentation:
    strands: int
    generator_count: int
    # colour (1-based strand id) of each generator
    colors: Tuple[int, ...]
    top_meridians: Tuple[int, ...]
    bottom_meridians: Tuple[int, ...]
    relations: Tuple[Tuple[Letter, ...], ...]
    kinked_strands: Tuple[int, ...] = ()

    @property
    def square_columns(self) -> Tuple[int, ...]:
        """Columns of (A B): everything except the bottom meridians."""
        bottom = set(self.bottom_meridians)
        return tuple(g for g in range(self.generator_count) if g not in bottom)


@dataclass(frozen=True)
class FoxMatrix:
    strands: int
    rows: Tuple[Tuple[LaurentPoly, ...], ...]
    column_generators: Tuple[int, ...]
    square_columns: Tuple[int, ...]
    bottom_columns: Tuple[int, ...]

    def square_block(self) -> List[List[LaurentPoly]]:
        index = {g: j for j, g in enumerate(self.column_generators)}
        return [[row[index[g]] for g in self.square_columns] for row in self.rows]

    def augmented(self) -> List[List[int]]:
        """Every entry evaluated at h = 1."""
        return [[entry.evaluate_at_one() for entry in row] for row in self.rows]
