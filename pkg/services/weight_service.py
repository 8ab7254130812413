import logging
from pathlib import Path
from typing import Dict, Optional, Tuple

from config.settings import get_settings
from dao.weight_table_dao import WEIGHT_COLUMNS, WeightTableDAO
from models.diagram import CrossingInfo, StrandTrace, Vector
from models.face_complex import COMPASS
from models.kauffman_state import CLOCK, ClockMove, KauffmanState
from models.weight_table import FRAME_FORWARD, ROLE_OVER, ROLE_SELF, ROLE_UNDER, ROLES, IndexVector, WeightTable
from utils.errors import CheckFailure, StructuralError

logger = logging.getLogger(__name__)

PROJECT_ROOT = Path(__file__).resolve().parents[1]

CASE_I = "I"
CASE_II = "II"
CASE_III = "III"

_QUADRANT_VECTORS = {"N": (0, 1), "E": (1, 0), "S": (0, -1), "W": (-1, 0)}


def compass_of(vector: Vector) -> str:
    x, y = vector
    if x == 0 and y < 0:
        return "S"
    if x == 0 and y > 0:
        return "N"
    if y == 0 and x > 0:
        return "E"
    if y == 0 and x < 0:
        return "W"
    raise StructuralError(f"crossing direction {vector} is not axis aligned")


def _right_of(direction: Vector, quadrant: str) -> bool:
    x, y = _QUADRANT_VECTORS[quadrant]
    return direction[0] * y - direction[1] * x < 0


def frame_quadrant(info: CrossingInfo, quadrant: str) -> str:
    """Rotate a compass quadrant so the crossing's forward direction becomes S."""
    steps = COMPASS.index(FRAME_FORWARD) - COMPASS.index(compass_of(info.forward))
    return COMPASS[(COMPASS.index(quadrant) + steps) % 4]


class WeightService:
    def __init__(self, table_path: Optional[str] = None):
        self.table_path = table_path or get_settings().weight_table_path
        self._table: Optional[WeightTable] = None

    def _resolve(self) -> Path:
        path = Path(self.table_path)
        return path if path.is_absolute() else PROJECT_ROOT / path

    def load_table(self) -> WeightTable:
        if self._table is not None:
            return self._table
        path = self._resolve()
        frame = WeightTableDAO(str(path)).load_frame()
        missing = [c for c in WEIGHT_COLUMNS if c not in frame.columns]
        if missing:
            raise StructuralError(f"weight table {path} lacks columns {missing}")

        entries: Dict[Tuple[int, str, str], Tuple[int, int]] = {}
        for row in frame.itertuples(index=False):
            if row.orient.strip() != "down":
                continue
            key = (int(row.sign), row.quadrant.strip(), row.strand_role.strip())
            entries[key] = (int(row.filt2), int(row.grad))

        expected = {(s, q, r) for s in (1, -1) for q in COMPASS for r in ROLES}
        if set(entries) != expected:
            raise StructuralError(f"weight table {path} does not cover every (sign, quadrant, role)")
        self._table = WeightTable(entries=entries, source=str(path))
        logger.info(f"⚖️ Loaded weight table from {path}")
        return self._table

    def filtration_vector(self, trace: StrandTrace, state: KauffmanState,
                          table: Optional[WeightTable] = None) -> IndexVector:
        table = table or self.load_table()
        values = [0] * trace.strands
        for info, quadrant in zip(trace.crossings, state.quadrants):
            q = frame_quadrant(info, quadrant)
            if info.is_self:
                values[info.over - 1] += table.filt2(info.sign, q, ROLE_SELF)
            else:
                values[info.over - 1] += table.filt2(info.sign, q, ROLE_OVER)
                values[info.under - 1] += table.filt2(info.sign, q, ROLE_UNDER)
        return IndexVector(tuple(values))

    def grading(self, trace: StrandTrace, state: KauffmanState,
                table: Optional[WeightTable] = None) -> int:
        table = table or self.load_table()
        return sum(table.grad(info.sign, frame_quadrant(info, quadrant))
                   for info, quadrant in zip(trace.crossings, state.quadrants))

    def site_delta(self, trace: StrandTrace, move: ClockMove) -> IndexVector:
        """Filtration change source -> target read off the two crossings of the move.

        A marker that moves from the left to the right of a strand changes that
        strand's filtration by +1/2 where the strand passes over and by -1/2
        where it passes under; strands the marker does not cross keep their weight.
        """
        values = [0] * trace.strands
        for c in move.crossings:
            info = trace.crossings[c]
            before, after = move.source.quadrants[c], move.target.quadrants[c]
            for strand, direction, over in ((info.over, info.over_dir, True),
                                            (info.under, info.under_dir, False)):
                change = int(_right_of(direction, after)) - int(_right_of(direction, before))
                values[strand - 1] += change if over else -change
        return IndexVector(tuple(values))

    def classify_site(self, trace: StrandTrace, move: ClockMove) -> Tuple[str, IndexVector]:
        """Case of the move site, with the change taken in the clockwise direction.

        Case I: the shared edge passes both crossings on the same level.
        Case II: it passes under where it starts and over where it ends.
        Case III: it passes over where it starts and under where it ends.
        """
        delta = self.site_delta(trace, move)
        clockwise = delta if move.direction == CLOCK else IndexVector(tuple(-v for v in delta.values2))
        nonzero = [v for v in clockwise.values2 if v != 0]
        if not nonzero:
            return CASE_I, delta
        if nonzero == [-2]:
            return CASE_II, delta
        if nonzero == [2]:
            return CASE_III, delta
        raise CheckFailure(f"move site changes filtration by {clockwise.to_text()}",
                           item=f"{move.source.label()} -> {move.target.label()}")

    def clock_delta_check(self, trace: StrandTrace, move: ClockMove,
                          table: Optional[WeightTable] = None) -> str:
        """Compare the weight-table change across a move with the case of its site."""
        table = table or self.load_table()
        label = f"{move.source.label()} -> {move.target.label()}"
        case, expected = self.classify_site(trace, move)

        observed = self.filtration_vector(trace, move.target, table) - self.filtration_vector(trace, move.source, table)
        if observed != expected:
            raise CheckFailure(
                f"filtration changes by {observed.to_text()}, case {case} site gives {expected.to_text()}",
                item=label,
            )

        rise = self.grading(trace, move.target, table) - self.grading(trace, move.source, table)
        if move.direction != CLOCK:
            rise = -rise
        wanted = {CASE_I: (-1, 1), CASE_II: (-1,), CASE_III: (1,)}[case]
        if rise not in wanted:
            raise CheckFailure(f"case {case} move raises the grading by {rise}", item=label)
        return case
