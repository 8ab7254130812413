import itertools
import logging
from typing import Dict, List, Optional

from models.diagram import Diagram
from models.homology import StateRecord, StateSum
from models.kauffman_state import KauffmanState
from models.laurent import LaurentPoly
from models.report import IdentityCheck, IdentityOptions, IdentityReport, SkeinEntry, SkeinReport
from services.diagram_service import DiagramService
from services.planar_service import PlanarService
from services.state_service import StateService
from services.weight_service import WeightService
from utils.errors import IndexRangeError

logger = logging.getLogger(__name__)

FACTOR_HALF = "half"
FACTOR_LINEAR = "linear"
FACTOR_DEGENERATE = "degenerate"


class TorsionService:
    def __init__(self,
                 diagram_service: Optional[DiagramService] = None,
                 planar_service: Optional[PlanarService] = None,
                 state_service: Optional[StateService] = None,
                 weight_service: Optional[WeightService] = None):
        self.diagram_service = diagram_service or DiagramService()
        self.planar_service = planar_service or PlanarService(self.diagram_service)
        self.state_service = state_service or StateService()
        self.weight_service = weight_service or WeightService()

    # ---------------- state sums ----------------

    def _block_records(self, diagram: Diagram) -> List[StateRecord]:
        table = self.weight_service.load_table()
        trace = self.diagram_service.trace(diagram)
        faces = self.planar_service.build_faces(diagram)
        records = []
        for state in self.state_service.enumerate_states(faces):
            records.append(StateRecord(
                state=state,
                filt2=self.weight_service.filtration_vector(trace, state, table).values2,
                grading=self.weight_service.grading(trace, state, table),
            ))
        return records

    def state_sum(self, diagram: Diagram) -> StateSum:
        """Signed sum over Kauffman states; split projections are handled block by block."""
        if diagram.closed_color is not None:
            records = self._block_records(diagram)
        else:
            blocks = self.diagram_service.split(diagram)
            if len(blocks) == 1:
                records = self._block_records(diagram)
            else:
                records = self._combine_blocks(diagram, blocks)

        polynomial = LaurentPoly.zero(diagram.strands)
        for record in records:
            polynomial = polynomial + LaurentPoly.monomial(diagram.strands, record.filt2, record.sign)
        logger.debug(f"🧮 State sum over {len(records)} states: {polynomial.to_text()}")
        return StateSum(strands=diagram.strands, records=tuple(records), polynomial=polynomial)

    def _combine_blocks(self, diagram: Diagram, blocks) -> List[StateRecord]:
        faces = self.planar_service.build_faces(diagram)
        crossing_of: Dict[int, int] = {j: c for c, j in enumerate(diagram.crossing_events)}
        meridian_faces = self.state_service.meridian_assignment(faces)

        per_block = []
        for block in blocks:
            global_crossings = [crossing_of[j] for j in block.event_indices if j in crossing_of]
            per_block.append((global_crossings, self._block_records(block.diagram)))

        records = []
        for combo in itertools.product(*(recs for _, recs in per_block)):
            quadrants: List[str] = [""] * diagram.crossing_count
            filt2: List[int] = []
            grading = 0
            for (global_crossings, _), record in zip(per_block, combo):
                for c, q in zip(global_crossings, record.state.quadrants):
                    quadrants[c] = q
                filt2.extend(record.filt2)
                grading += record.grading
            state = KauffmanState(
                quadrants=tuple(quadrants),
                faces=tuple(faces.crossings[c].face(q) for c, q in enumerate(quadrants)),
                meridian_faces=meridian_faces,
            )
            records.append(StateRecord(state=state, filt2=tuple(filt2), grading=grading))
        return records

    def torsion_polynomial(self, diagram: Diagram) -> LaurentPoly:
        return self.state_sum(diagram).polynomial

    def specialize_to_closure(self, diagram: Diagram, strand: int) -> LaurentPoly:
        if not 1 <= strand <= diagram.strands:
            raise IndexRangeError(f"strand {strand} outside 1..{diagram.strands}")
        others = [j for j in range(1, diagram.strands + 1) if j != strand]
        return self.torsion_polynomial(diagram).specialize_to_one(others)

    # ---------------- skein ----------------

    @staticmethod
    def _skein_factors(k: int, strand: int):
        half = LaurentPoly.variable(k, strand, 1) - LaurentPoly.variable(k, strand, -1)
        linear = LaurentPoly.one(k) - LaurentPoly.variable(k, strand)
        return ((FACTOR_HALF, half), (FACTOR_LINEAR, linear))

    def verify_skein(self, diagram: Diagram, crossing: int, allow_mixed: bool = False) -> SkeinEntry:
        """Look for a factor u with T(d+) - T(d-) = u * T(d0) at a self-crossing (0-based)."""
        d_plus, d_minus, d_zero = self.diagram_service.skein_triple(diagram, crossing, allow_mixed)
        info = self.diagram_service.trace(diagram).crossings[crossing]
        plus = self.torsion_polynomial(d_plus)
        minus = self.torsion_polynomial(d_minus)
        zero = self.torsion_polynomial(d_zero)
        difference = plus - minus

        if difference.is_zero() and zero.is_zero():
            return SkeinEntry(crossing, info.over, plus, minus, zero, FACTOR_DEGENERATE, None)
        for name, factor in self._skein_factors(diagram.strands, info.over):
            unit = difference.equal_up_to_unit(factor * zero)
            if unit is not None:
                return SkeinEntry(crossing, info.over, plus, minus, zero, name, unit)
        logger.warning(f"⚠️ No skein factor found at crossing {crossing + 1}")
        return SkeinEntry(crossing, info.over, plus, minus, zero)

    def verify_skein_all(self, diagram: Diagram) -> SkeinReport:
        trace = self.diagram_service.trace(diagram)
        entries = [self.verify_skein(diagram, info.index) for info in trace.crossings if info.is_self]
        return SkeinReport(entries=tuple(entries))

    # ---------------- structural identities ----------------

    def verify_identities(self, first: Diagram, second: Optional[Diagram] = None,
                          options: Optional[IdentityOptions] = None) -> IdentityReport:
        options = options or IdentityOptions()
        ds = self.diagram_service
        base = self.torsion_polynomial(first)
        checks: List[IdentityCheck] = []

        if second is not None and options.amalgam:
            other = self.torsion_polynomial(second)
            k = first.strands + second.strands
            expected = base.embed(k, 0) * other.embed(k, first.strands)
            actual = self.torsion_polynomial(ds.amalgamate(first, second))
            checks.append(IdentityCheck("amalgam", actual == expected,
                                        f"{actual.to_text()} vs {expected.to_text()}"))

        if second is not None and options.compose:
            stacked = ds.compose(first, second)
            expected = base * self.torsion_polynomial(second)
            actual = self.torsion_polynomial(stacked)
            unit = actual.equal_up_to_unit(expected)
            checks.append(IdentityCheck("compose", unit is not None,
                                        f"{actual.to_text()} vs {expected.to_text()}"))

        if options.mirror:
            actual = self.torsion_polynomial(ds.mirror(first))
            expected = base.invert_variables()
            unit = actual.equal_up_to_unit(expected)
            checks.append(IdentityCheck("mirror", unit is not None,
                                        unit.to_text() if unit else f"{actual.to_text()} vs {expected.to_text()}"))

        if options.satellite_strand is not None:
            cabled = ds.satellite(first, options.satellite_strand, options.satellite_width)
            actual = self.torsion_polynomial(cabled)
            expected = base.merge_variables(options.satellite_strand, options.satellite_width)
            exact = actual == expected
            checks.append(IdentityCheck("satellite", exact,
                                        "exact" if exact else f"{actual.to_text()} vs {expected.to_text()}"))

        return IdentityReport(checks=tuple(checks))
