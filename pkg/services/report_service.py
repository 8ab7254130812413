import logging
from typing import Optional

from models.diagram import Diagram
from models.homology import StateSum
from models.laurent import LaurentPoly
from models.report import CheckReport
from models.weight_table import IndexVector
from schemas.check import CheckResponse, SuiteSchema
from schemas.common import TermSchema
from schemas.diagram import DiagramResponse, FaceComplexSchema, OpsRequest
from schemas.invariants import (
    ClockMoveSchema,
    FoxResponse,
    HomologyEntrySchema,
    HomologyResponse,
    SkeinResponse,
    StateListResponse,
    StateSchema,
    TorsionResponse,
)
from services.check_service import CheckService
from services.fox_service import FoxService
from services.homology_service import HomologyService
from services.torsion_service import TorsionService
from utils.errors import CheckFailure, IndexRangeError

logger = logging.getLogger(__name__)

OPS = ("amalgamate", "compose", "satellite", "mirror")


def terms_of(poly: LaurentPoly):
    return [TermSchema(**item) for item in poly.to_json()]


class ReportService:
    """Runs the invariant services and shapes their results for the API and the CLI."""

    def __init__(self, torsion_service: Optional[TorsionService] = None):
        self.torsion_service = torsion_service or TorsionService()
        self.diagram_service = self.torsion_service.diagram_service
        self.homology_service = HomologyService(self.torsion_service)
        self.fox_service = FoxService(self.diagram_service)

    def load(self, mld: str) -> Diagram:
        return self.diagram_service.parse_mld(mld)

    @staticmethod
    def _states(state_sum: StateSum):
        return [
            StateSchema(index=i, assignment=r.state.label(), F2=list(r.filt2), G=r.grading)
            for i, r in enumerate(state_sum.records, start=1)
        ]

    def torsion(self, diagram: Diagram, with_fox: bool = False) -> TorsionResponse:
        state_sum = self.torsion_service.state_sum(diagram)
        fox_unit = None
        if with_fox:
            unit = self.fox_service.torsion_via_fox(diagram).equal_up_to_unit(state_sum.polynomial)
            fox_unit = unit.to_text() if unit else None
        return TorsionResponse(
            strands=diagram.strands,
            poly=terms_of(state_sum.polynomial),
            text=state_sum.polynomial.to_text(),
            states=self._states(state_sum),
            fox_unit=fox_unit,
        )

    def states(self, diagram: Diagram, dump_faces: bool = False) -> StateListResponse:
        ts = self.torsion_service
        faces = ts.planar_service.build_faces(diagram)
        state_sum = ts.state_sum(diagram)
        trace = self.diagram_service.trace(diagram)
        states = [r.state for r in state_sum.records]
        index = {s: i for i, s in enumerate(states, start=1)}

        moves = []
        case_counts = {}
        for state in states:
            for move in ts.state_service.clock_neighbors(faces, state):
                if move.target not in index:
                    continue
                try:
                    case = ts.weight_service.clock_delta_check(trace, move)
                except CheckFailure as e:
                    logger.warning(f"⚠️ {e}")
                    case = None
                if case:
                    case_counts[case] = case_counts.get(case, 0) + 1
                moves.append(ClockMoveSchema(
                    source=index[state], target=index[move.target], direction=move.direction,
                    crossings=[c + 1 for c in move.crossings], case=case,
                ))

        return StateListResponse(
            strands=diagram.strands,
            states=self._states(state_sum),
            clock_connected=ts.state_service.clock_connectivity(faces, states),
            moves=moves,
            case_counts=case_counts,
            faces=FaceComplexSchema(**ts.planar_service.dump_faces(diagram)) if dump_faces else None,
        )

    def homology(self, diagram: Diagram) -> HomologyResponse:
        state_sum = self.torsion_service.state_sum(diagram)
        table = self.homology_service.homology_table(diagram, state_sum)
        euler = LaurentPoly(diagram.strands, self.homology_service.euler_table(diagram, state_sum))
        lines = []
        for (filt2, grading), rank in table.sorted_entries():
            group = "Z" if rank == 1 else f"Z^{rank}"
            lines.append(f"{group} at F={IndexVector(filt2).to_text()}, d={grading} [status: {table.status.value}]")
        return HomologyResponse(
            strands=diagram.strands,
            status=table.status.value,
            entries=[HomologyEntrySchema(F2=list(f), d=d, rank=r) for (f, d), r in table.sorted_entries()],
            euler=terms_of(euler),
            text="\n".join(lines),
        )

    def fox(self, diagram: Diagram) -> FoxResponse:
        presentation = self.fox_service.wirtinger(diagram)
        poly = self.fox_service.torsion_via_fox(diagram)
        unit = poly.equal_up_to_unit(self.torsion_service.torsion_polynomial(diagram))
        return FoxResponse(
            strands=diagram.strands,
            generators=presentation.generator_count,
            relations=len(presentation.relations),
            poly=terms_of(poly),
            text=poly.to_text(),
            unit=unit.to_text() if unit else None,
        )

    def skein(self, diagram: Diagram, crossing: int, allow_mixed: bool = False) -> SkeinResponse:
        """``crossing`` is 1-based."""
        entry = self.torsion_service.verify_skein(diagram, crossing - 1, allow_mixed)
        return SkeinResponse(
            crossing=crossing,
            strand=entry.strand,
            plus=entry.plus.to_text(),
            minus=entry.minus.to_text(),
            zero=entry.zero.to_text(),
            factor=entry.factor,
            unit=entry.unit.to_text() if entry.unit else None,
            holds=entry.holds,
        )

    def describe(self, diagram: Diagram) -> DiagramResponse:
        ds = self.diagram_service
        return DiagramResponse(
            mld=ds.render_mld(ds.normalize(diagram)),
            strands=diagram.strands,
            crossings=diagram.crossing_count,
            is_braid=ds.is_braid(diagram),
            is_alternating=ds.is_alternating(diagram),
            linking_numbers={f"{i},{j}": v for (i, j), v in ds.linking_numbers(diagram).items()},
        )

    def ops(self, op: str, request: OpsRequest) -> DiagramResponse:
        ds = self.diagram_service
        first = self.load(request.mld)
        if op == "mirror":
            return self.describe(ds.mirror(first))
        if op == "satellite":
            if request.strand is None:
                raise IndexRangeError("satellite needs a strand")
            return self.describe(ds.satellite(first, request.strand, request.width))
        if op in ("amalgamate", "compose"):
            if request.other_mld is None:
                raise ValueError(f"{op} needs a second diagram")
            second = self.load(request.other_mld)
            combined = ds.amalgamate(first, second) if op == "amalgamate" else ds.compose(first, second)
            return self.describe(combined)
        raise ValueError(f"unknown operation '{op}', expected one of {', '.join(OPS)}")

    @staticmethod
    def check_response(report: CheckReport) -> CheckResponse:
        return CheckResponse(
            ok=report.ok,
            seed=report.seed,
            max_crossings=report.max_crossings,
            suites=[SuiteSchema(name=s.name, passed=s.passed, failed=s.failed, failures=s.failures)
                    for s in report.suites.values()],
            case_counts=report.case_counts,
            non_integral=report.non_integral,
        )

    def check(self, max_crossings: Optional[int] = None, seed: Optional[int] = None) -> CheckResponse:
        report = CheckService(torsion_service=self.torsion_service).run(max_crossings, seed)
        return self.check_response(report)
