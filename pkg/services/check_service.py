import logging
import random
from pathlib import Path
from typing import Callable, List, Optional, Tuple

from config.settings import StringLinkSettings, get_settings
from dao.mld_dao import MLDDAO
from models.diagram import Diagram
from models.homology import HomologyStatus
from models.laurent import LaurentPoly
from models.report import CheckReport, IdentityOptions
from services.diagram_service import DiagramService
from services.fox_service import FoxService
from services.homology_service import HomologyService
from services.random_diagram_service import RandomDiagramService
from services.torsion_service import TorsionService
from utils.errors import CheckFailure, StructuralError

logger = logging.getLogger(__name__)

PROJECT_ROOT = Path(__file__).resolve().parents[1]

SUITE_CLASP = "clasp"
SUITE_BRAIDS = "braids"
SUITE_ORACLE = "oracle"
SUITE_CLOCK = "clock"
SUITE_ALTERNATING = "alternating"
SUITE_SPECIALIZATION = "specialization"
SUITE_IDENTITIES = "identities"
SUITE_EULER = "euler"
SUITE_FOX = "fox-structure"
SUITE_COMPOSITION = "composition"

SUITES = (SUITE_CLASP, SUITE_BRAIDS, SUITE_ORACLE, SUITE_CLOCK, SUITE_ALTERNATING,
          SUITE_SPECIALIZATION, SUITE_IDENTITIES, SUITE_EULER, SUITE_FOX, SUITE_COMPOSITION)


def clasp_expected(linking: int) -> LaurentPoly:
    """Positive terms on v1 + v2 = -L, negative terms on v1 + v2 = -L - 1."""
    total = LaurentPoly.zero(2)
    for a in range(linking + 1):
        total = total + LaurentPoly.monomial(2, (-2 * a, -2 * (linking - a)))
    for a in range(1, linking + 1):
        total = total - LaurentPoly.monomial(2, (-2 * a, -2 * (linking + 1 - a)))
    return total


class CheckService:
    def __init__(self, settings: Optional[StringLinkSettings] = None,
                 torsion_service: Optional[TorsionService] = None):
        self.settings = settings or get_settings()
        self.torsion_service = torsion_service or TorsionService()
        self.diagram_service: DiagramService = self.torsion_service.diagram_service
        self.fox_service = FoxService(self.diagram_service, self.settings.cofactor_limit)
        self.homology_service = HomologyService(self.torsion_service)
        self.random_service = RandomDiagramService(self.diagram_service, torsion_service=self.torsion_service)

    def load_fixtures(self) -> List[Tuple[str, Diagram]]:
        base = Path(self.settings.fixtures_dir)
        if not base.is_absolute():
            base = PROJECT_ROOT / base
        dao = MLDDAO(str(base))
        return [(path.stem, self.diagram_service.parse_mld(dao.read_text(str(path))))
                for path in dao.list_fixtures()]

    def _run(self, report: CheckReport, suite: str, item: str, fn: Callable[[], None]) -> None:
        result = report.suite(suite)
        try:
            fn()
            result.passed += 1
        except (CheckFailure, StructuralError, ValueError) as e:
            result.failed += 1
            result.failures.append(f"{item}: {e}")
            logger.error(f"❌ [{suite}] {item}: {e}")

    # ---------------- individual checks ----------------

    def check_clasp(self, linking: int) -> None:
        diagram = self.diagram_service.clasp(linking)
        state_sum = self.torsion_service.state_sum(diagram)
        if len(state_sum.records) != 2 * linking + 1:
            raise CheckFailure(f"{len(state_sum.records)} states, expected {2 * linking + 1}")
        if state_sum.polynomial != clasp_expected(linking):
            raise CheckFailure(f"torsion {state_sum.polynomial.to_text()}")
        table = self.homology_service.homology_table(diagram, state_sum)
        for (filt2, grading), rank in table.entries.items():
            level = sum(filt2) // 2
            expected = 0 if level == -linking else -1 if level == -linking - 1 else None
            if rank != 1 or grading != expected:
                raise CheckFailure(f"homology entry {filt2}, d={grading}, rank {rank}")

    def check_braid(self, diagram: Diagram) -> None:
        state_sum = self.torsion_service.state_sum(diagram)
        zero = (0,) * diagram.strands
        if len(state_sum.records) != 1:
            raise CheckFailure(f"braid has {len(state_sum.records)} states")
        record = state_sum.records[0]
        if record.filt2 != zero or record.grading != 0:
            raise CheckFailure(f"braid state at F2={record.filt2}, G={record.grading}")
        if state_sum.polynomial != LaurentPoly.one(diagram.strands):
            raise CheckFailure(f"braid torsion {state_sum.polynomial.to_text()}")

    def check_oracle(self, diagram: Diagram) -> None:
        state_poly = self.torsion_service.torsion_polynomial(diagram)
        fox_poly = self.fox_service.torsion_via_fox(diagram)
        if state_poly.equal_up_to_unit(fox_poly) is None:
            raise CheckFailure(f"state sum {state_poly.to_text()} vs Fox {fox_poly.to_text()}")

    def check_clock(self, diagram: Diagram, report: CheckReport) -> None:
        ps = self.torsion_service.planar_service
        ss = self.torsion_service.state_service
        ws = self.torsion_service.weight_service
        faces = ps.build_faces(diagram)
        states = ss.enumerate_states(faces)
        if not ss.clock_connectivity(faces, states):
            raise CheckFailure("clock moves do not connect the states")
        trace = self.diagram_service.trace(diagram)
        for state in states:
            ss.to_forest_pair(faces, state)
            for move in ss.clock_neighbors(faces, state):
                case = ws.clock_delta_check(trace, move)
                report.case_counts[case] = report.case_counts.get(case, 0) + 1

    def check_alternating(self, diagram: Diagram) -> None:
        table = self.homology_service.homology_table(diagram)
        if table.status == HomologyStatus.CHAIN_RANKS:
            raise CheckFailure("diagram is not alternating")

    def check_specialization(self, diagram: Diagram) -> None:
        state_poly = self.torsion_service.torsion_polynomial(diagram)
        fox_poly = self.fox_service.torsion_via_fox(diagram)
        for strand in range(1, diagram.strands + 1):
            others = [j for j in range(1, diagram.strands + 1) if j != strand]
            mine = state_poly.specialize_to_one(others)
            theirs = fox_poly.specialize_to_one(others)
            if mine.equal_up_to_unit(theirs) is None:
                raise CheckFailure(f"closure of strand {strand}: {mine.to_text()} vs {theirs.to_text()}")

    def check_identities(self, first: Diagram, second: Diagram) -> None:
        options = IdentityOptions(satellite_strand=1, satellite_width=2)
        report = self.torsion_service.verify_identities(first, second, options)
        failed = [f"{c.name} ({c.detail})" for c in report.checks if not c.holds]
        if failed:
            raise CheckFailure("; ".join(failed))

    def check_euler(self, diagram: Diagram, name: str = "", report: Optional[CheckReport] = None) -> None:
        state_sum = self.torsion_service.state_sum(diagram)
        if report is not None and not all(record.index.is_integral for record in state_sum.records):
            report.non_integral.append(name)
        table = self.homology_service.euler_table(diagram, state_sum)
        if LaurentPoly(diagram.strands, table) != state_sum.polynomial:
            raise CheckFailure("Euler characteristic differs from the state sum")

    def check_composition(self, upper: Diagram, lower: Diagram) -> None:
        self.homology_service.composed_table(upper, lower)

    def check_fox_structure(self, diagram: Diagram) -> None:
        presentation = self.fox_service.wirtinger(diagram)
        matrix = self.fox_service.fox_matrix(presentation)
        self.fox_service.structural_checks(presentation, matrix)

    # ---------------- suite runner ----------------

    def run(self, max_crossings: Optional[int] = None, seed: Optional[int] = None) -> CheckReport:
        max_crossings = max_crossings if max_crossings is not None else self.settings.max_crossings
        seed = seed if seed is not None else self.settings.seed
        rng = random.Random(seed)
        report = CheckReport(seed=seed, max_crossings=max_crossings)
        for suite in SUITES:
            report.suite(suite)

        for linking in (1, 2, 3):
            self._run(report, SUITE_CLASP, f"clasp({linking})", lambda L=linking: self.check_clasp(L))

        for n in range(self.settings.random_braids):
            k = rng.randint(1, self.settings.max_strands)
            braid = self.random_service.random_braid(rng, k, min(max_crossings, 10))
            self._run(report, SUITE_BRAIDS, f"braid #{n}", lambda d=braid: self.check_braid(d))

        fixtures = self.load_fixtures()
        randoms = []
        for n in range(self.settings.random_diagrams):
            k = rng.randint(1, min(3, self.settings.max_strands))
            randoms.append((f"random #{n}", self.random_service.random_diagram(rng, k, max_crossings)))

        for name, diagram in fixtures + randoms:
            self._run(report, SUITE_ORACLE, name, lambda d=diagram: self.check_oracle(d))
            self._run(report, SUITE_CLOCK, name, lambda d=diagram: self.check_clock(d, report))
            self._run(report, SUITE_EULER, name, lambda d=diagram, n=name: self.check_euler(d, n, report))

        for name, diagram in fixtures:
            if self.diagram_service.is_alternating(diagram) and not self.diagram_service.is_braid(diagram):
                self._run(report, SUITE_ALTERNATING, name, lambda d=diagram: self.check_alternating(d))
            if name.startswith("clasp") or name == "trefoil":
                self._run(report, SUITE_SPECIALIZATION, name, lambda d=diagram: self.check_specialization(d))
            self._run(report, SUITE_FOX, name, lambda d=diagram: self.check_fox_structure(d))
        self._run(report, SUITE_SPECIALIZATION, "clasp(1) closure",
                  lambda: self._expect_one(self.diagram_service.clasp(1)))

        ds = self.diagram_service
        alternating = [(name, d) for name, d in fixtures if ds.is_alternating(d) and not ds.is_braid(d)]
        for name, upper in alternating:
            for other, lower in alternating:
                if upper.strands == lower.strands and ds.alternating_compatible(upper, lower):
                    self._run(report, SUITE_COMPOSITION, f"{name} · {other}",
                              lambda a=upper, b=lower: self.check_composition(a, b))

        pair_limit = min(max_crossings, self.settings.pair_max_crossings)
        for n in range(self.settings.random_pairs):
            k = rng.randint(1, min(3, self.settings.max_strands))
            first = self.random_service.random_diagram(rng, k, pair_limit)
            second = self.random_service.random_diagram(rng, k, pair_limit)
            self._run(report, SUITE_IDENTITIES, f"pair #{n}",
                      lambda a=first, b=second: self.check_identities(a, b))

        for result in report.suites.values():
            logger.info(f"📊 {result.name}: {result.passed} passed, {result.failed} failed")
        return report

    def _expect_one(self, diagram: Diagram) -> None:
        for strand in range(1, diagram.strands + 1):
            closure = self.torsion_service.specialize_to_closure(diagram, strand)
            if closure != LaurentPoly.one(diagram.strands):
                raise CheckFailure(f"closure of strand {strand} is {closure.to_text()}")
