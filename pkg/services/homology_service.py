import logging
from collections import Counter
from typing import Dict, Optional, Tuple

from models.diagram import Diagram
from models.homology import HomologyKey, HomologyStatus, HomologyTable, StateSum
from services.diagram_service import DiagramService
from services.torsion_service import TorsionService
from utils.errors import StructuralError

logger = logging.getLogger(__name__)


class HomologyService:
    def __init__(self, torsion_service: Optional[TorsionService] = None):
        self.torsion_service = torsion_service or TorsionService()
        self.diagram_service: DiagramService = self.torsion_service.diagram_service

    def homology_table(self, diagram: Diagram, state_sum: Optional[StateSum] = None) -> HomologyTable:
        """Ranks per (filtration, grading); exact homology for braids and alternating diagrams."""
        k = diagram.strands
        if self.diagram_service.is_braid(diagram):
            return HomologyTable(strands=k, status=HomologyStatus.BRAID, entries={((0,) * k, 0): 1})

        state_sum = state_sum or self.torsion_service.state_sum(diagram)
        counts = Counter((record.filt2, record.grading) for record in state_sum.records)

        if not self.diagram_service.is_alternating(diagram):
            logger.info("ℹ️ Diagram is not alternating; reporting chain ranks only")
            return HomologyTable(strands=k, status=HomologyStatus.CHAIN_RANKS, entries=dict(counts))

        gradings: Dict[Tuple[int, ...], set] = {}
        for filt2, grading in counts:
            gradings.setdefault(filt2, set()).add(grading)
        mixed = [filt2 for filt2, seen in gradings.items() if len(seen) > 1]
        if mixed:
            raise StructuralError(f"alternating diagram has mixed gradings at filtration {mixed[0]}")
        return HomologyTable(strands=k, status=HomologyStatus.ALTERNATING, entries=dict(counts))

    def euler_table(self, diagram: Diagram, state_sum: Optional[StateSum] = None) -> Dict[Tuple[int, ...], int]:
        state_sum = state_sum or self.torsion_service.state_sum(diagram)
        totals: Dict[Tuple[int, ...], int] = {}
        for record in state_sum.records:
            totals[record.filt2] = totals.get(record.filt2, 0) + record.sign
        return {filt2: value for filt2, value in totals.items() if value != 0}

    # ---------------- composition ----------------

    @staticmethod
    def product_entries(first: HomologyTable, second: HomologyTable) -> Dict[HomologyKey, int]:
        """Filtrations and gradings add, ranks multiply."""
        if first.strands != second.strands:
            raise StructuralError(f"cannot multiply {first.strands}- and {second.strands}-strand tables")
        product: Dict[HomologyKey, int] = {}
        for (f1, g1), r1 in first.entries.items():
            for (f2, g2), r2 in second.entries.items():
                key = (tuple(a + b for a, b in zip(f1, f2)), g1 + g2)
                product[key] = product.get(key, 0) + r1 * r2
        return product

    @staticmethod
    def _anchored(entries: Dict[HomologyKey, int]) -> Dict[HomologyKey, int]:
        # torsion of a composite is only fixed up to a unit, so compare from the smallest key
        if not entries:
            return {}
        low_f, low_g = min(entries)
        return {
            (tuple(a - b for a, b in zip(f, low_f)), g - low_g): rank
            for (f, g), rank in entries.items()
        }

    def composed_table(self, upper: Diagram, lower: Diagram) -> HomologyTable:
        """Homology of upper · lower, which must be the index-wise product of the factors' homology."""
        ds = self.diagram_service
        if not (ds.is_alternating(upper) and ds.is_alternating(lower)):
            raise StructuralError("both factors must be alternating")
        if not ds.alternating_compatible(upper, lower):
            raise StructuralError("over/under letters at the seam repeat; the composite is not alternating")
        table = self.homology_table(ds.compose(upper, lower))
        if not table.is_homology:
            raise StructuralError(f"composite reports {table.status.value}")
        expected = self.product_entries(self.homology_table(upper), self.homology_table(lower))
        if self._anchored(table.entries) != self._anchored(expected):
            raise StructuralError("composite ranks are not the product of the factor ranks")
        logger.debug(f"🧮 Composite homology has {sum(table.entries.values())} generators")
        return table
