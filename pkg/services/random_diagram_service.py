import logging
import random
from typing import List, Optional

from models.diagram import Diagram, Event, EventKind
from services.diagram_service import DiagramService
from services.torsion_service import TorsionService
from utils.errors import DiagramError, StructuralError

logger = logging.getLogger(__name__)


class RandomDiagramService:
    """Seeded random string-link diagrams built from lassos, with rejection of trivial samples."""

    def __init__(self, diagram_service: Optional[DiagramService] = None, attempts: int = 200,
                 torsion_service: Optional[TorsionService] = None, min_states: int = 2):
        self.diagram_service = diagram_service or DiagramService()
        self.torsion_service = torsion_service or TorsionService(self.diagram_service)
        self.attempts = attempts
        self.min_states = min_states

    @staticmethod
    def _kind(rng: random.Random) -> EventKind:
        return rng.choice((EventKind.CROSS_POS, EventKind.CROSS_NEG))

    def _crossing(self, rng: random.Random, width: int) -> Event:
        return Event(self._kind(rng), rng.randint(1, width - 1))

    def random_braid(self, rng: random.Random, k: int, max_crossings: int) -> Diagram:
        if k < 2:
            return Diagram(strands=k)
        count = rng.randint(0, max_crossings)
        return Diagram(strands=k, events=tuple(self._crossing(rng, k) for _ in range(count)))

    def _lasso(self, rng: random.Random, width: int, crossings: int) -> List[Event]:
        """A cap, crossings that each touch one of its arcs, and a cup joining one arc to a neighbour."""
        p = rng.randint(1, width + 1)
        events = [Event(EventKind.CAP, p)]
        arcs = [False] * width
        arcs[p - 1:p - 1] = [True, True]
        for _ in range(crossings):
            i = rng.choice([i for i in range(1, len(arcs)) if arcs[i - 1] or arcs[i]])
            events.append(Event(self._kind(rng), i))
            arcs[i - 1], arcs[i] = arcs[i], arcs[i - 1]
        # cupping the two arcs together would close a loop
        i = rng.choice([i for i in range(1, len(arcs)) if arcs[i - 1] != arcs[i]])
        events.append(Event(EventKind.CUP, i))
        return events

    def _sample(self, rng: random.Random, k: int, max_crossings: int) -> Diagram:
        total = rng.randint(min(1, max_crossings), max_crossings)
        lassos = rng.randint(1, 2) if total >= 2 else 1
        cuts = sorted(rng.randint(0, total) for _ in range(lassos - 1))
        events: List[Event] = []
        for start, end in zip([0] + cuts, cuts + [total]):
            events.extend(self._lasso(rng, k, end - start))
        return Diagram(strands=k, events=tuple(events))

    def _state_count(self, diagram: Diagram) -> int:
        return len(self.torsion_service.state_sum(diagram).records)

    def random_diagram(self, rng: random.Random, k: int, max_crossings: int,
                       braid_only: bool = False) -> Diagram:
        if braid_only:
            return self.random_braid(rng, k, max_crossings)
        fallback: Optional[Diagram] = None
        for _ in range(self.attempts):
            diagram = self._sample(rng, k, max_crossings)
            try:
                self.diagram_service.trace(diagram)
                if diagram.crossing_count and self._state_count(diagram) >= self.min_states:
                    return diagram
            except (DiagramError, StructuralError):
                continue
            if fallback is None:
                fallback = diagram
        if fallback is not None:
            logger.warning(f"⚠️ Only single-state diagrams after {self.attempts} attempts; keeping the first")
            return fallback
        logger.warning(f"⚠️ No valid diagram after {self.attempts} attempts; falling back to a braid")
        return self.random_braid(rng, k, max_crossings)
