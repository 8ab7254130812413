import logging
from dataclasses import replace
from typing import Dict, List, Optional, Tuple

from networkx.utils import UnionFind

from models.diagram import (
    CrossingInfo,
    Diagram,
    DiagramBlock,
    Event,
    EventKind,
    OrientationHint,
    Passage,
    Segment,
    StrandTrace,
    Vector,
)
from utils.errors import (
    CrossingSelectionError,
    DiagramError,
    IndexRangeError,
    StrandMismatchError,
)

logger = logging.getLogger(__name__)

_TOKENS = {kind.value: kind for kind in EventKind}
_FLIP = {EventKind.CROSS_POS: EventKind.CROSS_NEG, EventKind.CROSS_NEG: EventKind.CROSS_POS}

SLASH = "/"
BACKSLASH = "\\"


def _diagonal_vector(diagonal: str, down: bool) -> Vector:
    if diagonal == SLASH:
        return (-1, -1) if down else (1, 1)
    return (1, -1) if down else (-1, 1)


def _cross_sign(over: Vector, under: Vector) -> int:
    value = over[0] * under[1] - over[1] * under[0]
    return 1 if value > 0 else -1


class DiagramService:
    """Parsing, tracing and the structural operations on string-link diagrams."""

    # ---------------- constructors ----------------

    @staticmethod
    def trivial(k: int) -> Diagram:
        return Diagram(strands=k)

    @staticmethod
    def twist(full_twists: int, positive: bool = True) -> Diagram:
        kind = EventKind.CROSS_POS if positive else EventKind.CROSS_NEG
        return Diagram(strands=2, events=tuple(Event(kind, 1) for _ in range(2 * full_twists)))

    @staticmethod
    def clasp(linking: int) -> Diagram:
        """Strand 2 lassos strand 1 ``linking`` times and crosses itself once."""
        events = [Event(EventKind.CAP, 2), Event(EventKind.CROSS_NEG, 3)]
        events += [Event(EventKind.CROSS_NEG, 1) for _ in range(2 * linking)]
        events.append(Event(EventKind.CUP, 2))
        return Diagram(strands=2, events=tuple(events))

    @staticmethod
    def trefoil_strand() -> Diagram:
        events = [Event(EventKind.CAP, 2)]
        events += [Event(EventKind.CROSS_POS, 1) for _ in range(3)]
        events.append(Event(EventKind.CUP, 2))
        return Diagram(strands=1, events=tuple(events))

    # ---------------- text format ----------------

    def parse_mld(self, text: str) -> Diagram:
        try:
            text.encode("ascii")
        except UnicodeEncodeError:
            raise DiagramError("MLD input must be ASCII")

        strands: Optional[int] = None
        events: List[Event] = []
        width = 0
        for number, raw in enumerate(text.split("\n"), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if strands is None:
                if len(parts) != 2 or parts[0] != "strands" or not parts[1].isdigit():
                    raise DiagramError("expected 'strands <k>'", line=number)
                strands = int(parts[1])
                if strands < 1:
                    raise DiagramError("strand count must be positive", line=number)
                width = strands
                continue
            if len(parts) != 2 or parts[0] not in _TOKENS or not parts[1].isdigit():
                raise DiagramError(f"unrecognised event '{line}'", line=number)
            event = Event(_TOKENS[parts[0]], int(parts[1]))
            width = self._apply_width(event, width, line=number)
            events.append(event)

        if strands is None:
            raise DiagramError("missing 'strands <k>' header")
        if width != strands:
            raise DiagramError(f"final width {width} differs from strand count {strands}")
        diagram = Diagram(strands=strands, events=tuple(events))
        self.trace(diagram)
        logger.debug(f"✅ Parsed diagram with {strands} strands and {len(events)} events")
        return diagram

    @staticmethod
    def _apply_width(event: Event, width: int, line: Optional[int] = None) -> int:
        pos = event.pos
        if event.kind == EventKind.CAP:
            if not 1 <= pos <= width + 1:
                raise DiagramError(f"cap at {pos} outside width {width}", line=line)
        elif pos < 1 or pos + 1 > width:
            raise DiagramError(f"{event.kind.value} at {pos} needs width {pos + 1}, have {width}", line=line)
        return event.width_after(width)

    def render_mld(self, diagram: Diagram) -> str:
        lines = [f"strands {diagram.strands}"]
        if diagram.closed_color is not None:
            lines.append(f"# closed components coloured as strand {diagram.closed_color}")
        lines.extend(ev.token for ev in diagram.events)
        return "\n".join(lines) + "\n"

    def normalize(self, diagram: Diagram) -> Diagram:
        """Canonical event order: adjacent crossings two or more positions apart
        commute, so each such pair is put leftmost first."""
        if diagram.hints:
            # hints are keyed by level
            return diagram
        events = list(diagram.events)
        swapped = True
        while swapped:
            swapped = False
            for j in range(len(events) - 1):
                a, b = events[j], events[j + 1]
                if a.is_crossing and b.is_crossing and a.pos >= b.pos + 2:
                    events[j], events[j + 1] = b, a
                    swapped = True
        return replace(diagram, events=tuple(events))

    def validate(self, diagram: Diagram) -> None:
        width = diagram.strands
        if width < 1:
            raise DiagramError("strand count must be positive")
        for ev in diagram.events:
            width = self._apply_width(ev, width)
        if width != diagram.strands:
            raise DiagramError(f"final width {width} differs from strand count {diagram.strands}")

    # ---------------- tracing ----------------

    @staticmethod
    def _down_step(events: Tuple[Event, ...], level: int, pos: int) -> Tuple[int, int, bool]:
        ev = events[level]
        i = ev.pos
        if ev.is_crossing:
            if pos == i:
                return level + 1, i + 1, True
            if pos == i + 1:
                return level + 1, i, True
            return level + 1, pos, True
        if ev.kind == EventKind.CAP:
            return (level + 1, pos, True) if pos < i else (level + 1, pos + 2, True)
        if pos == i:
            return level, i + 1, False
        if pos == i + 1:
            return level, i, False
        return (level + 1, pos, True) if pos < i else (level + 1, pos - 2, True)

    @staticmethod
    def _up_step(events: Tuple[Event, ...], level: int, pos: int) -> Tuple[int, int, bool]:
        ev = events[level - 1]
        i = ev.pos
        if ev.is_crossing:
            if pos == i:
                return level - 1, i + 1, False
            if pos == i + 1:
                return level - 1, i, False
            return level - 1, pos, False
        if ev.kind == EventKind.CUP:
            return (level - 1, pos, False) if pos < i else (level - 1, pos + 2, False)
        if pos == i:
            return level, i + 1, True
        if pos == i + 1:
            return level, i, True
        return (level - 1, pos, False) if pos < i else (level - 1, pos - 2, False)

    @staticmethod
    def _passage(events: Tuple[Event, ...], crossing_of: Dict[int, int],
                 level: int, pos: int, down: bool) -> Optional[Passage]:
        event_index = level if down else level - 1
        if event_index < 0 or event_index >= len(events):
            return None
        ev = events[event_index]
        if not ev.is_crossing or pos not in (ev.pos, ev.pos + 1):
            return None
        if down:
            diagonal = BACKSLASH if pos == ev.pos else SLASH
        else:
            diagonal = SLASH if pos == ev.pos else BACKSLASH
        over_diagonal = SLASH if ev.kind == EventKind.CROSS_POS else BACKSLASH
        return Passage(crossing=crossing_of[event_index], over=(diagonal == over_diagonal))

    def _walk(self, diagram: Diagram, crossing_of: Dict[int, int], start: Segment,
              down: bool, limit: int, closed: bool):
        events = diagram.events
        last = len(events)
        path: List[Tuple[Segment, bool]] = [(start, down)]
        passages: List[Passage] = []
        level, pos = start
        for _ in range(limit):
            if down and level == last:
                return path, passages, "bottom"
            if not down and level == 0:
                return path, passages, "top"
            passage = self._passage(events, crossing_of, level, pos, down)
            if passage is not None:
                passages.append(passage)
            if down:
                level, pos, down = self._down_step(events, level, pos)
            else:
                level, pos, down = self._up_step(events, level, pos)
            if closed and (level, pos) == start:
                return path, passages, "closed"
            path.append(((level, pos), down))
        raise DiagramError("tracing did not terminate; the event list is inconsistent")

    def trace(self, diagram: Diagram) -> StrandTrace:
        self.validate(diagram)
        events = diagram.events
        widths = diagram.widths()
        crossing_of = {j: c for c, j in enumerate(diagram.crossing_events)}
        all_segments = [(lvl, p) for lvl, w in enumerate(widths) for p in range(1, w + 1)]
        limit = 2 * len(all_segments) + 2

        segment_strand: Dict[Segment, int] = {}
        segment_down: Dict[Segment, bool] = {}
        raw_paths = []
        for top in range(1, diagram.strands + 1):
            path, passages, end = self._walk(diagram, crossing_of, (0, top), True, limit, False)
            if end != "bottom":
                raise DiagramError(f"the strand starting at top position {top} returns to the top")
            raw_paths.append((path, passages))

        by_strand: Dict[int, Tuple[list, list]] = {}
        top_order = []
        for path, passages in raw_paths:
            strand = path[-1][0][1]
            by_strand[strand] = (path, passages)
            top_order.append(strand)
            for seg, seg_down in path:
                segment_strand[seg] = strand
                segment_down[seg] = seg_down

        closed_paths = []
        closed_passages = []
        remaining = [seg for seg in all_segments if seg not in segment_strand]
        if remaining and diagram.closed_color is None:
            raise DiagramError(
                "the diagram has a closed component; tangles with closed components are not string links"
            )
        hints = {(h.level, h.pos): h.down for h in diagram.hints}
        while remaining:
            start = remaining[0]
            path, passages, _ = self._walk(diagram, crossing_of, start, True, limit, True)
            if any(seg in hints and hints[seg] != seg_down for seg, seg_down in path):
                path = [(seg, not seg_down) for seg, seg_down in reversed(path)]
                passages = list(reversed(passages))
            for seg, seg_down in path:
                segment_strand[seg] = diagram.closed_color
                segment_down[seg] = seg_down
            closed_paths.append(tuple(seg for seg, _ in path))
            closed_passages.append(tuple(passages))
            remaining = [seg for seg in all_segments if seg not in segment_strand]

        crossings = []
        for c, j in enumerate(diagram.crossing_events):
            ev = events[j]
            i = ev.pos
            slash_strand = segment_strand[(j, i + 1)]
            slash_dir = _diagonal_vector(SLASH, segment_down[(j, i + 1)])
            back_strand = segment_strand[(j, i)]
            back_dir = _diagonal_vector(BACKSLASH, segment_down[(j, i)])
            if ev.kind == EventKind.CROSS_POS:
                over, over_dir, under, under_dir = slash_strand, slash_dir, back_strand, back_dir
            else:
                over, over_dir, under, under_dir = back_strand, back_dir, slash_strand, slash_dir
            crossings.append(CrossingInfo(
                index=c, event_index=j, pos=i, over=over, under=under,
                sign=_cross_sign(over_dir, under_dir), over_dir=over_dir, under_dir=under_dir,
            ))

        return StrandTrace(
            strands=diagram.strands,
            segment_strand=segment_strand,
            segment_down=segment_down,
            paths=tuple(tuple(seg for seg, _ in by_strand[s][0]) for s in range(1, diagram.strands + 1)),
            passages=tuple(tuple(by_strand[s][1]) for s in range(1, diagram.strands + 1)),
            closed_paths=tuple(closed_paths),
            closed_passages=tuple(closed_passages),
            crossings=tuple(crossings),
            top_order=tuple(top_order),
        )

    # ---------------- derived data ----------------

    def linking_numbers(self, diagram: Diagram) -> Dict[Tuple[int, int], int]:
        """Half the signed crossing count for every pair of distinct strands."""
        trace = self.trace(diagram)
        totals: Dict[Tuple[int, int], int] = {}
        for i in range(1, diagram.strands + 1):
            for j in range(i + 1, diagram.strands + 1):
                totals[(i, j)] = 0
        for ci in trace.crossings:
            if ci.is_self:
                continue
            pair = (min(ci.over, ci.under), max(ci.over, ci.under))
            totals[pair] = totals.get(pair, 0) + ci.sign
        return {pair: total // 2 for pair, total in totals.items()}

    def end_traces(self, diagram: Diagram) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
        """Over/under letter next to each end: (top, bottom), '-' for crossing-free strands."""
        trace = self.trace(diagram)
        top = []
        for strand in trace.top_order:
            passages = trace.passages[strand - 1]
            top.append(("o" if passages[0].over else "u") if passages else "-")
        bottom = []
        for strand in range(1, diagram.strands + 1):
            passages = trace.passages[strand - 1]
            bottom.append(("o" if passages[-1].over else "u") if passages else "-")
        return tuple(top), tuple(bottom)

    def alternating_compatible(self, upper: Diagram, lower: Diagram) -> bool:
        """Stacking two alternating diagrams stays alternating when the traces at the seam are opposite."""
        _, upper_bottom = self.end_traces(upper)
        lower_top, _ = self.end_traces(lower)
        for a, b in zip(upper_bottom, lower_top):
            if a != "-" and b != "-" and a == b:
                return False
        return True

    # ---------------- predicates ----------------

    def is_braid(self, diagram: Diagram) -> bool:
        return all(ev.is_crossing for ev in diagram.events)

    def is_alternating(self, diagram: Diagram) -> bool:
        trace = self.trace(diagram)
        sequences = list(trace.passages) + list(trace.closed_passages)
        for seq in sequences:
            for a, b in zip(seq, seq[1:]):
                if a.over == b.over:
                    return False
        return True

    # ---------------- operations ----------------

    def mirror(self, diagram: Diagram) -> Diagram:
        events = tuple(Event(_FLIP.get(ev.kind, ev.kind), ev.pos) for ev in diagram.events)
        return Diagram(diagram.strands, events, diagram.closed_color, diagram.hints)

    def amalgamate(self, left: Diagram, right: Diagram) -> Diagram:
        shift = left.strands
        events = left.events + tuple(Event(ev.kind, ev.pos + shift) for ev in right.events)
        return Diagram(strands=left.strands + right.strands, events=events)

    def compose(self, upper: Diagram, lower: Diagram) -> Diagram:
        if upper.strands != lower.strands:
            raise StrandMismatchError(
                f"cannot stack a {upper.strands}-strand diagram on a {lower.strands}-strand diagram"
            )
        return Diagram(strands=upper.strands, events=upper.events + lower.events)

    def satellite(self, diagram: Diagram, strand: int, width: int) -> Diagram:
        """Replace one strand by width parallel copies drawn in the plane of the projection.

        Copies follow the blackboard framing, so two copies link each other by the writhe of
        the strand's self-crossings: satellite(clasp(1), 2, 2) has lk(2, 3) = -1.
        """
        if not 1 <= strand <= diagram.strands:
            raise IndexRangeError(f"strand {strand} outside 1..{diagram.strands}")
        if width < 1:
            raise IndexRangeError(f"cable width must be positive, got {width}")
        if width == 1:
            return diagram
        trace = self.trace(diagram)
        widths = diagram.widths()

        def multiplicity(level: int, pos: int) -> int:
            return width if trace.segment_strand[(level, pos)] == strand else 1

        def cabled_pos(level: int, pos: int) -> int:
            extra = sum(1 for q in range(1, min(pos, widths[level] + 1)) if multiplicity(level, q) > 1)
            return pos + (width - 1) * extra

        events: List[Event] = []
        for j, ev in enumerate(diagram.events):
            start = cabled_pos(j, ev.pos)
            if ev.is_crossing:
                left_block = multiplicity(j, ev.pos)
                right_block = multiplicity(j, ev.pos + 1)
                for b in range(right_block):
                    for a in range(left_block):
                        events.append(Event(ev.kind, start + left_block - 1 + b - a))
            elif ev.kind == EventKind.CAP:
                block = multiplicity(j + 1, ev.pos)
                events.extend(Event(EventKind.CAP, start + a) for a in range(block))
            else:
                block = multiplicity(j, ev.pos)
                events.extend(Event(EventKind.CUP, start + block - 1 - a) for a in range(block))
        return Diagram(strands=diagram.strands + width - 1, events=tuple(events))

    def skein_triple(self, diagram: Diagram, crossing: int,
                     allow_mixed: bool = False) -> Tuple[Diagram, Diagram, Diagram]:
        """(d_plus, d_minus, d_zero) at the 0-based crossing index."""
        trace = self.trace(diagram)
        if not 0 <= crossing < len(trace.crossings):
            raise CrossingSelectionError(
                f"crossing {crossing + 1} outside 1..{len(trace.crossings)}"
            )
        info = trace.crossings[crossing]
        if not info.is_self and not allow_mixed:
            raise CrossingSelectionError(
                f"crossing {crossing + 1} joins strands {info.over} and {info.under}; "
                "mixed-strand skein triples need allow_mixed"
            )
        j = info.event_index
        ev = diagram.events[j]
        flipped = Event(_FLIP[ev.kind], ev.pos)
        other = Diagram(diagram.strands, diagram.events[:j] + (flipped,) + diagram.events[j + 1:],
                        diagram.closed_color, diagram.hints)
        d_plus, d_minus = (diagram, other) if info.sign > 0 else (other, diagram)

        parallel = info.over_dir[1] == info.under_dir[1]
        if parallel:
            middle: Tuple[Event, ...] = ()
        else:
            middle = (Event(EventKind.CUP, ev.pos), Event(EventKind.CAP, ev.pos))
        hints = tuple(h for h in diagram.hints if h.level <= j) + tuple(
            OrientationHint(j, p, trace.segment_down[(j, p)]) for p in (ev.pos, ev.pos + 1)
        )
        color = diagram.closed_color
        if info.is_self:
            color = info.over
        d_zero = Diagram(diagram.strands, diagram.events[:j] + middle + diagram.events[j + 1:],
                         color, hints)
        self.trace(d_zero)
        return d_plus, d_minus, d_zero

    def split(self, diagram: Diagram) -> List[DiagramBlock]:
        """Side-by-side blocks of consecutive strands whose projections are connected."""
        trace = self.trace(diagram)
        strands = UnionFind(range(1, diagram.strands + 1))
        for ci in trace.crossings:
            strands.union(ci.over, ci.under)
        blocks = sorted(sorted(members) for members in strands.to_sets())
        if len(blocks) == 1:
            return [DiagramBlock(diagram, tuple(blocks[0]), tuple(range(len(diagram.events))))]

        block_of = {}
        for b, members in enumerate(blocks):
            if members != list(range(members[0], members[-1] + 1)):
                raise DiagramError(f"strands {members} do not form a consecutive block")
            for s in members:
                block_of[s] = b

        widths = diagram.widths()
        block_events: List[List[Event]] = [[] for _ in blocks]
        block_indices: List[List[int]] = [[] for _ in blocks]
        for j, ev in enumerate(diagram.events):
            owner_segment = (j + 1, ev.pos) if ev.kind == EventKind.CAP else (j, ev.pos)
            b = block_of[trace.segment_strand[owner_segment]]
            foreign = sum(
                1 for q in range(1, min(ev.pos, widths[j] + 1))
                if block_of[trace.segment_strand[(j, q)]] != b
            )
            block_events[b].append(Event(ev.kind, ev.pos - foreign))
            block_indices[b].append(j)
        return [
            DiagramBlock(Diagram(strands=len(members), events=tuple(evs)), tuple(members), tuple(idx))
            for members, evs, idx in zip(blocks, block_events, block_indices)
        ]

    def decompose(self, diagram: Diagram) -> List[Diagram]:
        return [block.diagram for block in self.split(diagram)]
