"""Tests for parsing, tracing and the structural diagram operations."""

import pytest

from models.diagram import Diagram, Event, EventKind
from utils.errors import (
    CrossingSelectionError,
    DiagramError,
    IndexRangeError,
    StrandMismatchError,
)


def test_parse_clasp_fixture(clasp1, diagram_service):
    assert clasp1 == diagram_service.clasp(1)
    assert clasp1.widths() == [2, 4, 4, 4, 4, 2]
    assert clasp1.crossing_count == 3


def test_parse_trefoil_fixture(trefoil, diagram_service):
    assert trefoil == diagram_service.trefoil_strand()
    assert trefoil.widths() == [1, 3, 3, 3, 3, 1]


def test_parse_ignores_comments_and_blank_lines(diagram_service):
    diagram = diagram_service.parse_mld("# header\n\nstrands 2  # two strands\nx+ 1\n\n")
    assert diagram == Diagram(strands=2, events=(Event(EventKind.CROSS_POS, 1),))


@pytest.mark.parametrize("text, line", [
    ("strand 2\n", 1),
    ("strands 2\nx+ 2\n", 2),
    ("strands 2\ncap 4\ncup 1\n", 2),
    ("strands 1\ncap 1\nswap 1\n", 3),
])
def test_parse_errors_carry_line_numbers(diagram_service, text, line):
    with pytest.raises(DiagramError) as exc:
        diagram_service.parse_mld(text)
    assert exc.value.line == line


def test_parse_rejects_width_mismatch(diagram_service):
    with pytest.raises(DiagramError):
        diagram_service.parse_mld("strands 1\ncap 1\n")


def test_parse_rejects_non_ascii(diagram_service):
    with pytest.raises(DiagramError):
        diagram_service.parse_mld("strands 1\n# knöt\n")


def test_parse_rejects_closed_component(diagram_service):
    # a free circle beside the strand
    with pytest.raises(DiagramError):
        diagram_service.parse_mld("strands 1\ncap 2\ncup 2\n")


def test_parse_rejects_strand_returning_to_top(diagram_service):
    with pytest.raises(DiagramError):
        diagram_service.parse_mld("strands 2\ncup 1\ncap 1\n")


def test_render_round_trip(clasp1, diagram_service):
    assert diagram_service.parse_mld(diagram_service.render_mld(clasp1)) == clasp1


def test_trace_clasp(clasp1, diagram_service):
    trace = diagram_service.trace(clasp1)
    assert [c.sign for c in trace.crossings] == [-1, 1, 1]
    assert [c.is_self for c in trace.crossings] == [True, False, False]
    assert [p.over for p in trace.passages[0]] == [True, False]
    assert [p.over for p in trace.passages[1]] == [False, True, False, True]
    assert trace.top_order == (1, 2)


def test_trace_trefoil(trefoil, diagram_service):
    trace = diagram_service.trace(trefoil)
    assert [c.sign for c in trace.crossings] == [1, 1, 1]
    assert [p.crossing for p in trace.passages[0]] == [0, 1, 2, 0, 1, 2]


def test_linking_numbers(diagram_service, load_fixture):
    assert diagram_service.linking_numbers(load_fixture("clasp2")) == {(1, 2): 2}
    assert diagram_service.linking_numbers(diagram_service.twist(1)) == {(1, 2): 1}
    assert diagram_service.linking_numbers(diagram_service.twist(1, positive=False)) == {(1, 2): -1}


def test_predicates(diagram_service, clasp1, trefoil, load_fixture):
    assert diagram_service.is_braid(load_fixture("braid3"))
    assert not diagram_service.is_braid(clasp1)
    assert diagram_service.is_alternating(clasp1)
    assert diagram_service.is_alternating(trefoil)
    assert not diagram_service.is_alternating(load_fixture("unknot_switched"))


def test_mirror_flips_every_crossing(diagram_service, clasp1):
    mirrored = diagram_service.mirror(clasp1)
    assert [ev.kind for ev in mirrored.events if ev.is_crossing] == [EventKind.CROSS_POS] * 3
    assert diagram_service.mirror(mirrored) == clasp1


def test_amalgamate_shifts_positions(diagram_service, clasp1):
    combined = diagram_service.amalgamate(diagram_service.trivial(1), clasp1)
    assert combined.strands == 3
    assert [ev.pos for ev in combined.events] == [3, 4, 2, 2, 3]
    assert diagram_service.linking_numbers(combined) == {(1, 2): 0, (1, 3): 0, (2, 3): 1}


def test_compose_requires_equal_strands(diagram_service, clasp1, trefoil):
    stacked = diagram_service.compose(clasp1, clasp1)
    assert stacked.crossing_count == 6
    assert diagram_service.linking_numbers(stacked) == {(1, 2): 2}
    with pytest.raises(StrandMismatchError):
        diagram_service.compose(clasp1, trefoil)


def test_satellite_cables_one_strand(diagram_service, clasp1):
    cabled = diagram_service.satellite(clasp1, 2, 2)
    assert cabled.strands == 3
    assert cabled.crossing_count == 8
    links = diagram_service.linking_numbers(cabled)
    assert links[(1, 2)] == 1
    assert links[(1, 3)] == 1
    # blackboard framing: the copies inherit the writhe of the negative self-crossing
    assert links[(2, 3)] == -1


def test_satellite_rejects_bad_arguments(diagram_service, clasp1):
    with pytest.raises(IndexRangeError):
        diagram_service.satellite(clasp1, 3, 2)
    with pytest.raises(IndexRangeError):
        diagram_service.satellite(clasp1, 1, 0)
    assert diagram_service.satellite(clasp1, 1, 1) == clasp1


def test_skein_triple_at_self_crossing(diagram_service, clasp1):
    d_plus, d_minus, d_zero = diagram_service.skein_triple(clasp1, 0)
    assert d_minus == clasp1
    assert d_plus.events[1] == Event(EventKind.CROSS_POS, 3)
    assert d_zero.closed_color == 2
    assert d_zero.crossing_count == 2


def test_skein_triple_rejects_mixed_crossing(diagram_service, clasp1):
    with pytest.raises(CrossingSelectionError):
        diagram_service.skein_triple(clasp1, 1)
    with pytest.raises(CrossingSelectionError):
        diagram_service.skein_triple(clasp1, 5)


def test_skein_triple_parallel_strands_drop_the_event(diagram_service, trefoil):
    _, _, d_zero = diagram_service.skein_triple(trefoil, 1)
    assert len(d_zero.events) == len(trefoil.events) - 1


def test_split_separates_blocks(diagram_service, clasp1):
    combined = diagram_service.amalgamate(clasp1, diagram_service.trivial(1))
    blocks = diagram_service.split(combined)
    assert [b.strands for b in blocks] == [(1, 2), (3,)]
    assert diagram_service.decompose(combined) == [clasp1, diagram_service.trivial(1)]


def test_split_reindexes_positions(diagram_service, clasp1):
    combined = diagram_service.amalgamate(diagram_service.trivial(1), clasp1)
    assert diagram_service.decompose(combined) == [diagram_service.trivial(1), clasp1]


def test_end_traces_and_alternating_compatibility(diagram_service, clasp1):
    top, bottom = diagram_service.end_traces(clasp1)
    assert top == ("o", "u")
    assert bottom == ("u", "o")
    assert diagram_service.alternating_compatible(clasp1, clasp1)
    assert not diagram_service.alternating_compatible(clasp1, diagram_service.mirror(clasp1))


def test_normalize_orders_distant_crossings(diagram_service):
    diagram = Diagram(strands=4, events=(Event(EventKind.CROSS_POS, 3), Event(EventKind.CROSS_NEG, 1)))
    normal = diagram_service.normalize(diagram)
    assert normal.events == (Event(EventKind.CROSS_NEG, 1), Event(EventKind.CROSS_POS, 3))
    assert diagram_service.normalize(normal) == normal


def test_normalize_keeps_adjacent_crossings(diagram_service):
    diagram = Diagram(strands=3, events=(Event(EventKind.CROSS_POS, 2), Event(EventKind.CROSS_POS, 1)))
    assert diagram_service.normalize(diagram) == diagram


def test_normalize_preserves_torsion(diagram_service, torsion_service, clasp1):
    normal = diagram_service.normalize(clasp1)
    assert [ev.pos for ev in normal.events] == [2, 1, 1, 3, 2]
    assert torsion_service.torsion_polynomial(normal) == torsion_service.torsion_polynomial(clasp1)
