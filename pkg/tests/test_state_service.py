"""Tests for Kauffman state enumeration, forests and clock moves."""

import networkx as nx
import pytest

from models.face_complex import Color, FaceComplex
from models.kauffman_state import KauffmanState
from services.state_service import CLOCK, COUNTERCLOCK
from utils.errors import StructuralError


def test_clasp_states(planar_service, state_service, clasp1):
    faces = planar_service.build_faces(clasp1)
    assert state_service.meridian_assignment(faces) == (4, 2)
    states = state_service.enumerate_states(faces)
    assert [s.label() for s in states] == ["NEN", "NSE", "WNN"]
    assert [s.faces for s in states] == [(1, 3, 5), (1, 5, 3), (3, 1, 5)]


def test_trefoil_states(planar_service, state_service, trefoil):
    states = state_service.enumerate_states(planar_service.build_faces(trefoil))
    assert [s.label() for s in states] == ["ENN", "SEN", "SSE"]


def test_braid_has_one_state(planar_service, state_service, load_fixture):
    states = state_service.enumerate_states(planar_service.build_faces(load_fixture("braid3")))
    assert len(states) == 1
    assert states[0].label() == "NNN"


def test_states_are_bijections(planar_service, state_service, load_fixture):
    for name in ("clasp2", "clasp3", "three_strand_alternating", "unknot_switched"):
        faces = planar_service.build_faces(load_fixture(name))
        meridians = set(state_service.meridian_assignment(faces))
        for state in state_service.enumerate_states(faces):
            used = set(state.faces)
            assert len(used) == faces.crossing_count
            assert faces.u_face not in used
            assert not used & meridians


def test_trivial_link_has_empty_state(planar_service, state_service, diagram_service):
    states = state_service.enumerate_states(planar_service.build_faces(diagram_service.trivial(2)))
    assert len(states) == 1
    assert states[0].quadrants == ()
    assert states[0].label() == "-"


def test_forest_pair(planar_service, state_service, clasp1):
    faces = planar_service.build_faces(clasp1)
    first = state_service.enumerate_states(faces)[0]
    pair = state_service.to_forest_pair(faces, first)
    assert pair.black_parent == {1: 4, 5: 4}
    assert pair.white_parent == {3: 0}
    assert state_service.is_forest(faces, first)


def test_clasp_clock_moves(planar_service, state_service, clasp1):
    faces = planar_service.build_faces(clasp1)
    states = state_service.enumerate_states(faces)
    moves = state_service.clock_neighbors(faces, states[0])
    by_target = {m.target.label(): m for m in moves}
    assert set(by_target) == {"NSE", "WNN"}
    assert by_target["NSE"].direction == CLOCK
    assert by_target["WNN"].direction == COUNTERCLOCK
    assert state_service.clock_connectivity(faces, states)


def test_clock_connectivity_on_fixtures(planar_service, state_service, load_fixture):
    for name in ("trefoil", "clasp2", "clasp3", "three_strand_alternating"):
        faces = planar_service.build_faces(load_fixture(name))
        assert state_service.clock_connectivity(faces)


def test_meridians_of_trivial_link(planar_service, state_service, diagram_service):
    faces = planar_service.build_faces(diagram_service.trivial(2))
    assert faces.meridians == ((0, 1), (1, 2))
    assert state_service.meridian_assignment(faces) == (1, 2)


def test_single_meridian_avoids_unbounded_face(planar_service, state_service, trefoil):
    faces = planar_service.build_faces(trefoil)
    (left, right), = faces.meridians
    assert left == faces.u_face
    assert state_service.meridian_assignment(faces) == (right,)


def _bare_complex(meridians):
    return FaceComplex(
        face_count=3,
        colors=(Color.WHITE, Color.BLACK, Color.BLACK),
        crossings=(),
        meridians=meridians,
        bottom_faces=(0, 1, 2),
        u_face=0,
        anchors=((0, 0), (0, 1), (0, 2)),
    )


def test_ambiguous_meridian_placement_rejected(state_service):
    # both meridians abut faces 1 and 2, so they can be seated either way round
    with pytest.raises(StructuralError):
        state_service.meridian_assignment(_bare_complex(((1, 2), (2, 1))))


def test_unseatable_meridians_rejected(state_service):
    with pytest.raises(StructuralError):
        state_service.meridian_assignment(_bare_complex(((0, 1), (1, 0))))


def test_marker_cycle_is_not_a_forest(planar_service, state_service, clasp1):
    faces = planar_service.build_faces(clasp1)
    # face 5 is marked twice, closing the black triangle 1-4-5
    state = KauffmanState(quadrants=("N", "S", "N"), faces=(1, 5, 5), meridian_faces=(4, 2))
    assert not state_service.is_forest(faces, state)


def test_clasp_clock_graph(planar_service, state_service, clasp1):
    faces = planar_service.build_faces(clasp1)
    states = state_service.enumerate_states(faces)
    graph = state_service.clock_graph(faces, states)
    assert graph.number_of_nodes() == 3
    assert graph.has_edge(states[0], states[1])
    assert graph.has_edge(states[0], states[2])
    assert nx.is_connected(graph)
