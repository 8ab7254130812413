"""Tests for faces, colouring and the black/white region graphs."""

import pytest

from models.face_complex import Color
from utils.errors import DisconnectedProjectionError


def test_face_count_is_crossings_plus_strands_plus_one(planar_service, diagram_service, clasp1, trefoil):
    for diagram in (clasp1, trefoil, diagram_service.twist(1), diagram_service.clasp(2)):
        faces = planar_service.build_faces(diagram)
        assert faces.face_count == diagram.crossing_count + diagram.strands + 1


def test_clasp_faces(planar_service, clasp1):
    faces = planar_service.build_faces(clasp1)
    assert faces.u_face == 0
    assert faces.meridians == ((0, 4), (4, 2))
    assert [cq.faces for cq in faces.crossings] == [
        {"N": 1, "E": 2, "S": 4, "W": 3},
        {"N": 1, "E": 3, "S": 5, "W": 0},
        {"N": 5, "E": 3, "S": 4, "W": 0},
    ]
    assert [c.value for c in faces.colors] == ["white", "black", "white", "white", "black", "black"]


def test_unbounded_face_is_white(planar_service, load_fixture):
    for name in ("clasp1", "trefoil", "braid3", "three_strand_alternating"):
        faces = planar_service.build_faces(load_fixture(name))
        assert faces.color(faces.u_face) == Color.WHITE


def test_trivial_link_black_graph(planar_service, diagram_service):
    graph = planar_service.black_graph(diagram_service.trivial(2))
    assert graph.vertices == (1,)
    assert graph.roots == (1,)
    assert graph.edge_count == 0


def test_clasp_region_graphs(planar_service, clasp1):
    black = planar_service.black_graph(clasp1)
    assert black.vertices == (1, 4, 5)
    assert black.edges == {0: (1, 4), 1: (1, 5), 2: (5, 4)}
    assert black.roots == (4,)
    assert black.is_connected()

    white = planar_service.white_graph(clasp1)
    assert white.vertices == (0, 2, 3)
    assert white.edges == {0: (2, 3), 1: (3, 0), 2: (3, 0)}
    assert white.roots == (0, 2)
    # crossings 2 and 3 are parallel edges of the white graph
    assert white.graph().number_of_edges(3, 0) == 2
    assert white.is_connected()


def test_region_graph_rejects_split_projection(planar_service, diagram_service, clasp1):
    with pytest.raises(DisconnectedProjectionError):
        planar_service.black_graph(diagram_service.amalgamate(clasp1, clasp1))


def test_dump_faces_is_one_based(planar_service, clasp1):
    dump = planar_service.dump_faces(clasp1)
    assert [c["index"] for c in dump["crossings"]] == [1, 2, 3]
    assert dump["u_face"] == 0
    assert len(dump["faces"]) == 6
    assert dump["faces"][0] == {"id": 0, "color": "white", "anchor": [0, 0]}
