from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Tuple

import networkx as nx

COMPASS = ("N", "E", "S", "W")


class Color(str, Enum):
    BLACK = "black"
    WHITE = "white"


@dataclass(frozen=True)
class CrossingQuadrants:
    crossing: int
    faces: Dict[str, int] = field(compare=False)

    def face(self, quadrant: str) -> int:
        return self.faces[quadrant]

    def quadrants_of(self, face: int) -> Tuple[str, ...]:
        return tuple(q for q in COMPASS if self.faces[q] == face)


@dataclass(frozen=True)
class FaceComplex:
    face_count: int
    colors: Tuple[Color, ...]
    crossings: Tuple[CrossingQuadrants, ...]
    meridians: Tuple[Tuple[int, int], ...]
    bottom_faces: Tuple[int, ...]
    u_face: int
    # smallest (level, gap) node of each face, used as its label
    anchors: Tuple[Tuple[int, int], ...]

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def color(self, face: int) -> Color:
        return self.colors[face]


@dataclass(frozen=True)
class RegionGraph:
    color: Color
    vertices: Tuple[int, ...]
    # crossing index -> (face, face); loops allowed
    edges: Dict[int, Tuple[int, int]] = field(compare=False)
    roots: Tuple[int, ...] = ()

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def graph(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for crossing, (a, b) in self.edges.items():
            graph.add_edge(a, b, key=crossing)
        return graph

    def is_connected(self) -> bool:
        return not self.vertices or nx.is_connected(self.graph())
