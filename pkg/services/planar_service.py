import logging
from typing import Callable, List, Optional, Tuple

import networkx as nx
from networkx.utils import UnionFind

from models.diagram import Diagram, EventKind
from models.face_complex import COMPASS, Color, CrossingQuadrants, FaceComplex, RegionGraph
from services.diagram_service import DiagramService
from utils.errors import DiagramError, DisconnectedProjectionError

logger = logging.getLogger(__name__)

# (level, gap); gap g lies between positions g and g + 1
Node = Tuple[int, int]


class PlanarService:
    def __init__(self, diagram_service: Optional[DiagramService] = None):
        self.diagram_service = diagram_service or DiagramService()

    def build_faces(self, diagram: Diagram) -> FaceComplex:
        self.diagram_service.validate(diagram)
        widths = diagram.widths()
        uf = UnionFind((level, gap) for level, width in enumerate(widths) for gap in range(width + 1))

        for j, ev in enumerate(diagram.events):
            i = ev.pos
            above = widths[j]
            if ev.is_crossing:
                for g in range(above + 1):
                    if g != i:
                        uf.union((j, g), (j + 1, g))
            elif ev.kind == EventKind.CAP:
                for g in range(above + 1):
                    uf.union((j, g), (j + 1, g if g <= i - 1 else g + 2))
                uf.union((j, i - 1), (j + 1, i + 1))
            else:
                for g in range(above + 1):
                    if g == i:
                        continue
                    uf.union((j, g), (j + 1, g if g <= i - 1 else g - 2))

        # faces are numbered by their smallest (level, gap) node
        anchors = sorted(min(members) for members in uf.to_sets())
        face_id = {uf[anchor]: k for k, anchor in enumerate(anchors)}

        def face(node: Node) -> int:
            return face_id[uf[node]]

        colors = self._color_faces(widths, face, len(anchors))

        crossings = []
        for c, j in enumerate(diagram.crossing_events):
            i = diagram.events[j].pos
            crossings.append(CrossingQuadrants(
                crossing=c,
                faces={"N": face((j, i)), "E": face((j, i + 1)), "S": face((j + 1, i)), "W": face((j, i - 1))},
            ))

        bottom = len(widths) - 1
        k = diagram.strands
        complex_ = FaceComplex(
            face_count=len(anchors),
            colors=tuple(colors),
            crossings=tuple(crossings),
            meridians=tuple((face((bottom, i - 1)), face((bottom, i))) for i in range(1, k + 1)),
            bottom_faces=tuple(face((bottom, g)) for g in range(k + 1)),
            u_face=face((0, 0)),
            anchors=tuple(anchors),
        )
        logger.debug(f"🗺️ {complex_.face_count} faces for {complex_.crossing_count} crossings")
        return complex_

    @staticmethod
    def _color_faces(widths: List[int], face: Callable[[Node], int], face_count: int) -> List[Color]:
        # faces on either side of a strand get opposite colours; the gaps of a level chain every face together
        adjacency = nx.Graph()
        adjacency.add_nodes_from(range(face_count))
        for level, width in enumerate(widths):
            adjacency.add_edges_from((face((level, g)), face((level, g + 1))) for g in range(width))
        try:
            sides = nx.bipartite.color(adjacency)
        except nx.NetworkXError as e:
            raise DiagramError("projection faces admit no checkerboard colouring") from e
        white = sides[face((0, 0))]
        return [Color.WHITE if sides[f] == white else Color.BLACK for f in range(face_count)]

    # ---------------- region graphs ----------------

    def _ensure_connected(self, diagram: Diagram) -> None:
        blocks = self.diagram_service.decompose(diagram)
        if len(blocks) > 1 and any(block.crossing_count for block in blocks):
            raise DisconnectedProjectionError(
                f"projection splits into {len(blocks)} blocks; decompose before building region graphs"
            )

    def region_graph(self, diagram: Diagram, color: Color,
                     faces: Optional[FaceComplex] = None) -> RegionGraph:
        self._ensure_connected(diagram)
        faces = faces or self.build_faces(diagram)
        vertices = tuple(f for f in range(faces.face_count) if faces.color(f) == color)
        edges = {}
        for cq in faces.crossings:
            ends = [cq.face(q) for q in COMPASS if faces.color(cq.face(q)) == color]
            edges[cq.crossing] = (ends[0], ends[1])
        roots = tuple(sorted({f for f in faces.bottom_faces if faces.color(f) == color}))
        return RegionGraph(color=color, vertices=vertices, edges=edges, roots=roots)

    def black_graph(self, diagram: Diagram, faces: Optional[FaceComplex] = None) -> RegionGraph:
        return self.region_graph(diagram, Color.BLACK, faces)

    def white_graph(self, diagram: Diagram, faces: Optional[FaceComplex] = None) -> RegionGraph:
        return self.region_graph(diagram, Color.WHITE, faces)

    def dump_faces(self, diagram: Diagram) -> dict:
        faces = self.build_faces(diagram)
        return {
            "faces": [
                {"id": f, "color": faces.color(f).value, "anchor": list(faces.anchors[f])}
                for f in range(faces.face_count)
            ],
            "crossings": [
                {"index": cq.crossing + 1, "quadrants": dict(cq.faces)} for cq in faces.crossings
            ],
            "meridians": [list(pair) for pair in faces.meridians],
            "u_face": faces.u_face,
        }
