import logging
from itertools import product
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx

from models.face_complex import COMPASS, Color, FaceComplex
from models.kauffman_state import CLOCK, COUNTERCLOCK, ClockMove, ForestPair, KauffmanState
from utils.errors import StructuralError

logger = logging.getLogger(__name__)

_OPPOSITE = {"N": "S", "S": "N", "E": "W", "W": "E"}


def _rotation(before: str, after: str) -> int:
    return (COMPASS.index(after) - COMPASS.index(before)) % 4


class StateService:
    """Kauffman states of a face complex and the clock moves between them."""

    def meridian_assignment(self, faces: FaceComplex) -> Tuple[int, ...]:
        """The one way to seat each meridian on a distinct abutting bottom face other than U."""
        choices = [tuple(f for f in pair if f != faces.u_face) for pair in faces.meridians]
        matchings = {
            seats for seats in product(*choices) if len(set(seats)) == len(seats)
        }
        if len(matchings) != 1:
            raise StructuralError(
                f"meridians admit {len(matchings)} placements on distinct non-U bottom faces, expected 1"
            )
        return matchings.pop()

    def _targets(self, faces: FaceComplex) -> Set[int]:
        taken = {faces.u_face} | set(self.meridian_assignment(faces))
        return {f for f in range(faces.face_count) if f not in taken}

    def enumerate_states(self, faces: FaceComplex) -> List[KauffmanState]:
        meridian_faces = self.meridian_assignment(faces)
        if len(set(meridian_faces)) != len(meridian_faces) or faces.u_face in meridian_faces:
            raise StructuralError("meridians do not sit on distinct non-U faces")
        targets = self._targets(faces)
        crossings = faces.crossings
        if len(targets) != len(crossings):
            logger.warning(
                f"⚠️ {len(targets)} free faces for {len(crossings)} crossings; the state set is empty"
            )
            return []

        last_claim: Dict[int, int] = {}
        for cq in crossings:
            for q in COMPASS:
                f = cq.face(q)
                if f in targets:
                    last_claim[f] = cq.crossing
        if any(f not in last_claim for f in targets):
            return []

        states: List[KauffmanState] = []
        chosen: List[str] = []
        used: Set[int] = set()

        def extend(c: int) -> None:
            if c == len(crossings):
                states.append(KauffmanState(
                    quadrants=tuple(chosen),
                    faces=tuple(crossings[i].face(q) for i, q in enumerate(chosen)),
                    meridian_faces=meridian_faces,
                ))
                return
            for q in COMPASS:
                f = crossings[c].face(q)
                if f not in targets or f in used:
                    continue
                used.add(f)
                # every face still free needs a later crossing that can claim it
                if all(last_claim[g] > c for g in targets if g not in used):
                    chosen.append(q)
                    extend(c + 1)
                    chosen.pop()
                used.discard(f)

        extend(0)
        logger.debug(f"🔢 Enumerated {len(states)} states over {len(crossings)} crossings")
        return states

    def to_forest_pair(self, faces: FaceComplex, state: KauffmanState) -> ForestPair:
        """Orient each crossing's edge away from the face its marker occupies."""
        parents: Dict[Color, Dict[int, int]] = {Color.BLACK: {}, Color.WHITE: {}}
        edges: Dict[Color, Set[int]] = {Color.BLACK: set(), Color.WHITE: set()}
        graphs = {color: nx.MultiGraph() for color in parents}
        for f in range(faces.face_count):
            graphs[faces.color(f)].add_node(f)
        for c, q in enumerate(state.quadrants):
            cq = faces.crossings[c]
            child = cq.face(q)
            parent = cq.face(_OPPOSITE[q])
            color = faces.color(child)
            if parent == child:
                raise StructuralError(f"state {state.label()} marks a loop edge at crossing {c + 1}")
            parents[color][child] = parent
            edges[color].add(c)
            graphs[color].add_edge(child, parent, key=c)

        for color, graph in graphs.items():
            if graph.number_of_nodes() and not nx.is_forest(graph):
                cycle = nx.find_cycle(graph)
                raise StructuralError(
                    f"state {state.label()} closes a {color.value} cycle through face {cycle[0][0]}"
                )

        def roots(color: Color) -> Tuple[int, ...]:
            return tuple(f for f in range(faces.face_count)
                         if faces.color(f) == color and f not in parents[color])

        return ForestPair(
            black_parent=parents[Color.BLACK],
            white_parent=parents[Color.WHITE],
            black_edges=frozenset(edges[Color.BLACK]),
            white_edges=frozenset(edges[Color.WHITE]),
            black_roots=roots(Color.BLACK),
            white_roots=roots(Color.WHITE),
        )

    def is_forest(self, faces: FaceComplex, state: KauffmanState) -> bool:
        try:
            self.to_forest_pair(faces, state)
        except StructuralError:
            return False
        return True

    @staticmethod
    def _direction(turns: Tuple[int, ...]) -> Optional[str]:
        for turn in turns:
            if turn == 1:
                return CLOCK
            if turn == 3:
                return COUNTERCLOCK
        return None

    def clock_neighbors(self, faces: FaceComplex, state: KauffmanState) -> List[ClockMove]:
        """States reached by swapping the faces of two crossings that both abut those faces."""
        moves: List[ClockMove] = []
        n = len(state.quadrants)
        for a in range(n):
            for b in range(a + 1, n):
                fa, fb = state.faces[a], state.faces[b]
                qa_options = faces.crossings[a].quadrants_of(fb)
                qb_options = faces.crossings[b].quadrants_of(fa)
                for qa in qa_options:
                    for qb in qb_options:
                        direction = self._direction((
                            _rotation(state.quadrants[a], qa),
                            _rotation(state.quadrants[b], qb),
                        ))
                        if direction is None:
                            continue
                        quadrants = list(state.quadrants)
                        quadrants[a], quadrants[b] = qa, qb
                        target_faces = list(state.faces)
                        target_faces[a], target_faces[b] = fb, fa
                        target = KauffmanState(tuple(quadrants), tuple(target_faces), state.meridian_faces)
                        if not self.is_forest(faces, target):
                            continue
                        moves.append(ClockMove(direction=direction, source=state, target=target,
                                               crossings=(a, b)))
        return moves

    def clock_graph(self, faces: FaceComplex, states: List[KauffmanState]) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(states)
        known = set(states)
        for state in states:
            for move in self.clock_neighbors(faces, state):
                if move.target in known:
                    graph.add_edge(state, move.target, direction=move.direction)
        return graph

    def clock_connectivity(self, faces: FaceComplex,
                           states: Optional[List[KauffmanState]] = None) -> bool:
        states = states if states is not None else self.enumerate_states(faces)
        if len(states) <= 1:
            return True
        graph = self.clock_graph(faces, states)
        connected = nx.is_connected(graph)
        if not connected:
            reached = len(nx.node_connected_component(graph, states[0]))
            logger.warning(f"⚠️ Clock moves reach {reached} of {len(states)} states")
        return connected
