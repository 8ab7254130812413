import logging
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import sympy as sp

from config.settings import get_settings
from models.diagram import Diagram
from models.laurent import LaurentPoly
from models.presentation import FoxMatrix, Letter, Presentation
from services.diagram_service import DiagramService
from utils.errors import DiagramError, StructuralError

logger = logging.getLogger(__name__)


def is_unimodular(block: List[List[int]]) -> bool:
    """Exact integer determinant is +-1."""
    return abs(sp.Matrix(block).det()) == 1


class FoxService:
    """Wirtinger presentation of the string-link exterior and its Fox Jacobian."""

    def __init__(self, diagram_service: Optional[DiagramService] = None,
                 cofactor_limit: Optional[int] = None):
        self.diagram_service = diagram_service or DiagramService()
        self.cofactor_limit = cofactor_limit if cofactor_limit is not None else get_settings().cofactor_limit

    # ---------------- presentation ----------------

    def wirtinger(self, diagram: Diagram) -> Presentation:
        if diagram.closed_color is not None:
            raise DiagramError("a Wirtinger presentation needs a string link without closed components")
        trace = self.diagram_service.trace(diagram)

        colors: List[int] = []
        top_arc: Dict[int, int] = {}
        bottom_arc: Dict[int, int] = {}
        # (crossing) -> arc of the over strand / arcs before and after the under passage
        over_arc: Dict[int, int] = {}
        under_arcs: Dict[int, Tuple[int, int]] = {}
        kinked: List[int] = []

        for strand in range(1, diagram.strands + 1):
            current = len(colors)
            colors.append(strand)
            top_arc[strand] = current
            for passage in trace.passages[strand - 1]:
                if passage.over:
                    over_arc[passage.crossing] = current
                    continue
                following = len(colors)
                colors.append(strand)
                under_arcs[passage.crossing] = (current, following)
                current = following
            if current == top_arc[strand]:
                # no under passage: split the arc with a kink at the bottom
                current = len(colors)
                colors.append(strand)
                kinked.append(strand)
            bottom_arc[strand] = current

        relations: List[Tuple[Letter, ...]] = []
        for info in trace.crossings:
            o = over_arc[info.index]
            before, after = under_arcs[info.index]
            if info.sign > 0:
                relations.append(((o, 1), (before, 1), (o, -1), (after, -1)))
            else:
                relations.append(((o, -1), (before, 1), (o, 1), (after, -1)))
        for strand in kinked:
            x, y = top_arc[strand], bottom_arc[strand]
            relations.append(((x, 1), (x, 1), (x, -1), (y, -1)))

        presentation = Presentation(
            strands=diagram.strands,
            generator_count=len(colors),
            colors=tuple(colors),
            top_meridians=tuple(top_arc[s] for s in trace.top_order),
            bottom_meridians=tuple(bottom_arc[s] for s in range(1, diagram.strands + 1)),
            relations=tuple(relations),
            kinked_strands=tuple(kinked),
        )
        logger.debug(
            f"🔗 Wirtinger presentation: {presentation.generator_count} generators, "
            f"{len(presentation.relations)} relations"
        )
        return presentation

    # ---------------- Fox calculus ----------------

    @staticmethod
    def fox_derivative(presentation: Presentation, word: Sequence[Letter], generator: int) -> LaurentPoly:
        """Abelianised free derivative of ``word`` with respect to ``generator``."""
        k = presentation.strands
        prefix = [0] * k
        result: Dict[Tuple[int, ...], int] = {}
        for gen, power in word:
            color = presentation.colors[gen] - 1
            if gen == generator:
                exp2 = list(prefix)
                if power < 0:
                    exp2[color] -= 2
                key = tuple(exp2)
                result[key] = result.get(key, 0) + power
            prefix[color] += 2 * power
        return LaurentPoly(k, result)

    def fox_matrix(self, presentation: Presentation) -> FoxMatrix:
        columns = tuple(range(presentation.generator_count))
        rows = tuple(
            tuple(self.fox_derivative(presentation, word, g) for g in columns)
            for word in presentation.relations
        )
        return FoxMatrix(
            strands=presentation.strands,
            rows=rows,
            column_generators=columns,
            square_columns=presentation.square_columns,
            bottom_columns=presentation.bottom_meridians,
        )

    def structural_checks(self, presentation: Presentation, matrix: FoxMatrix) -> None:
        """Row sums vanish at h = 1 and every row satisfies the fundamental formula."""
        at_one = np.array(matrix.augmented(), dtype=np.int64)
        if at_one.size and np.any(at_one.sum(axis=1) != 0):
            raise StructuralError("a Fox row does not sum to zero at h = 1")

        k = presentation.strands
        for r, row in enumerate(matrix.rows):
            total = LaurentPoly.zero(k)
            for g, entry in zip(matrix.column_generators, row):
                color = presentation.colors[g]
                total = total + entry * (LaurentPoly.variable(k, color) - LaurentPoly.one(k))
            if not total.is_zero():
                raise StructuralError(f"relation {r + 1} violates the fundamental formula")

        square = at_one[:, list(matrix.square_columns)] if at_one.size else at_one
        if square.shape[0] != square.shape[1]:
            raise StructuralError(f"square block has shape {square.shape}")
        if square.size and not is_unimodular(square.tolist()):
            raise StructuralError("square block is not unimodular at h = 1")

    # ---------------- determinants ----------------

    @staticmethod
    def _cofactor_det(block: List[List[LaurentPoly]], k: int) -> LaurentPoly:
        n = len(block)

        @lru_cache(maxsize=None)
        def minor(row: int, used: int) -> LaurentPoly:
            if row == n:
                return LaurentPoly.one(k)
            total = LaurentPoly.zero(k)
            sign = 1
            for col in range(n):
                if used & (1 << col):
                    continue
                entry = block[row][col]
                if not entry.is_zero():
                    total = total + entry * minor(row + 1, used | (1 << col)) * sign
                sign = -sign
            return total

        return minor(0, 0)

    @staticmethod
    def _bareiss_det(block: List[List[LaurentPoly]], k: int) -> LaurentPoly:
        symbols = sp.symbols(f"t1:{k + 1}")
        shift = [0] * k
        rows = []
        for row in block:
            # multiply each row by a monomial so every exponent is non-negative
            lows = [0] * k
            for entry in row:
                for exp2 in entry.terms:
                    lows = [min(a, b) for a, b in zip(lows, exp2)]
            shift = [s + low for s, low in zip(shift, lows)]
            sym_row = []
            for entry in row:
                expr = sp.Integer(0)
                for exp2, coeff in entry.terms.items():
                    term = sp.Integer(coeff)
                    for sym, e2, low in zip(symbols, exp2, lows):
                        term *= sym ** ((e2 - low) // 2)
                    expr += term
                sym_row.append(expr)
            rows.append(sym_row)

        det = sp.expand(sp.Matrix(rows).det(method="bareiss"))
        if det == 0:
            return LaurentPoly.zero(k)
        poly = sp.Poly(det, *symbols, domain="ZZ")
        terms = {tuple(2 * e for e in monom): int(coeff) for monom, coeff in poly.terms()}
        return LaurentPoly(k, terms).shift(shift)

    def determinant(self, block: List[List[LaurentPoly]], k: int) -> LaurentPoly:
        if not block:
            return LaurentPoly.one(k)
        if len(block) <= self.cofactor_limit:
            return self._cofactor_det(block, k)
        logger.info(f"📐 Using Bareiss elimination for a {len(block)}x{len(block)} block")
        return self._bareiss_det(block, k)

    def torsion_via_fox(self, diagram: Diagram) -> LaurentPoly:
        presentation = self.wirtinger(diagram)
        matrix = self.fox_matrix(presentation)
        self.structural_checks(presentation, matrix)
        return self.determinant(matrix.square_block(), diagram.strands)
