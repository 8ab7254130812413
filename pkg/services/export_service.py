import io
import logging
from datetime import datetime
from typing import Optional

import pandas as pd

from models.diagram import Diagram
from models.homology import HomologyTable, StateSum
from models.weight_table import IndexVector
from services.homology_service import HomologyService
from services.torsion_service import TorsionService

logger = logging.getLogger(__name__)

HEADER_FORMAT = {
    'bold': True,
    'text_wrap': True,
    'valign': 'top',
    'fg_color': '#D7E4BC',
    'border': 1
}


class ExportService:
    def __init__(self, torsion_service: Optional[TorsionService] = None):
        self.torsion_service = torsion_service or TorsionService()
        self.homology_service = HomologyService(self.torsion_service)
        self.diagram_service = self.torsion_service.diagram_service

    def export_report_to_excel(self, diagram: Diagram) -> bytes:
        """
        Write the invariants of one diagram to an Excel workbook:
        - States: one row per Kauffman state
        - Homology: rank per (filtration, grading)
        - Summary: torsion, state count and diagram flags
        """
        try:
            state_sum = self.torsion_service.state_sum(diagram)
            table = self.homology_service.homology_table(diagram, state_sum)

            output = io.BytesIO()
            with pd.ExcelWriter(output, engine='xlsxwriter') as writer:
                self._create_states_sheet(writer, state_sum)
                self._create_homology_sheet(writer, table)
                self._create_summary_sheet(writer, diagram, state_sum, table)

            output.seek(0)
            logger.info(f"✅ Exported {len(state_sum.records)} states to Excel")
            return output.read()

        except Exception as e:
            logger.error(f"❌ Error exporting report to Excel: {str(e)}")
            raise e

    def _create_states_sheet(self, writer, state_sum: StateSum):
        rows = []
        for index, record in enumerate(state_sum.records, start=1):
            rows.append({
                "State": index,
                "Assignment": record.state.label(),
                "F": IndexVector(record.filt2).to_text(),
                "G": record.grading,
                "Sign": "+" if record.sign > 0 else "-",
            })
        df = pd.DataFrame(rows, columns=["State", "Assignment", "F", "G", "Sign"])
        df.to_excel(writer, sheet_name='States', index=False)
        self._format_sheet(writer, 'States', df)

    def _create_homology_sheet(self, writer, table: HomologyTable):
        rows = [{
            "F": IndexVector(filt2).to_text(),
            "d": grading,
            "Rank": rank,
            "Status": table.status.value,
        } for (filt2, grading), rank in table.sorted_entries()]
        df = pd.DataFrame(rows, columns=["F", "d", "Rank", "Status"])
        df.to_excel(writer, sheet_name='Homology', index=False)
        self._format_sheet(writer, 'Homology', df)

    def _create_summary_sheet(self, writer, diagram: Diagram, state_sum: StateSum, table: HomologyTable):
        linking = self.diagram_service.linking_numbers(diagram)
        rows = [
            {"Field": "Strands", "Value": diagram.strands},
            {"Field": "Crossings", "Value": diagram.crossing_count},
            {"Field": "Torsion", "Value": state_sum.polynomial.to_text()},
            {"Field": "States", "Value": len(state_sum.records)},
            {"Field": "Braid", "Value": self.diagram_service.is_braid(diagram)},
            {"Field": "Alternating", "Value": self.diagram_service.is_alternating(diagram)},
            {"Field": "Homology status", "Value": table.status.value},
        ]
        for (i, j), value in sorted(linking.items()):
            rows.append({"Field": f"lk({i},{j})", "Value": value})
        df = pd.DataFrame(rows, columns=["Field", "Value"])
        df.to_excel(writer, sheet_name='Summary', index=False)
        self._format_sheet(writer, 'Summary', df)

    def _format_sheet(self, writer, sheet_name: str, df: pd.DataFrame):
        workbook = writer.book
        worksheet = writer.sheets[sheet_name]
        header_format = workbook.add_format(HEADER_FORMAT)

        for col_num, value in enumerate(df.columns.values):
            worksheet.write(0, col_num, value, header_format)

        # Auto-adjust column widths
        for i, col in enumerate(df.columns):
            if not df.empty:
                column_len = max(df[col].astype(str).map(len).max(), len(str(col)))
            else:
                column_len = len(str(col))
            worksheet.set_column(i, i, min(column_len + 2, 40))

        worksheet.freeze_panes(1, 0)

    def get_export_filename(self) -> str:
        today_str = datetime.now().strftime("%Y%m%d")
        timestamp = datetime.now().strftime("%H%M%S")
        return f"string_link_report_{today_str}_{timestamp}.xlsx"
