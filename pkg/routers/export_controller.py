import io

from fastapi import APIRouter, Depends
from fastapi.responses import StreamingResponse

from schemas.diagram import DiagramRequest
from services.diagram_service import DiagramService
from services.export_service import ExportService
from utils.request_utils import to_http_exception


router = APIRouter(prefix="/api/export", tags=["Export"])


def get_export_service() -> ExportService:
    return ExportService()


@router.post("/excel")
def export_report_to_excel(
    request: DiagramRequest,
    export_service: ExportService = Depends(get_export_service),
):
    try:
        diagram = DiagramService().parse_mld(request.mld)
        excel_bytes = export_service.export_report_to_excel(diagram)
        filename = export_service.get_export_filename()

        return StreamingResponse(
            io.BytesIO(excel_bytes),
            media_type="application/vnd.openxmlformats-officedocument.spreadsheetml.sheet",
            headers={
                "Content-Disposition": f"attachment; filename={filename}"
            }
        )

    except Exception as e:
        raise to_http_exception(e)
