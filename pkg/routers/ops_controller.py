from fastapi import APIRouter, Depends, HTTPException, Path

from schemas.diagram import DiagramResponse, OpsRequest
from services.report_service import OPS, ReportService
from utils.request_utils import to_http_exception


router = APIRouter(prefix="/api/ops", tags=["Diagram Operations"])


def get_report_service() -> ReportService:
    return ReportService()


@router.post("/{op}", response_model=DiagramResponse)
def apply_operation(
    request: OpsRequest,
    op: str = Path(..., description="amalgamate, compose, satellite or mirror"),
    report_service: ReportService = Depends(get_report_service),
):
    if op not in OPS:
        raise HTTPException(status_code=404, detail=f"Operation '{op}' not found")
    try:
        return report_service.ops(op, request)
    except Exception as e:
        raise to_http_exception(e)
