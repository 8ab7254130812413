from fastapi import APIRouter, Depends

from schemas.check import CheckRequest, CheckResponse
from services.report_service import ReportService
from utils.request_utils import to_http_exception


router = APIRouter(prefix="/api/check", tags=["Check"])


def get_report_service() -> ReportService:
    return ReportService()


@router.post("", response_model=CheckResponse)
def run_check(
    request: CheckRequest,
    report_service: ReportService = Depends(get_report_service),
):
    try:
        return report_service.check(request.max_crossings, request.seed)
    except Exception as e:
        raise to_http_exception(e)
