from fastapi import APIRouter, Depends

from schemas.diagram import DiagramRequest, SkeinRequest, StatesRequest
from schemas.invariants import FoxResponse, HomologyResponse, SkeinResponse, StateListResponse, TorsionResponse
from services.report_service import ReportService
from utils.request_utils import to_http_exception


router = APIRouter(prefix="/api", tags=["Invariants"])


def get_report_service() -> ReportService:
    return ReportService()


@router.post("/torsion", response_model=TorsionResponse)
def compute_torsion(
    request: DiagramRequest,
    report_service: ReportService = Depends(get_report_service),
):
    try:
        diagram = report_service.load(request.mld)
        return report_service.torsion(diagram, with_fox=True)
    except Exception as e:
        raise to_http_exception(e)


@router.post("/states", response_model=StateListResponse)
def list_states(
    request: StatesRequest,
    report_service: ReportService = Depends(get_report_service),
):
    try:
        diagram = report_service.load(request.mld)
        return report_service.states(diagram, dump_faces=request.dump_faces)
    except Exception as e:
        raise to_http_exception(e)


@router.post("/homology", response_model=HomologyResponse)
def compute_homology(
    request: DiagramRequest,
    report_service: ReportService = Depends(get_report_service),
):
    try:
        diagram = report_service.load(request.mld)
        return report_service.homology(diagram)
    except Exception as e:
        raise to_http_exception(e)


@router.post("/fox", response_model=FoxResponse)
def compute_fox(
    request: DiagramRequest,
    report_service: ReportService = Depends(get_report_service),
):
    try:
        diagram = report_service.load(request.mld)
        return report_service.fox(diagram)
    except Exception as e:
        raise to_http_exception(e)


@router.post("/skein", response_model=SkeinResponse)
def check_skein(
    request: SkeinRequest,
    report_service: ReportService = Depends(get_report_service),
):
    try:
        diagram = report_service.load(request.mld)
        return report_service.skein(diagram, request.crossing, request.allow_mixed)
    except Exception as e:
        raise to_http_exception(e)
