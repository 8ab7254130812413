# utils/request_utils.py
import logging

from fastapi import HTTPException

from utils.errors import DiagramError, StructuralError

logger = logging.getLogger(__name__)


def to_http_exception(error: Exception) -> HTTPException:
    """
    Map a service exception to an HTTP error.
    Caller mistakes (ValueError) become 400, everything else 500.
    """
    if isinstance(error, HTTPException):
        return error
    if isinstance(error, DiagramError) and error.line is not None:
        return HTTPException(status_code=400, detail={"error": str(error), "line": error.line})
    if isinstance(error, ValueError):
        return HTTPException(status_code=400, detail=str(error))
    if isinstance(error, StructuralError):
        logger.error(f"❌ Structural failure: {error}")
        return HTTPException(status_code=500, detail=str(error))
    logger.exception(f"❌ Unexpected error: {error}")
    return HTTPException(status_code=500, detail=str(error))
