
from dotenv import load_dotenv
from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
import logging

from config.server_settings import get_server_settings
from config.settings import get_settings
from routers import (
    check_controller,
    export_controller,
    invariant_controller,
    ops_controller,
)
from schemas.common import SuccessResponse
from services.weight_service import WeightService

load_dotenv()
settings = get_settings()
server_settings = get_server_settings()

logging.basicConfig(level=settings.log_level)
logger = logging.getLogger(__name__)

# ===================== CONFIG APP =====================
app = FastAPI(
    title=settings.app_name,
    version=settings.app_version,
    description=settings.app_description
)


# ===================== STARTUP =====================
@app.on_event("startup")
async def startup_event():
    try:
        table = WeightService().load_table()
        print(f"✅ Weight table loaded from {table.source}")
        print(f"📋 Fixtures directory: {settings.fixtures_dir}")

        print("\n" + "="*80)
        print(f"🚀 {settings.app_name} is ready!")
        print("="*80 + "\n")

    except Exception as e:
        print(f"❌ Error initializing application: {e}")
        import traceback; traceback.print_exc()


# ===================== MIDDLEWARE =====================
app.add_middleware(
    CORSMiddleware,
    allow_origins=server_settings.cors_origins,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# ===================== ROUTERS =====================
app.include_router(invariant_controller.router)
app.include_router(ops_controller.router)
app.include_router(check_controller.router)
app.include_router(export_controller.router)


@app.get("/api/health", response_model=SuccessResponse, tags=["Health"])
def health():
    return SuccessResponse(message="ok", data={"version": settings.app_version})


# ===================== RUN =====================
if __name__ == "__main__":
    import uvicorn
    uvicorn.run(
        app,
        host=server_settings.server_host,
        port=server_settings.server_port,
        reload=server_settings.server_reload
    )
