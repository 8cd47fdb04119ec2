"""
Hurwitz CF Toolkit API

FastAPI application exposing the Hurwitz continued fraction toolkit:
expansion, classification, the regularizer, word combinatorics and
figure rendering.

Architecture:
- Routers: API endpoint definitions
- Services: exact arithmetic, geometry, the sofic shift and statistics
- Schemas: request models shared with the CLI
- Config: Centralized configuration management

Run with: uvicorn main:app --reload
"""

import logging

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from config.settings import settings
from routers import hcf

logger = logging.getLogger("hcf.api")


# Initialize FastAPI application
app = FastAPI(
    title=settings.APP_NAME,
    version=settings.APP_VERSION,
    description="Exact Hurwitz continued fractions, the regular-word shift and its regularizer",
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.CORS_ORIGINS,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Include routers
app.include_router(hcf.router)


@app.exception_handler(RequestValidationError)
async def usage_error_handler(request: Request, exc: RequestValidationError):
    """Malformed payloads are usage errors (400), like exit code 3 on the CLI."""
    logger.error(f"{request.url.path}: invalid payload")
    return JSONResponse(
        status_code=400,
        content={"detail": {"error": "UsageError", "message": "invalid payload",
                            "errors": exc.errors(), "exit_code": 3}},
    )


@app.get("/")
async def root():
    """
    Root endpoint providing API information.

    Returns:
        dict: API metadata and status
    """
    return {
        "name": settings.APP_NAME,
        "version": settings.APP_VERSION,
        "status": "running",
        "endpoints": {
            "hcf": "/hcf/<command>",
            "health": "/hcf/health",
            "docs": "/docs",
            "openapi": "/openapi.json"
        }
    }


@app.get("/health")
async def health_check():
    """
    Global health check endpoint.

    Returns:
        dict: Overall service health status
    """
    return {
        "status": "healthy",
        "service": settings.APP_NAME,
        "version": settings.APP_VERSION
    }


# Run application
if __name__ == "__main__":
    import uvicorn
    uvicorn.run(
        "main:app",
        host=settings.HOST,
        port=settings.PORT,
        reload=True
    )
