"""
HCF router: the toolkit operations over HTTP.

Every CLI subcommand is reachable as POST /hcf/<name> with the same JSON
payload the CLI accepts. The regularizer trace can be streamed as JSON
lines with POST /hcf/regularize?trace=true.
"""

import logging
from typing import Callable

from fastapi import APIRouter, HTTPException, Query
from fastapi.responses import Response, StreamingResponse

from config.settings import settings
from schemas import (
    CylinderRequest,
    EvalRequest,
    ExpandRequest,
    FreqRequest,
    GenRequest,
    GraphRequest,
    PlotRequest,
    RegularizeRequest,
    RepRequest,
    WordRequest,
)
from services.errors import HCFError
from services.hcf_service import hcf_service

logger = logging.getLogger("hcf.api")

COMMAND_ROUTES = ("expand", "eval", "classify", "cylinder", "graph", "regularize", "rep", "gen", "freq", "plot")


# Create router for toolkit endpoints
router = APIRouter(
    prefix="/hcf",
    tags=["hcf"],
    responses={404: {"description": "Not found"}},
)


def _run(name: str, call: Callable[[], object]):
    """Run a service call and turn toolkit errors into HTTP errors."""
    try:
        return call()
    except HCFError as e:
        logger.error(f"/hcf/{name} failed with {type(e).__name__}: {e}")
        raise HTTPException(
            status_code=e.http_status,
            detail={"error": type(e).__name__, "message": str(e), "exit_code": e.exit_code},
        )


@router.post("/expand")
def expand(request: ExpandRequest):
    """
    HCF digits of an exact number or a ball.

    Example:
        POST /hcf/expand
        Body: {"z": {"re": "-1/2", "im": {"a": "1", "b": "-1/2", "d": 3}}, "n": 4}
    """
    return _run("expand", lambda: hcf_service.expand(request))


@router.post("/eval")
def evaluate(request: EvalRequest):
    """Certified ball for the value of a digit sequence."""
    return _run("eval", lambda: hcf_service.evaluate(request))


@router.post("/classify")
def classify(request: WordRequest):
    """
    Classify a finite word.

    Example:
        POST /hcf/classify
        Body: {"word": [[-2, 0], [1, 3]]}

        Response:
        {"tag": "irregular-valid", ...}
    """
    return _run("classify", lambda: hcf_service.classify(request))


@router.post("/cylinder")
def cylinder(request: CylinderRequest):
    """Exact cylinder and prototype set of a word, optionally with an SVG."""
    return _run("cylinder", lambda: hcf_service.cylinder(request))


@router.post("/graph")
def graph(request: GraphRequest):
    """The regular-word transition graph as JSON or DOT."""
    return _run("graph", lambda: hcf_service.graph(request))


@router.post("/regularize")
def regularize(request: RegularizeRequest, trace: bool = Query(False, description="Stream the trace as JSON lines")):
    """
    Regularize a valid digit sequence.

    With trace=true the response is application/x-ndjson: one record per
    rewrite round and a final record with the emitted digits.
    """
    if not trace:
        return _run("regularize", lambda: hcf_service.regularize(request))
    lines = _run("regularize", lambda: hcf_service.regularize_stream(request))
    return StreamingResponse(
        lines,
        media_type="application/x-ndjson",
        headers={
            "Cache-Control": "no-cache",
            "X-Accel-Buffering": "no",
        },
    )


@router.post("/rep")
def rep(request: RepRequest):
    """Repetition profile and W U V U decompositions of a prefix."""
    return _run("rep", lambda: hcf_service.rep(request))


@router.post("/gen")
def gen(request: GenRequest):
    """Emit a digit family after checking its hypotheses."""
    return _run("gen", lambda: hcf_service.gen(request))


@router.post("/freq")
def freq(request: FreqRequest):
    """Monte Carlo cylinder measures or a normality report."""
    return _run("freq", lambda: hcf_service.freq(request))


@router.post("/plot")
def plot(request: PlotRequest):
    """A registered figure, wrapped in JSON."""
    return _run("plot", lambda: hcf_service.plot(request))


@router.get("/plot/{name}")
def plot_svg(name: str):
    """A registered figure as image/svg+xml."""
    data = _run("plot", lambda: hcf_service.plot(PlotRequest(figure=name)))
    return Response(content=data["svg"], media_type="image/svg+xml")


@router.get("/health")
def hcf_health():
    """
    Health check endpoint for the toolkit.

    Returns:
        dict: Service status information
    """
    return {
        "service": "hcf",
        "status": "healthy",
        "commands": sorted(COMMAND_ROUTES),
        "trace_media_type": "application/x-ndjson",
        "precision_cap_bits": settings.PRECISION_CAP_BITS,
    }
