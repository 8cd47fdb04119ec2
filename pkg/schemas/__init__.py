"""Schemas package for request payloads and corpus fixtures."""

from .hcf_schemas import (
    ExactComplex,
    GenRequest,
    SequenceInput,
    ExpandRequest,
    EvalRequest,
    WordRequest,
    CylinderRequest,
    GraphRequest,
    RegularizeRequest,
    RepRequest,
    FreqRequest,
    PlotRequest,
    Fixture,
)

__all__ = [
    "ExactComplex",
    "GenRequest",
    "SequenceInput",
    "ExpandRequest",
    "EvalRequest",
    "WordRequest",
    "CylinderRequest",
    "GraphRequest",
    "RegularizeRequest",
    "RepRequest",
    "FreqRequest",
    "PlotRequest",
    "Fixture",
]
