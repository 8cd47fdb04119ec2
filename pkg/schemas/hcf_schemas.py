"""
Request and fixture schemas shared by the CLI and the HTTP surface.

Every payload is validated against one of these models before any
service code runs. Wire conventions:

- a digit is an [re, im] integer pair
- an exact scalar is a rational string "p/q" or {"a": "p/q", "b": "r/s", "d": n}
- an exact complex number is {"re": scalar, "im": scalar}
"""

from typing import Any, Literal, Optional, Union

from pydantic import BaseModel, Field, field_validator, model_validator


DigitPair = tuple[int, int]
ScalarJSON = Union[int, str, dict[str, Any]]


class ExactComplex(BaseModel):
    """An exact complex number with coordinates in Q(sqrt d)."""
    re: ScalarJSON = Field("0", description="Real part")
    im: ScalarJSON = Field("0", description="Imaginary part")

    class Config:
        json_schema_extra = {
            "example": {"re": "-1/2", "im": {"a": "1", "b": "-1/2", "d": 3}}
        }


class GenRequest(BaseModel):
    """
    Generator spec for the digit families.

    Attributes:
        family: thm14, new-i or new-ii
        b_spec: integer-sequence rule for B
        a_spec: A letters (new-ii only)
        length: number of digits to emit
        b_form: real (B_n) or imaginary (iB_n), new-ii only
    """
    family: Literal["thm14", "new-i", "new-ii"] = "thm14"
    b_spec: dict[str, Any] = Field(..., description="Integer-sequence rule, e.g. {\"rule\": \"power-positions\"}")
    a_spec: Optional[Union[str, dict[str, Any]]] = Field(None, description="A letters for new-ii")
    length: int = Field(40, ge=1, le=100000)
    b_form: Literal["real", "imaginary"] = "real"

    class Config:
        json_schema_extra = {
            "example": {
                "family": "thm14",
                "b_spec": {"rule": "power-positions", "base": 3, "bump": 4, "power": 2},
                "length": 40
            }
        }


class SequenceInput(BaseModel):
    """
    A digit sequence: an explicit word, an eventually periodic sequence, or a generator.

    Exactly one of digits, block or gen must be given; prefix only goes with block.
    """
    digits: Optional[list[DigitPair]] = None
    prefix: list[DigitPair] = Field(default_factory=list)
    block: Optional[list[DigitPair]] = None
    gen: Optional[GenRequest] = None

    @model_validator(mode="after")
    def _one_source(self):
        given = [name for name in ("digits", "block", "gen") if getattr(self, name) is not None]
        if len(given) != 1:
            raise ValueError(f"exactly one of digits, block, gen is required, got {given or 'none'}")
        if self.prefix and self.block is None:
            raise ValueError("prefix is only meaningful with block")
        if self.block is not None and not self.block:
            raise ValueError("block must be nonempty")
        return self


class ExpandRequest(BaseModel):
    z: Optional[ExactComplex] = None
    ball: Optional[dict[str, Any]] = Field(None, description="{\"mid\": [re, im], \"rad\": r} decimal strings")
    n: int = Field(20, ge=0, le=10000)
    d: Optional[int] = Field(None, description="Field Q(sqrt d) of the scalars, the session default when omitted")
    closure: bool = Field(False, description="Return a closed-shift preimage instead of the plain expansion")
    precision: Optional[int] = Field(None, ge=16, le=65536, description="Working precision in bits of the reported ball")

    @model_validator(mode="after")
    def _one_value(self):
        if (self.z is None) == (self.ball is None):
            raise ValueError("give exactly one of z and ball")
        return self


class EvalRequest(BaseModel):
    sequence: SequenceInput
    target_radius: str = Field("1e-30", description="Largest acceptable ball radius")
    closed_shift: bool = Field(True, description="lambda_bar (regular prefixes) or the plain valid-sequence evaluator")

    @field_validator("target_radius")
    @classmethod
    def _positive(cls, v: str) -> str:
        try:
            if float(v) <= 0:
                raise ValueError
        except ValueError:
            raise ValueError(f"target_radius must be a positive decimal, got {v!r}")
        return v


class WordRequest(BaseModel):
    word: list[DigitPair]

    class Config:
        json_schema_extra = {"example": {"word": [[-2, 0], [1, 3]]}}


class CylinderRequest(BaseModel):
    word: list[DigitPair]
    svg: bool = False
    uncertified: bool = Field(False, description="Continue with flagged numerics outside Q(sqrt d)")


class GraphRequest(BaseModel):
    format: Literal["json", "dot"] = "json"
    validate_radius: Optional[int] = Field(None, ge=1, le=40)


class RegularizeRequest(BaseModel):
    sequence: SequenceInput
    out_len: int = Field(40, ge=0, le=20000)
    slack: Optional[int] = Field(None, ge=0)
    validate_input: bool = Field(True, alias="validate")
    trace: bool = False
    tolerance: Optional[str] = Field(None, description="bound for the certified value gap, e.g. \"1e-20\"")

    @field_validator("tolerance")
    @classmethod
    def _positive_tolerance(cls, v: Optional[str]) -> Optional[str]:
        if v is None:
            return v
        try:
            if float(v) <= 0:
                raise ValueError
        except ValueError:
            raise ValueError(f"tolerance must be a positive decimal, got {v!r}")
        return v

    class Config:
        populate_by_name = True
        json_schema_extra = {
            "example": {
                "sequence": {"block": [[-2, 0], [1, 3], [-2, 0], [1, -4], [-2, 0], [1, 5]]},
                "out_len": 40,
                "trace": False
            }
        }


class RepRequest(BaseModel):
    sequence: SequenceInput
    length: int = Field(200, ge=1, le=100000)
    max_n: int = Field(20, ge=1)
    extra: int = Field(2, ge=0)
    wuv: bool = False
    min_u: int = Field(1, ge=1)
    even: bool = False


class FreqRequest(BaseModel):
    """
    Monte Carlo frequency request.

    With sequence and N the response is a normality report of that sequence;
    without them it is one measure estimate per pattern.
    """
    patterns: list[list[DigitPair]] = Field(default_factory=list)
    samples: int = Field(2000, ge=2, le=1000000)
    orbit_len: int = Field(200, ge=1, le=100000)
    seed: int = 20240601
    sequence: Optional[SequenceInput] = None
    N: Optional[int] = Field(None, ge=1)
    level_one: bool = False

    @model_validator(mode="after")
    def _report_needs_n(self):
        if (self.sequence is None) != (self.N is None):
            raise ValueError("sequence and N go together")
        return self


class PlotRequest(BaseModel):
    figure: str


class Fixture(BaseModel):
    """One corpus fixture: a command, its payload and the expected output."""
    id: str
    command: str
    input: dict[str, Any]
    expected: dict[str, Any] = Field(default_factory=dict)
    exit_code: int = 0
    provenance: Literal["PAPER", "TRIVIAL", "DERIVED"]
    anchor: str = ""
    oracle: str = ""
    note: str = ""

    @model_validator(mode="after")
    def _traced(self):
        if self.provenance == "PAPER" and not self.anchor:
            raise ValueError(f"PAPER fixture {self.id} needs a quote anchor")
        if self.provenance == "DERIVED" and not self.oracle:
            raise ValueError(f"DERIVED fixture {self.id} needs an oracle")
        return self
