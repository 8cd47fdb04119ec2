"""
The hcf command line.

    hcf <subcommand> [options]

Subcommands: expand, eval, classify, cylinder, graph, regularize, rep,
gen, freq, plot. Every subcommand also accepts --payload with the full
JSON request (the same body the HTTP surface takes), which is how the
corpus drives the CLI.

Exit codes: 0 success, 1 domain error, 2 precision exhausted, 3 usage error.
Data goes to stdout (or --output); diagnostics go to stderr.
"""

import argparse
import csv
import io
import json
import logging
import sys
from typing import Callable, Dict, List, Optional, TextIO, Tuple, Type

from pydantic import BaseModel, ValidationError

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
from services.errors import HCFError, UsageError
from services.hcf_service import hcf_service

logger = logging.getLogger("hcf.cli")

FORMATS = ("json", "csv", "svg", "text")


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems as UsageError instead of exiting."""

    def error(self, message):
        raise UsageError(message)


def _json_arg(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"not valid JSON: {text!r} ({e.msg})")


# ============================================================================
# PAYLOAD BUILDERS
# ============================================================================

def _sequence(args) -> Optional[dict]:
    if args.word is not None:
        return {"digits": args.word}
    if args.block is not None:
        return {"block": args.block, "prefix": args.prefix or []}
    if args.gen is not None:
        return {"gen": args.gen}
    return None


def _drop_none(data: dict) -> dict:
    return {k: v for k, v in data.items() if v is not None}


def _expand_payload(args) -> dict:
    return _drop_none({"z": args.z, "ball": args.ball, "n": args.n, "d": args.d, "closure": args.closure,
                       "precision": args.precision})


def _eval_payload(args) -> dict:
    return _drop_none({"sequence": _sequence(args), "target_radius": args.radius,
                       "closed_shift": not args.valid_only})


def _classify_payload(args) -> dict:
    return {"word": args.word}


def _cylinder_payload(args) -> dict:
    return {"word": args.word, "svg": args.svg, "uncertified": args.uncertified}


def _graph_payload(args) -> dict:
    return _drop_none({"format": args.graph_format, "validate_radius": args.validate_radius})


def _regularize_payload(args) -> dict:
    return _drop_none({"sequence": _sequence(args), "out_len": args.out_len, "slack": args.slack,
                       "validate": not args.no_validate, "trace": args.trace,
                       "tolerance": args.tolerance})


def _rep_payload(args) -> dict:
    return _drop_none({"sequence": _sequence(args), "length": args.length, "max_n": args.max_n,
                       "extra": args.extra, "wuv": args.wuv, "min_u": args.min_u, "even": args.even})


def _gen_payload(args) -> dict:
    family = "new-i" if args.family == "new" else args.family
    return _drop_none({"family": family, "b_spec": args.b_spec, "a_spec": args.a_spec,
                       "length": args.length, "b_form": args.b_form})


def _freq_payload(args) -> dict:
    return _drop_none({"patterns": args.pattern or [], "samples": args.samples, "orbit_len": args.orbit,
                       "seed": args.seed, "sequence": _sequence(args), "N": args.N,
                       "level_one": args.level_one})


def _plot_payload(args) -> dict:
    return {"figure": args.figure}


# subcommand -> (request model, payload builder, service call)
COMMANDS: Dict[str, Tuple[Type[BaseModel], Callable, Callable]] = {
    "expand": (ExpandRequest, _expand_payload, hcf_service.expand),
    "eval": (EvalRequest, _eval_payload, hcf_service.evaluate),
    "classify": (WordRequest, _classify_payload, hcf_service.classify),
    "cylinder": (CylinderRequest, _cylinder_payload, hcf_service.cylinder),
    "graph": (GraphRequest, _graph_payload, hcf_service.graph),
    "regularize": (RegularizeRequest, _regularize_payload, hcf_service.regularize),
    "rep": (RepRequest, _rep_payload, hcf_service.rep),
    "gen": (GenRequest, _gen_payload, hcf_service.gen),
    "freq": (FreqRequest, _freq_payload, hcf_service.freq),
    "plot": (PlotRequest, _plot_payload, hcf_service.plot),
}


# ============================================================================
# PARSER
# ============================================================================

def _add_sequence_options(p: argparse.ArgumentParser, digits_flag: str = "--word"):
    group = p.add_mutually_exclusive_group()
    group.add_argument(digits_flag, dest="word", type=_json_arg, help="digits as [[re, im], ...]")
    group.add_argument("--block", type=_json_arg, help="periodic block as [[re, im], ...]")
    group.add_argument("--gen", type=_json_arg, help="generator spec (see `hcf gen`)")
    p.add_argument("--prefix", type=_json_arg, help="preperiod for --block")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hcf", description="Hurwitz continued fractions toolkit")
    parser.add_argument("--log-level", default=settings.LOG_LEVEL, help="logging level (stderr)")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--payload", type=_json_arg, help="full JSON request; overrides the other options")
        p.add_argument("--output", "-o", help="write data here instead of stdout")
        p.add_argument("--format", choices=FORMATS, default="json")
        return p

    p = command("expand", "HCF digits of an exact number or a ball")
    p.add_argument("--z", type=_json_arg, help='exact value {"re": ..., "im": ...}')
    p.add_argument("--ball", type=_json_arg, help='ball {"mid": [re, im], "rad": r}')
    p.add_argument("--digits", "--n", dest="n", type=int, help="number of digits")
    p.add_argument("--precision", type=int, help="working precision in bits for balls")
    p.add_argument("--d", type=int, help="field Q(sqrt d) for scalars without their own d")
    p.add_argument("--closure", action="store_true", help="closed-shift preimage of a point of the closed square")

    p = command("eval", "certified value of a digit sequence")
    _add_sequence_options(p)
    p.add_argument("--radius", help="target ball radius, e.g. 1e-30")
    p.add_argument("--valid-only", action="store_true", help="skip the regular-prefix check")

    p = command("classify", "classify a finite word")
    p.add_argument("--word", type=_json_arg)

    p = command("cylinder", "exact cylinder of a word")
    p.add_argument("--word", type=_json_arg)
    p.add_argument("--svg", action="store_true")
    p.add_argument("--uncertified", action="store_true")

    p = command("graph", "the regular-word transition graph")
    p.add_argument("--graph-format", choices=("json", "dot"))
    p.add_argument("--validate-radius", type=int)

    p = command("regularize", "rewrite a valid sequence into the closed regular shift")
    _add_sequence_options(p)
    p.add_argument("--out-len", type=int)
    p.add_argument("--slack", type=int)
    p.add_argument("--no-validate", action="store_true")
    p.add_argument("--trace", action="store_true", help="emit one JSON line per rewrite round")
    p.add_argument("--tolerance", help="bound for the certified value gap, e.g. 1e-20")

    p = command("rep", "repetitions and W U V U decompositions")
    _add_sequence_options(p)
    p.add_argument("--length", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--extra", type=int)
    p.add_argument("--wuv", action="store_true")
    p.add_argument("--min-u", type=int)
    p.add_argument("--even", action="store_true")

    p = command("gen", "digit families with hypothesis checks")
    p.add_argument("--family", choices=("thm14", "new", "new-i", "new-ii"), help="new is new-i")
    p.add_argument("--spec", "--b-spec", dest="b_spec", type=_json_arg)
    p.add_argument("--a-spec", type=_json_arg)
    p.add_argument("--len", "--length", dest="length", type=int)
    p.add_argument("--b-form", choices=("real", "imaginary"))

    p = command("freq", "Monte Carlo cylinder measures and normality reports")
    p.add_argument("--word", "--pattern", dest="pattern", type=_json_arg, action="append",
                   help="a pattern word; repeatable")
    p.add_argument("--samples", type=int)
    p.add_argument("--orbit", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--level-one", action="store_true")
    p.add_argument("--N", type=int, help="orbit length of the report sequence")
    _add_sequence_options(p, digits_flag="--sequence")

    p = command("plot", "render a registered figure")
    p.add_argument("--figure")
    return parser


# ============================================================================
# OUTPUT
# ============================================================================

def _csv_rows(result: dict) -> List[dict]:
    for key in ("estimates", "report", "decompositions", "trace"):
        if key in result:
            return result[key]
    return [result]


def render(result, fmt: str) -> str:
    """Serialize a command result; identical results give identical text."""
    if isinstance(result, str):
        return result
    if fmt == "svg":
        if "svg" not in result:
            raise UsageError("this command produces no SVG")
        return result["svg"]
    if fmt == "text":
        for key in ("svg", "dot"):
            if key in result:
                return result[key]
        return json.dumps(result, indent=2) + "\n"
    if fmt == "csv":
        rows = _csv_rows(result)
        buf = io.StringIO()
        fields = sorted({k for row in rows for k in row})
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in row.items()})
        return buf.getvalue()
    return json.dumps(result, indent=2) + "\n"


def _emit(text: str, output: Optional[str], stdout: TextIO):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)


# ============================================================================
# ENTRY POINT
# ============================================================================

def run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """
    Parse argv, dispatch, and write the result.

    Args:
        argv: arguments without the program name (sys.argv[1:] by default)
        stdout: data stream (sys.stdout by default)

    Returns:
        int: the process exit code
    """
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        logging.getLogger().setLevel(getattr(logging, str(args.log_level).upper(), logging.WARNING))
        if args.command is None:
            raise UsageError("a subcommand is required: " + ", ".join(COMMANDS))
        model, build, call = COMMANDS[args.command]
        payload = args.payload if args.payload is not None else build(args)
        try:
            request = model.model_validate(payload)
        except ValidationError as e:
            raise UsageError(f"invalid {args.command} request: {e.errors()[0]['msg']}")

        if args.command == "regularize" and request.trace and args.format == "json":
            lines = hcf_service.regularize_stream(request)
            if args.output:
                _emit("".join(lines), args.output, stdout)
            else:
                for line in lines:
                    stdout.write(line)
                    stdout.flush()
        else:
            _emit(render(call(request), args.format), args.output, stdout)
        return 0
    except HCFError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"hcf: {type(e).__name__}: {e}", file=sys.stderr)
        return e.exit_code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
