"""
Command service shared by the CLI and the HTTP router.

Each method takes a validated request model from schemas/ and returns a
JSON-ready dict; the regularizer trace is also offered as a stream of
JSON lines.
"""

import json
import logging
from typing import Iterator

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
    SequenceInput,
    WordRequest,
)
from services.errors import PreconditionViolated
from services.exact_geometry import emit_svg
from services.gaussian_core import GaussianInt, QuadComplex
from services.hcf_engine import (
    ComplexBall,
    evaluate_finite,
    expand,
    expand_ball,
    gaussian_rational_json,
    lambda_bar,
    lambda_valid,
    prefix_length_for,
)
from services.normality_stats import (
    estimate_level_one,
    estimate_many,
    normality_report,
)
from services.regularizer import (
    certify_gap,
    check_valid,
    closure_preimage,
    iterate_rewrites,
    run_regularizer,
)
from services.regularizer.constants import REGULARIZE_SLACK
from services.hcf_engine.constants import START_PRECISION_BITS
from services.symbolic_shift import (
    DigitSeq,
    Word,
    build_sofic_graph,
    classify,
    cylinder_region,
    prototype_region,
    state_of,
)
from services.figures import plot_figure
from services.wordlab import find_wuv, gen_theorem14, gen_theorem_new, normalize_even, repetition_profile

logger = logging.getLogger("hcf.service")

# Number of W U V U decompositions reported by rep
MAX_DECOMPOSITIONS = 20


def _sort_key(b: GaussianInt):
    return (b.norm(), b.re, b.im)


class HCFService:
    """
    Dispatch of the toolkit operations.

    The service holds no per-request state; the sofic graph and the figure
    renderings are cached at module level by the packages that build them.
    """

    # ------------------------------------------------------------------
    # inputs
    # ------------------------------------------------------------------

    def generate(self, spec: GenRequest) -> DigitSeq:
        if spec.family == "thm14":
            return gen_theorem14(spec.b_spec, spec.length)
        return gen_theorem_new(spec.a_spec, spec.b_spec, spec.length, spec.family, spec.b_form)

    def sequence(self, spec: SequenceInput) -> DigitSeq:
        if spec.digits is not None:
            return DigitSeq.finite(Word.from_json(spec.digits), "explicit digits")
        if spec.block is not None:
            return DigitSeq.periodic(Word.from_json(spec.block), Word.from_json(spec.prefix))
        return self.generate(spec.gen)

    # ------------------------------------------------------------------
    # commands
    # ------------------------------------------------------------------

    def expand(self, req: ExpandRequest) -> dict:
        """Digits of an exact value or a ball, or a closed-shift preimage with closure."""
        prec = req.precision or START_PRECISION_BITS
        if req.ball is not None:
            ball = ComplexBall.from_json(req.ball, prec)
            result = expand_ball(ball, req.n)
        else:
            z = QuadComplex.from_json(req.z.model_dump(), req.d)
            if req.closure:
                preimage = closure_preimage(z, req.n)
                return {"digits": preimage.digits.to_json(), "breakpoints": preimage.breakpoints}
            result = expand(z, req.n)
            ball = ComplexBall.exact(z, prec)
        out = result.to_json()
        out["convergents"] = result.convergent_values()
        out["ball"] = ball.to_json()
        out["precision"] = ball.prec
        return out

    def evaluate(self, req: EvalRequest) -> dict:
        seq = self.sequence(req.sequence)
        if req.closed_shift:
            out = lambda_bar(seq, req.target_radius).to_json()
        else:
            n = seq.available(prefix_length_for(req.target_radius))
            out = {"ball": lambda_valid(seq, n).to_json(), "prefix_length": n}
        if seq.is_finite() and seq.length <= out["prefix_length"]:
            out["exact"] = gaussian_rational_json(evaluate_finite(seq.take(seq.length)))
        return out

    def classify(self, req: WordRequest) -> dict:
        return classify(Word.from_json(req.word)).to_json()

    def cylinder(self, req: CylinderRequest) -> dict:
        w = Word.from_json(req.word)
        region = cylinder_region(w, req.uncertified)
        state = state_of(w)
        out = {
            "word": w.to_json(),
            "prototype": prototype_region(w, req.uncertified).to_json(),
            "cylinder": region.to_json(),
            "description": region.describe(),
            "open_state": state.name if state is not None else None,
        }
        if req.svg:
            out["svg"] = emit_svg([(region, None)])
        return out

    def graph(self, req: GraphRequest) -> dict:
        graph = build_sofic_graph()
        if req.format == "dot":
            return {"dot": graph.to_dot()}
        out = graph.to_json()
        out["reachable"] = [s.name for s in graph.reachable()]
        out["exception_edges"] = graph.exception_edge_count()
        if req.validate_radius is not None:
            out["large_digit_mismatches"] = graph.validate_large_digit_rule(req.validate_radius)
        return out

    def _gap(self, seq: DigitSeq, digits: Word, req: RegularizeRequest):
        """The certified value gap, or None when there is nothing to compare."""
        if len(digits) == 0:
            return None
        try:
            return certify_gap(seq, digits, len(digits), req.tolerance).to_json()
        except PreconditionViolated as e:
            if req.validate_input or req.tolerance is not None:
                raise
            logger.warning(f"No certified gap for unvalidated input: {e}")
            return None

    def regularize(self, req: RegularizeRequest) -> dict:
        slack = REGULARIZE_SLACK if req.slack is None else req.slack
        seq = self.sequence(req.sequence)
        result = run_regularizer(seq, req.out_len, slack, req.validate_input)
        out = result.to_json()
        out["gap"] = self._gap(seq, result.digits, req)
        if req.trace:
            out["trace"] = result.trace
        return out

    def regularize_stream(self, req: RegularizeRequest) -> Iterator[str]:
        """
        The regularizer trace as JSON lines, one per rewrite round, closed by
        a summary line with the emitted digits.

        Input validation runs before the first line is produced.
        """
        slack = REGULARIZE_SLACK if req.slack is None else req.slack
        graph = build_sofic_graph()
        seq = self.sequence(req.sequence)
        if req.validate_input:
            check_valid(seq, req.out_len + slack + 1, graph)
        logger.info(f"Streaming the regularizer trace of {seq.description} for {req.out_len} digits")

        def lines() -> Iterator[str]:
            rounds = iterate_rewrites(seq, req.out_len, slack, graph)
            while True:
                try:
                    record = next(rounds)
                except StopIteration as done:
                    st = done.value
                    break
                yield json.dumps(record) + "\n"
            digits = st.take(req.out_len)
            yield json.dumps({
                "digits": digits.to_json(),
                "breakpoints": st.j_history,
                "rounds": st.N,
                "gap": self._gap(seq, digits, req),
            }) + "\n"

        return lines()

    def rep(self, req: RepRequest) -> dict:
        word = self.sequence(req.sequence).take(req.length)
        out = repetition_profile(word, req.max_n, req.extra).to_json()
        if req.wuv:
            found = find_wuv(word, req.min_u)
            if req.even:
                found = [normalize_even(d) for d in found]
            out["decompositions"] = [d.to_json() for d in found[:MAX_DECOMPOSITIONS]]
            out["decomposition_count"] = len(found)
        return out

    def gen(self, req: GenRequest) -> dict:
        seq = self.generate(req)
        head = seq.take(2)
        return {
            "family": req.family,
            "description": seq.description,
            "digits": seq.take(req.length).to_json(),
            "prefix_tag": classify(head).tag,
        }

    def freq(self, req: FreqRequest) -> dict:
        if req.level_one:
            table = estimate_level_one(req.samples, req.orbit_len, req.seed)
            rows = [table[b].to_json() for b in sorted(table, key=_sort_key)]
            return {"estimates": rows, "total": sum(e["estimate"] for e in rows)}
        if req.sequence is not None:
            report = normality_report(self.sequence(req.sequence), req.patterns, req.N,
                                      req.samples, req.orbit_len, req.seed)
            return {"report": [row.to_json() for row in report], "N": req.N}
        estimates = estimate_many(req.patterns, req.samples, req.orbit_len, req.seed)
        return {"estimates": [e.to_json() for e in estimates]}

    def plot(self, req: PlotRequest) -> dict:
        return {"figure": req.figure, "svg": plot_figure(req.figure)}


# Global service instance
hcf_service = HCFService()
