"""
Deterministic SVG output for regions.

Two-dimensional regions are painted as a filled rectangle nested inside one
clip path (inside of a circle, a half-plane) or mask (outside of a circle)
per constraint, so circles and arcs come straight from the circline data.
Degenerate regions are drawn as arcs, segments and dots; excluded endpoints
are hollow.

The plane's y axis points up, SVG's points down: every y is negated on output.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from config.settings import settings
from services.gaussian_core import QuadComplex
from .analysis import ArcPiece, PointPiece
from .circline import Circline
from .region import EMPTY, TWO_DIM, Region

logger = logging.getLogger("hcf.geometry")

PREAMBLE = '<?xml version="1.0" encoding="UTF-8"?>\n'

DEFAULT_STYLE = {
    "fill": "#9ecae1",
    "stroke": "#08519c",
    "stroke_width": 0.01,
    "opacity": 1.0,
}

FAR = 10.0


def _fmt(v: float) -> str:
    out = f"{v:.6f}".rstrip("0").rstrip(".")
    return "0" if out in ("-0", "") else out


def _xy(z) -> Tuple[float, float]:
    if isinstance(z, QuadComplex):
        c = complex(z)
        return c.real, -c.imag
    return float(z.real), -float(z.imag)


def _half_plane_polygon(f: Circline, extent: float) -> List[Tuple[float, float]]:
    """Clip the square [-extent, extent]^2 (plane coordinates) to f <= 0."""
    p, q, d = 2 * float(f.beta.re), 2 * float(f.beta.im), float(f.D)

    def g(pt):
        return p * pt[0] + q * pt[1] + d

    square = [(-extent, -extent), (extent, -extent), (extent, extent), (-extent, extent)]
    out = []
    for k, cur in enumerate(square):
        nxt = square[(k + 1) % 4]
        gc, gn = g(cur), g(nxt)
        if gc <= 0:
            out.append(cur)
        if (gc < 0 < gn) or (gn < 0 < gc):
            t = gc / (gc - gn)
            out.append((cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1])))
    return [(x, -y) for x, y in out]


class _Document:
    """Accumulates defs and body elements with deterministic ids."""

    def __init__(self):
        self.defs: List[str] = []
        self.counter = 0

    def new_id(self, prefix: str) -> str:
        self.counter += 1
        return f"{prefix}{self.counter}"

    # ------------------------------------------------------------------
    # two-dimensional regions
    # ------------------------------------------------------------------

    def _constraint_wrapper(self, f: Circline) -> Tuple[str, str]:
        """Return (opening tag, closing tag) restricting drawing to f < 0."""
        view = FAR
        if f.is_line():
            pts = _half_plane_polygon(f, view)
            cid = self.new_id("clip")
            poly = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
            self.defs.append(f'<clipPath id="{cid}"><polygon points="{poly}"/></clipPath>')
            return f'<g clip-path="url(#{cid})">', "</g>"
        c = f.center()
        r = float(f.radius_sq()) ** 0.5
        cx, cy = _xy(c)
        circle = f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}"/>'
        if f.A.sign() > 0:
            cid = self.new_id("clip")
            self.defs.append(f'<clipPath id="{cid}">{circle}</clipPath>')
            return f'<g clip-path="url(#{cid})">', "</g>"
        mid = self.new_id("mask")
        self.defs.append(
            f'<mask id="{mid}"><rect x="{-view}" y="{-view}" width="{2 * view}" height="{2 * view}" fill="white"/>'
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" fill="black"/></mask>'
        )
        return f'<g mask="url(#{mid})">', "</g>"

    def _outline(self, f: Circline, style: Dict) -> str:
        stroke = f'fill="none" stroke="{style["stroke"]}" stroke-width="{_fmt(style["stroke_width"])}"'
        if f.is_line():
            br, bi = float(f.beta.re), float(f.beta.im)
            base = _line_base(f)
            dx, dy = -bi, br
            n = (dx * dx + dy * dy) ** 0.5
            dx, dy = dx / n * FAR, dy / n * FAR
            x0, y0 = base[0] - dx, -(base[1] - dy)
            x1, y1 = base[0] + dx, -(base[1] + dy)
            return f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x1)}" y2="{_fmt(y1)}" {stroke}/>'
        cx, cy = _xy(f.center())
        r = float(f.radius_sq()) ** 0.5
        return f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" {stroke}/>'

    def two_dim(self, region: Region, style: Dict) -> str:
        opens, closes = [], []
        for c in region.constraints:
            o, cl = self._constraint_wrapper(c.circline)
            opens.append(o)
            closes.append(cl)
        v = FAR
        fill = (f'<rect x="{-v}" y="{-v}" width="{2 * v}" height="{2 * v}" '
                f'fill="{style["fill"]}" fill-opacity="{_fmt(style["opacity"])}"/>')
        outlines = "".join(self._outline(c.circline, style) for c in region.constraints)
        body = "".join(opens) + fill + outlines + "".join(reversed(closes))
        holes = "".join(_dot(p, style, hollow=True) for p in region.punctures)
        return body + holes

    # ------------------------------------------------------------------
    # degenerate regions
    # ------------------------------------------------------------------

    def degenerate(self, region: Region, style: Dict) -> str:
        out = []
        stroke = f'fill="none" stroke="{style["stroke"]}" stroke-width="{_fmt(3 * style["stroke_width"])}"'
        for piece in region.pieces:
            if isinstance(piece, PointPiece):
                out.append(_dot(piece.z, style, hollow=False))
                continue
            out.append(_arc_path(piece, stroke))
            if piece.start is not None and not piece.full:
                out.append(_dot(piece.start, style, hollow=not piece.start_included))
            if piece.end is not None and not piece.full:
                out.append(_dot(piece.end, style, hollow=not piece.end_included))
        return "".join(out)


def _line_base(f: Circline) -> Tuple[float, float]:
    br, bi, d = float(f.beta.re), float(f.beta.im), float(f.D)
    if abs(br) >= abs(bi):
        return (-d / (2 * br), 0.0)
    return (0.0, -d / (2 * bi))


def _dot(z, style: Dict, hollow: bool) -> str:
    x, y = _xy(z)
    fill = "white" if hollow else style["stroke"]
    return (f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="0.025" fill="{fill}" '
            f'stroke="{style["stroke"]}" stroke-width="{_fmt(style["stroke_width"])}"/>')


def _arc_path(piece: ArcPiece, stroke: str) -> str:
    carrier = piece.carrier
    if carrier.is_line():
        mx, my = _xy(piece.mid)
        br, bi = float(carrier.beta.re), float(carrier.beta.im)
        dx, dy = -bi, -br  # direction (-bi, br) with y flipped
        n = (dx * dx + dy * dy) ** 0.5
        dx, dy = dx / n * FAR, dy / n * FAR
        sx, sy = _xy(piece.start) if piece.start is not None else (mx - dx, my - dy)
        ex, ey = _xy(piece.end) if piece.end is not None else (mx + dx, my + dy)
        return f'<path d="M {_fmt(sx)} {_fmt(sy)} L {_fmt(ex)} {_fmt(ey)}" {stroke}/>'
    cx, cy = _xy(carrier.center())
    r = float(carrier.radius_sq()) ** 0.5
    if piece.full:
        return f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" {stroke}/>'
    sx, sy = _xy(piece.start)
    ex, ey = _xy(piece.end)
    mx, my = _xy(piece.mid)
    turn = (mx - sx) * (ey - my) - (my - sy) * (ex - mx)
    sweep = 1 if turn > 0 else 0
    side_mid = (ex - sx) * (my - sy) - (ey - sy) * (mx - sx)
    side_center = (ex - sx) * (cy - sy) - (ey - sy) * (cx - sx)
    large = 1 if side_mid * side_center > 0 else 0
    if abs(sx - ex) < 1e-12 and abs(sy - ey) < 1e-12:
        # start and end coincide: draw the whole circle
        return f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" {stroke}/>'
    return (f'<path d="M {_fmt(sx)} {_fmt(sy)} A {_fmt(r)} {_fmt(r)} 0 {large} {sweep} '
            f'{_fmt(ex)} {_fmt(ey)}" {stroke}/>')


def _panel(doc: _Document, items: Sequence[Tuple[Region, Optional[Dict]]]) -> str:
    out = []
    for region, style in items:
        st = dict(DEFAULT_STYLE)
        st.update(style or {})
        if region.kind == EMPTY:
            out.append("<!-- empty region -->")
        elif region.kind == TWO_DIM:
            out.append(doc.two_dim(region, st))
        else:
            out.append(doc.degenerate(region, st))
    return "".join(out)


def emit_panels(panels: Sequence[Tuple[str, Sequence[Tuple[Region, Optional[Dict]]]]]) -> str:
    """
    Render side-by-side panels.

    Args:
        panels: (title, [(region, style), ...]) for each panel, left to right

    Returns:
        str: a complete SVG document; identical inputs give identical bytes.
    """
    size = settings.SVG_PANEL_SIZE
    v = settings.SVG_VIEWBOX
    doc = _Document()
    bodies = []
    for k, (title, items) in enumerate(panels):
        body = _panel(doc, items)
        label = (f'<text x="{size * k + size / 2:.1f}" y="{size + 18}" text-anchor="middle" '
                 f'font-family="sans-serif" font-size="14">{_escape(title)}</text>')
        bodies.append(
            f'<svg x="{size * k}" y="0" width="{size}" height="{size}" '
            f'viewBox="{_fmt(-v)} {_fmt(-v)} {_fmt(2 * v)} {_fmt(2 * v)}">{body}</svg>{label}'
        )
    width = max(1, len(panels)) * size
    height = size + 28
    defs = "<defs>" + "".join(doc.defs) + "</defs>"
    logger.info(f"SVG document with {len(panels)} panels and {len(doc.defs)} definitions")
    return (PREAMBLE
            + f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
              f'viewBox="0 0 {width} {height}">'
            + defs + "".join(bodies) + "</svg>\n")


def emit_svg(rs: Sequence[Tuple[Region, Optional[Dict]]]) -> str:
    """Render regions overlaid in one panel; [] gives a valid empty document."""
    return emit_panels([("", list(rs))])


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
