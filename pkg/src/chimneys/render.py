"""Deterministic SVG drawings of rank-2 apartments.

Floating point appears only here: coroot coordinates are mapped to the plane
through a Cholesky factor of the coroot Gram matrix, so the simple coroots
meet at the conventional angle of the type (120, 135 or 150 degrees).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .chimney import Chimney, sector_halfapartments
from .gallery import Gallery, alcoves
from .roots import RootSystem
from .shadow import ShadowResult
from .weyl import AffineElement, AffineWeylGroup, EndSimplex

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf", "#bcbd22")
SCALE = 40.0


@dataclass
class Scene:
    W: AffineWeylGroup
    window: int = 4
    hyperplane_bound: Optional[int] = None
    chimney: Optional[Chimney] = None
    shadow: Optional[ShadowResult] = None
    galleries: Sequence[Gallery] = ()
    alcove_fills: Sequence[tuple[AffineElement, str]] = ()
    labels: Sequence[tuple[tuple, str]] = field(default=())
    title: str = ""

    def __post_init__(self):
        if self.W.n != 2:
            raise ValueError(f"rendering needs a rank 2 root system, got {self.W.rs.name}")
        if self.window < 1:
            raise ValueError("window must be at least 1")


def _fmt(x: float) -> str:
    s = f"{x:.4f}"
    return "0.0000" if s == "-0.0000" else s


def _gram(rs: RootSystem) -> list[list[float]]:
    """Euclidean Gram matrix of the simple coroots, long roots of squared length 2."""
    C = rs.cartan
    n = rs.rank
    d = [0.0] * n
    d[0] = 1.0
    for _ in range(n):
        for i in range(n):
            for j in range(n):
                if C[i][j] and d[i] and not d[j]:
                    # C[i][j] d_j = C[j][i] d_i
                    d[j] = C[j][i] * d[i] / C[i][j]
    top = max(d)
    d = [2.0 * x / top for x in d]
    return [[2.0 * C[i][j] / d[i] for j in range(n)] for i in range(n)]


class Projector:
    def __init__(self, rs: RootSystem):
        G = _gram(rs)
        a = math.sqrt(G[0][0])
        b = G[0][1] / a
        c = math.sqrt(G[1][1] - b * b)
        # columns: images of the two simple coroots
        self.basis = ((a, b), (0.0, c))
        self.rs = rs

    def point(self, v: Sequence) -> tuple[float, float]:
        (a, b), (_, c) = self.basis
        x = a * float(v[0]) + b * float(v[1])
        y = c * float(v[1])
        return x * SCALE, -y * SCALE

    def normal(self, functional: Sequence[int]) -> tuple[float, float]:
        """Euclidean vector n with n . P(v) = <alpha, v> (in unscaled units)."""
        (a, b), (_, c) = self.basis
        f0, f1 = functional
        n0 = f0 / a
        n1 = (f1 - b * n0) / c
        return n0, n1


def _clip_line(n, k: float, R: float):
    """Segment of {p : n.p = k} inside the square [-R, R]^2, or None."""
    nx, ny = n
    pts = []
    if abs(ny) > 1e-12:
        for x in (-R, R):
            y = (k - nx * x) / ny
            if -R - 1e-9 <= y <= R + 1e-9:
                pts.append((x, y))
    if abs(nx) > 1e-12:
        for y in (-R, R):
            x = (k - ny * y) / nx
            if -R - 1e-9 <= x <= R + 1e-9:
                pts.append((x, y))
    uniq = []
    for p in pts:
        if all(abs(p[0] - q[0]) > 1e-9 or abs(p[1] - q[1]) > 1e-9 for q in uniq):
            uniq.append(p)
    if len(uniq) < 2:
        return None
    uniq.sort()
    return uniq[0], uniq[-1]


def _clip_polygon(poly, n, k: float, side: int):
    """Sutherland-Hodgman: keep side * (n.p - k) >= 0."""

    def val(p):
        return side * (n[0] * p[0] + n[1] * p[1] - k)

    out = []
    for i, p in enumerate(poly):
        q = poly[(i + 1) % len(poly)]
        vp, vq = val(p), val(q)
        if vp >= 0:
            out.append(p)
        if (vp >= 0) != (vq >= 0):
            t = vp / (vp - vq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def _poly_attr(points) -> str:
    return " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)


def _simplex_screen(W: AffineWeylGroup, P: Projector, es: EndSimplex):
    return [P.point(v) for v in W.simplex_vertices(es)]


def _centroid(points):
    return (sum(p[0] for p in points) / len(points), sum(p[1] for p in points) / len(points))


def _panel_midpoint(W: AffineWeylGroup, P: Projector, alcove: AffineElement, letter: int):
    verts = [W.act(alcove, v) for i, v in enumerate(W.face_vertices(())) if i != letter]
    return _centroid([P.point(v) for v in verts])


def gallery_points(W: AffineWeylGroup, P: Projector, g: Gallery):
    """Polyline: start face, alcove barycenters (bouncing off folded panels), end face."""
    from .gallery import end_simplex, start_simplex

    seq = alcoves(W, g)
    pts = [_centroid(_simplex_screen(W, P, start_simplex(W, g)))]
    pts.append(_centroid(_simplex_screen(W, P, EndSimplex(seq[0], frozenset()))))
    for i, s in enumerate(g.spec.word):
        if seq[i + 1] == seq[i]:
            pts.append(_panel_midpoint(W, P, seq[i], s))
        pts.append(_centroid(_simplex_screen(W, P, EndSimplex(seq[i + 1], frozenset()))))
    pts.append(_centroid(_simplex_screen(W, P, end_simplex(W, g))))
    return pts


def render_svg(scene: Scene) -> str:
    W = scene.W
    P = Projector(W.rs)
    rs = W.rs
    norms = [math.hypot(*P.point(c)) / SCALE for c in rs.positive_coroots]
    R = scene.window * max(norms) * SCALE
    bound = scene.hyperplane_bound if scene.hyperplane_bound is not None else scene.window * 3
    size = 2 * R
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(size)}" height="{_fmt(size)}" '
        f'viewBox="{_fmt(-R)} {_fmt(-R)} {_fmt(size)} {_fmt(size)}">',
    ]
    if scene.title:
        out.append(f"<title>{scene.title}</title>")
    out.append('<g id="background">')
    out.append(f'<rect x="{_fmt(-R)}" y="{_fmt(-R)}" width="{_fmt(size)}" height="{_fmt(size)}" fill="#ffffff"/>')
    out.append("</g>")

    out.append('<g id="hyperplanes" stroke-width="0.6">')
    for r, f in enumerate(rs.functionals):
        n = P.normal(f)
        for k in range(-bound, bound + 1):
            # screen y is flipped, so the screen normal is (n0, -n1)
            seg = _clip_line((n[0], -n[1]), k * SCALE, R)
            if seg is None:
                continue
            color = "#000000" if k == 0 else "#b0b0b0"
            (x1, y1), (x2, y2) = seg
            out.append(
                f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" stroke="{color}" '
                f'data-root="{r}" data-level="{k}"/>'
            )
    out.append("</g>")

    out.append('<g id="sector">')
    if scene.chimney is not None:
        poly = [(-R, -R), (R, -R), (R, R), (-R, R)]
        for h in sector_halfapartments(W, scene.chimney):
            n = P.normal(rs.functionals[h.hyperplane.root_index])
            poly = _clip_polygon(poly, (n[0], -n[1]), h.hyperplane.level * SCALE, h.side)
            if not poly:
                break
        if poly:
            out.append(f'<polygon points="{_poly_attr(poly)}" fill="#808080" fill-opacity="0.3" stroke="none"/>')
    for i, (x, color) in enumerate(scene.alcove_fills):
        pts = _simplex_screen(W, P, EndSimplex(x, frozenset()))
        out.append(f'<polygon points="{_poly_attr(pts)}" fill="{color}" fill-opacity="0.6" stroke="none"/>')
    out.append("</g>")

    out.append('<g id="shadow">')
    if scene.shadow is not None:
        mult = scene.shadow.multiplicities or {}
        for es in scene.shadow.sorted():
            pts = _simplex_screen(W, P, es)
            m = mult.get(es, 1)
            if len(pts) >= 3:
                out.append(f'<polygon points="{_poly_attr(pts)}" fill="#ff69b4" fill-opacity="0.5" stroke="#c71585"/>')
            elif len(pts) == 2:
                (x1, y1), (x2, y2) = pts
                out.append(
                    f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" stroke="#c71585" stroke-width="3"/>'
                )
            cx, cy = _centroid(pts)
            if len(pts) == 1:
                out.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="4.0000" fill="#c71585"/>')
            for ring in range(1, m if len(pts) == 1 else m + 1):
                out.append(
                    f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(4.0 + 3.0 * ring)}" fill="none" stroke="#c71585" stroke-width="1"/>'
                )
    out.append("</g>")

    out.append('<g id="galleries" fill="none" stroke-width="1.5">')
    for i, g in enumerate(scene.galleries):
        pts = gallery_points(W, P, g)
        color = PALETTE[i % len(PALETTE)]
        out.append(f'<polyline points="{_poly_attr(pts)}" stroke="{color}"/>')
    out.append("</g>")

    out.append('<g id="labels" font-family="sans-serif" font-size="12">')
    labels = list(scene.labels) or [
        (tuple(int(i == j) for j in range(2)), f"\u03b1{i + 1}\u2228") for i in range(2)
    ]
    for v, text in labels:
        x, y = P.point(v)
        out.append(f'<text x="{_fmt(x + 4)}" y="{_fmt(y - 4)}">{text}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
