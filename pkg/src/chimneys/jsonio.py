"""JSON encodings of elements, simplices, galleries, chimneys, shadows and counts."""

from __future__ import annotations

from typing import Any

from .chimney import Chimney
from .counting import QPolynomial
from .gallery import Gallery, GalleryType
from .shadow import ShadowResult
from .weyl import AffineElement, AffineWeylGroup, EndSimplex


def element_to_json(W: AffineWeylGroup, x: AffineElement) -> dict:
    return {"translation": list(x.translation), "finite_word": list(W.finite_word(x.finite))}


def element_from_json(W: AffineWeylGroup, d: dict) -> AffineElement:
    t = tuple(int(a) for a in d["translation"])
    if len(t) != W.n:
        raise ValueError(f"translation must have {W.n} entries")
    u = W.identity
    for i in d["finite_word"]:
        if not 1 <= int(i) <= W.n:
            raise ValueError(f"finite_word letters are 1..{W.n}")
        u = W.compose(u, W.generators[int(i)])
    return AffineElement(t, u.finite)


def simplex_to_json(W: AffineWeylGroup, s: EndSimplex) -> dict:
    out = {"alcove": element_to_json(W, s.rep), "face": sorted(s.face_type)}
    if s.face_type == W.spherical:
        out["vertex"] = list(s.rep.translation)
    return out


def simplex_from_json(W: AffineWeylGroup, d: dict) -> EndSimplex:
    return W.end_simplex(element_from_json(W, d["alcove"]), d["face"])


def gallery_to_json(W: AffineWeylGroup, g: Gallery) -> dict:
    return {
        "start_face": sorted(g.spec.start),
        "first_alcove": element_to_json(W, g.first_alcove),
        "steps": [{"letter": s, "move": m} for s, m in zip(g.spec.word, g.moves)],
        "end_face": sorted(g.spec.end),
    }


def gallery_from_json(W: AffineWeylGroup, d: dict) -> Gallery:
    spec = GalleryType(
        frozenset(d["start_face"]), W.check_word(s["letter"] for s in d["steps"]), frozenset(d["end_face"])
    )
    return Gallery(spec, element_from_json(W, d["first_alcove"]), tuple(s["move"] for s in d["steps"]))


def chimney_to_json(W: AffineWeylGroup, c: Chimney) -> dict:
    return {"J": sorted(c.J), "y": element_to_json(W, c.y)}


def chimney_from_json(W: AffineWeylGroup, d: dict) -> Chimney:
    return Chimney.make(W, d["J"], element_from_json(W, d["y"]))


def shadow_to_json(
    W: AffineWeylGroup, result: ShadowResult, chimney: Chimney, x: AffineElement, sigma, tau
) -> dict:
    entries = []
    for s in result.sorted():
        e: dict[str, Any] = {"simplex": simplex_to_json(W, s)}
        if result.multiplicities is not None:
            e["multiplicity"] = result.multiplicities[s]
        entries.append(e)
    return {
        "type": W.rs.name,
        "J": sorted(chimney.J),
        "y": element_to_json(W, chimney.y),
        "x": element_to_json(W, x),
        "sigma": sorted(sigma),
        "tau": sorted(tau),
        "shadow": entries,
    }


def shadow_from_json(W: AffineWeylGroup, d: dict) -> ShadowResult:
    simplices = [simplex_from_json(W, e["simplex"]) for e in d["shadow"]]
    mult = None
    if d["shadow"] and all("multiplicity" in e for e in d["shadow"]):
        mult = {s: int(e["multiplicity"]) for s, e in zip(simplices, d["shadow"])}
    return ShadowResult(frozenset(simplices), mult)


def count_to_json(p: QPolynomial) -> dict:
    return {"count": list(p.coeffs), "human": p.human()}


def count_from_json(d: dict) -> QPolynomial:
    return QPolynomial(tuple(d["count"]))
