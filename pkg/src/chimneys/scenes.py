"""The two reference rank-2 scenes used for golden SVG files."""

from __future__ import annotations

from .chimney import Chimney
from .gallery import minimal_gallery
from .render import PALETTE, Scene
from .shadow import enumerate_pf_galleries, gallery_type_of, shadow, shadow_oracle
from .weyl import weyl_group

# Alcove x of the A2 alcove-shadow scene: its shadow needs beta-walls of
# levels 0..-3 and (alpha+beta)-walls of levels 0..-2.
ALCOVE_SCENE_WORD = (2, 1, 0, 1, 2, 1, 0, 2)
X_COLOR = "#ff69b4"


def vertex_scene() -> Scene:
    """A2, J = {1}, lambda = 2a + 2b: every positively folded gallery with multiplicities."""
    W = weyl_group("A2")
    c = Chimney.make(W, {1})
    x = W.x_lambda((2, 2))
    S = W.spherical
    result = shadow_oracle(W, x, S, S, c)
    galleries = enumerate_pf_galleries(W, gallery_type_of(W, x, S, S), c)
    return Scene(W, window=3, chimney=c, shadow=result, galleries=galleries, title="A2 vertex shadow, J={1}")


def alcove_scene() -> Scene:
    """A2, J = {1}: shadow of an alcove, colored by the wall that first produced each alcove."""
    W = weyl_group("A2")
    c = Chimney.make(W, {1})
    x = W.from_word(ALCOVE_SCENE_WORD)
    trace: list = []
    shadow(W, x, frozenset(), frozenset(), c, trace=trace)
    fills = [(x, X_COLOR)]
    step = 0
    for t in trace:
        if not t.added:
            continue
        color = PALETTE[step % len(PALETTE)]
        step += 1
        fills.extend((es.rep, color) for es in sorted(t.added, key=lambda e: e.sort_key()))
    return Scene(
        W,
        window=4,
        chimney=c,
        galleries=[minimal_gallery(W, x)],
        alcove_fills=fills,
        title="A2 alcove shadow, J={1}",
    )
