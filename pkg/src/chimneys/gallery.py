"""Combinatorial galleries stored as (first alcove, move mask).

The alcove sequence c_0, ..., c_l is derived: at the i-th letter s the
gallery either crosses the type-s wall of c_{i-1} (c_i = c_{i-1} s) or
folds there (c_i = c_{i-1}).  Panel p_i lies in wall(c_{i-1}, s).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .chimney import Chimney, frame
from .roots import Hyperplane
from .weyl import AffineElement, AffineWeylGroup, EndSimplex, Word

CROSS = "cross"
FOLD = "fold"

# an interval [j, k] of gallery indices; k is None for [j, infinity)
Interval = tuple[int, Optional[int]]


@dataclass(frozen=True)
class GalleryType:
    start: frozenset
    word: Word
    end: frozenset


@dataclass(frozen=True)
class Gallery:
    spec: GalleryType
    first_alcove: AffineElement
    moves: tuple[str, ...]

    def __post_init__(self):
        if len(self.moves) != len(self.spec.word):
            raise ValueError("one move per letter is required")
        bad = [m for m in self.moves if m not in (CROSS, FOLD)]
        if bad:
            raise ValueError(f"unknown move {bad[0]!r}")

    @property
    def length(self) -> int:
        return len(self.moves)

    @property
    def folds(self) -> tuple[int, ...]:
        """1-based indices i with c_{i-1} = c_i."""
        return tuple(i + 1 for i, m in enumerate(self.moves) if m == FOLD)


@dataclass(frozen=True)
class OutcropSpec:
    hyperplane: Hyperplane
    intervals: tuple[Interval, ...] = field(default=())

    def __bool__(self) -> bool:
        return bool(self.intervals)


def make_type(W: AffineWeylGroup, start: Iterable[int], word: Iterable[int], end: Iterable[int]) -> GalleryType:
    start, end = frozenset(start), frozenset(end)
    for T in (start, end):
        if not T <= W.spherical:
            raise ValueError(f"face types are subsets of 1..{W.n}, got {sorted(T)}")
    return GalleryType(start, W.check_word(word), end)


def minimal_gallery(W: AffineWeylGroup, x: AffineElement, sigma=frozenset(), tau=frozenset()) -> Gallery:
    """The fold-free gallery of canonical type from the sigma-face of a to x tau."""
    x = W.min_coset_rep(x, left=sigma, right=tau)
    spec = make_type(W, sigma, W.reduced_word(x), tau)
    return Gallery(spec, W.identity, (CROSS,) * len(spec.word))


def alcoves(W: AffineWeylGroup, g: Gallery) -> list[AffineElement]:
    cur = g.first_alcove
    out = [cur]
    for s, m in zip(g.spec.word, g.moves):
        if m == CROSS:
            cur = W.right_mult(cur, s)
        out.append(cur)
    return out


def alcoves_and_panels(W: AffineWeylGroup, g: Gallery) -> tuple[list[AffineElement], list[Hyperplane]]:
    """Alcoves c_0..c_l and the walls of the panels p_1..p_l."""
    seq = alcoves(W, g)
    panels = [W.wall(seq[i], s) for i, s in enumerate(g.spec.word)]
    return seq, panels


def end_simplex(W: AffineWeylGroup, g: Gallery) -> EndSimplex:
    return W.end_simplex(alcoves(W, g)[-1], g.spec.end)


def start_simplex(W: AffineWeylGroup, g: Gallery) -> EndSimplex:
    return W.end_simplex(g.first_alcove, g.spec.start)


def is_valid(W: AffineWeylGroup, g: Gallery) -> bool:
    """The first alcove must contain the start face, i.e. lie in W_sigma a."""
    return W.end_simplex(g.first_alcove, g.spec.start) == W.end_simplex(W.identity, g.spec.start)


def _far(W: AffineWeylGroup, H: Hyperplane, near: int, c: AffineElement) -> bool:
    return W.alcove_side(c, H) != near


def _panel_in(W: AffineWeylGroup, g: Gallery, seq, H: Hyperplane, i: int) -> bool:
    """p_i is contained in H, for 0 <= i <= l + 1."""
    l = g.length
    if i == 0:
        return W.simplex_in_wall(H, W.end_simplex(seq[0], g.spec.start))
    if i == l + 1:
        return W.simplex_in_wall(H, W.end_simplex(seq[l], g.spec.end))
    return W.wall(seq[i - 1], g.spec.word[i - 1]) == H


def find_outcrops(W: AffineWeylGroup, g: Gallery, H: Hyperplane):
    """(maximal outcrop, near-maximal outcrop or None, maximal ingrowth) for H.

    Maximal runs of consecutive alcoves off the closed half H^id are exactly
    the maximal protrusions; runs inside H^id bounded by panels in H (and
    not starting at p_0) are the indentations.
    """
    seq = alcoves(W, g)
    l = g.length
    near = W.alcove_side(W.identity, H)
    far = [_far(W, H, near, c) for c in seq]

    runs: list[tuple[bool, int, int]] = []  # (is_far, first index, one past last)
    start = 0
    for i in range(1, l + 2):
        if i == l + 1 or far[i] != far[start]:
            runs.append((far[start], start, i))
            start = i

    outcrop: list[Interval] = []
    ingrowth: list[Interval] = []
    for is_far, a, b in runs:
        end = None if b == l + 1 else b
        if is_far:
            outcrop.append((a, end))
        else:
            j = a
            if a == 0:
                j = next((i for i in range(1, b) if _panel_in(W, g, seq, H, i)), None)
            if j is not None and j >= 1:
                ingrowth.append((j, end))

    maximal = OutcropSpec(H, tuple(outcrop))
    near_maximal = None
    final = W.end_simplex(seq[l], g.spec.end)
    if W.simplex_side(H, final) not in (0, near):
        last_in_H = max(i for i in range(0, l + 1) if _panel_in(W, g, seq, H, i))
        a = outcrop[-1][0]
        trimmed = list(outcrop[:-1])
        if a < last_in_H:
            trimmed.append((a, last_in_H))
        near_maximal = OutcropSpec(H, tuple(trimmed))
    return maximal, near_maximal, OutcropSpec(H, tuple(ingrowth))


def _check_intervals(W, g, seq, L: OutcropSpec, want_far: bool) -> None:
    H = L.hyperplane
    near = W.alcove_side(W.identity, H)
    l = g.length
    kind = "protrusion" if want_far else "indentation"
    for j, k in L.intervals:
        stop = l + 1 if k is None else k
        ok = 0 <= j < stop <= l + 1 and _panel_in(W, g, seq, H, j)
        ok = ok and (k is None or _panel_in(W, g, seq, H, k))
        ok = ok and all(_far(W, H, near, seq[i]) == want_far for i in range(j, stop))
        if not want_far:
            ok = ok and j >= 1
        if not ok:
            raise ValueError(f"interval {[j, k]} is not an H-{kind} of the gallery")


def _reflect_runs(W: AffineWeylGroup, g: Gallery, L: OutcropSpec, want_far: bool) -> Gallery:
    seq = alcoves(W, g)
    _check_intervals(W, g, seq, L, want_far)
    l = g.length
    r = W.reflection(L.hyperplane)
    new = list(seq)
    for j, k in L.intervals:
        for i in range(j, l + 1 if k is None else k):
            new[i] = W.compose(r, seq[i])
    moves = []
    for i, s in enumerate(g.spec.word):
        if new[i + 1] == new[i]:
            moves.append(FOLD)
        elif new[i + 1] == W.right_mult(new[i], s):
            moves.append(CROSS)
        else:  # pragma: no cover - defect
            raise AssertionError("reflected sequence is not a gallery of the same type")
    return Gallery(g.spec, new[0], tuple(moves))


def apply_e(W: AffineWeylGroup, g: Gallery, L: OutcropSpec) -> Gallery:
    """Fold the subgalleries indexed by an H-outcrop onto H^id."""
    return _reflect_runs(W, g, L, want_far=True)


def apply_f(W: AffineWeylGroup, g: Gallery, L: OutcropSpec) -> Gallery:
    """Unfold the subgalleries indexed by an H-ingrowth across H."""
    return _reflect_runs(W, g, L, want_far=False)


def is_positively_folded(W: AffineWeylGroup, g: Gallery, chimney: Chimney) -> bool:
    fr = frame(W, chimney)
    cur = g.first_alcove
    for s, m in zip(g.spec.word, g.moves):
        if m == FOLD:
            if fr.orientation(cur, s) < 0:
                return False
        else:
            cur = W.right_mult(cur, s)
    return True
