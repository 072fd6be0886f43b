"""Shadows of galleries: recursion along walls, and brute-force enumeration."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence, Union

from .chimney import Chimney, deep_alcove, frame, walls_along
from .gallery import CROSS, FOLD, Gallery, GalleryType, make_type
from .roots import Hyperplane
from .weyl import AffineElement, AffineWeylGroup, EndSimplex

DEFAULT_CAP = 14

Target = Union[AffineElement, Chimney]


@dataclass(frozen=True)
class ShadowResult:
    simplices: frozenset
    multiplicities: Optional[dict] = None

    def __post_init__(self):
        if self.multiplicities is not None:
            if set(self.multiplicities) != set(self.simplices):
                raise ValueError("multiplicity keys must match the simplices")
            if any(m < 1 for m in self.multiplicities.values()):
                raise ValueError("multiplicities are positive")

    def sorted(self) -> list[EndSimplex]:
        return sorted(self.simplices, key=EndSimplex.sort_key)

    def points(self) -> set:
        """Translation parts; for vertex shadows these are the coroot lattice points."""
        return {s.rep.translation for s in self.simplices}


@dataclass(frozen=True)
class TraceStep:
    hyperplane: Hyperplane
    added: frozenset


class EnumerationCapExceeded(ValueError):
    pass


def require_reduced(W: AffineWeylGroup, x: AffineElement, sigma, tau) -> None:
    if not W.is_reduced(x, left=sigma, right=tau):
        rep = W.min_coset_rep(x, left=sigma, right=tau)
        raise ValueError(
            f"x is not (W_sigma, W_tau)-reduced; use the representative with word {list(W.reduced_word(rep))}"
        )


def shadow_base(W: AffineWeylGroup, x: AffineElement, sigma=frozenset(), tau=frozenset()) -> ShadowResult:
    """End simplices of the minimal galleries of type x starting in the sigma face."""
    require_reduced(W, x, sigma, tau)
    return ShadowResult(
        frozenset(W.end_simplex(W.compose(W.finite(w), x), tau) for w in W.parabolic(sigma))
    )


def shadow_step(W: AffineWeylGroup, s: ShadowResult, H: Hyperplane, far_side: int) -> ShadowResult:
    """S union r_H(S meet the closed half-apartment on far_side); simplices on H count as near."""
    added = {W.reflect_simplex(H, e) for e in s.simplices if W.simplex_side(H, e) == far_side}
    return ShadowResult(s.simplices | added)


def recursion_radius(W: AffineWeylGroup, x: AffineElement, sigma) -> int:
    return max(W.length(W.compose(W.finite(w), x)) for w in W.parabolic(sigma))


@lru_cache(maxsize=4096)
def _deep_walls(W: AffineWeylGroup, c: Chimney, radius: int) -> tuple[Hyperplane, ...]:
    return tuple(deep_alcove(W, c, radius)[1])


@lru_cache(maxsize=4096)
def _alcove_walls(W: AffineWeylGroup, y: AffineElement) -> tuple[Hyperplane, ...]:
    return tuple(walls_along(W, y))


def target_walls(W: AffineWeylGroup, target: Target, radius: int) -> tuple[Hyperplane, ...]:
    if isinstance(target, Chimney):
        return _deep_walls(W, target, radius)
    return _alcove_walls(W, target)


def shadow(
    W: AffineWeylGroup,
    x: AffineElement,
    sigma=frozenset(),
    tau=frozenset(),
    target: Target | None = None,
    trace: list | None = None,
) -> ShadowResult:
    """Sh_target(x tau, sigma) by the wall-by-wall recursion.

    For an alcove target y the walls come from the canonical reduced word of y;
    for a chimney they come from a deep alcove of that chimney.  Walls with
    |level| above the gallery radius + 1 cannot touch the shadow and are skipped.
    """
    sigma, tau = frozenset(sigma), frozenset(tau)
    if target is None:
        target = W.identity
    radius = recursion_radius(W, x, sigma)
    result = shadow_base(W, x, sigma, tau)
    for H in target_walls(W, target, radius):
        if abs(H.level) > radius + 1:
            continue
        far = -W.alcove_side(W.identity, H)
        nxt = shadow_step(W, result, H, far)
        if trace is not None:
            trace.append(TraceStep(H, nxt.simplices - result.simplices))
        result = nxt
    return result


# -- enumeration ---------------------------------------------------------------


def pf_walks(W: AffineWeylGroup, fr, first: AffineElement, word) -> Iterator[tuple]:
    """Positively folded move masks from ``first``: (moves, end alcove, pos crossings, folds)."""
    l = len(word)
    moves: list[str] = []

    def go(i: int, cur: AffineElement, pos: int, folds: int):
        if i == l:
            yield tuple(moves), cur, pos, folds
            return
        s = word[i]
        sign = fr.orientation(cur, s)
        moves.append(CROSS)
        yield from go(i + 1, W.right_mult(cur, s), pos + (sign < 0), folds)
        moves.pop()
        if sign > 0:
            moves.append(FOLD)
            yield from go(i + 1, cur, pos, folds + 1)
            moves.pop()

    yield from go(0, first, 0, 0)


def _target_chimney(W: AffineWeylGroup, target: Target) -> Chimney:
    if isinstance(target, Chimney):
        return target
    return Chimney(W.spherical, target)


def enumerate_pf_galleries(
    W: AffineWeylGroup,
    spec: GalleryType,
    chimney: Target,
    end_filter: EndSimplex | None = None,
) -> list[Gallery]:
    """All positively folded galleries of the given type starting in the start face."""
    fr = frame(W, _target_chimney(W, chimney))
    out = []
    for w in W.parabolic(spec.start):
        for moves, end, _, _ in pf_walks(W, fr, W.finite(w), spec.word):
            if end_filter is None or W.end_simplex(end, spec.end) == end_filter:
                out.append(Gallery(spec, W.finite(w), moves))
    return out


def shadow_oracle(
    W: AffineWeylGroup,
    x: AffineElement,
    sigma=frozenset(),
    tau=frozenset(),
    target: Target | None = None,
    cap: int = DEFAULT_CAP,
    word: Sequence[int] | None = None,
) -> ShadowResult:
    """End-simplex multiset of all positively folded galleries of type x from sigma.

    ``word`` selects a reduced word of x as the gallery type (default: canonical).
    """
    sigma, tau = frozenset(sigma), frozenset(tau)
    require_reduced(W, x, sigma, tau)
    longest = recursion_radius(W, x, sigma)
    if longest > cap:
        raise EnumerationCapExceeded(
            f"enumeration needs galleries up to length {longest}, above the cap {cap}; raise --cap"
        )
    fr = frame(W, _target_chimney(W, W.identity if target is None else target))
    if word is None:
        word = W.reduced_word(x)
    else:
        word = W.check_word(word)
        if len(word) != W.length(x) or W.from_word(word) != x:
            raise ValueError(f"{list(word)} is not a reduced word of x")
    counts: Counter = Counter()
    for w in W.parabolic(sigma):
        for _, end, _, _ in pf_walks(W, fr, W.finite(w), word):
            counts[W.end_simplex(end, tau)] += 1
    return ShadowResult(frozenset(counts), dict(counts))


def vertex_shadow(W: AffineWeylGroup, lam, target: Target | None = None, oracle: bool = False, cap: int = DEFAULT_CAP):
    """Shadow of the coroot lattice point lam (made dominant) as a vertex-to-vertex gallery."""
    lam = W.dominant(lam)
    x = W.x_lambda(lam)
    if oracle:
        return shadow_oracle(W, x, W.spherical, W.spherical, target, cap)
    return shadow(W, x, W.spherical, W.spherical, target)


def gallery_type_of(W: AffineWeylGroup, x: AffineElement, sigma: Iterable[int], tau: Iterable[int]) -> GalleryType:
    return make_type(W, sigma, W.reduced_word(x), tau)
