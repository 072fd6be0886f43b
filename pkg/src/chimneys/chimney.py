"""(J, y)-chimneys, the orientations they induce, and deep alcoves.

A chimney is kept intensionally as the pair (J, y): membership of a
half-apartment is a predicate, evaluated after transporting by y^{-1}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable

from .roots import Hyperplane, Vector, coweight_coords
from .weyl import AffineElement, AffineWeylGroup, HalfApartment


@dataclass(frozen=True)
class Chimney:
    """The (J, y)-chimney; J is a subset of {1..n}, y an affine Weyl element."""

    J: frozenset
    y: AffineElement

    @classmethod
    def make(cls, W: AffineWeylGroup, J: Iterable[int], y: AffineElement | None = None) -> "Chimney":
        J = frozenset(J)
        bad = [j for j in J if not 1 <= j <= W.n]
        if bad:
            raise ValueError(f"J must be a subset of 1..{W.n}, got {sorted(J)}")
        return cls(J, W.identity if y is None else y)

    def is_alcove_chimney(self, W: AffineWeylGroup) -> bool:
        return len(self.J) == W.n


@dataclass
class ChimneyFrame:
    """Per-(group, chimney) cache of everything orientation queries need."""

    W: AffineWeylGroup
    chimney: Chimney
    y_inv: AffineElement = field(init=False)
    in_phi_J: tuple[bool, ...] = field(init=False)
    _memo: dict = field(init=False, default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self.y_inv = self.W.invert(self.chimney.y)
        self.in_phi_J = phi_J_mask(self.W, self.chimney.J)

    def contains_local(self, h: HalfApartment) -> bool:
        """Membership in the untwisted J-chimney."""
        H = h.hyperplane
        if self.in_phi_J[H.root_index]:
            return H.level <= 0 if h.side > 0 else H.level >= 1
        return h.side < 0

    def contains(self, h: HalfApartment) -> bool:
        return self.contains_local(self.W.act_on_halfapartment(self.y_inv, h))

    def orientation(self, alcove: AffineElement, letter: int) -> int:
        """phi(alcove, panel of the given type): +1 iff the half-apartment of the
        panel's wall containing the alcove is not in the chimney."""
        key = (alcove, letter)
        sign = self._memo.get(key)
        if sign is None:
            W = self.W
            local = W.compose(self.y_inv, alcove)
            H = W.wall(local, letter)
            h = HalfApartment(H, W.alcove_side(local, H))
            sign = -1 if self.contains_local(h) else 1
            self._memo[key] = sign
        return sign

    def hyperplane_side(self, H: Hyperplane):
        """Return the classifier alcove -> sign for panels lying in H.

        Orientation is constant on each side of a wall, so it only depends on
        which side of H the alcove sits.
        """
        W = self.W
        plus = -1 if self.contains(HalfApartment(H, 1)) else 1

        def side(alcove: AffineElement) -> int:
            return plus if W.alcove_side(alcove, H) > 0 else -plus

        return side


_FRAMES: dict = {}


def frame(W: AffineWeylGroup, chimney: Chimney) -> ChimneyFrame:
    key = (W.rs, chimney)
    fr = _FRAMES.get(key)
    if fr is None:
        if len(_FRAMES) > 4096:
            _FRAMES.clear()
        fr = _FRAMES[key] = ChimneyFrame(W, chimney)
    return fr


def phi_J_mask(W: AffineWeylGroup, J: Iterable[int]) -> tuple[bool, ...]:
    """For each positive root, whether it lies in the parabolic subsystem Phi_J."""
    J = set(J)
    return tuple(
        all(c == 0 or (i + 1) in J for i, c in enumerate(root)) for root in W.rs.positive_roots
    )


def halfapartment_in_chimney(W: AffineWeylGroup, c: Chimney, h: HalfApartment) -> bool:
    return frame(W, c).contains(h)


def orientation_sign(W: AffineWeylGroup, c: Chimney, alcove: AffineElement, letter: int) -> int:
    return frame(W, c).orientation(alcove, letter)


def hyperplane_side(W: AffineWeylGroup, c: Chimney, H: Hyperplane):
    return frame(W, c).hyperplane_side(H)


def sector_halfapartments(W: AffineWeylGroup, c: Chimney) -> list[HalfApartment]:
    """Half-apartments whose intersection is the sector S_{J,y}(0)."""
    mask = phi_J_mask(W, c.J)
    out = []
    for r, inside in enumerate(mask):
        if inside:
            local = [HalfApartment(Hyperplane(r, 0), 1), HalfApartment(Hyperplane(r, 1), -1)]
        else:
            local = [HalfApartment(Hyperplane(r, 0), -1)]
        out.extend(W.act_on_halfapartment(c.y, h) for h in local)
    return out


def deepening_direction(W: AffineWeylGroup, J: Iterable[int]) -> Vector:
    """nu in the coroot lattice with <alpha_j, nu> = 0 on J and < 0 off J.

    nu is the least positive multiple of -sum of the fundamental coweights
    outside J that lies in the coroot lattice.
    """
    J = set(J)
    omegas = coweight_coords(W.rs)
    nu = [Fraction(0)] * W.n
    for i in range(W.n):
        if i + 1 not in J:
            nu = [a - b for a, b in zip(nu, omegas[i])]
    scale = lcm(*(x.denominator for x in nu))
    return tuple(int(x * scale) for x in nu)


def transport_bound(W: AffineWeylGroup, y: AffineElement) -> int:
    """max |<gamma, translation of y^{-1}>| over positive roots gamma."""
    t = W.invert(y).translation
    return max(abs(W.pair(i, t)) for i in range(len(W.rs.functionals)))


def deep_alcove(W: AffineWeylGroup, c: Chimney, radius: int) -> tuple[AffineElement, list[Hyperplane]]:
    """An alcove y t^{N nu} deep inside a (J, y)-sector, and the walls crossed on the way.

    ``radius`` bounds the length of the galleries the result will serve.  N is
    the least integer for which the alcove chimney of y_deep and the (J, y)
    chimney orient every wall that such galleries can meet in the same way:
    after transporting by y^{-1} those walls have |level| <= R with
    R = radius + 1 + transport_bound(y), and each root off Phi_J then needs
    N * |<beta, nu>| >= R + 1.
    """
    if radius < 0:
        raise ValueError("radius must be non-negative")
    if c.is_alcove_chimney(W):
        return c.y, walls_along(W, c.y)
    nu = deepening_direction(W, c.J)
    mask = phi_J_mask(W, c.J)
    step = min(-W.pair(i, nu) for i, inside in enumerate(mask) if not inside)
    R = radius + 1 + transport_bound(W, c.y)
    N = max(1, -(-(R + 1) // step))
    y_deep = W.compose(c.y, W.translation(tuple(N * v for v in nu)))
    return y_deep, walls_along(W, y_deep)


def walls_along(W: AffineWeylGroup, x: AffineElement) -> list[Hyperplane]:
    """Walls crossed, in order, by the minimal gallery of canonical type from a to x.a."""
    walls = []
    cur = W.identity
    for s in W.reduced_word(x):
        walls.append(W.wall(cur, s))
        cur = W.right_mult(cur, s)
    return walls
