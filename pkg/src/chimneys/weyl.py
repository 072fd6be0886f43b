"""Affine Weyl groups W_aff = R^vee x| W_0 acting on one apartment.

Elements are pairs ``(translation, finite)`` where ``finite`` indexes the
precomputed table of the spherical Weyl group.  All the per-type data lives
on an :class:`AffineWeylGroup`, obtained with :func:`weyl_group`.

Alcove coordinates: the alcove ``x.a`` lies in the slab
``k_i < <alpha_i, v> < k_i + 1`` for every positive root ``alpha_i``; with
``x = t^mu u`` one has ``k_i = <alpha_i, mu> - [u^{-1} alpha_i < 0]``.
Everything about sides, separation and length is read off these integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import lcm
from operator import mul
from typing import Iterable, Sequence

from .roots import Hyperplane, RootSystem, Vector, build_root_system, coweight_coords

Word = tuple[int, ...]
FaceType = frozenset  # subset T of {1..n}; T = {1..n} is the origin, T = {} the base alcove


@dataclass(frozen=True, order=True)
class AffineElement:
    """x = t^translation * finite, acting by v -> finite(v) + translation."""

    translation: Vector
    finite: int


@dataclass(frozen=True)
class HalfApartment:
    """{v : side * (<alpha, v> - k) >= 0} for the hyperplane H_{alpha,k}."""

    hyperplane: Hyperplane
    side: int


@dataclass(frozen=True)
class EndSimplex:
    """The face of type ``face_type`` of the alcove ``rep.a``.

    ``rep`` is always the minimal-length element of ``rep * W_face_type``.
    """

    rep: AffineElement
    face_type: frozenset

    def sort_key(self):
        return (tuple(sorted(self.face_type)), self.rep)


def _matmul(A, B):
    n = len(A)
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def _matvec(A, v):
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


class AffineWeylGroup:
    """Tables and operations for the affine Weyl group of one root system."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        n = self.n = rs.rank
        self.identity_matrix = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        self.zero: Vector = (0,) * n
        self._simplex_cache: dict = {}
        self._functional_index = {}
        for i, f in enumerate(rs.functionals):
            self._functional_index[f] = (i, 1)
            self._functional_index[tuple(-c for c in f)] = (i, -1)
        self._build_finite_group()
        self.letters = tuple(range(n + 1))
        self.descent_order = tuple(range(1, n + 1)) + (0,)
        self.spherical = frozenset(range(1, n + 1))
        self.generators = {s: self._generator(s) for s in self.letters}
        self.identity = AffineElement(self.zero, 0)
        self.base_walls = {0: Hyperplane(rs.highest_root_index, 1)}
        self.base_walls.update({i: Hyperplane(i - 1, 0) for i in range(1, n + 1)})
        self._vertices = self._alcove_vertices()
        self.barycenter = tuple(sum(v[i] for v in self._vertices) / (n + 1) for i in range(n))
        self._denominator = lcm(
            *(self.pair(j, v).denominator for v in self._vertices for j in range(len(rs.functionals)))
        )

    # -- finite Weyl group -------------------------------------------------

    def _reflection_matrix(self, f: Vector, coroot: Vector):
        n = self.n
        return tuple(tuple(int(i == j) - coroot[i] * f[j] for j in range(n)) for i in range(n))

    def _build_finite_group(self) -> None:
        rs, n = self.rs, self.n
        simple = [self._reflection_matrix(rs.functionals[i], rs.positive_coroots[i]) for i in range(n)]
        mats = [self.identity_matrix]
        index = {self.identity_matrix: 0}
        frontier = [self.identity_matrix]
        while frontier:
            nxt = []
            for m in frontier:
                for s in simple:
                    p = _matmul(m, s)
                    if p not in index:
                        index[p] = len(mats)
                        mats.append(p)
                        nxt.append(p)
            frontier = nxt
        self.matrices = mats
        self.matrix_index = index
        size = len(mats)
        self.finite_mult = [[index[_matmul(a, b)] for b in mats] for a in mats]
        self.finite_inverse = [row.index(0) for row in self.finite_mult]
        self.simple_index = [index[s] for s in simple]
        self.reflection_index = [
            index[self._reflection_matrix(f, c)] for f, c in zip(rs.functionals, rs.positive_coroots)
        ]
        # root_image[w][i] = (j, e) with w(alpha_i) = e * alpha_j
        self.root_image = []
        for w in range(size):
            winv = mats[self.finite_inverse[w]]
            row = []
            for f in rs.functionals:
                g = tuple(sum(f[k] * winv[k][j] for k in range(n)) for j in range(n))
                row.append(self._functional_index[g])
            self.root_image.append(tuple(row))
        self.longest = max(range(size), key=lambda w: sum(e < 0 for _, e in self.root_image[w]))

    @property
    def finite_order(self) -> int:
        return len(self.matrices)

    def finite_length(self, w: int) -> int:
        return sum(e < 0 for _, e in self.root_image[w])

    def finite_word(self, w: int) -> Word:
        """Lexicographically least reduced word of a spherical element."""
        word = []
        while w != 0:
            for i in range(1, self.n + 1):
                winv = self.finite_inverse[w]
                if self.root_image[winv][i - 1][1] < 0:  # left descent: w^{-1} alpha_i < 0
                    word.append(i)
                    w = self.finite_mult[self.simple_index[i - 1]][w]
                    break
        return tuple(word)

    def parabolic(self, T: Iterable[int]) -> list[int]:
        """Elements of the standard parabolic W_T, T a subset of {1..n}."""
        gens = [self.simple_index[i - 1] for i in T]
        seen = [0]
        found = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for w in frontier:
                for g in gens:
                    p = self.finite_mult[w][g]
                    if p not in found:
                        found.add(p)
                        seen.append(p)
                        nxt.append(p)
            frontier = nxt
        return sorted(seen, key=lambda w: (self.finite_length(w), self.finite_word(w)))

    # -- elements ----------------------------------------------------------

    def apply_finite(self, w: int, v: Sequence) -> tuple:
        return _matvec(self.matrices[w], v)

    def translation(self, lam: Sequence[int]) -> AffineElement:
        return AffineElement(tuple(lam), 0)

    def finite(self, w: int) -> AffineElement:
        return AffineElement(self.zero, w)

    def reflection(self, H: Hyperplane) -> AffineElement:
        """s_{alpha,k} = t^{k alpha^vee} s_alpha."""
        cor = self.rs.positive_coroots[H.root_index]
        return AffineElement(tuple(H.level * c for c in cor), self.reflection_index[H.root_index])

    def _generator(self, s: int) -> AffineElement:
        if s == 0:
            return self.reflection(Hyperplane(self.rs.highest_root_index, 1))
        return AffineElement(self.zero, self.simple_index[s - 1])

    def compose(self, a: AffineElement, b: AffineElement) -> AffineElement:
        ub = _matvec(self.matrices[a.finite], b.translation)
        return AffineElement(
            tuple(x + y for x, y in zip(a.translation, ub)), self.finite_mult[a.finite][b.finite]
        )

    def invert(self, a: AffineElement) -> AffineElement:
        uinv = self.finite_inverse[a.finite]
        t = _matvec(self.matrices[uinv], a.translation)
        return AffineElement(tuple(-x for x in t), uinv)

    def mul(self, *elements: AffineElement) -> AffineElement:
        out = self.identity
        for e in elements:
            out = self.compose(out, e)
        return out

    def right_mult(self, x: AffineElement, s: int) -> AffineElement:
        return self.compose(x, self.generators[s])

    def check_word(self, word: Iterable[int]) -> Word:
        word = tuple(word)
        for s in word:
            if s not in self.generators:
                raise ValueError(f"bad letter s_{s} for rank {self.n}; letters are 0..{self.n}")
        return word

    def from_word(self, word: Iterable[int]) -> AffineElement:
        x = self.identity
        for s in self.check_word(word):
            x = self.compose(x, self.generators[s])
        return x

    def act(self, x: AffineElement, v: Sequence) -> tuple:
        return tuple(a + b for a, b in zip(_matvec(self.matrices[x.finite], v), x.translation))

    # -- geometry ----------------------------------------------------------

    def pair(self, root_index: int, v: Sequence):
        return sum(map(mul, self.rs.functionals[root_index], v))

    def alcove_coords(self, x: AffineElement) -> tuple[int, ...]:
        uinv = self.finite_inverse[x.finite]
        img = self.root_image[uinv]
        return tuple(
            self.pair(i, x.translation) - (1 if img[i][1] < 0 else 0) for i in range(len(img))
        )

    def length(self, x: AffineElement) -> int:
        """Number of walls separating the base alcove from x.a."""
        return sum(k if k >= 0 else -k for k in self.alcove_coords(x))

    def alcove_side(self, x: AffineElement, H: Hyperplane) -> int:
        """Sign of <alpha, x.b> - k at the barycenter b; never zero.

        Uses the integer alcove coordinate floor(<alpha, x.b>), valid for
        every positive root alpha, so no rational arithmetic is needed.
        """
        r = H.root_index
        flip = self.root_image[self.finite_inverse[x.finite]][r][1] < 0
        k = self.pair(r, x.translation) - flip
        return 1 if k >= H.level else -1

    def separates(self, H: Hyperplane, x: AffineElement, z: AffineElement) -> bool:
        return self.alcove_side(x, H) != self.alcove_side(z, H)

    def act_on_hyperplane(self, x: AffineElement, H: Hyperplane) -> Hyperplane:
        """t^mu u . H_{alpha,k} = H_{u alpha, k + <u alpha, mu>}, renormalized."""
        j, e = self.root_image[x.finite][H.root_index]
        level = H.level + e * self.pair(j, x.translation)
        return Hyperplane(j, e * level)

    def act_on_halfapartment(self, x: AffineElement, h: HalfApartment) -> HalfApartment:
        H = h.hyperplane
        j, e = self.root_image[x.finite][H.root_index]
        level = H.level + e * self.pair(j, x.translation)
        return HalfApartment(Hyperplane(j, e * level), e * h.side)

    def halfapartment_containing(self, x: AffineElement, H: Hyperplane) -> HalfApartment:
        return HalfApartment(H, self.alcove_side(x, H))

    def wall(self, y: AffineElement, s: int) -> Hyperplane:
        """y.H_s: the wall separating y.a and ys.a."""
        return self.act_on_hyperplane(y, self.base_walls[s])

    def reflect(self, H: Hyperplane, x: AffineElement) -> AffineElement:
        """r_H applied to the alcove x.a."""
        return self.compose(self.reflection(H), x)

    def point_side(self, H: Hyperplane, v: Sequence) -> int:
        value = self.pair(H.root_index, v) - H.level
        return (value > 0) - (value < 0)

    # -- length, reduced words, cosets --------------------------------------

    def is_left_descent(self, s: int, x: AffineElement) -> bool:
        """l(s x) < l(x): the wall H_s separates a from x.a."""
        H = self.base_walls[s]
        return self.alcove_side(x, H) != self.alcove_side(self.identity, H)

    def is_right_descent(self, x: AffineElement, s: int) -> bool:
        """l(x s) < l(x): the wall x.H_s separates a from x.a."""
        return self.alcove_side(self.identity, self.wall(x, s)) != self.alcove_side(x, self.wall(x, s))

    def reduced_word(self, x: AffineElement) -> Word:
        """Canonical reduced word.

        Peel off right descents, always taking the least one in the letter
        order s_1 < ... < s_n < s_0.  In A2, s_{alpha,1} reads (2, 0, 2).
        """
        word = []
        while x != self.identity:
            for s in self.descent_order:
                if self.is_right_descent(x, s):
                    word.append(s)
                    x = self.compose(x, self.generators[s])
                    break
            else:  # pragma: no cover - defect
                raise AssertionError("non-identity element without a descent")
        return tuple(reversed(word))

    def reduced_words(self, x: AffineElement) -> list[Word]:
        """Every reduced word of x, sorted."""
        memo: dict = {self.identity: [()]}

        def go(z: AffineElement) -> list[Word]:
            if z not in memo:
                memo[z] = [
                    w + (s,)
                    for s in self.letters
                    if self.is_right_descent(z, s)
                    for w in go(self.right_mult(z, s))
                ]
            return memo[z]

        return sorted(go(x))

    def length_and_reduced_word(self, x: AffineElement) -> tuple[int, Word]:
        word = self.reduced_word(x)
        return len(word), word

    def min_coset_rep(self, x: AffineElement, left: Iterable[int] = (), right: Iterable[int] = ()) -> AffineElement:
        """Minimal element of W_left x W_right (left, right subsets of {1..n})."""
        left, right = tuple(sorted(left)), tuple(sorted(right))
        changed = True
        while changed:
            changed = False
            for s in left:
                if self.is_left_descent(s, x):
                    x = self.compose(self.generators[s], x)
                    changed = True
            for s in right:
                if self.is_right_descent(x, s):
                    x = self.compose(x, self.generators[s])
                    changed = True
        return x

    def is_reduced(self, x: AffineElement, left: Iterable[int] = (), right: Iterable[int] = ()) -> bool:
        return not any(self.is_left_descent(s, x) for s in left) and not any(
            self.is_right_descent(x, s) for s in right
        )

    def elements_up_to_length(self, L: int) -> list[AffineElement]:
        """All elements of length <= L, sorted by (length, reduced word)."""
        seen = {self.identity: ()}
        frontier = [self.identity]
        for _ in range(L):
            nxt = []
            for x in frontier:
                for s in self.letters:
                    if not self.is_right_descent(x, s):
                        y = self.right_mult(x, s)
                        if y not in seen:
                            seen[y] = None
                            nxt.append(y)
            frontier = nxt
        return sorted(seen, key=lambda x: (self.length(x), self.reduced_word(x)))

    # -- faces, vertices, simplices ----------------------------------------

    def _alcove_vertices(self) -> list[tuple[Fraction, ...]]:
        """Vertices of the base alcove: v_0 = 0 and v_i = omega_i^vee / c_i."""
        omegas = coweight_coords(self.rs)
        top = self.rs.highest_root
        verts = [tuple(Fraction(0) for _ in range(self.n))]
        for i in range(self.n):
            verts.append(tuple(c / top[i] for c in omegas[i]))
        return verts

    def face_vertices(self, T: Iterable[int]) -> list[tuple[Fraction, ...]]:
        """Vertices of the face of the base alcove fixed by the generators in T."""
        T = set(T)
        return [self._vertices[0]] + [self._vertices[i] for i in range(1, self.n + 1) if i not in T]

    def end_simplex(self, x: AffineElement, T: Iterable[int]) -> EndSimplex:
        T = frozenset(T)
        key = (x, T)
        got = self._simplex_cache.get(key)
        if got is None:
            if len(self._simplex_cache) > 1_000_000:
                self._simplex_cache.clear()
            got = self._simplex_cache[key] = EndSimplex(self.min_coset_rep(x, right=T), T)
        return got

    def simplex_vertices(self, es: EndSimplex) -> list[tuple[Fraction, ...]]:
        return [self.act(es.rep, v) for v in self.face_vertices(es.face_type)]

    def simplex_barycenter(self, es: EndSimplex) -> tuple[Fraction, ...]:
        verts = self.simplex_vertices(es)
        return tuple(sum(v[i] for v in verts) / len(verts) for i in range(self.n))

    def simplex_point(self, es: EndSimplex) -> Vector:
        """The coroot lattice point of a vertex simplex (face type = all of S_0)."""
        if es.face_type != self.spherical:
            raise ValueError("simplex is not a vertex of type v_0")
        return es.rep.translation

    def vertex_simplex(self, lam: Sequence[int]) -> EndSimplex:
        return self.end_simplex(self.translation(lam), self.spherical)

    def _scaled_face_pairings(self, T: frozenset):
        """D * <alpha_j, v> for each vertex v of the T-face and each positive root j."""
        cache = self.__dict__.setdefault("_face_cache", {})
        got = cache.get(T)
        if got is None:
            got = cache[T] = tuple(
                tuple(int(self.pair(j, v) * self._denominator) for j in range(len(self.rs.functionals)))
                for v in self.face_vertices(T)
            )
        return got

    def _simplex_values(self, H: Hyperplane, es: EndSimplex) -> list[int]:
        """D * (<alpha, p> - k) for each vertex p of the simplex."""
        x = es.rep
        r = H.root_index
        j, e = self.root_image[self.finite_inverse[x.finite]][r]
        base = self._denominator * (self.pair(r, x.translation) - H.level)
        return [base + e * row[j] for row in self._scaled_face_pairings(es.face_type)]

    def simplex_side(self, H: Hyperplane, es: EndSimplex) -> int:
        """+1/-1 if the simplex lies strictly on one side of H, 0 if inside H.

        Decided at the barycenter of the simplex.
        """
        if not es.face_type:
            return self.alcove_side(es.rep, H)
        total = sum(self._simplex_values(H, es))
        return (total > 0) - (total < 0)

    def simplex_in_wall(self, H: Hyperplane, es: EndSimplex) -> bool:
        return not any(self._simplex_values(H, es))

    def reflect_simplex(self, H: Hyperplane, es: EndSimplex) -> EndSimplex:
        return self.end_simplex(self.reflect(H, es.rep), es.face_type)

    # -- orbits and polytopes ------------------------------------------------

    def x_lambda(self, lam: Sequence[int]) -> AffineElement:
        """Minimal-length element of t^lambda W_0."""
        return self.min_coset_rep(self.translation(lam), right=self.spherical)

    def dominant(self, lam: Sequence[int]) -> Vector:
        return next(v for v in sorted(self.orbit(lam)) if self.is_dominant(v))

    def is_dominant(self, lam: Sequence[int]) -> bool:
        return all(self.pair(i, lam) >= 0 for i in range(self.n))

    def star_alcoves(self, mu: Sequence[int]) -> set[AffineElement]:
        return {AffineElement(tuple(mu), w) for w in range(self.finite_order)}

    def orbit(self, lam: Sequence[int]) -> set[Vector]:
        return {tuple(self.apply_finite(w, lam)) for w in range(self.finite_order)}

    def polytope_points(self, lam: Sequence[int]) -> set[Vector]:
        """R^vee intersected with the convex hull of W_0 . lambda."""
        orb = self.orbit(lam)
        nroots = len(self.rs.functionals)
        bounds = [max(self.pair(i, v) for v in orb) for i in range(nroots)]
        lows = [min(self.pair(i, v) for v in orb) for i in range(nroots)]
        # box in coroot coordinates from the simple-coroot coefficients of the orbit
        box = [range(min(v[i] for v in orb), max(v[i] for v in orb) + 1) for i in range(self.n)]
        return {
            v
            for v in product(*box)
            if all(lows[i] <= self.pair(i, v) <= bounds[i] for i in range(nroots))
        }


@lru_cache(maxsize=None)
def weyl_group(rs: RootSystem | str) -> AffineWeylGroup:
    if isinstance(rs, str):
        rs = build_root_system(rs)
    return AffineWeylGroup(rs)
