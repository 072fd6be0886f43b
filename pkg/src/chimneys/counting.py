"""Point counts of double-coset intersections via labeled folded alcove walks.

A positively folded walk contributes q^(negative-to-positive crossings) *
(q - 1)^(folds); positive-to-negative crossings carry the single label 0.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .chimney import Chimney, frame
from .gallery import CROSS, Gallery
from .shadow import pf_walks, require_reduced, shadow
from .weyl import AffineElement, AffineWeylGroup, EndSimplex


@dataclass(frozen=True)
class QPolynomial:
    """Integer polynomial in q; coeffs[i] is the coefficient of q^i."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(a) for a in c))

    @classmethod
    def monomial(cls, a: int, b: int = 0) -> "QPolynomial":
        """q^a * (q - 1)^b."""
        p = cls((0,) * a + (1,))
        for _ in range(b):
            p = p * cls((-1, 1))
        return p

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return QPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPolynomial(tuple(out))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def evaluate(self, q: int) -> int:
        return sum(c * q**i for i, c in enumerate(self.coeffs))

    def factored(self) -> str | None:
        """'q^a*(q-1)^b' when the polynomial is exactly such a product with a, b >= 1."""
        if not self.coeffs:
            return None
        a = next(i for i, c in enumerate(self.coeffs) if c)
        b = len(self.coeffs) - 1 - a
        if a < 1 or b < 1 or self != QPolynomial.monomial(a, b):
            return None
        qa = "q" if a == 1 else f"q^{a}"
        qb = "(q-1)" if b == 1 else f"(q-1)^{b}"
        return f"{qa}*{qb}"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += sign + body
        return out

    def human(self) -> str:
        return self.factored() or str(self)


ZERO = QPolynomial()
ONE = QPolynomial((1,))


@dataclass(frozen=True)
class WalkStats:
    pos_crossings: int
    neg_crossings: int
    folds: int

    @property
    def length(self) -> int:
        return self.pos_crossings + self.neg_crossings + self.folds


def walk_stats(W: AffineWeylGroup, g: Gallery, c: Chimney) -> WalkStats:
    fr = frame(W, c)
    cur = g.first_alcove
    pos = neg = folds = 0
    for s, m in zip(g.spec.word, g.moves):
        sign = fr.orientation(cur, s)
        if m == CROSS:
            if sign < 0:
                pos += 1
            else:
                neg += 1
            cur = W.right_mult(cur, s)
        else:
            if sign < 0:
                raise ValueError("gallery is not positively folded for this chimney")
            folds += 1
    return WalkStats(pos, neg, folds)


def walk_monomial(stats: WalkStats) -> QPolynomial:
    return QPolynomial.monomial(stats.pos_crossings, stats.folds)


@lru_cache(maxsize=8192)
def _monomial(a: int, b: int) -> QPolynomial:
    return QPolynomial.monomial(a, b)


def walk_polynomials(
    W: AffineWeylGroup, word: Sequence[int], c: Chimney, first: AffineElement | None = None
) -> dict[AffineElement, QPolynomial]:
    """End alcove -> sum of labeled-walk monomials over positively folded walks of the type."""
    fr = frame(W, c)
    tally: dict = defaultdict(lambda: defaultdict(int))
    for _, end, pos, folds in pf_walks(W, fr, W.identity if first is None else first, tuple(word)):
        tally[end][(pos, folds)] += 1
    out = {}
    for end, monos in tally.items():
        total = ZERO
        for (a, b), mult in monos.items():
            total = total + QPolynomial((mult,)) * _monomial(a, b)
        out[end] = total
    return out


def count_iwahori(W: AffineWeylGroup, x: AffineElement, z: AffineElement, c: Chimney) -> QPolynomial:
    """|I x I  meet  (I_P)^y z I| as a polynomial in q."""
    return walk_polynomials(W, W.reduced_word(x), c).get(z, ZERO)


def parahoric_counts(
    W: AffineWeylGroup, sigma: Iterable[int], tau: Iterable[int], x: AffineElement, c: Chimney
) -> dict[EndSimplex, QPolynomial]:
    """Face z tau -> |K(sigma) x K(tau)  meet  (I_P)^y z K(tau)|, for every face with a nonzero count.

    Walks have type (word of w)(word of x) for w in W_sigma and may end at any
    alcove containing the face z tau, i.e. anywhere in the coset z W_tau.
    """
    sigma, tau = frozenset(sigma), frozenset(tau)
    require_reduced(W, x, sigma, tau)
    xword = W.reduced_word(x)
    out: dict = {}
    for w in W.parabolic(sigma):
        for end, poly in walk_polynomials(W, W.finite_word(w) + xword, c).items():
            key = W.end_simplex(end, tau)
            out[key] = out.get(key, ZERO) + poly
    return out


def count_parahoric(
    W: AffineWeylGroup, sigma: Iterable[int], tau: Iterable[int], x: AffineElement, z: AffineElement, c: Chimney
) -> QPolynomial:
    """|K(sigma) x K(tau)  meet  (I_P)^y z K(tau)| as a polynomial in q."""
    return parahoric_counts(W, sigma, tau, x, c).get(W.end_simplex(z, frozenset(tau)), ZERO)


def count_grassmannian(W: AffineWeylGroup, lam: Sequence[int], mu: Sequence[int], c: Chimney) -> QPolynomial:
    """|K t^lam K  meet  (I_P)^y t^mu K| for dominant lam."""
    lam = tuple(lam)
    if not W.is_dominant(lam):
        raise ValueError(f"lambda {list(lam)} is not dominant; its dominant representative is {list(W.dominant(lam))}")
    return count_parahoric(W, W.spherical, W.spherical, W.x_lambda(lam), W.translation(mu), c)


def nonempty(W: AffineWeylGroup, sigma, tau, x: AffineElement, z: AffineElement, c: Chimney) -> bool:
    sigma, tau = frozenset(sigma), frozenset(tau)
    return W.end_simplex(z, tau) in shadow(W, x, sigma, tau, c).simplices
