"""Exhaustive cross-checks over small elements and chimneys."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .chimney import Chimney
from .counting import QPolynomial, parahoric_counts, walk_polynomials
from .shadow import shadow, shadow_oracle
from .weyl import AffineWeylGroup


@dataclass
class SweepConfig:
    max_x_len: int = 6
    max_y_len: int = 3
    faces: str = "both"  # "alcove", "vertex" or "both"


@dataclass
class SweepReport:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.cases > 0 and not self.failures

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.cases} cases, {len(self.failures)} failures"


def all_subsets(n: int) -> list[frozenset]:
    return [frozenset(c) for k in range(n + 1) for c in combinations(range(1, n + 1), k)]


def chimneys(W: AffineWeylGroup, max_y_len: int) -> list[Chimney]:
    ys = W.elements_up_to_length(max_y_len)
    return [Chimney(J, y) for J in all_subsets(W.n) for y in ys]


def face_types(W: AffineWeylGroup, which: str) -> list[frozenset]:
    return {"alcove": [frozenset()], "vertex": [W.spherical], "both": [frozenset(), W.spherical]}[which]


def sum_rule(W: AffineWeylGroup, cfg: SweepConfig) -> SweepReport:
    """Sum over z of count_iwahori(x, z) equals q^l(x)."""
    rep = SweepReport(f"{W.rs.name} sum rule")
    xs = W.elements_up_to_length(cfg.max_x_len)
    for c in chimneys(W, cfg.max_y_len):
        for x in xs:
            total = QPolynomial()
            for p in walk_polynomials(W, W.reduced_word(x), c).values():
                total = total + p
            rep.cases += 1
            if total != QPolynomial.monomial(W.length(x)):
                rep.failures.append(f"x={W.reduced_word(x)} J={sorted(c.J)} y={W.reduced_word(c.y)}: {total}")
    return rep


def recursion_vs_oracle(W: AffineWeylGroup, cfg: SweepConfig) -> tuple[SweepReport, SweepReport]:
    """Recursion against enumeration, and nonemptiness against nonzero counts."""
    eq = SweepReport(f"{W.rs.name} recursion = oracle")
    ne = SweepReport(f"{W.rs.name} nonempty <=> count != 0")
    xs = W.elements_up_to_length(cfg.max_x_len)
    window = W.elements_up_to_length(cfg.max_x_len + 1)
    faces = face_types(W, cfg.faces)
    for c in chimneys(W, cfg.max_y_len):
        for sigma in faces:
            for tau in faces:
                for x in xs:
                    if not W.is_reduced(x, sigma, tau):
                        continue
                    tag = f"x={W.reduced_word(x)} sigma={sorted(sigma)} tau={sorted(tau)} J={sorted(c.J)} y={W.reduced_word(c.y)}"
                    rec = shadow(W, x, sigma, tau, c).simplices
                    orc = shadow_oracle(W, x, sigma, tau, c).simplices
                    eq.cases += 1
                    if rec != orc:
                        eq.failures.append(tag)
                    counts = parahoric_counts(W, sigma, tau, x, c)
                    faces_seen = {W.end_simplex(z, tau) for z in window} | set(counts) | rec
                    ne.cases += 1
                    if any((f in rec) != bool(counts.get(f)) for f in faces_seen):
                        ne.failures.append(tag)
    return eq, ne


def run_all(W: AffineWeylGroup, cfg: SweepConfig) -> list[SweepReport]:
    eq, ne = recursion_vs_oracle(W, cfg)
    return [eq, ne, sum_rule(W, cfg)]
