"""Irreducible crystallographic root systems in exact integer arithmetic.

Roots are stored over the simple-root basis, coroots and points of the
apartment over the simple-coroot basis.  The pairing between them goes
through the Cartan matrix ``cartan[i][j] = <alpha_i, alpha_j^vee>``, so no
Euclidean embedding is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Hyperplane:
    """The wall H_{alpha,k} = {v : <alpha, v> = k} with alpha a positive root."""

    root_index: int
    level: int


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    cartan: tuple[Vector, ...]
    positive_roots: tuple[Vector, ...]
    positive_coroots: tuple[Vector, ...]
    highest_root_index: int
    # functional of each positive root on coroot coordinates: row a^T C
    functionals: tuple[Vector, ...] = field(repr=False, compare=False)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def highest_root(self) -> Vector:
        return self.positive_roots[self.highest_root_index]

    def __str__(self) -> str:
        return self.name


def _cartan_matrix(family: str, n: int) -> list[list[int]]:
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, ij: int = -1, ji: int = -1) -> None:
        C[i][j] = ij
        C[j][i] = ji

    if family == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif family == "B" or (family == "C" and n == 2):
        # alpha_n short; for rank 2 both names use alpha_1 long, alpha_2 short
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -2, -1)
    elif family == "C":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -1, -2)
    elif family == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif family == "G":
        # alpha_1 short, alpha_2 long
        link(0, 1, -1, -3)
    elif family == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    else:  # pragma: no cover - guarded by SUPPORTED
        raise ValueError(family)
    return C


SUPPORTED = {
    "A": range(1, 7),
    "B": range(2, 5),
    "C": range(2, 5),
    "D": range(4, 6),
    "G": range(2, 3),
    "F": range(4, 5),
}


def parse_type(name: str) -> tuple[str, int]:
    """Split a type string such as ``"A2"`` into ``("A", 2)``."""
    name = name.strip()
    if len(name) < 2 or not name[1:].isdigit():
        raise ValueError(f"malformed root system type {name!r}; expected e.g. 'A2', 'C2', 'G2'")
    return name[0].upper(), int(name[1:])


def pair_root_coroot(cartan: Sequence[Sequence[int]], root: Sequence, point: Sequence):
    """<root, point> for root in simple-root coordinates, point in coroot coordinates."""
    n = len(cartan)
    if len(root) != n or len(point) != n:
        raise ValueError(f"dimension mismatch: rank {n}, got {len(root)} and {len(point)}")
    return sum(root[i] * cartan[i][j] * point[j] for i in range(n) for j in range(n) if root[i] and point[j])


def _reflect_root(C, a: Vector, j: int) -> Vector:
    c = sum(a[i] * C[i][j] for i in range(len(a)))
    return tuple(a[i] - (c if i == j else 0) for i in range(len(a)))


def _reflect_coroot(C, v: Vector, j: int) -> Vector:
    c = sum(C[j][m] * v[m] for m in range(len(v)))
    return tuple(v[i] - (c if i == j else 0) for i in range(len(v)))


def _closure(C) -> dict[Vector, Vector]:
    """Positive roots by root strings, each paired with its coroot.

    A positive root gamma extends to gamma + alpha_j exactly when the
    alpha_j-string through gamma continues upward: with p the number of
    downward steps, q = p - <gamma, alpha_j^vee> must be positive.
    """
    n = len(C)
    unit = [tuple(int(i == j) for i in range(n)) for j in range(n)]
    roots = set(unit)
    layer = list(unit)
    while layer:
        nxt = []
        for g in layer:
            for j in range(n):
                p = 0
                down = tuple(g[i] - unit[j][i] for i in range(n))
                while down in roots:
                    p += 1
                    down = tuple(down[i] - unit[j][i] for i in range(n))
                pairing = sum(g[i] * C[i][j] for i in range(n))
                if p - pairing > 0:
                    up = tuple(g[i] + unit[j][i] for i in range(n))
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    # coroots: transport simple coroots along reflection chains
    coroots: dict[Vector, Vector] = {unit[j]: unit[j] for j in range(n)}
    frontier = list(unit)
    while frontier:
        nxt = []
        for g in frontier:
            for j in range(n):
                h = _reflect_root(C, g, j)
                if h in roots and h not in coroots:
                    coroots[h] = _reflect_coroot(C, coroots[g], j)
                    nxt.append(h)
        frontier = nxt
    if len(coroots) != len(roots):  # pragma: no cover - defect
        raise AssertionError("coroot transport did not reach every positive root")
    return coroots


def _sort_key(root: Vector):
    return (sum(root), tuple(-c for c in root))


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int | None = None) -> RootSystem:
    """Build the irreducible root system of the given type.

    ``build_root_system("A", 2)`` and ``build_root_system("A2")`` are equivalent.
    """
    if rank is None:
        family, rank = parse_type(family)
    family = family.upper()
    if family not in SUPPORTED or rank not in SUPPORTED[family]:
        supported = ", ".join(f"{f}{r}" for f, rs in SUPPORTED.items() for r in rs)
        raise ValueError(f"unsupported root system {family}{rank}; supported: {supported}")
    C = _cartan_matrix(family, rank)
    coroot_of = _closure(C)
    roots = sorted(coroot_of, key=_sort_key)
    coroots = [coroot_of[r] for r in roots]
    top = max(range(len(roots)), key=lambda i: sum(roots[i]))
    functionals = tuple(
        tuple(sum(r[i] * C[i][j] for i in range(rank)) for j in range(rank)) for r in roots
    )
    return RootSystem(
        family=family,
        rank=rank,
        cartan=tuple(tuple(row) for row in C),
        positive_roots=tuple(roots),
        positive_coroots=tuple(coroots),
        highest_root_index=top,
        functionals=functionals,
    )


def pairing(rs: RootSystem, root: Sequence[int], point: Sequence):
    """Exact <root, point>; integer for lattice points, Fraction for rational ones."""
    return pair_root_coroot(rs.cartan, root, point)


def affine_reflect(rs: RootSystem, hyperplane: Hyperplane, point: Sequence):
    """Apply s_{alpha,k}: v -> v - (<alpha,v> - k) alpha^vee."""
    if len(point) != rs.rank:
        raise ValueError(f"dimension mismatch: rank {rs.rank}, got point of length {len(point)}")
    i = hyperplane.root_index
    c = sum(f * v for f, v in zip(rs.functionals[i], point)) - hyperplane.level
    cor = rs.positive_coroots[i]
    return tuple(v - c * a for v, a in zip(point, cor))


def coweight_coords(rs: RootSystem) -> list[tuple[Fraction, ...]]:
    """Fundamental coweights omega_i^vee in simple-coroot coordinates."""
    n = rs.rank
    # solve C w = e_i by Gauss-Jordan over Q
    M = [[Fraction(rs.cartan[r][c]) for c in range(n)] + [Fraction(int(r == k)) for k in range(n)] for r in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [x / p for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    inv = [row[n:] for row in M]
    return [tuple(inv[r][i] for r in range(n)) for i in range(n)]
