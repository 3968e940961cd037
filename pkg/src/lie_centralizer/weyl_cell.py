"""The fundamental Weyl cell and coroot evaluation.

Points u are given by coefficients lambda_i over the fundamental weights.
The cell is {lambda_i >= 0, beta*(u) <= 1} with beta the highest short root.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence, Tuple

from .errors import NotInCell, ShapeMismatch, ZeroRoot
from .lattice import Vector, denominator_lcm, vec_mat
from .root_data import LieType, RootVector, root_system


class Branch(str, Enum):
    INTERIOR = "interior"
    WALL = "wall"
    CENTRAL = "central"


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    if not s:
        raise ValueError("empty coordinate")
    return Fraction(s)


def parse_vector(text: str) -> Tuple[Fraction, ...]:
    """Parse comma-separated rationals such as "0,1/4,0,0"."""
    return tuple(parse_rational(x) for x in text.split(","))


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@lru_cache(maxsize=None)
def _coroot_table(t: LieType) -> Tuple[Tuple[RootVector, Tuple[int, ...], int], ...]:
    """Integer data (k, w, N) with a*(u) = sum_i lambda_i w_i / N for each positive root.

    w_i = s k_i (a_i,a_i) and N = s (a,a), with s clearing the denominators
    of the squared lengths.
    """
    rs = root_system(t)
    s = denominator_lcm(rs.lengths)
    out = []
    for k in rs.pos_roots:
        w = tuple(int(k[i] * rs.lengths[i] * s) for i in range(t.rank))
        out.append((k, w, int(rs.norm2(k) * s)))
    return tuple(out)


def _scaled(lam: Sequence) -> Tuple[Tuple[int, ...], int]:
    """Integers a and D with lambda = a / D."""
    fr = [Fraction(x) for x in lam]
    d = denominator_lcm(fr)
    return tuple(int(x * d) for x in fr), d


def coroot_value(t: LieType, lam: Sequence, k: Sequence[int]) -> Fraction:
    """a*(u) = sum_i lambda_i k_i (a_i,a_i)/(a,a) for the root a = sum k_i a_i."""
    if len(lam) != t.rank or len(k) != t.rank:
        raise ShapeMismatch(f"expected vectors of length {t.rank}")
    if not any(k):
        raise ZeroRoot("the zero vector has no coroot")
    rs = root_system(t)
    n2 = rs.norm2(k)
    return sum((Fraction(lam[i]) * k[i] * rs.lengths[i] for i in range(t.rank) if k[i]), Fraction(0)) / n2


def coroot_values(t: LieType, lam: Sequence) -> Tuple[Tuple[RootVector, Fraction], ...]:
    """a*(u) for every positive root a, in the order of positive_roots."""
    a, d = _scaled(lam)
    return tuple((k, Fraction(sum(x * y for x, y in zip(a, w)), d * n)) for k, w, n in _coroot_table(t))


def integral_roots(t: LieType, lam: Sequence) -> Tuple[RootVector, ...]:
    """The positive roots a with a*(u) an integer."""
    a, d = _scaled(lam)
    return tuple(k for k, w, n in _coroot_table(t) if sum(x * y for x, y in zip(a, w)) % (d * n) == 0)


def convert_to_root_basis(t: LieType, lam: Sequence) -> Vector:
    return vec_mat([Fraction(x) for x in lam], root_system(t).cartan_inv)


def convert_to_weight_basis(t: LieType, c: Sequence) -> Vector:
    return tuple(Fraction(x) for x in vec_mat(list(c), root_system(t).cartan))


@dataclass(frozen=True)
class CellPoint:
    type: LieType
    coords: Tuple[Fraction, ...]

    @cached_property
    def support(self) -> Tuple[int, ...]:
        """I_u: the indices i with lambda_i > 0."""
        return tuple(i + 1 for i, x in enumerate(self.coords) if x > 0)

    @cached_property
    def cosupport(self) -> Tuple[int, ...]:
        """The complement of the support in 1..n."""
        return tuple(i + 1 for i, x in enumerate(self.coords) if x == 0)

    @cached_property
    def beta_value(self) -> Fraction:
        return coroot_value(self.type, self.coords, root_system(self.type).beta)

    @cached_property
    def is_central(self) -> bool:
        return len(integral_roots(self.type, self.coords)) == len(root_system(self.type).pos_roots)

    @cached_property
    def branch(self) -> Branch:
        if self.is_central:
            return Branch.CENTRAL
        return Branch.WALL if self.beta_value == 1 else Branch.INTERIOR

    @property
    def root_coords(self) -> Vector:
        return convert_to_root_basis(self.type, self.coords)


def cell_membership(t: LieType, lam: Iterable) -> CellPoint:
    coords = tuple(Fraction(x) for x in lam)
    if len(coords) != t.rank:
        raise ShapeMismatch(f"{t} needs {t.rank} coordinates, got {len(coords)}")
    for i, x in enumerate(coords):
        if x < 0:
            raise NotInCell(f"lambda_{i + 1} = {format_rational(x)} is negative")
    point = CellPoint(t, coords)
    if point.beta_value > 1:
        raise NotInCell(f"beta*(u) = {format_rational(point.beta_value)} exceeds 1")
    return point


def sample_cell_point(t: LieType, rng: random.Random, wall: bool, max_den: int = 12) -> CellPoint:
    """A random nonzero point of the cell, on the wall or strictly inside it."""
    n = t.rank
    support = [i for i in range(n) if rng.random() < 0.5] or [rng.randrange(n)]
    lam = [Fraction(0)] * n
    for i in support:
        lam[i] = Fraction(rng.randint(1, max_den), rng.randint(1, max_den))
    b = coroot_value(t, lam, root_system(t).beta)
    if wall:
        s = 1 / b
    else:
        q = rng.randint(1, max_den)
        s = Fraction(rng.randint(1, q), q + 1) / b
    return cell_membership(t, [x * s for x in lam])
