"""Local type of the centralizer of exp(u).

For u in the cell with support I_u the semisimple part of the centralizer
has Dynkin diagram obtained by deleting I_u from the diagram (beta*(u) < 1)
or from the extended diagram (beta*(u) = 1); the rest is a torus.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

from .errors import EmptyInput
from .root_data import AFFINE, DiagramComponent, LieType, RootVector, classify_diagram, root_system
from .weyl_cell import Branch, CellPoint, integral_roots


@dataclass(frozen=True)
class LocalType:
    type: LieType
    branch: Branch
    components: Tuple[DiagramComponent, ...]
    radical_rank: int
    base_vertices: Tuple[int, ...]

    @property
    def semisimple_rank(self) -> int:
        return sum(c.type.rank for c in self.components)

    @property
    def name(self) -> str:
        parts = [str(c.group) for c in self.components]
        if self.radical_rank == 1:
            parts.append("S^1")
        elif self.radical_rank > 1:
            parts.append(f"T^{self.radical_rank}")
        return "×".join(parts) if parts else "{e}"


@lru_cache(maxsize=None)
def classify_base(t: LieType, base: Tuple[int, ...]) -> Tuple[DiagramComponent, ...]:
    """Components of the subdiagram of the extended diagram on `base`."""
    rs = root_system(t)
    rows = [rs.vertex_row(v) for v in base]
    sub = [[rs.cartan_ext[i][j] for j in rows] for i in rows]
    n = t.rank
    comps = classify_diagram(sub, base, vertex_key=lambda v: n + 1 if v == AFFINE else v)

    # The component holding the affine vertex is placed where -beta attaches.
    def place(c: DiagramComponent) -> int:
        return min(rs.attachment if v == AFFINE else v for v in c.vertices)

    return tuple(sorted(comps, key=place))


def base_vertices(u: CellPoint) -> Tuple[int, ...]:
    if u.branch is Branch.CENTRAL:
        return tuple(range(1, u.type.rank + 1))
    if u.branch is Branch.WALL:
        return u.cosupport + (AFFINE,)
    return u.cosupport


def local_type(u: CellPoint) -> LocalType:
    base = base_vertices(u)
    comps = classify_base(u.type, base)
    return LocalType(
        type=u.type,
        branch=u.branch,
        components=comps,
        radical_rank=u.type.rank - sum(c.type.rank for c in comps),
        base_vertices=base,
    )


def psi_u(u: CellPoint) -> Tuple[RootVector, ...]:
    """Positive roots a with a*(u) an integer."""
    return integral_roots(u.type, u.coords)


@dataclass(frozen=True)
class FGPoint:
    index: int
    denominator: int
    point: CellPoint

    @property
    def label(self) -> str:
        return f"ω{self.index}/{self.denominator}"


def fg_set(t: LieType) -> Tuple[FGPoint, ...]:
    """The points u_i = w_i/p_i whose centralizers include all maximal rank maximal subgroups.

    X_i = (beta,beta)/(m_i (a_i,a_i)) w_i satisfies beta*(X_i) = 1; u_i is
    X_i/2 when a_i has the length of beta and m_i = 1, and X_i otherwise.
    """
    rs = root_system(t)
    nb = rs.norm2(rs.beta)
    out = []
    for i in range(t.rank):
        m = rs.beta[i]
        c = nb / (m * rs.lengths[i])
        if rs.lengths[i] == nb and m == 1:
            c /= 2
        assert c.numerator == 1
        lam = [Fraction(0)] * t.rank
        lam[i] = c
        out.append(FGPoint(i + 1, c.denominator, CellPoint(t, tuple(lam))))
    return tuple(out)


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def is_maximal(fg: FGPoint) -> bool:
    return is_prime(fg.denominator)


@dataclass(frozen=True)
class SetBase:
    type: LieType
    vertices: Tuple[int, ...]
    all_walls: bool
    mixed: bool
    components: Tuple[DiagramComponent, ...]
    radical_rank: int


def base_of_set(us: Sequence[CellPoint]) -> SetBase:
    """Base of the root system of the centralizer of {exp(u) : u in us}.

    Central points centralize everything and do not constrain the base.
    """
    if not us:
        raise EmptyInput("need at least one point")
    t = us[0].type
    live = [u for u in us if u.branch is not Branch.CENTRAL]
    kept = set(range(1, t.rank + 1))
    for u in live:
        kept &= set(u.cosupport)
    walls = [u.branch is Branch.WALL for u in live]
    all_walls = bool(live) and all(walls)
    vertices = tuple(sorted(kept)) + ((AFFINE,) if all_walls else ())
    comps = classify_base(t, vertices)
    return SetBase(
        type=t,
        vertices=vertices,
        all_walls=all_walls,
        mixed=any(walls) and not all(walls),
        components=comps,
        radical_rank=t.rank - sum(c.type.rank for c in comps),
    )
