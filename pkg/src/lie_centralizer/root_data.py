"""Root data of the simple types.

Conventions: simple roots are numbered as in the standard Dynkin diagrams
(Bourbaki numbering for E), Cartan integers are
A[i][j] = 2(a_i, a_j)/(a_j, a_j), and the type labels follow the dual
convention in which B_n is the type of Sp(n) and C_n the type of
Spin(2n+1).  Squared root lengths are 2 for simply laced types; for B_n
the long roots have 2 and the short root 1, for C_n the short roots 2 and
the long root 4, for F4 (2, 2, 1, 1) and for G2 (2, 6).

Ambient diagram vertices are 1..n for the simple roots and 0 for the
affine root -beta of the extended diagram.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

from .errors import UnclassifiableDiagram
from .lattice import IntMatrix, Matrix, denominator_lcm, determinant, inverse, smith_diagonal

FAMILIES = "ABCDEFG"
AFFINE = 0

RootVector = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        f, n = self.family, self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 3,
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }.get(f)
        if not ok:
            raise ValueError(f"no simple type {f}{n}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"

    @classmethod
    def parse(cls, text: str) -> "LieType":
        """Parse a type label ("F4", "B3") or a group name ("Sp(3)", "SU(4)")."""
        s = text.strip().replace(" ", "")
        m = re.fullmatch(r"([A-Ga-g])_?(\d+)", s)
        if m:
            return cls(m.group(1).upper(), int(m.group(2)))
        m = re.fullmatch(r"(SU|Sp|Spin)\((\d+)\)", s, flags=re.IGNORECASE)
        if not m:
            raise ValueError(f"cannot parse group or type {text!r}")
        name, k = m.group(1).lower(), int(m.group(2))
        if name == "su" and k >= 2:
            return cls("A", k - 1)
        if name == "sp" and k >= 1:
            return cls("A", 1) if k == 1 else cls("B", k)
        if name == "spin":
            # Low rank coincidences: Spin(3)=SU(2), Spin(5)=Sp(2), Spin(6)=SU(4).
            low = {3: cls("A", 1), 5: cls("B", 2), 6: cls("A", 3)}
            if k in low:
                return low[k]
            if k >= 7 and k % 2:
                return cls("C", (k - 1) // 2)
            if k >= 8 and k % 2 == 0:
                return cls("D", k // 2)
        raise ValueError(f"{text!r} is not a simple 1-connected group")


@dataclass(frozen=True)
class GroupId:
    name: str
    param: Optional[int] = None

    def __str__(self) -> str:
        return self.name if self.param is None else f"{self.name}({self.param})"


def group_of_type(t: LieType) -> GroupId:
    n = t.rank
    if t.family == "A":
        return GroupId("SU", n + 1)
    if t.family == "B":
        return GroupId("Sp", n)
    if t.family == "C":
        return GroupId("Spin", 2 * n + 1)
    if t.family == "D":
        return GroupId("Spin", 2 * n)
    return GroupId(str(t))


def _bonds(t: LieType) -> List[Tuple[int, int]]:
    n = t.rank
    if t.family == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    if t.family == "E":
        chain = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)]
        return [(i, j) for i, j in chain if j <= n] + [(2, 4)]
    return [(i, i + 1) for i in range(1, n)]


def _lengths(t: LieType) -> Tuple[Fraction, ...]:
    n = t.rank
    if t.family == "B":
        raw = [2] * (n - 1) + [1]
    elif t.family == "C":
        raw = [2] * (n - 1) + [4]
    elif t.family == "F":
        raw = [2, 2, 1, 1]
    elif t.family == "G":
        raw = [2, 6]
    else:
        raw = [2] * n
    return tuple(Fraction(x) for x in raw)


def gram_matrix(t: LieType) -> Matrix:
    """Inner products (a_i, a_j) of the simple roots."""
    n = t.rank
    lengths = _lengths(t)
    g = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = lengths[i]
    for i, j in _bonds(t):
        # Bonded simple roots meet at an angle whose cosine makes this exact.
        v = -max(lengths[i - 1], lengths[j - 1]) / 2
        g[i - 1][j - 1] = g[j - 1][i - 1] = v
    return tuple(map(tuple, g))


def _cartan_from_vectors(vectors: Sequence[Sequence[int]], gram: Matrix) -> IntMatrix:
    def ip(x, y):
        return sum(x[i] * gram[i][j] * y[j] for i in range(len(x)) for j in range(len(y)) if x[i] and y[j])

    rows = []
    for x in vectors:
        row = []
        for y in vectors:
            c = 2 * ip(x, y) / ip(y, y)
            assert c.denominator == 1
            row.append(int(c))
        rows.append(tuple(row))
    return tuple(rows)


def cartan_matrix(t: LieType) -> IntMatrix:
    return root_system(t).cartan


def inverse_cartan(t: LieType) -> Matrix:
    return root_system(t).cartan_inv


def positive_roots(t: LieType) -> Tuple[RootVector, ...]:
    return root_system(t).pos_roots


def highest_roots(t: LieType) -> Tuple[RootVector, RootVector]:
    rs = root_system(t)
    return rs.beta, rs.gamma


def extended_cartan(t: LieType) -> IntMatrix:
    return root_system(t).cartan_ext


def enumerate_positive_roots(cartan: IntMatrix) -> Tuple[RootVector, ...]:
    """Positive roots by closure from the simple roots along root strings.

    For a root r and simple root a_i the a_i-string through r runs from
    r - p a_i to r + q a_i with p - q = <r, a_i^vee>; processing roots by
    height makes p known, so r + a_i is a root exactly when q > 0.
    """
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    ordered = list(simple)
    layer = simple
    while layer:
        nxt = []
        for r in layer:
            for i in range(n):
                pairing = sum(r[j] * cartan[j][i] for j in range(n))
                p = 0
                down = list(r)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(r)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        nxt.sort()
        ordered += nxt
        layer = nxt
    return tuple(sorted(ordered, key=lambda v: (sum(v), v)))


@dataclass(frozen=True)
class RootSystem:
    type: LieType
    gram: Matrix
    lengths: Tuple[Fraction, ...]
    cartan: IntMatrix
    cartan_inv: Matrix
    pos_roots: Tuple[RootVector, ...]
    beta: RootVector
    gamma: RootVector
    cartan_ext: IntMatrix

    @property
    def rank(self) -> int:
        return self.type.rank

    @cached_property
    def scaled_gram(self) -> Tuple[IntMatrix, int]:
        """(G, s) with G = s * gram integral."""
        s = denominator_lcm(x for row in self.gram for x in row)
        return tuple(tuple(int(x * s) for x in row) for row in self.gram), s

    def inner(self, x: Sequence, y: Sequence) -> Fraction:
        g, s = self.scaled_gram
        n = len(g)
        total = 0
        for i in range(n):
            if x[i]:
                gi = g[i]
                total += x[i] * sum(gi[j] * y[j] for j in range(n) if y[j])
        return Fraction(total) / s

    def norm2(self, x: Sequence) -> Fraction:
        return self.inner(x, x)

    def vertex_root(self, v: int) -> RootVector:
        """Root vector of an ambient vertex: a_v for v >= 1, -beta for v = 0."""
        if v == AFFINE:
            return tuple(-m for m in self.beta)
        return tuple(int(i == v - 1) for i in range(self.rank))

    def vertex_row(self, v: int) -> int:
        """Row index of a vertex in the extended Cartan matrix."""
        return self.rank if v == AFFINE else v - 1

    @cached_property
    def attachment(self) -> int:
        """Smallest simple-root vertex joined to the affine vertex."""
        row = self.cartan_ext[self.rank]
        return min(i + 1 for i in range(self.rank) if row[i] != 0)


@lru_cache(maxsize=None)
def root_system(t: LieType) -> RootSystem:
    gram = gram_matrix(t)
    n = t.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    cartan = _cartan_from_vectors(simple, gram)
    pos = enumerate_positive_roots(cartan)

    def norm2(k):
        return sum(k[i] * gram[i][j] * k[j] for i in range(n) for j in range(n))

    norms = {k: norm2(k) for k in pos}
    short, long_ = min(norms.values()), max(norms.values())
    beta = max((k for k in pos if norms[k] == short), key=sum)
    gamma = max((k for k in pos if norms[k] == long_), key=sum)
    ext = _cartan_from_vectors(simple + [tuple(-m for m in beta)], gram)
    return RootSystem(
        type=t,
        gram=gram,
        lengths=tuple(gram[i][i] for i in range(n)),
        cartan=cartan,
        cartan_inv=inverse(cartan),
        pos_roots=pos,
        beta=beta,
        gamma=gamma,
        cartan_ext=ext,
    )


@lru_cache(maxsize=None)
def minimal_weights(t: LieType) -> Tuple[int, ...]:
    """Indices i whose fundamental weight is minimal (minuscule).

    w_i is minimal exactly when a*(w_i) <= 1 for every positive root a;
    a*(w_i) = k_i (a_i, a_i)/(a, a) for a = sum k_j a_j.
    """
    rs = root_system(t)
    out = []
    for i in range(t.rank):
        top = max(Fraction(k[i]) * rs.lengths[i] / rs.norm2(k) for k in rs.pos_roots)
        if top == 1:
            out.append(i + 1)
    return tuple(out)


@lru_cache(maxsize=None)
def center_structure(t: LieType) -> Tuple[int, ...]:
    """Invariant factors of the center, i.e. of the weight lattice mod the root lattice."""
    return tuple(d for d in smith_diagonal(cartan_matrix(t)) if d != 1)


def center_order(t: LieType) -> int:
    out = 1
    for d in center_structure(t):
        out *= d
    return out


def cartan_determinant(t: LieType) -> int:
    return int(determinant(cartan_matrix(t)))


@dataclass(frozen=True)
class DiagramComponent:
    vertices: Tuple[int, ...]
    type: LieType

    @property
    def group(self) -> GroupId:
        return group_of_type(self.type)


def _candidate_types(size: int, mults: List[int], degrees: List[int]) -> List[LieType]:
    """Types compatible with the coarse invariants of a connected diagram."""
    if 3 in mults:
        return [LieType("G", 2)] if size == 2 else []
    if 2 in mults:
        if size == 2:
            return [LieType("B", 2)]
        out = [LieType("B", size)]
        if size >= 3:
            out.append(LieType("C", size))
        if size == 4:
            out.append(LieType("F", 4))
        return out
    if max(degrees, default=0) <= 2:
        return [LieType("A", size)]
    out = []
    if size >= 4:
        out.append(LieType("D", size))
    if size in (6, 7, 8):
        out.append(LieType("E", size))
    return out


def _degrees(m: Sequence[Sequence[int]]) -> List[int]:
    k = len(m)
    return [sum(1 for j in range(k) if j != i and m[i][j] != 0) for i in range(k)]


def _matchings(sub: Sequence[Sequence[int]], can: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """All orderings p with sub[p[a]][p[b]] == can[a][b] for all a, b."""
    k = len(can)
    dsub, dcan = _degrees(sub), _degrees(can)
    found: List[Tuple[int, ...]] = []
    chosen: List[int] = []

    def extend(a: int) -> None:
        if a == k:
            found.append(tuple(chosen))
            return
        for w in range(k):
            if w in chosen or dsub[w] != dcan[a]:
                continue
            if all(sub[w][chosen[b]] == can[a][b] and sub[chosen[b]][w] == can[b][a] for b in range(a)):
                chosen.append(w)
                extend(a + 1)
                chosen.pop()

    extend(0)
    return found


def classify_diagram(
    sub: Sequence[Sequence[int]],
    vertices: Optional[Sequence[int]] = None,
    vertex_key: Optional[Callable[[int], float]] = None,
) -> List[DiagramComponent]:
    """Split a Cartan submatrix into connected components and name each.

    `vertices` labels the rows of `sub` (default 1..k).  Within a component
    the vertex order is the one matching the canonical Cartan matrix that is
    smallest under `vertex_key`; components are listed by smallest key.
    """
    k = len(sub)
    labels = list(vertices) if vertices is not None else list(range(1, k + 1))
    key = vertex_key or (lambda v: v)
    seen = set()
    comps: List[DiagramComponent] = []
    for start in range(k):
        if start in seen:
            continue
        block = []
        stack = [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            block.append(i)
            for j in range(k):
                if j not in seen and (sub[i][j] != 0 or sub[j][i] != 0):
                    seen.add(j)
                    stack.append(j)
        block.sort()
        local = [[sub[i][j] for j in block] for i in block]
        comps.append(_classify_connected(local, [labels[i] for i in block], key))
    comps.sort(key=lambda c: min(key(v) for v in c.vertices))
    return comps


def _classify_connected(local: List[List[int]], labels: List[int], key) -> DiagramComponent:
    size = len(local)
    if any(local[i][i] != 2 for i in range(size)):
        raise UnclassifiableDiagram("diagonal entries must be 2")
    mults = []
    for i in range(size):
        for j in range(i + 1, size):
            if (local[i][j] == 0) != (local[j][i] == 0):
                raise UnclassifiableDiagram("asymmetric zero pattern")
            if local[i][j]:
                mults.append(local[i][j] * local[j][i])
    if len(mults) != size - 1:
        raise UnclassifiableDiagram("component is not a tree")
    for t in _candidate_types(size, mults, _degrees(local)):
        matches = _matchings(local, cartan_matrix(t))
        if matches:
            best = min(matches, key=lambda p: [key(labels[i]) for i in p])
            return DiagramComponent(tuple(labels[i] for i in best), t)
    raise UnclassifiableDiagram(f"no finite type matches a {size}-vertex component")
