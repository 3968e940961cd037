"""Kernel of the covering G_1 x ... x G_k x T^r -> C_exp(u).

All vectors here are in the simple-root basis of the ambient group G, so
the root lattice (= unit lattice, G being 1-connected) is Z^n.  For a
reduced weight element theta of the semisimple part, h(theta) is the sum of
the images of its fundamental weights.  theta gives a kernel element exactly
when h(theta) lies in V_rad + Z^n; a witness gamma in V_rad with
h(theta) - gamma in Z^n then gives the element exp(theta - gamma).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import floor
from typing import Dict, List, Optional, Sequence, Tuple

from .deficiency import ReducedWeightElement, Theta, deficiency_tuple, reduced_weight_system, theta_add
from .errors import CentralElement, ClosureMismatch, OracleDisagreement, RankDeficient
from .lattice import (
    HermiteSolver,
    IntMatrix,
    Matrix,
    Vector,
    add_vec,
    denominator_lcm,
    finite_abelian_invariants,
    integer_relations,
    inverse,
    mat_mul,
    quotient_invariants,
    scale_vec,
    sub_vec,
    vec_mat,
)
from .local_type import LocalType, local_type
from .root_data import LieType, root_system
from .weyl_cell import Branch, CellPoint, cell_membership, convert_to_weight_basis, coroot_value, format_rational


@dataclass(frozen=True)
class EmbeddingData:
    type: LieType
    base: Tuple[int, ...]
    weight_images: Tuple[Vector, ...]
    radical_span: Tuple[Vector, ...]
    radical_unit_lattice: IntMatrix
    annihilator: IntMatrix

    def image(self, v: int) -> Vector:
        """Image of the fundamental weight dual to base vertex v."""
        return self.weight_images[self.base.index(v)]

    @cached_property
    def _solver(self) -> HermiteSolver:
        return HermiteSolver(self.annihilator)

    @cached_property
    def _coordinate_map(self) -> Matrix:
        """P with K P = I for the radical unit lattice basis K, so gamma = (gamma P) K on V_rad."""
        k = self.radical_unit_lattice
        kt = tuple(zip(*k))
        return mat_mul(kt, inverse(mat_mul(k, kt)))

    @cached_property
    def _integer_coordinate_map(self) -> Tuple[IntMatrix, int]:
        p = self._coordinate_map
        d = denominator_lcm(x for row in p for x in row)
        return tuple(tuple(int(x * d) for x in row) for row in p), d

    def lattice_coordinates(self, gamma: Sequence) -> Vector:
        return vec_mat(gamma, self._coordinate_map)


@dataclass(frozen=True)
class KernelGenerator:
    theta: Theta
    gamma: Vector
    order: int


@dataclass(frozen=True)
class KernelDescription:
    order: int
    invariant_factors: Tuple[int, ...]
    generators: Tuple[KernelGenerator, ...]

    @property
    def name(self) -> str:
        if not self.invariant_factors:
            return "{e}"
        return "⊕".join(f"Z{d}" for d in self.invariant_factors)


@dataclass(frozen=True)
class CentralizerResult:
    point: CellPoint
    local_type: LocalType
    embedding: Optional[EmbeddingData]
    hu: Tuple[ReducedWeightElement, ...]
    kernel: KernelDescription

    @property
    def name(self) -> str:
        base = self.local_type.name
        if not self.kernel.invariant_factors:
            return base
        if "×" in base:
            base = f"({base})"
        return f"{base}/{self.kernel.name}"


def _radical_span(t: LieType, support: Tuple[int, ...], wall: bool) -> Tuple[Vector, ...]:
    inv = root_system(t).cartan_inv
    if not wall:
        return tuple(inv[k - 1] for k in support)
    beta = root_system(t).beta

    def bval(k):
        w = [Fraction(0)] * t.rank
        w[k - 1] = Fraction(1)
        return coroot_value(t, w, beta)

    last = support[-1]
    out = []
    for k in support[:-1]:
        out.append(sub_vec(scale_vec(bval(last), inv[k - 1]), scale_vec(bval(k), inv[last - 1])))
    return tuple(out)


@lru_cache(maxsize=None)
def _embedding(t: LieType, base: Tuple[int, ...], support: Tuple[int, ...], wall: bool) -> EmbeddingData:
    rs = root_system(t)
    n = t.rank
    roots = [rs.vertex_root(v) for v in base]
    rows = [rs.vertex_row(v) for v in base]
    sub = [[rs.cartan_ext[i][j] for j in rows] for i in rows]
    sub_inv = inverse(sub) if sub else ()
    images = tuple(
        tuple(sum((sub_inv[a][b] * roots[b][i] for b in range(len(base))), Fraction(0)) for i in range(n))
        for a in range(len(base))
    )
    # Column v of the annihilator is the functional x -> (x, r_v), up to a positive scale.
    gram, _ = rs.scaled_gram
    cols = [[sum(gram[k][j] * r[j] for j in range(n) if r[j]) for k in range(n)] for r in roots]
    annihilator = tuple(tuple(cols[c][k] for c in range(len(cols))) for k in range(n))
    if cols:
        lattice = integer_relations(annihilator)
    else:
        lattice = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    span = _radical_span(t, support, wall)
    assert len(span) == len(lattice) == n - len(base)
    return EmbeddingData(t, base, images, span, lattice, annihilator)


def embedding(u: CellPoint, lt: LocalType) -> EmbeddingData:
    if lt.branch is Branch.CENTRAL:
        raise CentralElement("exp(u) is central; the centralizer is the whole group")
    return _embedding(u.type, lt.base_vertices, u.support, lt.branch is Branch.WALL)


def weight_image(lt: LocalType, emb: EmbeddingData, theta: Theta) -> Vector:
    """h(theta) in the root basis of G."""
    total = (Fraction(0),) * lt.type.rank
    for comp, a in zip(lt.components, theta):
        if a is not None:
            total = add_vec(total, emb.image(comp.vertices[a - 1]))
    return total


def radical_witness(emb: EmbeddingData, x: Sequence) -> Optional[Vector]:
    """The canonical gamma in V_rad with x - gamma in Z^n, or None if there is none.

    Solutions z of z . N = x . N (N the annihilator) are exactly the integer
    vectors with x - z in V_rad; gamma = x - z is then reduced so that its
    coordinates over the radical unit lattice lie in [0, 1).  The work is
    done on numerators over a common denominator.
    """
    n = emb.type.rank
    d = denominator_lcm(x)
    xs = [int(v * d) for v in x]
    if emb.annihilator and emb.annihilator[0]:
        target = []
        for c in range(len(emb.annihilator[0])):
            q, rem = divmod(sum(xs[k] * emb.annihilator[k][c] for k in range(n) if xs[k]), d)
            if rem:
                return None
            target.append(q)
        z = emb._solver.solve(target)
        if z is None:
            return None
    else:
        z = [v // d for v in xs]
    g = [xs[k] - d * z[k] for k in range(n)]
    if not emb.radical_unit_lattice:
        assert not any(g)
        return (Fraction(0),) * n
    p_num, p_den = emb._integer_coordinate_map
    den = d * p_den
    r = len(emb.radical_unit_lattice)
    coeffs = [sum(g[k] * p_num[k][j] for k in range(n) if g[k]) % den for j in range(r)]
    return tuple(
        Fraction(sum(coeffs[j] * emb.radical_unit_lattice[j][k] for j in range(r)), den) for k in range(n)
    )


def compute_Hu(u: CellPoint, lt: LocalType, emb: EmbeddingData) -> Tuple[ReducedWeightElement, ...]:
    out = []
    for theta in reduced_weight_system(lt):
        if deficiency_tuple(lt, theta) == 1:
            continue
        gamma = radical_witness(emb, weight_image(lt, emb, theta))
        if gamma is not None:
            out.append(ReducedWeightElement(theta, gamma))
    return tuple(out)


def _generated(lt: LocalType, gens: Sequence[Theta], zero: Theta) -> set:
    group = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = theta_add(lt, x, g)
                if y not in group:
                    group.add(y)
                    nxt.append(y)
        frontier = nxt
    return group


def _theta_key(theta: Theta) -> Tuple[int, ...]:
    return tuple(0 if a is None else a for a in theta)


def kernel_from_Hu(lt: LocalType, hu: Sequence[ReducedWeightElement]) -> KernelDescription:
    """Group structure and generators of the kernel from the elements of H_u."""
    zero: Theta = (None,) * len(lt.components)
    gammas: Dict[Theta, Vector] = {h.theta: h.radical for h in hu}
    elements = [zero] + [h.theta for h in hu]
    present = set(elements)
    if len(present) != len(elements):
        raise ClosureMismatch("repeated element in H_u")
    for a in elements:
        for b in elements:
            if theta_add(lt, a, b) not in present:
                raise ClosureMismatch("H_u together with 0 is not closed under addition")
    factors = finite_abelian_invariants(elements, lambda a, b: theta_add(lt, a, b), zero)
    size = 1
    for d in factors:
        size *= d
    if size != len(elements):
        raise ClosureMismatch("invariant factors do not account for every element")
    orders = {th: deficiency_tuple(lt, th) for th in elements}
    candidates = sorted(elements[1:], key=lambda th: (-orders[th], _theta_key(th)))

    # Pick generators for the invariant factors, largest first, so that each
    # new one enlarges the generated subgroup by exactly its order.
    chosen: List[Theta] = []

    def search(targets: List[int], need: int) -> bool:
        if not targets:
            return True
        d = targets[0]
        for th in candidates:
            if orders[th] != d or th in chosen:
                continue
            chosen.append(th)
            if len(_generated(lt, chosen, zero)) == need * d and search(targets[1:], need * d):
                return True
            chosen.pop()
        return False

    if not search(sorted(factors, reverse=True), 1):
        raise ClosureMismatch("no generating set realizes the invariant factors")
    gens = tuple(KernelGenerator(th, gammas[th], orders[th]) for th in chosen)
    return KernelDescription(len(elements), factors, gens)


def kernel_oracle_snf(u: CellPoint, lt: LocalType, emb: EmbeddingData) -> Tuple[int, ...]:
    """Invariant factors of Z^n / (base roots + radical unit lattice)."""
    rs = root_system(u.type)
    rows = [rs.vertex_root(v) for v in lt.base_vertices] + [list(r) for r in emb.radical_unit_lattice]
    try:
        return quotient_invariants(rows, u.type.rank)
    except ValueError as exc:
        raise RankDeficient(str(exc)) from exc


@lru_cache(maxsize=None)
def _solve(lt: LocalType, support: Tuple[int, ...]) -> Tuple[EmbeddingData, Tuple[ReducedWeightElement, ...], KernelDescription]:
    # Past the local type, the computation depends on u only through its support.
    t = lt.type
    u = CellPoint(t, tuple(Fraction(int(i + 1 in support)) for i in range(t.rank)))
    emb = _embedding(t, lt.base_vertices, support, lt.branch is Branch.WALL)
    hu = compute_Hu(u, lt, emb)
    ker = kernel_from_Hu(lt, hu)
    oracle = kernel_oracle_snf(u, lt, emb)
    if oracle != ker.invariant_factors:
        raise OracleDisagreement(
            f"{t} support {support} {lt.branch.value}: enumeration {ker.invariant_factors}, "
            f"lattice quotient {oracle}"
        )
    return emb, hu, ker


def full_centralizer(t: LieType, lam: Sequence) -> CentralizerResult:
    u = cell_membership(t, lam)
    lt = local_type(u)
    if lt.branch is Branch.CENTRAL:
        return CentralizerResult(u, lt, None, (), KernelDescription(1, (), ()))
    emb, hu, ker = _solve(lt, u.support)
    return CentralizerResult(u, lt, emb, hu, ker)


def radical_in_weights(t: LieType, gamma: Sequence) -> Vector:
    return convert_to_weight_basis(t, gamma)


def format_generator(lt: LocalType, gen: KernelGenerator) -> str:
    """exp-notation for the kernel element exp(theta - gamma)."""
    parts = []
    for idx, (comp, a) in enumerate(zip(lt.components, gen.theta), start=1):
        if a is not None:
            parts.append(f"exp{idx}(ω{a}^{idx})")
    rad = radical_in_weights(lt.type, scale_vec(-1, gen.gamma))
    if any(rad):
        terms = [f"{format_rational(c)}·ω{i + 1}" for i, c in enumerate(rad) if c]
        parts.append(f"exp{len(lt.components) + 1}(" + "+".join(terms).replace("+-", "-") + ")")
    return "×".join(parts) if parts else "e"
