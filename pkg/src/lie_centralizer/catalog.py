"""Reports built from library results: single queries, tables, DOT diagrams."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .deficiency import deficiency_simple
from .kernel import CentralizerResult, format_generator, full_centralizer, radical_in_weights
from .lattice import scale_vec
from .local_type import base_of_set, fg_set, is_maximal
from .root_data import (
    AFFINE,
    LieType,
    center_structure,
    group_of_type,
    minimal_weights,
    root_system,
)
from .weyl_cell import cell_membership, format_rational

EXCEPTIONAL = ("G2", "F4", "E6", "E7", "E8")


@dataclass(frozen=True)
class FactorReport:
    type: str
    group: str
    vertices: Tuple[int, ...]


@dataclass(frozen=True)
class GeneratorReport:
    components: Tuple[Optional[int], ...]
    radical: Tuple[str, ...]
    order: int
    text: str


@dataclass(frozen=True)
class KernelReport:
    order: int
    invariant_factors: Tuple[int, ...]
    generators: Tuple[GeneratorReport, ...]


@dataclass(frozen=True)
class QueryReport:
    group: str
    type: str
    u: Tuple[str, ...]
    branch: str
    beta_value: str
    factors: Tuple[FactorReport, ...]
    radical_rank: int
    kernel: KernelReport
    maximal: Optional[bool] = None
    name: str = ""

    def to_dict(self) -> Dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)

    @classmethod
    def from_dict(cls, d: Dict) -> "QueryReport":
        k = d["kernel"]
        return cls(
            group=d["group"],
            type=d["type"],
            u=tuple(d["u"]),
            branch=d["branch"],
            beta_value=d["beta_value"],
            factors=tuple(FactorReport(f["type"], f["group"], tuple(f["vertices"])) for f in d["factors"]),
            radical_rank=d["radical_rank"],
            kernel=KernelReport(
                order=k["order"],
                invariant_factors=tuple(k["invariant_factors"]),
                generators=tuple(
                    GeneratorReport(tuple(g["components"]), tuple(g["radical"]), g["order"], g["text"])
                    for g in k["generators"]
                ),
            ),
            maximal=d.get("maximal"),
            name=d.get("name", ""),
        )

    @classmethod
    def from_json(cls, text: str) -> "QueryReport":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [
            f"group: {self.group} ({self.type})",
            f"u: {','.join(self.u)}",
            f"branch: {self.branch}, beta*(u) = {self.beta_value}",
            "local type: " + ("×".join(f.group for f in self.factors) or "{e}")
            + (f" with radical rank {self.radical_rank}" if self.radical_rank else ""),
            "kernel: " + ("⊕".join(f"Z{d}" for d in self.kernel.invariant_factors) or "{e}"),
        ]
        for g in self.kernel.generators:
            lines.append(f"  generator of order {g.order}: {g.text}")
        if self.maximal is not None:
            lines.append(f"maximal: {'yes' if self.maximal else 'no'}")
        lines.append(f"centralizer: {self.name}")
        return "\n".join(lines) + "\n"


def report_from_result(result: CentralizerResult, maximal: Optional[bool] = None) -> QueryReport:
    u = result.point
    lt = result.local_type
    t = u.type
    gens = []
    for g in result.kernel.generators:
        rad = radical_in_weights(t, scale_vec(-1, g.gamma))
        gens.append(GeneratorReport(
            components=g.theta,
            radical=tuple(format_rational(x) for x in rad),
            order=g.order,
            text=format_generator(lt, g),
        ))
    return QueryReport(
        group=str(group_of_type(t)),
        type=str(t),
        u=tuple(format_rational(x) for x in u.coords),
        branch=u.branch.value,
        beta_value=format_rational(u.beta_value),
        factors=tuple(FactorReport(str(c.type), str(c.group), c.vertices) for c in lt.components),
        radical_rank=lt.radical_rank,
        kernel=KernelReport(result.kernel.order, result.kernel.invariant_factors, tuple(gens)),
        maximal=maximal,
        name=result.name,
    )


def centralizer_report(t: LieType, lam: Sequence) -> QueryReport:
    return report_from_result(full_centralizer(t, lam))


def maximal_reports(t: LieType) -> List[Tuple[str, QueryReport]]:
    """One report per point of F_G, labelled w_i/p_i, with the maximality flag."""
    out = []
    for fg in fg_set(t):
        rep = report_from_result(full_centralizer(t, fg.point.coords), maximal=is_maximal(fg))
        out.append((fg.label, rep))
    return out


def parabolic_report(t: LieType, i: int) -> Tuple[str, QueryReport]:
    """Report at u = u_i/2, the representative with I_u = {i} strictly inside the cell."""
    if not 1 <= i <= t.rank:
        raise ValueError(f"vertex index {i} out of range 1..{t.rank}")
    fg = fg_set(t)[i - 1]
    lam = [x / 2 for x in fg.point.coords]
    return f"ω{i}/{2 * fg.denominator}", report_from_result(full_centralizer(t, lam))


def _generator_cell(rep: QueryReport) -> str:
    return "; ".join(g.text for g in rep.kernel.generators) or "-"


def _kernel_cell(rep: QueryReport) -> str:
    return "⊕".join(f"Z{d}" for d in rep.kernel.invariant_factors) or "{e}"


def _local_cell(rep: QueryReport) -> str:
    parts = [f.group for f in rep.factors]
    if rep.radical_rank == 1:
        parts.append("S^1")
    elif rep.radical_rank > 1:
        parts.append(f"T^{rep.radical_rank}")
    return "×".join(parts)


def maximal_table(t: LieType) -> str:
    lines = [f"# {group_of_type(t)}: centralizers at the points of F_G", "",
             "| u | local type | kernel | generator | maximal |",
             "|---|---|---|---|---|"]
    for label, rep in maximal_reports(t):
        lines.append(f"| {label} | {_local_cell(rep)} | {_kernel_cell(rep)} | {_generator_cell(rep)} | "
                     f"{'yes' if rep.maximal else 'no'} |")
    return "\n".join(lines) + "\n"


def parabolic_table(t: LieType, indices: Optional[Sequence[int]] = None) -> str:
    lines = [f"# {group_of_type(t)}: parabolic centralizers with I_u = {{i}}", "",
             "| I_u | u | local type | kernel | generator |",
             "|---|---|---|---|---|"]
    for i in indices or range(1, t.rank + 1):
        label, rep = parabolic_report(t, i)
        lines.append(f"| {{{i}}} | {label} | {_local_cell(rep)} | {_kernel_cell(rep)} | {_generator_cell(rep)} |")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SetReport:
    group: str
    type: str
    points: Tuple[Tuple[str, ...], ...]
    base: Tuple[int, ...]
    all_walls: bool
    mixed: bool
    factors: Tuple[FactorReport, ...]
    radical_rank: int
    identity_component: Optional[QueryReport]

    def to_dict(self) -> Dict:
        return asdict(self)

    def to_text(self) -> str:
        def vname(v):
            return "-beta" if v == AFFINE else f"a{v}"

        lines = [
            f"group: {self.group} ({self.type})",
            f"points: {len(self.points)}" + (" (mixed wall and interior)" if self.mixed else ""),
            "base: {" + ", ".join(vname(v) for v in self.base) + "}",
            "identity component: " + ("×".join(f.group for f in self.factors) or "{e}")
            + (f" with radical rank {self.radical_rank}" if self.radical_rank else ""),
        ]
        text = "\n".join(lines) + "\n"
        if self.identity_component is not None:
            text += self.identity_component.to_text()
        return text


def set_report(t: LieType, lams: Sequence[Sequence]) -> SetReport:
    """Base of the centralizer of a finite set of elements exp(u).

    When every point has the same support and branch the identity component
    is the centralizer of any one of them, and the full report is attached.
    """
    points = [cell_membership(t, lam) for lam in lams]
    sb = base_of_set(points)
    single = None
    keys = {(p.support, p.branch) for p in points}
    if len(keys) == 1:
        single = centralizer_report(t, points[0].coords)
    return SetReport(
        group=str(group_of_type(t)),
        type=str(t),
        points=tuple(tuple(format_rational(x) for x in p.coords) for p in points),
        base=sb.vertices,
        all_walls=sb.all_walls,
        mixed=sb.mixed,
        factors=tuple(FactorReport(str(c.type), str(c.group), c.vertices) for c in sb.components),
        radical_rank=sb.radical_rank,
        identity_component=single,
    )


def _weight_set(indices: Sequence[int]) -> str:
    return "{" + ", ".join(f"ω{i}" for i in indices) + "}"


def deficiency_rows(t: LieType) -> List[Tuple[Optional[int], int]]:
    return [(None, 1)] + [(i, deficiency_simple(t, i)) for i in minimal_weights(t)]


def table_text(kind: str, types: Sequence[LieType]) -> str:
    if kind == "deficiency":
        lines = ["| group | minimal weight | deficiency |", "|---|---|---|"]
        for t in types:
            for i, d in deficiency_rows(t):
                lines.append(f"| {group_of_type(t)} | {'0' if i is None else f'ω{i}'} | {d} |")
    elif kind == "minimal-weights":
        lines = ["| group | type | minimal weights |", "|---|---|---|"]
        for t in types:
            lines.append(f"| {group_of_type(t)} | {t} | {_weight_set(minimal_weights(t))} |")
    elif kind == "centers":
        lines = ["| group | type | center |", "|---|---|---|"]
        for t in types:
            z = "⊕".join(f"Z{d}" for d in center_structure(t)) or "{e}"
            lines.append(f"| {group_of_type(t)} | {t} | {z} |")
    else:
        raise ValueError(f"unknown table kind {kind!r}")
    return "\n".join(lines) + "\n"


def dot_diagram(t: LieType, lam: Optional[Sequence] = None) -> str:
    """Graphviz text for the Dynkin diagram, extended when u is on the wall.

    Multiple bonds are drawn as parallel strokes with an arrow toward the
    shorter root; vertices deleted by u are dashed.
    """
    from .local_type import local_type
    from .weyl_cell import Branch

    rs = root_system(t)
    n = t.rank
    vertices = list(range(1, n + 1))
    deleted: set = set()
    if lam is not None:
        u = cell_membership(t, lam)
        lt = local_type(u)
        if lt.branch is Branch.WALL:
            vertices.append(AFFINE)
        if lt.branch is not Branch.CENTRAL:
            deleted = set(u.support)
    lines = [f'graph "{t}" {{', "  node [shape=circle];"]
    for v in vertices:
        label = "-β" if v == AFFINE else str(v)
        attrs = [f'label="{label}"']
        if v == AFFINE:
            attrs.append("shape=doublecircle")
        if v in deleted:
            attrs += ["style=dashed", "color=gray"]
        lines.append(f"  v{v} [{', '.join(attrs)}];")
    for a, v in enumerate(vertices):
        for w in vertices[a + 1:]:
            i, j = rs.vertex_row(v), rs.vertex_row(w)
            x, y = rs.cartan_ext[i][j], rs.cartan_ext[j][i]
            if x == 0:
                continue
            mult = x * y
            attrs = []
            if mult > 1:
                attrs.append('color="' + ":".join(["black"] * mult) + '"')
                # The arrow points at the shorter root, whose Cartan entry is the larger in size.
                head, tail = (w, v) if abs(x) > abs(y) else (v, w)
                lines.append(f"  v{tail} -- v{head} [{', '.join(attrs)}, dir=forward];")
            else:
                lines.append(f"  v{v} -- v{w};")
    lines.append("}")
    return "\n".join(lines) + "\n"
