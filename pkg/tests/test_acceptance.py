"""Acceptance criteria.  Each test records one PASS/FAIL line, printed at the
end of the run.  Every comparison is exact (rational arithmetic); runtime
bounds are pinned per criterion."""
from __future__ import annotations

import time
from collections import Counter
from fractions import Fraction
from math import gcd, prod

from audit import audit_identities, block_for, check_generator, emitted_generator_check, label_candidates
from conftest import ACCEPTANCE, TYPES, build_corpus
from fixtures.congruences import ALL_BLOCKS
from fixtures.reference_tables import MAXIMAL_ROWS, PARABOLIC_ROWS, center_invariants, deficiency_values
from oracles import CorootOracle, gram, reflection_closure, weights_to_roots

from lie_centralizer.deficiency import deficiency_simple, reduced_weight_system
from lie_centralizer.kernel import full_centralizer, kernel_oracle_snf
from lie_centralizer.lattice import determinant, identity, mat_mul, quotient_invariants
from lie_centralizer.local_type import local_type
from lie_centralizer.root_data import (
    AFFINE,
    LieType,
    cartan_matrix,
    inverse_cartan,
    minimal_weights,
    positive_roots,
    root_system,
)
from lie_centralizer.weyl_cell import Branch

TABLE_SECONDS = 10.0
CORPUS_SECONDS = 60.0

# Rows whose printed generator subscript is shared between the w1 and w6
# points of E6; the emitted generator is checked against the displayed
# weight images instead of a literal reading.
AMBIGUOUS_GENERATOR = {("E6", 6, 2)}


def record(n: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[n] = (ok, detail)
    print(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")


def _row_problems(row, ambiguous=frozenset()):
    t = LieType.parse(row.type)
    lam = [Fraction(0)] * t.rank
    lam[row.index - 1] = Fraction(1, row.denominator)
    res = full_centralizer(t, lam)
    lt = res.local_type
    out = []
    if Counter(str(c.group) for c in lt.components) != Counter(row.factors) or lt.radical_rank != row.radical_rank:
        out.append(f"{row.label}: local type {lt.name}")
    if res.kernel.invariant_factors != row.kernel:
        out.append(f"{row.label}: kernel {res.kernel.name}, published {row.kernel}")
    if row.generator is not None:
        block = block_for(row.type, row.index, res.point.branch)
        if (row.type, row.index, row.denominator) in ambiguous:
            ok = all(emitted_generator_check(block, lam, g) for g in res.kernel.generators)
        else:
            want = row.kernel[0] if len(row.kernel) == 1 else None
            ok = any(
                member and order == want
                for member, order in (
                    check_generator(row.type, lam, row.factors, row.generator, lab) for lab in label_candidates(block)
                )
            )
        if not ok:
            out.append(f"{row.label}: published generator is not a kernel element of order {row.kernel}")
    return out


def _table_criterion(n: int, rows, ambiguous=frozenset()):
    start = time.perf_counter()
    problems = [p for row in rows for p in _row_problems(row, ambiguous)]
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < TABLE_SECONDS
    detail = f"{len(rows) - len({p.split(':')[0] for p in problems})}/{len(rows)} rows reproduce, {elapsed:.2f}s"
    if problems:
        detail += "; " + "; ".join(problems)
    record(n, ok, detail)
    assert not problems, problems
    assert elapsed < TABLE_SECONDS


def test_criterion_1_maximal_table():
    _table_criterion(1, MAXIMAL_ROWS, AMBIGUOUS_GENERATOR)


def test_criterion_2_parabolic_table():
    _table_criterion(2, PARABOLIC_ROWS)


def test_criterion_3_deficiency_table():
    bad = []
    checked = 0
    for t in TYPES:
        for i, want in deficiency_values(t.family, t.rank).items():
            checked += 1
            if deficiency_simple(t, i) != want:
                bad.append(f"{t} w{i}")
    for n in range(1, 12):
        t = LieType("A", n)
        for k in range(1, n + 1):
            checked += 1
            if deficiency_simple(t, k) != (n + 1) // gcd(n + 1, k):
                bad.append(f"{t} w{k}")
    record(3, not bad, f"{checked} deficiency values checked" + (f"; mismatches {bad}" if bad else ""))
    assert not bad


_CLOSURES = {}


def _generated_positive_roots(t, base):
    key = (t, base)
    if key not in _CLOSURES:
        rs = root_system(t)
        vectors = [tuple(-x for x in rs.beta) if v == AFFINE else tuple(int(i == v - 1) for i in range(t.rank))
                   for v in base]
        roots = reflection_closure(gram(t, rs.lengths), vectors) if vectors else frozenset()
        _CLOSURES[key] = frozenset(r for r in roots if any(r) and min(r) >= 0)
    return _CLOSURES[key]


_ALL_ROOTS = {}


def _all_positive_roots(t):
    if t not in _ALL_ROOTS:
        rs = root_system(t)
        simple = [tuple(int(i == j) for j in range(t.rank)) for i in range(t.rank)]
        _ALL_ROOTS[t] = sorted(r for r in reflection_closure(gram(t, rs.lengths), simple) if min(r) >= 0)
    return _ALL_ROOTS[t]


_ORACLES = {}


def _coroots(t) -> CorootOracle:
    if t not in _ORACLES:
        _ORACLES[t] = CorootOracle(t, root_system(t).lengths, _all_positive_roots(t))
    return _ORACLES[t]


def test_criterion_4_local_type_generates_integral_roots():
    start = time.perf_counter()
    points = build_corpus()
    bad = []
    for u in points:
        t = u.type
        oracle = _coroots(t)
        values = oracle.values(weights_to_roots(t, u.coords))
        psi = frozenset(r for r, v in zip(oracle.roots, values) if v.denominator == 1)
        lt = local_type(u)
        if _generated_positive_roots(t, lt.base_vertices) != psi:
            bad.append(f"{t} {u.coords}")
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < CORPUS_SECONDS
    record(4, ok, f"{len(points)} points over {len(TYPES)} types, {len(bad)} mismatches, {elapsed:.1f}s")
    assert not bad, bad[:5]
    assert elapsed < CORPUS_SECONDS


def test_criterion_5_kernel_double_computation(corpus):
    bad = []
    for u in corpus:
        res = full_centralizer(u.type, u.coords)
        if u.branch is Branch.CENTRAL:
            simple = [tuple(int(i == j) for j in range(u.type.rank)) for i in range(u.type.rank)]
            oracle = quotient_invariants(simple, u.type.rank)
        else:
            oracle = kernel_oracle_snf(u, res.local_type, res.embedding)
        if oracle != res.kernel.invariant_factors:
            bad.append(f"{u.type} {u.coords}")
    record(5, not bad, f"{len(corpus) - len(bad)}/{len(corpus)} kernels agree")
    assert not bad, bad[:5]


def test_criterion_6_cell_invariants(corpus):
    bad = []
    for u in corpus:
        t = u.type
        oracle = _coroots(t)
        values = oracle.values(weights_to_roots(t, u.coords))
        cosupport = set(u.cosupport)
        wall = values[oracle.roots.index(root_system(t).beta)] == 1
        for r, v in zip(oracle.roots, values):
            if not 0 <= v <= 1:
                bad.append(f"{t} {u.coords} {r}: value {v}")
            elif v == 0 and not {i + 1 for i, k in enumerate(r) if k} <= cosupport:
                bad.append(f"{t} {u.coords} {r}: zero off the cosupport")
            elif v == 1 and not wall:
                bad.append(f"{t} {u.coords} {r}: value 1 off the wall")
    record(6, not bad, f"{len(corpus)} points, {len(bad)} violations")
    assert not bad, bad[:5]


CLOSED_FORM = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
}
EXCEPTIONAL_COUNTS = {"G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120}


def test_criterion_7_structural_identities(corpus):
    bad = []
    for t in TYPES:
        z = prod(center_invariants(t.family, t.rank))
        if determinant(cartan_matrix(t)) != z:
            bad.append(f"{t}: det")
        count = EXCEPTIONAL_COUNTS.get(str(t)) or CLOSED_FORM[t.family](t.rank)
        if len(positive_roots(t)) != count or len(_all_positive_roots(t)) != count:
            bad.append(f"{t}: root count")
        if mat_mul(cartan_matrix(t), inverse_cartan(t)) != identity(t.rank):
            bad.append(f"{t}: inverse")
        if len(minimal_weights(t)) + 1 != z:
            bad.append(f"{t}: minimal weights")
    local_types = {}
    for u in corpus:
        if u.branch is not Branch.CENTRAL:
            lt = local_type(u)
            local_types[(u.type, lt.base_vertices)] = lt
    for lt in local_types.values():
        want = prod(prod(center_invariants(c.type.family, c.type.rank)) for c in lt.components)
        if len(reduced_weight_system(lt)) != want:
            bad.append(f"{lt.type} {lt.name}: reduced weights")
    record(7, not bad, f"{len(TYPES)} types and {len(local_types)} local types checked" + (f"; {bad}" if bad else ""))
    assert not bad


def test_criterion_8_congruence_audit():
    total = 0
    failures = []
    for block in ALL_BLOCKS:
        n, f = audit_identities(block)
        total += n
        failures += f
    detail = f"{total - len(failures)}/{total} displayed identities hold"
    if failures:
        detail += "; failing: " + "; ".join(failures)
    record(8, not failures, detail)
    assert not failures, failures
