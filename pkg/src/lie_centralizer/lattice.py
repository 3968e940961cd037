"""Exact linear algebra over Q and Z.

Vectors are tuples and matrices are tuples of row tuples.  Integer work is
done in row convention: a lattice is the set of integer combinations of the
rows of a matrix.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Hashable, Iterable, List, Optional, Sequence, Tuple, TypeVar

Vector = Tuple[Fraction, ...]
Matrix = Tuple[Tuple[Fraction, ...], ...]
IntMatrix = Tuple[Tuple[int, ...], ...]

T = TypeVar("T", bound=Hashable)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def vec_mat(v: Sequence, m: Sequence[Sequence]) -> tuple:
    """Row vector times matrix."""
    n = len(m[0]) if m else 0
    return tuple(sum(v[i] * m[i][j] for i in range(len(v))) for j in range(n))


def add_vec(x: Sequence, y: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(x, y))


def sub_vec(x: Sequence, y: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(x, y))


def scale_vec(c, x: Sequence) -> tuple:
    return tuple(c * a for a in x)


def denominator_lcm(values: Iterable) -> int:
    """Least common multiple of the denominators of some rationals."""
    d = 1
    for v in values:
        d = lcm(d, Fraction(v).denominator)
    return d


def is_integral(values: Iterable) -> bool:
    return all(Fraction(v).denominator == 1 for v in values)


def inverse(m: Sequence[Sequence]) -> Matrix:
    """Exact inverse of a square rational matrix by Gauss-Jordan elimination."""
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def determinant(m: Sequence[Sequence]) -> Fraction:
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] / a[col][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def rational_solve(rows: Sequence[Sequence], v: Sequence) -> Optional[Vector]:
    """Return x with x . rows = v, or None if v is not in the row span.

    The rows must be linearly independent, which makes x unique.
    """
    k = len(rows)
    n = len(v)
    # One equation per coordinate, one unknown per row.
    eqs = [[Fraction(rows[i][j]) for i in range(k)] + [Fraction(v[j])] for j in range(n)]
    pivots = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, n) if eqs[i][col] != 0), None)
        if piv is None:
            raise ValueError("rows are linearly dependent")
        eqs[r], eqs[piv] = eqs[piv], eqs[r]
        p = eqs[r][col]
        eqs[r] = [x / p for x in eqs[r]]
        for i in range(n):
            if i != r and eqs[i][col] != 0:
                f = eqs[i][col]
                eqs[i] = [x - f * y for x, y in zip(eqs[i], eqs[r])]
        pivots.append(col)
        r += 1
    if any(eqs[i][k] != 0 for i in range(r, n)):
        return None
    return tuple(eqs[i][k] for i in range(k))


def hermite_form(rows: Sequence[Sequence[int]]) -> Tuple[IntMatrix, IntMatrix, int, Tuple[int, ...]]:
    """Row Hermite normal form.

    Returns (H, U, rank, pivots) with U unimodular and U . rows = H.  The
    first `rank` rows of H are in reduced echelon form with positive pivots
    at the columns listed in `pivots`; the remaining rows of H are zero, so
    the remaining rows of U span the integer relations among the input rows.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    h = [[int(x) for x in row] for row in rows]
    u = [[int(i == j) for j in range(m)] for i in range(m)]

    def sub_row(i: int, k: int, q: int) -> None:
        h[i] = [a - q * b for a, b in zip(h[i], h[k])]
        u[i] = [a - q * b for a, b in zip(u[i], u[k])]

    r = 0
    pivots: List[int] = []
    for col in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if h[i][col] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(h[i][col]))
            h[r], h[p] = h[p], h[r]
            u[r], u[p] = u[p], u[r]
            clean = True
            for i in range(r + 1, m):
                if h[i][col] != 0:
                    sub_row(i, r, h[i][col] // h[r][col])
                    if h[i][col] != 0:
                        clean = False
            if clean:
                break
        if h[r][col] == 0:
            continue
        if h[r][col] < 0:
            h[r] = [-a for a in h[r]]
            u[r] = [-a for a in u[r]]
        for i in range(r):
            sub_row(i, r, h[i][col] // h[r][col])
        pivots.append(col)
        r += 1
    return tuple(map(tuple, h)), tuple(map(tuple, u)), r, tuple(pivots)


class HermiteSolver:
    """Solves c . rows = v over the integers, reusing one Hermite form."""

    def __init__(self, rows: Sequence[Sequence[int]]):
        self.m = len(rows)
        self.h, self.u, self.rank, self.pivots = hermite_form(rows)

    def solve(self, v: Sequence[int]) -> Optional[Tuple[int, ...]]:
        residual = [int(x) for x in v]
        coeffs = [0] * self.rank
        for k, col in enumerate(self.pivots):
            q, rem = divmod(residual[col], self.h[k][col])
            if rem:
                return None
            coeffs[k] = q
            if q:
                residual = [a - q * b for a, b in zip(residual, self.h[k])]
        if any(residual):
            return None
        return tuple(sum(coeffs[k] * self.u[k][i] for k in range(self.rank)) for i in range(self.m))


def integer_solve(rows: Sequence[Sequence[int]], v: Sequence) -> Optional[Tuple[int, ...]]:
    """Return integers c with c . rows = v, or None if v is not in the lattice."""
    if not is_integral(v):
        return None
    return HermiteSolver(rows).solve([int(x) for x in v])


def integer_relations(rows: Sequence[Sequence[int]]) -> IntMatrix:
    """Basis of {c in Z^m : c . rows = 0}, in Hermite normal form."""
    _, u, rank, _ = hermite_form(rows)
    kernel = u[rank:]
    if not kernel:
        return ()
    h, _, r, _ = hermite_form(kernel)
    return h[:r]


def smith_diagonal(rows: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Nonzero diagonal entries of the Smith normal form, in divisibility order."""
    a = [[int(x) for x in row] for row in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    diag: List[int] = []
    t = 0
    while t < min(m, n):
        entries = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            changed = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    changed = changed or a[i][t] != 0
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
                    changed = changed or a[t][j] != 0
            if changed:
                # Move the smallest nonzero entry of row/column t to the corner.
                cands = [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
                cands += [(abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]]
                _, i, j = min(cands)
                a[t], a[i] = a[i], a[t]
                for row in a:
                    row[t], row[j] = row[j], row[t]
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n)
                        if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        diag.append(abs(a[t][t]))
        t += 1
    return tuple(diag)


def quotient_invariants(rows: Sequence[Sequence[int]], n: int) -> Tuple[int, ...]:
    """Invariant factors (all > 1) of Z^n modulo the lattice spanned by rows.

    Raises ValueError when the lattice does not have full rank.
    """
    diag = smith_diagonal(rows) if rows else ()
    if len(diag) < n:
        raise ValueError("sublattice does not have full rank")
    return tuple(d for d in diag if d != 1)


def primitive_integer_vector(v: Sequence) -> Tuple[int, ...]:
    """The primitive integer vector on the ray through a nonzero rational vector."""
    d = denominator_lcm(v)
    ints = [int(Fraction(x) * d) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def finite_abelian_invariants(elements: Sequence[T], add: Callable[[T, T], T], zero: T) -> Tuple[int, ...]:
    """Invariant factors d1 | d2 | ... of a finite abelian group given by its elements."""
    order = len(elements)

    def times(k: int, x: T) -> T:
        acc = zero
        for _ in range(k):
            acc = add(acc, x)
        return acc

    factors: List[int] = []
    exps_by_prime = {}
    p, rest = 2, order
    while rest > 1:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            # |{x : p^k x = 0}| = p^(sum_j min(k, e_j)); differences count the e_j >= k.
            counts = [1]
            for k in range(1, e + 1):
                counts.append(sum(1 for x in elements if times(p ** k, x) == zero))
            ge = []
            for k in range(1, e + 1):
                ratio = counts[k] // counts[k - 1]
                c = 0
                while ratio > 1:
                    ratio //= p
                    c += 1
                ge.append(c)
            # ge[k-1] = number of cyclic p-factors of exponent >= k
            parts = []
            for k in range(e, 0, -1):
                more = ge[k - 1] - (ge[k] if k < e else 0)
                parts += [k] * more
            exps_by_prime[p] = sorted(parts, reverse=True)
        p += 1
    width = max((len(v) for v in exps_by_prime.values()), default=0)
    for slot in range(width):
        d = 1
        for p, exps in exps_by_prime.items():
            if slot < len(exps):
                d *= p ** exps[slot]
        factors.append(d)
    return tuple(sorted(factors))
