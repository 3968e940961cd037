"""Minimal weights, reduced weight systems and the deficiency function.

A reduced weight element theta has one entry per simple factor of a local
type: None for the zero weight, or the (factor-local) index of a minimal
weight of that factor.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Optional, Sequence, Tuple

from .errors import NotInRadical, NotMinimalWeight, ShapeMismatch
from .lattice import Vector, denominator_lcm, rational_solve
from .local_type import LocalType
from .root_data import LieType, center_order, minimal_weights, root_system

Theta = Tuple[Optional[int], ...]


@dataclass(frozen=True)
class ReducedWeightElement:
    theta: Theta
    radical: Optional[Vector] = None


def _check_weight(t: LieType, i: Optional[int]) -> None:
    if i is not None and i not in minimal_weights(t):
        raise NotMinimalWeight(f"w{i} is not a minimal weight of {t}")


@lru_cache(maxsize=None)
def deficiency_simple(t: LieType, i: Optional[int]) -> int:
    """Least m > 0 with m w_i in the root lattice; 1 for the zero weight."""
    _check_weight(t, i)
    if i is None:
        return 1
    return denominator_lcm(root_system(t).cartan_inv[i - 1])


def _check_shape(lt: LocalType, theta: Sequence) -> None:
    if len(theta) != len(lt.components):
        raise ShapeMismatch(f"theta has {len(theta)} entries for {len(lt.components)} factors")


def deficiency_tuple(lt: LocalType, theta: Theta) -> int:
    _check_shape(lt, theta)
    out = 1
    for comp, i in zip(lt.components, theta):
        out = lcm(out, deficiency_simple(comp.type, i))
    return out


def reduced_weight_system(lt: LocalType) -> Tuple[Theta, ...]:
    """All theta, with the all-zero element first."""
    choices = [(None,) + minimal_weights(c.type) for c in lt.components]
    out = tuple(itertools.product(*choices))
    expected = 1
    for c in lt.components:
        expected *= center_order(c.type)
    assert len(out) == expected
    return out


@lru_cache(maxsize=None)
def center_add(t: LieType, i: Optional[int], j: Optional[int]) -> Optional[int]:
    """The minimal weight (or None) congruent to w_i + w_j modulo the root lattice."""
    _check_weight(t, i)
    _check_weight(t, j)
    inv = root_system(t).cartan_inv
    zero = (Fraction(0),) * t.rank

    def vec(k):
        return zero if k is None else inv[k - 1]

    total = tuple(a + b for a, b in zip(vec(i), vec(j)))
    for k in (None,) + minimal_weights(t):
        if all((a - b).denominator == 1 for a, b in zip(total, vec(k))):
            return k
    raise AssertionError("minimal weights do not represent every class")


def theta_add(lt: LocalType, a: Theta, b: Theta) -> Theta:
    return tuple(center_add(c.type, x, y) for c, x, y in zip(lt.components, a, b))


def radical_order(gamma: Optional[Sequence], radical_unit_lattice: Sequence[Sequence[int]]) -> int:
    """Least m > 0 with m gamma in the lattice spanned by the given rows."""
    if gamma is None or not any(gamma):
        return 1
    if not radical_unit_lattice:
        raise NotInRadical("nonzero radical vector but the radical is trivial")
    coeffs = rational_solve(radical_unit_lattice, gamma)
    if coeffs is None:
        raise NotInRadical("vector lies outside the radical subspace")
    return denominator_lcm(coeffs)


def order_in_kernel(
    lt: LocalType,
    theta: Theta,
    gamma: Optional[Sequence],
    radical_unit_lattice: Sequence[Sequence[int]],
) -> int:
    """Order of the covering-group element given by theta and the radical vector gamma."""
    return lcm(deficiency_tuple(lt, theta), radical_order(gamma, radical_unit_lattice))
