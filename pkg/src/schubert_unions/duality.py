"""Grid duality of Schubert unions.

The dual of U is the union whose ideal is rev(H_U), where rev is the
order-reversing involution of the grid.  Spanning dimensions of U and its
dual add up to binomial(m,l), and the dual point count is the reciprocal
polynomial q^delta * h_U(1/q).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .grassgrid import (
    Poly,
    SchubertUnion,
    canonicalize,
    full_grid,
    grand_total,
    point_leq,
)


class ReciprocityViolation(RuntimeError):
    """h_U has degree above delta; the union's data is corrupt."""


def rev(params, alpha):
    """The involution (a_1,...,a_l) -> (m+1-a_l,...,m+1-a_1)."""
    return tuple(params.m + 1 - x for x in reversed(alpha))


def dual_union(union: SchubertUnion) -> SchubertUnion:
    """Dual union: its ideal is the rev image of H_U."""
    params = union.params
    pts = {rev(params, beta) for beta in union.h_ideal()}
    return canonicalize(params, pts, check=False)


def dual_union_explicit(union: SchubertUnion) -> SchubertUnion:
    """Dual via the corner recursion, one cycle per assignment of maxima.

    Each map from the maxima index set into {1..l} produces a cycle
    (f_1,...,f_l) with f_l = m - max{0, a_{i,1} : i in A_1} and
    f_j = min(f_{j+1} - 1, m - max{0, a_{i,l+1-j} : i in A_{l+1-j}});
    cycles with some f_i < i are dropped.  Empty blocks contribute the 0
    term of the max.  Exponential in the number of maxima; meant as a
    cross-check of dual_union.
    """
    params = union.params
    l, m = params.l, params.m
    mx = union.maxima
    s = len(mx)
    if s == 0:
        return SchubertUnion.full(params)
    cycles = set()
    for assign in itertools.product(range(1, l + 1), repeat=s):
        f = [0] * (l + 1)
        dead = False
        for j in range(l, 0, -1):
            block = l + 1 - j
            coord = l + 1 - j
            top = max([0] + [mx[i][coord - 1] for i in range(s) if assign[i] == block])
            raw = m - top
            f[j] = raw if j == l else min(f[j + 1] - 1, raw)
            if f[j] < j:
                dead = True
                break
        if not dead:
            cycles.add(tuple(f[1:]))
    pts = {t for t in full_grid(params) if any(point_leq(t, c) for c in cycles)}
    return canonicalize(params, pts, check=False)


def dual_point_count(union: SchubertUnion) -> Poly:
    """g of the dual union, computed as q^delta * h_U(1/q)."""
    params = union.params
    h = grand_total(params) - union.point_count()
    if h.degree > params.delta:
        raise ReciprocityViolation(
            f"h_U has degree {h.degree} > delta {params.delta}")
    return h.reversed_within(params.delta)


@dataclass(frozen=True)
class DualityReport:
    union: SchubertUnion
    dual: SchubertUnion
    span_primal: int
    span_dual: int

    def to_json(self) -> str:
        return json.dumps({
            "l": self.union.params.l,
            "m": self.union.params.m,
            "maxima": [list(a) for a in self.union.maxima],
            "dual_maxima": [list(a) for a in self.dual.maxima],
            "span_primal": self.span_primal,
            "span_dual": self.span_dual,
        })


def duality_report(union: SchubertUnion) -> DualityReport:
    d = dual_union(union)
    return DualityReport(union, d, union.span(), d.span())
