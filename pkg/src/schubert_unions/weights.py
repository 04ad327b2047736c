"""Higher weights of Grassmann and Schubert-union codes.

Closed formulas cover the head of the hierarchy (d_r a sum of consecutive
powers of q starting at q^delta) and the tail (d_{k-a} = n - |P^{a-1}|),
plus the one remaining value for C(2,5).  Between those ranges the module
reports the interval [Griesmer lower bound, D_r], with D_r = n - J_r the
Schubert-union bound.  A brute-force oracle sweeps all codimension-r
subspaces in reduced echelon form and is exact wherever it is affordable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .grassgrid import (
    DEFAULT_IDEAL_GUARD,
    Poly,
    TooLarge,
    cell_dimension,
    grand_total,
    point_leq,
)
from .optimizer import bound_table
from .twodim import EmptyUnion, NotTwoDim

DEFAULT_ORACLE_BUDGET = 2 * 10 ** 7


class BudgetExceeded(RuntimeError):
    """The subspace sweep would be larger than the oracle budget."""


@dataclass(frozen=True)
class WeightRecord:
    """One row of a weight table; value is set when d_r is known exactly."""

    r: int
    value: object = None
    lower: object = None
    upper: object = None
    source: str = ""

    def as_dict(self):
        def enc(v):
            return v.to_list() if isinstance(v, Poly) else v
        out = {"r": self.r, "source": self.source}
        if self.value is not None:
            out["value"] = enc(self.value)
        else:
            out["lower"] = enc(self.lower)
            out["upper"] = enc(self.upper)
        return out


def nogin_s(params) -> int:
    """Length of the known head of the hierarchy: max(l, m-l) + 1."""
    return max(params.l, params.m - params.l) + 1


def nogin_weights(params):
    """(r, d_r) with d_r = q^delta + ... + q^{delta-r+1}, r = 1..s."""
    delta = params.delta
    out = []
    acc = Poly.zero()
    for r in range(1, nogin_s(params) + 1):
        acc = acc + Poly.monomial(delta - r + 1)
        out.append((r, acc))
    return out


def top_weights(params):
    """(r, d_r) for the tail: d_k = n and d_{k-a} = n - (1+q+...+q^{a-1})."""
    k = params.k
    n = grand_total(params)
    out = []
    acc = Poly.zero()
    for a in range(0, nogin_s(params) + 1):
        r = k - a
        if r < 1:
            break
        out.append((r, n - acc))
        acc = acc + Poly.monomial(a)
    return sorted(out)


def d5_c25() -> Poly:
    """The middle weight of C(2,5): n - (q^3 + 2q^2 + q + 1)."""
    from .grassgrid import GrassParams
    n = grand_total(GrassParams(2, 5))
    return n - Poly((1, 1, 2, 1))


def known_dr(params):
    """dict r -> (Poly, source) for every r where d_r is known exactly."""
    out = {}
    for r, p in nogin_weights(params):
        out[r] = (p, "NoginFormula")
    for r, p in top_weights(params):
        if r in out:
            assert out[r][0] == p, f"head/tail disagree at r={r}"
        else:
            out[r] = (p, "TopFormula")
    if (params.l, params.m) == (2, 5):
        out[5] = (d5_c25(), "D5Formula")
    return out


def delta_table(params):
    """WeightRecords of the gaps Delta_r = d_r - d_{r-1}; value None when unknown.

    Complete for (2,3), (2,4) and (2,5); elsewhere the middle range is open.
    """
    known = known_dr(params)
    known[0] = (Poly.zero(), "")
    records = []
    for r in range(1, params.k + 1):
        if r in known and r - 1 in known:
            records.append(WeightRecord(r, known[r][0] - known[r - 1][0],
                                        source=known[r][1]))
        else:
            records.append(WeightRecord(r, None, source=""))
    return records


def griesmer_lower(d1, r, q) -> int:
    """Griesmer bound: sum of ceil(d1/q^i) for i = 0..r-1."""
    acc = 0
    for i in range(r):
        acc += -(-d1 // q ** i)
    return acc


def griesmer_lower_poly(params, r) -> Poly:
    """Griesmer bound for C(l,m) as a polynomial (exact for integer q >= 2)."""
    delta = params.delta
    p = Poly.zero()
    for i in range(r):
        p = p + (Poly.monomial(delta - i) if i <= delta else Poly.one())
    return p


def gaussian_binomial(n, r, q) -> int:
    """Number of r-dimensional subspaces of GF(q)^n."""
    num = 1
    den = 1
    for i in range(r):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def weight_table(params, q=None, guard=DEFAULT_IDEAL_GUARD):
    """WeightRecords for C(l,m), r = 1..k; intervals where d_r is open.

    Symbolic rows when q is None, evaluated integers otherwise.
    """
    known = known_dr(params)
    table = bound_table(params, guard)
    records = []
    for r in range(1, params.k + 1):
        if r in known:
            p, source = known[r]
            records.append(WeightRecord(r, p if q is None else p(q), source=source))
        else:
            lo = griesmer_lower_poly(params, r)
            hi = table.row(r).D
            records.append(WeightRecord(
                r, None,
                lower=lo if q is None else lo(q),
                upper=hi if q is None else hi(q),
                source="Griesmer/SchubertBound"))
    return records


# ---------------------------------------------------------------------------
# brute-force oracle: sweep codimension-r subspaces in reduced echelon form


def _column_masks_q2(columns):
    """Column vectors as bit-integers for the q = 2 fast path."""
    out = []
    for col in columns:
        b = 0
        for j, x in enumerate(col):
            if x:
                b |= 1 << j
        out.append(b)
    return out


class _MaskCache:
    """Memoizes, per functional row, the bitmask of annihilated columns."""

    def __init__(self, field, columns):
        self.field = field
        self.columns = columns
        self.cache = {}
        self.colbits = _column_masks_q2(columns) if field.q == 2 else None

    def mask(self, row):
        got = self.cache.get(row)
        if got is not None:
            return got
        mm = 0
        if self.colbits is not None:
            bits = row
            if not isinstance(bits, int):
                bits = 0
                for j, x in enumerate(row):
                    if x:
                        bits |= 1 << j
            for ci, cb in enumerate(self.colbits):
                if (bits & cb).bit_count() % 2 == 0:
                    mm |= 1 << ci
        else:
            dot = self.field.dot
            for ci, col in enumerate(self.columns):
                if dot(row, col) == 0:
                    mm |= 1 << ci
        self.cache[row] = mm
        return mm


def _max_annihilated(field, columns, k, r):
    """Largest number of columns killed by an r-dimensional space of functionals.

    Subspaces are enumerated once each through their reduced echelon basis;
    a partial intersection that cannot beat the best count prunes its branch.
    """
    cache = _MaskCache(field, columns)
    q2 = field.q == 2
    full = (1 << len(columns)) - 1
    best = 0
    for pivots in itertools.combinations(range(k), r):
        pivot_set = set(pivots)
        free_cols = [[j for j in range(pivots[i] + 1, k) if j not in pivot_set]
                     for i in range(r)]

        def rec(i, acc):
            nonlocal best
            if acc.bit_count() <= best:
                return
            if i == r:
                best = acc.bit_count()
                return
            cols_i = free_cols[i]
            if q2:
                base = 1 << pivots[i]
                for bits in range(1 << len(cols_i)):
                    row = base
                    b = bits
                    t = 0
                    while b:
                        if b & 1:
                            row |= 1 << cols_i[t]
                        b >>= 1
                        t += 1
                    rec(i + 1, acc & cache.mask(row))
            else:
                for values in itertools.product(field.elements(), repeat=len(cols_i)):
                    row = [0] * k
                    row[pivots[i]] = 1
                    for j, v in zip(cols_i, values):
                        row[j] = v
                    rec(i + 1, acc & cache.mask(tuple(row)))

        rec(0, full)
    return best


def oracle_dr(field, genmat, r, budget=DEFAULT_ORACLE_BUDGET) -> int:
    """Exact d_r of the code with the given generator matrix, by exhaustion."""
    k = genmat.k
    count = gaussian_binomial(k, r, field.q)
    if count > budget:
        raise BudgetExceeded(
            f"sweep needs {count} subspaces, budget is {budget}")
    best = _max_annihilated(field, genmat.columns, k, r)
    return genmat.n - best


def min_weight_bruteforce(field, genmat) -> int:
    """Minimum nonzero codeword weight via a full message-space sweep."""
    k, cols = genmat.k, genmat.columns
    if field.q == 2:
        colbits = _column_masks_q2(cols)
        best = None
        for msg in range(1, 1 << k):
            w = sum(1 for cb in colbits if (msg & cb).bit_count() % 2)
            if best is None or w < best:
                best = w
        return best
    best = None
    for msg in itertools.product(field.elements(), repeat=k):
        if not any(msg):
            continue
        w = sum(1 for col in cols if field.dot(msg, col) != 0)
        if best is None or w < best:
            best = w
    return best


# ---------------------------------------------------------------------------
# Schubert-union codes (l = 2)


def enumerate_subideals(union, guard=DEFAULT_IDEAL_GUARD):
    """Yield every downward-closed subset of G_U (as frozensets of points)."""
    ground = sorted(union.ideal())
    n = len(ground)
    if n > guard:
        raise TooLarge(f"union has {n} points, guard is {guard}")
    below = []
    for i, a in enumerate(ground):
        below.append([j for j in range(i) if point_leq(ground[j], a)])
    chosen = set()

    def rec(i):
        if i == n:
            yield frozenset(ground[j] for j in chosen)
            return
        yield from rec(i + 1)
        if all(j in chosen for j in below[i]):
            chosen.add(i)
            yield from rec(i + 1)
            chosen.remove(i)

    yield from rec(0)


def relative_bound(union, q, guard=DEFAULT_IDEAL_GUARD):
    """dict r -> M_r: the most points a sub-union of spanning deficit r can have."""
    l = union.params.l
    K = union.span()
    best = {}
    for sub in enumerate_subideals(union, guard):
        r = K - len(sub)
        pts = sum(q ** cell_dimension(a, l) for a in sub)
        if pts > best.get(r, -1):
            best[r] = pts
    return best


def union_code_params(union, field, guard=DEFAULT_IDEAL_GUARD):
    """Parameters and known weights of the code built on a union's points.

    d_1 is q to the smallest Krull dimension among the component cycles.
    The tail r >= K - B + 1 (B the largest corner coordinate) is exact via
    the projective space inside the union; elsewhere d_r is exact precisely
    when the Griesmer bound meets the coordinate-section upper bound
    n_U - M_r, and an interval is reported otherwise.
    """
    params = union.params
    if params.l != 2:
        raise NotTwoDim(f"l = {params.l}, need l = 2")
    if not union.maxima:
        raise EmptyUnion("no code on the empty union")
    q = field.q
    K = union.span()
    n_u = union.point_count()(q)
    deltas = [cell_dimension(a, 2) for a in union.maxima]
    dmin = min(deltas)
    d1 = q ** dmin
    b1 = max(a[1] for a in union.maxima)
    m_r = relative_bound(union, q, guard)
    records = []
    for r in range(1, K + 1):
        a = K - r
        lo = griesmer_lower(d1, r, q)
        hi = n_u - m_r[r]
        if a <= b1 - 1:
            value = n_u - sum(q ** i for i in range(a))
            assert lo <= value <= hi, f"tail value escapes bounds at r={r}"
            records.append(WeightRecord(r, value, source="TopFormula"))
        elif lo == hi:
            source = "NoginFormula" if r <= dmin + 1 else "SchubertBound"
            records.append(WeightRecord(r, lo, source=source))
        else:
            records.append(WeightRecord(r, None, lower=lo, upper=hi,
                                        source="Griesmer/SchubertBound"))
    return {
        "n": n_u,
        "k": K,
        "d1": d1,
        "component_krull": sorted(deltas),
        "records": records,
    }
