import pytest

from schubert_unions.gf import Field
from schubert_unions.grassgrid import (
    GrassParams,
    Poly,
    SchubertUnion,
    enumerate_ideals,
    grand_total,
)
from schubert_unions.optimizer import bound_table
from schubert_unions.pluecker import generator_matrix
from schubert_unions.twodim import EmptyUnion, NotTwoDim
from schubert_unions.weights import (
    BudgetExceeded,
    d5_c25,
    delta_table,
    gaussian_binomial,
    griesmer_lower,
    min_weight_bruteforce,
    nogin_weights,
    oracle_dr,
    top_weights,
    union_code_params,
    weight_table,
)

from table_fixtures import DELTA_TABLES


def test_nogin_weights_examples():
    rows = dict(nogin_weights(GrassParams(2, 4)))
    assert rows[1] == Poly.parse("q^4")
    assert rows[2] == Poly.parse("q^4+q^3")
    assert rows[3] == Poly.parse("q^4+q^3+q^2")
    rows5 = dict(nogin_weights(GrassParams(2, 5)))
    assert rows5[4] == Poly.parse("q^6+q^5+q^4+q^3")
    for params in (GrassParams(2, 6), GrassParams(3, 6)):
        assert dict(nogin_weights(params))[1] == Poly.monomial(params.delta)


def test_top_weights_examples():
    p = GrassParams(2, 4)
    n = grand_total(p)
    rows = dict(top_weights(p))
    assert rows[6] == n
    assert rows[5] == n - Poly.one()
    assert rows[4] == n - Poly.parse("q+1")
    assert rows[3] == n - Poly.parse("q^2+q+1")
    rows5 = dict(top_weights(GrassParams(2, 5)))
    n5 = grand_total(GrassParams(2, 5))
    assert rows5[6] == n5 - Poly.parse("q^3+q^2+q+1")


def test_head_tail_consistency_forces_n():
    # the two expressions for d_3 of C(2,4) pin n = q^4+q^3+2q^2+q+1
    p = GrassParams(2, 4)
    assert dict(nogin_weights(p))[3] == dict(top_weights(p))[3]
    assert grand_total(p) == Poly.parse("q^4+q^3+2q^2+q+1")
    assert grand_total(GrassParams(2, 5)) == Poly.parse("q^6+q^5+2q^4+2q^3+2q^2+q+1")


def test_d5_value():
    d5 = d5_c25()
    assert d5 == Poly.parse("q^6+q^5+2q^4+q^3")
    assert d5(2) == 136
    rows = dict(nogin_weights(GrassParams(2, 5)))
    tops = dict(top_weights(GrassParams(2, 5)))
    assert d5 == rows[4] + Poly.monomial(4)
    assert d5 == tops[6] - Poly.monomial(2)


def test_delta_tables_fixture():
    for (l, m), expect in DELTA_TABLES.items():
        table = delta_table(GrassParams(l, m))
        assert [str(rec.value) for rec in table] == expect


def test_delta_sum_is_n():
    for (l, m) in DELTA_TABLES:
        params = GrassParams(l, m)
        total = Poly.zero()
        for rec in delta_table(params):
            total = total + rec.value
        assert total == grand_total(params)


def test_delta_reciprocity_q3():
    # Delta_r(q) = q^delta * Delta_{k+1-r}(1/q) where the table is complete
    for (l, m) in DELTA_TABLES:
        params = GrassParams(l, m)
        table = delta_table(params)
        for rec in table:
            partner = table[params.k - rec.r]
            assert rec.value == partner.value.reversed_within(params.delta)


def test_delta_table_gap_structure():
    table = delta_table(GrassParams(2, 6))
    known = [rec.r for rec in table if rec.value is not None]
    assert known == [1, 2, 3, 4, 5, 11, 12, 13, 14, 15]


def test_weight_table_intervals():
    params = GrassParams(2, 6)
    rows = {rec.r: rec for rec in weight_table(params)}
    assert rows[1].value == Poly.monomial(8)
    gap = rows[7]
    assert gap.value is None
    assert gap.lower == Poly.parse("q^8+q^7+q^6+q^5+q^4+q^3+q^2")
    table = bound_table(params)
    assert gap.upper == table.row(7).D
    # the interval is consistent
    for q in (2, 3):
        assert gap.lower(q) <= gap.upper(q)


def test_gaussian_binomial():
    assert gaussian_binomial(6, 1, 2) == 63
    assert gaussian_binomial(6, 3, 2) == 1395
    assert gaussian_binomial(10, 5, 2) == 109221651


def test_griesmer_lower():
    assert griesmer_lower(16, 3, 2) == 16 + 8 + 4
    assert griesmer_lower(4, 4, 2) == 4 + 2 + 1 + 1


def test_oracle_c24_q2_spot():
    f2 = Field(2)
    gm = generator_matrix(f2, GrassParams(2, 4))
    assert oracle_dr(f2, gm, 1) == 16
    assert oracle_dr(f2, gm, 6) == 35


def test_oracle_budget():
    f2 = Field(2)
    gm = generator_matrix(f2, GrassParams(2, 4))
    with pytest.raises(BudgetExceeded):
        oracle_dr(f2, gm, 3, budget=100)


def test_oracle_c25_optional_deep_values():
    # affordable here thanks to branch-and-bound pruning; d_5 = 136
    f2 = Field(2)
    gm = generator_matrix(f2, GrassParams(2, 5))
    assert oracle_dr(f2, gm, 4, budget=2 * 10 ** 8) == 120
    assert oracle_dr(f2, gm, 5, budget=2 * 10 ** 8) == d5_c25()(2)


def test_min_weight_matches_oracle_d1():
    f2 = Field(2)
    gm = generator_matrix(f2, GrassParams(2, 4))
    assert min_weight_bruteforce(f2, gm) == oracle_dr(f2, gm, 1) == 16


def test_union_code_params_examples():
    f2 = Field(2)
    u = SchubertUnion(GrassParams(2, 5), [(1, 5), (2, 3)])
    out = union_code_params(u, f2)
    assert out["component_krull"] == [2, 3]
    assert out["d1"] == 4  # q^2 at q=2
    plane = union_code_params(SchubertUnion(GrassParams(2, 5), [(2, 3)]), f2)
    assert (plane["n"], plane["k"], plane["d1"]) == (7, 3, 4)
    for m in (4, 5):
        full = union_code_params(SchubertUnion.full(GrassParams(2, m)), f2)
        assert full["d1"] == 2 ** (2 * (m - 2))


def test_union_code_params_errors():
    f2 = Field(2)
    with pytest.raises(NotTwoDim):
        union_code_params(SchubertUnion(GrassParams(3, 6), [(1, 3, 5)]), f2)
    with pytest.raises(EmptyUnion):
        union_code_params(SchubertUnion.empty(GrassParams(2, 5)), f2)


def test_union_records_vs_oracle_c24():
    # every exact record matches the exhaustive sweep; intervals contain it
    f2 = Field(2)
    params = GrassParams(2, 4)
    for u in enumerate_ideals(params):
        if not u.maxima:
            continue
        out = union_code_params(u, f2)
        gm = generator_matrix(f2, params, u)
        assert (gm.n, gm.k) == (out["n"], out["k"])
        for rec in out["records"]:
            d = oracle_dr(f2, gm, rec.r)
            if rec.value is not None:
                assert d == rec.value, (u, rec)
            else:
                assert rec.lower <= d <= rec.upper, (u, rec)


def test_union_records_vs_oracle_c25_small_spans():
    # second family: every (2,5) union code of dimension <= 7, all r
    f2 = Field(2)
    params = GrassParams(2, 5)
    for u in enumerate_ideals(params):
        if not u.maxima or u.span() > 7:
            continue
        out = union_code_params(u, f2)
        gm = generator_matrix(f2, params, u)
        for rec in out["records"]:
            d = oracle_dr(f2, gm, rec.r)
            if rec.value is not None:
                assert d == rec.value, (u, rec)
            else:
                assert rec.lower <= d <= rec.upper, (u, rec)


def test_union_min_distance_exhaustive():
    f2 = Field(2)
    for params in (GrassParams(2, 4), GrassParams(2, 5)):
        for u in enumerate_ideals(params):
            if not u.maxima:
                continue
            gm = generator_matrix(f2, params, u)
            dmin = min(sum(a) - 3 for a in u.maxima)
            assert min_weight_bruteforce(f2, gm) == 2 ** dmin


def test_griesmer_and_sandwich_invariants():
    # oracle values respect Griesmer from below and D_r from above
    f2 = Field(2)
    params = GrassParams(2, 4)
    gm = generator_matrix(f2, params)
    table = bound_table(params)
    d1 = 16
    for r in range(1, 7):
        d = oracle_dr(f2, gm, r)
        assert d >= griesmer_lower(d1, r, 2)
        assert d <= table.row(r).D(2)


def test_formula_oracle_agreement_c24():
    f2, f3 = Field(2), Field(3)
    params = GrassParams(2, 4)
    known = {rec.r: rec.value for rec in weight_table(params)}
    for field in (f2, f3):
        gm = generator_matrix(field, params)
        for r in range(1, 7):
            assert oracle_dr(field, gm, r) == known[r](field.q)
