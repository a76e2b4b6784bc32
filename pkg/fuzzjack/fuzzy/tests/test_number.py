# -*- coding: utf-8 -*-

import numpy as np
import pytest
from hypothesis import given

from fuzzjack.fuzzy.number import (
    AlphaGrid,
    FuzzyNumber,
    add,
    crisp,
    d_infty,
    from_trapezoidal,
    from_triangular,
    fuzzy_inclusion,
    g_difference,
    gh_cases,
    gh_difference,
    gh_exists,
    includes,
    parse_fuzzy_literal,
    scale,
)
from fuzzjack.interval.interval import Interval, gh_diff_endpoints
from fuzzjack.tests.parameter import (
    grid,
    random_fuzzy,
    random_triangular,
    rng,
    small_grid,
    triangular_numbers,
    u_pair,
    v_pair,
)
from fuzzjack.utils.errors import GHDifferenceUndefined, GridMismatch, InvalidParams, NonNestedCuts


def test_alpha_grid():
    assert AlphaGrid.uniform(4).m == 4
    assert AlphaGrid.uniform(4) == AlphaGrid([0, 0.25, 0.5, 0.75, 1])
    assert AlphaGrid.uniform(4).index(0.75) == 3
    for levels in ([0, 1, 0.5], [0.1, 1], [0, 0.9], [0]):
        with pytest.raises(InvalidParams):
            AlphaGrid(levels)
    with pytest.raises(InvalidParams):
        AlphaGrid.uniform(4).index(0.3)


@pytest.mark.parametrize("abc, alpha, expected", [
    ((12, 15, 19), 0, (12, 19)),
    ((12, 15, 19), 1, (15, 15)),
    ((5, 9, 11), 0.5, (7, 10)),
])
def test_triangular(abc, alpha, expected):
    assert from_triangular(*abc, grid).cut_at(alpha) == Interval(*expected)


def test_trapezoidal():
    u = from_trapezoidal(0, 1, 2, 3, grid)
    assert u.support == Interval(0, 3)
    assert u.core == Interval(1, 2)
    assert from_trapezoidal(2.5, 2.5, 2.5, 2.5, grid) == crisp(2.5, grid)
    with pytest.raises(InvalidParams):
        from_trapezoidal(0, 2, 1, 3, grid)
    with pytest.raises(InvalidParams):
        from_triangular(3, 2, 1, grid)


def test_crisp():
    assert np.all(crisp(0, grid).cuts == 0)
    assert d_infty(crisp(3, grid), crisp(5, grid)) == 2
    assert gh_cases(crisp(3, grid), crisp(3, grid)) == {1, 2}
    gen = rng(2)
    for r, s in gen.uniform(-50, 50, (100, 2)):
        assert d_infty(crisp(r, grid), crisp(s, grid)) == pytest.approx(abs(r - s), abs=1e-12)


def test_add_scale():
    t = from_triangular(0, 1, 2, grid)
    assert add(t, crisp(5, grid)).allclose(from_triangular(5, 6, 7, grid))
    assert add(t, crisp(0, grid)) == t
    assert (t + t).allclose(from_triangular(0, 2, 4, grid))
    assert scale(2, t).allclose(from_triangular(0, 2, 4, grid))
    assert scale(1, t) == t
    assert (-t).allclose(from_triangular(-2, -1, 0, grid))


def test_grid_mismatch():
    u = from_triangular(0, 1, 2, grid)
    v = from_triangular(0, 1, 2, small_grid)
    for op in (add, d_infty, includes, gh_exists, g_difference):
        with pytest.raises(GridMismatch):
            op(u, v)


def test_non_nested():
    cuts = from_triangular(0, 1, 2, small_grid).cuts.copy()
    cuts[5] = [-1, 3]
    with pytest.raises(NonNestedCuts, match="levels 4 and 5"):
        FuzzyNumber(small_grid, cuts)
    cuts = from_triangular(0, 1, 2, small_grid).cuts.copy()
    cuts[-1] = [1.5, 0.5]
    with pytest.raises(NonNestedCuts, match="lo > hi at level 10"):
        FuzzyNumber(small_grid, cuts)


def test_d_infty_example():
    assert d_infty(u_pair, u_pair) == 0
    assert d_infty(u_pair, v_pair) == pytest.approx(8)


def test_d_infty_metric():
    gen = rng(3)
    for _ in range(1000):
        u, v, w = (random_fuzzy(gen, small_grid) for _ in range(3))
        assert d_infty(u, u) == 0
        assert d_infty(u, v) > 0
        assert d_infty(u, v) == d_infty(v, u)
        assert d_infty(u, w) <= d_infty(u, v) + d_infty(v, w) + 1e-12


def test_includes():
    u = from_triangular(0, 2, 4, grid)
    v = from_triangular(1, 2, 3, grid)
    assert includes(u, u)
    assert includes(u, v)
    assert not includes(v, u)
    assert fuzzy_inclusion(v, u)


def test_gh_examples():
    u = from_triangular(0, 2, 4, grid)
    v = from_triangular(0, 1, 2, grid)
    assert gh_exists(u_pair, u_pair)
    assert not gh_exists(u_pair, v_pair)
    assert gh_exists(u, v)
    assert gh_difference(u, v).allclose(v)
    assert gh_difference(u_pair, u_pair).allclose(crisp(0, grid))
    with pytest.raises(GHDifferenceUndefined):
        gh_difference(u_pair, v_pair)


def test_gh_twice():
    gen = rng(4)
    for _ in range(100):
        v = random_triangular(gen)
        assert gh_exists(2 * v, v)
        assert gh_difference(2 * v, v).allclose(v, atol=1e-10)


def _disjunction_holds(u, v, w, atol=1e-10):
    ulo, uhi, vlo, vhi, wlo, whi = u.lower, u.upper, v.lower, v.upper, w.lower, w.upper
    # v + w = u
    case1 = np.maximum(np.abs(vlo + wlo - ulo), np.abs(vhi + whi - uhi)) <= atol
    # u + (-1) w = v
    case2 = np.maximum(np.abs(ulo - whi - vlo), np.abs(uhi - wlo - vhi)) <= atol
    return bool(np.all(case1 | case2))


def test_gh_disjunction_and_g_agreement():
    gen = rng(5)
    existing = 0
    for _ in range(400):
        u = random_triangular(gen)
        v = random_triangular(gen)
        if not gh_exists(u, v):
            continue
        existing += 1
        w = gh_difference(u, v)
        assert _disjunction_holds(u, v, w)
        assert g_difference(u, v).allclose(w, atol=1e-10)
    assert existing > 50


def _g_oracle(alpha, betas):
    # level-wise gH differences of <12,15,19> and <5,9,11> on a dense beta grid
    dlo = (12 + 3 * betas) - (5 + 4 * betas)
    dhi = (19 - 4 * betas) - (11 - 2 * betas)
    mask = betas >= alpha - 1e-12
    return np.minimum(dlo, dhi)[mask].min(), np.maximum(dlo, dhi)[mask].max()


def test_g_difference_example():
    w = g_difference(u_pair, v_pair)
    lam = grid.levels
    assert np.allclose(w.lower, 6, atol=1e-10)
    assert np.allclose(w.upper, 8 - 2 * lam, atol=1e-10)
    betas = np.linspace(0, 1, 10001)
    for i, alpha in enumerate(lam):
        lo, hi = _g_oracle(alpha, betas)
        assert w.lower[i] == pytest.approx(lo, abs=1e-10)
        assert w.upper[i] == pytest.approx(hi, abs=1e-10)
    assert w.support == Interval(6, 8)
    assert g_difference(u_pair, u_pair).allclose(crisp(0, grid))


def _fuzzy_zero_neighbourhood(gen, g):
    spread_lo = np.concatenate([np.cumsum(gen.uniform(0, 1, g.m)[::-1])[::-1], [0.0]])
    spread_hi = np.concatenate([np.cumsum(gen.uniform(0, 1, g.m)[::-1])[::-1], [0.0]])
    return FuzzyNumber.from_endpoints(g, -spread_lo, spread_hi)


def test_g_cuts_against_gh_cuts():
    gen = rng(6)
    for _ in range(200):
        v = random_fuzzy(gen, small_grid)
        u = v + _fuzzy_zero_neighbourhood(gen, small_grid)
        assert includes(u, v)
        g = g_difference(u, v)
        lo, hi = gh_diff_endpoints(u.lower, u.upper, v.lower, v.upper)
        for i in range(len(small_grid)):
            lhs = max(abs(lo[i] - g.lower[i]), abs(hi[i] - g.upper[i]))
            rhs = np.max(np.maximum(np.abs(lo[i] - lo[i:]), np.abs(hi[i] - hi[i:])))
            assert lhs <= rhs + 1e-12


def test_scale_inverse():
    gen = rng(7)
    for k in gen.uniform(-5, 5, 100):
        if abs(k) < 1e-3:
            continue
        u = random_fuzzy(gen, small_grid)
        assert scale(k, scale(1 / k, u)).allclose(u, atol=1e-10)


@given(triangular_numbers(), triangular_numbers())
def test_outputs_are_fuzzy_numbers(u, v):
    # constructors validate nestedness
    add(u, v)
    scale(-0.5, u)
    g_difference(u, v)
    if gh_exists(u, v):
        gh_difference(u, v)


def test_literal():
    assert parse_fuzzy_literal("<12,15,19>", grid) == u_pair
    assert parse_fuzzy_literal("3", grid) == crisp(3, grid)
    assert parse_fuzzy_literal("<0, 1, 2, 3>", grid) == from_trapezoidal(0, 1, 2, 3, grid)
    for text in ("<1,2>", "<a,b,c>"):
        with pytest.raises(InvalidParams):
            parse_fuzzy_literal(text, grid)


def test_dict():
    assert FuzzyNumber.from_dict(u_pair.to_dict()) == u_pair
