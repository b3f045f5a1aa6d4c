import itertools
import random

import pytest
from hypothesis import given, settings

from valuebound.dilation import mu, omega
from valuebound.gf import extension_make, field_make
from valuebound.padic import (
    PadicCtx,
    PartsSumMismatch,
    char_sum,
    multinomial,
    multinomial_valuation_check,
    power_sum,
    teichmuller_lift,
    teichmuller_of_values,
    u_invariant,
    vp,
)
from valuebound.poly import parse_map
from valuebound.report import random_map
from valuebound.valueset import DomainTooLarge, value_set
from conftest import SMALL_Q, field_of, small_maps

F3 = field_make(3)


def closed_form(q, k):
    if k == 0:
        return q
    return q - 1 if k % (q - 1) == 0 else 0


def test_vp():
    assert vp(12, 2) == 2 and vp(7, 7) == 1 and vp(5, 3) == 0
    with pytest.raises(ValueError):
        vp(0, 3)


def test_lift_examples():
    ctx = PadicCtx.for_field(F3, 2)
    assert teichmuller_lift(ctx, F3.coeffs(2)) == (8,)
    for N in (1, 2, 3, 5):
        c = PadicCtx.for_field(field_make(2, 3), N)
        assert teichmuller_lift(c, (0, 0, 0)) == c.zero()
        assert teichmuller_lift(c, (1, 0, 0)) == c.one()
    c2 = PadicCtx.for_field(field_make(2), 3)
    assert teichmuller_lift(c2, (1,)) == (1,)


def _lift_cases():
    for q in (2, 3, 4, 5, 7, 8):
        for n in (1, 2, 3):
            if q**n <= 64:
                yield q, n


@pytest.mark.parametrize("q,n", list(_lift_cases()))
@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_lift_fixed_by_frobenius_and_reduces(q, n, N):
    T = extension_make(field_of(q), n).top
    c = PadicCtx.for_field(T, N)
    lifts = {}
    for x in range(T.q):
        y = teichmuller_lift(c, T.coeffs(x))
        assert c.pow(y, T.q) == y
        assert c.reduce(y) == T.coeffs(x)
        lifts[x] = y
    for x, y in itertools.product(range(T.q), repeat=2):
        assert lifts[T.mul(x, y)] == c.mul(lifts[x], lifts[y])


def test_power_sum_examples():
    sq = parse_map("vars:1; f1 = x1^2", F3)
    ident = parse_map("vars:1; f1 = x1", F3)
    _, s = power_sum(sq, None, 1)
    assert s == (2,)
    assert power_sum(ident, None, 1)[1] == (0,)
    assert power_sum(ident, None, 2)[1] == (2,)


def test_power_sum_precision_follows_k():
    ident = parse_map("vars:1; f1 = x1", F3)
    ctx, s = power_sum(ident, None, 18)  # v_3(18) = 2
    assert ctx.precision == 3
    assert s == (2,)  # 18 is a multiple of q-1: the sum is q-1 exactly


def test_u_examples():
    assert u_invariant(parse_map("vars:1; f1 = x1^2", F3)).u == 1
    assert u_invariant(parse_map("vars:1; f1 = x1", F3)).u == 2
    zc = parse_map("vars:1; f1 = x1^7 + x1", field_make(19))
    r = u_invariant(zc, cap=18)
    assert r.found and r.u >= 6 == omega(zc).omega


def test_u_not_found_below_cap():
    r = u_invariant(parse_map("vars:1; f1 = x1", field_make(5)), cap=3)
    assert not r.found and r.cap == 3 and r.nonzero_sum_valuation is None


def test_sum_domain_limit():
    f = parse_map("vars:2; f1 = x1; f2 = x2", field_make(67))
    with pytest.raises(DomainTooLarge):
        power_sum(f, None, 1)


@pytest.mark.parametrize("q", SMALL_Q)
def test_char_sum_closed_form(q):
    for k in range(0, 3 * (q - 1) + 1):
        assert char_sum(q, k) == closed_form(q, k)


def test_char_sum_examples():
    assert [char_sum(5, k) for k in (3, 4, 0)] == [0, 4, 5]


@pytest.mark.parametrize(
    "p,e,parts,t,m,v",
    [(2, 2, (2, 2), 1, 6, 1), (3, 2, (3, 3, 3), 1, 1680, 1), (2, 1, (1, 1), 1, 2, 1)],
)
def test_multinomial_examples(p, e, parts, t, m, v):
    assert multinomial(parts) == m
    r = multinomial_valuation_check(p, e, parts)
    assert (r.t, r.valuation, r.holds) == (t, v, True)


def test_multinomial_bad_parts():
    with pytest.raises(PartsSumMismatch):
        multinomial_valuation_check(2, 2, (1, 2))
    with pytest.raises(PartsSumMismatch):
        multinomial_valuation_check(3, 1, (3, 0))


def compositions(total, max_parts):
    for k in range(1, max_parts + 1):
        for cut in itertools.combinations(range(1, total), k - 1):
            bounds = (0,) + cut + (total,)
            yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_multinomial_divisibility_exhaustive(p):
    for e in range(1, 4):
        for parts in compositions(p**e, 4):
            if len(parts) == 1:
                continue
            assert multinomial_valuation_check(p, e, parts).holds


@settings(max_examples=40, deadline=None)
@given(small_maps(qs=(2, 3, 4, 5), ns=(1, 2), max_domain=27))
def test_power_sum_matches_value_lifts(f):
    ext = extension_make(f.field, f.nvars)
    p = f.field.p
    for k in (1, 2, p, p * p, ext.top.q - 1, 2 * p):
        _, a = power_sum(f, ext, k)
        _, b = teichmuller_of_values(f, ext, k)
        assert a == b


@settings(max_examples=40, deadline=None)
@given(small_maps(qs=(2, 3, 4, 5), ns=(1, 2, 3), max_domain=27))
def test_u_properties(f):
    q, n = f.q, f.nvars
    ext = extension_make(f.field, n)
    r = u_invariant(f, ext)
    size = value_set(f).cardinality
    if not r.found:
        # x^3 + x^2 over F_2 and the like: constant as functions
        assert size == 1
        return
    for k in range(1, r.u):
        c, s = power_sum(f, ext, k)
        assert c.is_zero_mod(s, vp(k, f.field.p) + 1)
    assert r.u >= omega(f).omega
    assert r.u >= mu(f).mu * (q - 1)
    if size == q**n:
        assert r.u == q**n - 1
    else:
        assert size <= q**n - r.u


def test_univariate_u_window():
    rng = random.Random(7)
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27):
        F = field_of(q)
        for _ in range(6):
            f = random_map(F, 1, rng, max_terms=3, max_degree=q - 1)
            d = max(e[0] for e in f.components[0].terms)
            u = u_invariant(f).u
            assert (q - 1) <= u * d and u <= q - 1


def test_u_permutation_over_extension():
    # squaring is the Frobenius of F_4, and (x1, x2) -> (x1^2, x2 + x1) is triangular
    F4 = field_make(2, 2)
    f = parse_map("vars:2; f1 = x1^2; f2 = x2 + x1", F4)
    assert value_set(f).is_permutation
    assert u_invariant(f).u == 15
