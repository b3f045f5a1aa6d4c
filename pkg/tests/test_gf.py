import itertools

import pytest
from hypothesis import given, strategies as st

from valuebound.gf import (
    DivisionByZero,
    FieldMismatch,
    NotPrime,
    ReducibleModulus,
    arith,
    extension_make,
    field_make,
    norm_value,
)
from conftest import SMALL_Q, field_of


def brute_irreducible(mod, p):
    """No monic factor of degree 1..a-1, by trial multiplication of all pairs."""
    a = len(mod) - 1

    def mul(f, g):
        out = [0] * (len(f) + len(g) - 1)
        for i, x in enumerate(f):
            for j, y in enumerate(g):
                out[i + j] = (out[i + j] + x * y) % p
        return tuple(out)

    for d in range(1, a):
        for lo1 in itertools.product(range(p), repeat=d):
            for lo2 in itertools.product(range(p), repeat=a - d):
                if mul(lo1 + (1,), lo2 + (1,)) == tuple(mod):
                    return False
    return True


def test_field_make_default_f4():
    assert field_make(2, 2).modulus == (1, 1, 1)


def test_default_modulus_is_lex_smallest_irreducible():
    for p, a in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)]:
        mod = field_make(p, a).modulus
        assert brute_irreducible(mod, p)
        for lo in itertools.product(range(p), repeat=a):
            if lo == mod[:-1]:
                break
            assert not brute_irreducible(lo + (1,), p)


def test_prime_field_convention():
    F = field_make(19)
    assert F.modulus == (0, 1)
    assert F.q == 19
    assert F.element(25).value == 6


def test_reducible_and_not_prime():
    with pytest.raises(ReducibleModulus):
        field_make(2, 2, (1, 0, 1))
    with pytest.raises(NotPrime):
        field_make(15)


def test_f4_alpha_squared():
    F = field_make(2, 2)
    alpha = F.element((0, 1))
    assert (alpha * alpha).coeffs == (1, 1)


def test_inverse_mod_19():
    F = field_make(19)
    assert arith("inv", F.element(7)).value == 11
    with pytest.raises(DivisionByZero):
        F.element(0).inverse()


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        field_make(3).element(1) + field_make(5).element(1)


@pytest.mark.parametrize("q", SMALL_Q + [11, 13, 16])
def test_field_axioms_exhaustive(q):
    F = field_of(q)
    els = range(q)
    for x in els:
        if x:
            assert F.mul(x, F.inv(x)) == 1
            assert F.pow(x, q - 1) == 1
        assert F.add(x, F.neg(x)) == 0
        for y in els:
            assert F.add(x, y) == F.add(y, x)
            assert F.mul(x, y) == F.mul(y, x)
    for x, y, z in itertools.product(els, repeat=3):
        assert F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z))
        assert F.add(F.add(x, y), z) == F.add(x, F.add(y, z))
        assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))


def test_table_mul_matches_schoolbook():
    F = field_make(3, 3)
    for x in range(F.q):
        for y in range(F.q):
            assert F.mul(x, y) == F._slow_mul(x, y)


@given(st.sampled_from([4, 8, 9, 25, 27]), st.integers(0, 10**6), st.integers(0, 10**30))
def test_pow_big_exponents(q, x, e):
    F = field_of(q)
    x %= q
    # schoolbook square-and-multiply on polynomials, no log tables
    assert F.pow(x, e) == F._slow_pow(x, e)


def test_extension_f2_to_f4():
    ctx = extension_make(field_make(2), 2)
    assert ctx.top.q == 4
    assert ctx.basis == (1, 2)  # {1, alpha}


def test_extension_degree_one_is_identity():
    F = field_make(5)
    ctx = extension_make(F, 1)
    assert ctx.top == F and ctx.basis == (1,)
    assert list(ctx.embed_table) == list(range(5))


def test_extension_f3_embeds_constants():
    ctx = extension_make(field_make(3), 2)
    assert ctx.top.q == 9
    assert ctx.embed(2) == 2


@pytest.mark.parametrize("q,n", [(2, 2), (2, 3), (3, 2), (4, 2), (2, 4), (4, 3), (8, 2), (3, 3), (16, 1)])
def test_embedding_is_injective_homomorphism(q, n):
    ctx = extension_make(field_of(q), n)
    F, T = ctx.base, ctx.top
    assert len(set(ctx.embed_table)) == q
    for c in range(F.p):
        assert ctx.embed(c) == c
    for x in range(q):
        for y in range(q):
            assert ctx.embed(F.mul(x, y)) == T.mul(ctx.embed(x), ctx.embed(y))
            assert ctx.embed(F.add(x, y)) == T.add(ctx.embed(x), ctx.embed(y))
    # basis: coordinates give a bijection F_q^n -> F_{q^n}
    assert len({ctx.from_coords(c) for c in itertools.product(range(q), repeat=n)}) == T.q


def test_norm_f4_over_f2():
    ctx = extension_make(field_make(2), 2)
    alpha = 2
    assert norm_value(ctx, alpha) == 1
    assert norm_value(ctx, 0) == 0
    assert norm_value(ctx, 1) == 1


@pytest.mark.parametrize("q,nu", [(2, 2), (2, 3), (2, 6), (3, 2), (4, 2), (4, 3), (8, 2), (7, 2)])
def test_norm_multiplicative_and_in_base(q, nu):
    ctx = extension_make(field_of(q), nu)
    T = ctx.top
    conj_product = {}
    for x in range(T.q):
        nx = norm_value(ctx, x)  # raises NotInBaseField if the coercion fails
        assert (nx == 0) == (x == 0)
        # independent route: product of the Frobenius conjugates
        prod = 1
        for i in range(nu):
            prod = T.mul(prod, ctx.frobenius(x, i))
        assert ctx.embed(nx) == prod
        conj_product[x] = nx
    for x in range(T.q):
        for y in range(0, T.q, max(1, T.q // 16)):
            assert conj_product[T.mul(x, y)] == ctx.base.mul(conj_product[x], conj_product[y])
