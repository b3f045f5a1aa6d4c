"""Arithmetic in the unramified extension Z_{q^n} modulo p^N.

An element is a tuple of `degree` ints in [0, p^N), coordinates in the power
basis of the top field's modulus lifted coefficientwise to Z/p^N.  Since the
extension is unramified, an element is divisible by p^j iff every coordinate is.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .gf import ExtensionCtx, FieldSpec, extension_make, field_make, prime_power
from .poly import PolyMap
from .valueset import DomainTooLarge

MAX_SUM_DOMAIN = 2**12

PadicElement = tuple[int, ...]


class PartsSumMismatch(ValueError):
    pass


def vp(x: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if x == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


@dataclass(frozen=True)
class PadicCtx:
    p: int
    precision: int
    modulus: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def pN(self) -> int:
        return self.p**self.precision

    @classmethod
    def for_field(cls, top: FieldSpec, precision: int) -> PadicCtx:
        # the same coefficient integers, read in Z/p^N
        return cls(top.p, precision, top.modulus)

    def zero(self) -> PadicElement:
        return (0,) * self.degree

    def one(self) -> PadicElement:
        return (1,) + (0,) * (self.degree - 1)

    def from_int(self, c: int) -> PadicElement:
        return (c % self.pN,) + (0,) * (self.degree - 1)

    def lift_digits(self, coeffs) -> PadicElement:
        return tuple(int(c) % self.pN for c in coeffs)

    def reduce(self, x: PadicElement) -> tuple[int, ...]:
        return tuple(c % self.p for c in x)

    def add(self, x: PadicElement, y: PadicElement) -> PadicElement:
        M = self.pN
        return tuple((a + b) % M for a, b in zip(x, y))

    def mul(self, x: PadicElement, y: PadicElement) -> PadicElement:
        D, M = self.degree, self.pN
        prod = [0] * (2 * D - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    prod[i + j] += a * b
        mod = self.modulus
        for k in range(2 * D - 2, D - 1, -1):
            c = prod[k]
            if c:
                for i in range(D):
                    prod[k - D + i] -= c * mod[i]
        return tuple(v % M for v in prod[:D])

    def pow(self, x: PadicElement, e: int) -> PadicElement:
        result = self.one()
        while e:
            if e & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            e >>= 1
        return result

    def valuation(self, x: PadicElement) -> int:
        """min v_p over coordinates, capped at the precision."""
        return min((vp(c, self.p) for c in x if c), default=self.precision)

    def is_zero_mod(self, x: PadicElement, j: int) -> bool:
        m = self.p**j
        return all(c % m == 0 for c in x)


def teichmuller_lift(ctx: PadicCtx, x_coeffs, Q: int | None = None) -> PadicElement:
    """The root of unity (or 0) congruent to x, accurate mod p^N.

    Q is the order of the residue field (p^degree by default); y -> y^Q gains
    one p-adic digit per step, so N-1 iterations suffice.
    """
    if Q is None:
        Q = ctx.p**ctx.degree
    y = ctx.lift_digits(x_coeffs)
    for _ in range(ctx.precision - 1):
        y = ctx.pow(y, Q)
    return y


class _LiftedMap:
    """Teichmuller data for S_k(f): lifted coefficients, points and basis, at one precision."""

    def __init__(self, f: PolyMap, ext: ExtensionCtx, precision: int):
        top = ext.top
        self.ctx = PadicCtx.for_field(top, precision)
        Q = top.q

        @lru_cache(maxsize=None)
        def lift_top(y: int) -> PadicElement:
            return teichmuller_lift(self.ctx, top.coeffs(y), Q)

        self.lift_top = lift_top
        self.f = f
        self.ext = ext
        self.basis = [lift_top(e) for e in ext.basis]
        self.point_lift = [lift_top(ext.embed(x)) for x in range(ext.q)]

    def value(self, point) -> PadicElement:
        """sum_i lift(f_i)(lift(x)) * lift(e_i)."""
        c = self.ctx
        xs = [self.point_lift[x] for x in point]
        total = c.zero()
        for comp, e in zip(self.f.components, self.basis):
            acc = c.zero()
            for exp, coef in comp.terms.items():
                term = self.lift_top(self.ext.embed(coef))
                for xi, k in zip(xs, exp):
                    if k:
                        term = c.mul(term, c.pow(xi, k))
                acc = c.add(acc, term)
            total = c.add(total, c.mul(acc, e))
        return total

    def values(self) -> list[PadicElement]:
        n, q = self.f.nvars, self.f.q
        return [self.value(pt) for pt in itertools.product(range(q), repeat=n)]


def _check_sum_domain(f: PolyMap) -> None:
    if f.q**f.nvars > MAX_SUM_DOMAIN:
        raise DomainTooLarge(f"power sums limited to q^n <= {MAX_SUM_DOMAIN}")


def _default_ext(f: PolyMap, ext: ExtensionCtx | None) -> ExtensionCtx:
    return ext if ext is not None else extension_make(f.field, f.nvars)


def power_sum(f: PolyMap, ext: ExtensionCtx | None, k: int) -> tuple[PadicCtx, PadicElement]:
    """S_k(f) mod p^{v_p(k)+1}, returned with the context it lives in."""
    if k < 1:
        raise ValueError("k must be positive")
    _check_sum_domain(f)
    ext = _default_ext(f, ext)
    lifted = _LiftedMap(f, ext, vp(k, f.field.p) + 1)
    c = lifted.ctx
    total = c.zero()
    for v in lifted.values():
        total = c.add(total, c.pow(v, k))
    return c, total


@dataclass(frozen=True)
class USearchResult:
    u: int | None
    cap: int
    nonzero_sum_valuation: int | None

    @property
    def found(self) -> bool:
        return self.u is not None


def u_invariant(f: PolyMap, ext: ExtensionCtx | None = None, cap: int | None = None) -> USearchResult:
    """Smallest k <= cap with S_k(f) not divisible by pk.

    All values are computed once at the precision needed by the largest k and
    reduced per k; that is the same residue as recomputing at v_p(k)+1 digits.
    """
    _check_sum_domain(f)
    ext = _default_ext(f, ext)
    p = f.field.p
    if cap is None:
        cap = f.q**f.nvars - 1
    top_prec = max(vp(k, p) for k in range(1, cap + 1)) + 1 if cap >= 1 else 1
    lifted = _LiftedMap(f, ext, top_prec)
    c = lifted.ctx
    vals = [v for v in lifted.values() if any(v)]
    powers = list(vals)
    for k in range(1, cap + 1):
        if k > 1:
            powers = [c.mul(a, b) for a, b in zip(powers, vals)]
        N = vp(k, p) + 1
        M = p**N
        total = [0] * c.degree
        for v in powers:
            for i, x in enumerate(v):
                total[i] += x
        total = [t % M for t in total]
        if any(total):
            val = min(vp(t, p) for t in total if t)
            return USearchResult(k, cap, val)
    return USearchResult(None, cap, None)


def char_sum(q: int, k: int) -> int:
    """sum over the Teichmuller set of F_q of x^k, as an exact integer."""
    p, a = prime_power(q)
    F = field_make(p, a)
    # q < p^(a+1), so this precision pins down 0, q-1 and q
    ctx = PadicCtx.for_field(F, a + 1)
    total = ctx.zero()
    for x in range(q):
        lift = teichmuller_lift(ctx, F.coeffs(x), q)
        total = ctx.add(total, ctx.pow(lift, k))
    if any(total[1:]):
        raise ArithmeticError("character sum is not a rational integer")
    return total[0]


def multinomial(parts) -> int:
    out = math.factorial(sum(parts))
    for a in parts:
        out //= math.factorial(a)
    return out


@dataclass(frozen=True)
class MultinomialCheck:
    t: int
    valuation: int
    holds: bool


def multinomial_valuation_check(p: int, e: int, parts) -> MultinomialCheck:
    """If p^(e-t) exactly divides every part of p^e, then p^t divides the multinomial."""
    parts = tuple(parts)
    if sum(parts) != p**e or any(a < 1 for a in parts):
        raise PartsSumMismatch(f"parts {parts} are not a composition of {p}^{e}")
    t = e - min(vp(a, p) for a in parts)
    v = vp(multinomial(parts), p)
    return MultinomialCheck(t, v, v >= t)


def teichmuller_of_values(f: PolyMap, ext: ExtensionCtx, k: int) -> tuple[PadicCtx, PadicElement]:
    """Independent route to S_k mod pk: sum of Teichmuller lifts of the values g(x)^k.

    Agrees with power_sum because a = b mod p implies a^(p^e) = b^(p^e) mod p^(e+1).
    """
    from .poly import combine

    g = combine(f, ext)
    top = ext.top
    c = PadicCtx.for_field(top, vp(k, top.p) + 1)
    total = c.zero()
    for pt in itertools.product(range(ext.q), repeat=ext.n):
        y = g([ext.embed(x) for x in pt])
        total = c.add(total, c.pow(teichmuller_lift(c, top.coeffs(y), top.q), k))
    return c, total
