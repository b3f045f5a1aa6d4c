"""Finite fields F_p, F_q = F_{p^a} and the extension F_{q^n} with an explicit F_q-basis.

Elements are plain ints: the coefficient vector (c_0, ..., c_{a-1}) in the power
basis of the modulus is packed as sum(c_i * p**i).  `FieldElement` wraps an int
together with its field for operator-style use; the hot loops elsewhere in the
package work on the packed ints directly.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

MAX_FIELD_ORDER = 2**16


class FieldError(Exception):
    pass


class NotPrime(FieldError):
    pass


class ReducibleModulus(FieldError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class FieldMismatch(FieldError):
    pass


class NotInBaseField(FieldError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split q = p**a, raising NotPrime if q is not a prime power."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    a = 0
    while q % p == 0:
        q //= p
        a += 1
    if q != 1:
        raise NotPrime(f"{q * p**a} is not a prime power")
    return p, a


# --- dense polynomials over F_p, coefficient lists low degree first ---------

def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmod(f: list[int], g: list[int], p: int) -> list[int]:
    f = _trim([c % p for c in f])
    g = _trim([c % p for c in g])
    inv = pow(g[-1], -1, p)
    while len(f) >= len(g):
        c = f[-1] * inv % p
        shift = len(f) - len(g)
        for i, gc in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gc) % p
        _trim(f)
    return f


def _pmulmod(f: list[int], g: list[int], m: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    prod = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                prod[i + j] += a * b
    return _pmod(prod, m, p)


def _ppowmod(f: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(list(f), m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def _pgcd(f: list[int], g: list[int], p: int) -> list[int]:
    f = _trim([c % p for c in f])
    g = _trim([c % p for c in g])
    while g:
        f, g = g, _pmod(f, g, p)
    return f


def is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Irreducibility of a monic polynomial over F_p.

    A degree-a polynomial is irreducible iff gcd(m, x^{p^i} - x) = 1 for all
    1 <= i <= a/2.
    """
    m = list(modulus)
    a = len(m) - 1
    if a == 1:
        return True
    if m[0] % p == 0:
        return False
    xp = [0, 1]
    for _ in range(a // 2):
        xp = _ppowmod(xp, p, m, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(m, diff, p)) > 1:
            return False
    return True


def default_modulus(p: int, a: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree a (low degree compared first)."""
    for low in itertools.product(range(p), repeat=a):
        cand = tuple(low) + (1,)
        if is_irreducible(cand, p):
            return cand
    raise ReducibleModulus(f"no irreducible of degree {a} over F_{p}")  # unreachable


@dataclass(frozen=True)
class FieldSpec:
    """The field F_{p^a} = F_p[t]/(modulus).  Elements are packed ints in [0, q)."""

    p: int
    a: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")
        if self.a < 1:
            raise FieldError("extension degree must be >= 1")
        if self.p**self.a > MAX_FIELD_ORDER:
            raise FieldError(f"field order {self.p}^{self.a} exceeds {MAX_FIELD_ORDER}")
        mod = tuple(int(c) % self.p for c in self.modulus)
        if len(mod) != self.a + 1 or mod[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {self.a}")
        object.__setattr__(self, "modulus", mod)
        if not is_irreducible(mod, self.p):
            raise ReducibleModulus(f"modulus {mod} is reducible over F_{self.p}")

    @property
    def q(self) -> int:
        return self.p**self.a

    def __repr__(self):
        return f"FieldSpec(p={self.p}, a={self.a}, modulus={self.modulus})"

    # -- coordinates ----------------------------------------------------------

    def coeffs(self, x: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.a):
            x, r = divmod(x, self.p)
            out.append(r)
        return tuple(out)

    def from_coeffs(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.a:
            coeffs = _pmod(coeffs, list(self.modulus), self.p)
        x = 0
        for c in reversed(coeffs):
            x = x * self.p + int(c) % self.p
        return x

    @property
    def generator(self) -> int:
        """The residue class t of the modulus variable."""
        if self.a == 1:
            return (-self.modulus[0]) % self.p
        return self.p

    def elements(self) -> range:
        return range(self.q)

    def element(self, x) -> FieldElement:
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldMismatch("element belongs to another field")
            return x
        if isinstance(x, int):
            if self.a == 1:
                return FieldElement(self, x % self.p)
            if not 0 <= x < self.q:
                raise FieldError(f"packed element {x} out of range for q={self.q}")
            return FieldElement(self, x)
        return FieldElement(self, self.from_coeffs(x))

    def scalar(self, c: int) -> int:
        """Image of the integer c in the prime subfield."""
        return c % self.p

    # -- tables ---------------------------------------------------------------

    def _times_t(self, x: int) -> int:
        c = self.coeffs(x)
        top = c[-1]
        shifted = (0,) + c[:-1]
        return self.from_coeffs(
            [(s - top * m) % self.p for s, m in zip(shifted, self.modulus)]
        )

    def _slow_mul(self, x: int, y: int) -> int:
        return self.from_coeffs(
            _pmulmod(list(self.coeffs(x)), list(self.coeffs(y)), list(self.modulus), self.p)
        )

    def _slow_pow(self, x: int, e: int) -> int:
        return self.from_coeffs(
            _ppowmod(list(self.coeffs(x)), e, list(self.modulus), self.p)
        )

    @cached_property
    def primitive_element(self) -> int:
        n = self.q - 1
        factors = prime_factors(n)
        for g in range(1, self.q):
            if all(self._slow_pow(g, n // r) != 1 for r in factors):
                return g
        raise FieldError("no primitive element")  # unreachable for a field

    @cached_property
    def _tables(self) -> tuple[list[int], list[int]]:
        q, g = self.q, self.primitive_element
        exp = [0] * (2 * (q - 1))
        log = [-1] * q
        if self.a == 1:
            step = lambda x: x * g % self.p
        else:
            # multiply by g as a combination of shifts by t
            gc = self.coeffs(g)

            def step(x):
                acc = [0] * self.a
                y = x
                for c in gc:
                    if c:
                        for i, yc in enumerate(self.coeffs(y)):
                            acc[i] += c * yc
                    y = self._times_t(y)
                return self.from_coeffs([v % self.p for v in acc])
        x = 1
        for i in range(q - 1):
            exp[i] = exp[i + q - 1] = x
            log[x] = i
            x = step(x)
        if x != 1:
            raise FieldError("primitive element has wrong order")
        return exp, log

    @property
    def exp_table(self) -> list[int]:
        return self._tables[0]

    @property
    def log_table(self) -> list[int]:
        return self._tables[1]

    @cached_property
    def np_tables(self) -> tuple[np.ndarray, np.ndarray]:
        exp, log = self._tables
        return np.array(exp, dtype=np.int64), np.array(log, dtype=np.int64)

    @cached_property
    def _add_table(self) -> list[list[int]] | None:
        if self.a == 1 or self.p == 2 or self.q > 256:
            return None
        return [[self._digit_add(x, y) for y in range(self.q)] for x in range(self.q)]

    def _digit_add(self, x: int, y: int) -> int:
        out, scale = 0, 1
        for _ in range(self.a):
            x, rx = divmod(x, self.p)
            y, ry = divmod(y, self.p)
            out += ((rx + ry) % self.p) * scale
            scale *= self.p
        return out

    # -- arithmetic on packed ints -------------------------------------------

    def add(self, x: int, y: int) -> int:
        if self.a == 1:
            return (x + y) % self.p
        if self.p == 2:
            return x ^ y
        table = self._add_table
        if table is not None:
            return table[x][y]
        return self._digit_add(x, y)

    def neg(self, x: int) -> int:
        if self.a == 1:
            return -x % self.p
        if self.p == 2:
            return x
        return self.from_coeffs([-c for c in self.coeffs(x)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        if self.a == 1:
            return x * y % self.p
        exp, log = self._tables
        return exp[log[x] + log[y]]

    def inv(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("zero has no inverse")
        if self.a == 1:
            return pow(x, -1, self.p)
        exp, log = self._tables
        return exp[(-log[x]) % (self.q - 1)]

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(x), -e)
        if e == 0:
            return 1
        if x == 0:
            return 0
        if self.a == 1:
            return pow(x, e, self.p)
        exp, log = self._tables
        return exp[log[x] * e % (self.q - 1)]

    def sum(self, xs) -> int:
        acc = 0
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def format(self, x: int) -> str:
        """Text form used by the map grammar: an int, or a parenthesised polynomial in t."""
        if x < self.p:
            return str(x)
        parts = []
        for i, c in reversed(list(enumerate(self.coeffs(x)))):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return "(" + " + ".join(parts) + ")"


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _other(self, y) -> int:
        if isinstance(y, FieldElement):
            if y.field != self.field:
                raise FieldMismatch("operands belong to different fields")
            return y.value
        if isinstance(y, int):
            return self.field.scalar(y)
        return NotImplemented

    def __add__(self, y):
        return FieldElement(self.field, self.field.add(self.value, self._other(y)))

    __radd__ = __add__

    def __sub__(self, y):
        return FieldElement(self.field, self.field.sub(self.value, self._other(y)))

    def __rsub__(self, y):
        return FieldElement(self.field, self.field.sub(self._other(y), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, y):
        return FieldElement(self.field, self.field.mul(self.value, self._other(y)))

    __rmul__ = __mul__

    def __truediv__(self, y):
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(self._other(y))))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"GF({self.field.q})<{self.field.format(self.value)}>"


@lru_cache(maxsize=None)
def _field_cached(p: int, a: int, modulus: tuple[int, ...] | None) -> FieldSpec:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if modulus is None:
        modulus = default_modulus(p, a)
    return FieldSpec(p, a, modulus)


def field_make(p: int, a: int = 1, modulus=None) -> FieldSpec:
    """Build F_{p^a}; without a modulus the lexicographically smallest irreducible is used."""
    return _field_cached(p, a, None if modulus is None else tuple(int(c) for c in modulus))


def arith(op: str, x: FieldElement, y=None) -> FieldElement:
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "neg":
        return -x
    if op == "inv":
        return x.inverse()
    if op == "pow":
        return x**y
    raise ValueError(f"unknown op {op!r}")


# --- extension F_{q^n} / F_q ------------------------------------------------


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [v * inv % p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                c = rows[i][col]
                rows[i] = [(v - c * w) % p for v, w in zip(rows[i], rows[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class ExtensionCtx:
    """F_{q^n} realised as a single extension of F_p, with F_q embedded and a basis e_1..e_n."""

    base: FieldSpec
    n: int
    top: FieldSpec
    embed_table: tuple[int, ...]
    basis: tuple[int, ...]
    _restrict: dict = field(repr=False, compare=False, hash=False)

    @property
    def q(self) -> int:
        return self.base.q

    def embed(self, x: int) -> int:
        return self.embed_table[x]

    def restrict(self, y: int) -> int:
        """Inverse of embed; raises NotInBaseField for elements outside F_q."""
        try:
            return self._restrict[y]
        except KeyError:
            raise NotInBaseField(f"{self.top.format(y)} does not lie in F_{self.q}") from None

    def from_coords(self, coords) -> int:
        top = self.top
        acc = 0
        for c, e in zip(coords, self.basis):
            acc = top.add(acc, top.mul(self.embed(c), e))
        return acc

    @cached_property
    def _coord_table(self) -> dict[int, tuple[int, ...]]:
        return {
            self.from_coords(c): c
            for c in itertools.product(range(self.q), repeat=self.n)
        }

    def to_coords(self, y: int) -> tuple[int, ...]:
        return self._coord_table[y]

    def frobenius(self, y: int, i: int = 1) -> int:
        return self.top.pow(y, self.q**i)


def _basis_independent(base: FieldSpec, top: FieldSpec, embed_table, basis) -> bool:
    # F_q-independence of e_j  <=>  {embed(t^i) * e_j} spans F_p^{a n}
    t = base.generator
    rows = []
    for e in basis:
        for i in range(base.a):
            rows.append(list(top.coeffs(top.mul(embed_table[base.pow(t, i)], e))))
    return _rank_mod_p(rows, top.p) == top.a


@lru_cache(maxsize=None)
def extension_make(base: FieldSpec, n: int) -> ExtensionCtx:
    if n < 1:
        raise FieldError("extension degree n must be >= 1")
    if n == 1:
        top = base
    else:
        top = field_make(base.p, base.a * n)
    # embedding: send the base generator t to a root of base.modulus in top
    root = None
    for y in range(top.q):
        acc = 0
        for c in reversed(base.modulus):
            acc = top.add(top.mul(acc, y), top.scalar(c))
        if acc == 0:
            root = y
            break
    if root is None:
        raise FieldError("base modulus has no root in the top field")
    embed_table = []
    for x in range(base.q):
        acc = 0
        for c in reversed(base.coeffs(x)):
            acc = top.add(top.mul(acc, root), top.scalar(c))
        embed_table.append(acc)
    embed_table = tuple(embed_table)

    candidates = [top.generator, top.primitive_element] + list(range(2, top.q))
    basis = None
    for beta in candidates:
        cand = tuple(top.pow(beta, i) for i in range(n))
        if _basis_independent(base, top, embed_table, cand):
            basis = cand
            break
    if basis is None:
        raise FieldError("no power basis found")  # unreachable
    restrict = {y: x for x, y in enumerate(embed_table)}
    return ExtensionCtx(base, n, top, embed_table, basis, restrict)


def norm_value(ctx: ExtensionCtx, x: int) -> int:
    """Field norm F_{q^n} -> F_q, returned as a base-field element."""
    e = (ctx.top.q - 1) // (ctx.q - 1)
    return ctx.restrict(ctx.top.pow(x, e))
