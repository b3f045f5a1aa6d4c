"""Generators for the sharp example families and the two-dimensional polytope pictures."""
from __future__ import annotations

from .gf import FieldSpec, extension_make, field_make, prime_power
from .poly import PolyMap, SparsePoly, monomial, parse_map, render, variable


class BadParams(ValueError):
    pass


EXAMPLE_NAMES = ("cusick-muller", "norm-map", "zan-cao", "polytope-f", "polytope-h")


def field_directive(F: FieldSpec) -> str:
    mod = ",".join(str(c) for c in F.modulus)
    return f"# field: q={F.q} modulus={mod}"


def map_text(f: PolyMap) -> str:
    """Map in the text grammar, preceded by a comment naming its field."""
    return field_directive(f.field) + "\n" + render(f)


def cusick_muller(q: int, k: int) -> PolyMap:
    """(x + 1) x^(q-1) = x^q + x^(q-1) over F_{q^k}."""
    try:
        p, a = prime_power(q)
    except Exception as exc:
        raise BadParams(str(exc)) from exc
    if k < 1:
        raise BadParams("k must be >= 1")
    F = field_make(p, a * k)
    return PolyMap(F, 1, [SparsePoly(F, 1, {(q,): 1, (q - 1,): 1})])


def norm_polynomial(F: FieldSpec, nu: int, nvars: int) -> SparsePoly:
    """The norm F_{q^nu} -> F_q as a polynomial in x_1..x_nu (embedded among nvars variables).

    Expanded as the product of the Frobenius conjugates sum_j x_j e_j^(q^i),
    whose coefficients are then brought back down to F_q.
    """
    ext = extension_make(F, nu)
    top = ext.top
    prod = monomial(top, nvars, (0,) * nvars)
    for i in range(nu):
        form = SparsePoly(
            top,
            nvars,
            [
                (tuple(int(v == j) for v in range(nvars)), ext.frobenius(e, i))
                for j, e in enumerate(ext.basis)
            ],
        )
        prod = prod * form
    return prod.map_coeffs(ext.restrict, F)


def norm_map(q: int, n: int, a: int) -> PolyMap:
    """(x_1, ..., x_{n-1}, N(x_1..x_{n-1})^a x_n) over F_q."""
    if n < 2 or a < 1:
        raise BadParams("norm-map needs n >= 2 and a >= 1")
    try:
        p, e = prime_power(q)
    except Exception as exc:
        raise BadParams(str(exc)) from exc
    F = field_make(p, e)
    N = norm_polynomial(F, n - 1, n)
    last = (N**a) * variable(F, n, n)
    comps = [variable(F, n, i) for i in range(1, n)] + [last]
    return PolyMap(F, n, comps)


def zan_cao(a: int = 1) -> PolyMap:
    """x^7 + a x over F_19."""
    F = field_make(19)
    return PolyMap(F, 1, [SparsePoly(F, 1, {(7,): 1, (1,): a})])


def polytope_f(q: int = 5) -> PolyMap:
    F = field_make(*prime_power(q))
    return parse_map("vars:2\nf1 = x1 + x1^3*x2\nf2 = x1 + x1^3*x2\n", F)


def polytope_h(q: int = 5) -> PolyMap:
    F = field_make(*prime_power(q))
    return parse_map("vars:2\nf1 = x1^4 + x2^4\nf2 = x1^4 + x2^4\n", F)


def make_example(name: str, q: int | None = None, n: int | None = None,
                 a: int | None = None, k: int | None = None) -> PolyMap:
    if name == "cusick-muller":
        return cusick_muller(q or 2, k or 2)
    if name == "norm-map":
        return norm_map(q or 3, n or 2, a if a is not None else 1)
    if name == "zan-cao":
        return zan_cao(a if a is not None else 1)
    if name == "polytope-f":
        return polytope_f(q or 5)
    if name == "polytope-h":
        return polytope_h(q or 5)
    raise BadParams(f"unknown example {name!r}; choose from {', '.join(EXAMPLE_NAMES)}")
