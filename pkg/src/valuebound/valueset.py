"""Exhaustive value sets V_f = Im(f).

The domain F_q^n is walked as a mixed-radix counter in blocks; each block is
evaluated with numpy on packed field ints and the image is recorded in a
boolean bitset indexed by the mixed-radix rank of the value tuple.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import ExtensionCtx, FieldSpec
from .poly import PolyMap, SparsePoly

MAX_DOMAIN = 2**24
BLOCK = 2**16


class DomainTooLarge(Exception):
    pass


@dataclass(frozen=True)
class ValueSetResult:
    cardinality: int
    domain_size: int

    @property
    def is_permutation(self) -> bool:
        return self.cardinality == self.domain_size

    @property
    def missed_count(self) -> int:
        return self.domain_size - self.cardinality


# --- vectorised field arithmetic -------------------------------------------

def vadd(F: FieldSpec, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    if F.a == 1:
        return (x + y) % F.p
    if F.p == 2:
        return x ^ y
    out = np.zeros_like(x)
    scale = 1
    for _ in range(F.a):
        out += (((x // scale) % F.p + (y // scale) % F.p) % F.p) * scale
        scale *= F.p
    return out


def vmul_log(F: FieldSpec, logs: np.ndarray, zero: np.ndarray) -> np.ndarray:
    """Field element from a log array, 0 where `zero` is set."""
    exp, _ = F.np_tables
    vals = exp[logs % (F.q - 1)]
    vals[zero] = 0
    return vals


def eval_grid(h: SparsePoly, coords: list[np.ndarray]) -> np.ndarray:
    """Evaluate h at many points at once; coords[i] holds the packed x_i values."""
    F = h.field
    _, log = F.np_tables
    size = len(coords[0]) if coords else 1
    logs = [log[c] for c in coords]
    zeros = [c == 0 for c in coords]
    acc = np.zeros(size, dtype=np.int64)
    for exp, c in h.terms.items():
        lg = np.full(size, log[c], dtype=np.int64)
        zero = np.zeros(size, dtype=bool)
        for i, e in enumerate(exp):
            if e:
                lg += e * logs[i]
                zero |= zeros[i]
        acc = vadd(F, acc, vmul_log(F, lg, zero))
    return acc


def _domain_block(q: int, n: int, start: int, stop: int) -> list[np.ndarray]:
    idx = np.arange(start, stop, dtype=np.int64)
    out = []
    for _ in range(n):
        idx, r = np.divmod(idx, q)
        out.append(r)
    return out


def _check_domain(q: int, n: int) -> int:
    size = q**n
    if size > MAX_DOMAIN:
        raise DomainTooLarge(f"domain of size {q}^{n} = {size} exceeds {MAX_DOMAIN}")
    return size


def image_bitset(f: PolyMap) -> np.ndarray:
    q, n = f.q, f.nvars
    size = _check_domain(q, n)
    seen = np.zeros(size, dtype=bool)
    weights = [q**i for i in range(n)]
    for start in range(0, size, BLOCK):
        coords = _domain_block(q, n, start, min(size, start + BLOCK))
        rank = np.zeros(len(coords[0]), dtype=np.int64)
        for comp, w in zip(f.components, weights):
            rank += eval_grid(comp, coords) * w
        seen[rank] = True
    return seen


def value_set(f: PolyMap) -> ValueSetResult:
    seen = image_bitset(f)
    return ValueSetResult(int(seen.sum()), len(seen))


def image(f: PolyMap) -> set[tuple[int, ...]]:
    """The value set as explicit tuples (small domains only)."""
    seen = image_bitset(f)
    q, n = f.q, f.nvars
    out = set()
    for r in np.flatnonzero(seen):
        r = int(r)
        tup = []
        for _ in range(n):
            r, d = divmod(r, q)
            tup.append(d)
        out.add(tuple(tup))
    return out


def value_set_of_univariate(g: SparsePoly, ctx: ExtensionCtx) -> ValueSetResult:
    """|g(F_{q^n})| for g over F_{q^n} in the coordinates x_1..x_n in F_q."""
    q, n = ctx.q, ctx.n
    size = _check_domain(q, n)
    embed = np.array(ctx.embed_table, dtype=np.int64)
    seen = np.zeros(ctx.top.q, dtype=bool)
    for start in range(0, size, BLOCK):
        coords = [embed[c] for c in _domain_block(q, n, start, min(size, start + BLOCK))]
        seen[eval_grid(g, coords)] = True
    return ValueSetResult(int(seen.sum()), size)


def value_set_naive(f: PolyMap) -> int:
    """Pure-Python reference count, used as a cross-check in tests."""
    import itertools

    return len({f(pt) for pt in itertools.product(range(f.q), repeat=f.nvars)})
