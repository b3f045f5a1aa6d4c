"""Newton polytope invariants of a polynomial map.

mu    minimal dilation factor: least sum(alpha) over rational alpha >= 0 with
      sum(alpha_j D_j) a lattice point with every coordinate >= 1.
omega integral dilation factor: least sum(k) over k_j in {0..q-1} with
      sum(k_j D_j) a vector of positive multiples of q-1.
gamma least number of vectors from a set whose sum is strictly positive.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .poly import DegreeMatrix, Exponent, PolyMap, degree, degree_matrix, unused_variables
from .simplex import LPSolution, solve_lp


class UnusedVariables(Exception):
    def __init__(self, indices):
        self.indices = sorted(indices)
        super().__init__(f"map does not involve variables {self.indices}")


class UncoverableCoordinate(Exception):
    pass


class StateSpaceTooLarge(ValueError):
    pass


# omega's search space is (q-1)^n * 2^n residue/positivity states
MAX_OMEGA_STATES = 2**20


@dataclass(frozen=True)
class NewtonPolytope:
    nvars: int
    generators: tuple[Exponent, ...]

    @classmethod
    def of(cls, f: PolyMap) -> NewtonPolytope:
        cols = degree_matrix(f).columns
        return cls(f.nvars, ((0,) * f.nvars,) + cols)

    @property
    def columns(self) -> tuple[Exponent, ...]:
        return tuple(g for g in self.generators if any(g))

    def contains(self, point: Sequence, scale=1) -> bool:
        """Is point in scale * Delta?  Exact, via the LP form of membership."""
        if not any(point):
            return True
        if any(v < 0 for v in point):
            return False
        sol = lp_min_combination(self.columns, tuple(point))
        return sol is not None and sol.value <= scale


@dataclass(frozen=True)
class MuResult:
    mu: Fraction
    witness_target: Exponent
    witness_coeffs: tuple[Fraction, ...]


@dataclass(frozen=True)
class OmegaResult:
    omega: int
    witness_k: tuple[int, ...]


@dataclass(frozen=True)
class ChainReport:
    omega: int
    mu_times_qminus1: Fraction
    n_qminus1_over_d: Fraction
    holds: bool


def _columns(D) -> tuple[Exponent, ...]:
    if isinstance(D, DegreeMatrix):
        return D.columns
    return tuple(tuple(c) for c in D)


def lp_min_combination(D, target: Sequence[int]) -> LPSolution | None:
    """min sum(alpha) s.t. sum(alpha_j D_j) = target, alpha >= 0; None if infeasible."""
    cols = _columns(D)
    n = len(target)
    A = [[col[i] for col in cols] for i in range(n)]
    return solve_lp(A, list(target), [1] * len(cols))


def _check_cover(cols: Sequence[Exponent], nvars: int) -> None:
    missing = [i + 1 for i in range(nvars) if not any(c[i] for c in cols)]
    if missing:
        raise UnusedVariables(missing)


@lru_cache(maxsize=4096)
def mu_of_columns(cols: tuple[Exponent, ...], nvars: int) -> MuResult:
    """Exact mu for a set of exponent vectors.

    The optimum sum(alpha_j D_j) is itself a positive lattice point lying in
    mu * Delta, and mu <= nvars, so it is enough to scan integer targets in the
    box [1, nvars * d]^nvars.  Targets are visited in order of the per-coordinate
    lower bound max_i W_i / max_j D_ij, which lets the scan stop early.
    """
    _check_cover(cols, nvars)
    d = max(sum(c) for c in cols)
    row_max = [max(c[i] for c in cols) for i in range(nvars)]
    targets = itertools.product(range(1, nvars * d + 1), repeat=nvars)
    keyed = sorted(
        ((max(Fraction(w, r) for w, r in zip(W, row_max)), W) for W in targets),
    )
    best: tuple[Fraction, Exponent, LPSolution] | None = None
    for lb, W in keyed:
        if best is not None and lb >= best[0]:
            break
        sol = lp_min_combination(cols, W)
        if sol is not None and (best is None or sol.value < best[0]):
            best = (sol.value, W, sol)
    assert best is not None  # covering columns always give a feasible target
    return MuResult(best[0], best[1], best[2].x)


def _require_all_used(f: PolyMap) -> None:
    unused = unused_variables(f)
    if unused:
        raise UnusedVariables(unused)


def mu(f: PolyMap) -> MuResult:
    _require_all_used(f)
    return mu_of_columns(degree_matrix(f).columns, f.nvars)


@lru_cache(maxsize=4096)
def omega_of_columns(cols: tuple[Exponent, ...], nvars: int, q: int) -> OmegaResult:
    """Breadth-first search over (residues mod q-1, positivity mask).

    Each edge adds one copy of a column.  A shortest path never uses a column
    q or more times (dropping q-1 copies keeps residues and positivity and
    lowers the cost), so the {0..q-1} cap on multiplicities is non-binding;
    the normalisation below only guards that invariant.
    """
    _check_cover(cols, nvars)
    mod = q - 1
    if (2 * mod) ** nvars > MAX_OMEGA_STATES:
        raise StateSpaceTooLarge(f"omega search needs (2(q-1))^n <= {MAX_OMEGA_STATES}")
    full = (1 << nvars) - 1
    steps = []
    for col in cols:
        mask = sum(1 << i for i, e in enumerate(col) if e)
        steps.append((tuple(e % mod for e in col), mask))
    start = ((0,) * nvars, 0)
    parent: dict = {start: None}
    queue = deque([start])
    goal = None
    while queue:
        state = queue.popleft()
        if state[1] == full and not any(state[0]):
            goal = state
            break
        r, s = state
        for j, (res, mask) in enumerate(steps):
            nxt = (tuple((a + b) % mod for a, b in zip(r, res)), s | mask)
            if nxt not in parent:
                parent[nxt] = (state, j)
                queue.append(nxt)
    if goal is None:
        raise UncoverableCoordinate("no combination reaches (q-1)N^n")  # unreachable after cover check
    k = [0] * len(cols)
    node = goal
    while parent[node] is not None:
        node, j = parent[node]
        k[j] += 1
    for j, kj in enumerate(k):
        if kj >= q:
            k[j] = kj % mod or mod
    best = sum(k)
    k = _lexmin_witness(steps, nvars, mod, full, q, best) or k
    return OmegaResult(best, tuple(k))


def _lexmin_witness(steps, nvars, mod, full, q, best) -> list[int] | None:
    """Among optimal multiplicity vectors pick the lexicographically smallest (column order)."""
    m = len(steps)
    states = [
        (r, s)
        for r in itertools.product(range(mod), repeat=nvars)
        for s in range(full + 1)
    ]
    if len(states) * m * q > 5_000_000:
        return None
    inf = float("inf")

    def shift(state, j, c):
        res, mask = steps[j]
        r, s = state
        return tuple((a + c * b) % mod for a, b in zip(r, res)), (s | mask) if c else s

    # cost_to_go[j][state]: cheapest completion using columns j..m-1 only
    cost_to_go = [None] * (m + 1)
    cost_to_go[m] = {st: (0 if st[1] == full and not any(st[0]) else inf) for st in states}
    for j in range(m - 1, -1, -1):
        nxt = cost_to_go[j + 1]
        cost_to_go[j] = {
            st: min(c + nxt[shift(st, j, c)] for c in range(q)) for st in states
        }
    state = ((0,) * nvars, 0)
    if cost_to_go[0][state] != best:
        raise AssertionError("BFS and column DP disagree on omega")
    k = []
    remaining = best
    for j in range(m):
        for c in range(q):
            nxt = shift(state, j, c)
            if c + cost_to_go[j + 1][nxt] == remaining:
                k.append(c)
                state = nxt
                remaining -= c
                break
    return k


def omega(f: PolyMap) -> OmegaResult:
    _require_all_used(f)
    return omega_of_columns(degree_matrix(f).columns, f.nvars, f.q)


def gamma(vectors: Iterable[Sequence[int]]) -> int:
    vecs = [tuple(v) for v in vectors]
    if not vecs:
        raise UncoverableCoordinate("empty vector set")
    n = len(vecs[0])
    if any(not any(v[i] for v in vecs) for i in range(n)):
        raise UncoverableCoordinate("some coordinate is zero in every vector")
    for size in range(1, n + 1):
        for subset in itertools.combinations(vecs, size):
            if all(any(v[i] for v in subset) for i in range(n)):
                return size
    raise AssertionError("covering set larger than n")  # unreachable


def chain_check(f: PolyMap) -> ChainReport:
    """omega >= mu (q-1) >= n (q-1) / d, compared exactly."""
    q = f.q
    w = omega(f).omega
    m = mu(f).mu * (q - 1)
    lower = Fraction(f.nvars * (q - 1), degree(f))
    return ChainReport(w, m, lower, w >= m >= lower)
