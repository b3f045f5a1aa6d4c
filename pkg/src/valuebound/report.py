"""Invariant reports and bound verification for polynomial maps."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .dilation import StateSpaceTooLarge, chain_check, mu, omega
from .gf import FieldSpec
from .padic import MAX_SUM_DOMAIN, u_invariant
from .poly import PolyMap, SparsePoly, degree, render, unused_variables
from .valueset import MAX_DOMAIN, value_set

SCHEMA = "1"
U_DOMAIN_LIMIT = 27


def rational_json(x: Fraction | int) -> dict:
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


@dataclass(frozen=True)
class TheoremCheck:
    name: str
    bound: Fraction
    applicable: bool
    satisfied: bool

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "bound": rational_json(self.bound),
            "applicable": self.applicable,
            "satisfied": self.satisfied,
        }


def bound_checks(qn: int, q: int, n: int, d: int, mu_val: Fraction, omega_val: int | None,
                 size: int | None, u: int | None = None) -> list[TheoremCheck]:
    """Each bound reads |V_f| <= bound whenever f is not a permutation."""
    bounds = [
        ("degree_bound", qn - Fraction(n * (q - 1), d)),
        ("polytope_min_bound", qn - min(Fraction(q), mu_val * (q - 1))),
        ("polytope_bound", qn - mu_val * (q - 1)),
    ]
    if omega_val is not None:
        bounds.append(("integral_dilation_bound", Fraction(qn - omega_val)))
    if u is not None:
        bounds.append(("power_sum_bound", Fraction(qn - u)))
    checks = []
    for name, b in bounds:
        applicable = size is not None and size < qn
        checks.append(TheoremCheck(name, b, applicable, (not applicable) or size <= b))
    return checks


@dataclass
class InvariantReport:
    q: int
    n: int
    degree: int
    n_qminus1_over_d: Fraction
    mu: Fraction
    mu_witness_target: tuple[int, ...]
    omega: int | None
    omega_witness: tuple[int, ...] | None
    value_set_size: int | None
    is_permutation: bool | None
    u: int | None
    theorem_checks: list[TheoremCheck]
    notes: list[str] = field(default_factory=list)

    @property
    def mu_times_qminus1(self) -> Fraction:
        return self.mu * (self.q - 1)

    def to_json(self) -> dict:
        holds = self.mu_times_qminus1 >= self.n_qminus1_over_d
        if self.omega is not None:
            holds = holds and self.omega >= self.mu_times_qminus1
        return {
            "schema": SCHEMA,
            "q": self.q,
            "n": self.n,
            "degree": self.degree,
            "lower_chain": {
                "n_qminus1_over_d": rational_json(self.n_qminus1_over_d),
                "mu_times_qminus1": rational_json(self.mu_times_qminus1),
                "omega": self.omega,
                "holds": holds,
            },
            "mu": rational_json(self.mu),
            "mu_witness_target": list(self.mu_witness_target),
            "omega": self.omega,
            "omega_witness": None if self.omega_witness is None else list(self.omega_witness),
            "value_set_size": self.value_set_size,
            "is_permutation": self.is_permutation,
            "u": self.u,
            "theorem_checks": [c.to_json() for c in self.theorem_checks],
            "notes": list(self.notes),
        }


class EnvelopeError(Exception):
    pass


def invariant_report(f: PolyMap, with_value_set: bool = True, with_u: bool = False,
                     skip_heavy: bool = False) -> InvariantReport:
    """Compute every invariant of f.  Raises UnusedVariables / EnvelopeError."""
    q, n = f.q, f.nvars
    qn = q**n
    d = degree(f)
    mu_res = mu(f)
    notes = ["degree_bound uses q^n as the domain size"]
    try:
        om = omega(f)
    except StateSpaceTooLarge as exc:
        if not skip_heavy:
            raise EnvelopeError(str(exc)) from exc
        om = None
        notes.append("omega skipped: search space too large")
    size = perm = u = None
    if with_value_set:
        if qn > MAX_DOMAIN:
            if not skip_heavy:
                raise EnvelopeError(f"value set needs q^n <= {MAX_DOMAIN}, got {qn}")
            notes.append("value set skipped: domain too large")
        else:
            vs = value_set(f)
            size, perm = vs.cardinality, vs.is_permutation
    if with_u:
        if qn > MAX_SUM_DOMAIN:
            if not skip_heavy:
                raise EnvelopeError(f"U search needs q^n <= {MAX_SUM_DOMAIN}, got {qn}")
            notes.append("U skipped: domain too large")
        else:
            res = u_invariant(f)
            u = res.u
            if u is None:
                notes.append(f"U not found below cap {res.cap}")
    om_val = om.omega if om else None
    checks = bound_checks(qn, q, n, d, mu_res.mu, om_val, size, u)
    return InvariantReport(
        q=q, n=n, degree=d,
        n_qminus1_over_d=Fraction(n * (q - 1), d),
        mu=mu_res.mu, mu_witness_target=mu_res.witness_target,
        omega=om_val, omega_witness=om.witness_k if om else None,
        value_set_size=size, is_permutation=perm, u=u,
        theorem_checks=checks, notes=notes,
    )


# --- corpora ---------------------------------------------------------------

def random_map(F: FieldSpec, n: int, rng: random.Random, max_terms: int = 3,
               max_degree: int | None = None) -> PolyMap:
    """Sparse random map using every variable; redraws until it does."""
    if max_degree is None:
        max_degree = F.q + 2
    while True:
        comps = []
        for _ in range(n):
            terms = []
            for _ in range(rng.randint(1, max_terms)):
                total = rng.randint(0, max_degree)
                exp = [0] * n
                for _ in range(total):
                    exp[rng.randrange(n)] += 1
                terms.append((tuple(exp), rng.randrange(1, F.q)))
            comps.append(SparsePoly(F, n, terms))
        f = PolyMap(F, n, comps)
        if not unused_variables(f):
            return f


def all_low_degree_maps(F: FieldSpec, n: int, max_degree: int):
    """Every map whose components have total degree <= max_degree (all coefficient choices)."""
    monos = [
        e for e in itertools.product(range(max_degree + 1), repeat=n) if sum(e) <= max_degree
    ]
    polys = []
    for coeffs in itertools.product(range(F.q), repeat=len(monos)):
        polys.append(SparsePoly(F, n, [(m, c) for m, c in zip(monos, coeffs) if c]))
    for comps in itertools.product(polys, repeat=n):
        yield PolyMap(F, n, comps)


@dataclass
class MapCheck:
    """Everything verify needs to know about one map."""

    text: str
    q: int
    n: int
    degree: int
    value_set_size: int
    is_permutation: bool
    mu: Fraction
    omega: int
    u: int | None
    checks: list[TheoremCheck]
    chain_holds: bool

    @property
    def violations(self) -> list[str]:
        return [c.name for c in self.checks if not c.satisfied]


def check_map(f: PolyMap, with_u: bool = False) -> MapCheck:
    q, n = f.q, f.nvars
    qn = q**n
    d = degree(f)
    vs = value_set(f)
    mu_val = mu(f).mu
    om = omega(f).omega
    u = None
    if with_u and qn <= U_DOMAIN_LIMIT:
        u = u_invariant(f).u
    chain = chain_check(f)
    checks = bound_checks(qn, q, n, d, mu_val, om, vs.cardinality, u)
    return MapCheck(render(f), q, n, d, vs.cardinality, vs.is_permutation, mu_val, om, u,
                    checks, chain.holds)


@dataclass
class VerifySummary:
    maps_tested: int = 0
    permutations: int = 0
    skipped_unused_variables: int = 0
    violations: list[dict] = field(default_factory=list)
    chain_exceptions: list[dict] = field(default_factory=list)
    chain_checked: int = 0
    chain_below_n: int = 0

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "maps_tested": self.maps_tested,
            "permutations": self.permutations,
            "skipped_unused_variables": self.skipped_unused_variables,
            "chain_checked": self.chain_checked,
            "chain_below_n": self.chain_below_n,
            "violations": self.violations,
            "chain_exceptions": self.chain_exceptions,
        }


def verify_maps(maps, with_u: bool = False) -> VerifySummary:
    """Check every bound against brute force; the chain is enforced for d >= n
    and only archived when it fails for d < n."""
    summary = VerifySummary()
    for f in maps:
        if unused_variables(f) or all(c.is_constant() for c in f.components):
            summary.skipped_unused_variables += 1
            continue
        mc = check_map(f, with_u)
        summary.maps_tested += 1
        summary.permutations += mc.is_permutation
        for name in mc.violations:
            summary.violations.append(
                {"check": name, "q": mc.q, "map": mc.text, "value_set_size": mc.value_set_size}
            )
        qn = mc.q**mc.n
        if with_u and qn <= U_DOMAIN_LIMIT and mc.u is None and mc.value_set_size > 1:
            # only maps that are constant as functions have no nonvanishing sum
            summary.violations.append({"check": "u_not_found", "q": mc.q, "map": mc.text})
        if with_u and mc.u is not None:
            if mc.u < mc.omega:
                summary.violations.append({"check": "u_at_least_omega", "q": mc.q, "map": mc.text})
            if mc.is_permutation and mc.u != qn - 1:
                summary.violations.append({"check": "u_of_permutation", "q": mc.q, "map": mc.text})
        if mc.degree >= mc.n:
            summary.chain_checked += 1
            if not mc.chain_holds:
                summary.violations.append({"check": "dilation_chain", "q": mc.q, "map": mc.text})
        else:
            summary.chain_below_n += 1
            if not mc.chain_holds:
                summary.chain_exceptions.append({"q": mc.q, "map": mc.text})
    return summary


def random_corpus(qs, ns, count: int, seed: int, max_terms: int = 3):
    """`count` maps in total, cycling through the (q, n) pairs, from a seeded generator."""
    from .gf import field_make, prime_power

    rng = random.Random(seed)
    pairs = [(field_make(*prime_power(q)), n) for q in qs for n in ns]
    for i in range(count):
        F, n = pairs[i % len(pairs)]
        yield random_map(F, n, rng, max_terms=max_terms)
