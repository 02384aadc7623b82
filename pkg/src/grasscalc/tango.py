"""Constancy conditions for hypothetical morphisms between Grassmannians.

A morphism G(k,n) -> G(l,m) pulls the universal subbundle and quotient
bundle back to the source, and the tautological exact sequence forces
their total Chern classes to be inverse to each other: lam(t) mu(t) = 1
in H*(G(k,n)).  The pulled-back classes are heavily constrained:

* lam has no terms above degree l+1, and each nonzero lam_i is
  effective;
* mu has no terms above degree m-l, and each nonzero mu_j is effective
  or antieffective.

When the source's effective good divisibility exceeds m these
constraints collapse to lam = mu = 1, which is the constancy theorem.
The search below enumerates all bounded-coefficient candidates for lam
and keeps those whose inverse satisfies the mu constraints.  It checks
necessary conditions only: a surviving nontrivial system does NOT
certify that a morphism exists, it just fails to rule one out.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Iterable, Sequence

from .cohomology import CohomologyClass, product, schubert_basis, unit, zero
from .errors import PreconditionError, SearchBudgetExceeded
from .partitions import GrassContext


@dataclass(frozen=True)
class TargetSpec:
    """Target Grassmannian G(l,m), projective convention."""

    l: int
    m: int

    def __post_init__(self):
        if not (0 <= self.l <= self.m - 1):
            raise PreconditionError(
                f"target needs 0 <= l <= m-1, got l={self.l}, m={self.m}"
            )

    @property
    def rank_q(self) -> int:
        return self.l + 1

    @property
    def rank_s(self) -> int:
        return self.m - self.l

    def __str__(self):
        return f"G({self.l},{self.m})"


@dataclass(frozen=True)
class ChernSeries:
    """Graded total Chern class: one CohomologyClass per degree 0..cap.

    Term 0 must be the unit; degrees beyond cap read as zero.
    """

    ctx: GrassContext
    terms: tuple[CohomologyClass, ...]
    cap: int

    def __post_init__(self):
        if len(self.terms) != self.cap + 1:
            raise PreconditionError("series needs one term per degree 0..cap")
        if not (self.terms[0].degree == 0 and self.terms[0] == unit(self.ctx)):
            raise PreconditionError("series must start with the unit class")
        for d, t in enumerate(self.terms):
            if t.degree != d and not t.is_zero:
                raise PreconditionError(f"term {d} has degree {t.degree}")
            if t.ctx != self.ctx:
                raise PreconditionError("series terms must share one ring")

    def term(self, d: int) -> CohomologyClass:
        if d < 0:
            raise PreconditionError("negative degree")
        if d > self.cap:
            return zero(self.ctx, d)
        return self.terms[d]

    def max_nonzero_degree(self) -> int:
        for d in range(self.cap, 0, -1):
            if not self.terms[d].is_zero:
                return d
        return 0

    def to_json(self) -> list:
        return [t.to_json() for t in self.terms]


def series_from_terms(ctx: GrassContext, nonzero: Sequence[CohomologyClass],
                      cap: int) -> ChernSeries:
    """Assemble a series from its positive-degree terms (unit implied)."""
    by_degree = {t.degree: t for t in nonzero if not t.is_zero}
    terms = [unit(ctx)]
    for d in range(1, cap + 1):
        terms.append(by_degree.get(d, zero(ctx, d)))
    return ChernSeries(ctx, tuple(terms), cap)


def series_inverse(lam: ChernSeries, cap: int) -> ChernSeries:
    """Multiplicative inverse through degree cap:
    mu_0 = 1 and mu_j = -(lam_1 mu_{j-1} + ... + lam_j mu_0)."""
    ctx = lam.ctx
    mu: list[CohomologyClass] = [unit(ctx)]
    for j in range(1, cap + 1):
        acc = zero(ctx, j)
        for i in range(1, j + 1):
            acc = acc + product(lam.term(i), mu[j - i])
        mu.append(-acc)
    return ChernSeries(ctx, tuple(mu), cap)


def series_product(s: ChernSeries, t: ChernSeries, cap: int) -> ChernSeries:
    if s.ctx != t.ctx:
        raise PreconditionError("series from different rings")
    ctx = s.ctx
    out = []
    for d in range(cap + 1):
        acc = zero(ctx, d)
        for i in range(d + 1):
            acc = acc + product(s.term(i), t.term(d - i))
        out.append(acc)
    return ChernSeries(ctx, tuple(out), cap)


def max_nonzero_degrees(lam: ChernSeries, mu: ChernSeries) -> tuple[int, int]:
    """Top nonzero degrees (i_0, j_0) of the two series.  When both are
    positive, lam(t) mu(t) = 1 forces lam_{i_0} mu_{j_0} = 0 in top
    degree, the engine of the constancy contradiction."""
    if lam.ctx != mu.ctx:
        raise PreconditionError("series from different rings")
    return lam.max_nonzero_degree(), mu.max_nonzero_degree()


def constancy_forced(ed_value: int, target: TargetSpec) -> bool:
    """True when every morphism from a source with the given effective
    good divisibility to the target must be constant: ed > m."""
    if ed_value < 0:
        raise PreconditionError("ed must be nonnegative")
    return ed_value > target.m


def constancy_for_flag_target(ed_value: int, ls: Sequence[int], m: int) -> bool:
    """Constancy toward a flag variety F(l_1,...,l_r; m).

    Composing with the projections reduces to the Grassmannian factors,
    so the answer is constancy_forced against every (l_j, m), which
    collapses to the single test ed > m."""
    if not ls:
        raise PreconditionError("flag target needs at least one step")
    prev = -1
    for l in ls:
        if not (0 <= l <= m - 1) or l <= prev:
            raise PreconditionError(
                f"flag steps must satisfy 0 <= l_1 < ... < l_r <= {m - 1}"
            )
        prev = l
    return all(constancy_forced(ed_value, TargetSpec(l, m)) for l in ls)


_EFFECTIVE = "effective"
_ANTIEFFECTIVE = "antieffective"
_ZERO = "zero"
_MIXED = "mixed"


def _sign_status(x: CohomologyClass) -> str:
    if x.is_zero:
        return _ZERO
    if x.is_effective:
        return _EFFECTIVE
    if x.is_antieffective:
        return _ANTIEFFECTIVE
    return _MIXED


@dataclass(frozen=True)
class ChernSystem:
    """One surviving candidate: lam through degree l+1, its inverse mu
    through degree m-l, and the observed sign pattern of the mu terms.

    flags[j] is the status of mu_j; the sign pattern is recorded, not
    prescribed, since only per-term purity is required.
    """

    lam: ChernSeries
    mu: ChernSeries
    flags: tuple[str, ...]

    @property
    def is_trivial(self) -> bool:
        return self.lam.max_nonzero_degree() == 0

    def to_json(self) -> dict:
        return {
            "lambda": self.lam.to_json(),
            "mu": self.mu.to_json(),
            "flags": list(self.flags),
        }


class ChernSearchResult(list):
    """List of ChernSystem plus how the search went."""

    def __init__(self, systems: Iterable[ChernSystem] = (), *,
                 nodes_visited: int = 0, node_budget: int = 0,
                 coeff_bound: int = 0):
        super().__init__(systems)
        self.nodes_visited = nodes_visited
        self.node_budget = node_budget
        self.coeff_bound = coeff_bound

    def to_json(self) -> dict:
        return {
            "systems": [s.to_json() for s in self],
            "nodes_visited": self.nodes_visited,
            "node_budget": self.node_budget,
            "coeff_bound": self.coeff_bound,
        }


def _degree_choices(ctx: GrassContext, d: int, coeff_bound: int):
    """All effective classes of degree d with coefficients bounded by
    coeff_bound, zero class first, deterministic order."""
    if d > ctx.dim:
        return [zero(ctx, d)]
    basis = schubert_basis(ctx, d)
    out = []
    for vec in iproduct(range(coeff_bound + 1), repeat=len(basis)):
        coeffs = {p: v for p, v in zip(basis, vec) if v}
        out.append(CohomologyClass(ctx, d, coeffs))
    return out


def chern_system_search(
    ctx: GrassContext,
    target: TargetSpec,
    coeff_bound: int,
    node_budget: int = 1_000_000,
) -> ChernSearchResult:
    """Enumerate candidate Chern systems for morphisms ctx -> target.

    Walks lam degree by degree (1 through l+1), each term an effective
    class with Schubert coefficients in [0, coeff_bound].  mu_d only
    depends on lam_1..lam_d, so each partial assignment already fixes a
    prefix of mu and violations prune the branch early: mu_d must be
    zero above degree m-l and sign-pure below it.  Surviving leaves get
    mu completed to the ring's top degree and rechecked.  The trivial
    system lam = 1 is enumerated first and always survives.

    Every lam-term assignment costs one node; exceeding node_budget
    raises SearchBudgetExceeded carrying the systems found so far.
    """
    if coeff_bound < 0:
        raise PreconditionError("coeff_bound must be nonnegative")
    if node_budget < 1:
        raise PreconditionError("node_budget must be positive")

    lam_cap = target.rank_q
    mu_cap = target.rank_s
    top = ctx.dim
    choices = [_degree_choices(ctx, d, coeff_bound)
               for d in range(1, lam_cap + 1)]
    found: list[ChernSystem] = []
    nodes = 0

    def mu_next(lam_terms: list[CohomologyClass],
                mu_terms: list[CohomologyClass], j: int) -> CohomologyClass:
        acc = zero(ctx, j)
        for i in range(1, j + 1):
            lam_i = lam_terms[i] if i < len(lam_terms) else zero(ctx, i)
            acc = acc + product(lam_i, mu_terms[j - i])
        return -acc

    def mu_ok(x: CohomologyClass, j: int) -> bool:
        if j > mu_cap:
            return x.is_zero
        return _sign_status(x) != _MIXED

    def walk(depth: int, lam_terms: list[CohomologyClass],
             mu_terms: list[CohomologyClass]):
        nonlocal nodes
        if depth > lam_cap:
            mu_full = list(mu_terms)
            for j in range(depth, top + 1):
                nxt = mu_next(lam_terms, mu_full, j)
                if not mu_ok(nxt, j):
                    return
                mu_full.append(nxt)
            lam = series_from_terms(ctx, lam_terms[1:], lam_cap)
            mu = series_from_terms(ctx, mu_full[1:], mu_cap)
            flags = tuple(_sign_status(mu.term(j)) for j in range(mu_cap + 1))
            found.append(ChernSystem(lam, mu, flags))
            return
        for cand in choices[depth - 1]:
            nodes += 1
            if nodes > node_budget:
                raise SearchBudgetExceeded(
                    f"node budget {node_budget} exceeded",
                    partial=list(found),
                    nodes_visited=nodes,
                )
            nxt = mu_next(lam_terms + [cand], mu_terms, depth)
            if not mu_ok(nxt, depth):
                continue
            walk(depth + 1, lam_terms + [cand], mu_terms + [nxt])

    try:
        walk(1, [unit(ctx)], [unit(ctx)])
    except SearchBudgetExceeded as exc:
        exc.node_budget = node_budget
        raise
    return ChernSearchResult(found, nodes_visited=nodes,
                             node_budget=node_budget, coeff_bound=coeff_bound)
