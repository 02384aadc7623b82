"""Effective good divisibility of Grassmannians.

The effective good divisibility of a space is the largest d such that
no two nonzero effective classes x, y with deg x + deg y <= d multiply
to zero.  On G(k,n) it suffices to scan Schubert pairs: a product of
effective classes expands with nonnegative coefficients, so it vanishes
only if every Schubert-times-Schubert term in it vanishes.  The scan
here walks total degrees s = 2, 3, ... and checks every unordered basis
pair at each s until a vanishing pair appears; the answer is s - 1.

The pair check is independent of the witness construction: it asks the
tableau counter whether any target shape in the box supports an LR
filling, taking nothing from the certificate machinery.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product as iproduct
from typing import Optional, Sequence

from .cohomology import CohomologyClass, product, schubert_basis
from .errors import DegreeError, PreconditionError
from .partitions import GrassContext, Partition, skew
from .tableaux import has_lr_tableau


@dataclass(frozen=True)
class EdReport:
    """Outcome of the exhaustive scan: the divisibility value, the first
    vanishing pair found just above it, and how much work was done."""

    ctx: GrassContext
    ed_value: int
    minimal_vanishing_pair: tuple[Partition, Partition]
    pairs_checked: int
    elapsed_ms: float

    def to_json(self) -> dict:
        x, y = self.minimal_vanishing_pair
        return {
            "k": self.ctx.k,
            "n": self.ctx.n,
            "ed": self.ed_value,
            "vanishing_pair": [x.to_json(), y.to_json()],
            "pairs_checked": self.pairs_checked,
            "elapsed_ms": self.elapsed_ms,
        }


@dataclass(frozen=True)
class ZeroDivisorWitness:
    """Two nonzero classes with x * y = 0, each a small integer
    combination of Schubert classes."""

    ctx: GrassContext
    x: CohomologyClass
    y: CohomologyClass

    def to_json(self) -> dict:
        return {
            "k": self.ctx.k,
            "n": self.ctx.n,
            "x": self.x.to_json(),
            "y": self.y.to_json(),
        }


def _pair_vanishes(a: Partition, b: Partition, ctx: GrassContext) -> bool:
    # any in-box c over a admitting an LR filling of weight b keeps the
    # product alive; stop at the first one
    s = a.weight + b.weight
    if s > ctx.dim:
        return True
    for c in schubert_basis(ctx, s):
        if not c.contains(a):
            continue
        if has_lr_tableau(skew(c, a), tuple(b)):
            return False
    return True


def _scan_degree(args: tuple[int, int, int, int]) -> list[tuple[int, int]]:
    """Worker: return index pairs (i, j) at split (wa, wb) that vanish."""
    k, n, wa, wb = args
    ctx = GrassContext(k, n)
    left = schubert_basis(ctx, wa)
    right = schubert_basis(ctx, wb)
    bad = []
    for i, a in enumerate(left):
        inner = enumerate(right) if wa != wb else (
            (j, right[j]) for j in range(i, len(right))
        )
        for j, b in inner:
            if _pair_vanishes(a, b, ctx):
                bad.append((i, j))
    return bad


def _pairs_at_split(ctx: GrassContext, wa: int, wb: int) -> list[
    tuple[Partition, Partition]
]:
    left = schubert_basis(ctx, wa)
    right = schubert_basis(ctx, wb)
    if wa != wb:
        return [(a, b) for a in left for b in right]
    return [(left[i], right[j]) for i in range(len(left))
            for j in range(i, len(right))]


def _normalize_pair(a: Partition, b: Partition) -> tuple[Partition, Partition]:
    key = lambda p: (p.weight, tuple(p))
    return (a, b) if key(a) <= key(b) else (b, a)


def default_jobs() -> int:
    """Worker count for the scan, from GRASSCALC_JOBS (default 1)."""
    raw = os.environ.get("GRASSCALC_JOBS", "1")
    try:
        jobs = int(raw)
    except ValueError:
        return 1
    return max(jobs, 1)


def check_pair_nonvanishing(s: int, ctx: GrassContext) -> Optional[
    tuple[Partition, Partition]
]:
    """First vanishing unordered Schubert pair with |a| + |b| = s, or
    None when every pair at that total degree survives.

    Pairs are scanned split by split (|a| = 1 up, |a| <= |b|), each
    basis in the lex-descending order used everywhere else, so "first"
    is well defined and independent of worker scheduling.
    """
    if s < 2 or s > 2 * ctx.dim:
        raise DegreeError(f"total degree {s} out of range for {ctx}")
    for wa in range(1, s // 2 + 1):
        wb = s - wa
        if wa > ctx.dim or wb > ctx.dim:
            continue
        for a, b in _pairs_at_split(ctx, wa, wb):
            if _pair_vanishes(a, b, ctx):
                return _normalize_pair(a, b)
    return None


def effective_good_divisibility(
    ctx: GrassContext, jobs: Optional[int] = None
) -> EdReport:
    """Exhaustively certify the effective good divisibility of G(k,n).

    Scans total degrees upward; the full batch of pairs at each degree
    is checked even after a hit, so pairs_checked is the same for any
    worker count.  For Grassmannians the returned value equals n, with
    the scan itself as the certificate.
    """
    if jobs is None:
        jobs = default_jobs()
    start = time.perf_counter()
    pairs_checked = 0
    for s in range(2, 2 * ctx.dim + 1):
        splits = []
        for wa in range(1, s // 2 + 1):
            wb = s - wa
            if wb > ctx.dim:
                continue
            splits.append((wa, wb))
        batch: list[tuple[Partition, Partition]] = []
        if jobs > 1 and len(splits) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                tasks = [(ctx.k, ctx.n, wa, wb) for wa, wb in splits]
                for (wa, wb), bad in zip(splits, pool.map(_scan_degree, tasks)):
                    left = schubert_basis(ctx, wa)
                    right = schubert_basis(ctx, wb)
                    pairs_checked += _split_size(ctx, wa, wb)
                    for i, j in bad:
                        batch.append((left[i], right[j]))
        else:
            for wa, wb in splits:
                for a, b in _pairs_at_split(ctx, wa, wb):
                    pairs_checked += 1
                    if _pair_vanishes(a, b, ctx):
                        batch.append((a, b))
        if batch:
            elapsed = (time.perf_counter() - start) * 1000.0
            first = _normalize_pair(*batch[0])
            return EdReport(ctx, s - 1, first, pairs_checked, elapsed)
    raise PreconditionError(f"no vanishing pair exists on {ctx}")


def _split_size(ctx: GrassContext, wa: int, wb: int) -> int:
    la = len(schubert_basis(ctx, wa))
    lb = len(schubert_basis(ctx, wb))
    if wa != wb:
        return la * lb
    return la * (lb + 1) // 2


def gd_upper_bound_witness(
    ctx: GrassContext,
    degree_sum: int,
    coeff_bound: int = 3,
    support_bound: int = 3,
) -> Optional[ZeroDivisorWitness]:
    """Search for nonzero pure-degree classes x, y with x * y = 0 and
    deg x + deg y = degree_sum, coefficients in [-coeff_bound,
    coeff_bound] and at most support_bound basis terms each.  The
    classes need not be effective; this probes plain good divisibility,
    not the effective variant.

    A witness bounds good divisibility above by degree_sum - 1.
    Exhausting the search without a hit proves nothing: it only means
    no witness exists within these bounds.
    """
    if degree_sum < 2 or degree_sum > 2 * ctx.dim:
        raise DegreeError(f"degree sum {degree_sum} out of range for {ctx}")
    if coeff_bound < 1 or support_bound < 1:
        raise PreconditionError("bounds must be positive")
    for dx in range(1, degree_sum // 2 + 1):
        dy = degree_sum - dx
        if dx > ctx.dim or dy > ctx.dim:
            continue
        for x in _candidates(ctx, dx, coeff_bound, support_bound):
            for y in _candidates(ctx, dy, coeff_bound, support_bound):
                if dx == dy and _class_key(y) < _class_key(x):
                    continue
                prod = product(x, y)
                if prod.is_zero:
                    return ZeroDivisorWitness(ctx, x, y)
    return None


def _class_key(x: CohomologyClass) -> tuple:
    return tuple(sorted((tuple(p), m) for p, m in x.coeffs.items()))


def _candidates(ctx: GrassContext, degree: int, coeff_bound: int,
                support_bound: int):
    """Nonzero integer combinations at a fixed degree, smallest support
    first, leading coefficient positive (a global sign never changes
    whether a product vanishes)."""
    basis = schubert_basis(ctx, degree)
    rest_range = [v for v in range(-coeff_bound, coeff_bound + 1) if v != 0]
    for size in range(1, min(support_bound, len(basis)) + 1):
        for support in combinations(range(len(basis)), size):
            for lead in range(1, coeff_bound + 1):
                for tail in iproduct(rest_range, repeat=size - 1):
                    coeffs = {basis[support[0]]: lead}
                    for idx, v in zip(support[1:], tail):
                        coeffs[basis[idx]] = v
                    yield CohomologyClass(ctx, degree, coeffs)
