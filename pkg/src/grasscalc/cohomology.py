"""The Schubert basis and ring structure of H*(G(k,n)).

Classes are integer combinations of Schubert cycles sigma_a, graded by
codimension |a|.  Products expand through Littlewood-Richardson tableau
counts; terms whose partition no longer fits the indexing box are
dropped, which is exactly the presentation of the cohomology of the
finite Grassmannian.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping

from .errors import ContextMismatch, DegreeError, ShapeError
from .partitions import GrassContext, Partition, SkewShape, fits_in_box, skew
from .tableaux import count_lr_tableaux


@lru_cache(maxsize=None)
def _partitions_in_box(rows: int, cols: int, weight: int) -> tuple[Partition, ...]:
    """Partitions of the given weight fitting a rows x cols box,
    lexicographically descending."""

    def emit(remaining: int, cap: int, rows_left: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if rows_left == 0 or cap == 0:
            return
        top = min(cap, remaining)
        for first in range(top, 0, -1):
            if first * rows_left < remaining:
                break
            for rest in emit(remaining - first, first, rows_left - 1):
                yield (first,) + rest

    return tuple(Partition(p) for p in emit(weight, cols, rows))


def schubert_basis(ctx: GrassContext, degree: int) -> list[Partition]:
    """The Schubert basis of H^{2*degree}, lexicographically descending."""
    if not 0 <= degree <= ctx.dim:
        raise DegreeError(f"degree {degree} outside 0..{ctx.dim} for {ctx}")
    return list(_partitions_in_box(ctx.rows, ctx.cols, degree))


def total_rank(ctx: GrassContext) -> int:
    """Total rank of the cohomology, summed over all degrees."""
    return sum(
        len(_partitions_in_box(ctx.rows, ctx.cols, d)) for d in range(ctx.dim + 1)
    )


@dataclass
class CohomologyClass:
    """An integer combination of Schubert cycles of one fixed degree.

    Zero coefficients are dropped on construction, so two classes are
    equal exactly when their contexts, degrees, and coefficient maps
    agree.  Degrees above the top of the grading are allowed but can
    only carry the zero class.
    """

    ctx: GrassContext
    degree: int
    coeffs: dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise DegreeError(f"degree must be nonnegative, got {self.degree}")
        cleaned: dict[Partition, int] = {}
        for a, coeff in self.coeffs.items():
            if not isinstance(a, Partition):
                a = Partition(a)
            if not isinstance(coeff, int) or isinstance(coeff, bool):
                raise ShapeError(f"coefficients must be integers, got {coeff!r}")
            if coeff == 0:
                continue
            if not fits_in_box(a, self.ctx):
                raise ShapeError(f"{tuple(a)} does not fit the box of {self.ctx}")
            if a.weight != self.degree:
                raise DegreeError(
                    f"{tuple(a)} has weight {a.weight}, expected degree {self.degree}"
                )
            cleaned[a] = coeff
        self.coeffs = cleaned

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_effective(self) -> bool:
        """All coefficients nonnegative (the zero class counts)."""
        return all(c > 0 for c in self.coeffs.values())

    @property
    def is_antieffective(self) -> bool:
        return all(c < 0 for c in self.coeffs.values())

    def terms(self) -> list[tuple[Partition, int]]:
        """(partition, coefficient) pairs in basis order."""
        order = {a: t for t, a in enumerate(schubert_basis(self.ctx, self.degree))} \
            if self.degree <= self.ctx.dim else {}
        return sorted(self.coeffs.items(), key=lambda item: order.get(item[0], 0))

    def coefficient(self, a: Partition) -> int:
        return self.coeffs.get(Partition(a), 0)

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        self._check_compatible(other)
        merged = dict(self.coeffs)
        for a, c in other.coeffs.items():
            merged[a] = merged.get(a, 0) + c
        return CohomologyClass(self.ctx, self.degree, merged)

    def __sub__(self, other: "CohomologyClass") -> "CohomologyClass":
        return self + (-other)

    def __neg__(self) -> "CohomologyClass":
        return CohomologyClass(
            self.ctx, self.degree, {a: -c for a, c in self.coeffs.items()}
        )

    def __mul__(self, other):
        if isinstance(other, CohomologyClass):
            return product(self, other)
        if isinstance(other, int) and not isinstance(other, bool):
            return CohomologyClass(
                self.ctx, self.degree, {a: other * c for a, c in self.coeffs.items()}
            )
        return NotImplemented

    __rmul__ = __mul__

    def _check_compatible(self, other: "CohomologyClass") -> None:
        if self.ctx != other.ctx:
            raise ContextMismatch(f"{self.ctx} vs {other.ctx}")
        if self.degree != other.degree:
            raise DegreeError(
                f"cannot combine degrees {self.degree} and {other.degree}"
            )

    def to_json(self) -> dict:
        return {
            "k": self.ctx.k,
            "n": self.ctx.n,
            "degree": self.degree,
            "terms": [
                {"partition": a.to_json(), "coeff": c} for a, c in self.terms()
            ],
        }

    @staticmethod
    def from_json(obj: Mapping) -> "CohomologyClass":
        ctx = GrassContext(obj["k"], obj["n"])
        coeffs = {
            Partition(t["partition"]): t["coeff"] for t in obj["terms"]
        }
        return CohomologyClass(ctx, obj["degree"], coeffs)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        bits = []
        for a, c in self.terms():
            label = "s" + "".join(f"[{p}]" for p in a) if a else "1"
            bits.append(f"{c}*{label}")
        return " + ".join(bits)


def schubert_class(a: Partition, ctx: GrassContext) -> CohomologyClass:
    """The cycle sigma_a as a cohomology class."""
    a = Partition(a)
    if not fits_in_box(a, ctx):
        raise ShapeError(f"{tuple(a)} does not fit the box of {ctx}")
    return CohomologyClass(ctx, a.weight, {a: 1})


def unit(ctx: GrassContext) -> CohomologyClass:
    return CohomologyClass(ctx, 0, {Partition(): 1})


def zero(ctx: GrassContext, degree: int = 0) -> CohomologyClass:
    return CohomologyClass(ctx, degree, {})


@lru_cache(maxsize=None)
def _expand_pair(
    a: tuple, b: tuple, rows: int, cols: int
) -> tuple[tuple[Partition, int], ...]:
    """Expansion of sigma_a * sigma_b in the box, as (partition, count)
    pairs over LR tableau counts of shape c/a and weight b."""
    a, b = Partition(a), Partition(b)
    out = []
    for c in _partitions_in_box(rows, cols, a.weight + b.weight):
        if not c.contains(a):
            continue
        mult = count_lr_tableaux(skew(c, a), tuple(b))
        if mult:
            out.append((c, mult))
    return tuple(out)


def product(x: CohomologyClass, y: CohomologyClass) -> CohomologyClass:
    """Cup product.  Degree sums beyond the top of the grading give the
    zero class outright."""
    if x.ctx != y.ctx:
        raise ContextMismatch(f"{x.ctx} vs {y.ctx}")
    ctx = x.ctx
    degree = x.degree + y.degree
    acc: dict[Partition, int] = {}
    if degree <= ctx.dim:
        for pa, ca in x.coeffs.items():
            for pb, cb in y.coeffs.items():
                for c, mult in _expand_pair(tuple(pa), tuple(pb), ctx.rows, ctx.cols):
                    acc[c] = acc.get(c, 0) + ca * cb * mult
    return CohomologyClass(ctx, degree, acc)


def _horizontal_extensions(a: Partition, p: int, rows: int, cols: int) -> list[Partition]:
    """Partitions c in the box with c/a a horizontal strip of p boxes."""
    out: list[Partition] = []
    height = min(rows, len(a) + 1)

    def grow(i: int, prefix: tuple[int, ...], left: int) -> None:
        if i > height:
            if left == 0:
                out.append(Partition(prefix))
            return
        low = a.part(i)
        # interlacing c_i <= a_{i-1} is the horizontal-strip condition;
        # it also keeps c weakly decreasing
        high = min(cols if i == 1 else a.part(i - 1), low + left)
        for c_i in range(high, low - 1, -1):
            grow(i + 1, prefix + (c_i,), left - (c_i - low))

    grow(1, (), p)
    return out


def pieri_product(x: CohomologyClass, p: int) -> CohomologyClass:
    """Multiplication by the one-row cycle sigma_(p), using only the
    horizontal-strip description.  Independent of the LR expansion, so
    it doubles as an oracle for it."""
    ctx = x.ctx
    if not 1 <= p <= ctx.cols:
        raise DegreeError(f"row length {p} outside 1..{ctx.cols} for {ctx}")
    acc: dict[Partition, int] = {}
    if x.degree + p <= ctx.dim:
        for a, coeff in x.coeffs.items():
            for c in _horizontal_extensions(a, p, ctx.rows, ctx.cols):
                acc[c] = acc.get(c, 0) + coeff
    return CohomologyClass(ctx, x.degree + p, acc)


def duality_pairing(a: Partition, b: Partition, ctx: GrassContext) -> int:
    """Coefficient of the top class in sigma_a * sigma_b.

    Defined only in complementary degrees; equals 1 exactly when b is
    the 180-degree rotated complement of a in the box.
    """
    a, b = Partition(a), Partition(b)
    for part in (a, b):
        if not fits_in_box(part, ctx):
            raise ShapeError(f"{tuple(part)} does not fit the box of {ctx}")
    if a.weight + b.weight != ctx.dim:
        raise DegreeError(
            f"pairing needs |a|+|b| = {ctx.dim}, got {a.weight + b.weight}"
        )
    top = Partition((ctx.cols,) * ctx.rows)
    return count_lr_tableaux(skew(top, a), tuple(b))


def betti_number(ctx: GrassContext, degree: int) -> int:
    """Rank of the degree piece; equals len(schubert_basis(ctx, degree))."""
    return len(schubert_basis(ctx, degree))


def total_rank_binomial(ctx: GrassContext) -> int:
    """Closed form C(n+1, k+1) for the total rank, for cross-checking."""
    return math.comb(ctx.n + 1, ctx.k + 1)
