"""Partitions, Grassmannian contexts, and skew shapes.

Conventions used throughout the package: a partition is a weakly
decreasing tuple of positive integers (trailing zeros are stripped on
construction), drawn in English notation with row 1 on top.  The
cohomology of G(k,n), the Grassmannian of projective k-planes in P^n,
is indexed by the partitions whose diagram fits in a box with k+1 rows
and n-k columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ContainmentError, ShapeError


class Partition(tuple):
    """A weakly decreasing tuple of nonnegative integers, stored without
    trailing zeros.  Being a tuple subclass it hashes, compares, and
    unpacks like the underlying tuple."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise ShapeError(f"partition parts must be integers, got {p!r}")
            if p < 0:
                raise ShapeError(f"partition parts must be nonnegative, got {p}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ShapeError(f"partition parts must be weakly decreasing, got {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        """Total number of boxes."""
        return sum(self)

    def part(self, i: int) -> int:
        """The i-th part, 1-indexed; zero past the last row."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def contains(self, other: "Partition") -> bool:
        """Containment of diagrams, row by row."""
        return all(self.part(i) >= other.part(i) for i in range(1, len(other) + 1))

    def conjugate(self) -> "Partition":
        """Transpose of the diagram across its main diagonal."""
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p >= j) for j in range(1, self[0] + 1))

    def diagram(self, box_char: str = "*") -> str:
        """ASCII Young diagram, one character per box, rows left-justified."""
        return "\n".join(box_char * p for p in self)

    def to_json(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"Partition{tuple(self)!r}"


@dataclass(frozen=True)
class GrassContext:
    """The Grassmannian G(k,n) of projective k-planes in P^n."""

    k: int
    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or not isinstance(self.n, int):
            raise ShapeError("k and n must be integers")
        if not 0 <= self.k <= self.n - 1:
            raise ShapeError(f"need 0 <= k <= n-1, got k={self.k}, n={self.n}")

    @property
    def rows(self) -> int:
        """Rows of the indexing box: k+1."""
        return self.k + 1

    @property
    def cols(self) -> int:
        """Columns of the indexing box: n-k."""
        return self.n - self.k

    @property
    def dim(self) -> int:
        """Complex dimension (k+1)(n-k), the top degree of the grading."""
        return self.rows * self.cols

    def __str__(self) -> str:
        return f"G({self.k},{self.n})"


def fits_in_box(a: Partition, ctx: GrassContext) -> bool:
    """Whether the diagram of a fits in the (k+1) x (n-k) box of ctx."""
    return len(a) <= ctx.rows and (not a or a[0] <= ctx.cols)


def dual_context(ctx: GrassContext) -> GrassContext:
    """Context of the isomorphic dual Grassmannian G(n-k-1, n).

    The isomorphism transposes the indexing box, so Schubert classes
    correspond under partition conjugation.
    """
    return GrassContext(ctx.n - ctx.k - 1, ctx.n)


def add_rowwise(a: Partition, b: Partition) -> Partition:
    """Componentwise sum of two partitions, padding with zeros."""
    rows = max(len(a), len(b))
    summed = tuple(a.part(i) + b.part(i) for i in range(1, rows + 1))
    # weakly decreasing is automatic for valid inputs; Partition() re-checks
    return Partition(summed)


@dataclass(frozen=True)
class SkewShape:
    """The difference outer/inner of two nested partitions."""

    outer: Partition
    inner: Partition

    def __post_init__(self) -> None:
        if not self.outer.contains(self.inner):
            raise ContainmentError(
                f"{tuple(self.outer)} does not contain {tuple(self.inner)}"
            )

    @property
    def box_count(self) -> int:
        return self.outer.weight - self.inner.weight

    @property
    def row_count(self) -> int:
        return len(self.outer)

    def row_span(self, i: int) -> tuple[int, int]:
        """Column range of row i as (first, last), 1-indexed, inclusive.

        An empty row yields first > last.
        """
        return self.inner.part(i) + 1, self.outer.part(i)

    def row_length(self, i: int) -> int:
        return self.outer.part(i) - self.inner.part(i)

    def boxes(self) -> Iterator[tuple[int, int]]:
        """All (row, col) pairs, row-major, columns ascending."""
        for i in range(1, self.row_count + 1):
            first, last = self.row_span(i)
            for j in range(first, last + 1):
                yield i, j

    def __contains__(self, pos: object) -> bool:
        if not (isinstance(pos, tuple) and len(pos) == 2):
            return False
        i, j = pos
        first, last = self.row_span(i)
        return 1 <= i <= self.row_count and first <= j <= last

    def __str__(self) -> str:
        return f"{tuple(self.outer)}/{tuple(self.inner)}"


def skew(outer: Partition, inner: Partition) -> SkewShape:
    """The skew shape outer/inner.  Raises ContainmentError when the
    inner diagram is not contained in the outer one."""
    return SkewShape(outer, inner)
