"""Constructive nonvanishing certificates for Schubert products.

Whenever sigma_a * sigma_b has low enough total degree (|a| + |b| <= n
on G(k,n)), the product is nonzero, and this module builds an explicit
LR tableau exhibiting one nonzero structure constant.  The certificate
records which of two constructions produced it:

* simple: when a_1 + b_1 fits inside the box width, take c = a + b
  rowwise and fill row i of c/a with the entry i.

* marking: otherwise, grow a out to the box width with a greedy
  row-by-row marking.  First the strip between a and
  abar = (n-k, a_1, ..., a_k) is marked with b_1 ones, filling rows top
  to bottom, left to right.  Each later value i is marked into the
  two-row strip sitting directly under the previous step's marks: the
  region at rows (i, i+1) whose row capacities are the counts written
  at rows (i-1, i) in step i-1.  The greedy order makes the
  construction fully determined, and the final shape always has a full
  first row.

Contexts with 2k > n-1 are first moved to the dual Grassmannian (both
partitions conjugated), where one of the two cases applies.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import InternalError, PreconditionError, ShapeError
from .partitions import (
    GrassContext,
    Partition,
    SkewShape,
    add_rowwise,
    dual_context,
    fits_in_box,
    skew,
)
from .tableaux import SkewFilling, first_lr_tableau, is_lr_tableau, render_filling


class CaseTag(str, Enum):
    SIMPLE = "simple"
    MARKING = "marking"


@dataclass(frozen=True)
class MarkingStep:
    """One round of the marking construction.

    value is the entry written during the round, region_outer bounds the
    strip that was available, marks_per_row counts the boxes actually
    marked (indexed by absolute row, row 1 first), and result is the
    shape after the round.
    """

    value: int
    region_outer: Partition
    marks_per_row: tuple[int, ...]
    result: Partition

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "region_outer": self.region_outer.to_json(),
            "marks_per_row": list(self.marks_per_row),
            "result": self.result.to_json(),
        }


@dataclass
class WitnessCertificate:
    """A target shape c and an LR filling of c/a with weight b.

    Existence of the filling shows the structure constant of sigma_c in
    sigma_a * sigma_b is at least 1, so the product is nonzero.  For
    dualized certificates the construction ran on the conjugated data,
    stored in full under .dual, and the filling here was recovered in
    the original context.
    """

    ctx: GrassContext
    a: Partition
    b: Partition
    c: Partition
    case: CaseTag
    filling: SkewFilling
    trace: tuple[MarkingStep, ...] = ()
    dualized: bool = False
    dual: Optional["WitnessCertificate"] = None

    def render(self) -> str:
        """ASCII picture of the certified filling of c/a."""
        return render_filling(self.filling)

    def to_json(self) -> dict:
        return {
            "k": self.ctx.k,
            "n": self.ctx.n,
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "c": self.c.to_json(),
            "case": self.case.value,
            "dualized": self.dualized,
            "filling": self.filling.to_json(),
            "trace": [step.to_json() for step in self.trace],
            "dual": self.dual.to_json() if self.dual is not None else None,
        }


def _require(cond: bool, message: str) -> None:
    # construction invariants; a failure here is a bug, not bad input
    if not cond:
        raise InternalError(message)


def _check_inputs(a: Partition, b: Partition, ctx: GrassContext) -> None:
    for part in (a, b):
        if not fits_in_box(part, ctx):
            raise ShapeError(f"{tuple(part)} does not fit the box of {ctx}")


def witness_simple(a: Partition, b: Partition, ctx: GrassContext) -> WitnessCertificate:
    """Certificate for the case a_1 + b_1 <= n-k: c = a + b rowwise,
    row i of c/a filled with the entry i."""
    a, b = Partition(a), Partition(b)
    _check_inputs(a, b, ctx)
    if a.part(1) + b.part(1) > ctx.cols:
        raise PreconditionError(
            f"simple case needs a_1 + b_1 <= {ctx.cols}, "
            f"got {a.part(1) + b.part(1)}"
        )
    c = add_rowwise(a, b)
    rows = tuple((i,) * b.part(i) for i in range(1, len(c) + 1))
    filling = SkewFilling(skew(c, a), rows)
    _require(is_lr_tableau(filling, tuple(b)), "simple filling failed validation")
    return WitnessCertificate(ctx, a, b, c, CaseTag.SIMPLE, filling)


def witness_marking(a: Partition, b: Partition, ctx: GrassContext) -> WitnessCertificate:
    """Certificate for the case a_1 + b_1 > n-k via greedy row marking.

    Requires the normalization 2k <= n-1.  The result always has a full
    first row: c_1 = n-k.
    """
    a, b = Partition(a), Partition(b)
    _check_inputs(a, b, ctx)
    if 2 * ctx.k > ctx.n - 1:
        raise PreconditionError(
            f"marking case requires 2k <= n-1, got k={ctx.k}, n={ctx.n}"
        )
    if a.part(1) + b.part(1) <= ctx.cols:
        raise PreconditionError(
            f"marking case needs a_1 + b_1 > {ctx.cols}, "
            f"got {a.part(1) + b.part(1)}"
        )

    rows_n, cols_n = ctx.rows, ctx.cols
    marks: dict[tuple[int, int], int] = {}
    trace: list[MarkingStep] = []

    # round 1: strip between a and (n-k, a_1, ..., a_k), marked with 1s
    # greedily from the top row down, left to right inside each row
    abar = Partition((cols_n,) + tuple(a.part(i) for i in range(1, rows_n)))
    counts = [0] * rows_n
    left = b.part(1)
    for j in range(1, rows_n + 1):
        capacity = abar.part(j) - a.part(j)
        take = min(left, capacity)
        for col in range(a.part(j) + 1, a.part(j) + take + 1):
            marks[(j, col)] = 1
        counts[j - 1] = take
        left -= take
    _require(left == 0, "first marking round ran out of room")
    current = Partition(tuple(a.part(j) + counts[j - 1] for j in range(1, rows_n + 1)))
    trace.append(MarkingStep(1, abar, tuple(counts), current))

    # later rounds: value i goes in the two-row strip directly under the
    # marks of round i-1; capacities are the previous round's counts at
    # rows i and i+1's parents, i.e. (take1, take2) of round i-1.  At
    # the bottom of the box only the upper row exists.
    prev_pair = (counts[0], counts[1] if rows_n > 1 else 0)
    for i in range(2, rows_n + 1):
        b_i = b.part(i)
        if b_i == 0:
            break
        cap1, cap2 = prev_pair
        if i + 1 > rows_n:
            cap2 = 0
        _require(b_i <= cap1 + cap2, f"round {i} lacks capacity")
        take1 = min(b_i, cap1)
        take2 = b_i - take1
        base1, base2 = current.part(i), current.part(i + 1)
        _require(base2 + cap2 <= base1, f"round {i} region overlaps a column")
        region = [current.part(r) for r in range(1, rows_n + 1)]
        region[i - 1] += cap1
        if cap2:
            region[i] += cap2
        region_outer = Partition(tuple(region))
        for col in range(base1 + 1, base1 + take1 + 1):
            marks[(i, col)] = i
        for col in range(base2 + 1, base2 + take2 + 1):
            marks[(i + 1, col)] = i
        updated = [current.part(r) for r in range(1, rows_n + 1)]
        updated[i - 1] += take1
        if take2:
            updated[i] += take2
        current = Partition(tuple(updated))
        trace.append(MarkingStep(i, region_outer, tuple(
            take1 if r == i else take2 if r == i + 1 else 0
            for r in range(1, rows_n + 1)
        ), current))
        prev_pair = (take1, take2)

    c = current
    _require(c.part(1) == cols_n, "marking must fill the first row")
    _require(fits_in_box(c, ctx), "marked shape left the box")

    shape = skew(c, a)
    rows = []
    for r in range(1, len(c) + 1):
        first, last = shape.row_span(r)
        row = []
        for col in range(first, last + 1):
            _require((r, col) in marks, f"box ({r},{col}) never marked")
            row.append(marks[(r, col)])
        rows.append(tuple(row))
    filling = SkewFilling(shape, tuple(rows))
    _require(is_lr_tableau(filling, tuple(b)), "marking filling failed validation")
    return WitnessCertificate(ctx, a, b, c, CaseTag.MARKING, filling, tuple(trace))


def witness(a: Partition, b: Partition, ctx: GrassContext) -> WitnessCertificate:
    """Nonvanishing certificate for sigma_a * sigma_b when |a|+|b| <= n.

    Dispatches on a_1 + b_1 against the box width, after moving to the
    dual Grassmannian when 2k > n-1.  A dualized certificate keeps the
    dual-side construction under .dual and recovers a filling in the
    original context, so every certificate is self-contained.
    """
    a, b = Partition(a), Partition(b)
    _check_inputs(a, b, ctx)
    if a.weight + b.weight > ctx.n:
        raise PreconditionError(
            f"witness construction needs |a| + |b| <= {ctx.n}, "
            f"got {a.weight + b.weight}"
        )
    if 2 * ctx.k > ctx.n - 1:
        inner = witness(a.conjugate(), b.conjugate(), dual_context(ctx))
        c = inner.c.conjugate()
        # structure constants are invariant under conjugation, so a
        # filling exists on this side too; take the first one
        filling = first_lr_tableau(skew(c, a), tuple(b))
        _require(filling is not None, "conjugate filling must exist")
        return WitnessCertificate(
            ctx, a, b, c, inner.case, filling, dualized=True, dual=inner
        )
    if a.part(1) + b.part(1) <= ctx.cols:
        return witness_simple(a, b, ctx)
    return witness_marking(a, b, ctx)
