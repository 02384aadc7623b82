"""Skew fillings and the Littlewood-Richardson tableau conditions.

A filling of a skew shape is an LR tableau for a weight w when

  1. entry i appears exactly w_i times,
  2. every row is weakly increasing left to right,
  3. every column is strictly increasing top to bottom (columns are
     absolute positions in the outer shape, not offsets within rows),
  4. the reverse reading word (each row reversed, rows read top to
     bottom and concatenated) is a lattice word: every prefix contains
     at least as many i as i+1, for every i.

The number of LR tableaux of shape c/a and weight b is the structure
constant of the Schubert basis, so this module is the computational
core of the whole package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ShapeError
from .partitions import Partition, SkewShape

Weight = tuple[int, ...]


@dataclass(frozen=True)
class SkewFilling:
    """A skew shape together with one integer entry per box.

    Entries are stored row by row, columns ascending; empty rows are
    empty tuples so that row indices line up with the shape.
    """

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.shape.row_count:
            raise ShapeError(
                f"expected {self.shape.row_count} rows, got {len(self.rows)}"
            )
        for i, row in enumerate(self.rows, start=1):
            if len(row) != self.shape.row_length(i):
                raise ShapeError(
                    f"row {i} of {self.shape} needs {self.shape.row_length(i)}"
                    f" entries, got {len(row)}"
                )
            for e in row:
                if not isinstance(e, int) or isinstance(e, bool) or e < 1:
                    raise ShapeError(f"entries must be positive integers, got {e!r}")

    def entry(self, i: int, j: int) -> int:
        """Entry at absolute position (row i, column j), 1-indexed."""
        first, _ = self.shape.row_span(i)
        return self.rows[i - 1][j - first]

    def weight(self) -> Weight:
        """Occurrence counts (count of 1, count of 2, ...)."""
        top = max((e for row in self.rows for e in row), default=0)
        counts = [0] * top
        for row in self.rows:
            for e in row:
                counts[e - 1] += 1
        return tuple(counts)

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def reading_word(filling: SkewFilling) -> tuple[int, ...]:
    """Reverse reading word: rows top to bottom, each row right to left."""
    word: list[int] = []
    for row in filling.rows:
        word.extend(reversed(row))
    return tuple(word)


def _is_lattice(word: Sequence[int]) -> bool:
    counts: dict[int, int] = {}
    for v in word:
        counts[v] = counts.get(v, 0) + 1
        if v > 1 and counts[v] > counts.get(v - 1, 0):
            return False
    return True


def _normalized(w: Iterable[int]) -> tuple[int, ...]:
    w = tuple(w)
    while w and w[-1] == 0:
        w = w[:-1]
    return w


def is_lr_tableau(filling: SkewFilling, weight: Weight) -> bool:
    """Check the four LR conditions directly, with no pruning tricks.

    Kept deliberately independent of the enumeration routine below so
    the two can be cross-checked against each other.
    """
    if _normalized(filling.weight()) != _normalized(weight):
        return False
    shape = filling.shape
    for row in filling.rows:
        if any(row[t] > row[t + 1] for t in range(len(row) - 1)):
            return False
    for i in range(2, shape.row_count + 1):
        first, last = shape.row_span(i)
        for j in range(first, last + 1):
            if (i - 1, j) in shape and filling.entry(i - 1, j) >= filling.entry(i, j):
                return False
    return _is_lattice(reading_word(filling))


def _reading_order_boxes(shape: SkewShape) -> list[tuple[int, int]]:
    # reading-word order: rows top to bottom, columns right to left
    boxes: list[tuple[int, int]] = []
    for i in range(1, shape.row_count + 1):
        first, last = shape.row_span(i)
        boxes.extend((i, j) for j in range(last, first - 1, -1))
    return boxes


def _search(shape: SkewShape, weight: Weight, mode: str):
    """Shared DFS over fillings in reading-word order.

    mode is one of "list", "count", "first".  Boxes are filled in the
    order of the reading word, so the lattice condition can be enforced
    as a running prefix check; the box to the right and the box above
    are always filled before the current one, which covers the row and
    column conditions as well.  Candidate entries are tried in
    increasing order, making the output order lexicographic in the
    reading word.
    """
    weight = _normalized(weight)
    boxes = _reading_order_boxes(shape)
    if shape.box_count != sum(weight):
        return [] if mode == "list" else (0 if mode == "count" else None)
    # a lattice word realizes weakly decreasing counts, so anything else
    # is empty and not worth walking
    if any(weight[t] < weight[t + 1] for t in range(len(weight) - 1)):
        return [] if mode == "list" else (0 if mode == "count" else None)
    if not boxes:
        empty = SkewFilling(shape, tuple(() for _ in range(shape.row_count)))
        if mode == "list":
            return [empty]
        return 1 if mode == "count" else empty

    index = {pos: t for t, pos in enumerate(boxes)}
    right = [index.get((i, j + 1)) for i, j in boxes]
    above = [index.get((i - 1, j)) for i, j in boxes]
    values = len(weight)
    remaining = list(weight)
    counts = [0] * (values + 1)
    entries = [0] * len(boxes)

    results: list[SkewFilling] = []
    total = 0

    def assemble() -> SkewFilling:
        rows: list[list[int]] = [[] for _ in range(shape.row_count)]
        for (i, _), e in zip(boxes, entries):
            rows[i - 1].append(e)
        # boxes were visited right to left within each row
        return SkewFilling(shape, tuple(tuple(reversed(r)) for r in rows))

    def walk(t: int):
        nonlocal total
        if t == len(boxes):
            if mode == "list":
                results.append(assemble())
                return None
            if mode == "count":
                total += 1
                return None
            return assemble()
        r, a = right[t], above[t]
        hi = entries[r] if r is not None else values
        lo = entries[a] + 1 if a is not None else 1
        for v in range(lo, hi + 1):
            if remaining[v - 1] == 0:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            entries[t] = v
            counts[v] += 1
            remaining[v - 1] -= 1
            hit = walk(t + 1)
            counts[v] -= 1
            remaining[v - 1] += 1
            if mode == "first" and hit is not None:
                return hit
        return None

    first = walk(0)
    if mode == "list":
        return results
    return total if mode == "count" else first


def enumerate_lr_tableaux(shape: SkewShape, weight: Weight) -> list[SkewFilling]:
    """All LR tableaux of the given shape and weight, in lexicographic
    order of their reading words."""
    return _search(shape, weight, "list")


@lru_cache(maxsize=None)
def _count(outer: tuple, inner: tuple, weight: tuple) -> int:
    return _search(
        SkewShape(Partition(outer), Partition(inner)), weight, "count"
    )


def count_lr_tableaux(shape: SkewShape, weight: Weight) -> int:
    """Number of LR tableaux of the given shape and weight (cached)."""
    return _count(tuple(shape.outer), tuple(shape.inner), _normalized(weight))


def first_lr_tableau(shape: SkewShape, weight: Weight) -> SkewFilling | None:
    """The lexicographically first LR tableau, or None when there is none."""
    return _search(shape, weight, "first")


def has_lr_tableau(shape: SkewShape, weight: Weight) -> bool:
    return first_lr_tableau(shape, weight) is not None


def render_filling(filling: SkewFilling) -> str:
    """ASCII rendering: inner boxes drawn as ':', entries as digits.

    Entries above 9 do not fit one character per box, so those rows
    fall back to space-separated tokens.
    """
    compact = all(e <= 9 for row in filling.rows for e in row)
    lines = []
    for i, row in enumerate(filling.rows, start=1):
        pad = filling.shape.inner.part(i)
        if compact:
            lines.append(":" * pad + "".join(str(e) for e in row))
        else:
            lines.append(" ".join([":"] * pad + [str(e) for e in row]))
    return "\n".join(lines)
