import pytest

from grasscalc import (
    ContainmentError,
    GrassContext,
    Partition,
    ShapeError,
    SkewShape,
    dual_context,
    fits_in_box,
    skew,
)
from grasscalc.partitions import add_rowwise


def test_partition_normalizes_trailing_zeros():
    assert tuple(Partition((3, 2, 0, 0))) == (3, 2)
    assert tuple(Partition(())) == ()
    assert tuple(Partition((0,))) == ()


def test_partition_rejects_bad_input():
    with pytest.raises(ShapeError):
        Partition((1, 2))
    with pytest.raises(ShapeError):
        Partition((2, -1))
    with pytest.raises(ShapeError):
        Partition((2.5, 1))


def test_partition_parts_and_weight():
    p = Partition((4, 2, 1))
    assert p.weight == 7
    assert p.part(1) == 4
    assert p.part(3) == 1
    assert p.part(9) == 0


def test_conjugate_involution():
    p = Partition((4, 2, 1))
    assert tuple(p.conjugate()) == (3, 2, 1, 1)
    assert p.conjugate().conjugate() == p
    assert Partition(()).conjugate() == Partition(())


def test_containment():
    assert Partition((3, 2)).contains(Partition((2, 2)))
    assert not Partition((3, 2)).contains(Partition((2, 2, 1)))
    assert Partition((3, 2)).contains(Partition(()))


def test_add_rowwise():
    assert tuple(add_rowwise(Partition((3, 1)), Partition((2, 2, 1)))) == (5, 3, 1)


def test_context_validation():
    ctx = GrassContext(2, 5)
    assert (ctx.rows, ctx.cols, ctx.dim) == (3, 3, 9)
    assert str(ctx) == "G(2,5)"
    with pytest.raises(ShapeError):
        GrassContext(5, 5)
    with pytest.raises(ShapeError):
        GrassContext(-1, 3)


def test_dual_context_and_box():
    ctx = GrassContext(1, 4)
    assert dual_context(ctx) == GrassContext(2, 4)
    assert fits_in_box(Partition((3, 3)), ctx)
    assert not fits_in_box(Partition((4,)), ctx)
    assert not fits_in_box(Partition((1, 1, 1)), ctx)
    # conjugation swaps the box dimensions
    p = Partition((3, 1))
    assert fits_in_box(p, ctx)
    assert fits_in_box(p.conjugate(), dual_context(ctx))


def test_skew_shape():
    s = skew(Partition((4, 2, 1)), Partition((2, 1)))
    assert s.box_count == 4
    assert s.row_span(1) == (3, 4)
    assert s.row_span(2) == (2, 2)
    assert s.row_span(3) == (1, 1)
    assert (1, 3) in s and (1, 2) not in s
    assert sorted(s.boxes()) == [(1, 3), (1, 4), (2, 2), (3, 1)]
    with pytest.raises(ContainmentError):
        skew(Partition((2, 1)), Partition((3,)))


def test_skew_shape_empty_rows():
    s = skew(Partition((2, 2)), Partition((2, 1)))
    assert s.row_length(1) == 0
    assert s.row_length(2) == 1
    assert s.box_count == 1


def test_partition_json_and_repr():
    p = Partition((3, 1))
    assert p.to_json() == [3, 1]
    assert "3" in repr(p)
