import pytest

from rbhopf import QQ, Mat, ShapeError, TermSum, Vec, builtin


def test_basis_and_flatten():
    t = TermSum.basis(QQ, (2, 3), (1, 2))
    assert t.to_vec() == Vec.basis(QQ, 6, 5)


def test_map_at_matches_matrix_action():
    m = Mat(QQ, ((1, 2), (3, 4)))
    t = TermSum.basis(QQ, (2, 2), (0, 1)).map_at(0, m)
    assert t.terms == {(0, 1): QQ.coerce(1), (1, 1): QQ.coerce(3)}


def test_split_then_merge_squares_grouplikes():
    c2 = builtin("group:C2")
    # mul after comul sends a grouplike g to g^2: e0 -> e0, g -> 1
    t0 = TermSum.basis(QQ, (2,), (0,)).split_at(0, c2.comul).merge_at(0, c2.mul)
    assert t0 == TermSum.basis(QQ, (2,), (0,))
    t1 = TermSum.basis(QQ, (2,), (1,)).split_at(0, c2.comul).merge_at(0, c2.mul)
    assert t1 == TermSum.basis(QQ, (2,), (0,))


def test_split_map_at_equals_split_at_for_comul_matrix():
    h4 = builtin("sweedler4")
    for i in range(4):
        t = TermSum.basis(QQ, (4,), (i,))
        via_tensor = t.split_at(0, h4.comul)
        via_matrix = t.split_map_at(0, h4.comul.comul_matrix(), (4, 4))
        assert via_tensor == via_matrix


def test_merge_map_at_equals_merge_at_for_mul_matrix():
    h4 = builtin("sweedler4")
    mm = h4.mul.mul_matrix()
    for i in range(4):
        for j in range(4):
            t = TermSum.basis(QQ, (4, 4), (i, j))
            assert t.merge_at(0, h4.mul) == t.merge_map_at(0, mm)


def test_pair_at_contracts_to_scalar_shape():
    form = Mat(QQ, ((1, 0, 0, 2),))
    t = TermSum.basis(QQ, (2, 2), (1, 1)).pair_at(0, form)
    assert t.dims == () and t.terms == {(): QQ.coerce(2)}
    t0 = TermSum.basis(QQ, (2, 2), (0, 1)).pair_at(0, form)
    assert t0.is_zero()


def test_permute_and_swap():
    t = TermSum.basis(QQ, (2, 3, 4), (1, 2, 3))
    assert t.permute((2, 0, 1)).dims == (4, 2, 3)
    assert t.permute((2, 0, 1)).terms == {(3, 1, 2): QQ.one}
    assert t.swap_at(1).terms == {(1, 3, 2): QQ.one}
    with pytest.raises(ShapeError):
        t.permute((0, 0, 1))


def test_insert_and_drop():
    v = Vec(QQ, (1, 2))
    t = TermSum.basis(QQ, (3,), (0,)).insert_at(0, v)
    assert t.dims == (2, 3)
    assert t.terms == {(0, 0): QQ.coerce(1), (1, 0): QQ.coerce(2)}
    one = TermSum.basis(QQ, (1, 3), (0, 2))
    assert one.drop_at(0).dims == (3,)
    with pytest.raises(ShapeError):
        t.drop_at(0)


def test_linear_ops_and_zero():
    a = TermSum.basis(QQ, (2,), (0,))
    b = TermSum.basis(QQ, (2,), (1,))
    assert (a + b - a - b).is_zero()
    assert a.scale(0).is_zero()
    assert (-a).terms == {(0,): QQ.coerce(-1)}


def test_shape_mismatch_rejected():
    a = TermSum.basis(QQ, (2,), (0,))
    b = TermSum.basis(QQ, (3,), (0,))
    with pytest.raises(ShapeError):
        a + b
    with pytest.raises(ShapeError):
        a.map_at(0, Mat.identity(QQ, 3))
