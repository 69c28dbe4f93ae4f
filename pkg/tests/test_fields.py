import pytest

from prismatic.fields import get_field


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 9, 13, 25, 49])
def test_field_axioms_exhaustive(q):
    f = get_field(q)
    elems = f.elements()
    assert len(elems) == q
    assert len(set(elems)) == q
    for a in elems:
        assert f.add(a, f.zero) == a
        assert f.mul(a, f.one) == a
        assert f.add(a, f.neg(a)) == f.zero
        if a != f.zero:
            assert f.mul(a, f.inv(a)) == f.one
    # commutativity + distributivity on a slice
    sample = elems[: min(q, 6)]
    for a in sample:
        for b in sample:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in sample:
                lhs = f.mul(a, f.add(b, c))
                rhs = f.add(f.mul(a, b), f.mul(a, c))
                assert lhs == rhs


@pytest.mark.parametrize("q", [4, 9, 25, 49])
def test_multiplicative_group_is_cyclic_of_order_q_minus_1(q):
    f = get_field(q)
    orders = []
    for a in f.elements():
        if a == f.zero:
            continue
        x, k = a, 1
        while x != f.one:
            x = f.mul(x, a)
            k += 1
        orders.append(k)
        assert (q - 1) % k == 0
    assert max(orders) == q - 1  # a generator exists


def test_index_round_trip():
    f = get_field(9)
    for i in range(9):
        assert f.index(f.element(i)) == i


def test_nonzero_squares_odd_q():
    f = get_field(13)
    sq = f.nonzero_squares()
    assert len(sq) == 6
    assert {f.index(s) for s in sq} == {1, 3, 4, 9, 10, 12}
    squares, nonsquare = f.squares_and_nonsquare()
    assert nonsquare not in squares and nonsquare != f.zero


def test_squares_even_q_rejected():
    with pytest.raises(ValueError):
        get_field(4).nonzero_squares()


def test_paley_condition_minus_one_square_iff_1_mod_4():
    for q in (5, 9, 13, 25, 49):
        f = get_field(q)
        assert (f.neg(f.one) in f.nonzero_squares()) == (q % 4 == 1)
    f7 = get_field(7)
    assert f7.neg(f7.one) not in f7.nonzero_squares()


def test_subfield_fixed_points():
    f = get_field(49)
    fixed = f.subfield_fixed_points()
    assert len(fixed) == 7
    # the fixed points form a subfield
    for a in fixed:
        for b in fixed:
            assert f.add(a, b) in fixed
            assert f.mul(a, b) in fixed
    with pytest.raises(ValueError):
        get_field(13).subfield_fixed_points()


def test_frobenius_is_additive_in_gf9():
    f = get_field(9)
    for a in f.elements():
        for b in f.elements():
            assert f.pow(f.add(a, b), 3) == f.add(f.pow(a, 3), f.pow(b, 3))


def test_unknown_field_size():
    with pytest.raises(ValueError):
        get_field(6)
    with pytest.raises(ValueError):
        get_field(1)
