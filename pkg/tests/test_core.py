import itertools
from math import factorial, prod

import pytest
from hypothesis import given, strategies as st

from synchrokit.core import (KSubset, Permutation, SetPartition, Shape, Transformation, compose, conjugate, decode,
                             encode, is_transversal, is_uniform, kernel_partition, kernel_shape, partitions_of_shape,
                             partitions_with_blocks, rank, shapes_of, stirling2, transformations)

T = Transformation


def maps(n):
    return st.lists(st.integers(0, n - 1), min_size=n, max_size=n).map(lambda xs: T(tuple(xs)))


def perms(n):
    return st.permutations(range(n)).map(lambda xs: Permutation(tuple(xs)))


def test_compose_examples():
    a = T((0, 0, 2))
    assert compose(T.identity(3), a) == a
    c = T((1, 2, 0))
    assert compose(c, c) == T((2, 0, 1))
    assert compose(T((0, 0, 1)), T((2, 1, 1))) == T((2, 2, 1))
    assert T((0, 0, 1)) * T((2, 1, 1)) == T((2, 2, 1))


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(T((0, 1)), T((0, 1, 2)))


def test_compose_associative_degree_3():
    all3 = list(transformations(3))
    for a, b, c in itertools.product(all3, repeat=3):
        assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(maps(4), maps(4), maps(4))
def test_compose_associative_random(a, b, c):
    assert (a * b) * c == a * (b * c)


def test_conjugate_examples():
    a = T((0, 0, 2))
    assert conjugate(a, Permutation.identity(3)) == a
    g = Permutation((1, 2, 0))
    # g^-1 a g evaluated pointwise: x -> x g^-1 -> a -> g
    assert conjugate(a, g) == T((0, 1, 1))
    assert kernel_partition(conjugate(a, g)) == kernel_partition(a).map(g)
    assert kernel_partition(conjugate(a, g)).blocks == ((0,), (1, 2))


def test_conjugate_is_inverse_times_a_times_g():
    a = T((0, 0, 2, 1))
    g = Permutation((3, 0, 1, 2))
    assert conjugate(a, g) == g.inverse() * a * g


def test_conjugation_preserves_rank_and_moves_kernel_exhaustive_4():
    gs = [Permutation(p) for p in itertools.permutations(range(4))]
    for a in transformations(4):
        for g in gs:
            b = conjugate(a, g)
            assert rank(b) == rank(a)
            assert kernel_partition(b) == kernel_partition(a).map(g)


@given(maps(5), perms(5))
def test_conjugation_preserves_rank_degree_5(a, g):
    assert conjugate(a, g).rank == a.rank


def test_rank_examples():
    assert rank(T.identity(4)) == 4
    assert rank(T((2, 2, 2))) == 1
    assert rank(T((0, 0, 1, 2))) == 3


@given(maps(6))
def test_rank_n_iff_permutation(a):
    assert (a.rank == 6) == a.is_permutation()


def test_kernel_partition_examples():
    assert kernel_partition(T.identity(3)).blocks == ((0,), (1,), (2,))
    assert kernel_partition(T((0, 0, 1, 2))).blocks == ((0, 1), (2,), (3,))
    assert kernel_partition(T((1, 1, 1))).blocks == ((0, 1, 2),)
    assert kernel_shape(T((0, 0, 1, 2))).parts == (2, 1, 1)
    assert is_uniform(T((0, 0, 1, 1)))
    assert not is_uniform(T((0, 0, 0, 1)))


@given(maps(6))
def test_kernel_blocks_equal_rank(a):
    assert len(kernel_partition(a)) == a.rank


def test_transformation_validation():
    with pytest.raises(ValueError):
        T((0, 3, 1))
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


def test_permutation_equals_transformation_with_same_images():
    assert Permutation((1, 0)) == T((1, 0))
    assert hash(Permutation((1, 0))) == hash(T((1, 0)))


def test_cycles():
    g = Permutation.from_cycles(5, [(0, 1, 2), (3, 4)])
    assert g.images == (1, 2, 0, 4, 3)
    assert g.cycle_string() == "(1 2 3)(4 5)"
    assert Permutation.identity(3).cycle_string() == "()"
    with pytest.raises(ValueError):
        Permutation.from_cycles(3, [(0, 1), (1, 2)])


@given(perms(7))
def test_inverse(g):
    assert g * g.inverse() == Permutation.identity(7)
    assert Permutation.from_cycles(7, g.cycles()) == g


def test_is_transversal_examples():
    p = SetPartition(4, [[0, 1], [2, 3]])
    assert is_transversal(KSubset(4, (0, 2)), p)
    assert not is_transversal(KSubset(4, (0, 1)), p)
    assert not is_transversal(KSubset(4, (0, 1, 2)), p)


def test_set_partition_canonical():
    p = SetPartition(4, [[3, 1], [2, 0]])
    assert p.blocks == ((0, 2), (1, 3))
    with pytest.raises(ValueError):
        SetPartition(3, [[0, 1], [1, 2]])
    with pytest.raises(ValueError):
        SetPartition(3, [[0, 1]])


def test_shape_validation():
    with pytest.raises(ValueError):
        Shape((1, 2))
    with pytest.raises(ValueError):
        Shape((2, 0))


def test_partitions_of_shape_examples():
    got = [p.blocks for p in partitions_of_shape(Shape((2, 2)))]
    assert got == [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]
    assert len(list(partitions_of_shape(Shape((5,))))) == 1
    assert len(list(partitions_of_shape(Shape((2, 1, 1))))) == 6


def _multinomial(parts):
    mult = prod(factorial(parts.count(v)) for v in set(parts))
    return factorial(sum(parts)) // (prod(factorial(x) for x in parts) * mult)


@pytest.mark.parametrize("n", range(1, 9))
def test_partition_counts_match_formula(n):
    for shape in shapes_of(n):
        parts = list(partitions_of_shape(shape))
        assert len(parts) == _multinomial(list(shape.parts)) == shape.count()
        assert len(set(p.blocks for p in parts)) == len(parts)
        assert all(p.shape() == shape for p in parts)


@pytest.mark.parametrize("n", range(1, 8))
def test_partitions_with_blocks_stream_is_sorted_and_complete(n):
    for k in range(1, n + 1):
        stream = [p.blocks for p in partitions_with_blocks(n, k)]
        assert stream == sorted(stream)
        assert len(stream) == stirling2(n, k)


def test_stirling_small_values():
    assert [stirling2(5, k) for k in range(6)] == [0, 1, 15, 25, 10, 1]
    assert sum(stirling2(6, k) for k in range(7)) == 203


def test_ordered_count():
    assert Shape((2, 2)).ordered_count() == 6
    assert Shape((2, 1, 1)).ordered_count() == 12


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(st.just(n), maps(n))))
def test_encode_roundtrip(pair):
    n, a = pair
    assert decode(encode(a.images, n), n) == a.images


def test_encode_order_matches_image_order():
    codes = [encode(a.images, 3) for a in transformations(3)]
    assert codes == list(range(27))


def test_ksubset_mask_roundtrip():
    s = KSubset(6, (1, 4, 5))
    assert KSubset.from_mask(6, s.mask()) == s
