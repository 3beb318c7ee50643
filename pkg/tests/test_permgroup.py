import itertools
import random
from math import comb, perm

import pytest

from synchrokit.core import KSubset, Permutation, SetPartition, Shape, is_transversal, partitions_with_blocks, shapes_of
from synchrokit.errors import ResourceLimitError
from synchrokit.permgroup import PermutationGroup, catalog, catalog_group

P = PermutationGroup
C4 = P.cyclic(4)
CATALOG = catalog()
SMALL = catalog(8)


def by_name(groups):
    return pytest.mark.parametrize("g", groups, ids=[g.name for g in groups])


def test_catalog_contents():
    names = {g.name for g in CATALOG}
    for expected in ["C12", "D12", "S12", "A12", "AGL(1,5)", "AGL(1,7)", "AGL(1,11)", "PGL(2,5)", "PSL(2,7)",
                     "PGL(2,7)", "PSL(2,11)"]:
        assert expected in names
    assert catalog_group("PGL(2,5)").degree == 6
    assert catalog_group("PSL(2,7)").degree == 8
    assert catalog_group("PSL(2,11)").degree == 11
    with pytest.raises(KeyError):
        catalog_group("M11")


@by_name(CATALOG)
def test_catalog_orders_against_sympy(g):
    sc = pytest.importorskip("sympy.combinatorics")
    sg = sc.PermutationGroup([sc.Permutation(list(h.images)) for h in g.generators])
    assert sg.order() == g.order


@by_name([g for g in CATALOG if g.order <= 50000])
def test_catalog_orders_by_enumeration(g):
    assert len(g.elements()) == g.order


def test_point_orbits():
    assert C4.point_orbits() == [[0, 1, 2, 3]]
    assert P.trivial(3).point_orbits() == [[0], [1], [2]]
    assert P(3, [Permutation.from_cycles(3, [(0, 1)])]).point_orbits() == [[0, 1], [2]]


def test_orbits_on_ksubsets_examples():
    assert [len(o) for o in P.symmetric(4).orbits_on_ksubsets(2)] == [6]
    orbits = C4.orbits_on_ksubsets(2)
    assert [sorted(s.members for s in o) for o in orbits] == [[(0, 1), (0, 3), (1, 2), (2, 3)], [(0, 2), (1, 3)]]
    assert len(C4.orbits_on_ksubsets(0)) == 1


@by_name(SMALL)
def test_subset_orbits_partition_and_divide_order(g):
    n = g.degree
    for k in range(n + 1):
        orbits = g.orbits_on_ksubsets(k)
        members = [s for o in orbits for s in o]
        assert len(members) == len(set(members)) == comb(n, k)
        assert all(g.order % len(o) == 0 for o in orbits)
    assert all(g.order % len(o) == 0 for o in g.point_orbits())


def test_homogeneity_examples():
    assert all(P.symmetric(5).is_k_homogeneous(k) for k in range(6))
    assert not C4.is_k_homogeneous(2)
    agl = catalog_group("AGL(1,5)")
    assert agl.is_k_homogeneous(2)
    assert agl.is_k_transitive(2)
    assert not agl.is_k_transitive(3)
    assert P.symmetric(4).is_k_transitive(4)
    assert not C4.is_k_transitive(2)


def test_set_transitive_examples():
    assert P.symmetric(5).is_set_transitive()
    assert catalog_group("AGL(1,5)").is_set_transitive()
    assert not C4.is_set_transitive()


def test_known_multiple_transitivity():
    assert catalog_group("PGL(2,5)").is_k_transitive(3)
    assert catalog_group("PGL(2,7)").is_k_transitive(3)
    assert catalog_group("PSL(2,7)").is_k_transitive(2)
    assert not catalog_group("PSL(2,7)").is_k_transitive(3)
    assert catalog_group("PSL(2,11)").is_k_transitive(2)
    assert P.alternating(6).is_k_transitive(4)
    assert not P.alternating(6).is_k_transitive(5)


def _brute_k_transitive(g, k):
    els = g.elements()
    start = tuple(range(k))
    return len({tuple(h.images[x] for x in start) for h in els}) == perm(g.degree, k)


@by_name([g for g in SMALL if g.order <= 50000])
def test_k_transitive_against_enumeration(g):
    for k in range(1, min(g.degree, 5) + 1):
        assert g.is_k_transitive(k) == _brute_k_transitive(g, k)


@by_name(SMALL)
def test_homogeneity_properties(g):
    n = g.degree
    for k in range(n + 1):
        assert g.is_k_homogeneous(k) == g.is_k_homogeneous(n - k)
    for k in range(1, n + 1):
        if g.is_k_transitive(k):
            assert g.is_k_homogeneous(k)
    for k in range(2, n // 2 + 1):
        if g.is_k_homogeneous(k):
            assert g.is_k_homogeneous(k - 1)


def test_orbital_graphs():
    assert [x.sorted_edges() for x in P.symmetric(4).orbital_graphs()] == [list(itertools.combinations(range(4), 2))]
    cyc, match = C4.orbital_graphs()
    assert cyc.sorted_edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert match.sorted_edges() == [(0, 2), (1, 3)]
    assert len(P.trivial(3).orbital_graphs()) == 3


def test_primitivity_examples():
    assert not C4.is_primitive()
    assert not C4.is_primitive_by_blocks()
    assert C4.block_system() == [[0, 2], [1, 3]]
    assert P.cyclic(5).is_primitive()
    assert P.symmetric(4).is_primitive()
    assert not P.trivial(3).is_primitive()
    assert not P.trivial(3).is_primitive_by_blocks()


@by_name(catalog(12))
def test_primitivity_oracles_agree_on_catalog(g):
    assert g.is_primitive() == g.is_primitive_by_blocks()


def test_primitivity_oracles_agree_on_random_generators():
    rng = random.Random(2024)
    for _ in range(200):
        n = rng.randint(4, 9)
        gens = []
        for _ in range(rng.randint(1, 2)):
            p = list(range(n))
            if rng.random() < 0.5:
                # a product of a few random transpositions keeps groups small and often imprimitive
                for _ in range(rng.randint(1, 3)):
                    i, j = rng.sample(range(n), 2)
                    p[i], p[j] = p[j], p[i]
            else:
                rng.shuffle(p)
            gens.append(Permutation(tuple(p)))
        g = P(n, gens)
        assert g.is_primitive() == g.is_primitive_by_blocks()


def test_minimal_block():
    assert C4.minimal_block(2) == [[0, 2], [1, 3]]
    assert P.cyclic(6).minimal_block(3) == [[0, 3], [1, 4], [2, 5]]


def test_shaped_partition_examples():
    assert P.symmetric(4).orbits_on_shaped_partitions(Shape((2, 2)))[0] == 1
    count, reps = C4.orbits_on_shaped_partitions(Shape((2, 2)))
    assert count == 2
    assert sorted(r.blocks for r in reps) == [((0, 1), (2, 3)), ((0, 2), (1, 3))]
    assert C4.orbits_on_shaped_partitions(Shape((4,)))[0] == 1
    assert not C4.is_lambda_homogeneous(Shape((2, 2)))
    for shape in shapes_of(5):
        assert P.symmetric(5).is_lambda_homogeneous(shape)
        assert P.symmetric(5).is_lambda_transitive(shape)


@by_name(catalog(7))
def test_lambda_properties(g):
    n = g.degree
    for shape in shapes_of(n):
        if g.is_lambda_transitive(shape):
            assert g.is_lambda_homogeneous(shape)
        if shape.all_distinct():
            assert g.is_lambda_transitive(shape) == g.is_lambda_homogeneous(shape)
    for t in range(1, min(3, n - 2) + 1):
        hook = Shape((n - t,) + (1,) * t)
        assert g.is_lambda_homogeneous(hook) == g.is_k_homogeneous(t)
        assert g.is_lambda_transitive(hook) == g.is_k_transitive(t)


def test_hook_shape_equals_t_homogeneity_for_two_part_shapes():
    for g in catalog(7):
        n = g.degree
        for t in range(1, (n - 1) // 2 + 1):
            assert g.is_lambda_homogeneous(Shape((n - t, t))) == g.is_k_homogeneous(t)


def test_ordered_partition_orbit_sum():
    g = catalog_group("AGL(1,5)")
    shape = Shape((2, 2, 1))
    count, reps = g.orbits_on_shaped_partitions(shape, ordered=True)
    assert count >= g.orbits_on_shaped_partitions(shape)[0]


def test_k1k_homogeneity():
    assert all(P.symmetric(5).is_k1k_homogeneous(k) for k in range(1, 6))
    assert C4.is_k1k_homogeneous(3)
    assert C4.is_k1k_homogeneous(2)
    assert not P.trivial(4).is_k1k_homogeneous(2)


def _brute_k1k(g, k):
    els = g.elements()
    for a in itertools.combinations(range(g.degree), k - 1):
        for b in itertools.combinations(range(g.degree), k):
            if not any(set(h.images[x] for x in a) <= set(b) for h in els):
                return False
    return True


@by_name([g for g in catalog(7) if g.order <= 5040])
def test_k1k_against_brute_force(g):
    for k in range(1, g.degree + 1):
        assert g.is_k1k_homogeneous(k) == _brute_k1k(g, k)


def test_kut_examples():
    res = C4.has_k_ut(2)
    assert not res
    subset, part = res.witness
    assert subset == KSubset(4, (0, 2))
    assert part == SetPartition(4, [[0, 2], [1, 3]])
    assert all(P.symmetric(5).has_k_ut(k) for k in range(1, 6))


def _brute_ut(g, k):
    els = g.elements()
    for s in itertools.combinations(range(g.degree), k):
        orbit = {tuple(sorted(h.images[x] for x in s)) for h in els}
        for p in partitions_with_blocks(g.degree, k):
            if not any(is_transversal(KSubset(g.degree, t), p) for t in orbit):
                return False
    return True


@by_name([g for g in catalog(7) if g.order <= 5040])
def test_kut_against_brute_force(g):
    for k in range(1, g.degree):
        assert bool(g.has_k_ut(k)) == _brute_ut(g, k)


@by_name(SMALL)
def test_kut_implies_k1k_homogeneity(g):
    for k in range(1, g.degree + 1):
        if g.has_k_ut(k):
            assert g.is_k1k_homogeneous(k)


@by_name(catalog(8, 4))
def test_two_ut_iff_primitive_and_n_minus_one_ut_iff_transitive(g):
    assert bool(g.has_k_ut(2)) == g.is_primitive()
    assert bool(g.has_k_ut(g.degree - 1)) == g.is_transitive()


def test_n_minus_one_ut_intransitive():
    g = P.cyclic(4).direct_product(P.trivial(1))
    assert not g.is_transitive()
    assert not g.has_k_ut(4)


def test_weak_kut_examples():
    assert P.symmetric(4).weak_k_ut_witnesses(2) == [KSubset(4, (0, 1))]
    assert C4.weak_k_ut_witnesses(2) == [KSubset(4, (0, 1))]
    assert P.trivial(4).weak_k_ut_witnesses(2) == []
    assert C4.has_weak_k_ut(2)
    assert not P.trivial(4).has_weak_k_ut(2)


@by_name(catalog(7))
def test_ut_iff_all_orbits_are_weak_witnesses(g):
    for k in range(1, g.degree):
        assert bool(g.has_k_ut(k)) == (len(g.weak_k_ut_witnesses(k)) == len(g.orbits_on_ksubsets(k)))


def test_induced_action():
    s3 = P.symmetric(3).induced_action_on_ksubsets(2)
    assert s3.degree == 3 and len(s3.elements()) == 6
    c = C4.induced_action_on_ksubsets(2)
    assert c.degree == 6
    assert sorted(len(o) for o in c.point_orbits()) == [2, 4]
    pgl = catalog_group("PGL(2,7)").induced_action_on_ksubsets(2)
    assert pgl.degree == 28 and pgl.is_transitive() and pgl.is_primitive()
    with pytest.raises(ValueError):
        C4.induced_action_on_ksubsets(4)


def test_caps():
    with pytest.raises(ResourceLimitError):
        P.symmetric(30).orbits_on_ksubsets(15)


def test_direct_product():
    g = P.cyclic(3).direct_product(P.cyclic(2))
    assert g.degree == 5 and g.order == 6
    assert g.point_orbits() == [[0, 1, 2], [3, 4]]
    assert len(g.elements()) == 6


def test_generator_validation():
    with pytest.raises(ValueError):
        P(3, [Permutation((1, 0))])
