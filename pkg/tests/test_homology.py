from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from macstab.errors import ValidationError
from macstab.homology import (
    betti_numbers,
    character_on_cohomology,
    coboundary_matrices,
    euler_check,
    induced_cohomology_map,
    lefschetz_cochain_sum,
    lefschetz_cohomology_sum,
    reduced_cohomology,
)
from macstab.perms import Permutation, enumerate_group
from macstab.simplicial import (
    SimplicialComplex,
    Vertex,
    full_subcomplex,
    point,
    skeleton,
    vc_cube_dual,
)


def test_dd_zero_corpus(square):
    for K in [point(), skeleton(1, -1), square, vc_cube_dual(2), skeleton(5, 1),
              vc_cube_dual(3), skeleton(4, 2)]:
        mats = coboundary_matrices(K)
        for a, b in zip(mats, mats[1:]):
            assert b.mul(a).is_zero()


def test_reduced_cohomology_examples(square):
    assert betti_numbers(point()) == {}
    assert betti_numbers(skeleton(1, -1)) == {-1: 1}
    assert betti_numbers(skeleton(2, 0)) == {0: 1}
    assert betti_numbers(square) == {1: 1}
    assert betti_numbers(vc_cube_dual(2)) == {1: 1}


@pytest.mark.parametrize("j,k", [(3, 0), (4, 0), (5, 0), (4, 1), (5, 1), (6, 2)])
def test_skeleton_cohomology_formula(j, k):
    # the k-skeleton of a (j-1)-simplex has reduced rank C(j-1, k+1) in degree k
    K = skeleton(j, k)
    expected = {k: comb(j - 1, k + 1)} if comb(j - 1, k + 1) else {}
    assert betti_numbers(K) == expected


def test_euler_characteristic_corpus(square):
    for K in [point(), square, vc_cube_dual(2), vc_cube_dual(3), skeleton(5, 1)]:
        assert euler_check(K)


def test_projection_of_representatives_is_identity(square):
    coh = reduced_cohomology(full_subcomplex(square, square.vertices))
    for p in coh.degrees:
        for k, rep in enumerate(coh.representatives(p)):
            coords = coh.project(p, rep)
            assert coords == tuple(
                Fraction(1 if i == k else 0) for i in range(coh.dim(p))
            )


def test_induced_map_examples(square):
    v = {w.index: w for w in square.vertices}
    J = frozenset({v[1], v[3]})
    ident = Permutation.identity(4)
    assert induced_cohomology_map(ident, square, J, 0).data == [[Fraction(1)]]
    g = Permutation.from_cycles(4, (1, 3), (2, 4))
    M = induced_cohomology_map(g, square, J, 0)
    assert M.data == [[Fraction(-1)]]
    assert M.mul(M).data == [[Fraction(1)]]


def test_induced_map_requires_stabilizer(square):
    v = {w.index: w for w in square.vertices}
    g = Permutation.from_cycles(4, (1, 2, 3, 4))
    with pytest.raises(ValidationError):
        induced_cohomology_map(g, square, {v[1], v[3]}, 0)


def test_functoriality_on_top_degree(square):
    V = frozenset(square.vertices)
    elements = enumerate_group([Permutation.from_cycles(4, (1, 2, 3, 4))])
    mats = {g: induced_cohomology_map(g, square, V, 1) for g in elements}
    for g in elements:
        for h in elements:
            assert mats[g * h].data == mats[g].mul(mats[h]).data


def test_character_examples(square):
    v = {w.index: w for w in square.vertices}
    J = frozenset({v[1], v[3]})
    g = Permutation.from_cycles(4, (1, 3), (2, 4))
    stab = enumerate_group([g])
    ch = character_on_cohomology(square, J, stab, 0)
    ident = Permutation.identity(4)
    assert ch[ident] == 1
    assert ch[g] == -1


def test_character_identity_equals_dim():
    K = skeleton(5, 0)
    J = frozenset(Vertex(i) for i in (1, 2, 3, 4))
    ch = character_on_cohomology(K, J, [Permutation.identity(5)], 0)
    assert ch[Permutation.identity(5)] == 3


def test_hopf_trace_identity(square):
    groups = {
        square: [Permutation.from_cycles(4, (1, 2, 3, 4))],
        skeleton(4, 1): [Permutation.from_cycles(4, (1, 2)), Permutation.from_cycles(4, (1, 2, 3, 4))],
        vc_cube_dual(2): [Permutation.from_cycles(2, (1, 2))],
    }
    for K, gens in groups.items():
        for g in enumerate_group(gens):
            assert lefschetz_cochain_sum(K, g) == lefschetz_cohomology_sum(K, g)


@st.composite
def small_complexes(draw):
    n = draw(st.integers(min_value=1, max_value=5))
    verts = [Vertex(i) for i in range(1, n + 1)]
    pool = [frozenset(c) for r in (1, 2, 3) for c in combinations(verts, r)]
    picked = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=7))
    return SimplicialComplex(verts, picked)


@settings(max_examples=40, deadline=None)
@given(small_complexes())
def test_dd_zero_and_euler_random(K):
    mats = coboundary_matrices(K)
    for a, b in zip(mats, mats[1:]):
        assert b.mul(a).is_zero()
    assert euler_check(K)
