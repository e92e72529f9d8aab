from fractions import Fraction
from itertools import combinations

import pytest

from macstab.errors import ValidationError
from macstab.families import (
    CustomFamily,
    JoinSkeletonsFamily,
    SkeletonFamily,
    VcCubeDualFamily,
    betti_at_degree,
    betti_growth,
    check_consistent,
    check_r_face_stable,
    check_r_vertex_stable,
    check_stabiliser_consistent,
    multiplicity_scan,
    parse_family,
)
from macstab.hochster import MOMENT_ANGLE, betti
from macstab.perms import is_g_complex
from macstab.simplicial import SimplicialComplex, Vertex
from macstab.symrep import hook_dim, pad

FAMILIES = [
    SkeletonFamily(0),
    SkeletonFamily(1),
    SkeletonFamily(2),
    JoinSkeletonsFamily((0, 0)),
    JoinSkeletonsFamily((1, 0)),
    VcCubeDualFamily(),
]


def test_instantiate_examples():
    K, G = SkeletonFamily(0).instantiate(4)
    assert len(K.faces_of_dim(0)) == 4 and K.dim == 0
    assert G.degree == 4 and G.known_order == 24
    Kj, _ = JoinSkeletonsFamily((0, 0)).instantiate(2)
    assert len(Kj.vertices) == 4 and len(Kj.faces_of_dim(1)) == 4
    Kv, _ = VcCubeDualFamily().instantiate(2)
    assert len(Kv.vertices) == 5 and len(Kv.faces_of_dim(1)) == 5


def test_parse_family():
    assert parse_family("skeleton:2") == SkeletonFamily(2)
    assert parse_family("join:0,1") == JoinSkeletonsFamily((0, 1))
    assert parse_family("vccube") == VcCubeDualFamily()
    with pytest.raises(ValidationError):
        parse_family("frieze:7")


@pytest.mark.parametrize("fam", FAMILIES, ids=lambda f: f.description)
def test_families_are_group_complexes(fam):
    for m in range(1, 6):
        K, G = fam.instantiate(m)
        assert is_g_complex(K, G)


@pytest.mark.parametrize("fam", FAMILIES, ids=lambda f: f.description)
def test_families_consistent(fam):
    assert check_consistent(fam, range(1, 6))


def test_custom_family_violating_equivariance():
    def lopsided(m):
        verts = [Vertex(i) for i in range(1, m + 1)] + [Vertex(None, 9)]
        facets = [frozenset([v]) for v in verts[:-1]]
        facets.append(frozenset([verts[0], verts[-1]]))
        return SimplicialComplex(verts, facets)

    fam = CustomFamily("lopsided", lopsided)
    assert not check_consistent(fam, range(2, 4))


@pytest.mark.parametrize("fam", FAMILIES, ids=lambda f: f.description)
@pytest.mark.parametrize("r", [0, 1, 2])
def test_vertex_stability_at_r_plus_one(fam, r):
    assert check_r_vertex_stable(fam, r, r + 1, range(1, 7))


@pytest.mark.parametrize("fam,r", [
    (SkeletonFamily(0), 0), (SkeletonFamily(1), 1),
    (JoinSkeletonsFamily((0, 0)), 1),
])
def test_face_stability_examples(fam, r):
    assert check_r_face_stable(fam, r, r + 1, range(1, 6))


def test_vc_face_stability_needs_higher_degree():
    # the deleted-corner pole is a ghost vertex at rank 1, so 0-faces only
    # stabilise from rank 2 onwards
    fam = VcCubeDualFamily()
    assert not check_r_face_stable(fam, 0, 1, range(1, 5))
    assert check_r_face_stable(fam, 0, 2, range(2, 6))


@pytest.mark.parametrize("fam", FAMILIES, ids=lambda f: f.description)
def test_stabiliser_consistency_small_subsets(fam):
    K1, _ = fam.instantiate(1)
    for size in (1, 2):
        for J in combinations(K1.vertices, size):
            assert check_stabiliser_consistent(fam, frozenset(J), range(1, 6))


def test_stabiliser_consistency_vc_with_cone_point():
    fam = VcCubeDualFamily()
    star = Vertex(None, 0)
    assert check_stabiliser_consistent(fam, frozenset({star}), range(1, 6))
    J = frozenset({star, Vertex(1, 0), Vertex(1, 1)})
    assert check_stabiliser_consistent(fam, J, range(2, 6))


def test_multiplicity_scan_i3():
    report = multiplicity_scan(SkeletonFamily(0), MOMENT_ANGLE, 3, range(3, 9))
    assert report.tables[3] == {(): 1, (1,): 1}
    stable = {(): 1, (1,): 1, (2,): 1}
    for m in range(4, 9):
        assert report.tables[m] == stable
    assert report.onset == 4 and report.certified
    assert report.weight == 2
    assert report.betti == {m: m * (m - 1) // 2 for m in range(3, 9)}


def test_multiplicity_scan_i4():
    report = multiplicity_scan(SkeletonFamily(0), MOMENT_ANGLE, 4, range(4, 10))
    stable = {(1,): 1, (2,): 1, (1, 1): 1, (2, 1): 1}
    assert report.onset == 5 and report.certified
    for m in range(5, 10):
        assert report.tables[m] == stable
    assert report.weight == 3


def test_scan_dimension_identity():
    report = multiplicity_scan(SkeletonFamily(0), MOMENT_ANGLE, 4, range(4, 9))
    for m, table in report.tables.items():
        total = sum(mult * hook_dim(pad(b, m).realized) for b, mult in table.items())
        assert total == report.betti[m]


def test_scan_weight_at_most_degree():
    for i in (3, 4, 5):
        report = multiplicity_scan(
            SkeletonFamily(0), MOMENT_ANGLE, i, range(max(3, i), max(3, i) + 3)
        )
        assert report.weight <= i


def test_scan_matches_single_orbit_rule():
    # for the k-skeleton family in the stable degrees, exactly one orbit
    # contributes, with support size i - k - 1
    from macstab.hochster import orbit_summands

    k, i = 1, 6  # i >= 2k + 3
    for m in (6, 7):
        K, _ = SkeletonFamily(k).instantiate(m)
        summands = orbit_summands(K, MOMENT_ANGLE, i, m)
        assert len(summands) == 1
        assert len(summands[0].support) == i - k - 1


def test_threads_do_not_change_results():
    seq = multiplicity_scan(SkeletonFamily(0), MOMENT_ANGLE, 3, range(3, 7))
    par = multiplicity_scan(SkeletonFamily(0), MOMENT_ANGLE, 3, range(3, 7), threads=4)
    assert seq.tables == par.tables and seq.onset == par.onset


def test_betti_growth_quadratic():
    fit, values, _ = betti_growth(SkeletonFamily(0), MOMENT_ANGLE, 3, range(3, 9))
    assert values == [m * (m - 1) // 2 for m in range(3, 9)]
    assert fit.degree == 2
    assert fit.coefficients == (Fraction(0), Fraction(-1, 2), Fraction(1, 2))
    assert all(fit.predict(m) == m * (m - 1) // 2 for m in range(3, 30))


def test_betti_growth_cubic():
    fit, values, _ = betti_growth(SkeletonFamily(0), MOMENT_ANGLE, 4, range(4, 10))
    assert fit.degree == 3
    assert all(fit.predict(m) == m * (m - 1) * (m - 2) // 3 for m in range(4, 30))


def test_betti_growth_vc_linear_tail():
    fit, values, _ = betti_growth(VcCubeDualFamily(), MOMENT_ANGLE, 3, range(2, 7))
    assert values == [5, 6, 8, 10, 12]
    assert fit.degree == 1 and fit.onset_m == 3
    assert fit.coefficients == (Fraction(0), Fraction(2))


def test_betti_growth_insufficient_window():
    fit, values, _ = betti_growth(SkeletonFamily(0), MOMENT_ANGLE, 4, range(4, 6))
    assert fit is None


def test_betti_at_degree_matches_full_table():
    for fam in (SkeletonFamily(1), VcCubeDualFamily()):
        for m in (3, 4):
            K, G = fam.instantiate(m)
            full = betti(K, MOMENT_ANGLE, group=G)
            for i in (3, 4, 5):
                assert betti_at_degree(K, MOMENT_ANGLE, i, G) == full.get(i, 0)
