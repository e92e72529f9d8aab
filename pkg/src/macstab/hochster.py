"""Equivariant decomposition of polyhedral-product cohomology.

For a pair (Cone A, A) with A rationally a d-sphere, the cohomology of the
associated polyhedral product splits over vertex subsets J with a degree
shift of d·|J| + 1 against the reduced cohomology of the restriction K_J.
A symmetry g stabilising J acts on the summand by its action on H̃^*(K_J)
twisted by sign(g|_J)^d, the sign of permuting |J| smash factors of a
d-sphere.  The cellular model in `cellular` recomputes all of this from an
honest chain complex and the test suite keeps the two in agreement.

The ring structure is carried degreewise: the product of classes supported
on disjoint subsets I, J lands on I ∪ J through the join inclusion, with
coefficients transported from the cellular cup product so that ambient-degree
graded commutativity and strict associativity hold.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import CapExceeded, ValidationError
from .linalg import Vector, zero_vec
from .homology import action_sign, induced_cohomology_map, reduced_cohomology
from .perms import (
    DEFAULT_GROUP_CAP,
    DEFAULT_SUBSET_CAP,
    DEFAULT_SUPPORT_CAP,
    OrbitTable,
    PermGroup,
    Permutation,
    act_on_subset,
    enumerate_group,
    is_g_complex,
    restriction_sign,
    subset_orbit_reps,
    support_split,
)
from .simplicial import SimplicialComplex, face_key, full_subcomplex
from .symrep import (
    ClassFunction,
    Partition,
    decompose,
    induce_to_sym,
    induce_young,
    pieri_induce,
    unpad,
)


@dataclass(frozen=True)
class SpherePair:
    """(Cone A, A) with A rationally a d-sphere.

    d = 1 is the moment-angle pair (D², S¹); d = 0 the real one (D¹, S⁰).
    Representation routines need d >= 1 (connectivity); Betti tables allow 0.
    """

    d: int

    def __post_init__(self):
        if self.d < 0:
            raise ValidationError("sphere dimension must be >= 0")

    def ambient_degree(self, p: int, j_size: int) -> int:
        return p + self.d * j_size + 1

    def simplicial_degree(self, i: int, j_size: int) -> int:
        return i - self.d * j_size - 1


MOMENT_ANGLE = SpherePair(1)
REAL_MOMENT_ANGLE = SpherePair(0)


def _subset_iter(K: SimplicialComplex, cap: int):
    n = len(K.vertices)
    if 2**n > cap:
        raise CapExceeded(f"2^{n} subsets exceed cap {cap}")
    for r in range(n + 1):
        yield from (frozenset(c) for c in combinations(K.vertices, r))


def betti(
    K: SimplicialComplex,
    pair: SpherePair = MOMENT_ANGLE,
    group: PermGroup | None = None,
    cap: int = DEFAULT_SUBSET_CAP,
) -> dict[int, int]:
    """Betti numbers b_i = Σ_J dim H̃^{i - d|J| - 1}(K_J).

    With a group the sum runs over orbit representatives weighted by orbit
    size, which must agree with the plain sum over all subsets.
    """
    out: dict[int, int] = {}
    if group is not None:
        table = subset_orbit_reps(K, group, cap=cap)
        items = [(rep, table.orbit_sizes[rep]) for rep in table.representatives]
    else:
        items = [(J, 1) for J in _subset_iter(K, cap)]
    for J, mult in items:
        coh = reduced_cohomology(full_subcomplex(K, J))
        for p, dim in coh.dims().items():
            i = pair.ambient_degree(p, len(J))
            out[i] = out.get(i, 0) + mult * dim
    return dict(sorted(out.items()))


def betti_split(
    K: SimplicialComplex,
    pair: SpherePair = MOMENT_ANGLE,
    cap: int = DEFAULT_SUBSET_CAP,
) -> dict[frozenset, dict[int, int]]:
    """Per-subset contribution table {J: {ambient degree: dimension}}."""
    out: dict[frozenset, dict[int, int]] = {}
    for J in _subset_iter(K, cap):
        coh = reduced_cohomology(full_subcomplex(K, J))
        row = {
            pair.ambient_degree(p, len(J)): dim for p, dim in coh.dims().items()
        }
        if row:
            out[J] = dict(sorted(row.items()))
    return out


@dataclass
class MultidegreeComponent:
    rep: frozenset
    orbit_size: int
    degree_p: int
    ambient_degree: int
    dim: int
    stabilizer_gens: tuple[Permutation, ...]
    stabilizer_order: int | None
    generator_character: dict[Permutation, Fraction]
    element_character: dict[Permutation, Fraction] | None

    @property
    def total(self) -> int:
        return self.orbit_size * self.dim


@dataclass
class EquivariantReport:
    degree: int
    pair: SpherePair
    betti: int
    components: list[MultidegreeComponent] = field(default_factory=list)
    irreducibles: dict[Partition, int] | None = None

    def check_total(self) -> bool:
        return self.betti == sum(c.total for c in self.components)


def summand_character(
    K: SimplicialComplex,
    J,
    elements,
    p: int,
    pair: SpherePair,
) -> dict[Permutation, Fraction]:
    """Character of stabilising elements on the J-summand in degree p.

    Trace on H̃^p(K_J) times the smash twist sign(g|_J)^d.
    """
    out = {}
    for h in elements:
        tr = induced_cohomology_map(h, K, J, p).trace()
        if pair.d % 2:
            tr *= restriction_sign(h, J)
        out[h] = tr
    return out


def equivariant_decomposition(
    K: SimplicialComplex,
    G: PermGroup,
    pair: SpherePair,
    i: int,
    subset_cap: int = DEFAULT_SUBSET_CAP,
    group_cap: int = DEFAULT_GROUP_CAP,
    orbit_table: OrbitTable | None = None,
) -> EquivariantReport:
    """One summand per orbit representative J with H̃^{i-d|J|-1}(K_J) nonzero."""
    if not is_g_complex(K, G):
        raise ValidationError("the group does not preserve the complex")
    max_size = (i // pair.d) if pair.d >= 1 else None
    if orbit_table is None:
        orbit_table = subset_orbit_reps(K, G, max_size=max_size, cap=subset_cap)
    report = EquivariantReport(degree=i, pair=pair, betti=0)
    for rep in orbit_table.representatives:
        p = pair.simplicial_degree(i, len(rep))
        if p < -1:
            continue
        coh = reduced_cohomology(full_subcomplex(K, rep))
        dim = coh.dim(p)
        if dim == 0:
            continue
        gens = orbit_table.stabilizer_gens[rep]
        gen_char = summand_character(K, rep, gens, p, pair)
        elem_char = None
        order = None
        try:
            elements = enumerate_group(list(gens), cap=group_cap)
            order = len(elements)
            elem_char = summand_character(K, rep, elements, p, pair)
        except CapExceeded:
            pass
        report.components.append(
            MultidegreeComponent(
                rep=rep,
                orbit_size=orbit_table.orbit_sizes[rep],
                degree_p=p,
                ambient_degree=i,
                dim=dim,
                stabilizer_gens=gens,
                stabilizer_order=order,
                generator_character=gen_char,
                element_character=elem_char,
            )
        )
        report.betti += orbit_table.orbit_sizes[rep] * dim
    report.components.sort(key=lambda c: face_key(c.rep))
    return report


# -- Σ_m irreducible decompositions ------------------------------------------


def _validate_indexed(K: SimplicialComplex, m: int) -> None:
    for v in K.vertices:
        if v.index is not None and not (1 <= v.index <= m):
            raise ValidationError(f"vertex index {v.index} outside 1..{m}")


def _relabel_to_small(h: Permutation, support: tuple[int, ...]) -> Permutation:
    rank = {s: a + 1 for a, s in enumerate(support)}
    return Permutation(tuple(rank[h(s)] for s in support)) if support else Permutation((1,))


@dataclass
class OrbitSummand:
    """One orbit summand of a fixed ambient degree, before induction to Σ_m."""

    rep: frozenset
    support: tuple[int, ...]
    dim: int
    finite_character: ClassFunction  # character of Ind to Sym(support)
    mu_multiplicities: dict[Partition, int]


def orbit_summands(
    K: SimplicialComplex,
    pair: SpherePair,
    i: int,
    m: int,
    support_cap: int = DEFAULT_SUPPORT_CAP,
    subset_cap: int = DEFAULT_SUBSET_CAP,
) -> list[OrbitSummand]:
    """Per-orbit data feeding both induction routes (index action of Σ_m)."""
    if pair.d < 1:
        raise ValidationError("representation routines need a sphere of dimension >= 1")
    _validate_indexed(K, m)
    G = PermGroup.symmetric(m)
    table = subset_orbit_reps(K, G, max_size=i // pair.d, cap=subset_cap)
    out: list[OrbitSummand] = []
    for rep in table.representatives:
        p = pair.simplicial_degree(i, len(rep))
        if p < -1:
            continue
        coh = reduced_cohomology(full_subcomplex(K, rep))
        dim = coh.dim(p)
        if dim == 0:
            continue
        support, finite_part, _ = support_split(rep, K, m, cap=support_cap)
        char = summand_character(K, rep, finite_part, p, pair)
        b = len(support)
        if b == 0:
            # the whole symmetric group fixes the summand pointwise
            psi = ClassFunction.from_dict(0, {(): Fraction(dim)})
            mus = {(): dim}
        else:
            small = {
                _relabel_to_small(h, support): val for h, val in char.items()
            }
            psi = induce_to_sym(list(small), small, cap=support_cap)
            mus = decompose(psi)
        out.append(
            OrbitSummand(
                rep=rep,
                support=support,
                dim=dim,
                finite_character=psi,
                mu_multiplicities=mus,
            )
        )
    return out


def sym_irreducible_decomposition(
    K: SimplicialComplex,
    pair: SpherePair,
    i: int,
    m: int,
    support_cap: int = DEFAULT_SUPPORT_CAP,
) -> dict[Partition, int]:
    """Stable decomposition in padded coordinates {base partition: multiplicity}.

    Route: decompose each orbit summand over the symmetric group of its index
    support, then add horizontal strips out to rank m.
    """
    result: dict[Partition, int] = {}
    for summand in orbit_summands(K, pair, i, m, support_cap=support_cap):
        for mu, mult in summand.mu_multiplicities.items():
            for lam in pieri_induce(mu, m):
                base = unpad(lam)
                result[base] = result.get(base, 0) + mult
    return dict(sorted(result.items()))


def sym_decomposition_by_fusion(
    K: SimplicialComplex,
    pair: SpherePair,
    i: int,
    m: int,
    support_cap: int = DEFAULT_SUPPORT_CAP,
) -> dict[Partition, int]:
    """Same decomposition through full character fusion at rank m.

    Independent of the horizontal-strip route: induces each summand character
    to Σ_m over cycle types and decomposes there, then translates to padded
    coordinates.  Must agree with `sym_irreducible_decomposition`.
    """
    total: ClassFunction | None = None
    for summand in orbit_summands(K, pair, i, m, support_cap=support_cap):
        chi_m = induce_young(summand.finite_character, m)
        total = chi_m if total is None else total.add(chi_m)
    if total is None:
        return {}
    result: dict[Partition, int] = {}
    for lam, mult in decompose(total).items():
        base = unpad(lam)
        result[base] = result.get(base, 0) + mult
    return dict(sorted(result.items()))


def summand_routes(
    K: SimplicialComplex,
    pair: SpherePair,
    i: int,
    m: int,
    support_cap: int = DEFAULT_SUPPORT_CAP,
) -> list[tuple[frozenset, dict[Partition, int], dict[Partition, int]]]:
    """Per-summand comparison data: (rep, fusion route, strip route) at rank m."""
    out = []
    for summand in orbit_summands(K, pair, i, m, support_cap=support_cap):
        fusion = decompose(induce_young(summand.finite_character, m))
        strips: dict[Partition, int] = {}
        for mu, mult in summand.mu_multiplicities.items():
            for lam in pieri_induce(mu, m):
                strips[lam] = strips.get(lam, 0) + mult
        out.append((summand.rep, fusion, dict(sorted(strips.items()))))
    return out


# -- ring structure -----------------------------------------------------------


@dataclass(frozen=True)
class CohomologyClass:
    """A cochain on the restriction to `subset`, in simplicial degree `degree`."""

    subset: frozenset
    degree: int
    cochain: Vector


def basis_classes(K: SimplicialComplex, J) -> list[CohomologyClass]:
    Jw = frozenset(J)
    coh = reduced_cohomology(full_subcomplex(K, Jw))
    out = []
    for p in sorted(coh.degrees):
        for repv in coh.representatives(p):
            out.append(CohomologyClass(Jw, p, repv))
    return out


def _rank_sign(face, ambient) -> int:
    """Product over j in face of (-1)^(rank of j in ambient - 1)."""
    ordered = sorted(ambient)
    pos = {v: r for r, v in enumerate(ordered)}  # 0-based: rank-1
    exponent = sum(pos[v] for v in face)
    return -1 if exponent % 2 else 1


def _cross_pairs_sign(A, B) -> int:
    """(-1)^{#{(a,b) in A×B : a < b}} in the global vertex order."""
    count = sum(1 for a in A for b in B if a.sort_key < b.sort_key)
    return -1 if count % 2 else 1


def cup_product(
    K: SimplicialComplex, a: CohomologyClass, b: CohomologyClass
) -> CohomologyClass:
    """Product landing on the union support, zero when supports meet.

    The coefficient of (σ⊔τ)* is transported from the cellular model:
        ε(σ,I) ε(τ,J) ε(σ⊔τ, I∪J) · (-1)^{#{(x,y) ∈ (J∖τ)×(I∖σ) : x < y}}
    which makes the product strictly associative, unital on the empty-support
    class, and graded-commutative in ambient degree.
    """
    I, J = a.subset, b.subset
    U = I | J
    p, q = a.degree, b.degree
    target = full_subcomplex(K, U)
    rho_faces = target.faces_of_dim(p + q + 1)
    if I & J:
        return CohomologyClass(U, p + q + 1, zero_vec(len(rho_faces)))
    src_a = full_subcomplex(K, I).faces_of_dim(p)
    src_b = full_subcomplex(K, J).faces_of_dim(q)
    if len(a.cochain) != len(src_a) or len(b.cochain) != len(src_b):
        raise ValidationError("class vector length does not match its face basis")
    pos_a = {f: k for k, f in enumerate(src_a)}
    pos_b = {f: k for k, f in enumerate(src_b)}
    coeffs = []
    for rho in rho_faces:
        sigma = rho & I
        tau = rho & J
        if len(sigma) != p + 1 or len(tau) != q + 1:
            coeffs.append(Fraction(0))
            continue
        va = a.cochain[pos_a[sigma]]
        vb = b.cochain[pos_b[tau]]
        if va == 0 or vb == 0:
            coeffs.append(Fraction(0))
            continue
        sign = (
            _rank_sign(sigma, I)
            * _rank_sign(tau, J)
            * _rank_sign(rho, U)
            * _cross_pairs_sign(J - tau, I - sigma)
        )
        coeffs.append(sign * va * vb)
    return CohomologyClass(U, p + q + 1, tuple(coeffs))


def transported_action(
    K: SimplicialComplex, g: Permutation, a: CohomologyClass
) -> CohomologyClass:
    """Action of g moving the J-summand to the g·J-summand.

    Coefficients are the cellular ones pulled back through the multidegree
    isomorphisms: σ* picks up ε(σ,J)·koszul(g, J∖σ)·ε(g·σ, g·J).
    """
    J = a.subset
    gJ = act_on_subset(g, J, K)
    src_faces = full_subcomplex(K, J).faces_of_dim(a.degree)
    dst_faces = full_subcomplex(K, gJ).faces_of_dim(a.degree)
    pos = {f: k for k, f in enumerate(dst_faces)}
    out = [Fraction(0)] * len(dst_faces)
    for k, sigma in enumerate(src_faces):
        val = a.cochain[k]
        if val == 0:
            continue
        g_sigma = frozenset(g.act_vertex(v) for v in sigma)
        sign = (
            _rank_sign(sigma, J)
            * action_sign(g, J - sigma)
            * _rank_sign(g_sigma, gJ)
        )
        out[pos[g_sigma]] += sign * val
    return CohomologyClass(gJ, a.degree, tuple(out))


def class_is_zero_in_cohomology(K: SimplicialComplex, a: CohomologyClass) -> bool:
    coh = reduced_cohomology(full_subcomplex(K, a.subset))
    if coh.dim(a.degree) == 0:
        return True
    return all(x == 0 for x in coh.project(a.degree, a.cochain))


def classes_equal_in_cohomology(
    K: SimplicialComplex, a: CohomologyClass, b: CohomologyClass
) -> bool:
    if a.subset != b.subset or a.degree != b.degree:
        return False
    diff = tuple(x - y for x, y in zip(a.cochain, b.cochain))
    return class_is_zero_in_cohomology(K, CohomologyClass(a.subset, a.degree, diff))


def g_algebra_equivariance_check(K: SimplicialComplex, G: PermGroup) -> bool:
    """Verify g(α⋆β) = (gα)⋆(gβ) at cochain level for spanning classes."""
    if not is_g_complex(K, G):
        raise ValidationError("the group does not preserve the complex")
    supports = [
        J
        for J in _subset_iter(K, DEFAULT_SUBSET_CAP)
        if reduced_cohomology(full_subcomplex(K, J)).total_dim() > 0
    ]
    spanning = [c for J in supports for c in basis_classes(K, J)]
    for g in G.generators:
        for a in spanning:
            for b in spanning:
                lhs = transported_action(K, g, cup_product(K, a, b))
                rhs = cup_product(
                    K, transported_action(K, g, a), transported_action(K, g, b)
                )
                if lhs.cochain != rhs.cochain:
                    return False
    return True
