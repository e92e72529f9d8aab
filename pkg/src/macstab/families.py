"""Consistent families of symmetric-group complexes and stability scans.

A family produces, for every rank m, a complex whose indexed vertices use
exactly the indices 1..m together with the index action of Σ_m, and embeds
into the next rank by label identity.  Scans certify multiplicity
stabilization and polynomial Betti growth over a finite window only; they
never claim anything beyond the scanned range.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations as iter_permutations
from math import factorial

from .errors import ValidationError
from .hochster import SpherePair, sym_irreducible_decomposition
from .perms import (
    PermGroup,
    Permutation,
    subset_orbit_reps,
    stabilizer_order_in_sym,
    support_split,
)
from .simplicial import (
    SimplicialComplex,
    Vertex,
    full_subcomplex,
    join,
    skeleton,
    vc_cube_dual,
)
from .symrep import Partition, weight as table_weight


class Family:
    description: str = "family"

    def complex_at(self, m: int) -> SimplicialComplex:
        raise NotImplementedError

    def instantiate(self, m: int) -> tuple[SimplicialComplex, PermGroup]:
        if m < 1:
            raise ValidationError("family rank must be >= 1")
        K = self.complex_at(m)
        for v in K.vertices:
            if v.index is not None and not (1 <= v.index <= m):
                raise ValidationError("family complex uses indices outside 1..m")
        return K, PermGroup.symmetric(m)


@dataclass(frozen=True)
class SkeletonFamily(Family):
    k: int

    @property
    def description(self) -> str:
        return f"skeleton:{self.k}"

    def complex_at(self, m: int) -> SimplicialComplex:
        return skeleton(m, self.k)


@dataclass(frozen=True)
class JoinSkeletonsFamily(Family):
    ks: tuple[int, ...]

    def __post_init__(self):
        if not self.ks or any(k < 0 for k in self.ks):
            raise ValidationError("join family needs skeleton dimensions >= 0")

    @property
    def description(self) -> str:
        return "join:" + ",".join(map(str, self.ks))

    def complex_at(self, m: int) -> SimplicialComplex:
        out = skeleton(m, self.ks[0])
        for k in self.ks[1:]:
            out = join(out, skeleton(m, k))
        return out


@dataclass(frozen=True)
class VcCubeDualFamily(Family):
    @property
    def description(self) -> str:
        return "vccube"

    def complex_at(self, m: int) -> SimplicialComplex:
        return vc_cube_dual(m)


@dataclass(frozen=True)
class CustomFamily(Family):
    name: str
    builder: object  # callable m -> SimplicialComplex

    @property
    def description(self) -> str:
        return f"custom:{self.name}"

    def complex_at(self, m: int) -> SimplicialComplex:
        return self.builder(m)


def parse_family(spec: str, custom_loader=None) -> Family:
    if spec.startswith("skeleton:"):
        return SkeletonFamily(int(spec.split(":", 1)[1]))
    if spec.startswith("join:"):
        parts = spec.split(":", 1)[1]
        return JoinSkeletonsFamily(tuple(int(x) for x in parts.split(",")))
    if spec == "vccube":
        return VcCubeDualFamily()
    if spec.startswith("custom:"):
        if custom_loader is None:
            raise ValidationError("no loader available for custom families")
        return custom_loader(spec.split(":", 1)[1])
    raise ValidationError(f"unknown family {spec!r}")


# -- structural checks --------------------------------------------------------


def _extend(g: Permutation, m_plus: int) -> Permutation:
    return Permutation(g.images + tuple(range(g.degree + 1, m_plus + 1)))


def check_consistent(f: Family, m_range) -> bool:
    """Faces include into the next rank and the inclusions commute with Σ_m."""
    ms = list(m_range)
    for m in ms:
        K, G = f.instantiate(m)
        K_next, _ = f.instantiate(m + 1)
        if not set(K.vertices) <= set(K_next.vertices):
            return False
        for facet in K.facets:
            if not K_next.has_face(facet):
                return False
        for g in G.generators:
            g_up = _extend(g, m + 1)
            for facet in K.facets:
                img = frozenset(g_up.act_vertex(v) for v in facet)
                if not K_next.has_face(img):
                    return False
    return True


def _index_relabellings(src_indices, d: int, order_preserving_first: bool = True):
    """Injections of a small index set into 1..d."""
    src = sorted(src_indices)
    c = len(src)
    if c > d:
        return
    yield dict(zip(src, range(1, c + 1)))
    for img in iter_permutations(range(1, d + 1), c):
        mapping = dict(zip(src, img))
        if mapping != dict(zip(src, range(1, c + 1))):
            yield mapping


def _relabel_set(S, mapping) -> frozenset | None:
    out = set()
    for v in S:
        if v.index is None:
            out.add(v)
        else:
            out.add(Vertex(mapping[v.index], v.tag))
    return frozenset(out)


def check_r_vertex_stable(f: Family, r: int, d: int, m_range) -> bool:
    """Every (r+1)-vertex collection at rank m is Σ_m-equivalent to one from rank d."""
    Kd, _ = f.instantiate(d)
    vd = set(Kd.vertices)
    for m in m_range:
        if m < d:
            continue
        Km, _ = f.instantiate(m)
        for S in combinations(Km.vertices, r + 1):
            idx = {v.index for v in S if v.index is not None}
            if len(idx) > d:
                return False
            if not any(
                _relabel_set(S, mp) <= vd for mp in _index_relabellings(idx, d)
            ):
                return False
    return True


def check_r_face_stable(f: Family, r: int, d: int, m_range) -> bool:
    """Every r-face at rank m is Σ_m-equivalent to an r-face from rank d."""
    Kd, _ = f.instantiate(d)
    for m in m_range:
        if m < d:
            continue
        Km, _ = f.instantiate(m)
        for face in Km.faces_of_dim(r):
            idx = {v.index for v in face if v.index is not None}
            if len(idx) > d:
                return False
            ok = False
            for mp in _index_relabellings(idx, d):
                img = _relabel_set(face, mp)
                if img is not None and Kd.has_face(img):
                    ok = True
                    break
            if not ok:
                return False
    return True


def check_stabiliser_consistent(f: Family, J, m_range) -> bool:
    """stab(J, m) = (finite part on the support) × Σ_{m-b} with b = |support|.

    Verified by the exact order identity against a brute-force stabilizer
    count in Σ_m, and by checking that the complement symmetric group fixes
    J pointwise.
    """
    Jw = frozenset(J)
    b = len({v.index for v in Jw if v.index is not None})
    for m in m_range:
        if m < b:
            continue
        Km, _ = f.instantiate(m)
        if not Jw <= set(Km.vertices):
            return False
        support, finite_part, comp_rank = support_split(Jw, Km, m)
        if comp_rank != m - len(support):
            return False
        expected = len(finite_part) * factorial(comp_rank)
        if stabilizer_order_in_sym(Jw, Km, m) != expected:
            return False
        complement = [i for i in range(1, m + 1) if i not in support]
        for gen in _sym_generators_on(complement, m):
            if any(gen.act_vertex(v) != v for v in Jw):
                return False
    return True


def _sym_generators_on(points: list[int], m: int) -> list[Permutation]:
    if len(points) < 2:
        return []
    gens = [Permutation.from_cycles(m, (points[0], points[1]))]
    if len(points) > 2:
        gens.append(Permutation.from_cycles(m, tuple(points)))
    return gens


# -- scans ---------------------------------------------------------------------


@dataclass
class PolynomialFit:
    degree: int
    coefficients: tuple[Fraction, ...]  # ascending powers of m
    onset_m: int

    def predict(self, m: int) -> Fraction:
        acc = Fraction(0)
        for k, c in enumerate(self.coefficients):
            acc += c * m**k
        return acc

    def as_strings(self) -> list[str]:
        return [str(c) for c in self.coefficients]


@dataclass
class StabilityScanReport:
    family: str
    degree: int
    sphere_dim: int
    m_values: list[int] = field(default_factory=list)
    tables: dict[int, dict[Partition, int]] = field(default_factory=dict)
    onset: int | None = None
    certified: bool = False
    weight: int = 0
    betti: dict[int, int] = field(default_factory=dict)
    diff_table: list[list[int]] | None = None
    fit: PolynomialFit | None = None


def betti_at_degree(
    K: SimplicialComplex, pair: SpherePair, i: int, group: PermGroup
) -> int:
    """b_i alone, over orbit representatives pruned by the vanishing bound."""
    max_size = i // pair.d if pair.d >= 1 else None
    table = subset_orbit_reps(K, group, max_size=max_size)
    from .homology import reduced_cohomology

    total = 0
    for rep in table.representatives:
        p = pair.simplicial_degree(i, len(rep))
        if p < -1:
            continue
        total += table.orbit_sizes[rep] * reduced_cohomology(
            full_subcomplex(K, rep)
        ).dim(p)
    return total


def multiplicity_scan(
    f: Family,
    pair: SpherePair,
    i: int,
    m_range,
    threads: int = 1,
) -> StabilityScanReport:
    """Padded multiplicity tables over a window, with the observed onset.

    Stabilization is certified only within the window: the onset is the least
    scanned m from which the padded tables stay constant to the end.
    """
    if pair.d < 1:
        raise ValidationError("multiplicity scans need a sphere of dimension >= 1")
    ms = sorted(set(m_range))
    if not ms:
        raise ValidationError("empty scan range")
    report = StabilityScanReport(
        family=f.description, degree=i, sphere_dim=pair.d, m_values=ms
    )

    def compute(m: int):
        K, G = f.instantiate(m)
        table = sym_irreducible_decomposition(K, pair, i, m)
        b = betti_at_degree(K, pair, i, G)
        return m, table, b

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(compute, ms))
    else:
        results = [compute(m) for m in ms]
    for m, table, b in results:
        report.tables[m] = table
        report.betti[m] = b
    last = report.tables[ms[-1]]
    onset = ms[-1]
    for m in reversed(ms):
        if report.tables[m] == last:
            onset = m
        else:
            break
    report.onset = onset
    report.certified = onset < ms[-1]
    report.weight = table_weight(last)
    return report


def _difference_table(values: list[int]) -> list[list[int]]:
    rows = [list(values)]
    while len(rows[-1]) > 1:
        prev = rows[-1]
        rows.append([b - a for a, b in zip(prev, prev[1:])])
    return rows


def _fit_tail(ms: list[int], values: list[int]) -> PolynomialFit | None:
    for s in range(len(ms)):
        seq = values[s:]
        if len(seq) < 2:
            break
        rows = _difference_table(seq)
        for t in range(len(rows) - 1):
            row = rows[t + 1]
            if row and all(x == 0 for x in row):
                coeffs = _newton_to_monomial(ms[s], [r[0] for r in rows[: t + 1]])
                fit = PolynomialFit(degree=t, coefficients=coeffs, onset_m=ms[s])
                if all(fit.predict(m) == v for m, v in zip(ms[s:], seq)):
                    return fit
    return None


def _newton_to_monomial(m0: int, leading_diffs: list[int]) -> tuple[Fraction, ...]:
    """Exact coefficients of Σ_k Δ^k · C(m - m0, k) as a polynomial in m."""
    poly = [Fraction(0)]

    def add(p, q):
        size = max(len(p), len(q))
        return [
            (p[k] if k < len(p) else 0) + (q[k] if k < len(q) else 0)
            for k in range(size)
        ]

    def mul(p, q):
        out = [Fraction(0)] * (len(p) + len(q) - 1)
        for a, pa in enumerate(p):
            for b, qb in enumerate(q):
                out[a + b] += pa * qb
        return out

    for k, dk in enumerate(leading_diffs):
        term = [Fraction(1)]
        for j in range(k):
            term = mul(term, [Fraction(-(m0 + j)), Fraction(1)])  # (m - m0 - j)
        term = [c * Fraction(dk, factorial(k)) for c in term]
        poly = add(poly, term)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def betti_growth(
    f: Family,
    pair: SpherePair,
    i: int,
    m_range,
) -> tuple[PolynomialFit | None, list[int], list[list[int]]]:
    """Exact finite-difference detection of eventually polynomial b_i(m).

    Returns (fit or None, the scanned values, the difference table).  The fit
    interpolates a maximal suffix of the window with zero residual; None means
    the window does not yet certify polynomiality.
    """
    ms = sorted(set(m_range))
    values = []
    for m in ms:
        K, G = f.instantiate(m)
        values.append(betti_at_degree(K, pair, i, G))
    fit = _fit_tail(ms, values)
    return fit, values, _difference_table(values)
