"""Permutation groups acting on vertex labels through their index coordinate.

Permutations are stored in one-line notation on {1..m}.  A group is a
generator list; element lists are only materialised under a cap, and
stabilizers come out of orbit breadth-first search as Schreier generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations as iter_permutations
from math import comb, factorial

from .errors import CapExceeded, ValidationError
from .simplicial import SimplicialComplex, Vertex, face_key, full_subcomplex

DEFAULT_GROUP_CAP = 200_000
DEFAULT_SUBSET_CAP = 1 << 21
DEFAULT_SUPPORT_CAP = 8


@dataclass(frozen=True)
class Permutation:
    """One-line notation: images[i-1] = g(i) for i in 1..m."""

    images: tuple[int, ...]

    def __post_init__(self):
        m = len(self.images)
        if sorted(self.images) != list(range(1, m + 1)):
            raise ValidationError("not a bijection of {1..m}")

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(tuple(range(1, m + 1)))

    @classmethod
    def from_cycles(cls, m: int, *cycles) -> "Permutation":
        images = list(range(1, m + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:]):
                images[a - 1] = b
            if cyc:
                images[cyc[-1] - 1] = cyc[0]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """self ∘ other: apply `other` first."""
        if self.degree != other.degree:
            raise ValidationError("degree mismatch")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return self.compose(other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(1, self.degree + 1):
            if i in seen or self(i) == i:
                continue
            cyc = [i]
            j = self(i)
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths including fixed points, sorted descending."""
        lengths = sorted((len(c) for c in self.cycles()), reverse=True)
        fixed = self.degree - sum(lengths)
        return tuple(lengths) + (1,) * fixed

    def sign(self) -> int:
        return (-1) ** sum(len(c) - 1 for c in self.cycles())

    def act_index(self, i: int) -> int:
        if i > self.degree:
            raise ValidationError("index exceeds permutation degree")
        return self(i)

    def act_vertex(self, v: Vertex) -> Vertex:
        if v.index is None:
            return v
        return Vertex(self.act_index(v.index), v.tag)

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)


def sort_sign(keys: list) -> int:
    """Sign of the permutation sorting `keys` (assumed distinct)."""
    inversions = sum(
        1 for a, b in combinations(range(len(keys)), 2) if keys[a] > keys[b]
    )
    return -1 if inversions % 2 else 1


def restriction_sign(g: Permutation, subset) -> int:
    """Sign of g as a permutation of the vertex subset it stabilises."""
    ordered = sorted(subset)
    images = [g.act_vertex(v) for v in ordered]
    if set(images) != set(ordered):
        raise ValidationError("element does not stabilise the subset")
    return sort_sign([v.sort_key for v in images])


@dataclass(frozen=True)
class PermGroup:
    degree: int
    generators: tuple[Permutation, ...]
    known_order: int | None = None

    def __post_init__(self):
        for g in self.generators:
            if g.degree != self.degree:
                raise ValidationError("generator degree mismatch")

    @classmethod
    def symmetric(cls, m: int) -> "PermGroup":
        if m <= 1:
            gens = (Permutation.identity(max(m, 1)),)
        elif m == 2:
            gens = (Permutation.from_cycles(2, (1, 2)),)
        else:
            gens = (
                Permutation.from_cycles(m, (1, 2)),
                Permutation.from_cycles(m, tuple(range(1, m + 1))),
            )
        return cls(max(m, 1), gens, known_order=factorial(m))

    @classmethod
    def cyclic(cls, m: int) -> "PermGroup":
        return cls(m, (Permutation.from_cycles(m, tuple(range(1, m + 1))),), known_order=m)

    @classmethod
    def trivial(cls, m: int) -> "PermGroup":
        return cls(m, (Permutation.identity(m),), known_order=1)

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def order(self, cap: int = DEFAULT_GROUP_CAP) -> int:
        if self.known_order is not None:
            return self.known_order
        return len(enumerate_group(list(self.generators), cap))


def enumerate_group(gens: list[Permutation], cap: int = DEFAULT_GROUP_CAP) -> list[Permutation]:
    """Full element list by breadth-first closure, deterministic order."""
    if not gens:
        raise ValidationError("need at least one generator")
    ident = Permutation.identity(gens[0].degree)
    seen = {ident}
    order = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                e = g * h
                if e not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(f"group closure exceeds cap {cap}")
                    seen.add(e)
                    order.append(e)
                    nxt.append(e)
        frontier = nxt
    return order


def act_on_subset(g: Permutation, J, K: SimplicialComplex) -> frozenset:
    """Image {g·v : v ∈ J} of a vertex subset of K."""
    Jw = frozenset(J)
    if not Jw <= set(K.vertices):
        raise ValidationError("J is not a subset of the vertex set")
    top = max((v.index for v in K.vertices if v.index is not None), default=0)
    if g.degree < top:
        raise ValidationError("permutation degree smaller than the largest index")
    return frozenset(g.act_vertex(v) for v in Jw)


def is_g_complex(K: SimplicialComplex, G: PermGroup) -> bool:
    """True iff every generator maps every facet of K into K.

    Generators suffice: the action preserves face cardinality and groups are
    closed under composition.
    """
    for g in G.generators:
        for f in K.facets:
            img = frozenset(g.act_vertex(v) for v in f)
            if not K.has_face(img):
                return False
        for v in K.vertices:
            if g.act_vertex(v) not in K.vertices:
                return False
    return True


@dataclass
class OrbitTable:
    """Orbit representatives with sizes, Schreier stabilizer generators and
    a transversal mapping each subset to an element carrying its representative
    to it."""

    group: PermGroup
    representatives: list[frozenset] = field(default_factory=list)
    orbit_sizes: dict[frozenset, int] = field(default_factory=dict)
    stabilizer_gens: dict[frozenset, tuple[Permutation, ...]] = field(default_factory=dict)
    transversal: dict[frozenset, Permutation] = field(default_factory=dict)
    total_subsets: int = 0

    def orbit_of(self, rep: frozenset) -> list[frozenset]:
        return [s for s, g in self.transversal.items() if self.rep_of(s) == rep]

    def rep_of(self, subset: frozenset) -> frozenset:
        g = self.transversal[subset]
        return frozenset(g.inverse().act_vertex(v) for v in subset)

    def stabilizer_order(self, rep: frozenset, cap: int = DEFAULT_GROUP_CAP) -> int:
        gens = list(self.stabilizer_gens[rep]) or [self.group.identity()]
        return len(enumerate_group(gens, cap))


def subset_orbit_reps(
    K: SimplicialComplex,
    G: PermGroup,
    max_size: int | None = None,
    cap: int = DEFAULT_SUBSET_CAP,
) -> OrbitTable:
    """Orbits of vertex subsets under G, by BFS over the generator action.

    Representatives are the lexicographically least subsets of their orbits
    (in vertex sort order); stabilizer generators come from Schreier's lemma
    with duplicates and the identity removed.
    """
    verts = list(K.vertices)
    n = len(verts)
    limit = n if max_size is None else min(max_size, n)
    count = sum(comb(n, r) for r in range(limit + 1))
    if count > cap:
        raise CapExceeded(f"subset enumeration {count} exceeds cap {cap}")

    all_subsets = []
    for r in range(limit + 1):
        all_subsets.extend(frozenset(c) for c in combinations(verts, r))

    table = OrbitTable(group=G, total_subsets=len(all_subsets))
    ident = G.identity()
    assigned: dict[frozenset, Permutation] = {}
    for seed in sorted(all_subsets, key=lambda s: face_key(s)):
        if seed in assigned:
            continue
        # BFS orbit with transversal words
        orbit = {seed: ident}
        frontier = [seed]
        while frontier:
            nxt = []
            for s in frontier:
                ts = orbit[s]
                for g in G.generators:
                    img = frozenset(g.act_vertex(v) for v in s)
                    if img not in orbit:
                        orbit[img] = g * ts
                        nxt.append(img)
            frontier = nxt
        rep = min(orbit, key=face_key)
        # rebase the transversal on the true (lex-least) representative
        to_rep = orbit[rep]
        rebased = {s: w * to_rep.inverse() for s, w in orbit.items()}
        # Schreier generators of the stabilizer of rep
        stab: list[Permutation] = []
        seen_stab = set()
        for s, ws in rebased.items():
            for g in G.generators:
                img = frozenset(g.act_vertex(v) for v in s)
                sg = rebased[img].inverse() * (g * ws)
                if not sg.is_identity() and sg not in seen_stab:
                    seen_stab.add(sg)
                    stab.append(sg)
        table.representatives.append(rep)
        table.orbit_sizes[rep] = len(orbit)
        table.stabilizer_gens[rep] = tuple(stab) if stab else (ident,)
        for s, w in rebased.items():
            assigned[s] = w
    table.transversal = assigned
    table.representatives.sort(key=face_key)
    return table


def support_split(
    J,
    K: SimplicialComplex,
    m: int,
    cap: int = DEFAULT_SUPPORT_CAP,
) -> tuple[tuple[int, ...], list[Permutation], int]:
    """Split the stabilizer of J in Σ_m as (finite part on the support) × Σ_rest.

    support: indices appearing among the labels of J; finite part: elements of
    Sym(support), returned as degree-m permutations, that stabilise J setwise
    (brute force); complement_rank = m - |support|.  Indices outside the
    support move nothing in J, so stab(J, m) = finite_part × Sym(complement).
    """
    Jw = frozenset(J)
    for v in Jw:
        if v not in K.vertices:
            raise ValidationError("J is not a subset of the vertex set")
    support = tuple(sorted({v.index for v in Jw if v.index is not None}))
    if len(support) > cap:
        raise CapExceeded(f"support size {len(support)} exceeds brute-force cap {cap}")
    if any(i > m for i in support):
        raise ValidationError("support exceeds the ambient degree m")
    finite_part: list[Permutation] = []
    for imgs in iter_permutations(support):
        images = list(range(1, m + 1))
        for src, dst in zip(support, imgs):
            images[src - 1] = dst
        h = Permutation(tuple(images))
        if frozenset(h.act_vertex(v) for v in Jw) == Jw:
            finite_part.append(h)
    return support, finite_part, m - len(support)


def stabilizer_order_in_sym(J, K: SimplicialComplex, m: int) -> int:
    """|stab(J, m)| inside Σ_m by brute force; only for small m."""
    if m > 8:
        raise CapExceeded("brute-force stabilizer only for m <= 8")
    Jw = frozenset(J)
    count = 0
    for imgs in iter_permutations(range(1, m + 1)):
        g = Permutation(tuple(imgs))
        if frozenset(g.act_vertex(v) for v in Jw) == Jw:
            count += 1
    return count


def g_full_subcomplex_matches(K: SimplicialComplex, g: Permutation, J) -> bool:
    """g·K_J == K_{g·J} as complexes."""
    Jw = frozenset(J)
    KJ = full_subcomplex(K, Jw)
    gJ = frozenset(g.act_vertex(v) for v in Jw)
    KgJ = full_subcomplex(K, gJ)
    mapped = SimplicialComplex(
        [g.act_vertex(v) for v in KJ.vertices],
        [frozenset(g.act_vertex(v) for v in f) for f in KJ.facets],
    )
    return mapped == KgJ
