"""Finite simplicial complexes with labelled vertices.

A vertex carries an optional coordinate index (the slot a symmetric group
permutes) and a small tag distinguishing vertices that share an index (join
components, the two poles of a 0-sphere).  Vertices without an index are
fixed by every index permutation.

Complexes are stored by their inclusion-maximal faces.  The complex whose
only face is the empty set ({∅}, reduced cohomology k in degree -1) is
distinguished from the void complex carrying no faces at all.  A complex may
also list ground vertices that appear in no face; restriction and the
degree bookkeeping of polyhedral products rely on that.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import ValidationError


@dataclass(frozen=True, order=False)
class Vertex:
    index: int | None
    tag: int = 0

    @property
    def sort_key(self) -> tuple[int, int, int]:
        # indexed vertices first, ordered by (index, tag); fixed vertices last
        if self.index is not None:
            return (0, self.index, self.tag)
        return (1, 0, self.tag)

    def __lt__(self, other: "Vertex") -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        if self.index is None:
            return "*" if self.tag == 0 else f"*{self.tag}"
        return str(self.index) if self.tag == 0 else f"{self.index}.{self.tag}"

    __repr__ = __str__


Face = frozenset  # frozenset[Vertex]


def face_key(face) -> tuple:
    return tuple(sorted(v.sort_key for v in face))


class SimplicialComplex:
    """Immutable complex given by facets; faces enumerated on demand."""

    __slots__ = ("vertices", "facets", "_hash")

    def __init__(self, vertices, facets):
        vs = tuple(sorted(set(vertices)))
        fs = set()
        for f in facets:
            fw = frozenset(f)
            if not fw <= set(vs):
                raise ValidationError("facet uses a vertex not in the vertex list")
            fs.add(fw)
        # drop non-maximal entries so the facet family is canonical
        maximal = {f for f in fs if not any(f < g for g in fs)}
        self.vertices = vs
        self.facets = frozenset(maximal)
        self._hash = hash((self.vertices, self.facets))

    def __setattr__(self, name, value):
        if hasattr(self, "_hash") and name != "_hash":
            raise AttributeError("SimplicialComplex is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self.vertices == other.vertices
            and self.facets == other.facets
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        fs = sorted(self.facets, key=face_key)
        shown = ", ".join("{" + ",".join(str(v) for v in sorted(f)) + "}" for f in fs[:8])
        more = "" if len(fs) <= 8 else f", ... ({len(fs)} facets)"
        return f"SimplicialComplex(V={len(self.vertices)}, facets=[{shown}{more}])"

    # -- basic queries ----------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        if self.is_void:
            return -1
        return max(len(f) for f in self.facets) - 1

    def has_face(self, face) -> bool:
        fw = frozenset(face)
        return any(fw <= g for g in self.facets)

    def all_faces(self) -> set[Face]:
        """Every face, including the empty face of a non-void complex."""
        out: set[Face] = set()
        for f in self.facets:
            items = sorted(f)
            for r in range(len(items) + 1):
                out.update(frozenset(c) for c in combinations(items, r))
        return out

    def faces_of_dim(self, p: int) -> list[Face]:
        """Sorted list of p-faces; p = -1 yields [∅] unless the complex is void."""
        if self.is_void:
            return []
        if p == -1:
            return [frozenset()]
        seen = {f for f in self.all_faces() if len(f) == p + 1}
        return sorted(seen, key=face_key)

    def face_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for f in self.all_faces():
            d = len(f) - 1
            counts[d] = counts.get(d, 0) + 1
        return counts

    def euler_characteristic_reduced(self) -> int:
        """Alternating face count over the augmented complex (∅ in degree -1)."""
        return sum((-1) ** d * n for d, n in self.face_counts().items())

    def indices(self) -> list[int]:
        return sorted({v.index for v in self.vertices if v.index is not None})


# -- constructions ---------------------------------------------------------


def skeleton(m: int, k: int) -> SimplicialComplex:
    """All subsets of {1..m} of cardinality at most k+1, on indexed vertices.

    k = -1 yields the complex {∅} on m ground vertices.
    """
    if m < 1:
        raise ValidationError("skeleton needs m >= 1")
    if k < -1:
        raise ValidationError("skeleton needs k >= -1")
    verts = [Vertex(i) for i in range(1, m + 1)]
    size = min(k + 1, m)
    if size <= 0:
        return SimplicialComplex(verts, [frozenset()])
    facets = [frozenset(c) for c in combinations(verts, size)]
    return SimplicialComplex(verts, facets)


def point() -> SimplicialComplex:
    return skeleton(1, 0)


def sphere_zero(index: int) -> SimplicialComplex:
    """Two disjoint poles sharing one index, distinguished by tag."""
    verts = [Vertex(index, 0), Vertex(index, 1)]
    return SimplicialComplex(verts, [frozenset([v]) for v in verts])


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Join with faces σ ⊔ τ; L's tags are shifted past K's to force disjointness."""
    if K.is_void or L.is_void:
        return SimplicialComplex([], [])
    shift = max((v.tag for v in K.vertices), default=-1) + 1
    relabel = {v: Vertex(v.index, v.tag + shift) for v in L.vertices}
    l_verts = [relabel[v] for v in L.vertices]
    facets = []
    for f in K.facets:
        for g in L.facets:
            facets.append(f | frozenset(relabel[v] for v in g))
    return SimplicialComplex(list(K.vertices) + l_verts, facets)


def full_subcomplex(K: SimplicialComplex, J) -> SimplicialComplex:
    """Restriction K_J = {σ ∩ J : σ ∈ K} on the vertices of J that are faces."""
    Jw = frozenset(J)
    if not Jw <= set(K.vertices):
        raise ValidationError("J is not a subset of the vertex set")
    if K.is_void:
        return SimplicialComplex([], [])
    verts = [v for v in Jw if K.has_face([v])]
    facets = {f & Jw for f in K.facets}
    return SimplicialComplex(verts, facets)


def vc_cube_dual(m: int) -> SimplicialComplex:
    """Boundary sphere of the vertex-cut m-cube, dualised.

    Start from the join of m index-labelled 0-spheres (a triangulated
    (m-1)-sphere on vertices 0_i, 1_i), delete the face {0_1, ..., 0_m} and
    cone its boundary off with one fixed vertex.  2m+1 vertices total.
    """
    if m < 1:
        raise ValidationError("vc_cube_dual needs m >= 1")
    zeros = [Vertex(i, 0) for i in range(1, m + 1)]
    ones = [Vertex(i, 1) for i in range(1, m + 1)]
    cone = Vertex(None, 0)
    deleted = frozenset(zeros)
    facets = []
    for choice in range(2**m):
        f = frozenset(ones[i] if (choice >> i) & 1 else zeros[i] for i in range(m))
        if f != deleted:
            facets.append(f)
    for i in range(m):
        rim = deleted - {zeros[i]}
        facets.append(rim | {cone})
    return SimplicialComplex(zeros + ones + [cone], facets)


def skeleton_face_count(m: int, k: int, j: int) -> int:
    """Number of j-faces of skeleton(m, k)."""
    return comb(m, j + 1) if j <= k else 0
