"""Reduced simplicial cohomology over Q, with induced maps of symmetries.

The cochain complex is augmented: degree -1 is spanned by the dual of the
empty face, so the complex {∅} has reduced cohomology k in degree -1 and a
single point has none anywhere.  Orientations come from the global vertex
order; the action of a permutation g on a basis cochain picks up the sign of
the permutation that re-sorts the image vertex tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ValidationError
from .linalg import Matrix, Vector, extend_to_basis, unit_vec
from .perms import Permutation, act_on_subset, sort_sign
from .simplicial import SimplicialComplex, full_subcomplex


def coboundary_matrices(K: SimplicialComplex) -> list[Matrix]:
    """Matrices d_p : C^p -> C^{p+1} for p = -1 .. dim-1 of the augmented complex."""
    if K.is_void:
        return []
    faces = {p: K.faces_of_dim(p) for p in range(-1, K.dim + 1)}
    out = []
    for p in range(-1, K.dim):
        lower = faces[p]
        upper = faces[p + 1]
        pos = {f: i for i, f in enumerate(lower)}
        mat = Matrix(len(upper), len(lower))
        for r, tau in enumerate(upper):
            ordered = sorted(tau)
            for j, v in enumerate(ordered):
                sigma = tau - {v}
                mat.data[r][pos[sigma]] = Fraction((-1) ** j)
        out.append(mat)
    return out


@dataclass
class _DegreeData:
    faces: list
    betti: int
    representatives: list[Vector]
    image_basis: list[Vector]
    d_out: Matrix | None  # C^p -> C^{p+1}, None when the target is zero
    _proj_matrix: Matrix | None = None

    def project(self, cochain) -> Vector:
        """Coordinates of a cocycle in the representative basis, mod coboundaries."""
        k = len(self.image_basis)
        if self.betti == 0:
            return ()
        if self._proj_matrix is None:
            cols = self.image_basis + self.representatives
            self._proj_matrix = Matrix.from_columns(cols, nrows=len(self.faces))
        if self.d_out is not None and any(
            x != 0 for x in self.d_out.mul_vec(cochain)
        ):
            raise ValidationError("projection of a non-cocycle")
        sol = self._proj_matrix.solve(cochain)
        if sol is None:
            raise ValidationError("cochain is not in the cocycle span")
        return sol[k:]


class CohomologyBasis:
    """Per-degree dimensions and representative cocycles of H̃^*(K; Q)."""

    def __init__(self, K: SimplicialComplex):
        self.complex = K
        self.degrees: dict[int, _DegreeData] = {}
        if K.is_void:
            return
        mats = coboundary_matrices(K)
        faces = {p: K.faces_of_dim(p) for p in range(-1, K.dim + 1)}
        for p in range(-1, K.dim + 1):
            n = len(faces[p])
            d_out = mats[p + 1] if p < K.dim else None
            d_in = mats[p] if p >= 0 else None  # mats[-1+1]=d_{-1} when p=0
            if p == -1:
                d_in = None
            cocycles = d_out.nullspace() if d_out is not None else [
                unit_vec(n, i) for i in range(n)
            ]
            image = d_in.column_space_basis() if d_in is not None else []
            reps = extend_to_basis(image, cocycles)
            self.degrees[p] = _DegreeData(
                faces=faces[p],
                betti=len(reps),
                representatives=reps,
                image_basis=image,
                d_out=d_out,
            )

    def dim(self, p: int) -> int:
        data = self.degrees.get(p)
        return data.betti if data else 0

    def dims(self) -> dict[int, int]:
        return {p: d.betti for p, d in self.degrees.items() if d.betti}

    def faces(self, p: int):
        data = self.degrees.get(p)
        return data.faces if data else []

    def representatives(self, p: int) -> list[Vector]:
        data = self.degrees.get(p)
        return data.representatives if data else []

    def project(self, p: int, cochain) -> Vector:
        data = self.degrees.get(p)
        if data is None:
            return ()
        return data.project(cochain)

    def total_dim(self) -> int:
        return sum(d.betti for d in self.degrees.values())


@lru_cache(maxsize=None)
def reduced_cohomology(K: SimplicialComplex) -> CohomologyBasis:
    return CohomologyBasis(K)


def betti_numbers(K: SimplicialComplex) -> dict[int, int]:
    return reduced_cohomology(K).dims()


def action_sign(g: Permutation, face) -> int:
    """Sign ε(g, σ) of re-sorting the image of an oriented simplex."""
    ordered = sorted(face)
    return sort_sign([g.act_vertex(v).sort_key for v in ordered])


def cochain_action_matrix(
    g: Permutation, src: CohomologyBasis, dst: CohomologyBasis, p: int
) -> Matrix:
    """Matrix of σ* ↦ ε(g,σ)(g·σ)* from C^p of src to C^p of dst."""
    src_faces = src.faces(p)
    dst_faces = dst.faces(p)
    pos = {f: i for i, f in enumerate(dst_faces)}
    mat = Matrix(len(dst_faces), len(src_faces))
    for j, sigma in enumerate(src_faces):
        img = frozenset(g.act_vertex(v) for v in sigma)
        if img not in pos:
            raise ValidationError("image face missing from the target complex")
        mat.data[pos[img]][j] = Fraction(action_sign(g, sigma))
    return mat


def induced_cohomology_map(
    g: Permutation, K: SimplicialComplex, J, p: int
) -> Matrix:
    """Matrix of g* on H̃^p(K_J) in the representative basis; g must fix J setwise."""
    Jw = frozenset(J)
    if act_on_subset(g, Jw, K) != Jw:
        raise ValidationError("element does not stabilise J")
    basis = reduced_cohomology(full_subcomplex(K, Jw))
    b = basis.dim(p)
    if b == 0:
        return Matrix(0, 0)
    tmat = cochain_action_matrix(g, basis, basis, p)
    cols = [basis.project(p, tmat.mul_vec(z)) for z in basis.representatives(p)]
    return Matrix.from_columns(cols, nrows=b)


def character_on_cohomology(
    K: SimplicialComplex, J, stab_elements, p: int
) -> dict[Permutation, Fraction]:
    """Trace of each stabilising element on H̃^p(K_J).

    The result is checked to be constant on conjugacy classes of the supplied
    element list, as far as conjugation stays inside the list.
    """
    traces = {h: induced_cohomology_map(h, K, J, p).trace() for h in stab_elements}
    elems = set(stab_elements)
    for h in stab_elements:
        for x in stab_elements:
            conj = x * h * x.inverse()
            if conj in elems and traces[conj] != traces[h]:
                raise ValidationError("trace is not constant on conjugacy classes")
    return traces


def lefschetz_cochain_sum(K: SimplicialComplex, g: Permutation) -> Fraction:
    """Alternating trace of g on the augmented cochain groups."""
    basis = reduced_cohomology(K)
    total = Fraction(0)
    for p in sorted(basis.degrees):
        mat = cochain_action_matrix(g, basis, basis, p)
        total += (-1 if p % 2 else 1) * mat.trace()
    return total


def lefschetz_cohomology_sum(K: SimplicialComplex, g: Permutation) -> Fraction:
    """Alternating trace of g on reduced cohomology; equals the cochain sum."""
    basis = reduced_cohomology(K)
    total = Fraction(0)
    for p in sorted(basis.degrees):
        if basis.dim(p) == 0:
            continue
        mat = induced_cohomology_map(g, K, frozenset(K.vertices), p)
        total += (-1 if p % 2 else 1) * mat.trace()
    return total


def euler_check(K: SimplicialComplex) -> bool:
    """Reduced Euler characteristic from face counts equals the cohomology one."""
    basis = reduced_cohomology(K)
    coh = sum(
        (-1 if p % 2 else 1) * basis.dim(p) for p in basis.degrees
    )
    return coh == K.euler_characteristic_reduced()
