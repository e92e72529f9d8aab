"""Brute-force cellular model of the moment-angle complex.

Ground truth for the combinatorial pipeline: cells are products with a disc
factor per vertex (point, circle or disc cell), admissible when the disc
coordinates form a face.  The boundary keeps the multidegree (the set of
non-point coordinates), so the cochain complex splits into blocks indexed by
vertex subsets; block J in ambient degree i must match H̃^{i-|J|-1}(K_J),
and a symmetry acts on a block with the sign of permuting the circle factors
(odd cells anticommute).  That single sign convention is the calibration
point for the whole package and is falsifiable through `flip_koszul`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import CapExceeded, ValidationError
from .linalg import Matrix, Vector, extend_to_basis, unit_vec
from .homology import action_sign, reduced_cohomology
from .hochster import MOMENT_ANGLE, betti as hochster_betti, summand_character
from .perms import (
    DEFAULT_GROUP_CAP,
    PermGroup,
    Permutation,
    restriction_sign,
    subset_orbit_reps,
)
from .simplicial import SimplicialComplex, face_key, full_subcomplex

DEFAULT_ORACLE_CAP = 7

Cell = tuple[frozenset, frozenset]  # (L: circle coords, I: disc coords)


@dataclass
class _DegreePiece:
    cells: list[Cell]
    betti: int = 0
    representatives: list[Vector] = field(default_factory=list)
    image_basis: list[Vector] = field(default_factory=list)
    _proj: Matrix | None = None

    def project(self, cochain) -> Vector:
        if self.betti == 0:
            return ()
        if self._proj is None:
            cols = self.image_basis + self.representatives
            self._proj = Matrix.from_columns(cols, nrows=len(self.cells))
        sol = self._proj.solve(cochain)
        if sol is None:
            raise ValidationError("cochain is not a cocycle in its block")
        return sol[len(self.image_basis):]


class Block:
    """All cells of one multidegree J, with its cochain complex and cohomology."""

    def __init__(self, K: SimplicialComplex, J: frozenset):
        self.J = J
        self.cells_by_degree: dict[int, list[Cell]] = {}
        faces_in_J = [f for f in K.all_faces() if f <= J]
        for I in faces_in_J:
            L = J - I
            deg = len(J) + len(I)
            self.cells_by_degree.setdefault(deg, []).append((L, I))
        for deg in self.cells_by_degree:
            self.cells_by_degree[deg].sort(key=lambda c: face_key(c[1]))
        self._index = {
            (deg, cell): k
            for deg, cells in self.cells_by_degree.items()
            for k, cell in enumerate(cells)
        }
        self.d: dict[int, Matrix] = {}
        for deg, cells in sorted(self.cells_by_degree.items()):
            upper = self.cells_by_degree.get(deg + 1, [])
            mat = Matrix(len(upper), len(cells))
            for col, (L, I) in enumerate(cells):
                for x in sorted(L):
                    I2 = I | {x}
                    if not K.has_face(I2):
                        continue
                    row = self._index[(deg + 1, (L - {x}, I2))]
                    below = sum(1 for l in L if l != x and l < x)
                    mat.data[row][col] = Fraction((-1) ** below)
            self.d[deg] = mat
        self.pieces: dict[int, _DegreePiece] = {}
        for deg, cells in sorted(self.cells_by_degree.items()):
            n = len(cells)
            d_out = self.d.get(deg)
            d_in = self.d.get(deg - 1)
            cocycles = (
                d_out.nullspace()
                if d_out is not None and d_out.rows
                else [unit_vec(n, k) for k in range(n)]
            )
            image = d_in.column_space_basis() if d_in is not None else []
            reps = extend_to_basis(image, cocycles)
            piece = _DegreePiece(cells=cells)
            piece.betti = len(reps)
            piece.representatives = reps
            piece.image_basis = image
            self.pieces[deg] = piece

    def dim(self, i: int) -> int:
        piece = self.pieces.get(i)
        return piece.betti if piece else 0

    def dims(self) -> dict[int, int]:
        return {i: p.betti for i, p in self.pieces.items() if p.betti}

    def cell_count(self) -> int:
        return sum(len(c) for c in self.cells_by_degree.values())


class MomentAngleCellComplex:
    def __init__(self, K: SimplicialComplex, cap: int = DEFAULT_ORACLE_CAP):
        n = len(K.vertices)
        if n > cap:
            raise CapExceeded(f"{n} vertices exceed the cellular cap {cap}")
        self.K = K
        self.blocks: dict[frozenset, Block] = {}
        for r in range(n + 1):
            for J in combinations(K.vertices, r):
                Jw = frozenset(J)
                self.blocks[Jw] = Block(K, Jw)

    def cell_count(self) -> int:
        return sum(b.cell_count() for b in self.blocks.values())

    def betti(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for block in self.blocks.values():
            for i, dim in block.dims().items():
                out[i] = out.get(i, 0) + dim
        return dict(sorted(out.items()))

    def betti_by_multidegree(self) -> dict[frozenset, dict[int, int]]:
        return {
            J: block.dims() for J, block in self.blocks.items() if block.dims()
        }


def build_cell_complex(
    K: SimplicialComplex, cap: int = DEFAULT_ORACLE_CAP
) -> MomentAngleCellComplex:
    return MomentAngleCellComplex(K, cap=cap)


def betti_cellular(Z: MomentAngleCellComplex, split_by_multidegree: bool = False):
    if split_by_multidegree:
        return Z.betti_by_multidegree()
    return Z.betti()


def _koszul_sign(g: Permutation, L: frozenset) -> int:
    # odd (circle) factors anticommute; even factors move freely
    return action_sign(g, L)


def block_action_matrix(
    Z: MomentAngleCellComplex, g: Permutation, J: frozenset, i: int
) -> Matrix:
    """Cochain matrix of g from block J to block g·J in degree i."""
    gJ = frozenset(g.act_vertex(v) for v in J)
    src = Z.blocks[J].cells_by_degree.get(i, [])
    dst = Z.blocks[gJ].cells_by_degree.get(i, [])
    pos = {cell: k for k, cell in enumerate(dst)}
    mat = Matrix(len(dst), len(src))
    for col, (L, I) in enumerate(src):
        gL = frozenset(g.act_vertex(v) for v in L)
        gI = frozenset(g.act_vertex(v) for v in I)
        mat.data[pos[(gL, gI)]][col] = Fraction(_koszul_sign(g, L))
    return mat


def block_trace(
    Z: MomentAngleCellComplex, g: Permutation, J: frozenset, i: int
) -> Fraction:
    """Trace of g on the degree-i cohomology of the block it stabilises."""
    gJ = frozenset(g.act_vertex(v) for v in J)
    if gJ != J:
        raise ValidationError("element does not stabilise the multidegree")
    piece = Z.blocks[J].pieces.get(i)
    if piece is None or piece.betti == 0:
        return Fraction(0)
    mat = block_action_matrix(Z, g, J, i)
    total = Fraction(0)
    for k, rep in enumerate(piece.representatives):
        coords = piece.project(mat.mul_vec(rep))
        total += coords[k]
    return total


def cellular_action_trace(
    Z: MomentAngleCellComplex, g: Permutation, i: int, orbit
) -> Fraction:
    """Trace of g on the degree-i cohomology of a union of multidegree blocks.

    The union must be g-stable; blocks moved off themselves contribute zero.
    """
    sets = [frozenset(J) for J in orbit]
    images = {frozenset(g.act_vertex(v) for v in J) for J in sets}
    if images != set(sets):
        raise ValidationError("the block union is not stable under the element")
    total = Fraction(0)
    for J in sets:
        if frozenset(g.act_vertex(v) for v in J) == J:
            total += block_trace(Z, g, J, i)
    return total


@dataclass
class DiffEntry:
    kind: str
    subset: tuple
    degree: int
    element: str
    combinatorial: str
    cellular: str


@dataclass
class DiffReport:
    entries: list[DiffEntry] = field(default_factory=list)

    @property
    def empty(self) -> bool:
        return not self.entries

    def add(self, kind, subset, degree, element, lhs, rhs):
        self.entries.append(
            DiffEntry(
                kind=kind,
                subset=tuple(sorted(str(v) for v in subset)),
                degree=degree,
                element=str(element),
                combinatorial=str(lhs),
                cellular=str(rhs),
            )
        )


def compare_with_hochster(
    K: SimplicialComplex,
    G: PermGroup,
    degrees,
    flip_koszul: bool = False,
    cap: int = DEFAULT_ORACLE_CAP,
    group_cap: int = DEFAULT_GROUP_CAP,
) -> DiffReport:
    """Cross-check the split pipeline against the cellular one, orbit by orbit.

    Verifies, per orbit representative J and ambient degree: the dimension of
    H̃^{i-|J|-1}(K_J) against the block cohomology, and the trace of every
    stabilizer generator (combinatorial character times smash twist against
    the honest cellular action).  `flip_koszul` deliberately corrupts the
    twist to demonstrate the comparison has teeth.
    """
    Z = build_cell_complex(K, cap=cap)
    table = subset_orbit_reps(K, G)
    report = DiffReport()
    degrees = list(degrees)
    for rep in table.representatives:
        coh = reduced_cohomology(full_subcomplex(K, rep))
        for i in degrees:
            p = i - len(rep) - 1
            hoch_dim = coh.dim(p) if p >= -1 else 0
            cell_dim = Z.blocks[rep].dim(i)
            if hoch_dim != cell_dim:
                report.add("dimension", rep, i, "-", hoch_dim, cell_dim)
                continue
            if hoch_dim == 0:
                continue
            gens = table.stabilizer_gens[rep]
            chars = summand_character(K, rep, gens, p, MOMENT_ANGLE)
            for g in gens:
                lhs = chars[g]
                if flip_koszul:
                    lhs *= restriction_sign(g, rep)
                rhs = block_trace(Z, g, rep, i)
                if lhs != rhs:
                    report.add("trace", rep, i, g, lhs, rhs)
    hoch_betti = hochster_betti(K, MOMENT_ANGLE)
    cell_betti = Z.betti()
    for i in degrees:
        hb = hoch_betti.get(i, 0)
        cb = cell_betti.get(i, 0)
        if hb != cb:
            report.add("betti", (), i, "-", hb, cb)
    return report


def assemble_global_boundary(Z: MomentAngleCellComplex) -> dict[int, Matrix]:
    """Boundary matrices of the whole complex, for block-exactness checks."""
    cells_by_degree: dict[int, list[tuple[frozenset, Cell]]] = {}
    for J, block in Z.blocks.items():
        for deg, cells in block.cells_by_degree.items():
            cells_by_degree.setdefault(deg, []).extend((J, c) for c in cells)
    for deg in cells_by_degree:
        cells_by_degree[deg].sort(key=lambda t: (face_key(t[0]), face_key(t[1][1])))
    index = {
        (deg, J, cell): k
        for deg, items in cells_by_degree.items()
        for k, (J, cell) in enumerate(items)
    }
    out: dict[int, Matrix] = {}
    for deg, items in sorted(cells_by_degree.items()):
        lower = cells_by_degree.get(deg - 1, [])
        mat = Matrix(len(lower), len(items))
        for col, (J, (L, I)) in enumerate(items):
            for x in sorted(I):
                L2, I2 = L | {x}, I - {x}
                row = index.get((deg - 1, J, (L2, I2)))
                if row is None:
                    continue
                below = sum(1 for l in L if l < x)
                mat.data[row][col] = Fraction((-1) ** below)
        out[deg] = mat
    return out
