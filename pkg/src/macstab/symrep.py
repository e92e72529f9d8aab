"""Symmetric-group characters, induction and stable decompositions.

Two independent induction routes are kept side by side on purpose: character
inner products at a fixed rank m (class fusion through a Young subgroup), and
the horizontal-strip rule symbolically for all m.  Stability statements are
exactly the assertion that the second route is the eventual truth, so the two
must agree wherever both apply and the test suite enforces that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .errors import CapExceeded, NotACharacter, ValidationError
from .perms import Permutation

Partition = tuple[int, ...]

BRUTE_CAP = 8


def _check_partition(p: Partition) -> None:
    if any(a <= 0 for a in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValidationError(f"{p} is not a partition")


def partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order, (n) first."""
    if n < 0:
        raise ValidationError("partitions of a negative integer")
    out: list[Partition] = []

    def rec(rest: int, largest: int, prefix: tuple[int, ...]):
        if rest == 0:
            out.append(prefix)
            return
        for part in range(min(rest, largest), 0, -1):
            rec(rest - part, part, prefix + (part,))

    rec(n, n if n else 0, ())
    return out


def z_order(lam: Partition) -> int:
    """Centraliser order z_λ = Π i^{m_i} m_i! of the class with cycle type λ."""
    mult: dict[int, int] = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    return prod(i**m * factorial(m) for i, m in mult.items())


def class_size(lam: Partition) -> int:
    _check_partition(lam)
    return factorial(sum(lam)) // z_order(lam)


def hook_dim(lam: Partition) -> int:
    """Dimension of the irreducible labelled by λ, by the hook length formula."""
    _check_partition(lam)
    n = sum(lam)
    if n == 0:
        return 1
    cols = _conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j) + (cols[j] - i) - 1
    return factorial(n) // hooks


def _conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for a in lam if a > j) for j in range(lam[0]))


def conjugate_partition(lam: Partition) -> Partition:
    _check_partition(lam)
    return _conjugate(lam)


@lru_cache(maxsize=None)
def mn_character(lam: Partition, mu: Partition) -> int:
    """Irreducible character value χ_λ(μ) by the border-strip recursion."""
    if sum(lam) != sum(mu):
        raise ValidationError("character of mismatched sizes")
    if sum(lam) == 0:
        return 1
    _check_partition(lam)
    _check_partition(mu)
    k = mu[0]
    rest = mu[1:]
    total = 0
    # beta-set encoding: strips of length k <-> lowering one beta number by k
    ell = len(lam)
    betas = [lam[i] + (ell - 1 - i) for i in range(ell)]
    beta_set = set(betas)
    for i, b in enumerate(betas):
        nb = b - k
        if nb < 0 or nb in beta_set:
            continue
        new_betas = sorted((x for x in betas if x != b), reverse=True)
        # height of the strip = number of beta numbers jumped over
        height = sum(1 for x in betas if nb < x < b)
        merged = []
        inserted = False
        for x in new_betas:
            if not inserted and nb > x:
                merged.append(nb)
                inserted = True
            merged.append(x)
        if not inserted:
            merged.append(nb)
        new_lam = tuple(
            x - (len(merged) - 1 - idx) for idx, x in enumerate(merged)
        )
        new_lam = tuple(a for a in new_lam if a > 0)
        sign = -1 if height % 2 else 1
        total += sign * mn_character(new_lam, rest)
    return total


def sign_of_class(mu: Partition) -> int:
    return (-1) ** sum(part - 1 for part in mu)


# -- independent route: permutation-module characters -----------------------


def perm_module_character(mu: Partition, cycle_type: Partition) -> int:
    """Fixed points of a permutation of type `cycle_type` acting on tabloids.

    Counts distributions of the cycles into row bins of capacities μ by a
    depth-first packing; independent of the border-strip recursion.
    """
    _check_partition(mu)
    _check_partition(cycle_type)
    if sum(mu) != sum(cycle_type):
        raise ValidationError("size mismatch")
    bins = list(mu)
    cycles = sorted(cycle_type, reverse=True)

    def place(i: int, state: tuple[int, ...]) -> int:
        if i == len(cycles):
            return 1
        c = cycles[i]
        total = 0
        for b, cap in enumerate(state):
            if cap >= c:
                nxt = list(state)
                nxt[b] -= c
                total += place(i + 1, tuple(nxt))
        return total

    return place(0, tuple(bins))


def character_table_by_projection(n: int) -> dict[Partition, dict[Partition, int]]:
    """Character table of Σ_n built from permutation modules alone.

    Processing partitions in reverse-lexicographic order, each permutation
    character decomposes over the already-built irreducibles with λ itself
    appearing exactly once; subtracting leaves χ_λ.  Used as the brute-force
    oracle against the border-strip recursion.
    """
    classes = partitions(n)
    table: dict[Partition, dict[Partition, int]] = {}
    for lam in classes:  # reverse-lex starts at (n), dominance-compatible
        psi = {mu: perm_module_character(lam, mu) for mu in classes}
        for prev, chi in table.items():
            mult = _inner(psi, chi, n)
            if mult:
                psi = {mu: psi[mu] - mult * chi[mu] for mu in classes}
        table[lam] = psi
    return table


def _inner(f: dict[Partition, int], g: dict[Partition, int], n: int) -> Fraction:
    tot = sum(class_size(mu) * Fraction(f[mu]) * g[mu] for mu in f)
    return tot / factorial(n)


# -- class functions on Σ_n --------------------------------------------------


@dataclass(frozen=True)
class ClassFunction:
    """Rational class function on Σ_n, stored over cycle types."""

    n: int
    values: tuple[tuple[Partition, Fraction], ...]

    @classmethod
    def from_dict(cls, n: int, values: dict[Partition, Fraction]) -> "ClassFunction":
        classes = partitions(n)
        missing = [mu for mu in classes if mu not in values]
        if missing:
            raise ValidationError(f"missing classes {missing[:3]}")
        return cls(n, tuple((mu, Fraction(values[mu])) for mu in classes))

    @classmethod
    def irreducible(cls, lam: Partition) -> "ClassFunction":
        n = sum(lam)
        return cls.from_dict(
            n, {mu: Fraction(mn_character(lam, mu)) for mu in partitions(n)}
        )

    @classmethod
    def zero(cls, n: int) -> "ClassFunction":
        return cls.from_dict(n, {mu: Fraction(0) for mu in partitions(n)})

    def value(self, mu: Partition) -> Fraction:
        for key, val in self.values:
            if key == mu:
                return val
        raise ValidationError(f"no class {mu}")

    def as_dict(self) -> dict[Partition, Fraction]:
        return dict(self.values)

    def add(self, other: "ClassFunction") -> "ClassFunction":
        if self.n != other.n:
            raise ValidationError("rank mismatch")
        o = other.as_dict()
        return ClassFunction(
            self.n, tuple((mu, v + o[mu]) for mu, v in self.values)
        )

    def dim(self) -> Fraction:
        return self.value((1,) * self.n if self.n else ())


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    if f.n != g.n:
        raise ValidationError("rank mismatch")
    gd = g.as_dict()
    total = sum(
        class_size(mu) * val * gd[mu] for mu, val in f.values
    )
    return total / factorial(f.n)


def decompose(chi: ClassFunction) -> dict[Partition, int]:
    """Multiplicities ⟨χ, χ_λ⟩; aborts if any is negative or non-integral."""
    out: dict[Partition, int] = {}
    for lam in partitions(chi.n):
        c = inner_product(chi, ClassFunction.irreducible(lam))
        if c.denominator != 1 or c < 0:
            raise NotACharacter(
                f"multiplicity of {lam} is {c}; the class function is not a character"
            )
        if c:
            out[lam] = int(c)
    return out


def induce_to_sym(
    h_elements: list[Permutation],
    chi_h: dict[Permutation, Fraction],
    cap: int = BRUTE_CAP,
) -> ClassFunction:
    """Induce a character of an explicit subgroup H ≤ Σ_n to Σ_n by class fusion.

    Ind χ(μ) = z_μ / |H| · Σ over h in H of cycle type μ of χ(h).
    """
    if not h_elements:
        raise ValidationError("empty subgroup")
    n = h_elements[0].degree
    if n > cap:
        raise CapExceeded(f"degree {n} exceeds the explicit-subgroup cap {cap}")
    elems = set(h_elements)
    if len(elems) != len(h_elements):
        raise ValidationError("duplicate subgroup elements")
    # full closure check when cheap, a fixed-prefix probe otherwise
    probe = h_elements if len(h_elements) <= 400 else h_elements[:40]
    for a in probe:
        for b in h_elements:
            if a * b not in elems:
                raise ValidationError("subgroup elements are not closed")
    order = len(h_elements)
    sums: dict[Partition, Fraction] = {mu: Fraction(0) for mu in partitions(n)}
    for h in h_elements:
        sums[h.cycle_type()] += chi_h[h]
    values = {
        mu: Fraction(z_order(mu), order) * sums[mu] for mu in sums
    }
    return ClassFunction.from_dict(n, values)


def induce_young(psi: ClassFunction, m: int) -> ClassFunction:
    """Induce ψ ⊠ triv from Σ_b × Σ_{m-b} to Σ_m, over cycle types.

    Ind(ψ⊠1)(μ) = Σ over splittings μ = μ' ∪ μ'' with μ' ⊢ b of
    z_μ / (z_{μ'} z_{μ''}) · ψ(μ').
    """
    b = psi.n
    if m < b:
        raise ValidationError("target rank below subgroup rank")
    if m == b:
        return psi
    psi_d = psi.as_dict()
    values: dict[Partition, Fraction] = {}
    for mu in partitions(m):
        zmu = z_order(mu)
        total = Fraction(0)
        for mu1 in _sub_multisets(mu, b):
            mu2 = _multiset_minus(mu, mu1)
            total += Fraction(zmu, z_order(mu1) * z_order(mu2)) * psi_d[mu1]
        values[mu] = total
    return ClassFunction.from_dict(m, values)


def _sub_multisets(mu: Partition, b: int) -> list[Partition]:
    """Distinct sub-multisets of the parts of μ summing to b."""
    out: set[Partition] = set()

    def rec(i: int, rest: int, chosen: tuple[int, ...]):
        if rest == 0:
            out.add(tuple(sorted(chosen, reverse=True)))
            return
        if i == len(mu) or rest < 0:
            return
        rec(i + 1, rest - mu[i], chosen + (mu[i],))
        rec(i + 1, rest, chosen)

    rec(0, b, ())
    return sorted(out)


def _multiset_minus(mu: Partition, mu1: Partition) -> Partition:
    remaining = list(mu)
    for part in mu1:
        remaining.remove(part)
    return tuple(sorted(remaining, reverse=True))


def pieri_induce(mu: Partition, m: int) -> list[Partition]:
    """Partitions of m obtained from μ by adding a horizontal strip.

    These are the constituents, each with multiplicity one, of the induction
    of V_μ ⊠ trivial from Σ_{|μ|} × Σ_{m-|μ|} to Σ_m.
    """
    _check_partition(mu)
    b = sum(mu)
    if m < b:
        raise ValidationError("m smaller than the partition")
    # rows 2.. of λ interlace μ; row 1 takes the remainder
    tails: list[tuple[int, ...]] = [()]
    for i in range(1, len(mu) + 1):
        lo = mu[i] if i < len(mu) else 0
        hi = mu[i - 1]
        tails = [t + (v,) for t in tails for v in range(lo, hi + 1)]
    out = []
    for tail in tails:
        tail = tuple(a for a in tail if a > 0)
        first = m - sum(tail)
        if (mu and first < mu[0]) or (tail and first < tail[0]) or first < 0:
            continue
        lam = (first,) + tail if first else tail
        out.append(lam)
    return sorted(set(out), reverse=True)


# -- padded coordinates ------------------------------------------------------


@dataclass(frozen=True)
class PaddedPartition:
    base: Partition
    m: int

    def __post_init__(self):
        if self.base:
            _check_partition(self.base)
        if self.m < sum(self.base) + (self.base[0] if self.base else 0):
            raise ValidationError("outside stable range")

    @property
    def realized(self) -> Partition:
        return (self.m - sum(self.base),) + self.base


def pad(base: Partition, m: int) -> PaddedPartition:
    return PaddedPartition(tuple(base), m)


def unpad(lam: Partition) -> Partition:
    """Drop the first row; inverse of pad on the stable range."""
    _check_partition(lam)
    return lam[1:]


def weight(decomposition: dict[Partition, int]) -> int:
    """Largest base-partition size among constituents, in padded coordinates."""
    sizes = [sum(base) for base, mult in decomposition.items() if mult]
    return max(sizes, default=0)


def regular_character(n: int) -> ClassFunction:
    values = {mu: Fraction(0) for mu in partitions(n)}
    values[(1,) * n] = Fraction(factorial(n))
    return ClassFunction.from_dict(n, values)


def natural_permutation_character(n: int) -> ClassFunction:
    values = {
        mu: Fraction(sum(1 for part in mu if part == 1)) for mu in partitions(n)
    }
    return ClassFunction.from_dict(n, values)
