"""Multigraded Betti numbers and depth of a monomial ideal, two independent ways.

The primary route computes each Betti number as a reduced simplicial homology
rank of an upper Koszul subcomplex; the oracle route reads the same number off
the multidegree strand of the generator-subset (Taylor) complex.  Both work in
characteristic zero via exact integer ranks, and both only visit multidegrees
in the lcm lattice, where all nonzero entries live.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import UndefinedInputError
from .linalg import exact_rank
from .monomials import Monomial, MonomialIdeal


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers of an ideal, keyed by (i, multidegree)."""

    n: int
    entries: dict[tuple[int, tuple[int, ...]], int]

    @property
    def pd(self) -> int:
        """Projective dimension: the largest homological index with a nonzero entry."""
        return max((i for i, _ in self.entries), default=0)

    def total(self, i: int) -> int:
        """Total Betti number in homological degree i."""
        return sum(rank for (h, _), rank in self.entries.items() if h == i)

    def totals(self) -> list[int]:
        return [self.total(i) for i in range(self.pd + 1)]


@dataclass(frozen=True)
class DepthCertificate:
    """depth(I), depth(S/I) and the defect k = n - depth(I) = pd(I)."""

    depth_ideal: int
    depth_quotient: int
    k: int


def lcm_lattice(ideal: MonomialIdeal) -> list[tuple[int, ...]]:
    """All joins of nonempty generator subsets, sorted lexicographically."""
    _require_proper(ideal)
    lattice: set[tuple[int, ...]] = set()
    for gen in ideal.generators:
        v = gen.exponents
        lattice |= {v} | {tuple(map(max, a, v)) for a in lattice}
    return sorted(lattice)


def betti(ideal: MonomialIdeal) -> BettiTable:
    """Betti numbers via upper Koszul subcomplexes.

    For a multidegree a, the entry at homological index i is the rank of the
    reduced homology, in degree i-1, of the complex of squarefree vectors
    b <= a with x^(a-b) in the ideal.
    """
    _require_proper(ideal)
    entries: dict[tuple[int, tuple[int, ...]], int] = {}
    for a in lcm_lattice(ideal):
        support = [j for j in range(ideal.n) if a[j] > 0]
        faces = []
        for size in range(len(support) + 1):
            for subset in itertools.combinations(support, size):
                reduced = list(a)
                for j in subset:
                    reduced[j] -= 1
                if Monomial(tuple(reduced)) in ideal:
                    faces.append(frozenset(subset))
        for degree, rank in _reduced_homology(faces).items():
            if rank:
                entries[(degree + 1, a)] = rank
    return BettiTable(ideal.n, entries)


def betti_oracle_lcm(ideal: MonomialIdeal) -> BettiTable:
    """Betti numbers via exact-multidegree strands of the generator-subset complex.

    The strand at multidegree a has one basis element per generator subset
    whose lcm is exactly a; the boundary keeps the faces that preserve the
    lcm.  Independent of the Koszul route above.
    """
    _require_proper(ideal)
    gens = [m.exponents for m in ideal.generators]
    r = len(gens)
    lcm_of: dict[int, tuple[int, ...]] = {}
    strands: dict[tuple[int, ...], dict[int, list[int]]] = {}
    for mask in range(1, 1 << r):
        low = mask & -mask
        rest = mask ^ low
        v = gens[low.bit_length() - 1]
        lcm_of[mask] = v if not rest else tuple(map(max, lcm_of[rest], v))
        size = mask.bit_count()
        strands.setdefault(lcm_of[mask], {}).setdefault(size, []).append(mask)

    entries: dict[tuple[int, tuple[int, ...]], int] = {}
    for a, by_size in strands.items():
        index = {mask: col for masks in by_size.values() for col, mask in enumerate(masks)}
        boundary_rank: dict[int, int] = {}
        for size, masks in by_size.items():
            targets = by_size.get(size - 1, [])
            if not targets:
                boundary_rank[size] = 0
                continue
            matrix = []
            for mask in masks:
                row = [0] * len(targets)
                members = [b for b in range(r) if mask >> b & 1]
                for pos, b in enumerate(members):
                    face = mask ^ (1 << b)
                    if lcm_of[face] == a:
                        row[index[face]] = -1 if pos % 2 else 1
                matrix.append(row)
            boundary_rank[size] = exact_rank(matrix)
        for size, masks in by_size.items():
            rank = len(masks) - boundary_rank.get(size, 0) - boundary_rank.get(size + 1, 0)
            if rank:
                entries[(size - 1, a)] = rank
    return BettiTable(ideal.n, entries)


def depth(ideal: MonomialIdeal) -> DepthCertificate:
    """Exact depth from projective dimension: depth(I) = n - pd(I)."""
    table = betti(ideal)
    depth_ideal = ideal.n - table.pd
    return DepthCertificate(depth_ideal=depth_ideal,
                            depth_quotient=depth_ideal - 1,
                            k=ideal.n - depth_ideal)


def _reduced_homology(faces: list[frozenset[int]]) -> dict[int, int]:
    """Reduced homology ranks (char 0) of a simplicial complex given as faces.

    Faces include the empty set when present; a void complex (no faces) has
    no homology.  Returns {degree: rank} for nonzero ranks only; degree -1
    appears exactly when the complex is the single empty face.
    """
    if not faces:
        return {}
    by_dim: dict[int, list[frozenset[int]]] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for fs in by_dim.values():
        fs.sort(key=sorted)
    top = max(by_dim)
    ranks: dict[int, int] = {}
    boundary_rank: dict[int, int] = {}
    for d in range(top + 1):
        upper = by_dim.get(d, [])
        lower = by_dim.get(d - 1, [])
        if not upper or not lower:
            boundary_rank[d] = 0
            continue
        index = {f: col for col, f in enumerate(lower)}
        matrix = []
        for f in upper:
            row = [0] * len(lower)
            for pos, v in enumerate(sorted(f)):
                row[index[f - {v}]] = -1 if pos % 2 else 1
            matrix.append(row)
        boundary_rank[d] = exact_rank(matrix)
    for d in range(-1, top + 1):
        rank = len(by_dim.get(d, [])) - boundary_rank.get(d, 0) - boundary_rank.get(d + 1, 0)
        if rank:
            ranks[d] = rank
    return ranks


def _require_proper(ideal: MonomialIdeal) -> None:
    if ideal.is_zero or ideal.is_unit:
        raise UndefinedInputError(
            "Betti numbers and depth are defined for nonzero proper ideals only")
