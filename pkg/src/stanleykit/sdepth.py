"""Exact Stanley depth of a monomial ideal via interval partitions of its poset.

The characteristic poset of an ideal is the finite grid of multidegrees a
with 0 <= a <= g (g the lcm exponent vector) such that x^a lies in the ideal.
A partition of that poset into intervals [c, d] yields the decomposition with
pieces x^c K[Z(d)], Z(d) = {x_j : d_j = g_j}, and the Stanley depth is the
maximum over partitions of the minimum |Z(d)|.  The search runs the decision
problem "all pieces keep at least k free variables" for k descending from n.

Intervals are restricted to the normal form d_j in {c_j, g_j}: any partition
refines to this form without lowering the minimum, a claim checked against
the unrestricted search in the test suite rather than assumed silently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

from .errors import (
    ContractError,
    MalformedDecompositionError,
    ResourceLimitError,
)
from .monomials import Monomial, MonomialIdeal

DEFAULT_POSET_CAP = 200_000

PosetPoint = tuple[int, ...]
Piece = tuple[Monomial, frozenset[int]]


@dataclass(frozen=True)
class Interval:
    """A poset interval [c, d] in normal form, full in its free directions."""

    c: PosetPoint
    d: PosetPoint
    box: PosetPoint

    def __post_init__(self):
        if not (len(self.c) == len(self.d) == len(self.box)):
            raise ContractError("interval endpoints and box must share one ambient")
        if any(cj > dj for cj, dj in zip(self.c, self.d)):
            raise ContractError(f"interval bottom {self.c} exceeds top {self.d}")
        for cj, dj, gj in zip(self.c, self.d, self.box):
            if dj != cj and dj != gj:
                raise ContractError(
                    f"interval [{self.c}, {self.d}] is not full in its free directions")

    @property
    def z_set(self) -> frozenset[int]:
        """1-based variable indices where the top hits the box bound."""
        return frozenset(j + 1 for j, (dj, gj) in enumerate(zip(self.d, self.box)) if dj == gj)

    @property
    def rho(self) -> int:
        return len(self.z_set)

    def piece(self) -> Piece:
        return Monomial(self.c), self.z_set


@dataclass(frozen=True)
class StanleyDecomposition:
    """Pieces (generator, free variable set) whose disjoint union is the ideal."""

    n: int
    pieces: tuple[Piece, ...]

    @property
    def sdepth(self) -> int:
        if not self.pieces:
            raise ContractError("an empty decomposition has no Stanley depth")
        return min(len(z) for _, z in self.pieces)


class SdepthResult(NamedTuple):
    sdepth: int
    witness: StanleyDecomposition
    intervals: tuple[Interval, ...]


def characteristic_poset(ideal: MonomialIdeal, *, cap: int = DEFAULT_POSET_CAP,
                         box: Optional[tuple[int, ...]] = None) -> list[PosetPoint]:
    """All multidegrees a in [0, box] with x^a in the ideal, in lex order.

    The box defaults to the lcm exponent vector, the smallest valid choice;
    a larger box is accepted so that invariance under box growth is testable.
    """
    if ideal.is_zero:
        raise ContractError("the zero ideal has an empty characteristic poset")
    bounds = _resolve_box(ideal, box)
    volume = 1
    for b in bounds:
        volume *= b + 1
    if volume > cap:
        raise ResourceLimitError(
            f"characteristic poset box has {volume} points, above the cap {cap}",
            size=volume, cap=cap, lower_bound=sdepth_lower_bound_okazaki(ideal))
    gens = [m.exponents for m in ideal.generators]
    points = [
        a for a in itertools.product(*(range(b + 1) for b in bounds))
        if any(all(v[j] <= a[j] for j in range(ideal.n)) for v in gens)
    ]
    return points


def sdepth_exact(ideal: MonomialIdeal, *, cap: int = DEFAULT_POSET_CAP,
                 box: Optional[tuple[int, ...]] = None) -> SdepthResult:
    """Exact Stanley depth with a witness partition, by descending decision search.

    For each k from n down, a depth-first exact-cover search asks for a
    partition into normal-form intervals all keeping at least k free
    directions.  The lex-least uncovered point must be the bottom of its
    interval, which restricts branching to the choice of free direction set.
    """
    bounds = _resolve_box(ideal, box)
    points = characteristic_poset(ideal, cap=cap, box=bounds)
    n = ideal.n
    index = {a: i for i, a in enumerate(points)}
    full_counts = [sum(1 for j in range(n) if a[j] == bounds[j]) for a in points]
    free_coords = [tuple(j for j in range(n) if a[j] < bounds[j]) for a in points]
    interval_masks: dict[tuple[int, frozenset[int]], int] = {}

    def interval_mask(qi: int, zset: frozenset[int]) -> int:
        cached = interval_masks.get((qi, zset))
        if cached is not None:
            return cached
        q = points[qi]
        ranges = [range(q[j], bounds[j] + 1) if j in zset else (q[j],) for j in range(n)]
        mask = 0
        for a in itertools.product(*ranges):
            mask |= 1 << index[a]
        interval_masks[(qi, zset)] = mask
        return mask

    def candidates(uncovered: int, k: int) -> Iterator[tuple[int, frozenset[int], int]]:
        qi = (uncovered & -uncovered).bit_length() - 1
        free = free_coords[qi]
        needed = max(k - full_counts[qi], 0)
        if needed > len(free):
            return
        for size in range(len(free), needed - 1, -1):
            for chosen in itertools.combinations(free, size):
                zset = frozenset(chosen)
                yield qi, zset, interval_mask(qi, zset)

    def search(k: int) -> Optional[list[tuple[int, frozenset[int]]]]:
        all_mask = (1 << len(points)) - 1
        failed: set[int] = set()
        frames = [(all_mask, candidates(all_mask, k))]
        chosen: list[tuple[int, frozenset[int]]] = []
        while frames:
            uncovered, it = frames[-1]
            for qi, zset, imask in it:
                if imask & ~uncovered:
                    continue
                remaining = uncovered & ~imask
                chosen.append((qi, zset))
                if remaining == 0:
                    return chosen
                if remaining in failed:
                    chosen.pop()
                    continue
                frames.append((remaining, candidates(remaining, k)))
                break
            else:
                failed.add(uncovered)
                frames.pop()
                if chosen:
                    chosen.pop()
        return None

    for k in range(n, -1, -1):
        solution = search(k)
        if solution is None:
            continue
        intervals = []
        for qi, zset in solution:
            q = points[qi]
            d = tuple(bounds[j] if j in zset else q[j] for j in range(n))
            intervals.append(Interval(q, d, bounds))
        witness = StanleyDecomposition(n, tuple(iv.piece() for iv in intervals))
        return SdepthResult(k, witness, tuple(intervals))
    raise ContractError("no interval partition found; the poset is empty")


def sdepth_exact_unrestricted(ideal: MonomialIdeal, *, cap: int = DEFAULT_POSET_CAP,
                              box: Optional[tuple[int, ...]] = None) -> int:
    """Stanley depth by the same search over arbitrary intervals [c, d], c <= d.

    Exponentially heavier than the normal-form search; exists as the
    independent reference the normal-form restriction is validated against
    on small posets.
    """
    bounds = _resolve_box(ideal, box)
    points = characteristic_poset(ideal, cap=cap, box=bounds)
    n = ideal.n
    index = {a: i for i, a in enumerate(points)}

    def rho(d: PosetPoint) -> int:
        return sum(1 for j in range(n) if d[j] == bounds[j])

    def interval_mask(q: PosetPoint, d: PosetPoint) -> int:
        mask = 0
        for a in itertools.product(*(range(q[j], d[j] + 1) for j in range(n))):
            mask |= 1 << index[a]
        return mask

    def candidates(uncovered: int, k: int) -> Iterator[int]:
        qi = (uncovered & -uncovered).bit_length() - 1
        q = points[qi]
        tops = itertools.product(*(range(q[j], bounds[j] + 1) for j in range(n)))
        for d in sorted(tops, key=rho, reverse=True):
            if rho(d) >= k:
                yield interval_mask(q, d)

    def search(k: int) -> bool:
        all_mask = (1 << len(points)) - 1
        failed: set[int] = set()
        frames = [(all_mask, candidates(all_mask, k))]
        while frames:
            uncovered, it = frames[-1]
            for imask in it:
                if imask & ~uncovered:
                    continue
                remaining = uncovered & ~imask
                if remaining == 0:
                    return True
                if remaining in failed:
                    continue
                frames.append((remaining, candidates(remaining, k)))
                break
            else:
                failed.add(uncovered)
                frames.pop()
        return False

    for k in range(n, -1, -1):
        if search(k):
            return k
    raise ContractError("no interval partition found; the poset is empty")


def sdepth_lower_bound_okazaki(ideal: MonomialIdeal) -> int:
    """Generator-count lower bound max(1, n - floor(g/2)) for a nonzero ideal."""
    if ideal.is_zero:
        raise ContractError("the zero ideal has no Stanley depth lower bound")
    return max(1, ideal.n - len(ideal.generators) // 2)


def verify_decomposition(ideal: MonomialIdeal, decomposition: StanleyDecomposition) -> bool:
    """Certify a decomposition by exhaustive check over the box [0, g+1]^n.

    True iff every monomial u in the extended box satisfies: u lies in the
    ideal exactly when it lies in exactly one piece.  Piece generators must
    lie in the ideal and divide x^g; anything else is malformed rather than
    merely uncertified.
    """
    if decomposition.n != ideal.n:
        raise MalformedDecompositionError(
            f"decomposition ambient {decomposition.n} does not match ideal ambient {ideal.n}")
    if ideal.is_zero:
        return not decomposition.pieces
    g = ideal.lcm_exponents
    for gen, zset in decomposition.pieces:
        if gen not in ideal:
            raise MalformedDecompositionError(f"piece generator {gen} lies outside the ideal")
        if any(e > gj for e, gj in zip(gen.exponents, g)):
            raise MalformedDecompositionError(
                f"piece generator {gen} does not divide the lcm of the generators")
        if any(not 1 <= j <= ideal.n for j in zset):
            raise MalformedDecompositionError(f"piece variable set {set(zset)} out of range")
    pieces = [(gen.exponents, zset) for gen, zset in decomposition.pieces]
    for u in itertools.product(*(range(gj + 2) for gj in g)):
        covers = 0
        for c, zset in pieces:
            if all(cj <= uj for cj, uj in zip(c, u)) and all(
                    uj == cj for j, (cj, uj) in enumerate(zip(c, u), start=1) if j not in zset):
                covers += 1
        expected = 1 if ideal.contains(Monomial(u)) else 0
        if covers != expected:
            return False
    return True


def _resolve_box(ideal: MonomialIdeal, box: Optional[tuple[int, ...]]) -> tuple[int, ...]:
    lcm = ideal.lcm_exponents
    if box is None:
        return lcm
    if len(box) != ideal.n:
        raise ContractError(f"box has length {len(box)}, expected {ideal.n}")
    if any(b < g for b, g in zip(box, lcm)):
        raise ContractError(f"box {box} must dominate the lcm vector {lcm}")
    return tuple(box)
