"""Exact monomial and monomial-ideal arithmetic over a fixed ambient ring.

Everything here is immutable and integer-exact.  Variable indices in public
signatures are 1-based (matching the x1..xn naming); exponent vectors are
plain tuples indexed from 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    ContractError,
    DimensionMismatchError,
    UndefinedStatisticsError,
)


@dataclass(frozen=True, order=True)
class Monomial:
    """A monomial x^a stored as its exponent vector; compares lexicographically."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(self.exponents))
        if any(not isinstance(e, int) or e < 0 for e in self.exponents):
            raise ContractError(f"exponents must be nonnegative integers, got {self.exponents}")

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_unit(self) -> bool:
        return self.degree == 0

    def support(self) -> tuple[int, ...]:
        """1-based indices of the variables dividing this monomial."""
        return tuple(j + 1 for j, e in enumerate(self.exponents) if e > 0)

    def exponent_of(self, j: int) -> int:
        _check_index(j, self.n)
        return self.exponents[j - 1]

    def divides(self, other: Monomial) -> bool:
        _check_ambient(self.n, other.n)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: Monomial) -> Monomial:
        _check_ambient(self.n, other.n)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def colon_by(self, other: Monomial) -> Monomial:
        """Componentwise max(a - b, 0): the generator of (x^a : x^b)."""
        _check_ambient(self.n, other.n)
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: Monomial) -> Monomial:
        _check_ambient(self.n, other.n)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def without_variable(self, j: int) -> Monomial:
        """Drop coordinate j (1-based), shrinking the ambient to n-1."""
        _check_index(j, self.n)
        e = self.exponents
        return Monomial(e[: j - 1] + e[j:])

    def embedded_at(self, j: int) -> Monomial:
        """Insert a zero coordinate at 1-based position j, growing the ambient to n+1."""
        if not 1 <= j <= self.n + 1:
            raise ContractError(f"insertion index {j} out of range 1..{self.n + 1}")
        e = self.exponents
        return Monomial(e[: j - 1] + (0,) + e[j - 1:])

    def __str__(self) -> str:
        if self.is_unit:
            return "1"
        factors = []
        for j, e in enumerate(self.exponents, start=1):
            if e == 1:
                factors.append(f"x{j}")
            elif e > 1:
                factors.append(f"x{j}^{e}")
        return "*".join(factors)


def unit_monomial(n: int) -> Monomial:
    return Monomial((0,) * n)


def variable(n: int, j: int) -> Monomial:
    """The monomial x_j in ambient n (j is 1-based)."""
    _check_index(j, n)
    return Monomial(tuple(1 if i == j - 1 else 0 for i in range(n)))


@dataclass(frozen=True)
class IdealStats:
    """Derived statistics of a proper nonzero monomial ideal.

    t[j-1] counts minimal generators divisible by x_j; lcm is the
    componentwise maximum of the generator exponent vectors.
    """

    g: int
    epsilon: int
    s: int
    t: tuple[int, ...]
    lcm: tuple[int, ...]


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, stored by its minimal generators in lexicographic order.

    The zero ideal has no generators; the unit ideal has the single generator 1.
    Construct through minimalize() unless the generators are already known
    minimal and sorted.
    """

    n: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if self.n < 0:
            raise ContractError(f"ambient variable count must be >= 0, got {self.n}")
        for m in self.generators:
            if m.n != self.n:
                raise DimensionMismatchError(
                    f"generator {m.exponents} has length {m.n}, ambient is {self.n}")
        gens = self.generators
        if any(gens[i] >= gens[i + 1] for i in range(len(gens) - 1)):
            raise ContractError("generators must be strictly increasing in lex order")
        for i, u in enumerate(gens):
            for v in gens[i + 1:]:
                if u.divides(v) or v.divides(u):
                    raise ContractError(
                        f"generator set is not minimal: {u} and {v} are comparable")

    # -- structural predicates -------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_unit

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    @property
    def is_principal(self) -> bool:
        return len(self.generators) == 1

    @classmethod
    def zero(cls, n: int) -> MonomialIdeal:
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> MonomialIdeal:
        return cls(n, (unit_monomial(n),))

    @classmethod
    def from_exponent_lists(cls, n: int, rows: Iterable[Iterable[int]]) -> MonomialIdeal:
        """Minimalize a list of exponent vectors into an ideal."""
        return minimalize([Monomial(tuple(r)) for r in rows], n=n)

    def to_exponent_lists(self) -> list[list[int]]:
        return [list(m.exponents) for m in self.generators]

    # -- membership ------------------------------------------------------------

    def contains(self, u: Monomial) -> bool:
        """True iff some minimal generator divides u."""
        _check_ambient(self.n, u.n)
        return any(v.divides(u) for v in self.generators)

    def __contains__(self, u: Monomial) -> bool:
        return self.contains(u)

    # -- derived data ------------------------------------------------------------

    @property
    def lcm_exponents(self) -> tuple[int, ...]:
        """Componentwise max of the generator exponents (the zero vector for the unit ideal)."""
        if self.is_zero:
            raise UndefinedStatisticsError("the zero ideal has no lcm exponent vector")
        return tuple(max(m.exponents[j] for m in self.generators) for j in range(self.n))

    def t_vector(self) -> tuple[int, ...]:
        return tuple(
            sum(1 for m in self.generators if m.exponents[j] > 0) for j in range(self.n))

    def statistics(self) -> IdealStats:
        """All derived statistics; undefined for the zero and unit ideals."""
        if self.is_zero or self.is_unit:
            raise UndefinedStatisticsError(
                "statistics are undefined for the zero and unit ideals")
        return IdealStats(
            g=len(self.generators),
            epsilon=sum(m.degree for m in self.generators),
            s=sum(len(m.support()) for m in self.generators),
            t=self.t_vector(),
            lcm=self.lcm_exponents,
        )

    # -- ideal operations --------------------------------------------------------

    def colon(self, v: Monomial) -> MonomialIdeal:
        """The colon ideal (I : v), minimalized."""
        _check_ambient(self.n, v.n)
        if self.is_zero:
            return self
        return minimalize([m.colon_by(v) for m in self.generators], n=self.n)

    def saturate(self, j: int) -> MonomialIdeal:
        """The saturation (I : x_j^inf): exponent j of every generator drops to 0."""
        _check_index(j, self.n)
        if self.is_zero:
            return self
        stripped = [
            Monomial(m.exponents[: j - 1] + (0,) + m.exponents[j:]) for m in self.generators]
        return minimalize(stripped, n=self.n)

    def restrict(self, j: int) -> MonomialIdeal:
        """The ideal of K[x1,..,x(n-1)] generated by the generators free of x_j.

        The surviving generators are re-indexed densely by dropping coordinate
        j; the caller keeps j for round-tripping (see embed_at).  All
        generators divisible by x_j yields the zero ideal of the smaller ring.
        """
        _check_index(j, self.n)
        kept = [m.without_variable(j) for m in self.generators if m.exponents[j - 1] == 0]
        return minimalize(kept, n=self.n - 1)

    def embed_at(self, j: int) -> MonomialIdeal:
        """Inverse of restrict: re-insert a zero coordinate at 1-based position j."""
        gens = [m.embedded_at(j) for m in self.generators]
        return minimalize(gens, n=self.n + 1)

    def __str__(self) -> str:
        if self.is_zero:
            return f"zero ideal in {self.n} variables"
        return "(" + ", ".join(str(m) for m in self.generators) + ")"


def minimalize(monomials: Iterable[Monomial], n: int | None = None) -> MonomialIdeal:
    """Build the ideal generated by `monomials`, keeping only the divisibility-minimal ones.

    The generated ideal is unchanged.  An empty collection needs an explicit
    ambient n and yields the zero ideal; any unit monomial collapses the set
    to the unit ideal.
    """
    mons = list(monomials)
    if not mons:
        if n is None:
            raise ContractError("cannot infer the ambient variable count of an empty ideal")
        return MonomialIdeal.zero(n)
    ambient = mons[0].n
    if n is not None and n != ambient:
        raise DimensionMismatchError(f"monomials have length {ambient}, expected {n}")
    for m in mons:
        if m.n != ambient:
            raise DimensionMismatchError(
                f"mixed ambient lengths: {m.n} and {ambient}")
    if any(m.is_unit for m in mons):
        return MonomialIdeal.unit(ambient)
    unique = sorted(set(mons))
    minimal = [
        u for i, u in enumerate(unique)
        if not any(v.divides(u) for v in unique[:i] + unique[i + 1:])
    ]
    return MonomialIdeal(ambient, tuple(minimal))


def monomials_in_box(n: int, upper: tuple[int, ...]) -> Iterator[Monomial]:
    """All monomials with exponent vector in the box [0, upper], lex order."""
    if len(upper) != n:
        raise DimensionMismatchError(f"box has length {len(upper)}, expected {n}")

    def rec(prefix: tuple[int, ...], j: int) -> Iterator[tuple[int, ...]]:
        if j == n:
            yield prefix
            return
        for e in range(upper[j] + 1):
            yield from rec(prefix + (e,), j + 1)

    for exps in rec((), 0):
        yield Monomial(exps)


def _check_ambient(a: int, b: int) -> None:
    if a != b:
        raise DimensionMismatchError(f"ambient variable counts differ: {a} vs {b}")


def _check_index(j: int, n: int) -> None:
    if not 1 <= j <= n:
        raise ContractError(f"variable index {j} out of range 1..{n}")
