"""Exact rational weight vectors and coset-shift weight lattices.

All coordinates are `fractions.Fraction` in the orthonormal e-basis of the
Cartan dual; no floating point is ever introduced.  Weights render as
comma-separated rationals ("3/2,-1/2") and parse from the same grammar.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError

HALF = Fraction(1, 2)


class Weight(tuple):
    """A fixed-length vector of exact rationals.

    Subclasses ``tuple`` so weights are hashable and usable as dict keys.
    Arithmetic is redefined componentwise: ``+``/``-`` add and subtract,
    ``*`` scales by a rational (tuple repetition/concatenation semantics
    are intentionally replaced).
    """

    __slots__ = ()

    def __new__(cls, coords: Iterable) -> "Weight":
        return super().__new__(cls, (Fraction(c) for c in coords))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls([0] * rank)

    @classmethod
    def basis(cls, rank: int, k: int, value=1) -> "Weight":
        """The vector ``value * e_k`` (k is 0-based)."""
        coords = [Fraction(0)] * rank
        coords[k] = Fraction(value)
        return cls(coords)

    @classmethod
    def parse(cls, text: str) -> "Weight":
        """Parse "p/q,p/q,..." (whitespace tolerated)."""
        parts = [p.strip() for p in text.strip().split(",")]
        if not parts or parts == [""]:
            raise ValueError(f"empty weight string: {text!r}")
        try:
            return cls(Fraction(p) for p in parts)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad weight string {text!r}: {exc}") from None

    def _check_len(self, other: Sequence) -> None:
        if len(self) != len(other):
            raise DimensionError(
                f"weight length mismatch: {len(self)} vs {len(other)}")

    def __add__(self, other):
        self._check_len(other)
        return Weight(a + b for a, b in zip(self, other))

    def __radd__(self, other):
        if other == 0:  # allows sum() over weights
            return self
        return self.__add__(other)

    def __sub__(self, other):
        self._check_len(other)
        return Weight(a - b for a, b in zip(self, other))

    def __neg__(self):
        return Weight(-a for a in self)

    def __mul__(self, scalar):
        c = Fraction(scalar)
        return Weight(a * c for a in self)

    __rmul__ = __mul__

    def dot(self, other: "Weight") -> Fraction:
        self._check_len(other)
        return sum((a * b for a, b in zip(self, other)), Fraction(0))

    def norm_sq(self) -> Fraction:
        return self.dot(self)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self)

    def __str__(self) -> str:
        return ",".join(str(a) for a in self)

    def __repr__(self) -> str:
        return f"Weight({self!s})"


def inner_product(a: Weight, b: Weight) -> Fraction:
    """Euclidean dot product in the e-basis, exact.

    The ambient inner product is fixed up to positive scale; every test the
    package performs (dominance, Casimir-shell equality) is invariant under
    that rescaling, so the convention-free dot product is used throughout.
    """
    if len(a) != len(b):
        raise DimensionError(f"weight length mismatch: {len(a)} vs {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def is_dominant(w: Weight, simple_roots: Sequence[Weight], strict: bool = False) -> bool:
    """True iff <w, a> >= 0 (or > 0 when strict) for every simple root a."""
    if strict:
        return all(inner_product(w, a) > 0 for a in simple_roots)
    return all(inner_product(w, a) >= 0 for a in simple_roots)


@dataclass(frozen=True)
class LatticeSpec:
    """A weight lattice given as a finite union of coset shifts of Z^m.

    Membership is exact: w lies in the lattice iff w - s is all-integer for
    some shift s.  Shifts have coordinates in {0, 1/2} and always include
    the zero shift, which covers every integral-form lattice handled here.
    """

    rank: int
    coset_shifts: frozenset

    def __init__(self, rank: int, coset_shifts: Iterable) -> None:
        shifts = frozenset(Weight(s) for s in coset_shifts)
        if rank < 1:
            raise ValueError(f"rank must be positive, got {rank}")
        for s in shifts:
            if len(s) != rank:
                raise DimensionError(
                    f"shift {s} has length {len(s)}, lattice rank is {rank}")
            if not all(c in (0, HALF) for c in s):
                raise ValueError(f"shift coordinates must be 0 or 1/2: {s}")
        if Weight.zero(rank) not in shifts:
            raise ValueError("the zero shift must be present")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "coset_shifts", shifts)

    @classmethod
    def integers(cls, rank: int) -> "LatticeSpec":
        """Z^m."""
        return cls(rank, [Weight.zero(rank)])

    @classmethod
    def integers_and_half_integers(cls, rank: int) -> "LatticeSpec":
        """Z^m union (Z + 1/2)^m."""
        return cls(rank, [Weight.zero(rank), Weight([HALF] * rank)])

    def contains(self, w: Weight) -> bool:
        if len(w) != self.rank:
            raise DimensionError(
                f"weight length {len(w)} vs lattice rank {self.rank}")
        return any((w - s).is_integral() for s in self.coset_shifts)

    def __contains__(self, w: Weight) -> bool:
        return self.contains(w)

    def is_sublattice_of(self, other: "LatticeSpec") -> bool:
        """Point-set containment; reduces to checking each shift."""
        if self.rank != other.rank:
            raise DimensionError("lattice ranks differ")
        return all(other.contains(s) for s in self.coset_shifts)

    def sorted_shifts(self) -> list:
        return sorted(self.coset_shifts)


def is_member(w: Weight, lattice: LatticeSpec) -> bool:
    """True iff w - s is all-integer for some coset shift s of the lattice."""
    return lattice.contains(w)
