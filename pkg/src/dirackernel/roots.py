"""Classical root systems and Weyl groups over exact rationals.

Weyl elements are stored as orthogonal matrices with Fraction entries, so a
user-supplied list of positive roots works just as well as a built-in
family.  Group enumeration is a breadth-first closure over the simple
reflections; the breadth-first depth yields a reduced word for each
element.  A, B, C, D are realized in the standard e-basis, which for the
A family means an ambient space of dimension rank + 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Optional, Sequence

from .errors import (DimensionError, GroupOrderLimitError,
                     UnsupportedRootSystemError)
from .lattice import Weight, inner_product, is_dominant

Matrix = tuple  # tuple of row tuples of Fraction


def _identity_matrix(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt)
        for row in a)


def _mat_apply(m: Matrix, w: Weight) -> Weight:
    if len(m) != len(w):
        raise DimensionError(f"matrix size {len(m)} vs weight length {len(w)}")
    return Weight(sum((x * y for x, y in zip(row, w)), Fraction(0)) for row in m)


def _transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def _determinant(m: Matrix) -> Fraction:
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    n = len(m)
    rows = [list(r) for r in m]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            if rows[r][col] != 0:
                factor = rows[r][col] * inv
                for c in range(col, n):
                    rows[r][c] -= factor * rows[col][c]
    return det


@dataclass(frozen=True, eq=False)
class WeylElement:
    """An orthogonal map of the weight space, with an optional word in the
    simple reflections (indices into ``RootSystem.simple_roots``)."""

    matrix: Matrix
    word: Optional[tuple] = None

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    @classmethod
    def identity(cls, rank: int) -> "WeylElement":
        return cls(_identity_matrix(rank), word=())

    @classmethod
    def reflection(cls, alpha: Weight, index: Optional[int] = None) -> "WeylElement":
        """The orthogonal reflection in the hyperplane normal to alpha."""
        n = len(alpha)
        norm = inner_product(alpha, alpha)
        if norm == 0:
            raise ValueError("cannot reflect in the zero vector")
        cols = []
        for j in range(n):
            e = Weight.basis(n, j)
            image = e - alpha * (2 * inner_product(e, alpha) / norm)
            cols.append(image)
        matrix = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
        return cls(matrix, word=None if index is None else (index,))

    def apply(self, w: Weight) -> Weight:
        return _mat_apply(self.matrix, w)

    def compose(self, other: "WeylElement") -> "WeylElement":
        """self after other (matrix product self.matrix @ other.matrix)."""
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word
        return WeylElement(_mat_mul(self.matrix, other.matrix), word)

    def __matmul__(self, other: "WeylElement") -> "WeylElement":
        return self.compose(other)

    def inverse(self) -> "WeylElement":
        word = None if self.word is None else tuple(reversed(self.word))
        return WeylElement(_transpose(self.matrix), word)

    @cached_property
    def determinant(self) -> Fraction:
        return _determinant(self.matrix)

    @property
    def sign(self) -> int:
        d = self.determinant
        if d not in (1, -1):
            raise ValueError(f"non-orthogonal element, det={d}")
        return int(d)

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def is_orthogonal(self) -> bool:
        return _mat_mul(_transpose(self.matrix), self.matrix) == _identity_matrix(self.rank)

    def __repr__(self) -> str:
        rows = "; ".join(",".join(str(x) for x in row) for row in self.matrix)
        return f"WeylElement([{rows}], word={self.word})"


def _derive_simple_roots(positive_roots: Sequence[Weight]) -> tuple:
    """Positive roots that are not a sum of two positive roots."""
    pos = set(positive_roots)
    sums = set()
    roots = list(positive_roots)
    for i, a in enumerate(roots):
        for b in roots[i:]:
            s = a + b
            if s in pos:
                sums.add(s)
    return tuple(a for a in positive_roots if a not in sums)


@dataclass(frozen=True, eq=True)
class RootSystem:
    """Positive roots plus derived simple roots in a fixed ambient basis.

    ``rank`` is the dimension of the ambient coordinate space (for the A
    family this is one more than the Lie rank).  An empty set of positive
    roots is allowed and models a torus factor only.
    """

    rank: int
    positive_roots: tuple
    name: Optional[str] = field(default=None, compare=False)

    def __init__(self, rank: int, positive_roots: Iterable,
                 name: Optional[str] = None) -> None:
        roots = tuple(Weight(r) for r in positive_roots)
        if rank < 1:
            raise ValueError("rank must be positive")
        for r in roots:
            if len(r) != rank:
                raise DimensionError(f"root {r} has length {len(r)}, rank {rank}")
            if all(c == 0 for c in r):
                raise ValueError("positive roots must be nonzero")
        if len(set(roots)) != len(roots):
            raise ValueError("positive roots must be pairwise distinct")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "positive_roots", roots)
        object.__setattr__(self, "name", name)
        for alpha in roots:
            coeffs = self.simple_coefficients(alpha)
            if any(c.denominator != 1 or c < 0 for c in coeffs):
                raise ValueError(
                    f"{alpha} is not a nonnegative integer combination "
                    f"of the simple roots {self.simple_roots}")

    @cached_property
    def simple_roots(self) -> tuple:
        return _derive_simple_roots(self.positive_roots)

    @cached_property
    def delta(self) -> Weight:
        """Half the sum of the positive roots."""
        total = Weight.zero(self.rank)
        for alpha in self.positive_roots:
            total = total + alpha
        return total * Fraction(1, 2)

    def simple_coefficients(self, vector: Weight) -> tuple:
        """Coordinates of ``vector`` in the simple-root basis (exact solve).

        Raises ValueError when the vector is outside the span.
        """
        simples = self.simple_roots
        if not simples:
            if any(c != 0 for c in vector):
                raise ValueError(f"{vector} outside the (empty) root span")
            return ()
        # Gaussian elimination on the rank x len(simples) system.
        ncols = len(simples)
        rows = [[simples[j][i] for j in range(ncols)] + [vector[i]]
                for i in range(self.rank)]
        pivots = []
        r = 0
        for c in range(ncols):
            pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            inv = 1 / rows[r][c]
            rows[r] = [x * inv for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        if any(row[-1] != 0 for row in rows[r:]):
            raise ValueError(f"{vector} outside the root span")
        coeffs = [Fraction(0)] * ncols
        for i, c in enumerate(pivots):
            coeffs[c] = rows[i][-1]
        return tuple(coeffs)

    def is_dominant(self, w: Weight, strict: bool = False) -> bool:
        return is_dominant(w, self.simple_roots, strict)

    def simple_reflections(self) -> tuple:
        return tuple(WeylElement.reflection(a, index=i)
                     for i, a in enumerate(self.simple_roots))

    def all_roots(self) -> tuple:
        return self.positive_roots + tuple(-a for a in self.positive_roots)

    def __repr__(self) -> str:
        label = self.name or f"rank{self.rank}"
        return f"RootSystem({label}, {len(self.positive_roots)} positive roots)"


def build_classical(family: str, rank: int) -> RootSystem:
    """Standard positive roots of A/B/C/D in the e-basis.

    B and C need rank >= 1, D needs rank >= 2, and A_rank lives in
    rank + 1 coordinates.
    """
    family = family.upper()
    if rank < 1:
        raise UnsupportedRootSystemError(f"rank must be >= 1, got {rank}")
    roots = []
    if family == "A":
        n = rank + 1
        roots = [Weight.basis(n, i) - Weight.basis(n, j)
                 for i in range(n) for j in range(i + 1, n)]
        return RootSystem(n, roots, name=f"A{rank}")
    if family == "B":
        roots = [Weight.basis(rank, i) - Weight.basis(rank, j)
                 for i in range(rank) for j in range(i + 1, rank)]
        roots += [Weight.basis(rank, i) + Weight.basis(rank, j)
                  for i in range(rank) for j in range(i + 1, rank)]
        roots += [Weight.basis(rank, k) for k in range(rank)]
        return RootSystem(rank, roots, name=f"B{rank}")
    if family == "C":
        roots = [Weight.basis(rank, i) - Weight.basis(rank, j)
                 for i in range(rank) for j in range(i + 1, rank)]
        roots += [Weight.basis(rank, i) + Weight.basis(rank, j)
                  for i in range(rank) for j in range(i + 1, rank)]
        roots += [Weight.basis(rank, k, 2) for k in range(rank)]
        return RootSystem(rank, roots, name=f"C{rank}")
    if family == "D":
        if rank < 2:
            raise UnsupportedRootSystemError("family D needs rank >= 2")
        roots = [Weight.basis(rank, i) - Weight.basis(rank, j)
                 for i in range(rank) for j in range(i + 1, rank)]
        roots += [Weight.basis(rank, i) + Weight.basis(rank, j)
                  for i in range(rank) for j in range(i + 1, rank)]
        return RootSystem(rank, roots, name=f"D{rank}")
    raise UnsupportedRootSystemError(f"unknown family {family!r}")


def half_sum(rs: RootSystem) -> Weight:
    """delta, the exact half-sum of the positive roots."""
    return rs.delta


def generate_group(generators: Sequence[WeylElement], rank: int,
                   limit: int = 10 ** 6) -> list:
    """Breadth-first closure of a set of involutive generators.

    Returns the elements sorted lexicographically by flattened matrix, each
    carrying a shortest word in the given generators.
    """
    identity = WeylElement.identity(rank)
    seen = {identity.matrix: ()}
    frontier = [identity.matrix]
    gens = [(g.word[0] if g.word else i, g.matrix)
            for i, g in enumerate(generators)]
    while frontier:
        new_frontier = []
        for m in frontier:
            word = seen[m]
            for idx, g in gens:
                prod = _mat_mul(g, m)
                if prod not in seen:
                    seen[prod] = (idx,) + word
                    new_frontier.append(prod)
                    if len(seen) > limit:
                        raise GroupOrderLimitError(
                            f"group closure exceeded limit {limit}")
        frontier = new_frontier
    return [WeylElement(m, seen[m]) for m in sorted(seen)]


@lru_cache(maxsize=None)
def weyl_group(rs: RootSystem, limit: int = 10 ** 6) -> tuple:
    """The full Weyl group generated by the simple reflections.

    Deterministic order (lex on flattened matrices); each element carries a
    reduced word, and det = (-1)^(word length) is verified.
    """
    elements = generate_group(rs.simple_reflections(), rs.rank, limit)
    for w in elements:
        if w.determinant != (-1) ** len(w.word):
            raise AssertionError(f"sign/word-length mismatch for {w}")
    return tuple(elements)


def dominant_representative(w: Weight, rs: RootSystem):
    """Return (element, dominant, regular) with element * w = dominant.

    The walk reflects in any simple root pairing negatively until none
    does; it terminates because <. , delta> strictly increases.  When the
    result is regular (strictly dominant), the element is the unique Weyl
    element moving w into the open chamber.
    """
    if len(w) != rs.rank:
        raise DimensionError(f"weight length {len(w)} vs rank {rs.rank}")
    simples = rs.simple_roots
    reflections = rs.simple_reflections()
    current = w
    element = WeylElement.identity(rs.rank)
    while True:
        neg = next((i for i, a in enumerate(simples)
                    if inner_product(current, a) < 0), None)
        if neg is None:
            break
        current = reflections[neg].apply(current)
        element = reflections[neg] @ element
    regular = all(inner_product(current, a) > 0 for a in rs.positive_roots)
    return element, current, regular
