"""Formal characters on the weight lattice and exact character arithmetic.

A formal character is a finitely supported integer-valued function on the
weight lattice, stored sparsely.  Irreducible characters come from the
Freudenthal multiplicity recursion evaluated on the dominant weights of
the string-closure weight set; dimensions come from the closed product
formula and are cross-checked against the multiplicity mass in the tests.
Decomposition of an invariant character is highest-weight peeling on its
dominant part.  Half-integral highest weights are first-class; lattice
membership is only ever enforced against an explicit LatticeSpec.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Mapping

from .errors import (DecompositionError, DimensionError, NonDominantError,
                     SymmetryError)
from .lattice import Weight, inner_product
from .roots import RootSystem, WeylElement
from .sympair import SymmetricPair


class FormalCharacter:
    """Sparse integer combination of lattice points e^w.

    The canonical form never stores zero multiplicities.  Addition,
    subtraction, integer scaling, product (Minkowski convolution of
    supports) and the Weyl action are all exact.
    """

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[Weight, int] | None = None):
        self.rank = rank
        clean: Dict[Weight, int] = {}
        if terms:
            for w, c in terms.items():
                if c == 0:
                    continue
                w = Weight(w)
                if len(w) != rank:
                    raise DimensionError(
                        f"weight {w} has length {len(w)}, character rank {rank}")
                clean[w] = clean.get(w, 0) + c
        self.terms = {w: c for w, c in clean.items() if c != 0}

    @classmethod
    def zero(cls, rank: int) -> "FormalCharacter":
        return cls(rank)

    @classmethod
    def monomial(cls, w: Weight, coeff: int = 1) -> "FormalCharacter":
        return cls(len(w), {Weight(w): coeff})

    def _check(self, other: "FormalCharacter") -> None:
        if self.rank != other.rank:
            raise DimensionError(
                f"character ranks differ: {self.rank} vs {other.rank}")

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return FormalCharacter(self.rank, terms)

    def __sub__(self, other: "FormalCharacter") -> "FormalCharacter":
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) - c
        return FormalCharacter(self.rank, terms)

    def __neg__(self) -> "FormalCharacter":
        return FormalCharacter(self.rank, {w: -c for w, c in self.terms.items()})

    def scale(self, k: int) -> "FormalCharacter":
        return FormalCharacter(self.rank, {w: k * c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        prod: Dict[Weight, int] = {}
        small, big = self.terms, other.terms
        if len(small) > len(big):
            small, big = big, small
        for w1, c1 in small.items():
            for w2, c2 in big.items():
                key = w1 + w2
                prod[key] = prod.get(key, 0) + c1 * c2
        return FormalCharacter(self.rank, prod)

    __rmul__ = __mul__

    def apply(self, element: WeylElement) -> "FormalCharacter":
        """Weyl action: permutes the support, preserves multiplicities."""
        if element.rank != self.rank:
            raise DimensionError(
                f"element rank {element.rank} vs character rank {self.rank}")
        return FormalCharacter(
            self.rank, {element.apply(w): c for w, c in self.terms.items()})

    def mass(self) -> int:
        """Sum of multiplicities (the dimension, for a true character)."""
        return sum(self.terms.values())

    def support(self) -> list:
        return sorted(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def items_sorted(self) -> list:
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        if not self.terms:
            return "FormalCharacter(0)"
        parts = [f"{c}*e[{w}]" for w, c in self.items_sorted()]
        return "FormalCharacter(" + " + ".join(parts) + ")"


# -- irreducible characters (Freudenthal) ----------------------------------

def _dominant_rep(w: Weight, rs: RootSystem) -> Weight:
    current = w
    simples = rs.simple_roots
    while True:
        moved = False
        for a in simples:
            p = inner_product(current, a)
            if p < 0:
                current = current - a * (2 * p / inner_product(a, a))
                moved = True
        if not moved:
            return current


@lru_cache(maxsize=None)
def _weight_set(rs: RootSystem, nu: Weight) -> frozenset:
    """All weights of the irreducible with highest weight nu, via downward
    closure along simple-root strings."""
    seen = {nu}
    frontier = [nu]
    simples = rs.simple_roots
    norms = [inner_product(a, a) for a in simples]
    while frontier:
        new = []
        for w in frontier:
            for a, n2 in zip(simples, norms):
                steps = 2 * inner_product(w, a) / n2
                step_count = int(steps)
                cur = w
                for _ in range(max(step_count, 0)):
                    cur = cur - a
                    if cur not in seen:
                        seen.add(cur)
                        new.append(cur)
        frontier = new
    return frozenset(seen)


@lru_cache(maxsize=None)
def dominant_weight_multiplicities(rs: RootSystem, nu: Weight) -> tuple:
    """Freudenthal multiplicities on the dominant weights of pi_nu.

    Returns ((weight, multiplicity), ...) sorted by descending height of nu
    minus the weight, which is also a valid evaluation order for the
    recursion.  Works verbatim for reducible systems and systems with free
    torus directions, and for empty systems (character = e^nu).
    """
    if not rs.is_dominant(nu):
        raise NonDominantError(f"{nu} is not dominant for {rs}")
    for a in rs.simple_roots:
        pairing = 2 * inner_product(nu, a) / inner_product(a, a)
        if pairing.denominator != 1:
            raise NonDominantError(
                f"{nu} is not algebraically integral: <nu, {a}^> = {pairing}")
    weights = _weight_set(rs, nu)
    delta = rs.delta
    dominant = [w for w in weights if rs.is_dominant(w)]

    def height(w: Weight) -> Fraction:
        coeffs = rs.simple_coefficients(nu - w)
        return sum(coeffs, Fraction(0))

    dominant.sort(key=lambda w: (height(w), tuple(-c for c in w)))
    mult: Dict[Weight, int] = {nu: 1}
    target = inner_product(nu + delta, nu + delta)
    for w in dominant:
        if w == nu:
            continue
        acc = Fraction(0)
        for alpha in rs.positive_roots:
            cur = w + alpha
            while cur in weights:
                rep = _dominant_rep(cur, rs)
                acc += mult[rep] * inner_product(cur, alpha)
                cur = cur + alpha
        denom = target - inner_product(w + delta, w + delta)
        value = 2 * acc / denom
        assert value.denominator == 1 and value > 0, \
            f"Freudenthal produced {value} at {w}"
        mult[w] = int(value)
    order = sorted(mult, key=lambda w: (height(w), tuple(-c for c in w)))
    return tuple((w, mult[w]) for w in order)


@lru_cache(maxsize=None)
def irreducible_character(rs: RootSystem, nu: Weight) -> FormalCharacter:
    """Character of the irreducible highest-weight representation pi_nu.

    nu must be dominant; integrality against any particular lattice is
    deliberately not required (spin representations are half-integral).
    """
    nu = Weight(nu)
    dom = dict(dominant_weight_multiplicities(rs, nu))
    weights = _weight_set(rs, nu)
    terms = {w: dom[_dominant_rep(w, rs)] for w in weights}
    return FormalCharacter(rs.rank, terms)


def weyl_dim(rs: RootSystem, nu: Weight) -> int:
    """Dimension of pi_nu by the product formula over positive roots."""
    nu = Weight(nu)
    if not rs.is_dominant(nu):
        raise NonDominantError(f"{nu} is not dominant for {rs}")
    delta = rs.delta
    result = Fraction(1)
    shifted = nu + delta
    for alpha in rs.positive_roots:
        result *= inner_product(shifted, alpha) / inner_product(delta, alpha)
    assert result.denominator == 1 and result > 0
    return int(result)


# -- decomposition by highest-weight peeling --------------------------------

def _check_invariance(ch: FormalCharacter, rs: RootSystem) -> None:
    for refl in rs.simple_reflections():
        if ch.apply(refl) != ch:
            raise SymmetryError(
                f"character is not invariant under reflection in "
                f"{rs.simple_roots[refl.word[0]]}")


def decompose(ch: FormalCharacter, rs: RootSystem) -> Dict[Weight, int]:
    """Multiplicities m_nu with ch = sum m_nu * irreducible_character(nu).

    The input must be W(rs)-invariant; a negative multiplicity encountered
    while peeling means the character is not a nonnegative combination.
    Peeling always picks the lexicographically largest dominant support
    weight among those of maximal height (pairing with delta), and runs on
    the dominant part only, which determines an invariant character.
    """
    if ch.rank != rs.rank:
        raise DimensionError(f"rank mismatch: {ch.rank} vs {rs.rank}")
    _check_invariance(ch, rs)
    delta = rs.delta
    remaining = {w: c for w, c in ch.terms.items() if rs.is_dominant(w)}
    result: Dict[Weight, int] = {}
    while remaining:
        top = max(remaining, key=lambda w: (inner_product(w, delta), w))
        coeff = remaining[top]
        if coeff < 0:
            raise DecompositionError(
                f"negative multiplicity {coeff} at {top}: character is not "
                f"a nonnegative combination of irreducibles")
        result[top] = coeff
        for w, c in dominant_weight_multiplicities(rs, top):
            newc = remaining.get(w, 0) - coeff * c
            if newc:
                remaining[w] = newc
            else:
                remaining.pop(w, None)
    return result


# -- branching ---------------------------------------------------------------

def branch_equal_rank(pair: SymmetricPair, nu: Weight) -> Dict[Weight, int]:
    """Restrict pi_nu to the subgroup side of an equal-rank pair.

    The maximal torus is shared, so restriction is reinterpretation of the
    same formal character, followed by decomposition against Delta_h.
    """
    pair.ensure_valid()
    nu = Weight(nu)
    rs = pair.root_system
    if not rs.is_dominant(nu):
        raise NonDominantError(f"{nu} is not dominant for {rs}")
    if nu not in pair.lattice_F1:
        raise ValueError(f"{nu} is not in F1 for pair {pair.name}")
    ch = irreducible_character(rs, nu)
    result = decompose(ch, pair.h_system)
    total = sum(mult * weyl_dim(pair.h_system, w) for w, mult in result.items())
    assert total == weyl_dim(rs, nu), "branching lost dimensions"
    return result


def branch_interleave_BD(m: int, nu: Weight) -> Dict[Weight, int]:
    """Branching multiplicities for the odd/even orthogonal chain by the
    interleaving condition nu_1 >= a_1 >= nu_2 >= ... >= nu_m >= |a_m|.

    Components a run over the same integrality class as nu (all integers
    or all half-odd-integers), each with multiplicity one.  Independent of
    the character machinery; used as its cross-check.
    """
    nu = Weight(nu)
    if len(nu) != m:
        raise DimensionError(f"nu has length {len(nu)}, expected {m}")
    if not all(nu[i] >= nu[i + 1] for i in range(m - 1)) or nu[-1] < 0:
        raise NonDominantError(f"{nu} is not dominant for B{m}")
    frac = nu[0] - int(nu[0])
    if any(c - int(c) != frac for c in nu):
        raise ValueError(f"{nu} is not in a single integrality class")

    result: Dict[Weight, int] = {}

    def extend(k: int, prefix: tuple) -> None:
        if k == m - 1:
            upper = nu[m - 1]
            a = -upper
            while a <= upper:
                result[Weight(prefix + (a,))] = 1
                a += 1
            return
        lower, upper = nu[k + 1], nu[k]
        a = lower
        while a <= upper:
            extend(k + 1, prefix + (a,))
            a += 1

    extend(0, ())
    return result
