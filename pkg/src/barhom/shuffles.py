"""Shuffles, the Alexander-Whitney and Eilenberg-Zilber maps, and edgewise
subdivision.

A (p,q)-shuffle is a permutation of {1..p+q} ascending on the first p and the
last q values; the list of all of them is kept in dictionary order and each
carries the sign of the underlying permutation.  The subdivision of a simplex
along two homomorphisms is implemented twice: as the composite
multiplication . shuffle . diagonal-splitting . pushforward . diagonal, and
directly through the shuffle formula.  The two code paths are independent and
are cross-checked against each other in the tests.

Tensor chains (pairs of simplices of any bidegree) and product chains (pairs
of equal dimension, one simplex of the product space) are deliberately
distinct types; mixing them is a type error.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterator

from .moore import Chain, ChainError


class DimensionMismatch(ChainError):
    pass


class RankOutOfRange(ChainError):
    pass


# -- shuffles -----------------------------------------------------------------


@dataclass(frozen=True)
class Shuffle:
    p: int
    q: int
    rank: int          # 1-based position in the dictionary-ordered list
    first: tuple       # mu(1) < ... < mu(p), values in 1..p+q
    sign: int

    @property
    def second(self) -> tuple:
        chosen = set(self.first)
        return tuple(v for v in range(1, self.p + self.q + 1) if v not in chosen)

    @property
    def permutation(self) -> tuple:
        return self.first + self.second


def shuffle_sign(first: tuple) -> int:
    # inversions of (mu || nu) all sit between the blocks
    total = sum(v - i for i, v in enumerate(first, start=1))
    return -1 if total % 2 else 1


def shuffles(p: int, q: int) -> list[Shuffle]:
    """All (p,q)-shuffles in dictionary order, with signs."""
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    out = []
    for rank, first in enumerate(itertools.combinations(range(1, p + q + 1), p), start=1):
        out.append(Shuffle(p, q, rank, first, shuffle_sign(first)))
    return out


def shuffle_at(p: int, q: int, rank: int) -> Shuffle:
    if not 1 <= rank <= comb(p + q, p):
        raise RankOutOfRange(f"rank {rank} out of 1..{comb(p + q, p)} for ({p},{q})")
    first = next(itertools.islice(itertools.combinations(range(1, p + q + 1), p), rank - 1, None))
    return Shuffle(p, q, rank, first, shuffle_sign(first))


# -- tensor and product chains -------------------------------------------------


class TensorChain:
    """Integer combination of sigma (x) tau with fixed total degree."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms=()):
        self.degree = degree
        self.terms: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, coeff in items:
            self.add_term(key, coeff)

    def add_term(self, key, coeff: int) -> None:
        if coeff == 0:
            return
        sigma, tau = key
        if len(sigma) + len(tau) != self.degree:
            raise DimensionMismatch(
                f"bidegree ({len(sigma)},{len(tau)}) in a degree-{self.degree} tensor chain"
            )
        new = self.terms.get(key, 0) + coeff
        if new == 0:
            self.terms.pop(key, None)
        else:
            self.terms[key] = new

    def __iter__(self):
        return iter(self.terms.items())

    def __eq__(self, other):
        return (
            isinstance(other, TensorChain)
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def is_zero(self) -> bool:
        return not self.terms


class ProductChain:
    """Integer combination of product simplices sigma x tau, dim sigma = dim tau."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms=()):
        self.dim = dim
        self.terms: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, coeff in items:
            self.add_term(key, coeff)

    def add_term(self, key, coeff: int) -> None:
        if coeff == 0:
            return
        sigma, tau = key
        if len(sigma) != self.dim or len(tau) != self.dim:
            raise DimensionMismatch(
                f"product simplex of dims ({len(sigma)},{len(tau)}) in dimension {self.dim}"
            )
        new = self.terms.get(key, 0) + coeff
        if new == 0:
            self.terms.pop(key, None)
        else:
            self.terms[key] = new

    def __iter__(self):
        return iter(self.terms.items())

    def __eq__(self, other):
        return (
            isinstance(other, ProductChain)
            and self.dim == other.dim
            and self.terms == other.terms
        )

    def is_zero(self) -> bool:
        return not self.terms


def _face_pair(alg, i: int, sigma: tuple, tau: tuple):
    from .moore import face

    return face(alg, i, sigma), face(alg, i, tau)


def product_boundary(alg, pc: ProductChain) -> ProductChain:
    out = ProductChain(pc.dim - 1)
    for (sigma, tau), coeff in pc:
        sign = 1
        for i in range(pc.dim + 1):
            out.add_term(_face_pair(alg, i, sigma, tau), sign * coeff)
            sign = -sign
    return out


def tensor_boundary(alg, tc: TensorChain) -> TensorChain:
    from .moore import face

    out = TensorChain(tc.degree - 1)
    for (sigma, tau), coeff in tc:
        p, q = len(sigma), len(tau)
        if p > 0:
            sign = 1
            for i in range(p + 1):
                out.add_term((face(alg, i, sigma), tau), sign * coeff)
                sign = -sign
        if q > 0:
            koszul = -1 if p % 2 else 1
            sign = koszul
            for i in range(q + 1):
                out.add_term((sigma, face(alg, i, tau)), sign * coeff)
                sign = -sign
    return out


# -- the classical maps ---------------------------------------------------------


def diagonal(chain: Chain) -> ProductChain:
    out = ProductChain(chain.dim)
    for simplex, coeff in chain:
        out.add_term((simplex, simplex), coeff)
    return out


def pushforward_pair(gmap: Callable, fmap: Callable, pc: ProductChain) -> ProductChain:
    out = ProductChain(pc.dim)
    for (sigma, tau), coeff in pc:
        out.add_term(
            (tuple(gmap(x) for x in sigma), tuple(fmap(y) for y in tau)), coeff
        )
    return out


def aw(pc: ProductChain) -> TensorChain:
    """Alexander-Whitney: front faces of the first factor tensor back faces
    of the second.  For bar simplices front and back faces are prefix and
    suffix slices."""
    out = TensorChain(pc.dim)
    for (sigma, tau), coeff in pc:
        for i in range(pc.dim + 1):
            out.add_term((sigma[:i], tau[i:]), coeff)
    return out


def _place(entries: tuple, positions: tuple, n: int, identity) -> tuple:
    slots = [identity] * n
    for entry, pos in zip(entries, positions):
        slots[pos - 1] = entry
    return tuple(slots)


def ez(alg, tc: TensorChain) -> ProductChain:
    """Eilenberg-Zilber shuffle map: signed degenerate placements."""
    out = ProductChain(tc.degree)
    e = alg.identity
    n = tc.degree
    for (sigma, tau), coeff in tc:
        p, q = len(sigma), len(tau)
        for sh in shuffles(p, q):
            first = _place(sigma, sh.first, n, e)
            second = _place(tau, sh.second, n, e)
            out.add_term((first, second), sh.sign * coeff)
    return out


def mult_map(alg, pc: ProductChain) -> Chain:
    """Entrywise multiplication of the two coordinates."""
    out = Chain(pc.dim)
    for (sigma, tau), coeff in pc:
        out.add_term(tuple(alg.mul(x, y) for x, y in zip(sigma, tau)), coeff)
    return out


def tensor_of_chains(a: Chain, b: Chain) -> TensorChain:
    out = TensorChain(a.dim + b.dim)
    for sigma, ca in a:
        for tau, cb in b:
            out.add_term((sigma, tau), ca * cb)
    return out


# -- edgewise subdivision --------------------------------------------------------


@dataclass(frozen=True)
class EdTerm:
    """One shuffle term of the subdivision, in emission order."""

    p: int
    q: int
    rank: int
    sign: int
    simplex: tuple


def shuffle_term(f: Callable, g: Callable, rank: int, p: int, q: int, sigma: tuple) -> tuple:
    """The single (p+q)-simplex indexed by the rank-th (p,q)-shuffle: images
    under g of the first p entries sit at the first-block positions, images
    under f of the rest at the second-block positions."""
    n = len(sigma)
    if p + q != n:
        raise DimensionMismatch(f"p+q = {p + q} != dim = {n}")
    sh = shuffle_at(p, q, rank)
    entries = [None] * n
    for i, pos in enumerate(sh.first):
        entries[pos - 1] = g(sigma[i])
    for i, pos in enumerate(sh.second):
        entries[pos - 1] = f(sigma[p + i])
    return tuple(entries)


def ed_terms(f: Callable, g: Callable, sigma: tuple) -> Iterator[EdTerm]:
    """All shuffle terms in emission order: p ascending, then dictionary order."""
    n = len(sigma)
    for p in range(n + 1):
        q = n - p
        for sh in shuffles(p, q):
            entries = [None] * n
            for i, pos in enumerate(sh.first):
                entries[pos - 1] = g(sigma[i])
            for i, pos in enumerate(sh.second):
                entries[pos - 1] = f(sigma[p + i])
            yield EdTerm(p, q, sh.rank, sh.sign, tuple(entries))


def edgewise(alg, f: Callable, g: Callable, sigma: tuple) -> Chain:
    """Subdivision of one simplex via the shuffle formula."""
    out = Chain(len(sigma))
    for term in ed_terms(f, g, sigma):
        out.add_term(term.simplex, term.sign)
    return out


def edgewise_chain(alg, f: Callable, g: Callable, chain: Chain) -> Chain:
    out = Chain(chain.dim)
    for simplex, coeff in chain:
        for term in ed_terms(f, g, simplex):
            out.add_term(term.simplex, term.sign * coeff)
    return out


def edgewise_composite(alg, f: Callable, g: Callable, chain: Chain) -> Chain:
    """The same map as the composite of the five classical chain maps; kept
    as an independent code path and cross-checked against ``edgewise``."""
    pc = diagonal(chain)
    pc = pushforward_pair(g, f, pc)
    tc = aw(pc)
    pc = ez(alg, tc)
    return mult_map(alg, pc)
