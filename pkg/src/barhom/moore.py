"""Bar-construction simplices and the Moore complex.

An n-simplex of the classifying space of a group is the ordered tuple
[g_1, ..., g_n]; here it is a plain Python tuple of entry values.  Entries may
be group elements, formal quintuples or leveled mitosis words — any value with
hashable canonical equality.  Operations that multiply or recognise entries
take the entry algebra as their first argument.

A ``Chain`` is a finite integer formal sum of simplices of one dimension.
Faces follow the bar-construction rule: the 0-th face drops the first entry,
the last face drops the last entry, and an interior face multiplies two
adjacent entries.  The diameter of a chain is the L1 norm of its coefficient
vector, and ``project`` is the quotient map that deletes degenerate terms
(those containing an identity entry).
"""

from __future__ import annotations

import json
from typing import Callable, Iterable, Iterator

BarSimplex = tuple

EMPTY_SIMPLEX: BarSimplex = ()


class ChainError(Exception):
    pass


class Chain:
    """Formal integer combination of same-dimension simplices."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: dict | Iterable = ()):
        if dim < 0:
            raise ChainError("chain dimension must be >= 0")
        self.dim = dim
        self.terms: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for simplex, coeff in items:
            self.add_term(simplex, coeff)

    @classmethod
    def zero(cls, dim: int) -> "Chain":
        return cls(dim)

    @classmethod
    def of(cls, simplex: BarSimplex, coeff: int = 1) -> "Chain":
        return cls(len(simplex), [(simplex, coeff)])

    def add_term(self, simplex: BarSimplex, coeff: int) -> None:
        if coeff == 0:
            return
        if len(simplex) != self.dim:
            raise ChainError(
                f"dimension mismatch: {len(simplex)}-simplex in a {self.dim}-chain"
            )
        new = self.terms.get(simplex, 0) + coeff
        if new == 0:
            self.terms.pop(simplex, None)
        else:
            self.terms[simplex] = new

    def __iter__(self) -> Iterator[tuple[BarSimplex, int]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Chain") -> "Chain":
        self._check_compatible(other)
        out = Chain(self.dim, dict(self.terms))
        for simplex, coeff in other:
            out.add_term(simplex, coeff)
        return out

    def __sub__(self, other: "Chain") -> "Chain":
        self._check_compatible(other)
        out = Chain(self.dim, dict(self.terms))
        for simplex, coeff in other:
            out.add_term(simplex, -coeff)
        return out

    def __neg__(self) -> "Chain":
        return self.scaled(-1)

    def scaled(self, n: int) -> "Chain":
        if n == 0:
            return Chain(self.dim)
        return Chain(self.dim, {s: n * c for s, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Chain)
            and self.dim == other.dim
            and self.terms == other.terms
        )

    def __hash__(self):
        raise TypeError("chains are mutable accumulators; not hashable")

    def _check_compatible(self, other: "Chain") -> None:
        if not isinstance(other, Chain):
            raise ChainError(f"not a chain: {other!r}")
        # zero chains are dimension-flexible; anything else must match
        if other.dim != self.dim and (other.terms or self.terms):
            raise ChainError(f"mixed dimensions {self.dim} and {other.dim}")

    def __repr__(self):
        return f"Chain(dim={self.dim}, terms={len(self.terms)})"


def face(alg, i: int, simplex: BarSimplex) -> BarSimplex:
    """d_i: drop the first entry (i=0), drop the last (i=n), or multiply
    the i-th and (i+1)-st entries for 0 < i < n."""
    n = len(simplex)
    if not 0 <= i <= n:
        raise IndexError(f"face index {i} out of range for a {n}-simplex")
    if n == 0:
        raise IndexError("the 0-simplex has no faces")
    if i == 0:
        return simplex[1:]
    if i == n:
        return simplex[:-1]
    merged = alg.mul(simplex[i - 1], simplex[i])
    return simplex[: i - 1] + (merged,) + simplex[i + 1 :]


def degeneracy(alg, i: int, simplex: BarSimplex) -> BarSimplex:
    """s_i: insert the identity after the i-th entry."""
    n = len(simplex)
    if not 0 <= i <= n:
        raise IndexError(f"degeneracy index {i} out of range for a {n}-simplex")
    return simplex[:i] + (alg.identity,) + simplex[i:]


def is_degenerate(alg, simplex: BarSimplex) -> bool:
    return any(alg.is_identity(entry) for entry in simplex)


def boundary(alg, chain: Chain) -> Chain:
    """Alternating sum of faces, extended linearly; zero in dimension 0."""
    if chain.dim == 0:
        return Chain(0)
    out = Chain(chain.dim - 1)
    for simplex, coeff in chain:
        sign = 1
        for i in range(chain.dim + 1):
            out.add_term(face(alg, i, simplex), sign * coeff)
            sign = -sign
    return out


def diameter(chain: Chain) -> int:
    return sum(abs(c) for c in chain.terms.values())


def project(alg, chain: Chain) -> Chain:
    """MacLane projection: delete every degenerate term."""
    out = Chain(chain.dim)
    for simplex, coeff in chain:
        if not is_degenerate(alg, simplex):
            out.add_term(simplex, coeff)
    return out


def count_degenerate(alg, chain: Chain) -> int:
    return sum(abs(c) for s, c in chain if is_degenerate(alg, s))


def cellular_boundary(alg, chain: Chain) -> Chain:
    """Boundary of the quotient-by-degeneracies complex.

    The quotient is modelled by chains without degenerate terms, so its
    boundary is the Moore boundary followed by the projection: faces of a
    nondegenerate simplex may themselves be degenerate and die in the
    quotient.  With this boundary the projection is a chain map:
    project(boundary(c)) == cellular_boundary(project(c)).
    """
    return project(alg, boundary(alg, chain))


def pushforward(mapping: Callable, chain: Chain) -> Chain:
    """Apply an entrywise map to every simplex of the chain."""
    out = Chain(chain.dim)
    for simplex, coeff in chain:
        out.add_term(tuple(mapping(entry) for entry in simplex), coeff)
    return out


# ---------------------------------------------------------------------------
# serialization


def simplex_to_json(alg, simplex: BarSimplex) -> list:
    return [alg.entry_to_json(entry) for entry in simplex]


def term_sort_key(alg, simplex: BarSimplex) -> str:
    # canonical ordering: lexicographic on the serialized entries
    return json.dumps(simplex_to_json(alg, simplex), sort_keys=True)


def chain_to_json(alg, chain: Chain) -> dict:
    terms = sorted(chain, key=lambda item: term_sort_key(alg, item[0]))
    return {
        "dim": chain.dim,
        "terms": [
            {"coeff": coeff, "simplex": simplex_to_json(alg, simplex)}
            for simplex, coeff in terms
        ],
    }
