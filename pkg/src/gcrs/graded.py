"""Graded-component bases, Hilbert function, and Krull dimension.

The degree-d component of R/I has the standard monomials of weighted degree
d (those not divisible by any leading monomial of the reduced basis) as a
field basis; a basis truncated at degree d answers every question up to d.
Krull dimension comes from the initial ideal by exhaustive search for the
largest variable subset meeting no leading-monomial support.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product

from .errors import EnumerationTooLargeError
from .ring import Monomial

DEFAULT_ENUM_CAP = 1 << 24


def standard_monomials(quotient, d):
    """All weighted-degree-d monomials outside the initial ideal, descending."""
    ring = quotient.ring
    divides = ring.divides
    degrees = ring.degrees
    n = ring.n
    lms = [m for m in (p._terms[0][0] for p in quotient.gb.polys) if ring.wdeg(m) <= d]
    out = []

    def descend(j, packed, remaining):
        if any(divides(m, packed) for m in lms):
            return
        if j == n:
            if remaining == 0:
                out.append(packed)
            return
        w = degrees[j]
        for e in range(remaining // w + 1):
            descend(j + 1, packed | (e << (8 * j)), remaining - e * w)

    descend(0, 0, d)
    out.sort(key=ring.order.key, reverse=True)
    return [Monomial(ring, m) for m in out]


@dataclass(frozen=True)
class HilbertTable:
    """counts[d] = dim over the base field of the degree-d component of R/I."""

    max_degree: int
    counts: tuple

    def __getitem__(self, d):
        return self.counts[d]

    def to_text(self):
        return "\n".join(f"{d}: {c}" for d, c in enumerate(self.counts)) + "\n"

    def to_json(self):
        return json.dumps({"max_degree": self.max_degree, "counts": list(self.counts)})


def hilbert_function(quotient, max_degree):
    """Componentwise dimensions of R/I for degrees 0..max_degree."""
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    counts = tuple(len(standard_monomials(quotient, d)) for d in range(max_degree + 1))
    return HilbertTable(max_degree, counts)


def component_size(quotient, d):
    """Number of nonzero degree-d classes up to scalar: (q^h_d - 1)/(q - 1)."""
    q = quotient.ring.field.q
    h = len(standard_monomials(quotient, d))
    return (q ** h - 1) // (q - 1)


def component_enumerate(quotient, d, cap=DEFAULT_ENUM_CAP):
    """Every nonzero degree-d residue class exactly once up to scalar.

    Classes are coefficient vectors over the descending standard-monomial
    basis with the first nonzero coordinate normalized to 1, yielded in
    ascending lexicographic order of the full vector; deterministic.
    """
    basis = standard_monomials(quotient, d)
    m = len(basis)
    q = quotient.ring.field.q
    if m and q ** m > cap:
        raise EnumerationTooLargeError(q ** m, cap)
    ring = quotient.ring
    packed = [mono.packed for mono in basis]

    def generate():
        for i in range(m - 1, -1, -1):
            head = ((packed[i], 1),)
            for suffix in product(range(q), repeat=m - 1 - i):
                terms = head + tuple(
                    (packed[i + 1 + k], c) for k, c in enumerate(suffix) if c
                )
                yield ring.from_terms(terms)

    return generate()


def krull_dimension(quotient):
    """dim R/I = dim R/in(I): the largest variable set meeting no leading support."""
    ring = quotient.ring
    n = ring.n
    supports = []
    for p in quotient.gb.polys:
        lm = p._terms[0][0]
        supports.append(sum(1 << j for j in range(n) if (lm >> (8 * j)) & 0xFF))
    best = 0
    for mask in range(1 << n):
        size = mask.bit_count()
        if size <= best:
            continue
        if all(s & ~mask for s in supports):
            best = size
    return best
