"""Ideal-level operators: sum, intersection, colon, annihilator, equality.

Intersection uses the single-auxiliary-variable trick: I cap J is the
elimination of t from <t*I, (1-t)*J> in the ring extended by a degree-1
variable t put first under an elimination-block order.  Those lifted inputs
are the one sanctioned inhomogeneous Groebner computation.  Colon ideals
follow as (I : f) = (I cap <f>) / f with exact division asserted.

Equality is decided on canonical reduced bases, so Ideal caches its
Groebner basis; the cache is idempotent (recomputation yields the identical
object state) and therefore safe under concurrent first use.
"""

from __future__ import annotations

from .errors import ContextMismatchError, ZeroElementError, ZeroInputError
from .groebner import GroebnerBasis, buchberger, divide_exact
from .ring import ELIMINATION_BLOCK, MonomialOrder, Polynomial, Ring

_AUX = "#t"


class Ideal:
    """Finitely generated homogeneous ideal with a lazily cached reduced basis."""

    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring, gens, _gb=None):
        self.ring = ring
        cleaned = []
        for g in gens:
            if not isinstance(g, Polynomial):
                raise TypeError("ideal generators must be polynomials")
            if g.ring != ring:
                raise ContextMismatchError("generator from a different ring")
            if g:
                cleaned.append(g)
        self.gens = tuple(cleaned)
        self._gb = _gb

    @classmethod
    def from_groebner(cls, gb):
        ideal = cls(gb.ring, gb.polys, _gb=gb)
        return ideal

    def groebner(self):
        if self._gb is None:
            self._gb = buchberger(list(self.gens), self.ring)
        return self._gb

    def contains(self, f):
        return not self.groebner().reduce(f)

    def __repr__(self):
        return f"Ideal({len(self.gens)} generators over {self.ring.field})"


def _same_ring(a, b):
    if a.ring != b.ring:
        raise ContextMismatchError("ideals live in different rings")
    return a.ring


def ideal_sum(i1, i2):
    """Concatenated generators; the basis is recomputed lazily."""
    ring = _same_ring(i1, i2)
    return Ideal(ring, i1.gens + i2.gens)


def _extended_ring(ring):
    """ring with one auxiliary degree-1 variable prepended, eliminated first."""
    return Ring(
        ring.field,
        (_AUX,) + ring.names,
        (1,) + ring.degrees,
        order=MonomialOrder((1,) + ring.degrees, ELIMINATION_BLOCK, block=1),
        _internal=True,
    )


def _lift(f, ext_ring):
    return ext_ring.from_terms(((e << 8, c) for e, c in f._terms))


def _project(f, ring):
    return ring.from_terms(((e >> 8, c) for e, c in f._terms))


def intersection_generators(gens1, gens2, ring, known_gb_prefix=0, degree_cap=None):
    """Generators of <gens1> cap <gens2> via elimination of the auxiliary variable."""
    ext = _extended_ring(ring)
    t = ext.gen(_AUX)
    lifted = [t * _lift(g, ext) for g in gens1]
    for h in gens2:
        lh = _lift(h, ext)
        lifted.append(lh - t * lh)  # (1 - t) * h
    if not lifted:
        return []
    egb = buchberger(lifted, ext, known_gb_prefix=known_gb_prefix, degree_cap=degree_cap)
    out = []
    for p in egb.polys:
        if p._terms[0][0] & 0xFF:
            continue  # leading monomial contains t, hence the whole element does
        out.append(_project(p, ring))
    return out


def ideal_intersect(i1, i2, degree_cap=None):
    """I cap J; computed from the reduced bases so the result is canonical."""
    ring = _same_ring(i1, i2)
    gb1 = i1.groebner()
    gb2 = i2.groebner()
    gens = intersection_generators(
        list(gb1.polys), list(gb2.polys), ring,
        known_gb_prefix=len(gb1.polys), degree_cap=degree_cap,
    )
    return Ideal(ring, gens)


def colon(ideal, f, degree_cap=None):
    """(I : f) = {g : g*f in I}, via (I cap <f>) divided exactly by f."""
    if not isinstance(f, Polynomial) or f.ring != ideal.ring:
        raise ContextMismatchError("colon element from a different ring")
    if not f:
        raise ZeroInputError("colon by the zero polynomial")
    ring = ideal.ring
    if f.degree() == 0:
        return Ideal(ring, ideal.gens, _gb=ideal._gb)  # unit scaling: (I : c) = I
    gb = ideal.groebner()
    meet = intersection_generators(
        list(gb.polys), [f], ring,
        known_gb_prefix=len(gb.polys), degree_cap=degree_cap,
    )
    return Ideal(ring, [divide_exact(h, f) for h in meet])


def ideal_equal(i1, i2):
    """True iff the reduced Groebner bases coincide (canonical representation)."""
    ring = _same_ring(i1, i2)
    if ring.order != i2.ring.order:
        raise ContextMismatchError("ideals compared under different orders")
    return i1.groebner().polys == i2.groebner().polys


class QuotientRing:
    """Immutable handle for R/I: a presentation-or-ring plus the reduced basis of I.

    Residue classes are represented by their normal forms; every annihilator
    or regularity query goes through a handle.
    """

    __slots__ = ("ring", "gb", "presentation", "label", "degree_cap")

    def __init__(self, ring, relations=None, gb=None, presentation=None, label=None,
                 degree_cap=None):
        self.ring = ring
        self.degree_cap = degree_cap
        if gb is not None:
            if gb.ring != ring:
                raise ContextMismatchError("basis from a different ring")
            self.gb = gb
        else:
            self.gb = buchberger(list(relations or ()), ring, degree_cap=degree_cap)
        self.presentation = presentation
        self.label = label or "R/I"

    @classmethod
    def from_presentation(cls, pres, label=None, degree_cap=None):
        return cls(pres.ring, relations=pres.relations, presentation=pres,
                   label=label or "R/I", degree_cap=degree_cap)

    def nf(self, f):
        """Canonical representative of the residue class of f."""
        return self.gb.reduce(f)

    def is_zero(self, f):
        return not self.gb.reduce(f)

    def defining_ideal(self):
        return Ideal.from_groebner(self.gb)

    def mod_out(self, extra):
        """Quotient further by the given elements (incremental basis)."""
        extra = [self.nf(f) for f in extra]
        extra = [f for f in extra if f]
        gb = buchberger(list(self.gb.polys) + extra, self.ring,
                        known_gb_prefix=len(self.gb.polys), degree_cap=self.degree_cap)
        return QuotientRing(self.ring, gb=gb, presentation=self.presentation,
                            label=f"{self.label}/<{', '.join(str(f) for f in extra)}>",
                            degree_cap=self.degree_cap)

    def parse(self, text):
        return self.ring.parse(text)

    def __eq__(self, other):
        if not isinstance(other, QuotientRing):
            return NotImplemented
        return self.ring == other.ring and self.gb.polys == other.gb.polys

    def __hash__(self):
        return hash((self.ring, self.gb.polys))

    def __repr__(self):
        return f"QuotientRing({self.label}, |GB|={len(self.gb)})"


def annihilator(quotient, f):
    """Ann_{R/I}(f) as reduced residue-class generators of (I : f).

    The class of f must be nonzero; annihilators of zero are rejected so the
    caller handles that case explicitly.
    """
    fbar = quotient.nf(f)
    if not fbar:
        raise ZeroElementError(f"{f} is zero in {quotient.label}; its annihilator is everything")
    cln = colon(quotient.defining_ideal(), fbar, degree_cap=quotient.degree_cap)
    reduced = []
    seen = set()
    for g in cln.gens:
        r = quotient.nf(g)
        if r and r._terms not in seen:
            seen.add(r._terms)
            reduced.append(r)
    reduced.sort(key=lambda p: quotient.ring.order.key(p._terms[0][0]))
    return Ideal(quotient.ring, reduced)
