"""Buchberger's algorithm with reduction to canonical reduced Groebner bases.

Determinism contract: pair selection is by smallest weighted lcm degree
(ties by lcm key, then indices), the reduction step always rewrites the
largest reducible monomial using the first eligible divisor in ascending
leading-monomial order, and the final basis is interreduced, monic, and
sorted ascending by leading monomial.  Two ideals are equal iff their
reduced bases under the same order are identical.

The engine indexes the field's operation tables directly, which is why
rings only accept table-backed fields.
"""

from __future__ import annotations

import heapq
from bisect import insort
from dataclasses import dataclass

from .errors import (
    ContextMismatchError,
    DegreeCapExceededError,
    ExactDivisionError,
    ZeroInputError,
)
from .ring import ELIMINATION_BLOCK, MAX_EXPONENT, MonomialOrder, Polynomial


def _check_context(polys):
    ring = polys[0].ring
    for f in polys[1:]:
        if f.ring is not ring and f.ring != ring:
            raise ContextMismatchError("polynomials from different rings")
    return ring


def _prepare(polys, order, field):
    """Reducer records [(lm_key, seq, lm, tail)], ascending by leading monomial.

    Tail coefficients are pre-scaled by -1/lc so a reduction step is a plain
    multiply-accumulate.
    """
    key = order.key
    mul = field._mul
    neg = field._neg
    inv = field._inv
    prepped = []
    for seq, g in enumerate(polys):
        terms = g._terms
        lm, lc = terms[0]
        lcinv = inv[lc]
        mrow = mul[lcinv]
        tail = tuple((e, key(e), neg[mrow[c]]) for e, c in terms[1:])
        prepped.append((key(lm), seq, lm, tail))
    prepped.sort(key=lambda r: (r[0], r[1]))
    return prepped


def _reduce(terms, prepped, order, field, guard):
    """Full normal form of the given (monomial, coeff) pairs; descending tuple."""
    key = order.key
    add = field._add
    mul = field._mul
    acc = {}
    for e, c in terms:
        prev = acc.get(e)
        if prev is None:
            acc[e] = c
        else:
            merged = add[prev][c]
            if merged:
                acc[e] = merged
            else:
                del acc[e]
    heap = [(-key(e), e) for e in acc]
    heapq.heapify(heap)
    pop = heapq.heappop
    push = heapq.heappush
    out = []
    while heap:
        nk, e = pop(heap)
        c = acc.pop(e, 0)
        if not c:
            continue
        ke = -nk
        hit = None
        for lmk, _seq, lm, tail in prepped:
            if lmk > ke:
                break
            if ((e | guard) - lm) & guard == guard:
                hit = (lmk, lm, tail)
                break
        if hit is None:
            out.append((e, c))
            continue
        lmk, lm, tail = hit
        shift = e - lm
        shiftk = ke - lmk
        mrow = mul[c]
        for et, kt, ctn in tail:
            en = et + shift
            if en & guard:
                raise DegreeCapExceededError(
                    MAX_EXPONENT, MAX_EXPONENT,
                    "reduction exceeded the representable exponent range",
                )
            contrib = mrow[ctn]
            prev = acc.get(en)
            if prev is None:
                acc[en] = contrib
                push(heap, (-(kt + shiftk), en))
            else:
                merged = add[prev][contrib]
                if merged:
                    acc[en] = merged
                else:
                    del acc[en]
    return tuple(out)


def _spoly_terms(ring, f, g, lcm):
    """Terms of the s-polynomial of f and g with respect to their lcm."""
    field = ring.field
    mul = field._mul
    neg = field._neg
    inv = field._inv
    guard = ring.guard
    fterms = f._terms
    gterms = g._terms
    cf = inv[fterms[0][1]]
    cg = neg[inv[gterms[0][1]]]
    sf = lcm - fterms[0][0]
    sg = lcm - gterms[0][0]
    rowf = mul[cf]
    rowg = mul[cg]
    out = []
    for e, c in fterms:
        en = e + sf
        if en & guard:
            raise DegreeCapExceededError(
                MAX_EXPONENT, MAX_EXPONENT,
                "s-polynomial exceeded the representable exponent range",
            )
        out.append((en, rowf[c]))
    for e, c in gterms:
        en = e + sg
        if en & guard:
            raise DegreeCapExceededError(
                MAX_EXPONENT, MAX_EXPONENT,
                "s-polynomial exceeded the representable exponent range",
            )
        out.append((en, rowg[c]))
    return out


def s_polynomial(f, g):
    """(lcm/lt(f))*f - (lcm/lt(g))*g; leading terms cancel."""
    ring = _check_context([f, g])
    if not f or not g:
        raise ZeroInputError("s-polynomial requires nonzero polynomials")
    lcm = ring.mono_lcm(f._terms[0][0], g._terms[0][0])
    return ring.from_terms(_spoly_terms(ring, f, g, lcm))


@dataclass
class GBStats:
    """Counters from one Buchberger run."""
    pairs_processed: int = 0
    reductions_to_zero: int = 0
    max_intermediate_degree: int = 0

    def as_dict(self):
        return {
            "pairs_processed": self.pairs_processed,
            "reductions_to_zero": self.reductions_to_zero,
            "max_intermediate_degree": self.max_intermediate_degree,
        }


class GroebnerBasis:
    """Reduced, monic basis sorted ascending by leading monomial (canonical)."""

    __slots__ = ("ring", "order", "polys", "stats", "truncated_at", "_prepped")

    def __init__(self, ring, polys, stats, truncated_at=None):
        self.ring = ring
        self.order = ring.order
        self.polys = tuple(polys)
        self.stats = stats
        self.truncated_at = truncated_at
        self._prepped = None

    def prepared(self):
        if self._prepped is None:
            self._prepped = _prepare(self.polys, self.ring.order, self.ring.field)
        return self._prepped

    def leading_monomials(self):
        return [f._terms[0][0] for f in self.polys]

    def reduce(self, f):
        """Normal form of f modulo this basis."""
        if f.ring != self.ring:
            raise ContextMismatchError("polynomial from a different ring")
        if not self.polys or not f:
            return f
        return Polynomial(
            self.ring,
            _reduce(f._terms, self.prepared(), self.ring.order, self.ring.field, self.ring.guard),
        )

    def contains(self, f):
        return not self.reduce(f)

    def dump(self):
        """Stable text form: order header plus one canonical polynomial per line."""
        header = f"# order {self.ring.order.describe()}, gens: {','.join(self.ring.names)}"
        return "\n".join([header] + [str(f) for f in self.polys]) + "\n"

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.ring == other.ring and self.polys == other.polys

    def __hash__(self):
        return hash(self.polys)

    def __repr__(self):
        return f"GroebnerBasis({len(self.polys)} elements over {self.ring.field})"


def buchberger(gens, ring=None, *, truncate_at=None, degree_cap=None, known_gb_prefix=0):
    """Reduced Groebner basis of the ideal generated by gens.

    truncate_at=D stops once every pair of weighted lcm degree <= D is
    processed (valid for all degree <= D queries when inputs are homogeneous);
    degree_cap raises DegreeCapExceededError instead.  known_gb_prefix marks
    the first k inputs as an already-valid Groebner basis so their internal
    pairs are skipped.
    """
    gens = [f for f in gens]
    if not gens:
        if ring is None:
            raise ValueError("empty generator list needs an explicit ring")
        return GroebnerBasis(ring, (), GBStats())
    ring_ = _check_context(gens)
    if ring is not None and ring != ring_:
        raise ContextMismatchError("generators do not live in the given ring")
    ring = ring_
    order = ring.order
    field = ring.field
    guard = ring.guard
    wdeg = ring.wdeg
    divides = ring.divides
    mono_lcm = ring.mono_lcm
    key = order.key
    stats = GBStats()

    basis = []       # Polynomial, monic
    lms = []         # packed leading monomials
    prepped = []     # reducer records sorted by (lm key, seq)
    pairheap = []    # (lcm wdeg, lcm key, i, j, lcm)
    queued = set()   # (i, j) with i < j currently in the heap

    def push_pairs(j):
        if j < known_gb_prefix:
            return  # i < j, so both ends sit inside the known basis
        lmj = lms[j]
        for i in range(j):
            L = mono_lcm(lms[i], lmj)
            if L == lms[i] + lmj:  # coprime leading monomials: first criterion
                continue
            heapq.heappush(pairheap, (wdeg(L), key(L), i, j, L))
            queued.add((i, j))

    def add_element(h):
        seq = len(basis)
        basis.append(h)
        terms = h._terms
        lm, lc = terms[0]
        lms.append(lm)
        lcinv = field._inv[lc]
        mrow = field._mul[lcinv]
        neg = field._neg
        tail = tuple((e, key(e), neg[mrow[c]]) for e, c in terms[1:])
        insort(prepped, (key(lm), seq, lm, tail))
        stats.max_intermediate_degree = max(stats.max_intermediate_degree, wdeg(lm))
        push_pairs(seq)

    for f in gens:
        if not f:
            raise ZeroInputError("zero polynomial among the generators")
        if degree_cap is not None and f.degree() > degree_cap:
            raise DegreeCapExceededError(f.degree(), degree_cap)
        reduced = _reduce(f._terms, prepped, order, field, guard)
        if reduced:
            add_element(Polynomial(ring, reduced).monic())

    truncated = None
    while pairheap:
        d, _lk, i, j, L = heapq.heappop(pairheap)
        if truncate_at is not None and d > truncate_at:
            truncated = truncate_at
            break
        if degree_cap is not None and d > degree_cap:
            raise DegreeCapExceededError(d, degree_cap)
        queued.discard((i, j))
        # chain criterion: lm_k divides the lcm and both cross pairs are gone
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if divides(lms[k], L):
                a = (i, k) if i < k else (k, i)
                b = (j, k) if j < k else (k, j)
                if a not in queued and b not in queued:
                    skip = True
                    break
        if skip:
            continue
        stats.pairs_processed += 1
        stats.max_intermediate_degree = max(stats.max_intermediate_degree, d)
        reduced = _reduce(
            _spoly_terms(ring, basis[i], basis[j], L), prepped, order, field, guard
        )
        if not reduced:
            stats.reductions_to_zero += 1
            continue
        add_element(Polynomial(ring, reduced).monic())

    return GroebnerBasis(ring, _interreduce(basis, ring), stats, truncated_at=truncated)


def _interreduce(basis, ring):
    """Minimalize, tail-reduce, and sort ascending; yields the canonical form."""
    if not basis:
        return ()
    order = ring.order
    field = ring.field
    guard = ring.guard
    key = order.key
    divides = ring.divides
    ordered = sorted(basis, key=lambda f: key(f._terms[0][0]))
    kept = []
    kept_lms = []
    for f in ordered:
        lm = f._terms[0][0]
        if any(divides(m, lm) for m in kept_lms):
            continue
        kept.append(f)
        kept_lms.append(lm)
    prepped = _prepare(kept, order, field)
    final = []
    for f in kept:
        head = f._terms[0]
        tail = _reduce(f._terms[1:], prepped, order, field, guard)
        final.append(Polynomial(ring, (head,) + tail))
    return tuple(final)


def normal_form(f, basis):
    """Unique remainder of f after full reduction by the basis.

    basis may be a GroebnerBasis (canonical remainders) or any polynomial
    sequence (the deterministic multivariate division algorithm).
    """
    if isinstance(basis, GroebnerBasis):
        return basis.reduce(f)
    basis = list(basis)
    if not basis:
        return f
    ring = _check_context([f] + basis)
    if any(not g for g in basis):
        raise ZeroInputError("zero polynomial in the reduction basis")
    if not f:
        return f
    prepped = _prepare(basis, ring.order, ring.field)
    return Polynomial(ring, _reduce(f._terms, prepped, ring.order, ring.field, ring.guard))


def ideal_membership(f, gb):
    """True iff the normal form of f modulo the basis vanishes."""
    return not normal_form(f, gb)


def elimination_gb(gens, eliminate_count, *, degree_cap=None, known_gb_prefix=0):
    """Reduced basis under the block order eliminating the first generators.

    Elements whose leading monomial avoids the eliminated block are free of
    eliminated variables entirely and generate the elimination ideal.
    """
    gens = list(gens)
    if eliminate_count == 0:
        return buchberger(gens, degree_cap=degree_cap, known_gb_prefix=known_gb_prefix)
    ring = _check_context(gens)
    elim_order = MonomialOrder(ring.degrees, ELIMINATION_BLOCK, block=eliminate_count)
    elim_ring = ring.with_order(elim_order)
    lifted = [elim_ring.from_terms(f._terms) for f in gens]
    return buchberger(lifted, elim_ring, degree_cap=degree_cap, known_gb_prefix=known_gb_prefix)


def divide_exact(f, divisor):
    """Quotient f/divisor when the division is exact; ExactDivisionError otherwise."""
    if not divisor:
        raise ZeroInputError("division by the zero polynomial")
    ring = _check_context([f, divisor])
    if not f:
        return ring.zero()
    field = ring.field
    lmd, lcd = divisor._terms[0]
    lcd_inv = field._inv[lcd]
    mul = field._mul
    quotient = []
    h = f
    while h:
        lmh, lch = h._terms[0]
        if not ring.divides(lmd, lmh):
            raise ExactDivisionError(
                f"{divisor} does not divide {f} exactly (stuck at {ring.mono_str(lmh)})"
            )
        qe = lmh - lmd
        qc = mul[lch][lcd_inv]
        quotient.append((qe, qc))
        h = h - Polynomial(ring, ((qe, qc),)) * divisor
    return Polynomial(ring, tuple(quotient))
