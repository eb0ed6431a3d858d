"""Monomials, weighted monomial orders, and canonical polynomial arithmetic.

A monomial over n generators is packed into a single int, 8 bits per
exponent, generator j occupying byte j.  That makes multiplication an
integer addition and divisibility one masked subtraction, at the price of a
hard limit of 127 on any single exponent (exceeding it raises
DegreeCapExceededError rather than corrupting state).

Both supported orders compare through an integer key that is *additive*:
key(m1 * m2) = key(m1) + key(m2).  For weighted degrevlex the key is
(weighted_degree << 8n) - packed, which reproduces "higher weighted degree
wins, ties broken by smaller exponent in the latest generator".
"""

from __future__ import annotations

import re

from .errors import (
    ContextMismatchError,
    DegreeCapExceededError,
    FieldMismatchError,
    LengthMismatchError,
)
from .fields import Field, FieldElement, TABLE_LIMIT

MAX_EXPONENT = 127

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")

WEIGHTED_DEGREVLEX = "weighted-degrevlex"
ELIMINATION_BLOCK = "elimination-block"


def _wdeg(packed, weights):
    total = 0
    for w in weights:
        if not packed:
            break
        total += (packed & 0xFF) * w
        packed >>= 8
    return total


class MonomialOrder:
    """A total, multiplication-compatible order on packed exponent vectors."""

    __slots__ = ("kind", "weights", "block", "n", "_shift", "_block_mask",
                 "_block_weights", "_rest_weights", "_rest_shift", "_combine_shift")

    def __init__(self, weights, kind=WEIGHTED_DEGREVLEX, block=0):
        if kind not in (WEIGHTED_DEGREVLEX, ELIMINATION_BLOCK):
            raise ValueError(f"unknown order kind {kind!r}")
        self.kind = kind
        self.weights = tuple(int(w) for w in weights)
        self.block = int(block)
        self.n = len(self.weights)
        self._shift = 8 * self.n
        if kind == ELIMINATION_BLOCK:
            if not 0 < self.block <= self.n:
                raise ValueError("elimination block must cover at least one generator")
            k = self.block
            self._block_mask = (1 << (8 * k)) - 1
            self._block_weights = self.weights[:k]
            self._rest_weights = self.weights[k:]
            self._rest_shift = 8 * (self.n - k)
            # any single monomial's rest-key fits below this shift
            max_rest = MAX_EXPONENT * sum(self._rest_weights) if self._rest_weights else 0
            self._combine_shift = self._rest_shift + max(max_rest.bit_length(), 1) + 1
        else:
            if block:
                raise ValueError("block size only applies to elimination orders")
            self._block_mask = 0
            self._block_weights = ()
            self._rest_weights = ()
            self._rest_shift = 0
            self._combine_shift = 0

    def key(self, packed):
        """Additive integer key; larger key = larger monomial."""
        if self.kind == WEIGHTED_DEGREVLEX:
            return (_wdeg(packed, self.weights) << self._shift) - packed
        low = packed & self._block_mask
        high = packed >> (8 * self.block)
        block_key = (_wdeg(low, self._block_weights) << (8 * self.block)) - low
        rest_key = (_wdeg(high, self._rest_weights) << self._rest_shift) - high
        return (block_key << self._combine_shift) + rest_key

    def compare(self, p1, p2):
        """-1, 0, or 1 comparing two packed monomials."""
        k1, k2 = self.key(p1), self.key(p2)
        return (k1 > k2) - (k1 < k2)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and self.kind == other.kind
            and self.weights == other.weights
            and self.block == other.block
        )

    def __hash__(self):
        return hash((self.kind, self.weights, self.block))

    def __repr__(self):
        if self.kind == WEIGHTED_DEGREVLEX:
            return f"MonomialOrder({self.kind}, weights={self.weights})"
        return f"MonomialOrder({self.kind}, weights={self.weights}, block={self.block})"

    def describe(self):
        if self.kind == WEIGHTED_DEGREVLEX:
            return WEIGHTED_DEGREVLEX
        return f"{ELIMINATION_BLOCK}({self.block})"


class Ring:
    """Generator names with positive weights, a coefficient field, and an order.

    The shared context for every polynomial; two polynomials interoperate only
    when their rings compare equal.
    """

    __slots__ = ("field", "names", "degrees", "order", "n", "guard", "_index", "_hash")

    def __init__(self, field, names, degrees, order=None, _internal=False):
        if not isinstance(field, Field):
            raise TypeError("field must be a fields.Field")
        if field.q > TABLE_LIMIT:
            raise FieldMismatchError(
                f"polynomial rings need a table-backed field (q <= {TABLE_LIMIT}), got q={field.q}"
            )
        names = tuple(names)
        degrees = tuple(int(d) for d in degrees)
        if len(names) != len(degrees):
            raise LengthMismatchError("one degree per generator name is required")
        if not names:
            raise ValueError("at least one generator is required")
        seen = set()
        for name in names:
            if not _internal and not _NAME_RE.match(name):
                raise ValueError(
                    f"invalid generator name {name!r} (identifiers only; '@', '#' and "
                    f"digit-first names are reserved)"
                )
            if name in seen:
                raise ValueError(f"duplicate generator name {name!r}")
            seen.add(name)
        for name, d in zip(names, degrees):
            if d < 1:
                raise ValueError(f"generator {name!r} must have degree >= 1, got {d}")
        self.field = field
        self.names = names
        self.degrees = degrees
        self.n = len(names)
        self.order = order if order is not None else MonomialOrder(degrees)
        if self.order.weights != degrees:
            raise ValueError("order weights must equal the generator degrees")
        self.guard = sum(0x80 << (8 * j) for j in range(self.n))
        self._index = {name: j for j, name in enumerate(names)}
        self._hash = hash((field, names, degrees, self.order))

    # --- packed monomial helpers ---

    def pack(self, exponents):
        exponents = tuple(exponents)
        if len(exponents) != self.n:
            raise LengthMismatchError(
                f"expected {self.n} exponents, got {len(exponents)}"
            )
        packed = 0
        for j, e in enumerate(exponents):
            if not 0 <= e <= MAX_EXPONENT:
                raise DegreeCapExceededError(
                    e, MAX_EXPONENT,
                    f"exponent {e} of {self.names[j]} outside representable range 0..{MAX_EXPONENT}",
                )
            packed |= e << (8 * j)
        return packed

    def unpack(self, packed):
        return tuple((packed >> (8 * j)) & 0xFF for j in range(self.n))

    def wdeg(self, packed):
        return _wdeg(packed, self.degrees)

    def divides(self, d, m):
        """True iff the packed monomial d divides m componentwise."""
        return ((m | self.guard) - d) & self.guard == self.guard

    def mono_lcm(self, a, b):
        out = 0
        for j in range(self.n):
            shift = 8 * j
            ea = (a >> shift) & 0xFF
            eb = (b >> shift) & 0xFF
            out |= (ea if ea >= eb else eb) << shift
        return out

    def mono_mul(self, a, b):
        out = a + b
        if out & self.guard:
            raise DegreeCapExceededError(
                self.wdeg(a) + self.wdeg(b), MAX_EXPONENT,
                "monomial product exceeds the representable exponent range",
            )
        return out

    def mono_str(self, packed):
        if packed == 0:
            return "1"
        parts = []
        for j in range(self.n):
            e = (packed >> (8 * j)) & 0xFF
            if e == 0:
                continue
            parts.append(self.names[j] if e == 1 else f"{self.names[j]}^{e}")
        return "*".join(parts)

    # --- construction ---

    def monomial(self, exponents):
        if isinstance(exponents, Monomial):
            if exponents.ring != self:
                raise ContextMismatchError("monomial belongs to a different ring")
            return exponents
        return Monomial(self, self.pack(exponents))

    def zero(self):
        return Polynomial(self, ())

    def one(self):
        return Polynomial(self, ((0, 1),))

    def constant(self, value):
        code = self.field.element(value).code
        return Polynomial(self, ((0, code),) if code else ())

    def gen(self, name):
        j = self._index.get(name)
        if j is None:
            raise KeyError(f"no generator named {name!r}")
        return Polynomial(self, ((1 << (8 * j), 1),))

    def gens(self):
        return [self.gen(name) for name in self.names]

    def from_terms(self, terms):
        """Canonicalize an iterable of (packed, code) pairs into a Polynomial."""
        acc = {}
        fadd = self.field.add
        for packed, code in terms:
            if code == 0:
                continue
            prev = acc.get(packed)
            if prev is None:
                acc[packed] = code
            else:
                merged = fadd(prev, code)
                if merged:
                    acc[packed] = merged
                else:
                    del acc[packed]
        key = self.order.key
        ordered = tuple(sorted(acc.items(), key=lambda item: key(item[0]), reverse=True))
        return Polynomial(self, ordered)

    def parse(self, text):
        from .expr import parse_polynomial
        return parse_polynomial(text, self)

    def with_order(self, order):
        """Same generators and field under a different order (repacks nothing)."""
        return Ring(self.field, self.names, self.degrees, order=order, _internal=True)

    # --- identity ---

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, Ring)
            and self.field == other.field
            and self.names == other.names
            and self.degrees == other.degrees
            and self.order == other.order
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        gens = ",".join(f"{n}:{d}" for n, d in zip(self.names, self.degrees))
        return f"Ring({self.field}[{gens}], {self.order.describe()})"


def _check_ring(a, b):
    if a.ring is not b.ring and a.ring != b.ring:
        raise ContextMismatchError(f"mixed contexts: {a.ring!r} vs {b.ring!r}")


class Monomial:
    """A single packed monomial bound to its ring."""

    __slots__ = ("ring", "packed")

    def __init__(self, ring, packed):
        self.ring = ring
        self.packed = packed

    @property
    def exponents(self):
        return self.ring.unpack(self.packed)

    @property
    def degree(self):
        return self.ring.wdeg(self.packed)

    def divides(self, other):
        _check_ring(self, other)
        return self.ring.divides(self.packed, other.packed)

    def __mul__(self, other):
        _check_ring(self, other)
        return Monomial(self.ring, self.ring.mono_mul(self.packed, other.packed))

    def __eq__(self, other):
        return (
            isinstance(other, Monomial)
            and self.packed == other.packed
            and self.ring == other.ring
        )

    def __hash__(self):
        return hash(self.packed)

    def _key(self):
        return self.ring.order.key(self.packed)

    def __lt__(self, other):
        _check_ring(self, other)
        return self._key() < other._key()

    def __le__(self, other):
        _check_ring(self, other)
        return self._key() <= other._key()

    def __gt__(self, other):
        _check_ring(self, other)
        return self._key() > other._key()

    def __ge__(self, other):
        _check_ring(self, other)
        return self._key() >= other._key()

    def __str__(self):
        return self.ring.mono_str(self.packed)

    def __repr__(self):
        return f"Monomial({self})"


class Polynomial:
    """Immutable polynomial in canonical form: terms strictly descending, no zeros.

    The term list stores (packed monomial, coefficient code) pairs; use
    .terms() for the (FieldElement, Monomial) view.
    """

    __slots__ = ("ring", "_terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self._terms = terms if isinstance(terms, tuple) else tuple(terms)

    # --- inspection ---

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def term_count(self):
        return len(self._terms)

    def lm(self):
        """Leading monomial, or None for the zero polynomial."""
        if not self._terms:
            return None
        return Monomial(self.ring, self._terms[0][0])

    def lc(self):
        if not self._terms:
            return None
        return FieldElement(self.ring.field, self._terms[0][1])

    def degree(self):
        """Weighted degree of the leading monomial (None for zero)."""
        if not self._terms:
            return None
        return self.ring.wdeg(self._terms[0][0])

    def is_homogeneous(self):
        if len(self._terms) <= 1:
            return True
        wdeg = self.ring.wdeg
        d = wdeg(self._terms[0][0])
        return all(wdeg(p) == d for p, _ in self._terms[1:])

    def distinct_term_degrees(self):
        """First two distinct weighted term degrees (for diagnostics)."""
        wdeg = self.ring.wdeg
        seen = []
        for p, _ in self._terms:
            d = wdeg(p)
            if d not in seen:
                seen.append(d)
                if len(seen) == 2:
                    break
        return seen

    def terms(self):
        field, ring = self.ring.field, self.ring
        return [(FieldElement(field, c), Monomial(ring, p)) for p, c in self._terms]

    def monomials(self):
        return [Monomial(self.ring, p) for p, _ in self._terms]

    def coefficient(self, monomial):
        packed = monomial.packed if isinstance(monomial, Monomial) else self.ring.pack(monomial)
        for p, c in self._terms:
            if p == packed:
                return FieldElement(self.ring.field, c)
        return self.ring.field.zero()

    # --- arithmetic ---

    def _scalar_code(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.ring.field:
                raise FieldMismatchError("scalar from a different field")
            return other.code
        if isinstance(other, int):
            return other % self.ring.field.p
        return None

    def __add__(self, other):
        if isinstance(other, Polynomial):
            _check_ring(self, other)
            return self.ring.from_terms(self._terms + other._terms)
        code = self._scalar_code(other)
        if code is None:
            return NotImplemented
        return self.ring.from_terms(self._terms + ((0, code),))

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, tuple((p, neg(c)) for p, c in self._terms))

    def __sub__(self, other):
        if isinstance(other, Polynomial):
            _check_ring(self, other)
            return self.ring.from_terms(self._terms + (-other)._terms)
        code = self._scalar_code(other)
        if code is None:
            return NotImplemented
        return self.ring.from_terms(self._terms + ((0, self.ring.field.neg(code)),))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            _check_ring(self, other)
            if not self._terms or not other._terms:
                return self.ring.zero()
            guard = self.ring.guard
            fmul = self.ring.field.mul
            fadd = self.ring.field.add
            acc = {}
            for p1, c1 in self._terms:
                for p2, c2 in other._terms:
                    packed = p1 + p2
                    if packed & guard:
                        raise DegreeCapExceededError(
                            self.ring.wdeg(p1) + self.ring.wdeg(p2), MAX_EXPONENT,
                            "product exceeds the representable exponent range",
                        )
                    code = fmul(c1, c2)
                    prev = acc.get(packed)
                    if prev is None:
                        acc[packed] = code
                    else:
                        merged = fadd(prev, code)
                        if merged:
                            acc[packed] = merged
                        else:
                            del acc[packed]
            key = self.ring.order.key
            ordered = tuple(sorted(acc.items(), key=lambda t: key(t[0]), reverse=True))
            return Polynomial(self.ring, ordered)
        code = self._scalar_code(other)
        if code is None:
            return NotImplemented
        if code == 0:
            return self.ring.zero()
        fmul = self.ring.field.mul
        return Polynomial(self.ring, tuple((p, fmul(c, code)) for p, c in self._terms))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return result

    def monic(self):
        if not self._terms:
            return self
        lc = self._terms[0][1]
        if lc == 1:
            return self
        inv = self.ring.field.inv(lc)
        fmul = self.ring.field.mul
        return Polynomial(self.ring, tuple((p, fmul(c, inv)) for p, c in self._terms))

    # --- identity / rendering ---

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms and self.ring == other.ring

    def __hash__(self):
        return hash(self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        field = self.ring.field
        parts = []
        for p, c in self._terms:
            mono = self.ring.mono_str(p) if p else ""
            if c == 1 and mono:
                parts.append(mono)
                continue
            if field.r == 1 or c < field.p:
                coeff = str(c)
            else:
                coeff = f"({field.format_code(c)})"
            parts.append(f"{coeff}*{mono}" if mono else coeff)
        return " + ".join(parts)

    def __repr__(self):
        return f"<{self} over {self.ring.field}>"
