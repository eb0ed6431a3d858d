"""Exact arithmetic in prime fields F_p and small extensions F_{p^r}.

An element of F_{p^r} is a vector of r residues, coordinate i being the
coefficient of w^i where w is a root of the modulus polynomial.  Internally
every element is a single integer code sum(c_i * p^i); small fields
(q <= 256) precompute full operation tables, which is what the polynomial
engine consumes in its inner loops.

The default modulus for an extension is the lexicographically smallest monic
irreducible polynomial of the right degree, coefficients compared from the
constant term upward.  For F_4 that is w^2 + w + 1, the only choice.
"""

from __future__ import annotations

from itertools import product

from .errors import (
    CharacteristicMismatchError,
    DegreeMismatchError,
    FieldMismatchError,
    NotPrimeError,
    ReducibleModulusError,
)

PRIME_CEILING = 97
TABLE_LIMIT = 256


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_rem(a, b, p):
    """Remainder of a by b (b monic after scaling), coefficients mod p."""
    a = _poly_trim(a)
    b = _poly_trim(b)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[i + shift] = (a[i + shift] - coef * bi) % p
        a = _poly_trim(a)
    return a


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _poly_trim([(x - y) % p for x, y in zip(a, b)])


def _poly_divmod(a, b, p):
    a = _poly_trim(a)
    b = _poly_trim(b)
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    rem = list(a)
    while rem and len(rem) >= len(b):
        coef = (rem[-1] * inv_lead) % p
        shift = len(rem) - len(b)
        q[shift] = coef
        for i, bi in enumerate(b):
            rem[i + shift] = (rem[i + shift] - coef * bi) % p
        rem = _poly_trim(rem)
    return _poly_trim(q), rem


def _poly_ext_gcd(a, b, p):
    """Extended Euclid over F_p[x]: returns (g, s, t) with s*a + t*b = g."""
    r0, r1 = _poly_trim(a), _poly_trim(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, rem = _poly_divmod(r0, r1, p)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, p), p)
        t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1, p), p)
    return r0, s0, t0


def _is_irreducible(modulus, p) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(modulus) - 1
    for d in range(1, deg // 2 + 1):
        for tail in product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if not _poly_rem(modulus, divisor, p):
                return False
    return True


def _smallest_irreducible(p, r):
    """Lexicographically smallest monic irreducible of degree r (constant term first)."""
    for tail in product(range(p), repeat=r):
        candidate = list(tail) + [1]
        if _is_irreducible(candidate, p):
            return tuple(candidate)
    raise AssertionError("irreducible polynomial of every degree exists over F_p")


class Field:
    """F_{p^r}: validated characteristic, extension degree, and modulus."""

    __slots__ = ("p", "r", "q", "modulus", "_add", "_mul", "_neg", "_inv")

    def __init__(self, p, r=1, modulus=None):
        if not isinstance(p, int) or not _is_prime(p):
            raise NotPrimeError(f"{p!r} is not prime")
        if p > PRIME_CEILING:
            raise NotPrimeError(f"prime {p} exceeds the supported ceiling {PRIME_CEILING}")
        if not isinstance(r, int) or r < 1:
            raise DegreeMismatchError(f"extension degree must be a positive integer, got {r!r}")
        self.p = p
        self.r = r
        self.q = p ** r
        if r == 1:
            # identity placeholder; elements are plain residues mod p
            self.modulus = (0, 1)
        else:
            if modulus is None:
                self.modulus = _smallest_irreducible(p, r)
            else:
                cs = tuple(int(c) % p for c in modulus)
                if len(cs) != r + 1 or cs[-1] != 1:
                    raise DegreeMismatchError(
                        f"modulus must be monic of degree exactly {r}, got {list(modulus)!r}"
                    )
                if not _is_irreducible(list(cs), p):
                    raise ReducibleModulusError(
                        f"modulus {list(cs)} is reducible over F_{p}"
                    )
                self.modulus = cs
        if self.q <= TABLE_LIMIT:
            self._build_tables()
        else:
            self._add = self._mul = self._neg = self._inv = None

    # --- element codes: code = sum c_i p^i ---

    def _decode(self, code):
        cs = []
        for _ in range(self.r):
            code, c = divmod(code, self.p)
            cs.append(c)
        return cs

    def _encode(self, cs):
        code = 0
        for c in reversed(cs):
            code = code * self.p + (c % self.p)
        return code

    def _build_tables(self):
        p, q, r = self.p, self.q, self.r
        mod = list(self.modulus)
        vecs = [self._decode(c) for c in range(q)]
        add_rows = []
        mul_rows = []
        for a in range(q):
            va = vecs[a]
            add_rows.append(tuple(
                self._encode([(x + y) % p for x, y in zip(va, vecs[b])]) for b in range(q)
            ))
            row = []
            for b in range(q):
                prod_ = _poly_mul(_poly_trim(va), _poly_trim(vecs[b]), p)
                if r > 1 and len(prod_) > r:
                    prod_ = _poly_rem(prod_, mod, p)
                elif r == 1:
                    prod_ = _poly_trim([c % p for c in prod_])
                row.append(self._encode(prod_ + [0] * (r - len(prod_))))
            mul_rows.append(tuple(row))
        self._add = tuple(add_rows)
        self._mul = tuple(mul_rows)
        self._neg = tuple(self._encode([(-c) % p for c in vecs[a]]) for a in range(q))
        inv = [0] * q
        for a in range(1, q):
            inv[a] = self._inv_code(a)
        self._inv = tuple(inv)

    # --- code-level arithmetic (used directly by the polynomial engine) ---

    def add(self, a, b):
        if self._add is not None:
            return self._add[a][b]
        p = self.p
        return self._encode([(x + y) % p for x, y in zip(self._decode(a), self._decode(b))])

    def mul(self, a, b):
        if self._mul is not None:
            return self._mul[a][b]
        prod_ = _poly_mul(_poly_trim(self._decode(a)), _poly_trim(self._decode(b)), self.p)
        if len(prod_) > self.r:
            prod_ = _poly_rem(prod_, list(self.modulus), self.p)
        return self._encode(prod_ + [0] * (self.r - len(prod_)))

    def neg(self, a):
        if self._neg is not None:
            return self._neg[a]
        return self._encode([(-c) % self.p for c in self._decode(a)])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        if self._inv is not None:
            return self._inv[a]
        return self._inv_code(a)

    def _inv_code(self, a):
        """Inverse by extended Euclid on the coefficient polynomial and the modulus."""
        p = self.p
        if self.r == 1:
            return pow(a, p - 2, p)
        va = _poly_trim(self._decode(a))
        g, s, _ = _poly_ext_gcd(va, list(self.modulus), p)
        # g is a nonzero constant since the modulus is irreducible
        scale = pow(g[0], p - 2, p)
        s = [(c * scale) % p for c in s]
        s = _poly_rem(s, list(self.modulus), p) if len(s) > self.r else s
        return self._encode(s + [0] * (self.r - len(s)))

    def pow(self, a, k):
        result = 1
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    # --- public element API ---

    def element(self, value):
        """Build an element from an int (prime residue) or a coefficient sequence."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"{value!r} does not belong to {self}")
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        cs = list(value)
        if len(cs) > self.r:
            raise DegreeMismatchError(
                f"coefficient vector of length {len(cs)} for extension degree {self.r}"
            )
        cs += [0] * (self.r - len(cs))
        return FieldElement(self, self._encode(cs))

    def from_code(self, code):
        if not 0 <= code < self.q:
            raise DegreeMismatchError(f"code {code} out of range for {self}")
        return FieldElement(self, code)

    def zero(self):
        return FieldElement(self, 0)

    def one(self):
        return FieldElement(self, 1)

    def elements(self):
        for code in range(self.q):
            yield FieldElement(self, code)

    def embed(self, a: "FieldElement") -> "FieldElement":
        """Inject an F_p element into this extension of F_p (constant embedding)."""
        if not isinstance(a, FieldElement) or a.field.r != 1 or a.field.p != self.p:
            raise CharacteristicMismatchError(
                f"can only embed elements of the prime field F_{self.p} into {self}"
            )
        return FieldElement(self, a.code)

    def prime_field(self):
        return self if self.r == 1 else Field(self.p)

    # --- structural identity ---

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.r == other.r
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.r, self.modulus))

    def __repr__(self):
        if self.r == 1:
            return f"F_{self.p}"
        return f"F_{self.q}"

    def format_code(self, code):
        """Render an element code as the literal syntax used everywhere (@ = w)."""
        if code == 0:
            return "0"
        cs = self._decode(code)
        parts = []
        for i in range(self.r - 1, -1, -1):
            c = cs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                at = "@" if i == 1 else f"@^{i}"
                parts.append(at if c == 1 else f"{c}*{at}")
        return "+".join(parts)


class FieldElement:
    """An element of a Field; immutable, with the usual operators."""

    __slots__ = ("field", "code")

    def __init__(self, field, code):
        self.field = field
        self.code = code

    @property
    def coeffs(self):
        return tuple(self.field._decode(self.code))

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(f"{self!r} and {other!r} live in different fields")
            return other.code
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.code, c))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __sub__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.code, self.field.neg(c)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.code, c))

    __rmul__ = __mul__

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.code))

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.code, self.field.inv(c)))

    def __pow__(self, k):
        if k < 0:
            return FieldElement(self.field, self.field.pow(self.field.inv(self.code), -k))
        return FieldElement(self.field, self.field.pow(self.code, k))

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == other % self.field.p and (
                self.field.r == 1 or self.code < self.field.p
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.code))

    def __str__(self):
        return self.field.format_code(self.code)

    def __repr__(self):
        return f"{self} in {self.field}"
