"""Parse, validate, serialize, and base-change finitely presented graded algebras.

The `.gcr` text format is line oriented; `#` starts a comment:

    field 2              # or: field 2^2   (modulus defaults), or: field 2^2 mod 1+@+@^2
    gen z 1
    gen q 8
    rel z*y
    rel z*v + x*w
    meta small_group_index 139

Every relation must be homogeneous of weighted degree >= 2 and is stored in
canonical form.  Metadata is carried along but never trusted by any
computation; known numeric keys are coerced to int.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field as dataclass_field
from importlib import resources

from .errors import (
    AlreadyExtendedError,
    DuplicateGeneratorError,
    NonHomogeneousRelationError,
    ParseError,
    PresentationError,
)
from .expr import parse_at_coefficients, parse_polynomial
from .fields import Field
from .ring import Ring

_INT_META_KEYS = {"small_group_index", "hall_senior", "duflot_bound", "claimed_depth"}
_GEN_RE = re.compile(r"^(\S+)\s+(\d+)\s*$")
_FIELD_RE = re.compile(r"^(\d+)(?:\s*\^\s*(\d+))?\s*(?:\bmod\b\s*(.+))?$")


@dataclass(frozen=True)
class Presentation:
    """A finitely presented graded algebra: field, graded generators, relations."""

    ring: Ring
    relations: tuple
    meta: dict = dataclass_field(default_factory=dict)

    @property
    def field(self):
        return self.ring.field

    @property
    def names(self):
        return self.ring.names

    @property
    def degrees(self):
        return self.ring.degrees

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.relations == other.relations
            and self.meta == other.meta
        )

    def __hash__(self):
        return hash((self.ring, self.relations))

    def __repr__(self):
        return (
            f"Presentation({self.field}, {len(self.names)} generators, "
            f"{len(self.relations)} relations)"
        )


def _split_comment(line):
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


def parse_presentation(text):
    """Parse `.gcr` text into a validated Presentation."""
    field_spec = None      # (line_no, Field)
    gens = []              # (line_no, name, degree)
    rels = []              # (line_no, col, text)
    meta = {}
    seen_names = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = _split_comment(raw).rstrip()
        if not line.strip():
            continue
        stripped = line.lstrip()
        indent = len(line) - len(stripped)
        word, _, payload = stripped.partition(" ")
        payload_col = indent + len(word) + 2
        payload = payload.strip()
        if word == "field":
            if field_spec is not None:
                raise PresentationError("duplicate field line", line_no)
            m = _FIELD_RE.match(payload)
            if m is None:
                raise ParseError("malformed field line (want 'p', 'p^r', or 'p^r mod ...')",
                                 line_no, payload_col)
            p = int(m.group(1))
            r = int(m.group(2)) if m.group(2) else 1
            modulus = None
            if m.group(3):
                coeffs = parse_at_coefficients(m.group(3), p, line=line_no, col=payload_col)
                modulus = coeffs
            field_spec = (line_no, Field(p, r, modulus))
        elif word == "gen":
            m = _GEN_RE.match(payload)
            if m is None:
                raise ParseError("malformed gen line (want 'gen NAME DEGREE')",
                                 line_no, payload_col)
            name, degree = m.group(1), int(m.group(2))
            if name in seen_names:
                raise DuplicateGeneratorError(
                    f"generator {name!r} already declared on line {seen_names[name]}",
                    line_no, payload_col,
                )
            if degree < 1:
                raise PresentationError(f"generator {name!r} must have degree >= 1", line_no)
            seen_names[name] = line_no
            gens.append((line_no, name, degree))
        elif word == "rel":
            if not payload:
                raise ParseError("empty relation", line_no, payload_col)
            rels.append((line_no, payload_col, payload))
        elif word == "meta":
            key, _, value = payload.partition(" ")
            if not key:
                raise ParseError("malformed meta line (want 'meta KEY VALUE')",
                                 line_no, payload_col)
            value = value.strip()
            if key in _INT_META_KEYS:
                try:
                    meta[key] = int(value)
                except ValueError:
                    raise ParseError(f"meta {key!r} needs an integer value",
                                     line_no, payload_col) from None
            else:
                meta[key] = int(value) if value.isdigit() else value
        else:
            raise ParseError(f"unknown directive {word!r}", line_no, indent + 1)

    if field_spec is None:
        raise PresentationError("missing field line")
    if not gens:
        raise PresentationError("no generators declared")
    _, fld = field_spec
    try:
        ring = Ring(fld, tuple(name for _, name, _ in gens),
                    tuple(d for _, _, d in gens))
    except ValueError as exc:
        raise PresentationError(str(exc)) from None

    relations = []
    for line_no, col, payload in rels:
        poly = parse_polynomial(payload, ring, line=line_no, col=col)
        if not poly:
            raise PresentationError(f"relation {payload!r} is zero", line_no)
        if not poly.is_homogeneous():
            degrees = poly.distinct_term_degrees()
            raise NonHomogeneousRelationError(payload, degrees[0], degrees[1], line=line_no)
        if poly.degree() < 2:
            raise PresentationError(
                f"relation {payload!r} has weighted degree {poly.degree()}; "
                f"a connected graded algebra needs relations of degree >= 2",
                line_no,
            )
        relations.append(poly)
    return Presentation(ring, tuple(relations), meta)


def serialize_presentation(pres):
    """Canonical `.gcr` text; parse(serialize(p)) structurally equals p."""
    fld = pres.field
    lines = []
    if fld.r == 1:
        lines.append(f"field {fld.p}")
    else:
        modulus = "+".join(
            _modulus_term(c, i) for i, c in enumerate(fld.modulus) if c
        )
        lines.append(f"field {fld.p}^{fld.r} mod {modulus}")
    for name, degree in zip(pres.names, pres.degrees):
        lines.append(f"gen {name} {degree}")
    for rel in pres.relations:
        lines.append(f"rel {rel}")
    for key, value in pres.meta.items():
        lines.append(f"meta {key} {value}")
    return "\n".join(lines) + "\n"


def _modulus_term(c, i):
    if i == 0:
        return str(c)
    at = "@" if i == 1 else f"@^{i}"
    return at if c == 1 else f"{c}*{at}"


def base_change(pres, r, modulus=None):
    """Extend scalars from F_p to F_{p^r}: same generators and relations."""
    if pres.field.r != 1:
        raise AlreadyExtendedError(
            f"presentation is already over {pres.field}; base change starts from a prime field"
        )
    if r < 2:
        raise ValueError("base change needs an extension degree r >= 2")
    new_field = Field(pres.field.p, r, modulus)
    new_ring = Ring(new_field, pres.names, pres.degrees)
    # prime-subfield codes embed unchanged, so the packed terms carry over
    relations = tuple(new_ring.from_terms(f._terms) for f in pres.relations)
    meta = dict(pres.meta)
    meta["base_change"] = f"from F_{pres.field.p}"
    return Presentation(new_ring, relations, meta)


def permute_generators(pres, names):
    """Same presentation with the generator order (hence the order) permuted."""
    names = tuple(names)
    if sorted(names) != sorted(pres.names):
        raise ValueError(
            f"{names!r} is not a permutation of the generators {pres.names!r}"
        )
    new_ring = Ring(pres.field, names,
                    tuple(pres.degrees[pres.ring._index[n]] for n in names))
    mapping = [names.index(n) for n in pres.names]  # old index -> new index

    def remap(packed):
        out = 0
        for old_j, new_j in enumerate(mapping):
            out |= ((packed >> (8 * old_j)) & 0xFF) << (8 * new_j)
        return out

    relations = tuple(
        new_ring.from_terms(((remap(e), c) for e, c in f._terms)) for f in pres.relations
    )
    return Presentation(new_ring, relations, dict(pres.meta))


def fixture_path(name):
    """Filesystem path of a packaged fixture such as 'hs260.gcr'."""
    return resources.files("gcrs.data").joinpath(name)


def load_fixture(name="hs260"):
    """Load a packaged presentation fixture by stem name."""
    text = fixture_path(f"{name}.gcr").read_text(encoding="utf-8")
    return parse_presentation(text)


def fixture_sha256(name="hs260"):
    data = fixture_path(f"{name}.gcr").read_bytes()
    return hashlib.sha256(data).hexdigest()
