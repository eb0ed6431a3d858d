"""Data-driven claim manifests for the `counterexample` subcommand.

A manifest is JSON: {"format_version": 1, "claims": [...]} where each claim
has a "name", a "kind", and kind-specific parameters.  Claims run against a
presentation; each yields PASS or FAIL plus a one-line detail.  Supported
kinds:

    regular_sequence      sequence, expect_degree_sequence?, mod_out?, extension?
    annihilator_equals    element, generators, mod_out?
    nonzero_class         element
    product_vanishes      element, times
    witness_scan          witnesses, degree_low, degree_high
    disjoint_annihilators first, second, mod_out?
    no_regular_classes    degree, mod_out?
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import AlgebraError
from .graded import DEFAULT_ENUM_CAP
from .ideals import Ideal, QuotientRing, colon, ideal_equal, ideal_sum
from .presentations import base_change
from .regular import (
    annihilators_disjoint,
    exhaustive_regular_scan,
    verify_sequence,
    witness_scan,
)

KINDS = (
    "regular_sequence",
    "annihilator_equals",
    "nonzero_class",
    "product_vanishes",
    "witness_scan",
    "disjoint_annihilators",
    "no_regular_classes",
)


@dataclass
class ClaimResult:
    name: str
    passed: bool
    detail: str

    def line(self):
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


def load_manifest(text):
    data = json.loads(text)
    if not isinstance(data, dict) or "claims" not in data:
        raise AlgebraError("claim manifest must be a JSON object with a 'claims' list")
    version = data.get("format_version")
    if version != 1:
        raise AlgebraError(f"unsupported claim manifest format_version {version!r}")
    claims = data["claims"]
    for c in claims:
        if c.get("kind") not in KINDS:
            raise AlgebraError(f"unknown claim kind {c.get('kind')!r} in {c.get('name')!r}")
        if "name" not in c:
            raise AlgebraError("every claim needs a name")
    return claims


class _Context:
    """Caches base-changed presentations and quotient handles across claims."""

    def __init__(self, pres, enum_cap=DEFAULT_ENUM_CAP):
        self.base = pres
        self.enum_cap = enum_cap
        self._pres = {1: pres}
        self._quotients = {}

    def presentation(self, extension):
        if extension not in self._pres:
            self._pres[extension] = base_change(self.base, extension)
        return self._pres[extension]

    def quotient(self, extension=1, mod_out=None):
        key = (extension, mod_out)
        if key not in self._quotients:
            pres = self.presentation(extension)
            base_key = (extension, None)
            if base_key not in self._quotients:
                self._quotients[base_key] = QuotientRing.from_presentation(pres)
            quotient = self._quotients[base_key]
            if mod_out:
                quotient = quotient.mod_out([pres.ring.parse(mod_out)])
            self._quotients[key] = quotient
        return self._quotients[key]


def _run_one(claim, ctx):
    kind = claim["kind"]
    extension = int(claim.get("extension", 1))
    mod_out = claim.get("mod_out")
    quotient = ctx.quotient(extension, mod_out)
    ring = quotient.ring

    if kind == "regular_sequence":
        elements = [ring.parse(e) for e in claim["sequence"]]
        report = verify_sequence(quotient, elements)
        expect = claim.get("expect_degree_sequence")
        degrees_ok = expect is None or list(report.degree_sequence) == list(expect)
        seq = ",".join(str(d) for d in report.degree_sequence)
        if report.overall and degrees_ok:
            return True, f"regular sequence with degree sequence {seq}"
        if report.overall:
            return False, f"sequence regular but degree sequence {seq} != expected"
        v = report.verdicts[-1]
        extra = f", witness {v.witness}" if v.witness is not None else ""
        return False, f"element {v.element} is {v.status}{extra}"

    if kind == "annihilator_equals":
        element = ring.parse(claim["element"])
        listed = [ring.parse(g) for g in claim["generators"]]
        ideal = quotient.defining_ideal()
        left = colon(ideal, quotient.nf(element))
        right = ideal_sum(ideal, Ideal(ring, listed))
        ok = ideal_equal(left, right)
        return ok, (
            f"(I : {claim['element']}) equals I + <{', '.join(claim['generators'])}>"
            if ok else f"(I : {claim['element']}) differs from the listed generators"
        )

    if kind == "nonzero_class":
        element = ring.parse(claim["element"])
        ok = not quotient.is_zero(element)
        return ok, f"{claim['element']} is {'nonzero' if ok else 'ZERO'} in {quotient.label}"

    if kind == "product_vanishes":
        element = ring.parse(claim["element"])
        times = ring.parse(claim["times"])
        ok = quotient.is_zero(element * times)
        return ok, (
            f"{claim['element']} annihilates {claim['times']}"
            if ok else f"({claim['element']})*({claim['times']}) is nonzero"
        )

    if kind == "witness_scan":
        witnesses = [ring.parse(w) for w in claim["witnesses"]]
        report = witness_scan(
            quotient, witnesses,
            (int(claim["degree_low"]), int(claim["degree_high"])),
            cap=ctx.enum_cap,
        )
        ok = report.overall
        return ok, (
            f"{report.total} classes in degrees "
            f"{report.degree_low}..{report.degree_high}, "
            f"{len(report.unresolved)} unresolved"
        )

    if kind == "disjoint_annihilators":
        first = ring.parse(claim["first"])
        second = ring.parse(claim["second"])
        ok = annihilators_disjoint(quotient, first, second)
        return ok, (
            f"Ann({claim['first']}) cap Ann({claim['second']}) = 0 in {quotient.label}"
            if ok else "annihilators share a nonzero class"
        )

    if kind == "no_regular_classes":
        degree = int(claim["degree"])
        found = exhaustive_regular_scan(quotient, degree, cap=ctx.enum_cap)
        from .graded import component_size
        n = component_size(quotient, degree)
        ok = not found
        return ok, (
            f"all {n} degree-{degree} classes of {quotient.label} are zerodivisors"
            if ok else f"regular classes exist: {', '.join(str(f) for f in found[:3])}"
        )

    raise AlgebraError(f"unhandled claim kind {kind!r}")


def run_claims(pres, claims, enum_cap=DEFAULT_ENUM_CAP):
    """Execute claims in order; yields a ClaimResult per claim."""
    ctx = _Context(pres, enum_cap=enum_cap)
    for claim in claims:
        passed, detail = _run_one(claim, ctx)
        yield ClaimResult(claim["name"], passed, detail)
