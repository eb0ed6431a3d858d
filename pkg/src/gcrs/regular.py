"""Regularity testing, regular sequences, witness scans, and degree search.

An element f is regular in R/I iff (I : f) = I; since I is always contained
in the colon, that reduces to every colon generator vanishing modulo I, and
the first generator that survives is an independently checkable witness:
its class is nonzero and the product with f lies in I.

verify_sequence tests f_i against I + <f_1, ..., f_{i-1}> stage by stage;
witness_scan and exhaustive_regular_scan walk whole graded components in
the canonical enumeration order, so results are deterministic.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field as dataclass_field

from .errors import (
    EnumerationTooLargeError,
    NonHomogeneousElementError,
    ZeroElementError,
    ZeroWitnessError,
)
from .graded import DEFAULT_ENUM_CAP, component_enumerate, standard_monomials
from .ideals import colon, ideal_intersect

REGULAR = "regular"
ZERODIVISOR = "zerodivisor"
ZERO_IN_QUOTIENT = "zero_in_quotient"


def _require_testable(quotient, f):
    if not f.is_homogeneous():
        degrees = f.distinct_term_degrees()
        raise NonHomogeneousElementError(
            f"{f} mixes weighted degrees {degrees[0]} and {degrees[1]}"
        )
    if f and f.degree() == 0:
        raise ZeroElementError("degree-0 classes are units or zero, never regular")


def is_regular(quotient, f):
    """(True, None) iff (I : f) = I; otherwise (False, witness).

    The witness g satisfies nf(g) != 0 and g*f in I, rechecked cheaply by
    the caller if desired.  Requires the class of f to be nonzero.
    """
    _require_testable(quotient, f)
    fbar = quotient.nf(f)
    if not fbar:
        raise ZeroElementError(f"{f} is zero in {quotient.label}")
    cln = colon(quotient.defining_ideal(), fbar, degree_cap=quotient.degree_cap)
    for g in cln.gens:
        w = quotient.nf(g)
        if w:
            return False, w
    return True, None


@dataclass
class ElementVerdict:
    element: object
    degree: int
    status: str
    witness: object = None

    def as_dict(self):
        out = {"element": str(self.element), "degree": self.degree, "status": self.status}
        if self.witness is not None:
            out["witness"] = str(self.witness)
        return out


@dataclass
class RegularSequenceReport:
    """Per-element verdicts for a candidate regular sequence."""

    elements: list
    degree_sequence: list
    verdicts: list
    overall: bool
    stage_stats: list = dataclass_field(default_factory=list)

    def to_text(self, include_timing=False):
        lines = []
        verdict = "REGULAR" if self.overall else "NOT REGULAR"
        seq = ",".join(str(d) for d in self.degree_sequence)
        lines.append(f"{verdict}, degree sequence {seq}" if self.degree_sequence
                     else f"{verdict} (empty sequence)")
        for i, v in enumerate(self.verdicts):
            line = f"  [{i + 1}] {v.element}  (degree {v.degree}): {v.status}"
            if v.witness is not None:
                line += f", witness {v.witness}"
            lines.append(line)
        if include_timing:
            for i, st in enumerate(self.stage_stats):
                lines.append(
                    f"  stage {i + 1}: pairs={st['pairs_processed']} "
                    f"zero_reductions={st['reductions_to_zero']} "
                    f"max_degree={st['max_intermediate_degree']} "
                    f"wall={st['wall_seconds']:.3f}s"
                )
        return "\n".join(lines) + "\n"

    def as_dict(self, include_timing=False):
        stats = self.stage_stats
        if not include_timing:
            stats = [{k: v for k, v in st.items() if k != "wall_seconds"} for st in stats]
        return {
            "overall": self.overall,
            "degree_sequence": list(self.degree_sequence),
            "verdicts": [v.as_dict() for v in self.verdicts],
            "stage_stats": stats,
        }

    def to_json(self, include_timing=False):
        return json.dumps(self.as_dict(include_timing=include_timing), indent=2)


def verify_sequence(quotient, elements):
    """Test the elements as a regular sequence, stopping at the first failure."""
    elements = list(elements)
    report = RegularSequenceReport(
        elements=elements,
        degree_sequence=[],
        verdicts=[],
        overall=True,
    )
    current = quotient
    for f in elements:
        _require_testable(quotient, f)
        report.degree_sequence.append(f.degree() if f else 0)
    for f in elements:
        start = time.perf_counter()
        fbar = current.nf(f)
        if not fbar:
            report.verdicts.append(
                ElementVerdict(f, f.degree(), ZERO_IN_QUOTIENT)
            )
            report.overall = False
            break
        ok, witness = is_regular(current, fbar)
        if not ok:
            report.verdicts.append(ElementVerdict(f, f.degree(), ZERODIVISOR, witness))
            report.overall = False
            break
        report.verdicts.append(ElementVerdict(f, f.degree(), REGULAR))
        current = current.mod_out([fbar])
        stats = current.gb.stats.as_dict()
        stats["wall_seconds"] = time.perf_counter() - start
        report.stage_stats.append(stats)
    return report


def annihilators_disjoint(quotient, f, g):
    """True iff Ann(f) cap Ann(g) vanishes in the quotient."""
    ideal = quotient.defining_ideal()
    fbar = quotient.nf(f)
    gbar = quotient.nf(g)
    if not fbar or not gbar:
        raise ZeroElementError("annihilator disjointness needs nonzero classes")
    cap = quotient.degree_cap
    meet = ideal_intersect(colon(ideal, fbar, degree_cap=cap),
                           colon(ideal, gbar, degree_cap=cap), degree_cap=cap)
    return all(quotient.is_zero(h) for h in meet.gens)


@dataclass
class ScanEntry:
    degree: int
    element: object
    status: str              # 'annihilated_by' | 'unresolved' | 'regular' | 'zerodivisor'
    witness_index: int = None

    def as_dict(self):
        out = {"degree": self.degree, "element": str(self.element), "status": self.status}
        if self.witness_index is not None:
            out["witness_index"] = self.witness_index
        return out


@dataclass
class ScanReport:
    """Per-class verdicts over a degree range; every class gets exactly one."""

    degree_low: int
    degree_high: int
    entries: list
    witness_counts: list
    unresolved: list
    total: int

    @property
    def overall(self):
        return not self.unresolved

    def to_text(self):
        lines = [
            f"scanned degrees {self.degree_low}..{self.degree_high}: "
            f"{self.total} classes, {len(self.unresolved)} unresolved"
        ]
        for k, c in enumerate(self.witness_counts):
            lines.append(f"  witness {k + 1} annihilates {c} classes")
        for e in self.unresolved:
            lines.append(f"  unresolved: {e}")
        lines.append("PASS" if self.overall else "FAIL")
        return "\n".join(lines) + "\n"

    def as_dict(self):
        return {
            "degree_low": self.degree_low,
            "degree_high": self.degree_high,
            "total": self.total,
            "witness_counts": list(self.witness_counts),
            "unresolved": [str(e) for e in self.unresolved],
            "entries": [e.as_dict() for e in self.entries],
            "overall": self.overall,
        }

    def to_json(self):
        return json.dumps(self.as_dict(), indent=2)


def witness_scan(quotient, witnesses, degrees, cap=DEFAULT_ENUM_CAP):
    """Record, for every class in the degree range, the first annihilating witness.

    degrees is an inclusive (low, high) pair or any iterable of degrees.
    """
    witnesses = list(witnesses)
    reduced = []
    for k, w in enumerate(witnesses):
        wbar = quotient.nf(w)
        if not wbar:
            raise ZeroWitnessError(k + 1)
        reduced.append(wbar)
    if isinstance(degrees, tuple) and len(degrees) == 2:
        degree_list = list(range(degrees[0], degrees[1] + 1))
    else:
        degree_list = list(degrees)
    entries = []
    counts = [0] * len(reduced)
    unresolved = []
    total = 0
    for d in degree_list:
        for cls in component_enumerate(quotient, d, cap=cap):
            total += 1
            hit = None
            for k, w in enumerate(reduced):
                if quotient.is_zero(w * cls):
                    hit = k
                    break
            if hit is None:
                entries.append(ScanEntry(d, cls, "unresolved"))
                unresolved.append(cls)
            else:
                counts[hit] += 1
                entries.append(ScanEntry(d, cls, "annihilated_by", hit))
    return ScanReport(
        degree_low=min(degree_list) if degree_list else 0,
        degree_high=max(degree_list) if degree_list else 0,
        entries=entries,
        witness_counts=counts,
        unresolved=unresolved,
        total=total,
    )


def exhaustive_regular_scan(quotient, d, cap=DEFAULT_ENUM_CAP):
    """All regular degree-d classes up to scalar; empty certifies none exist."""
    found = []
    for cls in component_enumerate(quotient, d, cap=cap):
        ok, _ = is_regular(quotient, cls)
        if ok:
            found.append(cls)
    return found


@dataclass
class SearchOutcome:
    """Result of a bounded depth-first search for a regular sequence."""

    status: str              # 'found' | 'exhausted' | 'budget_exhausted'
    report: object = None
    candidates_tested: int = 0

    @property
    def found(self):
        return self.status == "found"

    def to_text(self, include_timing=False):
        lines = [f"search status: {self.status} ({self.candidates_tested} candidates tested)"]
        if self.report is not None:
            lines.append(self.report.to_text(include_timing=include_timing).rstrip("\n"))
        elif self.status == "exhausted":
            lines.append("no regular sequence exists within the stated degree bounds "
                         "(search space fully enumerated)")
        return "\n".join(lines) + "\n"

    def as_dict(self, include_timing=False):
        return {
            "status": self.status,
            "candidates_tested": self.candidates_tested,
            "report": None if self.report is None
            else self.report.as_dict(include_timing=include_timing),
        }


def search_regular_sequence(quotient, degree_bounds, seeds=None,
                            cap=DEFAULT_ENUM_CAP, budget=None):
    """Depth-first search for a regular sequence with the given degree sequence.

    At level i the degree-bounds[i] classes are tried in canonical order (or
    the provided seed is used); the first full sequence found is returned.
    'exhausted' certifies the whole (possibly seeded) space was enumerated.
    """
    degree_bounds = list(degree_bounds)
    if not degree_bounds:
        raise ValueError("degree_bounds must be nonempty")
    seeds = list(seeds or [])
    tested = 0
    budget_hit = False

    def candidates(level, current):
        if level < len(seeds):
            seed = current.nf(seeds[level])
            return iter([seed] if seed else [])
        try:
            return component_enumerate(current, degree_bounds[level], cap=cap)
        except EnumerationTooLargeError as exc:
            raise EnumerationTooLargeError(exc.required, exc.cap, level=level) from None

    def dfs(level, current):
        nonlocal tested, budget_hit
        if level == len(degree_bounds):
            return []
        for cls in candidates(level, current):
            if budget is not None and tested >= budget:
                budget_hit = True
                return None
            tested += 1
            ok, _ = is_regular(current, cls)
            if not ok:
                continue
            rest = dfs(level + 1, current.mod_out([cls]))
            if rest is not None:
                return [cls] + rest
            if budget_hit:
                return None
        return None

    sequence = dfs(0, quotient)
    if sequence is not None:
        report = verify_sequence(quotient, sequence)
        return SearchOutcome("found", report=report, candidates_tested=tested)
    if budget_hit:
        return SearchOutcome("budget_exhausted", candidates_tested=tested)
    return SearchOutcome("exhausted", candidates_tested=tested)
