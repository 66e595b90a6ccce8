"""Corpus enumeration, theorem verification, scanning, and reports.

The harness enumerates every small clutter within given bounds in a fixed
deterministic order, evaluates the full property battery on each (covering
numbers, packing property, idealness, bounded max-flow min-cut, exact and
bounded normality, bounded torsion-freeness, Cohen-Macaulayness), and
asserts the implications that are theorems: a single violation is raised as
an error because it can only mean an implementation bug.

`scan_conforti_cornuejols` filters the corpus to packing-property instances
and looks for any that fail a bounded max-flow min-cut or torsion-freeness
check; such instances are CANDIDATE counterexamples to the packing-implies-
MFMC conjecture.  A bounded MFMC failure carries an exact weight witness
(an integer covering/packing gap at a concrete w), so a surviving candidate
would be a genuine refutation, not a bound artifact; candidates are
re-verified at raised bounds plus the exact Hilbert-basis normality check
before being reported.

Reports serialize deterministically (JSON schema version 1, CSV, or text);
the comparison hash excludes the timing fields.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Iterator

from . import cm as cm_mod
from . import covering, polyhedra, rees
from .core import (
    Clutter,
    ClutterError,
    InstanceTooLargeError,
    adjoin_whisker_edge,
    graft,
    is_uniform,
    make_clutter,
    minor,
    parallelization,
    serialize_clutter,
)

ALL_PROPERTIES = ("konig", "packing", "ideal", "mfmc", "normal", "ntf", "cm")


@dataclass(frozen=True, slots=True)
class CorpusSpec:
    """Deterministic enumeration bounds for small-clutter corpora.

    With ``uniform_size`` set, the corpus is every nonempty subset of the
    size-d subsets of {x1..xn} (stranded vertices dropped), streamed in
    increasing bitmask order over the lexicographic list of possible edges.
    Without it, the corpus is every nonempty antichain of nonempty subsets,
    streamed in depth-first order over the (size, lex)-sorted subset list.
    Isomorph rejection keeps the first representative of each relabeling
    class (exact minimization over vertex permutations).
    """

    max_vertices: int
    uniform_size: int | None = None
    max_edges: int | None = None
    isomorph_reject: bool = False

    def __post_init__(self):
        if self.max_vertices < 1:
            raise ValueError("max_vertices must be positive")
        if self.uniform_size is not None and not (
            1 <= self.uniform_size <= self.max_vertices
        ):
            raise ValueError("uniform_size must be between 1 and max_vertices")
        if self.max_edges is not None and self.max_edges < 1:
            raise ValueError("max_edges must be positive")


def isomorphism_key(c: Clutter):
    """Canonical key: edge list minimized over all vertex relabelings."""
    indices = range(c.n)
    best = None
    for perm in permutations(indices):
        relabeled = tuple(
            sorted(tuple(sorted(perm[v] for v in e)) for e in c.edges)
        )
        if best is None or relabeled < best:
            best = relabeled
    return (c.n, c.q, best)


def enumerate_clutters(spec: CorpusSpec) -> Iterator[Clutter]:
    """Stream the corpus in canonical deterministic order."""
    n = spec.max_vertices
    labels = tuple(f"x{i}" for i in range(1, n + 1))
    seen: set = set()

    def emit(edge_indices) -> Clutter | None:
        c = make_clutter(labels, [[labels[v] for v in e] for e in edge_indices])
        if spec.isomorph_reject:
            key = isomorphism_key(c)
            if key in seen:
                return None
            seen.add(key)
        return c

    if spec.uniform_size is not None:
        if n > 6:
            raise InstanceTooLargeError(
                "exhaustive uniform enumeration is limited to 6 vertices"
            )
        pool = list(combinations(range(n), spec.uniform_size))
        limit = spec.max_edges if spec.max_edges is not None else len(pool)
        for mask in range(1, 1 << len(pool)):
            if mask.bit_count() > limit:
                continue
            c = emit([pool[i] for i in range(len(pool)) if mask >> i & 1])
            if c is not None:
                yield c
        return

    if n > 5:
        raise InstanceTooLargeError(
            "exhaustive antichain enumeration is limited to 5 vertices"
        )
    pool = sorted(
        (
            tuple(s)
            for k in range(1, n + 1)
            for s in combinations(range(n), k)
        ),
        key=lambda t: (len(t), t),
    )
    pool_sets = [frozenset(s) for s in pool]
    limit = spec.max_edges if spec.max_edges is not None else len(pool)
    chosen: list[int] = []

    def walk(start: int) -> Iterator[Clutter]:
        for i in range(start, len(pool)):
            s = pool_sets[i]
            if any(s <= pool_sets[j] or pool_sets[j] <= s for j in chosen):
                continue
            chosen.append(i)
            c = emit([pool[j] for j in chosen])
            if c is not None:
                yield c
            if len(chosen) < limit:
                yield from walk(i + 1)
            chosen.pop()

    yield from walk(0)


@dataclass(frozen=True, slots=True)
class VerifyBounds:
    """Bounds for every bounded check run by the harness.

    max_weight: weight box {0..W}^n for mfmc_bounded on corpus instances.
    max_power: power bound k for bounded normality / torsion-freeness.
    parallel_weight: parallelization sweeps use w in {0..this}^n.
    whisker_lengths: whisker edge lengths tested at every vertex.
    graft_weight: weight box for the graft-preservation MFMC check.
    """

    max_weight: int = 2
    max_power: int = 2
    parallel_weight: int = 2
    whisker_lengths: tuple[int, ...] = (1, 2)
    graft_weight: int = 1
    include_graft: bool = True
    include_parallelization: bool = True
    include_whiskers: bool = True
    hilbert_max_vertices: int = 8
    hilbert_max_edges: int = 24
    cm_max_vertices: int = 16
    packing_max_vertices: int = 15
    ideal_max_vertices: int = 12


@dataclass(frozen=True, slots=True)
class PropertyVerdict:
    """One property outcome; bounded checks carry their bound, negatives a witness."""

    name: str
    value: bool
    bound: int | None = None
    witness: object = None


@dataclass(frozen=True, slots=True)
class PropertyReport:
    clutter: str
    vertex_count: int
    edge_count: int
    verdicts: tuple[PropertyVerdict, ...]
    timings: tuple[tuple[str, float], ...] = ()

    def verdict(self, name: str) -> PropertyVerdict:
        for v in self.verdicts:
            if v.name == name:
                return v
        raise KeyError(name)


def _evaluate_property(name: str, c: Clutter, bounds: VerifyBounds, fld: str):
    if name == "konig":
        return PropertyVerdict(
            name="konig",
            value=covering.has_konig(c),
            witness={
                "alpha0": covering.covering_number(c),
                "beta1": covering.matching_number(c),
            },
        )
    if name == "packing":
        verdict = covering.has_packing_property(
            c, max_vertices=bounds.packing_max_vertices
        )
        witness = None
        if not verdict.holds:
            w = verdict.witness
            witness = {
                "deleted": list(w.deleted),
                "contracted": list(w.contracted),
                "alpha0": w.alpha0,
                "beta1": w.beta1,
            }
        return PropertyVerdict(name="packing", value=verdict.holds, witness=witness)
    if name == "ideal":
        verdict = polyhedra.is_ideal_clutter(
            c, max_vertices=bounds.ideal_max_vertices
        )
        witness = None
        if not verdict.ideal:
            witness = {"vertex": [str(x) for x in verdict.fractional_witness]}
        return PropertyVerdict(name="ideal", value=verdict.ideal, witness=witness)
    if name == "mfmc":
        verdict = polyhedra.mfmc_bounded(c, max_weight=bounds.max_weight)
        witness = None
        if not verdict.certified:
            witness = {
                "w": list(verdict.witness_weights),
                "cover": verdict.cover_value,
                "packing": verdict.packing_value,
            }
        return PropertyVerdict(
            name="mfmc", value=verdict.certified, bound=bounds.max_weight,
            witness=witness,
        )
    if name == "normal":
        verdict = rees.is_normal(
            c,
            max_vertices=bounds.hilbert_max_vertices,
            max_edges=bounds.hilbert_max_edges,
        )
        witness = None
        if not verdict.normal:
            a, b = verdict.witness
            witness = {
                "a": list(a),
                "b": b,
                "monomial": rees.monomial_string(c, a, b),
            }
        return PropertyVerdict(name="normal", value=verdict.normal, witness=witness)
    if name == "ntf":
        verdict = rees.is_ntf_bounded(c, bounds.max_power)
        witness = None
        if not verdict.certified:
            a, i = verdict.witness
            witness = {
                "a": list(a),
                "i": i,
                "monomial": rees.monomial_string(c, a),
            }
        return PropertyVerdict(
            name="ntf", value=verdict.certified, bound=bounds.max_power,
            witness=witness,
        )
    if name == "cm":
        verdict = cm_mod.is_cohen_macaulay(
            c, field=fld, max_vertices=bounds.cm_max_vertices
        )
        witness = None
        if not verdict.cohen_macaulay:
            if verdict.unmixed_witness is not None:
                first, second = verdict.unmixed_witness
                witness = {"kind": "unmixed", "covers": [list(first), list(second)]}
            else:
                face, dim, betti = verdict.link_witness
                witness = {
                    "kind": "link",
                    "face": list(face),
                    "dim": dim,
                    "betti": betti,
                }
        return PropertyVerdict(name="cm", value=verdict.cohen_macaulay, witness=witness)
    raise ValueError(f"unknown property: {name!r}")


def check_properties(
    c: Clutter,
    bounds: VerifyBounds | None = None,
    props=None,
    field: str = "Q",
) -> PropertyReport:
    """Evaluate the requested properties (default: all) on one clutter."""
    bounds = bounds or VerifyBounds()
    if props is None:
        names = ALL_PROPERTIES
    else:
        names = tuple(props)
        unknown = [p for p in names if p not in ALL_PROPERTIES]
        if unknown:
            raise ValueError(f"unknown properties: {', '.join(unknown)}")
    verdicts = []
    timings = []
    for name in names:
        start = time.perf_counter()
        verdicts.append(_evaluate_property(name, c, bounds, field))
        timings.append((name, time.perf_counter() - start))
    return PropertyReport(
        clutter=serialize_clutter(c),
        vertex_count=c.n,
        edge_count=c.q,
        verdicts=tuple(verdicts),
        timings=tuple(timings),
    )


class TheoremViolationError(ClutterError):
    """An implication that is a theorem failed: an implementation bug.

    Carries the implication name, the canonical text of the instance, and a
    witness bundle describing the failing derived object.
    """

    def __init__(self, implication: str, clutter_text: str, details: dict):
        self.implication = implication
        self.clutter_text = clutter_text
        self.details = details
        super().__init__(
            f"theorem implication {implication!r} failed on:\n{clutter_text}"
            f"details: {json.dumps(details, sort_keys=True)}"
        )


_IMPLICATIONS = (
    "packing-implies-ideal",
    "mfmc-implies-konig",
    "mfmc-implies-packing",
    "power-coherence",
    "mfmc-parall-konig",
    "parall-normal",
    "ntf-parallelization",
    "whisker-konig",
    "whisker-packing",
    "whisker-normal",
    "graft-cm",
    "graft-pp",
    "graft-mfmc",
)


@dataclass(slots=True)
class VerificationSummary:
    reports: list[PropertyReport] = field(default_factory=list)
    checked: dict = field(default_factory=dict)
    skipped: dict = field(default_factory=dict)

    def lines(self) -> list[str]:
        out = []
        for name in _IMPLICATIONS:
            n = self.checked.get(name, 0)
            s = self.skipped.get(name, 0)
            suffix = f" (skipped {s})" if s else ""
            out.append(f"{name}: {n} checked, 0 violations{suffix}")
        return out


def verify_theorems(
    spec: CorpusSpec, bounds: VerifyBounds | None = None
) -> VerificationSummary:
    """Run the full implication suite over the corpus.

    Every implication below is a theorem (within the checked bounds), so a
    single failure raises TheoremViolationError: the suite doubles as the
    deepest integration test of the modules against one another.
    """
    bounds = bounds or VerifyBounds()
    summary = VerificationSummary()

    def check(name: str, condition: bool, c: Clutter, details: dict):
        summary.checked[name] = summary.checked.get(name, 0) + 1
        if not condition:
            raise TheoremViolationError(name, serialize_clutter(c), details)

    def skip(name: str):
        summary.skipped[name] = summary.skipped.get(name, 0) + 1

    for c in enumerate_clutters(spec):
        report = check_properties(c, bounds)
        summary.reports.append(report)
        konig = report.verdict("konig").value
        pp = report.verdict("packing").value
        ideal = report.verdict("ideal").value
        mfmc = report.verdict("mfmc").value
        normal = report.verdict("normal").value
        ntf = report.verdict("ntf").value

        # packing implies an integral covering polyhedron (Lehman)
        check("packing-implies-ideal", (not pp) or ideal, c, {"pp": pp, "ideal": ideal})
        # bounded max-flow min-cut implies Konig (the w = all-ones box entry)
        # and the packing property
        check("mfmc-implies-konig", (not mfmc) or konig, c, {"mfmc": mfmc})
        check("mfmc-implies-packing", (not mfmc) or pp, c, {"mfmc": mfmc})
        # torsion-freeness up to k is equivalent to bounded normality plus
        # integrality, instance by instance on this corpus
        normal_bounded = rees.is_normal_bounded(c, bounds.max_power)
        check(
            "power-coherence",
            ntf == (normal_bounded.certified and ideal),
            c,
            {
                "ntf": ntf,
                "normal_bounded": normal_bounded.certified,
                "ideal": ideal,
            },
        )

        if bounds.include_parallelization:
            for w in product(range(bounds.parallel_weight + 1), repeat=c.n):
                cp = parallelization(c, w)
                if mfmc:
                    check(
                        "mfmc-parall-konig",
                        covering.has_konig(cp),
                        c,
                        {"w": list(w)},
                    )
                if normal:
                    if cp.n > bounds.hilbert_max_vertices:
                        skip("parall-normal")
                    else:
                        check(
                            "parall-normal",
                            rees.is_normal(
                                cp,
                                max_vertices=bounds.hilbert_max_vertices,
                                max_edges=max(bounds.hilbert_max_edges, cp.q),
                            ).normal,
                            c,
                            {"w": list(w)},
                        )
                if ntf:
                    check(
                        "ntf-parallelization",
                        rees.is_ntf_bounded(cp, bounds.max_power).certified,
                        c,
                        {"w": list(w)},
                    )

        if bounds.include_whiskers:
            for v in c.vertices:
                deletion_konig = covering.has_konig(minor(c, deleted=(v,)))
                for length in bounds.whisker_lengths:
                    cw = adjoin_whisker_edge(c, v, length)
                    if konig and deletion_konig:
                        check(
                            "whisker-konig",
                            covering.has_konig(cw),
                            c,
                            {"vertex": v, "length": length},
                        )
                    if pp:
                        check(
                            "whisker-packing",
                            covering.has_packing_property(
                                cw, max_vertices=bounds.packing_max_vertices
                            ).holds,
                            c,
                            {"vertex": v, "length": length},
                        )
                    if normal:
                        if cw.n > bounds.hilbert_max_vertices:
                            skip("whisker-normal")
                        else:
                            check(
                                "whisker-normal",
                                rees.is_normal(
                                    cw,
                                    max_vertices=bounds.hilbert_max_vertices,
                                    max_edges=max(bounds.hilbert_max_edges, cw.q),
                                ).normal,
                                c,
                                {"vertex": v, "length": length},
                            )

        if bounds.include_graft:
            d = is_uniform(c)
            if d is not None and c.n * d <= bounds.cm_max_vertices:
                gc = graft(c)
                check(
                    "graft-cm",
                    cm_mod.is_cohen_macaulay(
                        gc, field="Q", max_vertices=bounds.cm_max_vertices
                    ).cohen_macaulay,
                    c,
                    {"graft": serialize_clutter(gc)},
                )
                if pp:
                    check(
                        "graft-pp",
                        covering.has_packing_property(
                            gc, max_vertices=bounds.packing_max_vertices
                        ).holds,
                        c,
                        {"graft": serialize_clutter(gc)},
                    )
                if polyhedra.mfmc_bounded(c, bounds.graft_weight).certified:
                    check(
                        "graft-mfmc",
                        polyhedra.mfmc_bounded(gc, bounds.graft_weight).certified,
                        c,
                        {"graft": serialize_clutter(gc), "w": bounds.graft_weight},
                    )
    return summary


@dataclass(frozen=True, slots=True)
class ScanResult:
    """Conforti-Cornuejols scan over the packing-property instances.

    ``candidates`` lists instances that fail a bounded MFMC or NTF check
    despite having the packing property, after re-verification at raised
    bounds (max_weight + 2, max_power + 2) and the exact Hilbert-basis
    normality check.  A candidate whose MFMC witness is an exact integer
    covering/packing gap at a concrete weight vector is a definite MFMC
    failure, not a bound artifact.
    """

    reports: tuple[PropertyReport, ...]
    candidates: tuple[str, ...]
    escalations: tuple[PropertyReport, ...]
    max_weight: int
    max_power: int


def scan_conforti_cornuejols(
    spec: CorpusSpec, max_weight: int = 2, max_power: int = 2
) -> ScanResult:
    bounds = VerifyBounds(max_weight=max_weight, max_power=max_power)
    raised = VerifyBounds(max_weight=max_weight + 2, max_power=max_power + 2)
    reports = []
    candidates = []
    escalations = []
    for c in enumerate_clutters(spec):
        if not covering.has_packing_property(
            c, max_vertices=bounds.packing_max_vertices
        ).holds:
            continue
        report = check_properties(
            c, bounds, props=("packing", "mfmc", "normal", "ntf")
        )
        reports.append(report)
        if report.verdict("mfmc").value and report.verdict("ntf").value:
            continue
        escalation = check_properties(
            c, raised, props=("mfmc", "normal", "ntf")
        )
        escalations.append(escalation)
        if not (
            escalation.verdict("mfmc").value and escalation.verdict("ntf").value
        ):
            candidates.append(serialize_clutter(c))
    return ScanResult(
        reports=tuple(reports),
        candidates=tuple(candidates),
        escalations=tuple(escalations),
        max_weight=max_weight,
        max_power=max_power,
    )


def _verdict_payload(v: PropertyVerdict) -> dict:
    payload: dict = {"name": v.name, "value": v.value}
    if v.bound is not None:
        payload["bound"] = v.bound
    if v.witness is not None:
        payload["witness"] = v.witness
    return payload


def _report_payload(r: PropertyReport, with_timings: bool = True) -> dict:
    payload: dict = {
        "clutter": r.clutter,
        "n": r.vertex_count,
        "q": r.edge_count,
        "verdicts": [_verdict_payload(v) for v in r.verdicts],
    }
    if with_timings:
        payload["timings"] = {name: seconds for name, seconds in r.timings}
    return payload


def emit_report(reports, format: str = "json") -> bytes:
    """Serialize reports deterministically (json schema v1, csv, or text)."""
    reports = list(reports)
    if format == "json":
        payload = {
            "version": 1,
            "reports": [_report_payload(r) for r in reports],
        }
        return json.dumps(payload, separators=(",", ":")).encode()
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["clutter", "property", "value", "bound", "witness"])
        for r in reports:
            one_line = " | ".join(r.clutter.strip().splitlines())
            for v in r.verdicts:
                writer.writerow(
                    [
                        one_line,
                        v.name,
                        str(v.value).lower(),
                        "" if v.bound is None else v.bound,
                        ""
                        if v.witness is None
                        else json.dumps(v.witness, separators=(",", ":")),
                    ]
                )
        return buf.getvalue().encode()
    if format == "text":
        lines = []
        for r in reports:
            lines.append(" | ".join(r.clutter.strip().splitlines()))
            for v in r.verdicts:
                bound = f" (bound {v.bound})" if v.bound is not None else ""
                witness = (
                    f"  witness {json.dumps(v.witness, separators=(',', ':'))}"
                    if v.witness is not None
                    else ""
                )
                lines.append(f"  {v.name}: {v.value}{bound}{witness}")
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown report format: {format!r}")


_REPORT_KEYS = {"clutter", "n", "q", "verdicts", "timings"}
_VERDICT_KEYS = {"name", "value", "bound", "witness"}


def read_report(data: bytes) -> list[PropertyReport]:
    """Strict reader for the versioned JSON schema; unknown fields rejected."""
    try:
        payload = json.loads(data.decode())
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ValueError(f"not a report file: {exc}") from exc
    if not isinstance(payload, dict) or set(payload) != {"version", "reports"}:
        raise ValueError("report must have exactly the keys 'version' and 'reports'")
    if payload["version"] != 1:
        raise ValueError(f"unsupported report version: {payload['version']!r}")
    reports = []
    for item in payload["reports"]:
        unknown = set(item) - _REPORT_KEYS
        if unknown:
            raise ValueError(f"unknown report fields: {sorted(unknown)}")
        missing = {"clutter", "n", "q", "verdicts"} - set(item)
        if missing:
            raise ValueError(f"missing report fields: {sorted(missing)}")
        verdicts = []
        for v in item["verdicts"]:
            unknown = set(v) - _VERDICT_KEYS
            if unknown:
                raise ValueError(f"unknown verdict fields: {sorted(unknown)}")
            verdicts.append(
                PropertyVerdict(
                    name=v["name"],
                    value=v["value"],
                    bound=v.get("bound"),
                    witness=v.get("witness"),
                )
            )
        reports.append(
            PropertyReport(
                clutter=item["clutter"],
                vertex_count=item["n"],
                edge_count=item["q"],
                verdicts=tuple(verdicts),
                timings=tuple(item.get("timings", {}).items()),
            )
        )
    return reports


def report_hash(reports) -> str:
    """SHA-256 over the timing-free JSON serialization."""
    payload = {
        "version": 1,
        "reports": [_report_payload(r, with_timings=False) for r in reports],
    }
    blob = json.dumps(payload, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()
