"""The six-item analysis sheet students fill while exploring their discourse.

Items: (1) up to twenty keywords, (2) three topic summaries, (3) phase
segments tagged knowledge-sharing / knowledge-construction /
knowledge-creation that partition the transcript, (4) five pivotal units
with reasons, (5) a contribution note per agent, (6) an improvements note.

Sheets are mutable drafts.  Referential integrity (keywords inside the
session vocabulary, unit ids that exist, legal tags) is enforced at edit
time; completeness is reported by :func:`validate_sheet` as violation data,
never as exceptions, so partial drafts stay storable.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .corpus import Corpus, MatchPolicy, Vocabulary
from .errors import (
    EmptyCorpusError,
    EmptyVocabularyError,
    IntegrityError,
    ParameterError,
    SheetPreconditionError,
)
from .netcore import BipartiteGraph, MetricSeries
from . import metrics

SCHEMA_VERSION = 1
KEYWORD_LIMIT = 20
TOPIC_COUNT = 3
PIVOTAL_COUNT = 5

PHASE_TAGS = ("knowledge-sharing", "knowledge-construction", "knowledge-creation")


@dataclass(frozen=True)
class PhaseSegment:
    start_unit: int
    end_unit: int
    tag: str
    note: str = ""

    def __post_init__(self):
        if self.tag not in PHASE_TAGS:
            raise ParameterError(f"unknown phase tag {self.tag!r}; expected one of {PHASE_TAGS}")
        if self.start_unit > self.end_unit:
            raise IntegrityError(
                f"phase starts at unit {self.start_unit} after its end {self.end_unit}"
            )


@dataclass(frozen=True)
class PivotalUnit:
    unit_id: int
    reason: str


@dataclass(frozen=True)
class Violation:
    code: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]
    warnings: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_obj(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [{"code": v.code, "message": v.message} for v in self.violations],
            "warnings": [{"code": v.code, "message": v.message} for v in self.warnings],
        }


class AnalysisSheet:
    """Mutable draft bound to one corpus and vocabulary."""

    def __init__(self, corpus: Corpus, vocab: Vocabulary):
        if len(corpus) == 0:
            raise EmptyCorpusError("cannot open an analysis sheet on an empty corpus")
        if len(vocab) == 0:
            raise EmptyVocabularyError("cannot open an analysis sheet without a vocabulary")
        self.corpus = corpus
        self.vocab = vocab
        self.keywords: list[str] = []
        self.topics: list[str] = []
        self.phases: list[PhaseSegment] = []
        self.pivotal: list[PivotalUnit] = []
        self.contributions: dict[str, str] = {}
        self.improvements: str = ""

    # edit-time integrity: these raise instead of producing violations
    def add_keyword(self, word: str) -> None:
        self.vocab.index_of(word)  # raises if unknown
        if word not in self.keywords:
            self.keywords.append(word)

    def set_keywords(self, words: list[str]) -> None:
        for w in words:
            self.vocab.index_of(w)
        self.keywords = list(dict.fromkeys(words))

    def add_pivotal(self, unit_id: int, reason: str) -> None:
        self.corpus.position_of(unit_id)  # raises if unknown
        self.pivotal.append(PivotalUnit(unit_id=unit_id, reason=reason))

    def set_phases(self, segments: list[PhaseSegment]) -> None:
        for seg in segments:
            self.corpus.position_of(seg.start_unit)
            self.corpus.position_of(seg.end_unit)
        self.phases = list(segments)

    def validate(self) -> ValidationReport:
        return validate_sheet(self)

    def to_obj(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "keywords": list(self.keywords),
            "topics": list(self.topics),
            "phases": [
                {
                    "start_unit": s.start_unit,
                    "end_unit": s.end_unit,
                    "tag": s.tag,
                    "note": s.note,
                }
                for s in self.phases
            ],
            "pivotal": [{"unit_id": p.unit_id, "reason": p.reason} for p in self.pivotal],
            "contributions": dict(self.contributions),
            "improvements": self.improvements,
        }


def new_sheet(corpus: Corpus, vocab: Vocabulary) -> AnalysisSheet:
    """An empty draft bound to the session's corpus and vocabulary."""
    return AnalysisSheet(corpus, vocab)


def sheet_from_obj(corpus: Corpus, vocab: Vocabulary, obj: dict) -> AnalysisSheet:
    """Rebuild a draft from its JSON document form."""
    version = obj.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ParameterError(f"unsupported sheet schema_version {version!r}")
    sheet = AnalysisSheet(corpus, vocab)
    sheet.set_keywords([str(w) for w in obj.get("keywords", [])])
    sheet.topics = [str(t) for t in obj.get("topics", [])]
    sheet.set_phases(
        [
            PhaseSegment(
                start_unit=int(p["start_unit"]),
                end_unit=int(p["end_unit"]),
                tag=str(p["tag"]),
                note=str(p.get("note", "")),
            )
            for p in obj.get("phases", [])
        ]
    )
    for p in obj.get("pivotal", []):
        sheet.add_pivotal(int(p["unit_id"]), str(p.get("reason", "")))
    contributions = obj.get("contributions", {})
    if not isinstance(contributions, dict):
        raise ParameterError("contributions must be an object of agent -> text")
    sheet.contributions = {str(a): str(t) for a, t in contributions.items()}
    sheet.improvements = str(obj.get("improvements", ""))
    return sheet


def _check_phase_partition(sheet: AnalysisSheet) -> list[Violation]:
    """Overlap/gap/span findings for the phase list, most specific first."""
    corpus = sheet.corpus
    found: list[Violation] = []
    positions = [
        (corpus.position_of(s.start_unit), corpus.position_of(s.end_unit)) for s in sheet.phases
    ]
    ordered = sorted(range(len(positions)), key=lambda i: positions[i])
    for prev_i, next_i in zip(ordered, ordered[1:]):
        prev_end = positions[prev_i][1]
        next_start = positions[next_i][0]
        if next_start <= prev_end:
            found.append(
                Violation(
                    "phases-overlap",
                    f"overlapping phase segments: units {sheet.phases[prev_i].start_unit}"
                    f"-{sheet.phases[prev_i].end_unit} and {sheet.phases[next_i].start_unit}"
                    f"-{sheet.phases[next_i].end_unit}",
                )
            )
        elif next_start > prev_end + 1:
            found.append(
                Violation(
                    "phases-gap",
                    f"gap between phase segments before unit {sheet.phases[next_i].start_unit}",
                )
            )
    if not found:
        first = positions[ordered[0]][0]
        last = positions[ordered[-1]][1]
        if first != 0 or last != len(corpus) - 1:
            found.append(
                Violation(
                    "phases-span",
                    "phase segments must cover the whole transcript from first to last unit",
                )
            )
    return found


def validate_sheet(sheet: AnalysisSheet) -> ValidationReport:
    """Completeness check of all six items; violations are data, not errors."""
    violations: list[Violation] = []
    warnings: list[Violation] = []

    if not sheet.keywords:
        violations.append(Violation("keywords-empty", "no keywords selected"))
    elif len(sheet.keywords) > KEYWORD_LIMIT:
        violations.append(
            Violation(
                "keywords-over-limit",
                f"keyword limit {KEYWORD_LIMIT} exceeded ({len(sheet.keywords)} selected)",
            )
        )
    elif len(sheet.keywords) < min(KEYWORD_LIMIT, len(sheet.vocab)):
        warnings.append(
            Violation(
                "keywords-under-target",
                f"only {len(sheet.keywords)} keywords selected; the sheet asks for "
                f"{min(KEYWORD_LIMIT, len(sheet.vocab))}",
            )
        )

    if len(sheet.topics) != TOPIC_COUNT:
        violations.append(
            Violation(
                "topics-count",
                f"expected {TOPIC_COUNT} topic summaries, found {len(sheet.topics)}",
            )
        )
    elif any(not t.strip() for t in sheet.topics):
        violations.append(Violation("topics-empty", "topic summaries must be non-empty"))

    if not sheet.phases:
        violations.append(Violation("phases-missing", "no phase segments defined"))
    else:
        violations.extend(_check_phase_partition(sheet))

    expected_pivotal = min(PIVOTAL_COUNT, len(sheet.corpus))
    if len(sheet.pivotal) != expected_pivotal:
        violations.append(
            Violation(
                "pivotal-count",
                f"expected {expected_pivotal} pivotal units, found {len(sheet.pivotal)}",
            )
        )
    else:
        ids = [p.unit_id for p in sheet.pivotal]
        if len(set(ids)) != len(ids):
            violations.append(
                Violation("pivotal-duplicate", "pivotal units must be distinct")
            )
        if any(not p.reason.strip() for p in sheet.pivotal):
            violations.append(
                Violation("pivotal-reason-empty", "every pivotal unit needs a reason")
            )

    missing = [a for a in sheet.corpus.agent_order if not sheet.contributions.get(a, "").strip()]
    if missing:
        violations.append(
            Violation(
                "contributions-missing",
                f"missing contribution notes for: {', '.join(missing)}",
            )
        )

    if not sheet.improvements.strip():
        violations.append(
            Violation("improvements-empty", "describe what to improve next time")
        )

    return ValidationReport(violations=tuple(violations), warnings=tuple(warnings))


@dataclass(frozen=True)
class PhaseStats:
    tag: str
    start_unit: int
    end_unit: int
    units: int
    new_word_edges: int


def phase_summary(sheet: AnalysisSheet, bip: BipartiteGraph) -> list[PhaseStats]:
    """Ground each phase segment in the word network's growth.

    Requires the sheet's phases to form a valid partition; the unit counts
    and newly appearing word-network edges per segment let students check
    phase claims against how the discourse actually evolved.
    """
    if bip.n_units == 0:
        raise SheetPreconditionError("phase summary needs a non-empty corpus")
    if not sheet.phases:
        raise SheetPreconditionError("phase summary needs phase segments")
    problems = _check_phase_partition(sheet)
    if problems:
        raise SheetPreconditionError(
            "phase segments must form a partition: " + problems[0].message
        )
    series: MetricSeries = metrics.metric_timeseries(bip, "words", "total-degree")
    edge_counts = [v / 2.0 for v in series.values]  # E(k) at each step
    stats: list[PhaseStats] = []
    for seg in sorted(sheet.phases, key=lambda s: sheet.corpus.position_of(s.start_unit)):
        start_pos = sheet.corpus.position_of(seg.start_unit)
        end_pos = sheet.corpus.position_of(seg.end_unit)
        new_edges = int(edge_counts[end_pos + 1] - edge_counts[start_pos])
        stats.append(
            PhaseStats(
                tag=seg.tag,
                start_unit=seg.start_unit,
                end_unit=seg.end_unit,
                units=end_pos - start_pos + 1,
                new_word_edges=new_edges,
            )
        )
    return stats


def suggest_keywords(corpus: Corpus, policy: MatchPolicy, limit: int) -> list[str]:
    """Candidate tokens ranked by document frequency, ties lexicographic.

    Assists keyword selection only; the choice itself stays with the analyst.
    """
    if limit < 0:
        raise ParameterError(f"limit must be >= 0, got {limit}")
    df: Counter[str] = Counter()
    for unit in corpus.units:
        df.update(set(policy.tokens(unit.text)))
    ranked = sorted(df.items(), key=lambda kv: (-kv[1], kv[0]))
    return [w for w, _ in ranked[:limit]]
